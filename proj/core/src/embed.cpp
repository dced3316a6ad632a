#include "affine_hall/embed.hpp"

#include "affine_hall/errors.hpp"

#include <map>
#include <mutex>

namespace ah {

Mat companion(const Field& F, const FqPoly& f) {
  const int d = static_cast<int>(f.size()) - 1;
  Mat c(d, d);
  for (int k = 1; k < d; ++k) c(k, k - 1) = 1;
  for (int k = 0; k < d; ++k) c(k, d - 1) = F.neg(f[k]);
  return c;
}

FqRep kronecker_regular(const QuiverPtr& K, int q, const FqPoly* f, int level) {
  if (!K->is_kronecker()) throw domain_error("kronecker_regular needs the Kronecker quiver");
  const Field& F = Field::get(q);
  FqPoly g = f ? *f : FqPoly{0, 1};
  FqPoly p{1};
  for (int k = 0; k <= level; ++k) p = poly_mul(F, p, g);
  Mat c = companion(F, p);
  Mat id = Mat::identity(c.rows);
  std::vector<Mat> ms = f ? std::vector<Mat>{id, c} : std::vector<Mat>{c, id};
  return FqRep(K, q, {c.rows, c.rows}, std::move(ms));
}

namespace {

int extending_sink(const Quiver& Q) {
  for (int e : Q.extending_vertices())
    if (Q.is_sink(e)) return e;
  return -1;
}

int extending_source(const Quiver& Q) {
  for (int e : Q.extending_vertices())
    if (Q.is_source(e)) return e;
  return -1;
}

Mat kron_identity(const Mat& x, int n) {
  Mat r(x.rows * n, x.cols * n);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j)
      if (x(i, j))
        for (int k = 0; k < n; ++k) r(i * n + k, j * n + k) = x(i, j);
  return r;
}

}  // namespace

int default_embed_case(const Quiver& Q) {
  if (Q.is_kronecker()) return 1;
  if (Q.affine_type()[0] == 'A') return 2;
  return extending_sink(Q) >= 0 ? 3 : 4;
}

FqRep embed_rigid_module(const QuiverPtr& target, int q, int e) {
  static std::mutex mu;
  static std::map<std::tuple<std::string, int, int>, FqRep> cache;
  auto key = std::make_tuple(target->to_json(), q, e);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second.with_quiver(target);
  }
  DimVec d = dv_sub(target->delta(), target->simple(e));
  std::mt19937_64 rng(0xe5bedull + static_cast<unsigned>(e));
  for (int t = 0; t < 20000; ++t) {
    FqRep V = FqRep::random(target, q, d, rng);
    if (ext_dim(V, V) != 0 || !is_indecomposable(V)) continue;
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, V);
    return V;
  }
  throw resource_error("no rigid indecomposable of dimension delta - e found by random search");
}

FqRep kronecker_embed(int kase, const QuiverPtr& target, const FqRep& rep) {
  if (!rep.quiver().is_kronecker()) throw domain_error("kronecker_embed: input must be a Kronecker representation");
  const Quiver& Q = *target;
  const int q = rep.q();
  const int ni = rep.dim(0), nj = rep.dim(1);
  const Mat& xa = rep.mat(0);
  const Mat& xb = rep.mat(1);
  const auto& hs = Q.arrows();
  const int n = Q.num_vertices();

  if (kase == 1) {
    if (!Q.is_kronecker()) throw domain_error("case 1 needs the Kronecker quiver");
    return rep.with_quiver(target);
  }
  if (kase == 2) {
    if (Q.affine_type()[0] != 'A' || Q.is_kronecker() || !Q.acyclic())
      throw domain_error("case 2 needs an acyclic quiver of type A_n^(1), n >= 2");
    const int i0 = Q.admissible_order()[0];
    std::vector<int> into;
    for (std::size_t h = 0; h < hs.size(); ++h)
      if (hs[h].t == i0) into.push_back(static_cast<int>(h));
    if (into.size() != 2) throw domain_error("case 2: sink i_0 must have two incoming arrows");
    DimVec d(n, nj);
    d[i0] = ni;
    std::vector<Mat> ms;
    for (std::size_t h = 0; h < hs.size(); ++h) {
      if (static_cast<int>(h) == into[0]) {
        ms.push_back(xa);
      } else if (static_cast<int>(h) == into[1]) {
        ms.push_back(xb);
      } else {
        ms.push_back(Mat::identity(nj));
      }
    }
    return FqRep(target, q, std::move(d), std::move(ms));
  }
  if (kase == 3) {
    const int e = extending_sink(Q);
    if (Q.affine_type()[0] == 'A' || e < 0) throw domain_error("case 3 needs type D/E with an extending sink");
    int h0 = -1;
    for (std::size_t h = 0; h < hs.size(); ++h)
      if (hs[h].t == e) h0 = static_cast<int>(h);
    FqRep V = embed_rigid_module(target, q, e);
    if (V.dim(hs[h0].s) != 2) throw domain_error("case 3: unexpected rigid module");
    DimVec d(n);
    for (int v = 0; v < n; ++v) d[v] = v == e ? ni : nj * V.dim(v);
    std::vector<Mat> ms;
    for (std::size_t h = 0; h < hs.size(); ++h)
      ms.push_back(static_cast<int>(h) == h0 ? hcat(xa, xb) : kron_identity(V.mat(static_cast<int>(h)), nj));
    return FqRep(target, q, std::move(d), std::move(ms));
  }
  if (kase == 4) {
    const int e = extending_source(Q);
    if (Q.affine_type()[0] == 'A' || e < 0 || extending_sink(Q) >= 0)
      throw domain_error("case 4 needs type D/E with all extending vertices sources");
    int hn = -1;
    for (std::size_t h = 0; h < hs.size(); ++h)
      if (hs[h].s == e) hn = static_cast<int>(h);
    FqRep V = embed_rigid_module(target, q, e);
    if (V.dim(hs[hn].t) != 2) throw domain_error("case 4: unexpected rigid module");
    DimVec d(n);
    for (int v = 0; v < n; ++v) d[v] = v == e ? nj : ni * V.dim(v);
    std::vector<Mat> ms;
    for (std::size_t h = 0; h < hs.size(); ++h)
      ms.push_back(static_cast<int>(h) == hn ? vcat(xa, xb) : kron_identity(V.mat(static_cast<int>(h)), ni));
    return FqRep(target, q, std::move(d), std::move(ms));
  }
  throw domain_error("kronecker_embed: case must be 1..4");
}

}  // namespace ah
