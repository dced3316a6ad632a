#include "affine_hall/repfq.hpp"

#include "affine_hall/errors.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>

namespace ah {

FqRep::FqRep(QuiverPtr quiver, int q, DimVec dims, std::vector<Mat> mats)
    : quiver_(std::move(quiver)), q_(q), dims_(std::move(dims)), mats_(std::move(mats)) {
  if (!quiver_) throw domain_error("FqRep without a quiver");
  (void)Field::get(q_);
  const auto& hs = quiver_->arrows();
  if (static_cast<int>(dims_.size()) != quiver_->num_vertices()) throw domain_error("FqRep: dimension vector size");
  if (!dv_nonneg(dims_)) throw domain_error("FqRep: negative dimension");
  if (mats_.size() != hs.size()) throw domain_error("FqRep: one matrix per arrow required");
  for (std::size_t h = 0; h < hs.size(); ++h)
    if (mats_[h].rows != dims_[hs[h].t] || mats_[h].cols != dims_[hs[h].s])
      throw domain_error("FqRep: matrix shape does not match dimensions");
}

FqRep FqRep::zero(QuiverPtr quiver, int q, DimVec dims) {
  std::vector<Mat> ms;
  for (const auto& h : quiver->arrows()) ms.emplace_back(dims[h.t], dims[h.s]);
  return FqRep(std::move(quiver), q, std::move(dims), std::move(ms));
}

FqRep FqRep::simple(QuiverPtr quiver, int q, int i) {
  DimVec d = quiver->simple(i);
  return zero(std::move(quiver), q, std::move(d));
}

FqRep FqRep::random(QuiverPtr quiver, int q, DimVec dims, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> u(0, q - 1);
  std::vector<Mat> ms;
  for (const auto& h : quiver->arrows()) {
    Mat m(dims[h.t], dims[h.s]);
    for (auto& e : m.a) e = static_cast<Elt>(u(rng));
    ms.push_back(std::move(m));
  }
  return FqRep(std::move(quiver), q, std::move(dims), std::move(ms));
}

FqRep FqRep::restrict_to(const std::vector<Mat>& bases) const {
  const Field& F = field();
  DimVec d(dims_.size());
  std::vector<Mat> left(dims_.size());
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    d[i] = bases[i].cols;
    left[i] = left_inverse(F, bases[i]);
  }
  std::vector<Mat> ms;
  const auto& hs = quiver_->arrows();
  for (std::size_t h = 0; h < hs.size(); ++h)
    ms.push_back(mat_mul(F, left[hs[h].t], mat_mul(F, mats_[h], bases[hs[h].s])));
  return FqRep(quiver_, q_, std::move(d), std::move(ms));
}

FqRep FqRep::quotient_by(const std::vector<Mat>& bases) const {
  const Field& F = field();
  DimVec d(dims_.size());
  std::vector<Mat> comp(dims_.size()), proj(dims_.size());
  for (std::size_t i = 0; i < dims_.size(); ++i) {
    comp[i] = complement(F, bases[i]);
    d[i] = comp[i].cols;
    Mat full = inverse(F, hcat(bases[i], comp[i]));
    proj[i] = block(full, bases[i].cols, 0, comp[i].cols, dims_[i]);
  }
  std::vector<Mat> ms;
  const auto& hs = quiver_->arrows();
  for (std::size_t h = 0; h < hs.size(); ++h)
    ms.push_back(mat_mul(F, proj[hs[h].t], mat_mul(F, mats_[h], comp[hs[h].s])));
  return FqRep(quiver_, q_, std::move(d), std::move(ms));
}

bool FqRep::is_stable(const std::vector<Mat>& bases) const {
  const Field& F = field();
  const auto& hs = quiver_->arrows();
  for (std::size_t h = 0; h < hs.size(); ++h) {
    const Mat& bt = bases[hs[h].t];
    Mat img = mat_mul(F, mats_[h], bases[hs[h].s]);
    if (rank(F, hcat(bt, img)) != rank(F, bt)) return false;
  }
  return true;
}

FqRep FqRep::conjugate(const Morphism& g) const {
  const Field& F = field();
  std::vector<Mat> ginv;
  for (const auto& m : g) ginv.push_back(inverse(F, m));
  std::vector<Mat> ms;
  const auto& hs = quiver_->arrows();
  for (std::size_t h = 0; h < hs.size(); ++h)
    ms.push_back(mat_mul(F, g[hs[h].t], mat_mul(F, mats_[h], ginv[hs[h].s])));
  return FqRep(quiver_, q_, dims_, std::move(ms));
}

FqRep FqRep::with_quiver(QuiverPtr quiver) const {
  if (!(*quiver == *quiver_)) throw domain_error("with_quiver: quivers differ");
  FqRep r = *this;
  r.quiver_ = std::move(quiver);
  return r;
}

std::string FqRep::key() const {
  std::string k;
  k.reserve(8 + dims_.size() + 64);
  for (int d : dims_) k.push_back(static_cast<char>(d));
  k.push_back('|');
  for (const auto& m : mats_) k.append(m.a.begin(), m.a.end());
  return k;
}

std::string FqRep::str() const {
  std::ostringstream os;
  os << "dims=" << dv_str(dims_);
  for (std::size_t h = 0; h < mats_.size(); ++h) os << " x" << h << "=" << mats_[h].str();
  return os.str();
}

bool operator==(const FqRep& a, const FqRep& b) {
  return a.q_ == b.q_ && *a.quiver_ == *b.quiver_ && a.dims_ == b.dims_ && a.mats_ == b.mats_;
}

FqRep direct_sum(const FqRep& a, const FqRep& b) {
  if (a.q() != b.q() || !(a.quiver() == b.quiver())) throw domain_error("direct_sum: different field or quiver");
  std::vector<Mat> ms;
  for (std::size_t h = 0; h < a.mats().size(); ++h) ms.push_back(ah::direct_sum(a.mat(h), b.mat(h)));
  return FqRep(a.quiver_ptr(), a.q(), dv_add(a.dims(), b.dims()), std::move(ms));
}

FqRep direct_sum(const std::vector<FqRep>& parts, const QuiverPtr& quiver, int q) {
  FqRep r = FqRep::zero(quiver, q, quiver->zero());
  for (const auto& p : parts) r = direct_sum(r, p);
  return r;
}

FqRep power(const FqRep& a, int k) {
  FqRep r = FqRep::zero(a.quiver_ptr(), a.q(), a.quiver().zero());
  for (int i = 0; i < k; ++i) r = direct_sum(r, a);
  return r;
}

QuiverPtr intern_quiver(const Quiver& Q) {
  static std::mutex mu;
  static std::map<std::string, QuiverPtr> table;
  std::lock_guard<std::mutex> lock(mu);
  auto key = Q.to_json();
  auto it = table.find(key);
  if (it != table.end()) return it->second;
  auto p = std::make_shared<const Quiver>(Q);
  table.emplace(std::move(key), p);
  return p;
}

QuiverPtr reflected_quiver(const QuiverPtr& Q, int i) {
  static std::mutex mu;
  static std::map<std::pair<std::string, int>, QuiverPtr> table;
  auto key = std::make_pair(Q->to_json(), i);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = table.find(key);
    if (it != table.end()) return it->second;
  }
  QuiverPtr r = intern_quiver(Q->reflected_at(i));
  std::lock_guard<std::mutex> lock(mu);
  table.emplace(std::move(key), r);
  return r;
}

namespace {

void check_compatible(const FqRep& M, const FqRep& N) {
  if (M.q() != N.q()) throw domain_error("representations over different fields");
  if (!(M.quiver() == N.quiver())) throw domain_error("representations of different quivers");
}

// Matrix of b: (phi_i) -> (phi_t x_h - y_h phi_s), unknowns ordered vertex by vertex, row-major.
Mat hom_system(const FqRep& M, const FqRep& N, std::vector<int>& offset) {
  const Field& F = M.field();
  const Quiver& Q = M.quiver();
  const int n = Q.num_vertices();
  offset.assign(n + 1, 0);
  for (int i = 0; i < n; ++i) offset[i + 1] = offset[i] + N.dim(i) * M.dim(i);
  int rows = 0;
  for (const auto& h : Q.arrows()) rows += N.dim(h.t) * M.dim(h.s);
  Mat B(rows, offset[n]);
  int r0 = 0;
  for (std::size_t hi = 0; hi < Q.arrows().size(); ++hi) {
    const auto& h = Q.arrows()[hi];
    const Mat& x = M.mat(static_cast<int>(hi));
    const Mat& y = N.mat(static_cast<int>(hi));
    const int nt = N.dim(h.t), ms = M.dim(h.s), mt = M.dim(h.t), ns = N.dim(h.s);
    for (int r = 0; r < nt; ++r)
      for (int c = 0; c < ms; ++c) {
        const int row = r0 + r * ms + c;
        for (int k = 0; k < mt; ++k)
          if (x(k, c)) B(row, offset[h.t] + r * mt + k) = F.add(B(row, offset[h.t] + r * mt + k), x(k, c));
        for (int k = 0; k < ns; ++k)
          if (y(r, k))
            B(row, offset[h.s] + k * ms + c) = F.sub(B(row, offset[h.s] + k * ms + c), y(r, k));
      }
    r0 += nt * ms;
  }
  return B;
}

}  // namespace

std::vector<Morphism> hom_basis(const FqRep& M, const FqRep& N) {
  check_compatible(M, N);
  std::vector<int> off;
  Mat B = hom_system(M, N, off);
  Mat K = nullspace(M.field(), B);
  const int n = M.quiver().num_vertices();
  std::vector<Morphism> out;
  for (int c = 0; c < K.cols; ++c) {
    Morphism f;
    for (int i = 0; i < n; ++i) {
      Mat m(N.dim(i), M.dim(i));
      for (int k = 0; k < off[i + 1] - off[i]; ++k) m.a[k] = K(off[i] + k, c);
      f.push_back(std::move(m));
    }
    out.push_back(std::move(f));
  }
  return out;
}

int hom_dim(const FqRep& M, const FqRep& N) {
  check_compatible(M, N);
  std::vector<int> off;
  Mat B = hom_system(M, N, off);
  return B.cols - rank(M.field(), B);
}

int ext_dim(const FqRep& M, const FqRep& N) {
  check_compatible(M, N);
  std::vector<int> off;
  Mat B = hom_system(M, N, off);
  return B.rows - rank(M.field(), B);
}

FqRep nonsplit_extension(const FqRep& W, const FqRep& U) {
  check_compatible(W, U);
  const Field& F = W.field();
  const Quiver& Q = W.quiver();
  std::vector<int> off;
  // Cocycles live in the target of b for Hom(W, U).
  Mat B = hom_system(W, U, off);
  Mat img = column_space(F, B);
  Mat ext = complement(F, img);
  if (ext.cols == 0) throw domain_error("nonsplit_extension: Ext vanishes");
  std::vector<Mat> ms;
  int r0 = 0;
  for (std::size_t hi = 0; hi < Q.arrows().size(); ++hi) {
    const auto& h = Q.arrows()[hi];
    const int ut = U.dim(h.t), ws = W.dim(h.s);
    Mat c(ut, ws);
    for (int r = 0; r < ut; ++r)
      for (int k = 0; k < ws; ++k) c(r, k) = ext(r0 + r * ws + k, 0);
    r0 += ut * ws;
    const Mat& u = U.mat(static_cast<int>(hi));
    const Mat& w = W.mat(static_cast<int>(hi));
    Mat top = hcat(u, c);
    Mat bottom = hcat(Mat(w.rows, u.cols), w);
    ms.push_back(vcat(top, bottom));
  }
  return FqRep(W.quiver_ptr(), W.q(), dv_add(U.dims(), W.dims()), std::move(ms));
}

Morphism morphism_combination(const Field& F, const std::vector<Morphism>& basis, const std::vector<Elt>& c) {
  Morphism r;
  for (const auto& m : basis[0]) r.emplace_back(m.rows, m.cols);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (!c[k]) continue;
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t e = 0; e < r[i].a.size(); ++e)
        if (basis[k][i].a[e]) r[i].a[e] = F.add(r[i].a[e], F.mul(c[k], basis[k][i].a[e]));
  }
  return r;
}

bool morphism_invertible(const Field& F, const Morphism& f) {
  for (const auto& m : f)
    if (!is_invertible(F, m)) return false;
  return true;
}

bool morphism_nilpotent(const Field& F, const Morphism& f) {
  for (const auto& m : f)
    if (!mat_pow(F, m, m.rows).is_zero()) return false;
  return true;
}

namespace {

std::atomic<long long> g_probabilistic{0};

// Kernel and image of phi^N at each vertex, when both parts are nonzero.
std::optional<std::pair<std::vector<Mat>, std::vector<Mat>>> fitting_split(const FqRep& X, const Morphism& phi) {
  const Field& F = X.field();
  std::vector<Mat> ker, im;
  int kd = 0;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    Mat p = mat_pow(F, phi[i], phi[i].rows);
    ker.push_back(nullspace(F, p));
    im.push_back(column_space(F, p));
    kd += ker.back().cols;
  }
  if (kd == 0 || kd == X.total_dim()) return std::nullopt;
  return std::make_pair(std::move(ker), std::move(im));
}

Morphism poly_of(const Field& F, const FqPoly& p, const Morphism& a) {
  Morphism r;
  for (const auto& m : a) {
    Mat acc(m.rows, m.cols);
    for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k) {
      acc = mat_mul(F, acc, m);
      for (int d = 0; d < m.rows; ++d) acc(d, d) = F.add(acc(d, d), p[k]);
    }
    r.push_back(std::move(acc));
  }
  return r;
}

const std::vector<FqPoly>& split_polys(const Field& F) {
  static std::mutex mu;
  static std::map<int, std::vector<FqPoly>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(F.q());
  if (it != cache.end()) return it->second;
  std::vector<FqPoly> ps;
  for (int d = 1; d <= 3; ++d) {
    long long size = 1;
    for (int k = 0; k < d; ++k) size *= F.q();
    if (d > 1 && size > 512) break;
    for (auto& f : monic_irreducibles(F, d)) ps.push_back(std::move(f));
  }
  return cache.emplace(F.q(), std::move(ps)).first->second;
}

std::optional<std::pair<std::vector<Mat>, std::vector<Mat>>> split_once(const FqRep& X) {
  const Field& F = X.field();
  std::vector<Morphism> E = hom_basis(X, X);
  if (E.size() <= 1) return std::nullopt;
  const int e = static_cast<int>(E.size());
  std::mt19937_64 rng(0x5eed0000ull + static_cast<unsigned>(e) * 7919u + static_cast<unsigned>(X.total_dim()));
  std::uniform_int_distribution<int> u(0, F.q() - 1);
  const auto& polys = split_polys(F);

  auto attempt = [&](const Morphism& a) -> std::optional<std::pair<std::vector<Mat>, std::vector<Mat>>> {
    for (const auto& p : polys)
      if (auto s = fitting_split(X, poly_of(F, p, a))) return s;
    return std::nullopt;
  };

  for (const auto& a : E)
    if (auto s = attempt(a)) return s;
  for (int t = 0; t < 12; ++t) {
    std::vector<Elt> c(e);
    for (auto& x : c) x = static_cast<Elt>(u(rng));
    if (auto s = attempt(morphism_combination(F, E, c))) return s;
  }

  // Certify locality: End is local iff every element is nilpotent or invertible.
  long long size = 1;
  for (int k = 0; k < e && size <= 131072; ++k) size *= F.q();
  if (size <= 131072) {
    std::vector<Elt> c(e, 0);
    for (long long n = 0; n < size; ++n) {
      long long r = n;
      for (int k = 0; k < e; ++k) {
        c[k] = static_cast<Elt>(r % F.q());
        r /= F.q();
      }
      Morphism a = morphism_combination(F, E, c);
      if (morphism_nilpotent(F, a) || morphism_invertible(F, a)) continue;
      if (auto s = fitting_split(X, a)) return s;
    }
    return std::nullopt;
  }
  for (int t = 0; t < 64; ++t) {
    std::vector<Elt> c(e);
    for (auto& x : c) x = static_cast<Elt>(u(rng));
    if (auto s = attempt(morphism_combination(F, E, c))) return s;
  }
  ++g_probabilistic;
  return std::nullopt;
}

}  // namespace

long long probabilistic_local_accepts() { return g_probabilistic.load(); }

bool isomorphic_indecomposables(const FqRep& A, const FqRep& B) {
  check_compatible(A, B);
  if (A.dims() != B.dims()) return false;
  if (A == B) return true;
  // Non-isomorphisms form a proper subspace of Hom(A, B) when A and B are isomorphic
  // indecomposables, so some basis element is then invertible.
  const Field& F = A.field();
  for (const auto& f : hom_basis(A, B))
    if (morphism_invertible(F, f)) return true;
  return false;
}

std::vector<Summand> decompose(const FqRep& M) {
  std::vector<FqRep> stack{M};
  std::vector<FqRep> pieces;
  while (!stack.empty()) {
    FqRep X = std::move(stack.back());
    stack.pop_back();
    if (X.is_zero()) continue;
    auto s = split_once(X);
    if (!s) {
      pieces.push_back(std::move(X));
      continue;
    }
    stack.push_back(X.restrict_to(s->first));
    stack.push_back(X.restrict_to(s->second));
  }
  std::vector<Summand> out;
  for (auto& p : pieces) {
    bool found = false;
    for (auto& o : out)
      if (isomorphic_indecomposables(o.rep, p)) {
        ++o.mult;
        found = true;
        break;
      }
    if (!found) out.push_back({std::move(p), 1});
  }
  return out;
}

bool is_indecomposable(const FqRep& M) { return !M.is_zero() && !split_once(M); }

bool is_isomorphic(const FqRep& M, const FqRep& N) {
  check_compatible(M, N);
  if (M.dims() != N.dims()) return false;
  if (M == N) return true;
  auto a = decompose(M);
  auto b = decompose(N);
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a) {
    bool ok = false;
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (used[k] || b[k].mult != x.mult) continue;
      if (isomorphic_indecomposables(x.rep, b[k].rep)) {
        used[k] = ok = true;
        break;
      }
    }
    if (!ok) return false;
  }
  return true;
}

FqRep bgp_reflect(int i, int sign, const FqRep& M) {
  const Quiver& Q = M.quiver();
  const Field& F = M.field();
  const auto& hs = Q.arrows();
  QuiverPtr R = reflected_quiver(M.quiver_ptr(), i);
  std::vector<int> touching;
  for (std::size_t h = 0; h < hs.size(); ++h)
    if (hs[h].s == i || hs[h].t == i) touching.push_back(static_cast<int>(h));
  DimVec d = M.dims();
  std::vector<Mat> ms = M.mats();
  if (sign > 0) {
    if (!Q.is_sink(i)) throw domain_error("bgp_reflect: vertex is not a sink");
    // W_i = ker [x_h1 ... x_hk]; new arrows are the block projections of the kernel.
    Mat X(M.dim(i), 0);
    for (int h : touching) X = hcat(X, M.mat(h));
    Mat K = nullspace(F, X);
    d[i] = K.cols;
    int r0 = 0;
    for (int h : touching) {
      const int sd = M.dim(hs[h].s);
      ms[h] = block(K, r0, 0, sd, K.cols);
      r0 += sd;
    }
  } else {
    if (!Q.is_source(i)) throw domain_error("bgp_reflect: vertex is not a source");
    // W_i = coker [x_h1; ...; x_hk]; new arrows are the quotient map on each block.
    Mat Y(0, M.dim(i));
    for (int h : touching) Y = vcat(Y, M.mat(h));
    Mat img = column_space(F, Y);
    Mat comp = complement(F, img);
    Mat full = inverse(F, hcat(img, comp));
    Mat pi = block(full, img.cols, 0, comp.cols, Y.rows);
    d[i] = comp.cols;
    int c0 = 0;
    for (int h : touching) {
      const int td = M.dim(hs[h].t);
      ms[h] = block(pi, 0, c0, comp.cols, td);
      c0 += td;
    }
  }
  return FqRep(R, M.q(), std::move(d), std::move(ms));
}

FqRep simple_part(const FqRep& M, int i) {
  const Quiver& Q = M.quiver();
  const Field& F = M.field();
  int r = 0;
  if (Q.is_sink(i)) {
    Mat X(M.dim(i), 0);
    for (std::size_t h = 0; h < Q.arrows().size(); ++h)
      if (Q.arrows()[h].t == i) X = hcat(X, M.mat(static_cast<int>(h)));
    r = M.dim(i) - rank(F, X);
  } else if (Q.is_source(i)) {
    Mat Y(0, M.dim(i));
    for (std::size_t h = 0; h < Q.arrows().size(); ++h)
      if (Q.arrows()[h].s == i) Y = vcat(Y, M.mat(static_cast<int>(h)));
    r = M.dim(i) - rank(F, Y);
  } else {
    throw domain_error("simple_part: vertex is neither a sink nor a source");
  }
  DimVec d = Q.zero();
  d[i] = r;
  return FqRep::zero(M.quiver_ptr(), M.q(), d);
}

namespace {

FqRep plain_coxeter(const FqRep& M, int sign) {
  const auto& order = M.quiver().admissible_order();
  FqRep X = M;
  if (sign > 0) {
    for (int i : order) X = bgp_reflect(i, +1, X);
  } else {
    for (auto it = order.rbegin(); it != order.rend(); ++it) X = bgp_reflect(*it, -1, X);
  }
  return X.with_quiver(M.quiver_ptr());
}

FqRep negate_arrow(const FqRep& M, int h) {
  std::vector<Mat> ms = M.mats();
  ms[h] = mat_scale(M.field(), M.field().neg(1), ms[h]);
  return FqRep(M.quiver_ptr(), M.q(), M.dims(), std::move(ms));
}

// On a cycle the reflection composite can differ from the AR translate by the automorphism
// negating one arrow. Detect this once per quiver on the all-ones module over GF(3), where
// the cycle holonomy 1 and -1 give non-isomorphic modules.
int twist_arrow(const QuiverPtr& Q) {
  static std::mutex mu;
  static std::map<std::string, int> cache;
  const std::string key = Q->to_json();
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  int result = -1;
  if (Q->affine_type()[0] == 'A') {
    std::vector<Mat> ones;
    for (std::size_t h = 0; h < Q->arrows().size(); ++h) ones.push_back(Mat::identity(1));
    FqRep R(Q, 3, DimVec(Q->num_vertices(), 1), ones);
    FqRep C = plain_coxeter(R, +1);
    if (!isomorphic_indecomposables(C, R)) {
      if (!isomorphic_indecomposables(C, negate_arrow(R, 0))) throw std::logic_error("unexpected Coxeter twist");
      result = 0;
    }
  }
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, result);
  return result;
}

}  // namespace

FqRep coxeter(const FqRep& M, int sign) {
  const int h = twist_arrow(M.quiver_ptr());
  if (sign > 0) {
    FqRep X = plain_coxeter(M, +1);
    return h < 0 ? X : negate_arrow(X, h);
  }
  return plain_coxeter(h < 0 ? M : negate_arrow(M, h), -1);
}

}  // namespace ah
