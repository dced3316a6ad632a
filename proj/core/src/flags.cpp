#include "affine_hall/flags.hpp"

#include "affine_hall/errors.hpp"

#include <map>
#include <sstream>

namespace ah {

DimVec Word::weight(int num_vertices) const {
  DimVec w(num_vertices, 0);
  for (const auto& e : entries) {
    if (e.vertex < 0 || e.vertex >= num_vertices) throw domain_error("word vertex out of range");
    w[e.vertex] += e.mult;
  }
  return w;
}

Word operator+(const Word& a, const Word& b) {
  Word r = a;
  r.entries.insert(r.entries.end(), b.entries.begin(), b.entries.end());
  return r;
}

std::string word_str(const Quiver& Q, const Word& s) {
  std::string out;
  for (std::size_t k = 0; k < s.entries.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(s.entries[k].mult) + "*" + Q.vertices()[s.entries[k].vertex];
  }
  return out;
}

Word parse_word(const Quiver& Q, const std::string& text) {
  Word s;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto star = item.find('*');
    if (star == std::string::npos) throw parse_error("word entry '" + item + "' must look like 2*i");
    int m = 0;
    try {
      m = std::stoi(item.substr(0, star));
    } catch (const std::exception&) {
      throw parse_error("bad multiplicity in word entry '" + item + "'");
    }
    if (m < 1) throw parse_error("multiplicity must be positive in '" + item + "'");
    s.entries.push_back({m, Q.index_of(item.substr(star + 1))});
  }
  return s;
}

FlagDims flag_dims(const Quiver& Q, const Word& s) {
  FlagDims d;
  const auto& e = s.entries;
  for (std::size_t m = 0; m < e.size(); ++m)
    for (std::size_t m2 = 0; m2 < m; ++m2)
      if (e[m].vertex == e[m2].vertex) d.flag += e[m].mult * e[m2].mult;
  for (const auto& h : Q.arrows())
    for (std::size_t m = 0; m < e.size(); ++m)
      for (std::size_t m2 = m; m2 < e.size(); ++m2)
        if (e[m].vertex == h.s && e[m2].vertex == h.t) d.fiber += e[m].mult * e[m2].mult;
  d.stable = d.flag + d.fiber;
  return d;
}

BigInt flag_count(const Quiver& Q, const Word& s, int q) {
  DimVec rest = s.weight(Q.num_vertices());
  BigInt r = 1;
  for (const auto& e : s.entries) {
    r *= gauss_binom(rest[e.vertex], e.mult, q);
    rest[e.vertex] -= e.mult;
  }
  return r;
}

namespace {

// Column basis of the sum of images of x_h over arrows into v, with the source spaces given.
Mat image_into(const FqRep& M, int v, const std::vector<Mat>& src) {
  const Field& F = M.field();
  const auto& hs = M.quiver().arrows();
  Mat acc(M.dim(v), 0);
  for (std::size_t h = 0; h < hs.size(); ++h) {
    if (hs[h].t != v) continue;
    const Mat& b = src[hs[h].s];
    if (b.cols == 0) continue;
    acc = hcat(acc, mat_mul(F, M.mat(static_cast<int>(h)), b));
  }
  if (acc.cols == 0) return acc;
  return column_space(F, acc);
}

// Subspaces of dimension k of GF(q)^n containing the span of W (full column rank).
template <class Fn>
void for_each_containing(const Field& F, int n, int k, const Mat& W, Fn&& f) {
  const int r = W.cols;
  if (k < r || k > n) return;
  if (r == n || k == r) {
    f(W);
    return;
  }
  Mat C = r == 0 ? Mat::identity(n) : complement(F, W);
  for_each_subspace(F, n - r, k - r, [&](const Mat& U, int) {
    Mat lift = mat_mul(F, C, U);
    f(r == 0 ? lift : hcat(W, lift));
  });
}

std::vector<int> sources_first(const Quiver& Q) {
  const int n = Q.num_vertices();
  std::vector<int> indeg(n, 0), out;
  for (const auto& h : Q.arrows()) ++indeg[h.t];
  std::vector<bool> used(n, false);
  while (static_cast<int>(out.size()) < n) {
    int pick = -1;
    for (int v = 0; v < n && pick < 0; ++v)
      if (!used[v] && indeg[v] == 0) pick = v;
    if (pick < 0) throw unsupported_error("stable subspace enumeration needs an acyclic quiver");
    used[pick] = true;
    out.push_back(pick);
    for (const auto& h : Q.arrows())
      if (h.s == pick) --indeg[h.t];
  }
  return out;
}

long long stable_rec(const Word& s, std::size_t pos, const FqRep& x, std::map<std::pair<std::string, std::size_t>, long long>& memo) {
  if (pos == s.entries.size()) return x.is_zero() ? 1 : 0;
  auto key = std::make_pair(x.key(), pos);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  const Field& F = x.field();
  const int n = x.quiver().num_vertices();
  const int i = s.entries[pos].vertex;
  const int k = x.dim(i) - s.entries[pos].mult;
  long long total = 0;
  if (k >= 0) {
    std::vector<Mat> bases(n);
    for (int v = 0; v < n; ++v) bases[v] = Mat::identity(x.dim(v));
    Mat W = image_into(x, i, bases);
    for_each_containing(F, x.dim(i), k, W, [&](const Mat& B) {
      bases[i] = B;
      total += stable_rec(s, pos + 1, x.restrict_to(bases), memo);
    });
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

void for_each_stable_subspace(const FqRep& M, const DimVec& d, const std::function<void(const std::vector<Mat>&)>& f) {
  const Field& F = M.field();
  const int n = M.quiver().num_vertices();
  if (static_cast<int>(d.size()) != n) throw domain_error("stable subspace: dimension vector size");
  const std::vector<int> order = sources_first(M.quiver());
  std::vector<Mat> bases(n);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == order.size()) {
      f(bases);
      return;
    }
    const int v = order[k];
    Mat W = image_into(M, v, bases);
    for_each_containing(F, M.dim(v), d[v], W, [&](const Mat& B) {
      bases[v] = B;
      rec(k + 1);
    });
  };
  rec(0);
}

long long stable_flag_count(const Word& s, const FqRep& x) {
  if (s.weight(x.quiver().num_vertices()) != x.dims()) throw domain_error("stable_flag_count: weight of the word differs from |x|");
  std::map<std::pair<std::string, std::size_t>, long long> memo;
  return stable_rec(s, 0, x, memo);
}

std::vector<long long> raw_counts(const Word& s, const Catalog& cat) {
  std::vector<long long> out;
  for (const auto& o : cat.orbits(s.weight(cat.quiver().num_vertices()))) out.push_back(stable_flag_count(s, o.rep));
  return out;
}

std::vector<ScalarSqrtQ> count_function(const Word& s, const Catalog& cat) {
  const int shift = flag_dims(cat.quiver(), s).stable;
  const ScalarSqrtQ norm = ScalarSqrtQ::v_power(cat.q(), -shift);
  std::vector<ScalarSqrtQ> out;
  for (long long c : raw_counts(s, cat)) out.push_back(norm * ScalarSqrtQ(cat.q(), Rational(c)));
  return out;
}

BigInt stable_flag_total(const Word& s, const Catalog& cat) {
  const auto& os = cat.orbits(s.weight(cat.quiver().num_vertices()));
  const auto counts = raw_counts(s, cat);
  BigInt t = 0;
  for (std::size_t k = 0; k < os.size(); ++k) t += os[k].size * counts[k];
  return t;
}

namespace {

// Dimension of {x in E_V : x_h(V^m_s) in V^m_t for all m}, flags given per step and vertex.
int stabilizer_dim(const Quiver& Q, const DimVec& nu, const std::vector<std::vector<Mat>>& flag) {
  const Field& F = Field::get(2);
  const auto& hs = Q.arrows();
  std::vector<int> off(hs.size() + 1, 0);
  for (std::size_t h = 0; h < hs.size(); ++h) off[h + 1] = off[h] + nu[hs[h].t] * nu[hs[h].s];
  std::vector<std::vector<Elt>> rows;
  for (const auto& step : flag)
    for (std::size_t h = 0; h < hs.size(); ++h) {
      const Mat& Bs = step[hs[h].s];
      if (Bs.cols == 0) continue;
      Mat A = annihilator(F, step[hs[h].t]);
      // Entries of A x B, linear in the entries of x.
      for (int r = 0; r < A.rows; ++r)
        for (int c = 0; c < Bs.cols; ++c) {
          std::vector<Elt> row(off.back(), 0);
          for (int a = 0; a < nu[hs[h].t]; ++a)
            for (int b = 0; b < nu[hs[h].s]; ++b)
              row[off[h] + a * nu[hs[h].s] + b] = F.mul(A(r, a), Bs(b, c));
          rows.push_back(std::move(row));
        }
    }
  if (rows.empty()) return off.back();
  Mat sys(static_cast<int>(rows.size()), off.back());
  for (int r = 0; r < sys.rows; ++r)
    for (int c = 0; c < sys.cols; ++c) sys(r, c) = rows[r][c];
  return off.back() - rank(F, sys);
}

}  // namespace

FlagPolys flag_cell_polynomials(const Quiver& Q, const Word& s) {
  const int n = Q.num_vertices();
  const DimVec nu = s.weight(n);
  FlagPolys out;
  std::vector<std::vector<Mat>> flag;  // V^1, V^2, ... per vertex, ambient coordinates
  std::vector<Mat> cur(n);
  for (int v = 0; v < n; ++v) cur[v] = Mat::identity(nu[v]);
  std::function<void(std::size_t, int)> rec = [&](std::size_t m, int cells) {
    if (m == s.entries.size()) {
      RatPoly cell = RatPoly::x_power(cells);
      out.flag += cell;
      out.stable += cell * RatPoly::x_power(stabilizer_dim(Q, nu, flag));
      return;
    }
    const int v = s.entries[m].vertex;
    const int d = cur[v].cols;
    const int k = d - s.entries[m].mult;
    // Coordinate subspaces of the current space; free entries of the echelon cell counted.
    std::vector<int> piv(k);
    for (int c = 0; c < k; ++c) piv[c] = c;
    while (true) {
      std::vector<bool> is_piv(d, false);
      for (int p : piv) is_piv[p] = true;
      int free = 0;
      for (int c = 0; c < k; ++c)
        for (int r = piv[c] + 1; r < d; ++r)
          if (!is_piv[r]) ++free;
      Mat sel(d, k);
      for (int c = 0; c < k; ++c) sel(piv[c], c) = 1;
      const Mat saved = cur[v];
      cur[v] = mat_mul(Field::get(2), saved, sel);
      flag.push_back(cur);
      rec(m + 1, cells + free);
      flag.pop_back();
      cur[v] = saved;
      int c = k - 1;
      while (c >= 0 && piv[c] == d - k + c) --c;
      if (c < 0) break;
      ++piv[c];
      for (int e = c + 1; e < k; ++e) piv[e] = piv[e - 1] + 1;
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace ah
