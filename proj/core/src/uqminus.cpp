#include "affine_hall/uqminus.hpp"

#include "affine_hall/errors.hpp"

#include <algorithm>
#include <functional>

namespace ah {

CartanMatrix cartan_of(const Quiver& Q) {
  const int n = Q.num_vertices();
  CartanMatrix a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Q.euler_form(Q.simple(i), Q.simple(j)) + Q.euler_form(Q.simple(j), Q.simple(i));
  return a;
}

UWord to_uword(const Word& w) {
  UWord u;
  for (const auto& e : w.entries) u.emplace_back(e.vertex, e.mult);
  return u;
}

namespace {

// ±v^k
bool is_unit(const LaurentInt& x) {
  return x.terms().size() == 1 && (x.terms().begin()->second == 1 || x.terms().begin()->second == -1);
}

LaurentInt unit_inverse(const LaurentInt& x) {
  const auto& [e, c] = *x.terms().begin();
  return LaurentInt::monomial(c, -e);
}

void reduce(std::vector<LaurentInt>& num, LaurentInt& den) {
  if (den.is_zero()) throw std::logic_error("zero denominator");
  if (is_unit(den)) {
    const LaurentInt inv = unit_inverse(den);
    for (auto& x : num) x = x * inv;
    den = 1;
    return;
  }
  for (const auto& x : num)
    if (!x.divisible_by(den)) return;
  for (auto& x : num) x = x.exact_div(den);
  den = 1;
}

// Fractions over Z[v, v^-1], for small solves.
struct Frac {
  LaurentInt n = 0, d = 1;
  Frac() = default;
  Frac(LaurentInt num, LaurentInt den = 1) : n(std::move(num)), d(std::move(den)) { norm(); }
  void norm() {
    if (n.is_zero()) {
      d = 1;
      return;
    }
    if (is_unit(d)) {
      n = n * unit_inverse(d);
      d = 1;
    } else if (n.divisible_by(d)) {
      n = n.exact_div(d);
      d = 1;
    }
  }
  bool zero() const { return n.is_zero(); }
  friend Frac operator+(const Frac& a, const Frac& b) { return Frac(a.n * b.d + b.n * a.d, a.d * b.d); }
  friend Frac operator-(const Frac& a, const Frac& b) { return Frac(a.n * b.d - b.n * a.d, a.d * b.d); }
  friend Frac operator*(const Frac& a, const Frac& b) { return Frac(a.n * b.n, a.d * b.d); }
  friend Frac operator/(const Frac& a, const Frac& b) {
    if (b.zero()) throw std::logic_error("division by zero in Q(v)");
    return Frac(a.n * b.d, a.d * b.n);
  }
};

// Fraction-free row echelon form in place; returns pivot columns.
std::vector<std::size_t> bareiss(std::vector<std::vector<LaurentInt>>& M) {
  std::vector<std::size_t> piv;
  if (M.empty()) return piv;
  const std::size_t R = M.size(), N = M[0].size();
  LaurentInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < N && r < R; ++c) {
    std::size_t s = r;
    while (s < R && M[s][c].is_zero()) ++s;
    if (s == R) continue;
    std::swap(M[r], M[s]);
    for (std::size_t i = r + 1; i < R; ++i) {
      for (std::size_t j = c + 1; j < N; ++j) {
        LaurentInt x = M[r][c] * M[i][j] - M[i][c] * M[r][j];
        M[i][j] = x.exact_div(prev);
      }
      M[i][c] = 0;
    }
    prev = M[r][c];
    piv.push_back(c);
    ++r;
  }
  M.resize(r);
  return piv;
}

int rank_sqrtq(std::vector<std::vector<ScalarSqrtQ>> M) {
  if (M.empty()) return 0;
  const std::size_t R = M.size(), N = M[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < N && r < R; ++c) {
    std::size_t s = r;
    while (s < R && M[s][c].is_zero()) ++s;
    if (s == R) continue;
    std::swap(M[r], M[s]);
    const ScalarSqrtQ inv = M[r][c].inverse();
    for (std::size_t i = r + 1; i < R; ++i) {
      if (M[i][c].is_zero()) continue;
      const ScalarSqrtQ f = M[i][c] * inv;
      for (std::size_t j = c; j < N; ++j) M[i][j] -= f * M[r][j];
    }
    ++r;
  }
  return static_cast<int>(r);
}

}  // namespace

int rank_qv(std::vector<std::vector<LaurentInt>> rows) { return static_cast<int>(bareiss(rows).size()); }

bool UElement::is_zero() const {
  return std::all_of(num.begin(), num.end(), [](const LaurentInt& x) { return x.is_zero(); });
}

bool operator==(const UElement& a, const UElement& b) {
  if (a.weight != b.weight || a.num.size() != b.num.size()) return false;
  for (std::size_t k = 0; k < a.num.size(); ++k)
    if (!(a.num[k] * b.den == b.num[k] * a.den)) return false;
  return true;
}

// ---------------------------------------------------------------- UMinus

UMinus::UMinus(CartanMatrix cartan, int total_bound) : a_(std::move(cartan)), total_bound_(total_bound) {
  const std::size_t n = a_.size();
  if (n == 0) throw domain_error("UMinus: empty Cartan matrix");
  for (std::size_t i = 0; i < n; ++i) {
    if (a_[i].size() != n) throw domain_error("UMinus: Cartan matrix is not square");
    if (a_[i][i] != 2) throw domain_error("UMinus: diagonal entries must be 2");
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && (a_[i][j] > 0 || a_[i][j] != a_[j][i])) throw domain_error("UMinus: Cartan matrix must be symmetric with a_ij <= 0");
  }
}

DimVec UMinus::weight_of(const std::vector<int>& plain) const {
  DimVec w(a_.size(), 0);
  for (int i : plain) {
    if (i < 0 || i >= rank()) throw domain_error("UMinus: vertex out of range");
    ++w[i];
  }
  return w;
}

std::vector<std::pair<LaurentInt, UWord>> UMinus::serre_relator(int i, int j) const {
  if (i == j || i < 0 || j < 0 || i >= rank() || j >= rank()) throw domain_error("serre_relator: need two distinct vertices");
  const int n = 1 - a_[i][j];
  std::vector<std::pair<LaurentInt, UWord>> out;
  for (int p = 0; p <= n; ++p) {
    UWord w;
    if (p > 0) w.emplace_back(i, p);
    w.emplace_back(j, 1);
    if (n - p > 0) w.emplace_back(i, n - p);
    out.emplace_back(LaurentInt(p % 2 ? -1 : 1), w);
  }
  return out;
}

const UMinus::Space& UMinus::space(const DimVec& weight) const {
  if (static_cast<int>(weight.size()) != rank()) throw domain_error("UMinus: weight of wrong length");
  if (dv_total(weight) > total_bound_) throw resource_error("UMinus: weight " + dv_str(weight) + " exceeds the total bound");
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = spaces_.find(weight);
  if (it == spaces_.end()) it = spaces_.emplace(weight, build(weight)).first;
  return *it->second;
}

std::unique_ptr<UMinus::Space> UMinus::build(const DimVec& weight) const {
  auto S = std::make_unique<Space>();
  // All sequences of this weight in lex order.
  std::vector<int> cur;
  DimVec left = weight;
  std::function<void()> gen = [&]() {
    bool done = true;
    for (int i = 0; i < rank(); ++i) {
      if (left[i] == 0) continue;
      done = false;
      --left[i];
      cur.push_back(i);
      gen();
      cur.pop_back();
      ++left[i];
    }
    if (done) S->words.push_back(cur);
  };
  gen();
  if (dv_total(weight) == 0) {
    S->basis.push_back({});
    S->col_num.push_back({LaurentInt(1)});
    S->col_den.push_back(1);
    return S;
  }

  // Every word is F_i times a word of weight - e_i, which reduces to F_i times basis words
  // there. Columns are those products, lex-greatest first, so that pivots are the leading
  // words of the ideal and the non-pivots give the lex-least greedy basis.
  for (int i = 0; i < rank(); ++i) {
    if (weight[i] == 0) continue;
    DimVec sub = weight;
    --sub[i];
    for (const auto& b : basis(sub)) {
      std::vector<int> w{i};
      w.insert(w.end(), b.begin(), b.end());
      S->cols.push_back(w);
    }
  }
  std::sort(S->cols.begin(), S->cols.end(), std::greater<>());
  const std::size_t N = S->cols.size();
  for (std::size_t c = 0; c < N; ++c) S->col_index[S->cols[c]] = c;

  // A word as numerators over the columns, with a denominator.
  auto expand = [&](const std::vector<int>& w, std::vector<LaurentInt>& num, LaurentInt& den) {
    DimVec sub = weight;
    --sub[w[0]];
    const UElement tail = normal_form(std::vector<int>(w.begin() + 1, w.end()));
    const auto& bs = basis(sub);
    num.assign(N, 0);
    for (std::size_t k = 0; k < bs.size(); ++k) {
      if (tail.num[k].is_zero()) continue;
      std::vector<int> x{w[0]};
      x.insert(x.end(), bs[k].begin(), bs[k].end());
      num[S->col_index.at(x)] = tail.num[k];
    }
    den = tail.den;
  };

  // Relations not already inside F_i * (ideal): Serre relators times basis words.
  std::vector<std::vector<LaurentInt>> rows;
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) {
      if (i == j) continue;
      const int n = 1 - a_[i][j];
      DimVec rest = weight;
      rest[i] -= n;
      rest[j] -= 1;
      if (rest[i] < 0 || rest[j] < 0) continue;
      for (const auto& b : basis(rest)) {
        // Cleared of denominators: sum_p (-1)^p [n choose p] F_i^p F_j F_i^(n-p) b.
        std::vector<std::vector<LaurentInt>> nums;
        std::vector<LaurentInt> dens;
        for (int p = 0; p <= n; ++p) {
          std::vector<int> w(p, i);
          w.push_back(j);
          w.insert(w.end(), n - p, i);
          w.insert(w.end(), b.begin(), b.end());
          std::vector<LaurentInt> num;
          LaurentInt den;
          expand(w, num, den);
          const LaurentInt c = p % 2 ? -qbinom(n, p) : qbinom(n, p);
          for (auto& x : num) x = c * x;
          nums.push_back(std::move(num));
          dens.push_back(std::move(den));
        }
        std::vector<LaurentInt> row(N, 0);
        for (std::size_t t = 0; t < nums.size(); ++t) {
          LaurentInt f = 1;
          for (std::size_t u = 0; u < dens.size(); ++u)
            if (u != t) f = f * dens[u];
          for (std::size_t c = 0; c < N; ++c)
            if (!nums[t][c].is_zero()) row[c] += f * nums[t][c];
        }
        if (std::any_of(row.begin(), row.end(), [](const LaurentInt& x) { return !x.is_zero(); })) rows.push_back(std::move(row));
      }
    }
  const std::vector<std::size_t> piv = bareiss(rows);
  const std::size_t rk = piv.size();
  for (std::size_t k = rk; k-- > 0;) {
    for (std::size_t t = 0; t < k; ++t) {
      const LaurentInt f = rows[t][piv[k]];
      if (f.is_zero()) continue;
      const LaurentInt p = rows[k][piv[k]];
      for (std::size_t c = 0; c < N; ++c) rows[t][c] = p * rows[t][c] - f * rows[k][c];
    }
    LaurentInt p = rows[k][piv[k]];
    reduce(rows[k], p);
  }

  std::vector<char> is_pivot(N, 0);
  std::map<std::size_t, std::size_t> row_of_col;
  for (std::size_t k = 0; k < rk; ++k) {
    is_pivot[piv[k]] = 1;
    row_of_col[piv[k]] = k;
  }
  std::vector<std::size_t> basis_cols;  // lex ascending
  for (std::size_t c = N; c-- > 0;)
    if (!is_pivot[c]) basis_cols.push_back(c);
  for (std::size_t c : basis_cols) S->basis.push_back(S->cols[c]);

  S->col_num.assign(N, std::vector<LaurentInt>(basis_cols.size(), 0));
  S->col_den.assign(N, 1);
  for (std::size_t c = 0; c < N; ++c) {
    if (!is_pivot[c]) {
      S->col_num[c][std::find(basis_cols.begin(), basis_cols.end(), c) - basis_cols.begin()] = 1;
      continue;
    }
    const auto& row = rows[row_of_col[c]];
    for (std::size_t b = 0; b < basis_cols.size(); ++b) S->col_num[c][b] = -row[basis_cols[b]];
    S->col_den[c] = row[c];
    reduce(S->col_num[c], S->col_den[c]);
  }
  return S;
}

const std::vector<std::vector<int>>& UMinus::words(const DimVec& weight) const { return space(weight).words; }
const std::vector<std::vector<int>>& UMinus::basis(const DimVec& weight) const { return space(weight).basis; }

UElement UMinus::zero(const DimVec& weight) const {
  UElement e;
  e.weight = weight;
  e.num.assign(space(weight).basis.size(), 0);
  return e;
}

UElement UMinus::normal_form(const std::vector<int>& plain) const {
  const DimVec w = weight_of(plain);
  const Space& S = space(w);
  UElement e;
  e.weight = w;
  if (plain.empty()) {
    e.num = {LaurentInt(1)};
    return e;
  }
  {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = S.memo.find(plain);
    if (it != S.memo.end()) return it->second;
  }
  // F_i * nf(tail), then each column F_i b' through its own normal form.
  DimVec sub = w;
  --sub[plain[0]];
  const UElement tail = normal_form(std::vector<int>(plain.begin() + 1, plain.end()));
  const auto& bs = basis(sub);
  e = zero(w);
  for (std::size_t k = 0; k < bs.size(); ++k) {
    if (tail.num[k].is_zero()) continue;
    std::vector<int> x{plain[0]};
    x.insert(x.end(), bs[k].begin(), bs[k].end());
    const std::size_t c = S.col_index.at(x);
    UElement col;
    col.weight = w;
    col.num = S.col_num[c];
    col.den = S.col_den[c];
    e = add(e, scale(tail.num[k], col));
  }
  e.den = e.den * tail.den;
  reduce(e.num, e.den);
  std::lock_guard<std::recursive_mutex> lock(mu_);
  S.memo.emplace(plain, e);
  return e;
}

UElement UMinus::normal_form(const UWord& word) const {
  std::vector<int> plain;
  LaurentInt den = 1;
  for (const auto& [i, n] : word) {
    if (n < 0) throw domain_error("normal_form: negative divided power");
    plain.insert(plain.end(), n, i);
    den = den * qfactorial(n);
  }
  UElement e = normal_form(plain);
  e.den = e.den * den;
  reduce(e.num, e.den);
  return e;
}

UElement UMinus::add(const UElement& a, const UElement& b) const {
  if (a.weight != b.weight) throw domain_error("UMinus::add: weights differ");
  UElement r;
  r.weight = a.weight;
  r.num.resize(a.num.size());
  if (a.den == b.den) {
    for (std::size_t k = 0; k < a.num.size(); ++k) r.num[k] = a.num[k] + b.num[k];
    r.den = a.den;
  } else {
    for (std::size_t k = 0; k < a.num.size(); ++k) r.num[k] = a.num[k] * b.den + b.num[k] * a.den;
    r.den = a.den * b.den;
  }
  reduce(r.num, r.den);
  return r;
}

UElement UMinus::scale(const LaurentInt& c, const UElement& a) const {
  UElement r = a;
  for (auto& x : r.num) x = c * x;
  reduce(r.num, r.den);
  return r;
}

UElement UMinus::multiply(const UElement& a, const UElement& b) const {
  const auto& ba = basis(a.weight);
  const auto& bb = basis(b.weight);
  UElement r = zero(dv_add(a.weight, b.weight));
  for (std::size_t x = 0; x < ba.size(); ++x) {
    if (a.num[x].is_zero()) continue;
    for (std::size_t y = 0; y < bb.size(); ++y) {
      if (b.num[y].is_zero()) continue;
      std::vector<int> w = ba[x];
      w.insert(w.end(), bb[y].begin(), bb[y].end());
      r = add(r, scale(a.num[x] * b.num[y], normal_form(w)));
    }
  }
  r.den = r.den * a.den * b.den;
  reduce(r.num, r.den);
  return r;
}

UElement UMinus::bar(const UElement& a) const {
  // Basis elements are generator words, fixed by bar.
  UElement r = a;
  for (auto& x : r.num) x = x.bar();
  r.den = r.den.bar();
  reduce(r.num, r.den);
  return r;
}

UElement UMinus::combination(const std::vector<std::pair<LaurentInt, UWord>>& terms) const {
  if (terms.empty()) throw domain_error("combination: no terms");
  UElement r;
  bool first = true;
  for (const auto& [c, w] : terms) {
    UElement t = scale(c, normal_form(w));
    r = first ? t : add(r, t);
    first = false;
  }
  return r;
}

// ---------------------------------------------------------------- Lusztig's recursion

Correction lusztig_correction(const UMinus& U, const std::vector<UElement>& lattice) {
  Correction out;
  const std::size_t n = lattice.size();
  if (n == 0) return out;
  const DimVec w = lattice[0].weight;
  for (const auto& e : lattice)
    if (e.weight != w) throw domain_error("lusztig_correction: elements of different weight");
  const std::size_t d = static_cast<std::size_t>(U.dim(w));
  if (n != d) {
    out.ok = false;
    out.message = "family has " + std::to_string(n) + " elements, weight space has dimension " + std::to_string(d);
    return out;
  }
  // Solve E^T y = bar(e_k)^T for all k at once.
  std::vector<std::vector<Frac>> A(d, std::vector<Frac>(2 * n));
  for (std::size_t l = 0; l < n; ++l)
    for (std::size_t c = 0; c < d; ++c) A[c][l] = Frac(lattice[l].num[c], lattice[l].den);
  for (std::size_t k = 0; k < n; ++k) {
    const UElement be = U.bar(lattice[k]);
    for (std::size_t c = 0; c < d; ++c) A[c][n + k] = Frac(be.num[c], be.den);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t s = col;
    while (s < d && A[s][col].zero()) ++s;
    if (s == d) {
      out.ok = false;
      out.message = "family is linearly dependent";
      return out;
    }
    std::swap(A[col], A[s]);
    const Frac p = A[col][col];
    for (auto& x : A[col]) x = x / p;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || A[r][col].zero()) continue;
      const Frac f = A[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) A[r][c] = A[r][c] - f * A[col][c];
    }
  }
  // bar(e_k) = sum_l R[k][l] e_l
  std::vector<std::vector<LaurentInt>> R(n, std::vector<LaurentInt>(n, 0));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      const Frac& y = A[l][n + k];
      if (!(y.d == LaurentInt(1))) {
        out.ok = false;
        out.message = "bar matrix entry (" + std::to_string(k) + "," + std::to_string(l) + ") is not in Z[v,v^-1]";
        return out;
      }
      R[k][l] = y.n;
      if ((l < k && !y.n.is_zero()) || (l == k && !(y.n == LaurentInt(1)))) {
        out.ok = false;
        out.message = "bar matrix is not unitriangular at (" + std::to_string(k) + "," + std::to_string(l) + ")";
        return out;
      }
    }
  out.coeff.assign(n, std::vector<LaurentInt>(n, 0));
  for (std::size_t k = 0; k < n; ++k) {
    auto& x = out.coeff[k];
    x[k] = 1;
    for (std::size_t l = k + 1; l < n; ++l) {
      LaurentInt rho = 0;
      for (std::size_t m = k; m < l; ++m) rho += x[m].bar() * R[m][l];
      if (!(rho.bar() == -rho)) {
        out.ok = false;
        out.message = "no bar-invariant correction at (" + std::to_string(k) + "," + std::to_string(l) + "): " + rho.str();
        return out;
      }
      LaurentInt neg = 0;
      for (const auto& [e, c] : rho.terms())
        if (e < 0) neg += LaurentInt::monomial(c, e);
      x[l] = neg;
    }
    UElement b = lattice[k];
    for (std::size_t l = k + 1; l < n; ++l)
      if (!x[l].is_zero()) b = U.add(b, U.scale(x[l], lattice[l]));
    if (!(U.bar(b) == b)) {
      out.ok = false;
      out.message = "corrected element " + std::to_string(k) + " is not bar-invariant";
    }
    out.basis.push_back(std::move(b));
  }
  return out;
}

// ---------------------------------------------------------------- Hall side

Consistency hall_consistency(const UMinus& U, const HallAlgebra& H, const std::vector<Word>& words, int sign) {
  Consistency out;
  if (words.empty()) return out;
  const int nv = U.rank();
  const DimVec w = words[0].weight(nv);
  for (const auto& s : words)
    if (s.weight(nv) != w) throw domain_error("hall_consistency: words of different weight");
  const int q = H.q();
  std::vector<std::vector<LaurentInt>> sym;
  std::vector<std::vector<ScalarSqrtQ>> spec, hall, joint;
  for (const auto& s : words) {
    const UElement e = U.normal_form(to_uword(s));
    sym.push_back(e.num);
    const ScalarSqrtQ den = ScalarSqrtQ::from(q, e.den, sign);
    if (den.is_zero()) {
      out.ok = false;
      out.message = "a normal-form denominator vanishes at v = sqrt q";
      return out;
    }
    const ScalarSqrtQ inv = den.inverse();
    std::vector<ScalarSqrtQ> row;
    for (const auto& x : e.num) row.push_back(ScalarSqrtQ::from(q, x, sign) * inv);
    spec.push_back(row);
    hall.push_back(H.values(H.evaluate_word(s)));
    row.insert(row.end(), hall.back().begin(), hall.back().end());
    joint.push_back(std::move(row));
  }
  out.symbolic_rank = rank_qv(sym);
  out.specialized_rank = rank_sqrtq(spec);
  out.hall_rank = rank_sqrtq(hall);
  out.joint_rank = rank_sqrtq(joint);
  out.ok = out.symbolic_rank == out.specialized_rank && out.specialized_rank == out.hall_rank && out.hall_rank == out.joint_rank;
  if (!out.ok)
    out.message = "ranks symbolic " + std::to_string(out.symbolic_rank) + ", specialized " + std::to_string(out.specialized_rank) +
                  ", hall " + std::to_string(out.hall_rank) + ", joint " + std::to_string(out.joint_rank);
  return out;
}

}  // namespace ah
