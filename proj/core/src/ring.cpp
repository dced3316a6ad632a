#include "affine_hall/ring.hpp"

#include "affine_hall/errors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace ah {

// ---------------------------------------------------------------- LaurentInt

LaurentInt::LaurentInt(long long c) {
  if (c != 0) c_[0] = c;
}

LaurentInt LaurentInt::monomial(const BigInt& c, int exp) {
  LaurentInt r;
  if (c != 0) r.c_[exp] = c;
  return r;
}

void LaurentInt::put(int e, const BigInt& c) {
  if (c == 0) return;
  auto it = c_.find(e);
  if (it == c_.end()) {
    c_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) c_.erase(it);
}

BigInt LaurentInt::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? BigInt(0) : it->second;
}

int LaurentInt::min_exp() const {
  if (c_.empty()) throw domain_error("min_exp of zero Laurent polynomial");
  return c_.begin()->first;
}

int LaurentInt::max_exp() const {
  if (c_.empty()) throw domain_error("max_exp of zero Laurent polynomial");
  return c_.rbegin()->first;
}

LaurentInt LaurentInt::operator-() const {
  LaurentInt r;
  for (const auto& [e, c] : c_) r.c_[e] = -c;
  return r;
}

LaurentInt& LaurentInt::operator+=(const LaurentInt& o) {
  for (const auto& [e, c] : o.c_) put(e, c);
  return *this;
}

LaurentInt& LaurentInt::operator-=(const LaurentInt& o) {
  for (const auto& [e, c] : o.c_) put(e, -c);
  return *this;
}

LaurentInt operator*(const LaurentInt& a, const LaurentInt& b) {
  LaurentInt r;
  for (const auto& [e1, c1] : a.c_)
    for (const auto& [e2, c2] : b.c_) r.put(e1 + e2, c1 * c2);
  return r;
}

LaurentInt LaurentInt::bar() const {
  LaurentInt r;
  for (const auto& [e, c] : c_) r.c_[-e] = c;
  return r;
}

LaurentInt LaurentInt::shifted(int k) const {
  LaurentInt r;
  for (const auto& [e, c] : c_) r.c_[e + k] = c;
  return r;
}

bool LaurentInt::divisible_by(const LaurentInt& b) const {
  try {
    (void)exact_div(b);
    return true;
  } catch (const domain_error&) {
    return false;
  }
}

LaurentInt LaurentInt::exact_div(const LaurentInt& b) const {
  if (b.is_zero()) throw domain_error("division by zero Laurent polynomial");
  if (is_zero()) return {};
  // Long division from the top degree; an exact quotient has integer coefficients
  // whenever the leading coefficient of b divides each intermediate leader.
  LaurentInt rem = *this;
  LaurentInt quot;
  const int bt = b.max_exp();
  const int bl = b.min_exp();
  const BigInt blead = b.coeff(bt);
  while (!rem.is_zero()) {
    const int rt = rem.max_exp();
    if (rem.min_exp() - bl > rt - bt) throw domain_error("Laurent division is not exact");
    const BigInt rc = rem.coeff(rt);
    if (rc % blead != 0) throw domain_error("Laurent division is not exact");
    LaurentInt t = monomial(rc / blead, rt - bt);
    quot += t;
    rem -= t * b;
  }
  return quot;
}

BigInt LaurentInt::at_one() const {
  BigInt s = 0;
  for (const auto& [e, c] : c_) s += c;
  return s;
}

bool LaurentInt::in_negative_part() const {
  return c_.empty() || c_.rbegin()->first < 0;
}

std::string LaurentInt::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const auto& [e, c] = *it;
    const BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << "v";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

// ---------------------------------------------------------------- ScalarSqrtQ

ScalarSqrtQ::ScalarSqrtQ(int q, Rational a, Rational b) : q_(q), a_(std::move(a)), b_(std::move(b)) {
  if (q < 2) throw domain_error("ScalarSqrtQ needs q >= 2");
  int r = 1;
  while ((r + 1) * (r + 1) <= q) ++r;
  root_ = (r * r == q) ? r : 0;
  normalize();
}

void ScalarSqrtQ::normalize() {
  if (root_ != 0 && b_ != 0) {
    a_ += b_ * root_;
    b_ = 0;
  }
}

void ScalarSqrtQ::check_same(const ScalarSqrtQ& o) const {
  if (q_ != o.q_) throw domain_error("ScalarSqrtQ values over different q");
}

ScalarSqrtQ ScalarSqrtQ::v_power(int q, int k) {
  // v^k with v = sqrt(q): q^(k/2) or q^((k-1)/2) sqrt(q).
  Rational base = 1;
  int h = k >= 0 ? k / 2 : -((-k + 1) / 2);
  int odd = k - 2 * h;  // 0 or 1
  Rational qq = q;
  if (h >= 0) {
    for (int i = 0; i < h; ++i) base *= qq;
  } else {
    for (int i = 0; i < -h; ++i) base /= qq;
  }
  return odd ? ScalarSqrtQ(q, 0, base) : ScalarSqrtQ(q, base, 0);
}

ScalarSqrtQ ScalarSqrtQ::from(int q, const LaurentInt& f, int sign) {
  ScalarSqrtQ r(q);
  for (const auto& [e, c] : f.terms()) {
    ScalarSqrtQ t = v_power(q, e);
    const BigInt s = (sign < 0 && (e % 2 != 0)) ? BigInt(-c) : c;
    r += ScalarSqrtQ(q, Rational(s)) * t;
  }
  return r;
}

ScalarSqrtQ ScalarSqrtQ::operator-() const { return ScalarSqrtQ(q_, -a_, -b_); }

ScalarSqrtQ& ScalarSqrtQ::operator+=(const ScalarSqrtQ& o) {
  check_same(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

ScalarSqrtQ& ScalarSqrtQ::operator-=(const ScalarSqrtQ& o) {
  check_same(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

ScalarSqrtQ& ScalarSqrtQ::operator*=(const ScalarSqrtQ& o) {
  check_same(o);
  Rational na = a_ * o.a_ + b_ * o.b_ * q_;
  Rational nb = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(na);
  b_ = std::move(nb);
  normalize();
  return *this;
}

bool operator==(const ScalarSqrtQ& x, const ScalarSqrtQ& y) {
  if (x.q_ != y.q_) return false;
  return x.a_ == y.a_ && x.b_ == y.b_;
}

ScalarSqrtQ ScalarSqrtQ::inverse() const {
  Rational n = a_ * a_ - b_ * b_ * q_;
  if (n == 0) throw domain_error("ScalarSqrtQ inverse of zero");
  return ScalarSqrtQ(q_, a_ / n, -b_ / n);
}

std::string ScalarSqrtQ::str() const {
  std::ostringstream os;
  os << a_;
  if (b_ != 0) os << (b_ < 0 ? " - " : " + ") << (b_ < 0 ? Rational(-b_) : b_) << "*sqrt(" << q_ << ")";
  return os.str();
}

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) {
  for (int p : parts)
    if (p < 0) throw domain_error("partition parts must be nonnegative");
  parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  parts_ = std::move(parts);
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

bool Partition::dominates(const Partition& mu) const {
  if (mu.weight() != weight_) return false;
  int a = 0, b = 0;
  std::size_t n = std::max(parts_.size(), mu.parts_.size());
  for (std::size_t i = 0; i < n; ++i) {
    a += (*this)[i];
    b += mu[i];
    if (a < b) return false;
  }
  return true;
}

std::string Partition::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxp) {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rest, maxp); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(m, m);
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------- q-numbers

LaurentInt qint(int n) {
  if (n < 0) throw domain_error("qint of negative integer");
  LaurentInt r;
  for (int k = 0; k < n; ++k) r += LaurentInt::v(n - 1 - 2 * k);
  return r;
}

LaurentInt qfactorial(int n) {
  LaurentInt r(1);
  for (int k = 2; k <= n; ++k) r = r * qint(k);
  return r;
}

LaurentInt qbinom(int n, int m) {
  if (n < 0 || m < 0 || m > n) throw domain_error("qbinom requires 0 <= m <= n");
  return qfactorial(n).exact_div(qfactorial(m) * qfactorial(n - m));
}

BigInt gauss_binom(int n, int k, long long q) {
  if (k < 0 || k > n) return 0;
  BigInt num = 1, den = 1, Q = q;
  for (int i = 0; i < k; ++i) {
    num *= boost::multiprecision::pow(Q, n - i) - 1;
    den *= boost::multiprecision::pow(Q, i + 1) - 1;
  }
  return num / den;
}

BigInt gl_order(int n, const BigInt& q) {
  BigInt r = 1;
  BigInt qn = boost::multiprecision::pow(q, n);
  BigInt qk = 1;
  for (int k = 0; k < n; ++k) {
    r *= qn - qk;
    qk *= q;
  }
  return r;
}

long long factorial(int n) {
  long long r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

long long multinomial(const Partition& lam) {
  long long r = factorial(lam.weight());
  for (int p : lam.parts()) r /= factorial(p);
  return r;
}

// ---------------------------------------------------------------- Kostka numbers

long long kostka(const Partition& lam, const Partition& mu) {
  if (lam.weight() != mu.weight()) throw domain_error("kostka needs partitions of equal weight");
  const auto& shape = lam.parts();
  const auto& content = mu.parts();
  // Place content[k] copies of the letter k as a horizontal strip.
  std::function<long long(std::vector<int>&, std::size_t)> rec = [&](std::vector<int>& cur,
                                                                       std::size_t k) -> long long {
    if (k == content.size()) return 1;
    long long total = 0;
    std::vector<int> next = cur;
    std::function<void(std::size_t, int)> strip = [&](std::size_t row, int left) {
      if (row == shape.size()) {
        if (left == 0) total += rec(next, k + 1);
        return;
      }
      int cap = shape[row] - cur[row];
      if (row > 0) cap = std::min(cap, cur[row - 1] - cur[row]);
      for (int add = std::min(cap, left); add >= 0; --add) {
        next[row] = cur[row] + add;
        strip(row + 1, left - add);
      }
      next[row] = cur[row];
    };
    strip(0, content[k]);
    return total;
  };
  std::vector<int> start(shape.size(), 0);
  return rec(start, 0);
}

long long standard_tableaux(const Partition& lam) {
  return kostka(lam, Partition(std::vector<int>(lam.weight(), 1)));
}

namespace {

// Number of tabloids of row-shape alpha fixed by a permutation with the given cycle lengths.
long long fixed_tabloids(const std::vector<int>& cycles, std::vector<int> rows) {
  std::function<long long(std::size_t)> rec = [&](std::size_t k) -> long long {
    if (k == cycles.size()) {
      for (int r : rows)
        if (r != 0) return 0;
      return 1;
    }
    long long s = 0;
    for (auto& r : rows) {
      if (r >= cycles[k]) {
        r -= cycles[k];
        s += rec(k + 1);
        r += cycles[k];
      }
    }
    return s;
  };
  return rec(0);
}

// Irreducible character via the Jacobi-Trudi determinant of permutation characters.
long long irreducible_character(const Partition& mu, const std::vector<int>& cycles) {
  const int l = mu.length();
  std::vector<int> w(l);
  std::iota(w.begin(), w.end(), 0);
  long long total = 0;
  do {
    int inv = 0;
    for (int a = 0; a < l; ++a)
      for (int b = a + 1; b < l; ++b)
        if (w[a] > w[b]) ++inv;
    std::vector<int> alpha(l);
    bool ok = true;
    for (int i = 0; i < l; ++i) {
      alpha[i] = mu[i] - i + w[i];
      if (alpha[i] < 0) ok = false;
    }
    if (!ok) continue;
    long long t = fixed_tabloids(cycles, alpha);
    total += (inv % 2 == 0) ? t : -t;
  } while (std::next_permutation(w.begin(), w.end()));
  return total;
}

}  // namespace

std::map<Partition, long long> perm_module_multiplicities(const Partition& lam) {
  const int m = lam.weight();
  if (m > 7) throw resource_error("perm_module_multiplicities: brute force limited to m <= 7");
  // Class sizes by cycle type from a sweep over the whole group.
  std::map<std::vector<int>, long long> classes;
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<bool> seen(m, false);
    std::vector<int> cyc;
    for (int i = 0; i < m; ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (int j = i; !seen[j]; j = perm[j]) {
        seen[j] = true;
        ++len;
      }
      cyc.push_back(len);
    }
    std::sort(cyc.begin(), cyc.end(), std::greater<>());
    ++classes[cyc];
  } while (std::next_permutation(perm.begin(), perm.end()));

  const long long order = factorial(m);
  std::map<Partition, long long> out;
  for (const auto& mu : partitions_of(m)) {
    long long s = 0;
    for (const auto& [cyc, size] : classes)
      s += size * fixed_tabloids(cyc, lam.parts()) * irreducible_character(mu, cyc);
    if (s % order != 0) throw std::logic_error("character inner product is not integral");
    if (s != 0) out[mu] = s / order;
  }
  return out;
}

// ---------------------------------------------------------------- RatPoly

RatPoly::RatPoly(Rational c) {
  if (c != 0) c_.push_back(std::move(c));
}

RatPoly RatPoly::x_power(int k) {
  RatPoly r;
  r.c_.assign(k + 1, Rational(0));
  r.c_[k] = 1;
  return r;
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  RatPoly r;
  if (a.c_.empty() || b.c_.empty()) return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  r.trim();
  return r;
}

RatPoly RatPoly::exact_div(const RatPoly& d) const {
  if (d.is_zero()) throw domain_error("polynomial division by zero");
  RatPoly rem = *this;
  RatPoly quot;
  if (rem.degree() >= d.degree()) quot.c_.assign(rem.degree() - d.degree() + 1, Rational(0));
  while (!rem.is_zero() && rem.degree() >= d.degree()) {
    int k = rem.degree() - d.degree();
    Rational f = rem.lead() / d.lead();
    quot.c_[k] += f;
    rem -= RatPoly(f) * x_power(k) * d;
  }
  if (!rem.is_zero()) throw domain_error("polynomial division is not exact");
  quot.trim();
  return quot;
}

Rational RatPoly::eval(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

bool RatPoly::integral() const {
  for (const auto& c : c_)
    if (denominator(c) != 1) return false;
  return true;
}

std::string RatPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    const Rational& c = c_[k];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag;
    if (k > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

RatPoly gl_order_poly(int n, int d) {
  RatPoly r(1);
  RatPoly qnd = RatPoly::x_power(n * d);
  for (int k = 0; k < n; ++k) r = r * (qnd - RatPoly::x_power(k * d));
  return r;
}

RatPoly binom_poly(const RatPoly& n, int k) {
  RatPoly r(1);
  for (int i = 0; i < k; ++i) r = r * (n - RatPoly(Rational(i)));
  return r * RatPoly(Rational(1, factorial(k)));
}

RatPoly irreducible_count_poly(int d) {
  auto mobius = [](int n) {
    int r = 1;
    for (int p = 2; p * p <= n; ++p) {
      if (n % p) continue;
      n /= p;
      if (n % p == 0) return 0;
      r = -r;
    }
    if (n > 1) r = -r;
    return r;
  };
  RatPoly r;
  for (int e = 1; e <= d; ++e)
    if (d % e == 0) r += RatPoly(Rational(mobius(d / e), d)) * RatPoly::x_power(e);
  return r;
}

}  // namespace ah
