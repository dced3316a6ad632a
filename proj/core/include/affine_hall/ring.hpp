#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace ah {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Element of Z[v, v^-1] with arbitrary-precision coefficients.
class LaurentInt {
 public:
  LaurentInt() = default;
  LaurentInt(long long c);  // NOLINT: constants convert implicitly

  static LaurentInt monomial(const BigInt& c, int exp);
  static LaurentInt v(int exp = 1) { return monomial(1, exp); }

  const std::map<int, BigInt>& terms() const { return c_; }
  BigInt coeff(int exp) const;
  bool is_zero() const { return c_.empty(); }
  int min_exp() const;
  int max_exp() const;

  LaurentInt operator-() const;
  LaurentInt& operator+=(const LaurentInt& o);
  LaurentInt& operator-=(const LaurentInt& o);
  friend LaurentInt operator+(LaurentInt a, const LaurentInt& b) { return a += b; }
  friend LaurentInt operator-(LaurentInt a, const LaurentInt& b) { return a -= b; }
  friend LaurentInt operator*(const LaurentInt& a, const LaurentInt& b);
  friend bool operator==(const LaurentInt& a, const LaurentInt& b) { return a.c_ == b.c_; }

  // v -> v^-1 on coefficients.
  LaurentInt bar() const;
  // Multiply by v^k.
  LaurentInt shifted(int k) const;
  // Exact quotient; throws std::domain_error when b does not divide *this.
  LaurentInt exact_div(const LaurentInt& b) const;
  bool divisible_by(const LaurentInt& b) const;

  BigInt at_one() const;
  // True when every exponent is negative (element of v^-1 Z[v^-1]).
  bool in_negative_part() const;
  std::string str() const;

 private:
  std::map<int, BigInt> c_;
  void put(int e, const BigInt& c);
};

// a + b sqrt(q). The coefficients are rationals with q-power denominators in practice,
// since v = sqrt(q) is inverted by the shift normalization.
class ScalarSqrtQ {
 public:
  ScalarSqrtQ() = default;
  explicit ScalarSqrtQ(int q, Rational a = 0, Rational b = 0);

  static ScalarSqrtQ v_power(int q, int k);
  static ScalarSqrtQ from(int q, const LaurentInt& f, int sign = 1);

  int q() const { return q_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  ScalarSqrtQ operator-() const;
  ScalarSqrtQ& operator+=(const ScalarSqrtQ& o);
  ScalarSqrtQ& operator-=(const ScalarSqrtQ& o);
  ScalarSqrtQ& operator*=(const ScalarSqrtQ& o);
  friend ScalarSqrtQ operator+(ScalarSqrtQ a, const ScalarSqrtQ& b) { return a += b; }
  friend ScalarSqrtQ operator-(ScalarSqrtQ a, const ScalarSqrtQ& b) { return a -= b; }
  friend ScalarSqrtQ operator*(ScalarSqrtQ a, const ScalarSqrtQ& b) { return a *= b; }
  friend bool operator==(const ScalarSqrtQ& x, const ScalarSqrtQ& y);
  ScalarSqrtQ inverse() const;
  std::string str() const;

 private:
  int q_ = 0;
  Rational a_ = 0;
  Rational b_ = 0;
  int root_ = 0;  // integer square root of q when q is a square, else 0
  void normalize();
  void check_same(const ScalarSqrtQ& o) const;
};

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  // Lexicographic order on parts.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

  bool dominates(const Partition& mu) const;
  std::string str() const;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

std::vector<Partition> partitions_of(int m);

LaurentInt qint(int n);
LaurentInt qfactorial(int n);
LaurentInt qbinom(int n, int m);

// Gaussian binomial as an integer at a given q.
BigInt gauss_binom(int n, int k, long long q);
BigInt gl_order(int n, const BigInt& q);

long long kostka(const Partition& lam, const Partition& mu);
long long standard_tableaux(const Partition& lam);
std::map<Partition, long long> perm_module_multiplicities(const Partition& lam);
long long factorial(int n);
long long multinomial(const Partition& lam);

// Polynomials in q with rational coefficients, lowest degree first.
class RatPoly {
 public:
  RatPoly() = default;
  RatPoly(Rational c);  // NOLINT
  static RatPoly x_power(int k);

  const std::vector<Rational>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Rational& lead() const { return c_.back(); }

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);
  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }
  // Throws std::domain_error if the division leaves a remainder.
  RatPoly exact_div(const RatPoly& d) const;
  Rational eval(const Rational& x) const;
  bool integral() const;
  std::string str(const std::string& var = "q") const;

 private:
  std::vector<Rational> c_;
  void trim();
};

RatPoly gl_order_poly(int n, int d = 1);  // |GL_n(F_{q^d})| as a polynomial in q
RatPoly binom_poly(const RatPoly& n, int k);
RatPoly irreducible_count_poly(int d);  // monic irreducibles of degree d over F_q

}  // namespace ah
