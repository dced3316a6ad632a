#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ah {

using Elt = std::uint8_t;

bool is_prime_power(int q, int* p = nullptr, int* e = nullptr);

// GF(q) by lookup tables. Elements are 0..q-1, read as base-p digit vectors
// (coefficients of a polynomial modulo the lex-least monic irreducible of degree e).
class Field {
 public:
  // Shared instance per q; throws domain_error unless q is a prime power <= 256.
  static const Field& get(int q);

  int q() const { return q_; }
  int p() const { return p_; }
  int degree() const { return e_; }

  Elt add(Elt a, Elt b) const { return add_[a * q_ + b]; }
  Elt sub(Elt a, Elt b) const { return add_[a * q_ + neg_[b]]; }
  Elt mul(Elt a, Elt b) const { return mul_[a * q_ + b]; }
  Elt neg(Elt a) const { return neg_[a]; }
  Elt inv(Elt a) const;  // throws domain_error on 0

  // Coefficients (lowest first) of the modulus used for GF(p^e); {0,1} for prime fields.
  const std::vector<int>& modulus() const { return modulus_; }

 private:
  explicit Field(int q);
  int q_, p_, e_;
  std::vector<int> modulus_;
  std::vector<Elt> add_, mul_, neg_, inv_;
};

// Monic polynomials over GF(q), coefficient vectors lowest degree first.
using FqPoly = std::vector<Elt>;

FqPoly poly_mul(const Field& F, const FqPoly& a, const FqPoly& b);
FqPoly poly_mod(const Field& F, const FqPoly& a, const FqPoly& m);
bool poly_is_irreducible(const Field& F, const FqPoly& f);
// All monic irreducible polynomials of degree d, in lexicographic order of coefficients.
std::vector<FqPoly> monic_irreducibles(const Field& F, int d);
std::string poly_str(const FqPoly& f);

}  // namespace ah
