#pragma once

#include "affine_hall/cache.hpp"
#include "affine_hall/catalog.hpp"
#include "affine_hall/flags.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ah {

// A function on the G_V-orbits of E_V(F_q), keyed by orbit key (fp_str of the fingerprint).
class HallElement {
 public:
  HallElement() = default;
  HallElement(int q, DimVec weight) : q_(q), weight_(std::move(weight)) {}

  int q() const { return q_; }
  const DimVec& weight() const { return weight_; }
  const std::map<std::string, ScalarSqrtQ>& coeffs() const { return c_; }
  ScalarSqrtQ at(const std::string& key) const;
  void set(const std::string& key, const ScalarSqrtQ& v);
  void add(const std::string& key, const ScalarSqrtQ& v);
  bool is_zero() const { return c_.empty(); }

  HallElement& operator+=(const HallElement& o);
  HallElement& operator-=(const HallElement& o);
  friend HallElement operator+(HallElement a, const HallElement& b) { return a += b; }
  friend HallElement operator-(HallElement a, const HallElement& b) { return a -= b; }
  friend HallElement operator*(const ScalarSqrtQ& s, const HallElement& e);
  friend bool operator==(const HallElement& a, const HallElement& b);

 private:
  int q_ = 0;
  DimVec weight_;
  std::map<std::string, ScalarSqrtQ> c_;
  void check_same(const HallElement& o) const;
};

// d1 - d2 for a quotient of weight tau and a sub of weight omega.
int hall_twist(const Quiver& Q, const DimVec& tau, const DimVec& omega);

class HallAlgebra {
 public:
  explicit HallAlgebra(CatalogPtr cat, std::shared_ptr<HallCache> cache = nullptr);

  const Catalog& catalog() const { return *cat_; }
  int q() const { return cat_->q(); }

  // Number of x-stable U in M with U of class L and M/U of class N.
  long long hall_number(const FqRep& M, const Fingerprint& N, const Fingerprint& L) const;
  // All Hall numbers of the orbit M with a sub of weight sub.
  HallTable hall_table(const Orbit& M, const DimVec& sub) const;

  HallElement unit() const;
  HallElement generator(int i, int n) const;
  // (f o g)[M] = v^-twist sum g^M_{N,L} f[N] g[L]; f lives on the quotient.
  HallElement product(const HallElement& f, const HallElement& g) const;
  HallElement evaluate_word(const Word& s) const;

  // Conversions to and from value vectors aligned with catalog().orbits(weight).
  HallElement from_values(const DimVec& weight, const std::vector<ScalarSqrtQ>& values) const;
  std::vector<ScalarSqrtQ> values(const HallElement& e) const;

 private:
  CatalogPtr cat_;
  std::shared_ptr<HallCache> cache_;
  std::string scope_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<std::string, DimVec>, HallTable> memo_;
};

// Canonical key of a tuple of fingerprints with homogeneous parameters renamed by degree and
// first appearance, minimized over renamings. Equal keys at different q describe the same
// configuration of catalog labels.
std::string q_stable_key(const std::vector<Fingerprint>& fps);

struct Interpolation {
  bool ok = false;
  RatPoly poly;
  std::string message;
};

// Fits the first degree_bound + 1 points, then checks every remaining point.
Interpolation interpolate(const std::vector<std::pair<long long, BigInt>>& values, int degree_bound);

struct CrossValidation {
  bool ok = true;
  int configurations = 0;  // (M, N, L) patterns fitted and checked
  int skipped = 0;         // M pattern absent at some q
  std::vector<std::string> failures;
};

// Every Hall number g^M_{N,L} with 0 < |L| < |M| <= bound, matched across fields by
// q_stable_key, is fitted at fit_qs (degree < fit_qs.size()) and compared with the recount at
// check_q. A configuration absent at some q where its M pattern exists counts as 0.
CrossValidation cross_validate_hall_numbers(const QuiverPtr& Q, const DimVec& bound, const std::vector<int>& fit_qs,
                                            int check_q, const std::shared_ptr<HallCache>& cache = nullptr);

}  // namespace ah
