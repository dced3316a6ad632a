#pragma once

#include "affine_hall/catalog.hpp"
#include "affine_hall/ring.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace ah {

// (a, lambda): discrete summands with multiplicities plus a partition of m, where
// sum a(V)|V| + m delta = nu.
struct StratumIndex {
  Fingerprint a;
  Partition lam;

  int m() const { return lam.weight(); }
  std::string str() const;
  friend auto operator<=>(const StratumIndex&, const StratumIndex&) = default;
  friend bool operator==(const StratumIndex&, const StratumIndex&) = default;
};

DimVec discrete_weight(const Catalog& cat, const Fingerprint& a);

// All (a, lambda) with the weight condition and tube aperiodicity, sorted.
std::vector<StratumIndex> enumerate_delta(const Catalog& cat, const DimVec& nu);

struct PointClass {
  Fingerprint a;            // discrete summands
  Fingerprint homogeneous;  // homogeneous regular summands
  int m = 0;                // homogeneous part has weight m delta
  bool aperiodic = true;    // the tube part of a is aperiodic
  bool squarefree = true;   // homogeneous summands pairwise non-isomorphic
  bool split = true;        // squarefree, and every homogeneous summand is level 0 of degree 1
  Partition level_partition;  // one part (level + 1) * degree per homogeneous summand

  // The point lies in X(a, lambda) for every partition lambda of m.
  bool in_stratum() const { return aperiodic && squarefree; }
};

PointClass classify_point(const Catalog& cat, const Fingerprint& fp);
PointClass classify_point(const Catalog& cat, const FqRep& x);

// Points of E_V(F_q) in the support of (a, m), counted through orbit sizes.
BigInt stratum_count(const Catalog& cat, const DimVec& nu, const Fingerprint& a, int m);
// The same count as a polynomial in q, from the parameter patterns of the homogeneous part.
RatPoly stratum_polynomial(const Catalog& cat, const Fingerprint& a, int m);

enum class Order { Less, Equal, Greater, Incomparable };
std::string order_str(Order o);

// Closure relations between supports, decided by the Hom-order of generic points over a
// field with enough rational homogeneous parameters.
class ClosureOracle {
 public:
  ClosureOracle(QuiverPtr Q, DimVec nu);

  int q() const { return cat_->q(); }
  const Catalog& catalog() const { return *cat_; }

  // The support of (a, m) lies in the closure of the support of (b, mb).
  bool contained(const Fingerprint& a, int m, const Fingerprint& b, int mb) const;
  Order order(const StratumIndex& p, const StratumIndex& r) const;

  // Generic point of the support of (a, m): a plus level-0 homogeneous simples with the
  // parameters params[0..m) of the oracle's parameter list.
  FqRep generic_point(const Fingerprint& a, const std::vector<int>& params) const;
  // For a containment found by the Hom-order, the (X, Y) pair that realized it.
  std::pair<FqRep, FqRep> witness(const Fingerprint& a, int m, const Fingerprint& b, int mb) const;

 private:
  CatalogPtr cat_;
  DimVec nu_;
  std::vector<IndecLabel> params_;  // rational homogeneous simples
  int fresh_base_ = 0;
  std::vector<std::size_t> tests_;  // catalog entries used as Hom-order test modules
  mutable std::map<std::tuple<Fingerprint, int, Fingerprint, int>, std::optional<std::pair<FqRep, FqRep>>> memo_;

  std::optional<std::pair<FqRep, FqRep>> find(const Fingerprint& a, int m, const Fingerprint& b, int mb) const;
  bool hom_order_leq(const FqRep& X, const FqRep& Y) const;
  std::vector<Fingerprint> specializations(const Fingerprint& b, int m, int mb) const;
};

// X is reached from Y by a chain of replacements E -> U + E/U over submodules U
// (each step a degeneration), identified by fingerprints in cat; bounded by max_nodes.
bool degenerates_by_extensions(const Catalog& cat, const FqRep& Y, const FqRep& X, int max_nodes = 5000);

}  // namespace ah
