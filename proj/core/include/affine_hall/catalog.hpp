#pragma once

#include "affine_hall/repfq.hpp"
#include "affine_hall/ring.hpp"

#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

namespace ah {

struct IndecLabel {
  enum class Kind { Preprojective = 0, Preinjective = 1, RegularInhomog = 2, RegularHomog = 3 };
  Kind kind = Kind::Preprojective;
  int index = 0;      // m of P_m or l of I_l
  int tube = 0;       // inhomogeneous tube, 1-based
  int ray = 0;        // 1-based
  int level = 0;      // also the level of a homogeneous module
  std::string param;  // homogeneous parameter: "inf" or a monic irreducible polynomial
  int degree = 1;     // degree of the parameter

  bool discrete() const { return kind != Kind::RegularHomog; }
  std::string str() const;
  friend auto operator<=>(const IndecLabel&, const IndecLabel&) = default;
  friend bool operator==(const IndecLabel&, const IndecLabel&) = default;
};

IndecLabel preprojective(int m);
IndecLabel preinjective(int l);
IndecLabel tube_module(int tube, int ray, int level);

// Krull-Schmidt multiset of catalog labels.
using Fingerprint = std::map<IndecLabel, int>;
std::string fp_str(const Fingerprint& fp);

struct CatalogEntry {
  IndecLabel label;
  FqRep rep;
  int end_dim = 1;
  int top_degree = 1;  // End/rad is GF(q^top_degree)
};

struct TubeInfo {
  int period = 1;
  std::vector<FqRep> simples;  // ray 1..period, ray a+1 = Phi^+(ray a)
};

struct Orbit {
  Fingerprint fp;
  std::string key;
  FqRep rep;
  BigInt size;  // |G_V| / |Aut|
  int end_dim = 0;
};

// Index via reflections along the admissible order, or -1 / no value when M is not of that kind.
int preprojective_index(const FqRep& M);
bool preinjective_index(const FqRep& M, int& l);
// Smallest k > 0 with (Phi^+)^k M isomorphic to M, up to max_period; 0 if none.
int coxeter_period(const FqRep& M, int max_period = 6);

// All indecomposables up to a dimension bound over GF(q), with labels and orbit data.
class Catalog {
 public:
  Catalog(QuiverPtr quiver, int q, DimVec bound);
  // Homogeneous modules only up to homogeneous_bound (<= bound); orbits need nu within it.
  Catalog(QuiverPtr quiver, int q, DimVec bound, DimVec homogeneous_bound);

  const QuiverPtr& quiver_ptr() const { return quiver_; }
  const Quiver& quiver() const { return *quiver_; }
  int q() const { return q_; }
  const DimVec& bound() const { return bound_; }
  const DimVec& homogeneous_bound() const { return homog_bound_; }
  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const std::vector<TubeInfo>& tubes() const { return tubes_; }
  // Homogeneous regular simples defined over GF(q) of degree 1.
  int homogeneous_points() const;
  const CatalogEntry* find(const IndecLabel& label) const;

  // Label of an indecomposable, by reflection counting and catalog matching.
  IndecLabel classify(const FqRep& M) const;
  // Label of an indecomposable by direct matching against entries of equal dimension.
  IndecLabel lookup(const FqRep& M) const;
  Fingerprint identify(const FqRep& M) const;
  FqRep realize(const Fingerprint& fp) const;
  bool is_aperiodic(const Fingerprint& fp) const;

  int hom(const IndecLabel& a, const IndecLabel& b) const;
  int end_dim(const Fingerprint& fp) const;
  BigInt aut_order(const Fingerprint& fp) const;
  BigInt gv_order(const DimVec& nu) const;
  int ev_dim(const DimVec& nu) const;

  // One representative per G_V-orbit of E_V(GF(q)), in a fixed order.
  const std::vector<Orbit>& orbits(const DimVec& nu) const;
  const Orbit& orbit(const DimVec& nu, const std::string& key) const;
  // Sum of orbit sizes equals q^dim E_V.
  bool orbits_complete(const DimVec& nu) const;

 private:
  QuiverPtr quiver_;
  int q_;
  DimVec bound_;
  DimVec homog_bound_;
  std::vector<CatalogEntry> entries_;
  std::vector<TubeInfo> tubes_;
  std::map<IndecLabel, std::size_t> by_label_;
  std::map<DimVec, std::vector<std::size_t>> by_dims_;

  mutable std::recursive_mutex mu_;
  mutable std::map<std::string, Fingerprint> identify_memo_;
  mutable std::map<std::pair<std::size_t, std::size_t>, int> hom_memo_;
  mutable std::map<DimVec, std::unique_ptr<std::vector<Orbit>>> orbit_memo_;
  mutable std::map<DimVec, std::map<std::string, std::size_t>> orbit_index_;

  void add(IndecLabel label, FqRep rep, int top_degree);
  void build_preprojectives();
  void build_preinjectives();
  void build_regular();
  void build_tubes();
  void build_homogeneous();
};

using CatalogPtr = std::shared_ptr<const Catalog>;

}  // namespace ah
