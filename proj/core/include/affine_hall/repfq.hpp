#pragma once

#include "affine_hall/matrix.hpp"
#include "affine_hall/quiver.hpp"

#include <random>
#include <string>
#include <vector>

namespace ah {

// One matrix per vertex; a morphism M -> N has blocks of shape dim N_i x dim M_i.
using Morphism = std::vector<Mat>;

// Representation (V, x) of a quiver over GF(q). mats[h] has shape dim V_t(h) x dim V_s(h).
class FqRep {
 public:
  FqRep() = default;
  FqRep(QuiverPtr quiver, int q, DimVec dims, std::vector<Mat> mats);

  static FqRep zero(QuiverPtr quiver, int q, DimVec dims);
  static FqRep simple(QuiverPtr quiver, int q, int i);
  static FqRep random(QuiverPtr quiver, int q, DimVec dims, std::mt19937_64& rng);

  const QuiverPtr& quiver_ptr() const { return quiver_; }
  const Quiver& quiver() const { return *quiver_; }
  int q() const { return q_; }
  const Field& field() const { return Field::get(q_); }
  const DimVec& dims() const { return dims_; }
  int dim(int i) const { return dims_[i]; }
  int total_dim() const { return dv_total(dims_); }
  const std::vector<Mat>& mats() const { return mats_; }
  const Mat& mat(int h) const { return mats_[h]; }
  bool is_zero() const { return total_dim() == 0; }

  // Sub- and quotient representations for x-stable per-vertex subspaces given by column bases.
  FqRep restrict_to(const std::vector<Mat>& bases) const;
  FqRep quotient_by(const std::vector<Mat>& bases) const;
  bool is_stable(const std::vector<Mat>& bases) const;
  // g . x with g invertible per vertex: x_h -> g_t x_h g_s^-1.
  FqRep conjugate(const Morphism& g) const;
  FqRep with_quiver(QuiverPtr quiver) const;

  // Exact content key (dims and entries); equal keys mean equal matrices.
  std::string key() const;
  std::string str() const;

  friend bool operator==(const FqRep& a, const FqRep& b);

 private:
  QuiverPtr quiver_;
  int q_ = 0;
  DimVec dims_;
  std::vector<Mat> mats_;
};

FqRep direct_sum(const FqRep& a, const FqRep& b);
FqRep direct_sum(const std::vector<FqRep>& parts, const QuiverPtr& quiver, int q);
FqRep power(const FqRep& a, int k);

// Shared, structurally unique quiver instances (reflections produce these).
QuiverPtr intern_quiver(const Quiver& Q);
QuiverPtr reflected_quiver(const QuiverPtr& Q, int i);

std::vector<Morphism> hom_basis(const FqRep& M, const FqRep& N);
int hom_dim(const FqRep& M, const FqRep& N);
int ext_dim(const FqRep& M, const FqRep& N);
// The middle term of a non-split extension 0 -> U -> E -> W -> 0 (first class outside Im b).
// Throws domain_error if Ext(W, U) = 0.
FqRep nonsplit_extension(const FqRep& W, const FqRep& U);

Morphism morphism_combination(const Field& F, const std::vector<Morphism>& basis, const std::vector<Elt>& c);
bool morphism_invertible(const Field& F, const Morphism& f);
bool morphism_nilpotent(const Field& F, const Morphism& f);

struct Summand {
  FqRep rep;
  int mult = 1;
};

// Krull-Schmidt decomposition; pieces are grouped up to isomorphism.
std::vector<Summand> decompose(const FqRep& M);
bool is_indecomposable(const FqRep& M);
bool isomorphic_indecomposables(const FqRep& A, const FqRep& B);
bool is_isomorphic(const FqRep& M, const FqRep& N);
// Number of indecomposables accepted as local without a full enumeration of End.
long long probabilistic_local_accepts();

// Phi_i^+ (sign > 0, i a sink) or Phi_i^- (sign < 0, i a source). Result lives on sigma_i Q.
FqRep bgp_reflect(int i, int sign, const FqRep& M);
// The largest summand of M isomorphic to a power of S_i (i a sink or source).
FqRep simple_part(const FqRep& M, int i);
// Phi^+ (sign > 0) or Phi^- (sign < 0) along the admissible order.
FqRep coxeter(const FqRep& M, int sign);

}  // namespace ah
