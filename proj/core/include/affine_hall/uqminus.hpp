#pragma once

#include "affine_hall/flags.hpp"
#include "affine_hall/hall.hpp"
#include "affine_hall/quiver.hpp"
#include "affine_hall/ring.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace ah {

using CartanMatrix = std::vector<std::vector<int>>;

// a_ij = <e_i, e_j> + <e_j, e_i>.
CartanMatrix cartan_of(const Quiver& Q);

// An element of a weight space of U^-, as num / den in the coordinates of that space's basis.
struct UElement {
  DimVec weight;
  std::vector<LaurentInt> num;
  LaurentInt den = 1;

  bool is_zero() const;
  friend bool operator==(const UElement& a, const UElement& b);
};

// Generator words: (vertex, n) stands for the divided power F_i^(n); the Word type of the
// flags module, read left to right, is the same thing.
using UWord = std::vector<std::pair<int, int>>;
UWord to_uword(const Word& w);

class UMinus {
 public:
  explicit UMinus(CartanMatrix cartan, int total_bound = 8);

  int rank() const { return static_cast<int>(a_.size()); }
  const CartanMatrix& cartan() const { return a_; }

  // Plain generator sequences spanning the weight space, and the lex-least greedy basis among them.
  const std::vector<std::vector<int>>& words(const DimVec& weight) const;
  const std::vector<std::vector<int>>& basis(const DimVec& weight) const;
  int dim(const DimVec& weight) const { return static_cast<int>(basis(weight).size()); }

  UElement zero(const DimVec& weight) const;
  UElement normal_form(const UWord& word) const;
  UElement normal_form(const std::vector<int>& plain) const;

  UElement add(const UElement& a, const UElement& b) const;
  UElement scale(const LaurentInt& c, const UElement& a) const;
  UElement multiply(const UElement& a, const UElement& b) const;
  UElement bar(const UElement& a) const;

  // Sum of c_k * normal_form(w_k).
  UElement combination(const std::vector<std::pair<LaurentInt, UWord>>& terms) const;

  // Serre relators with one side i: sum_p (-1)^p F_i^(p) F_j F_i^(n-p), n = 1 - a_ij.
  std::vector<std::pair<LaurentInt, UWord>> serre_relator(int i, int j) const;

 private:
  CartanMatrix a_;
  int total_bound_;

  struct Space {
    std::vector<std::vector<int>> words;
    std::vector<std::vector<int>> basis;
    // Columns F_i b' over basis words b' of the smaller weights, with their normal forms.
    std::vector<std::vector<int>> cols;
    std::map<std::vector<int>, std::size_t> col_index;
    std::vector<std::vector<LaurentInt>> col_num;
    std::vector<LaurentInt> col_den;
    mutable std::map<std::vector<int>, UElement> memo;
  };
  mutable std::recursive_mutex mu_;  // build() recurses into smaller weights
  mutable std::map<DimVec, std::unique_ptr<Space>> spaces_;

  const Space& space(const DimVec& weight) const;
  std::unique_ptr<Space> build(const DimVec& weight) const;
  DimVec weight_of(const std::vector<int>& plain) const;
};

// Coordinates of elements over Q(v), as rows of numerators with per-row denominators.
// Rank over Q(v) by fraction-free elimination.
int rank_qv(std::vector<std::vector<LaurentInt>> rows);

struct Correction {
  bool ok = true;
  std::string message;
  std::vector<UElement> basis;                    // b_k
  std::vector<std::vector<LaurentInt>> coeff;  // b_k = e_k + sum_{l>k} coeff[k][l] e_l
};

// Lusztig's recursion: from a lattice basis e_k of one weight space with
// bar(e_k) in e_k + sum_{l>k} A e_l, the bar-invariant b_k = e_k + sum_{l>k} v^-1 Z[v^-1] e_l.
Correction lusztig_correction(const UMinus& U, const std::vector<UElement>& lattice);

struct Consistency {
  bool ok = true;
  int symbolic_rank = 0;
  int specialized_rank = 0;
  int hall_rank = 0;
  int joint_rank = 0;
  std::string message;
};

// Words of one weight: symbolic normal forms at v = sign * sqrt q and Hall functions must have
// the same linear relations.
Consistency hall_consistency(const UMinus& U, const HallAlgebra& H, const std::vector<Word>& words, int sign = 1);

}  // namespace ah
