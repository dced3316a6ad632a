#pragma once

#include "affine_hall/catalog.hpp"
#include "affine_hall/ring.hpp"

#include <functional>
#include <string>
#include <vector>

namespace ah {

struct WordEntry {
  int mult = 1;
  int vertex = 0;
  friend bool operator==(const WordEntry&, const WordEntry&) = default;
  friend auto operator<=>(const WordEntry&, const WordEntry&) = default;
};

// s = (s_1 i_1, ..., s_n i_n). Entry 1 is the top quotient V / V^1 of a flag.
struct Word {
  std::vector<WordEntry> entries;

  DimVec weight(int num_vertices) const;
  bool empty() const { return entries.empty(); }
  std::size_t size() const { return entries.size(); }
  friend Word operator+(const Word& a, const Word& b);
  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;
};

// "2*i,1*j" with vertex names; the empty word is "".
std::string word_str(const Quiver& Q, const Word& s);
Word parse_word(const Quiver& Q, const std::string& text);

struct FlagDims {
  int flag = 0;    // dim F_s
  int stable = 0;  // dim of the stable flag variety
  int fiber = 0;   // dim of the x stabilizing one flag
};

FlagDims flag_dims(const Quiver& Q, const Word& s);
BigInt flag_count(const Quiver& Q, const Word& s, int q);
// Number of x-stable flags of type s in the representation x.
long long stable_flag_count(const Word& s, const FqRep& x);

// v^-dim(stable) * stable_flag_count at v = sqrt q, one value per orbit of cat.orbits(weight).
std::vector<ScalarSqrtQ> count_function(const Word& s, const Catalog& cat);
std::vector<long long> raw_counts(const Word& s, const Catalog& cat);
// Sum over all points of E_V(F_q) of the stable flag count, via orbit sizes.
BigInt stable_flag_total(const Word& s, const Catalog& cat);

// Point counts as polynomials in q from an explicit cell decomposition of F_s; the stable
// variety polynomial multiplies each cell by q^(dim of x stabilizing the cell's base flag),
// with that dimension computed by linear algebra.
struct FlagPolys {
  RatPoly flag;
  RatPoly stable;
};
FlagPolys flag_cell_polynomials(const Quiver& Q, const Word& s);

// Calls f(bases) for every x-stable graded subspace of M with dimension vector d.
void for_each_stable_subspace(const FqRep& M, const DimVec& d, const std::function<void(const std::vector<Mat>&)>& f);

}  // namespace ah
