#pragma once

#include "affine_hall/catalog.hpp"
#include "affine_hall/flags.hpp"
#include "affine_hall/repfq.hpp"

#include <random>
#include <string>

namespace ah::test {

inline QuiverPtr kronecker() {
  static const QuiverPtr K = intern_quiver(Quiver::load(std::string(AH_DATA_DIR) + "/kronecker.json"));
  return K;
}

// Acyclic A2^(1): 1 -> 0, 2 -> 0, 2 -> 1.
inline QuiverPtr a2_affine() {
  static const QuiverPtr A = intern_quiver(Quiver::load(std::string(AH_DATA_DIR) + "/a2_affine.json"));
  return A;
}

inline int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline DimVec random_dims(std::mt19937_64& rng, int n, int max_entry, bool nonzero = true) {
  DimVec d(n);
  do {
    for (int& x : d) x = uniform(rng, 0, max_entry);
  } while (nonzero && dv_total(d) == 0);
  return d;
}

inline DimVec random_signed(std::mt19937_64& rng, int n, int r) {
  DimVec d(n);
  for (int& x : d) x = uniform(rng, -r, r);
  return d;
}

// Random word of the given weight; adjacent entries may share a vertex.
inline Word random_word(std::mt19937_64& rng, const DimVec& weight) {
  Word w;
  DimVec left = weight;
  while (dv_total(left) > 0) {
    int i;
    do i = uniform(rng, 0, static_cast<int>(left.size()) - 1);
    while (left[i] == 0);
    const int m = uniform(rng, 1, left[i]);
    w.entries.push_back({m, i});
    left[i] -= m;
  }
  return w;
}

inline FqRep random_rep(std::mt19937_64& rng, const QuiverPtr& Q, int q, int max_entry) {
  return FqRep::random(Q, q, random_dims(rng, Q->num_vertices(), max_entry), rng);
}

}  // namespace ah::test
