#pragma once

#include "affine_hall/embed.hpp"
#include "affine_hall/flags.hpp"
#include "affine_hall/hall.hpp"
#include "affine_hall/strata.hpp"

#include <string>
#include <vector>

namespace ah {

// (alpha_{i_n} i_n, ..., alpha_{i_0} i_0) along the admissible order; zero entries dropped.
Word seq_alpha(const Quiver& Q, const DimVec& alpha);

// A word of seq_alpha blocks over multiples of the tube's regular simples whose stable
// count is 1 at M and vanishes off the orbit closure of M. M is the tube part of a
// fingerprint, all of it in one inhomogeneous tube. Throws resource_error past max_blocks.
Word tube_word(const Catalog& cat, const Fingerprint& M, int max_blocks = 6);

struct SequencePlan {
  StratumIndex index;
  Word monomial_word;    // lambda blocks seq_alpha(lambda_k delta)
  Word resolution_word;  // one block seq_alpha(m delta)
  int expected_shift = 0;
};

SequencePlan build_plan(const Catalog& cat, const StratumIndex& idx, int max_tube_blocks = 6);

struct Report {
  bool pass = true;
  std::vector<std::string> verdicts;
  std::vector<std::string> counterexamples;
  void fail(const std::string& why) {
    pass = false;
    counterexamples.push_back(why);
  }
};

// Fiber count 1 at split points of the support of idx and 0 at points of supports outside
// its closure, for the given word (normally the plan's resolution word).
Report verify_resolution(const Catalog& cat, const ClosureOracle& oracle, const StratumIndex& idx, const Word& word);
Report verify_resolution(const Catalog& cat, const ClosureOracle& oracle, const StratumIndex& idx, int max_tube_blocks = 6);

struct TriangularityReport : Report {
  std::vector<StratumIndex> strata;
  std::vector<std::vector<long long>> raw;        // raw stable counts at a split point
  std::vector<std::vector<ScalarSqrtQ>> values;  // evaluate_word values there
  std::vector<std::vector<Order>> order;
};

TriangularityReport verify_triangularity(const HallAlgebra& H, const ClosureOracle& oracle, const DimVec& nu,
                                         int max_tube_blocks = 6);

// m! / prod lambda_j!, and the same number as sum_mu K(mu, lambda) f^mu.
long long diagonal_count(const Partition& lam);
long long kostka_dimension_sum(const Partition& lam);

}  // namespace ah
