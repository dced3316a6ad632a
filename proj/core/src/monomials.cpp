#include "affine_hall/monomials.hpp"

#include "affine_hall/errors.hpp"

#include <algorithm>
#include <functional>

namespace ah {

Word seq_alpha(const Quiver& Q, const DimVec& alpha) {
  if (static_cast<int>(alpha.size()) != Q.num_vertices()) throw domain_error("seq_alpha: dimension vector of wrong length");
  const auto& order = Q.admissible_order();
  Word w;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (alpha[*it] < 0) throw domain_error("seq_alpha: negative entry");
    if (alpha[*it] > 0) w.entries.push_back({alpha[*it], *it});
  }
  return w;
}

namespace {

DimVec fp_dims(const Catalog& cat, const Fingerprint& fp) {
  DimVec d = cat.quiver().zero();
  for (const auto& [lab, m] : fp) {
    const CatalogEntry* e = cat.find(lab);
    if (!e) throw domain_error("label not in catalog: " + lab.str());
    d = dv_add(d, dv_scale(m, e->rep.dims()));
  }
  return d;
}

int hom_fp(const Catalog& cat, const IndecLabel& n, const Fingerprint& x) {
  int h = 0;
  for (const auto& [lab, m] : x) h += m * cat.hom(n, lab);
  return h;
}

// y lies in the orbit closure of x: hom(N, y) >= hom(N, x) for every catalog indecomposable N.
bool in_closure(const Catalog& cat, const Fingerprint& y, const Fingerprint& x) {
  for (const auto& e : cat.entries())
    if (hom_fp(cat, e.label, y) < hom_fp(cat, e.label, x)) return false;
  return true;
}

}  // namespace

Word tube_word(const Catalog& cat, const Fingerprint& M, int max_blocks) {
  if (M.empty()) return {};
  int tube = -1;
  for (const auto& [lab, m] : M) {
    if (lab.kind != IndecLabel::Kind::RegularInhomog) throw domain_error("tube_word: " + lab.str() + " is not an inhomogeneous tube module");
    if (tube >= 0 && lab.tube != tube) throw domain_error("tube_word: summands from different tubes");
    tube = lab.tube;
  }
  if (!cat.is_aperiodic(M)) throw domain_error("tube_word: tube part is not aperiodic");
  const Quiver& Q = cat.quiver();
  const TubeInfo& T = cat.tubes().at(tube - 1);
  const DimVec target = fp_dims(cat, M);
  const auto& orbits = cat.orbits(target);
  const std::string mkey = fp_str(M);

  auto good = [&](const Word& w) {
    const auto raw = raw_counts(w, cat);
    for (std::size_t k = 0; k < orbits.size(); ++k) {
      if (orbits[k].key == mkey) {
        if (raw[k] != 1) return false;
      } else if (raw[k] != 0 && !in_closure(cat, orbits[k].fp, M)) {
        return false;
      }
    }
    return true;
  };

  // Blocks seq_alpha(k |S_r|), searched by number of blocks, then lexicographically.
  std::vector<DimVec> simples;
  for (const auto& s : T.simples) simples.push_back(s.dims());
  std::vector<DimVec> blocks;
  std::function<bool(int, const DimVec&, Word&)> dfs = [&](int left, const DimVec& used, Word& w) -> bool {
    if (used == target) return good(w);
    if (left == 0) return false;
    for (const auto& s : simples)
      for (int k = 1;; ++k) {
        DimVec next = dv_add(used, dv_scale(k, s));
        if (!dv_leq(next, target)) break;
        Word extended = w + seq_alpha(Q, dv_scale(k, s));
        if (dfs(left - 1, next, extended)) {
          w = extended;
          return true;
        }
      }
    return false;
  };
  for (int n = 1; n <= max_blocks; ++n) {
    Word w;
    if (dfs(n, Q.zero(), w)) return w;
  }
  throw resource_error("tube_word: no word with at most " + std::to_string(max_blocks) + " blocks for " + mkey);
}

SequencePlan build_plan(const Catalog& cat, const StratumIndex& idx, int max_tube_blocks) {
  const Quiver& Q = cat.quiver();
  SequencePlan plan;
  plan.index = idx;
  std::vector<std::pair<int, DimVec>> pre, post;
  std::map<int, Fingerprint> tubes;
  for (const auto& [lab, m] : idx.a) {
    const CatalogEntry* e = cat.find(lab);
    if (!e) throw domain_error("build_plan: label not in catalog: " + lab.str());
    switch (lab.kind) {
      case IndecLabel::Kind::Preprojective: pre.emplace_back(lab.index, dv_scale(m, e->rep.dims())); break;
      case IndecLabel::Kind::Preinjective: post.emplace_back(lab.index, dv_scale(m, e->rep.dims())); break;
      case IndecLabel::Kind::RegularInhomog: tubes[lab.tube][lab] = m; break;
      case IndecLabel::Kind::RegularHomog: throw domain_error("build_plan: homogeneous label in the discrete part");
    }
  }
  // Quotients come first: Hom from later blocks into earlier ones vanishes.
  std::sort(pre.begin(), pre.end());
  std::sort(post.begin(), post.end());
  Word head, tail;
  for (const auto& [i, d] : pre) head = head + seq_alpha(Q, d);
  for (const auto& [t, part] : tubes) head = head + tube_word(cat, part, max_tube_blocks);
  for (const auto& [l, d] : post) tail = tail + seq_alpha(Q, d);

  Word lam;
  for (int p : idx.lam.parts()) lam = lam + seq_alpha(Q, dv_scale(p, Q.delta()));
  plan.monomial_word = head + lam + tail;
  plan.resolution_word = head + (idx.m() > 0 ? seq_alpha(Q, dv_scale(idx.m(), Q.delta())) : Word{}) + tail;
  plan.expected_shift = flag_dims(Q, plan.monomial_word).stable;
  return plan;
}

Report verify_resolution(const Catalog& cat, const ClosureOracle& oracle, const StratumIndex& idx, const Word& word) {
  const Quiver& Q = cat.quiver();
  const DimVec nu = dv_add(discrete_weight(cat, idx.a), dv_scale(idx.m(), Q.delta()));
  if (word.weight(Q.num_vertices()) != nu) throw domain_error("verify_resolution: word weight differs from the stratum weight");
  Report rep;
  const auto& orbits = cat.orbits(nu);
  const auto raw = raw_counts(word, cat);
  int split_points = 0;
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    const PointClass pc = classify_point(cat, orbits[k].fp);
    if (!pc.in_stratum()) continue;
    const bool same = pc.a == idx.a && pc.m == idx.m();
    if (same && pc.split) {
      ++split_points;
      if (raw[k] != 1) rep.fail("count " + std::to_string(raw[k]) + " at split point " + orbits[k].key);
    } else if (!same && !oracle.contained(pc.a, pc.m, idx.a, idx.m()) && raw[k] != 0) {
      rep.fail("count " + std::to_string(raw[k]) + " at " + orbits[k].key + " outside the closure");
    }
  }
  if (split_points == 0) rep.fail("no split point of " + idx.str() + " over GF(" + std::to_string(cat.q()) + ")");
  rep.verdicts.push_back(idx.str() + " word " + word_str(Q, word) + ": " + std::to_string(split_points) + " split points, " +
                         (rep.pass ? "ok" : "failed"));
  return rep;
}

Report verify_resolution(const Catalog& cat, const ClosureOracle& oracle, const StratumIndex& idx, int max_tube_blocks) {
  return verify_resolution(cat, oracle, idx, build_plan(cat, idx, max_tube_blocks).resolution_word);
}

long long diagonal_count(const Partition& lam) { return multinomial(lam); }

long long kostka_dimension_sum(const Partition& lam) {
  long long s = 0;
  for (const auto& [mu, mult] : perm_module_multiplicities(lam)) s += mult * standard_tableaux(mu);
  return s;
}

TriangularityReport verify_triangularity(const HallAlgebra& H, const ClosureOracle& oracle, const DimVec& nu,
                                         int max_tube_blocks) {
  const Catalog& cat = H.catalog();
  const Quiver& Q = cat.quiver();
  TriangularityReport rep;
  rep.strata = enumerate_delta(cat, nu);
  const auto& orbits = cat.orbits(nu);
  const std::size_t n = rep.strata.size();

  // Split representatives per support.
  std::map<std::pair<Fingerprint, int>, std::vector<std::size_t>> split;
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    const PointClass pc = classify_point(cat, orbits[k].fp);
    if (pc.in_stratum() && pc.split) split[{pc.a, pc.m}].push_back(k);
  }

  rep.raw.assign(n, std::vector<long long>(n, 0));
  rep.values.assign(n, std::vector<ScalarSqrtQ>(n, ScalarSqrtQ(cat.q())));
  rep.order.assign(n, std::vector<Order>(n, Order::Incomparable));
  for (std::size_t r = 0; r < n; ++r) {
    const StratumIndex& row = rep.strata[r];
    const SequencePlan plan = build_plan(cat, row, max_tube_blocks);
    const auto raw = raw_counts(plan.monomial_word, cat);
    const auto vals = H.values(H.evaluate_word(plan.monomial_word));
    const ScalarSqrtQ shift = ScalarSqrtQ::v_power(cat.q(), -plan.expected_shift);
    for (std::size_t k = 0; k < orbits.size(); ++k)
      if (vals[k] != shift * ScalarSqrtQ(cat.q(), Rational(raw[k])))
        rep.fail(row.str() + ": evaluate_word and the flag count disagree at " + orbits[k].key);

    for (std::size_t c = 0; c < n; ++c) {
      const StratumIndex& col = rep.strata[c];
      rep.order[r][c] = oracle.order(col, row);
      auto it = split.find({col.a, col.m()});
      if (it == split.end()) {
        rep.fail("no split point of " + col.str() + " over GF(" + std::to_string(cat.q()) + ")");
        continue;
      }
      const std::size_t k0 = it->second.front();
      rep.raw[r][c] = raw[k0];
      rep.values[r][c] = vals[k0];
      for (std::size_t k : it->second)
        if (raw[k] != raw[k0]) rep.fail(row.str() + " is not constant on the split points of " + col.str());
      const bool same_support = col.a == row.a && col.m() == row.m();
      if (raw[k0] != 0 && !same_support && !oracle.contained(col.a, col.m(), row.a, row.m()))
        rep.fail(row.str() + " is nonzero on " + col.str() + ", outside its closure");
      if (r == c) {
        const long long want = diagonal_count(row.lam);
        if (raw[k0] != want)
          rep.fail("diagonal at " + row.str() + " is " + std::to_string(raw[k0]) + ", expected " + std::to_string(want));
        if (kostka_dimension_sum(row.lam) != want) rep.fail("Kostka sum differs from the multinomial at " + row.lam.str());
      }
    }
    rep.verdicts.push_back(row.str() + " word " + word_str(Q, plan.monomial_word) + " shift " + std::to_string(plan.expected_shift));
  }
  return rep;
}

}  // namespace ah
