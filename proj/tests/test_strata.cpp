#include "affine_hall/hall.hpp"
#include "affine_hall/monomials.hpp"
#include "affine_hall/strata.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace ah;

namespace {

Fingerprint fp(std::initializer_list<std::pair<IndecLabel, int>> xs) {
  Fingerprint f;
  for (auto& [l, m] : xs) f[l] = m;
  return f;
}

StratumIndex idx(Fingerprint a, std::vector<int> lam) { return {std::move(a), Partition(std::move(lam))}; }

// Indices seen by sweeping every orbit of E_V(F_q).
std::set<std::pair<Fingerprint, Partition>> classified(const Catalog& cat, const DimVec& nu) {
  std::set<std::pair<Fingerprint, Partition>> out;
  for (const auto& o : cat.orbits(nu)) {
    const PointClass pc = classify_point(cat, o.fp);
    if (pc.in_stratum()) out.insert({pc.a, pc.level_partition});
  }
  return out;
}

}  // namespace

TEST_CASE("Kronecker index sets") {
  const auto K = test::kronecker();
  Catalog cat(K, 2, {2, 2});
  const auto d1 = enumerate_delta(cat, {1, 1});
  REQUIRE(d1.size() == 2);
  const std::set<StratumIndex> want{idx(fp({{preprojective(0), 1}, {preinjective(1), 1}}), {}), idx({}, {1})};
  CHECK(std::set<StratumIndex>(d1.begin(), d1.end()) == want);
  CHECK(enumerate_delta(cat, {2, 2}).size() == 6);
  const auto d0 = enumerate_delta(cat, {0, 0});
  REQUIRE(d0.size() == 1);
  CHECK(d0[0] == StratumIndex{});
}

TEST_CASE("index sets agree with point classification") {
  for (const auto& [Q, nus] : {std::pair{test::kronecker(), std::vector<DimVec>{{1, 1}, {2, 2}}},
                               std::pair{test::a2_affine(), std::vector<DimVec>{{1, 1, 1}, {2, 1, 1}}}})
    for (int q : {2, 3})
      for (const auto& nu : nus) {
        Catalog cat(Q, q, nu);
        std::set<std::pair<Fingerprint, Partition>> enumerated;
        for (const auto& s : enumerate_delta(cat, nu)) enumerated.insert({s.a, s.lam});
        CHECK(enumerated == classified(cat, nu));
      }
}

TEST_CASE("A2~ index sets respect aperiodicity") {
  Catalog cat(test::a2_affine(), 2, {2, 2, 2});
  for (const auto& s : enumerate_delta(cat, {2, 2, 2})) {
    Fingerprint tube;
    for (const auto& [l, m] : s.a)
      if (l.kind == IndecLabel::Kind::RegularInhomog) tube[l] = m;
      else CHECK(l.discrete());
    if (!tube.empty()) CHECK(cat.is_aperiodic(tube));
    CHECK(dv_add(discrete_weight(cat, s.a), dv_scale(s.m(), cat.quiver().delta())) == DimVec{2, 2, 2});
  }
}

TEST_CASE("point classification") {
  const auto K = test::kronecker();
  Catalog cat(K, 3, {2, 2});
  const PointClass zero = classify_point(cat, FqRep::zero(K, 3, {1, 1}));
  CHECK(zero.a == fp({{preprojective(0), 1}, {preinjective(1), 1}}));
  CHECK(zero.m == 0);
  CHECK(zero.split);

  std::vector<IndecLabel> simples, level1;
  for (const auto& e : cat.entries())
    if (e.label.kind == IndecLabel::Kind::RegularHomog && e.label.degree == 1) (e.label.level == 0 ? simples : level1).push_back(e.label);
  REQUIRE(simples.size() == 4);
  REQUIRE_FALSE(level1.empty());
  const PointClass two = classify_point(cat, fp({{simples[0], 1}, {simples[1], 1}}));
  CHECK(two.level_partition == Partition({1, 1}));
  CHECK(two.split);
  const PointClass thick = classify_point(cat, fp({{level1[0], 1}}));
  CHECK(thick.level_partition == Partition({2}));
  CHECK_FALSE(thick.split);
  CHECK(thick.in_stratum());
  const PointClass repeated = classify_point(cat, fp({{simples[0], 2}}));
  CHECK_FALSE(repeated.in_stratum());
}

TEST_CASE("stratum counts") {
  const auto K = test::kronecker();
  Catalog cat(K, 2, {1, 1});
  CHECK(stratum_count(cat, {1, 1}, fp({{preprojective(0), 1}, {preinjective(1), 1}}), 0) == 1);
  CHECK(stratum_count(cat, {1, 1}, {}, 1) == 3);
}

TEST_CASE("property: strata and excluded points partition E_V") {
  for (const auto& [Q, nu] : {std::pair{test::kronecker(), DimVec{2, 2}}, std::pair{test::a2_affine(), DimVec{2, 2, 2}}})
    for (int q : {2, 3}) {
      if (!Q->is_kronecker() && q == 3) continue;
      Catalog cat(Q, q, nu);
      std::set<std::pair<Fingerprint, int>> supports;
      for (const auto& s : enumerate_delta(cat, nu)) supports.insert({s.a, s.m()});
      BigInt total = 0, outside = 0;
      for (const auto& [a, m] : supports) total += stratum_count(cat, nu, a, m);
      for (const auto& o : cat.orbits(nu))
        if (!classify_point(cat, o.fp).in_stratum()) outside += o.size;
      CHECK(total + outside == boost::multiprecision::pow(BigInt(q), cat.ev_dim(nu)));
    }
}

TEST_CASE("property: stratum dimension is the monomial shift") {
  const auto K = test::kronecker();
  for (const DimVec& nu : {DimVec{1, 1}, DimVec{2, 2}}) {
    std::vector<std::shared_ptr<Catalog>> cats;
    for (int q : {2, 3, 4, 5}) cats.push_back(std::make_shared<Catalog>(K, q, nu));
    for (const auto& s : enumerate_delta(*cats[0], nu)) {
      const RatPoly P = stratum_polynomial(*cats[0], s.a, s.m());
      std::vector<std::pair<long long, BigInt>> pts;
      for (const auto& c : cats) {
        const BigInt n = stratum_count(*c, nu, s.a, s.m());
        CHECK(P.eval(c->q()) == Rational(n));
        pts.emplace_back(c->q(), n);
      }
      CHECK(P.degree() == build_plan(*cats[0], s).expected_shift);
      const Interpolation fit = interpolate(pts, 3);
      if (P.degree() <= 3) CHECK(fit.poly == P);
    }
  }
}

TEST_CASE("order examples") {
  const auto K = test::kronecker();
  ClosureOracle O(K, {1, 1});
  const StratumIndex split = idx(fp({{preprojective(0), 1}, {preinjective(1), 1}}), {});
  const StratumIndex reg = idx({}, {1});
  CHECK(O.order(split, split) == Order::Equal);
  CHECK(O.order(split, reg) == Order::Less);
  CHECK(O.order(reg, split) == Order::Greater);

  ClosureOracle O2(K, {2, 2});
  CHECK(O2.order(idx({}, {2}), idx({}, {1, 1})) == Order::Less);
  CHECK(O2.order(idx({}, {1, 1}), idx({}, {2})) == Order::Greater);
}

TEST_CASE("property: the order is a strict partial order") {
  for (const auto& [Q, nu] : {std::pair{test::kronecker(), DimVec{1, 1}}, std::pair{test::kronecker(), DimVec{2, 2}},
                              std::pair{test::a2_affine(), DimVec{1, 1, 1}}, std::pair{test::a2_affine(), DimVec{2, 2, 2}}}) {
    ClosureOracle O(Q, nu);
    const auto D = enumerate_delta(O.catalog(), nu);
    const std::size_t n = D.size();
    std::vector<std::vector<Order>> M(n, std::vector<Order>(n));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) M[a][b] = O.order(D[a], D[b]);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        CHECK((M[a][b] == Order::Equal) == (a == b));
        if (M[a][b] == Order::Less) CHECK(M[b][a] == Order::Greater);
        for (std::size_t c = 0; c < n; ++c)
          if (M[a][b] == Order::Less && M[b][c] == Order::Less) CHECK(M[a][c] == Order::Less);
      }
  }
}

// Containments between different supports need a witness. When the bigger support has no
// homogeneous part its generic point is rigid and a chain of extensions must reach X; with a
// homogeneous part Y is one member of a family, so only the dimension drop is checked.
TEST_CASE("property: closure containments are witnessed") {
  for (const auto& [Q, nu] : {std::pair{test::kronecker(), DimVec{2, 2}}, std::pair{test::a2_affine(), DimVec{1, 1, 1}},
                              std::pair{test::a2_affine(), DimVec{2, 1, 1}}}) {
    ClosureOracle O(Q, nu);
    const Catalog& cat = O.catalog();
    std::set<std::pair<Fingerprint, int>> supports;
    for (const auto& s : enumerate_delta(cat, nu)) supports.insert({s.a, s.m()});
    for (const auto& [a, m] : supports)
      for (const auto& [b, mb] : supports) {
        if (std::tie(a, m) == std::tie(b, mb) || !O.contained(a, m, b, mb)) continue;
        CHECK(stratum_polynomial(cat, a, m).degree() < stratum_polynomial(cat, b, mb).degree());
        if (mb == 0) {
          const auto [X, Y] = O.witness(a, m, b, mb);
          CHECK(degenerates_by_extensions(cat, Y, X));
        }
      }
  }
}
