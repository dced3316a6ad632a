#include "affine_hall/catalog.hpp"
#include "affine_hall/embed.hpp"
#include "affine_hall/errors.hpp"
#include "affine_hall/repfq.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace ah;

namespace {

FqRep kron_rep(int q, const Mat& a, const Mat& b) {
  return FqRep(test::kronecker(), q, {a.rows, a.cols}, {a, b});
}

Mat m11(int x) {
  Mat m(1, 1);
  m(0, 0) = static_cast<Elt>(x);
  return m;
}

Morphism random_invertible(std::mt19937_64& rng, const FqRep& M) {
  const Field& F = M.field();
  Morphism g;
  for (int i = 0; i < M.quiver().num_vertices(); ++i) {
    Mat m(M.dim(i), M.dim(i));
    do
      for (auto& e : m.a) e = static_cast<Elt>(rng() % F.q());
    while (!is_invertible(F, m));
    g.push_back(m);
  }
  return g;
}

std::vector<const CatalogEntry*> entries_of(const Catalog& cat, IndecLabel::Kind kind) {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : cat.entries())
    if (e.label.kind == kind) out.push_back(&e);
  return out;
}

}  // namespace

TEST_CASE("hom and ext of Kronecker simples") {
  const auto K = test::kronecker();
  for (int q : {2, 3}) {
    const FqRep Si = FqRep::simple(K, q, 0), Sj = FqRep::simple(K, q, 1);
    CHECK(hom_dim(Sj, Si) == 0);
    CHECK(ext_dim(Sj, Si) == 2);
    CHECK(hom_dim(Si, Sj) == 0);
    CHECK(ext_dim(Si, Sj) == 0);
    CHECK(hom_dim(Si, Si) == 1);
  }
  CHECK_THROWS_AS(hom_dim(FqRep::simple(K, 2, 0), FqRep::simple(K, 3, 0)), std::domain_error);
}

TEST_CASE("property: Euler identity on random pairs") {
  std::mt19937_64 rng(17);
  for (const auto& Q : {test::kronecker(), test::a2_affine()})
    for (int q : {2, 3})
      for (int t = 0; t < 100; ++t) {
        const FqRep M = test::random_rep(rng, Q, q, 2), N = test::random_rep(rng, Q, q, 2);
        CHECK(hom_dim(M, N) - ext_dim(M, N) == Q->euler_form(M.dims(), N.dims()));
        CHECK(hom_dim(M, M) >= 1);
      }
}

TEST_CASE("decompose examples") {
  const auto K = test::kronecker();
  const FqRep Si = FqRep::simple(K, 2, 0);
  const auto two = decompose(direct_sum(Si, Si));
  REQUIRE(two.size() == 1);
  CHECK(two[0].mult == 2);
  CHECK(two[0].rep.dims() == DimVec{1, 0});
  const auto one = decompose(kron_rep(2, m11(1), m11(0)));
  REQUIRE(one.size() == 1);
  CHECK(one[0].mult == 1);
  CHECK(one[0].rep.dims() == DimVec{1, 1});
  CHECK(decompose(FqRep::zero(K, 2, {0, 0})).empty());
  CHECK(probabilistic_local_accepts() == 0);
}

TEST_CASE("isomorphism examples") {
  const FqRep x = kron_rep(3, m11(1), m11(0)), y = kron_rep(3, m11(0), m11(1));
  CHECK(is_isomorphic(x, x));
  CHECK_FALSE(is_isomorphic(x, y));
  CHECK(is_isomorphic(x, kron_rep(3, m11(2), m11(0))));
}

TEST_CASE("BGP reflections") {
  const auto K = test::kronecker();
  CHECK(bgp_reflect(0, 1, FqRep::simple(K, 2, 0)).is_zero());
  CHECK_THROWS_AS(bgp_reflect(1, 1, FqRep::simple(K, 2, 0)), std::domain_error);
  Catalog cat(K, 2, {3, 3});
  const CatalogEntry* P1 = cat.find(preprojective(1));
  REQUIRE(P1);
  CHECK(P1->rep.dims() == DimVec{2, 1});
  CHECK(bgp_reflect(0, 1, P1->rep).dims() == DimVec{0, 1});
}

TEST_CASE("property: M = Phi- Phi+ M + M(i) at every sink") {
  std::mt19937_64 rng(23);
  for (const auto& Q : {test::kronecker(), test::a2_affine()})
    for (int i = 0; i < Q->num_vertices(); ++i) {
      if (!Q->is_sink(i)) continue;
      for (int t = 0; t < 100; ++t) {
        const FqRep M = test::random_rep(rng, Q, t % 2 ? 3 : 2, 2);
        const FqRep back = bgp_reflect(i, -1, bgp_reflect(i, 1, M)).with_quiver(Q);
        CHECK(is_isomorphic(M, direct_sum(back, simple_part(M, i))));
      }
    }
}

TEST_CASE("Coxeter functors on catalog modules") {
  for (const auto& Q : {test::kronecker(), test::a2_affine()}) {
    Catalog cat(Q, 2, dv_scale(2, Q->delta()));
    for (const auto* e : entries_of(cat, IndecLabel::Kind::Preprojective)) {
      FqRep M = e->rep;
      for (int k = 0; k <= e->label.index / Q->num_vertices(); ++k) M = coxeter(M, 1);
      CHECK(M.is_zero());
    }
    for (const auto& e : cat.entries()) {
      if (e.label.kind == IndecLabel::Kind::RegularHomog || e.label.kind == IndecLabel::Kind::RegularInhomog)
        CHECK(is_isomorphic(coxeter(coxeter(e.rep, 1), -1), e.rep));
      if (e.label.kind == IndecLabel::Kind::RegularHomog && e.label.level == 0 && e.label.degree == 1)
        CHECK(is_isomorphic(coxeter(e.rep, 1), e.rep));
    }
  }
}

TEST_CASE("classification") {
  for (const auto& Q : {test::kronecker(), test::a2_affine()}) {
    Catalog cat(Q, 2, Q->delta());
    const auto& order = Q->admissible_order();
    CHECK(cat.classify(FqRep::simple(Q, 2, order.front())) == preprojective(0));
    CHECK(cat.classify(FqRep::simple(Q, 2, order.back())) == preinjective(static_cast<int>(order.size()) - 1));
  }
  Catalog cat(test::kronecker(), 3, {1, 1});
  CHECK(cat.classify(kron_rep(3, m11(1), m11(1))).kind == IndecLabel::Kind::RegularHomog);
}

TEST_CASE("Kronecker catalog") {
  const auto K = test::kronecker();
  Catalog cat(K, 2, {3, 3});
  std::vector<DimVec> pre;
  for (const auto* e : entries_of(cat, IndecLabel::Kind::Preprojective)) pre.push_back(e->rep.dims());
  CHECK(pre == std::vector<DimVec>{{1, 0}, {2, 1}, {3, 2}});
  CHECK(cat.tubes().empty());
  for (int q : {2, 3, 4, 5}) {
    Catalog c(K, q, {1, 1});
    int simples = 0;
    for (const auto& e : c.entries())
      if (e.label.kind == IndecLabel::Kind::RegularHomog && e.label.level == 0 && e.label.degree == 1) ++simples;
    CHECK(simples == q + 1);
    CHECK(c.homogeneous_points() == q + 1);
  }
}

TEST_CASE("A2~ catalog has one tube of period 2") {
  Catalog cat(test::a2_affine(), 2, {2, 2, 2});
  REQUIRE(cat.tubes().size() == 1);
  CHECK(cat.tubes()[0].period == 2);
  CHECK(cat.tubes().size() <= 3);
  for (int ray = 1; ray <= 2; ++ray) {
    const auto* T = cat.find(tube_module(1, ray, 0));
    REQUIRE(T);
    const int next = ray % 2 + 1;
    CHECK(is_isomorphic(coxeter(T->rep, 1), cat.find(tube_module(1, next, 0))->rep));
  }
}

TEST_CASE("aperiodicity") {
  Catalog cat(test::a2_affine(), 2, {2, 2, 2});
  CHECK(cat.is_aperiodic({{tube_module(1, 1, 0), 1}}));
  CHECK_FALSE(cat.is_aperiodic({{tube_module(1, 1, 0), 1}, {tube_module(1, 2, 0), 1}}));
  CHECK(cat.is_aperiodic({{tube_module(1, 1, 0), 1}, {tube_module(1, 1, 1), 1}}));
  CHECK_THROWS_AS(cat.is_aperiodic({{preprojective(0), 1}}), std::domain_error);
}

TEST_CASE("property: vanishing between the classes") {
  for (const auto& Q : {test::kronecker(), test::a2_affine()}) {
    Catalog cat(Q, 2, Q->delta());
    const auto P = entries_of(cat, IndecLabel::Kind::Preprojective);
    const auto I = entries_of(cat, IndecLabel::Kind::Preinjective);
    auto R = entries_of(cat, IndecLabel::Kind::RegularHomog);
    for (const auto* t : entries_of(cat, IndecLabel::Kind::RegularInhomog)) R.push_back(t);
    for (const auto* p : P) {
      for (const auto* r : R) {
        CHECK(hom_dim(r->rep, p->rep) == 0);
        CHECK(ext_dim(p->rep, r->rep) == 0);
      }
      for (const auto* i : I) {
        CHECK(hom_dim(i->rep, p->rep) == 0);
        CHECK(ext_dim(p->rep, i->rep) == 0);
      }
    }
    for (const auto* i : I)
      for (const auto* r : R) {
        CHECK(hom_dim(i->rep, r->rep) == 0);
        CHECK(ext_dim(r->rep, i->rep) == 0);
      }
    // Different homogeneous tubes, and a homogeneous tube against an inhomogeneous one.
    for (const auto* a : R)
      for (const auto* b : R) {
        const bool same_tube = a->label.kind == b->label.kind &&
                               (a->label.kind == IndecLabel::Kind::RegularHomog ? a->label.param == b->label.param
                                                                               : a->label.tube == b->label.tube);
        if (same_tube) continue;
        CHECK(hom_dim(a->rep, b->rep) == 0);
        CHECK(ext_dim(a->rep, b->rep) == 0);
      }
  }
}

TEST_CASE("property: decompose inverts direct sums") {
  std::mt19937_64 rng(29);
  for (const auto& Q : {test::kronecker(), test::a2_affine()}) {
    const DimVec bound = dv_scale(2, Q->delta());
    Catalog cat(Q, 2, bound);
    for (int t = 0; t < 30; ++t) {
      Fingerprint want;
      DimVec d = Q->zero();
      std::vector<FqRep> parts;
      for (int k = 0; k < 3; ++k) {
        const auto& e = cat.entries()[rng() % cat.entries().size()];
        if (!dv_leq(dv_add(d, e.rep.dims()), bound)) continue;
        d = dv_add(d, e.rep.dims());
        parts.push_back(e.rep);
        want[e.label]++;
      }
      if (parts.empty()) continue;
      const FqRep M = direct_sum(parts, Q, 2);
      const FqRep X = M.conjugate(random_invertible(rng, M));
      CHECK(cat.identify(X) == want);
      // Krull-Schmidt: a second scrambled copy gives the same multiset.
      const FqRep Y = M.conjugate(random_invertible(rng, M));
      std::map<DimVec, int> dx, dy;
      for (const auto& s : decompose(X)) dx[s.rep.dims()] += s.mult;
      for (const auto& s : decompose(Y)) dy[s.rep.dims()] += s.mult;
      CHECK(dx == dy);
      CHECK(is_isomorphic(X, Y));
    }
  }
}

TEST_CASE("Kronecker embeddings") {
  std::mt19937_64 rng(31);
  const auto K = test::kronecker();
  const auto A = test::a2_affine();
  const auto D4in = intern_quiver(Quiver({"0", "1", "2", "3", "4"}, {{1, 0}, {2, 0}, {3, 0}, {4, 0}}));
  const auto D4out = intern_quiver(Quiver({"0", "1", "2", "3", "4"}, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
  CHECK(default_embed_case(*K) == 1);
  CHECK(default_embed_case(*A) == 2);
  CHECK(default_embed_case(*D4out) == 3);
  CHECK(default_embed_case(*D4in) == 4);

  const FqRep Si = FqRep::simple(K, 2, 0), Sj = FqRep::simple(K, 2, 1);
  CHECK(kronecker_embed(1, K, Si) == Si.with_quiver(K));
  CHECK(is_isomorphic(kronecker_embed(2, A, Si), FqRep::simple(A, 2, A->admissible_order()[0])));
  const FqRep phiSj = kronecker_embed(4, D4in, Sj);
  CHECK(dv_total(phiSj.dims()) == 1);
  for (int v = 0; v < 5; ++v)
    if (phiSj.dim(v)) CHECK((D4in->is_source(v) && D4in->delta()[v] == 1));
  CHECK_THROWS_AS(kronecker_embed(2, D4in, Si), std::domain_error);
  CHECK_THROWS_AS(kronecker_embed(3, D4in, Si), std::domain_error);

  for (auto [kase, T] : {std::make_pair(2, A), std::make_pair(3, D4out), std::make_pair(4, D4in)})
    for (int t = 0; t < 10; ++t) {
      const FqRep M = test::random_rep(rng, K, 2, 2), N = test::random_rep(rng, K, 2, 2);
      const FqRep fM = kronecker_embed(kase, T, M), fN = kronecker_embed(kase, T, N);
      CHECK(hom_dim(fM, fN) == hom_dim(M, N));
      CHECK(ext_dim(fM, fN) == ext_dim(M, N));
    }
}
