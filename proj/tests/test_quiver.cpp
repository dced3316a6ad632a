#include "affine_hall/errors.hpp"
#include "affine_hall/quiver.hpp"
#include "support.hpp"

#include <doctest.h>

#include <set>

using namespace ah;

namespace {

// D4^(1): centre 0 with four leaves pointing in; E6^(1): three arms of length 2 into 0.
QuiverPtr d4() {
  return intern_quiver(Quiver({"0", "1", "2", "3", "4"}, {{1, 0}, {2, 0}, {3, 0}, {4, 0}}));
}
QuiverPtr e6() {
  return intern_quiver(Quiver({"0", "1", "2", "3", "4", "5", "6"}, {{1, 0}, {2, 1}, {3, 0}, {4, 3}, {5, 0}, {6, 5}}));
}

std::vector<QuiverPtr> all_quivers() { return {test::kronecker(), test::a2_affine(), d4(), e6()}; }

}  // namespace

TEST_CASE("Kronecker forms") {
  const auto K = test::kronecker();
  CHECK(K->symmetric_form({1, 0}, {0, 1}) == -2);
  CHECK(K->symmetric_form(K->delta(), K->delta()) == 0);
  CHECK(K->symmetric_form({2, 1}, {2, 1}) == 2);
  CHECK(K->euler_form(K->delta(), K->delta()) == 0);
  CHECK(K->euler_form({1, 0}, {1, 0}) == 1);
  CHECK(K->euler_form({0, 1}, {1, 0}) == -2);
  CHECK(K->euler_form({1, 0}, {0, 1}) == 0);
}

TEST_CASE("Kronecker roots below (2,2)") {
  const auto K = test::kronecker();
  std::set<std::pair<DimVec, bool>> got;
  for (const auto& r : K->positive_roots({2, 2})) got.insert({r.dim, r.real});
  const std::set<std::pair<DimVec, bool>> want{{{1, 0}, true},  {{0, 1}, true},  {{1, 1}, false},
                                               {{2, 1}, true},  {{1, 2}, true},  {{2, 2}, false}};
  CHECK(got == want);
  for (const auto& r : K->positive_roots({3, 3})) CHECK(r.dim != DimVec{3, 1});
}

TEST_CASE("reflections") {
  const auto K = test::kronecker();
  CHECK(K->reflect(0, {1, 0}) == DimVec{-1, 0});
  CHECK(K->reflect(0, {0, 1}) == DimVec{2, 1});
  for (const auto& Q : all_quivers())
    for (int i = 0; i < Q->num_vertices(); ++i) CHECK(Q->reflect(i, Q->delta()) == Q->delta());
}

TEST_CASE("type detection and delta") {
  CHECK(test::kronecker()->affine_type() == "A1");
  CHECK(test::a2_affine()->affine_type() == "A2");
  CHECK(d4()->affine_type() == "D4");
  CHECK(e6()->affine_type() == "E6");
  CHECK(d4()->delta() == DimVec{2, 1, 1, 1, 1});
  CHECK(e6()->delta() == DimVec{3, 2, 1, 2, 1, 2, 1});
  for (const auto& Q : all_quivers()) {
    // delta is the smallest imaginary root, and every imaginary root below 2 delta is a multiple.
    const DimVec two = dv_scale(2, Q->delta());
    std::vector<DimVec> imag;
    for (const auto& r : Q->positive_roots(two))
      if (!r.real) imag.push_back(r.dim);
    CHECK(imag == std::vector<DimVec>{Q->delta(), two});
    for (int v : Q->extending_vertices()) CHECK(Q->delta()[v] == 1);
  }
}

TEST_CASE("admissible order") {
  CHECK(test::kronecker()->admissible_order() == std::vector<int>{0, 1});
  CHECK(test::a2_affine()->admissible_order().front() == 0);
  for (const auto& Q : all_quivers()) {
    const auto& order = Q->admissible_order();
    CHECK(order.size() == static_cast<std::size_t>(Q->num_vertices()));
    Quiver cur = *Q;
    for (int i : order) {
      CHECK(cur.is_sink(i));
      cur = cur.reflected_at(i);
    }
    CHECK(cur == *Q);
    CHECK(Q->is_source(order.back()));
  }
}

TEST_CASE("oriented cycle is unsupported") {
  const Quiver cyc({"0", "1", "2"}, {{0, 1}, {1, 2}, {2, 0}});
  CHECK_FALSE(cyc.acyclic());
  CHECK_THROWS_AS(cyc.admissible_order(), unsupported_error);
}

TEST_CASE("parse errors carry a location") {
  CHECK_THROWS_AS(Quiver::from_json("{\"vertices\": [\"0\", \"1\"], \"arrows\": [[\"1\", \"0\"]"), parse_error);
  try {
    Quiver::from_json("{\"vertices\": [\"0\", \"1\"], \"arrows\": [[\"1\", \"7\"]]}");
    FAIL("unknown vertex accepted");
  } catch (const parse_error& e) {
    CHECK(std::string(e.what()).find("arrows") != std::string::npos);
  }
  CHECK_THROWS(Quiver::load("/nonexistent/quiver.json"));
  // A wild graph: three arrows between two vertices.
  CHECK_THROWS_AS(Quiver({"0", "1"}, {{1, 0}, {1, 0}, {1, 0}}), unsupported_error);
}

TEST_CASE("property: symmetric form is the symmetrized Euler form") {
  std::mt19937_64 rng(3);
  for (const auto& Q : all_quivers())
    for (int t = 0; t < 100; ++t) {
      const DimVec a = test::random_signed(rng, Q->num_vertices(), 3);
      const DimVec b = test::random_signed(rng, Q->num_vertices(), 3);
      CHECK(Q->symmetric_form(a, b) == Q->euler_form(a, b) + Q->euler_form(b, a));
      CHECK(Q->symmetric_form(a, b) == Q->symmetric_form(b, a));
    }
}

TEST_CASE("property: reflections are form-preserving involutions") {
  std::mt19937_64 rng(5);
  for (const auto& Q : all_quivers())
    for (int t = 0; t < 100; ++t) {
      const DimVec a = test::random_signed(rng, Q->num_vertices(), 3);
      const DimVec b = test::random_signed(rng, Q->num_vertices(), 3);
      const int i = test::uniform(rng, 0, Q->num_vertices() - 1);
      CHECK(Q->reflect(i, Q->reflect(i, a)) == a);
      CHECK(Q->symmetric_form(Q->reflect(i, a), Q->reflect(i, b)) == Q->symmetric_form(a, b));
    }
}

TEST_CASE("json round trip and hash") {
  for (const auto& Q : all_quivers()) {
    const Quiver back = Quiver::from_json(Q->to_json());
    CHECK(back == *Q);
    CHECK(back.hash() == Q->hash());
  }
  CHECK(test::kronecker()->hash() != test::a2_affine()->hash());
}
