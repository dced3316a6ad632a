#include "affine_hall/flags.hpp"
#include "affine_hall/hall.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace ah;

namespace {

Word w(std::initializer_list<std::pair<int, int>> entries) {
  Word s;
  for (auto [m, v] : entries) s.entries.push_back({m, v});
  return s;
}

constexpr int I = 0, J = 1;  // Kronecker sink and source

FqRep kron(int q, int a, int b) {
  Mat x(1, 1), y(1, 1);
  x(0, 0) = static_cast<Elt>(a);
  y(0, 0) = static_cast<Elt>(b);
  return FqRep(test::kronecker(), q, {1, 1}, {x, y});
}

// Every word of weight nu, including ones repeating a vertex.
std::vector<Word> all_words(const DimVec& nu) {
  std::vector<Word> out;
  Word cur;
  DimVec left = nu;
  std::function<void()> rec = [&]() {
    if (dv_total(left) == 0) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = 0; i < left.size(); ++i)
      for (int m = 1; m <= left[i]; ++m) {
        cur.entries.push_back({m, static_cast<int>(i)});
        left[i] -= m;
        rec();
        left[i] += m;
        cur.entries.pop_back();
      }
  };
  rec();
  return out;
}

}  // namespace

TEST_CASE("flag dimensions") {
  const auto K = test::kronecker();
  CHECK(flag_dims(*K, w({{1, I}, {1, I}})).flag == 1);
  const FlagDims d = flag_dims(*K, w({{1, J}, {1, I}}));
  CHECK(d.flag == 0);
  CHECK(d.fiber == 2);
  CHECK(flag_dims(*K, w({{3, I}})).flag == 0);
}

TEST_CASE("flag counts") {
  const auto K = test::kronecker();
  CHECK(flag_count(*K, w({{1, I}, {1, I}}), 2) == 3);
  for (int q : {2, 3, 4, 5}) {
    CHECK(flag_count(*K, w({{1, J}, {1, I}}), q) == 1);
    CHECK(flag_count(*K, w({{2, I}}), q) == 1);
    CHECK(flag_count(*K, w({{1, I}, {1, I}}), q) == q + 1);
  }
}

TEST_CASE("stable flag counts at points") {
  for (int q : {2, 3}) {
    for (auto [a, b] : {std::pair{1, 0}, {0, 1}, {1, 1}}) {
      CHECK(stable_flag_count(w({{1, J}, {1, I}}), kron(q, a, b)) == 1);
      CHECK(stable_flag_count(w({{1, I}, {1, J}}), kron(q, a, b)) == 0);
    }
    const auto K = test::kronecker();
    for (const Word& s : all_words({2, 2}))
      CHECK(stable_flag_count(s, FqRep::zero(K, q, {2, 2})) == flag_count(*K, s, q));
  }
}

TEST_CASE("count function of a single entry is the constant function") {
  const auto K = test::kronecker();
  Catalog cat(K, 3, {3, 0});
  const Word s = w({{3, I}});
  const auto vals = count_function(s, cat);
  REQUIRE(vals.size() == 1);
  CHECK(vals[0] == ScalarSqrtQ::v_power(3, -flag_dims(*K, s).stable));
}

TEST_CASE("property: stable total fibers over the flag variety") {
  for (const auto& Q : {test::kronecker(), test::a2_affine()}) {
    const DimVec nu = Q->is_kronecker() ? DimVec{2, 2} : Q->delta();
    for (int q : {2, 3}) {
      Catalog cat(Q, q, nu);
      for (const Word& s : all_words(nu)) {
        const FlagDims d = flag_dims(*Q, s);
        CHECK(stable_flag_total(s, cat) == flag_count(*Q, s, q) * boost::multiprecision::pow(BigInt(q), d.fiber));
      }
    }
  }
}

TEST_CASE("property: counts are polynomials of the predicted degrees") {
  std::mt19937_64 rng(41);
  const auto K = test::kronecker();
  for (int t = 0; t < 20; ++t) {
    const DimVec nu = test::random_dims(rng, 2, 3);
    const Word s = test::random_word(rng, nu);
    const FlagDims d = flag_dims(*K, s);
    std::vector<std::pair<long long, BigInt>> flags, stable;
    for (int q : {2, 3, 4, 5}) {
      const BigInt f = flag_count(*K, s, q);
      flags.emplace_back(q, f);
      stable.emplace_back(q, f * boost::multiprecision::pow(BigInt(q), d.fiber));
    }
    const FlagPolys P = flag_cell_polynomials(*K, s);
    CHECK(P.flag.degree() == d.flag);
    CHECK(P.stable.degree() == d.stable);
    for (auto [q, f] : flags) CHECK(P.flag.eval(q) == Rational(f));
    for (auto [q, f] : stable) CHECK(P.stable.eval(q) == Rational(f));
    if (d.flag <= 3) CHECK(interpolate(flags, 3).poly == P.flag);
  }
}

TEST_CASE("property: raw counts split over stable subspaces") {
  std::mt19937_64 rng(43);
  for (const auto& Q : {test::kronecker(), test::a2_affine()})
    for (int t = 0; t < 25; ++t) {
      const int q = t % 2 ? 3 : 2;
      const FqRep x = test::random_rep(rng, Q, q, 2);
      const Word s = test::random_word(rng, x.dims());
      if (s.size() < 2) continue;
      const std::size_t cut = 1 + rng() % (s.size() - 1);
      Word top, sub;
      top.entries.assign(s.entries.begin(), s.entries.begin() + static_cast<long>(cut));
      sub.entries.assign(s.entries.begin() + static_cast<long>(cut), s.entries.end());
      long long total = 0;
      for_each_stable_subspace(x, sub.weight(Q->num_vertices()), [&](const std::vector<Mat>& W) {
        total += stable_flag_count(top, x.quotient_by(W)) * stable_flag_count(sub, x.restrict_to(W));
      });
      CHECK(total == stable_flag_count(s, x));
    }
}

TEST_CASE("property: stable counts are orbit invariants") {
  std::mt19937_64 rng(47);
  for (const auto& Q : {test::kronecker(), test::a2_affine()})
    for (int t = 0; t < 25; ++t) {
      const FqRep x = test::random_rep(rng, Q, 3, 2);
      const Word s = test::random_word(rng, x.dims());
      Morphism g;
      for (int i = 0; i < Q->num_vertices(); ++i) {
        Mat m(x.dim(i), x.dim(i));
        do
          for (auto& e : m.a) e = static_cast<Elt>(rng() % 3);
        while (!is_invertible(x.field(), m));
        g.push_back(m);
      }
      CHECK(stable_flag_count(s, x.conjugate(g)) == stable_flag_count(s, x));
    }
}

TEST_CASE("word text round trip") {
  const auto A = test::a2_affine();
  const Word s = w({{2, 1}, {1, 0}, {1, 2}});
  CHECK(parse_word(*A, word_str(*A, s)) == s);
  CHECK(word_str(*A, Word{}).empty());
  CHECK((s + s).weight(3) == DimVec{2, 4, 2});
}
