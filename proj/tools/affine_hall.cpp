// affine-hall: verification suites over one affine quiver.

#include "affine_hall/cache.hpp"
#include "affine_hall/catalog.hpp"
#include "affine_hall/errors.hpp"
#include "affine_hall/flags.hpp"
#include "affine_hall/hall.hpp"
#include "affine_hall/monomials.hpp"
#include "affine_hall/strata.hpp"
#include "affine_hall/repfq.hpp"
#include "affine_hall/uqminus.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

using json = nlohmann::json;
using namespace ah;

namespace {

struct RunConfig {
  std::string suite;
  std::string quiver_path;
  std::vector<int> qs{2};
  std::vector<DimVec> nus;
  int bound = 12;
  int tube_search = 6;
  std::string out;
  std::string cache;
  std::string format = "json";
};

struct Verdict {
  std::string name;
  bool pass;
  std::string detail;
};

struct SuiteReport {
  json results = json::array();
  std::vector<Verdict> verdicts;
  std::vector<std::string> table;  // extra lines for the table format

  void check(const std::string& name, bool pass, const std::string& detail = {}) { verdicts.push_back({name, pass, detail}); }
  bool pass() const {
    return std::all_of(verdicts.begin(), verdicts.end(), [](const Verdict& v) { return v.pass; });
  }
};

json dv_json(const DimVec& d) { return json(d); }

std::string tag(int q, const DimVec& nu) { return "q=" + std::to_string(q) + " nu=" + dv_str(nu); }

// Words of weight nu, adjacent entries at different vertices.
std::vector<Word> compositions(const Quiver& Q, const DimVec& nu, std::size_t cap) {
  std::vector<Word> out;
  Word cur;
  DimVec left = nu;
  std::function<void()> rec = [&]() {
    if (out.size() >= cap) return;
    if (dv_total(left) == 0) {
      out.push_back(cur);
      return;
    }
    for (int i = 0; i < Q.num_vertices(); ++i) {
      if (left[i] == 0 || (!cur.entries.empty() && cur.entries.back().vertex == i)) continue;
      for (int m = 1; m <= left[i]; ++m) {
        cur.entries.push_back({m, i});
        left[i] -= m;
        rec();
        left[i] += m;
        cur.entries.pop_back();
      }
    }
  };
  rec();
  return out;
}

std::vector<DimVec> weights_below(const DimVec& nu) {
  std::vector<DimVec> out;
  DimVec cur(nu.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == nu.size()) {
      if (dv_total(cur) > 0) out.push_back(cur);
      return;
    }
    for (cur[i] = 0; cur[i] <= nu[i]; ++cur[i]) rec(i + 1);
  };
  rec(0);
  return out;
}

// ---------------------------------------------------------------- suites

void suite_roots(const RunConfig& cfg, const QuiverPtr& Q, SuiteReport& rep) {
  const DimVec& d = Q->delta();
  bool radical = true;
  for (int i = 0; i < Q->num_vertices(); ++i) radical = radical && Q->symmetric_form(d, Q->simple(i)) == 0;
  rep.check("delta in the radical", radical, dv_str(d));
  for (const auto& nu : cfg.nus) {
    json roots = json::array();
    bool forms = true;
    for (const auto& r : Q->positive_roots(nu)) {
      const int qf = Q->euler_form(r.dim, r.dim);
      forms = forms && (r.real ? qf == 1 : qf == 0);
      roots.push_back({{"dim", dv_json(r.dim)}, {"real", r.real}});
      rep.table.push_back(dv_str(r.dim) + (r.real ? " real" : " imaginary"));
    }
    rep.results.push_back({{"nu", dv_json(nu)}, {"roots", roots}});
    rep.check("Tits form on roots below " + dv_str(nu), forms);
  }
  rep.results.push_back({{"type", Q->affine_type()}, {"delta", dv_json(d)}, {"admissible_order", Q->admissible_order()}});
}

void suite_catalog(const RunConfig& cfg, const QuiverPtr& Q, SuiteReport& rep) {
  for (int q : cfg.qs)
    for (const auto& nu : cfg.nus) {
      Catalog cat(Q, q, nu);
      std::map<std::string, int> kinds;
      for (const auto& e : cat.entries()) kinds[std::string(1, e.label.str()[0])]++;
      const auto& orbits = cat.orbits(nu);
      json os = json::array();
      for (const auto& o : orbits) os.push_back({{"orbit", o.key}, {"size", o.size.str()}});
      rep.results.push_back({{"q", q}, {"nu", dv_json(nu)}, {"indecomposables", cat.entries().size()}, {"by_kind", kinds},
                             {"tubes", cat.tubes().size()}, {"orbits", os}});
      rep.check("orbit sizes sum to |E_V| at " + tag(q, nu), cat.orbits_complete(nu), std::to_string(orbits.size()) + " orbits");
      rep.table.push_back(tag(q, nu) + ": " + std::to_string(cat.entries().size()) + " indecomposables, " +
                          std::to_string(orbits.size()) + " orbits");
    }
  rep.check("decompose certified every local endomorphism ring", probabilistic_local_accepts() == 0,
            std::to_string(probabilistic_local_accepts()) + " probabilistic accepts");
}

void suite_flags(const RunConfig& cfg, const QuiverPtr& Q, SuiteReport& rep) {
  for (const auto& nu : cfg.nus) {
    std::vector<CatalogPtr> cats;
    for (int q : cfg.qs) cats.push_back(std::make_shared<Catalog>(Q, q, nu));
    for (const auto& s : compositions(*Q, nu, 40)) {
      const FlagDims d = flag_dims(*Q, s);
      const FlagPolys P = flag_cell_polynomials(*Q, s);
      json per_q = json::array();
      bool counts_ok = true, fiber_ok = true;
      std::vector<std::pair<long long, BigInt>> pts_flag, pts_stable;
      for (const auto& cat : cats) {
        const int q = cat->q();
        const BigInt f = flag_count(*Q, s, q);
        const BigInt st = stable_flag_total(s, *cat);
        counts_ok = counts_ok && Rational(f) == P.flag.eval(q) && Rational(st) == P.stable.eval(q);
        fiber_ok = fiber_ok && st == f * boost::multiprecision::pow(BigInt(q), d.fiber);
        pts_flag.emplace_back(q, f);
        pts_stable.emplace_back(q, st);
        per_q.push_back({{"q", q}, {"flags", f.str()}, {"stable", st.str()}});
      }
      const std::string w = word_str(*Q, s);
      json row{{"word", w}, {"dim_flag", d.flag}, {"dim_stable", d.stable}, {"fiber", d.fiber}, {"counts", per_q},
               {"flag_poly", P.flag.str()}, {"stable_poly", P.stable.str()}};
      rep.check("cell polynomials match counts for " + w, counts_ok);
      rep.check("stable = flags * q^fiber for " + w, fiber_ok);
      rep.check("degrees match dimension formulas for " + w, P.flag.degree() == d.flag && P.stable.degree() == d.stable,
                std::to_string(P.flag.degree()) + "/" + std::to_string(P.stable.degree()));
      if (static_cast<int>(pts_stable.size()) > d.stable) {
        const Interpolation fs = interpolate(pts_stable, static_cast<int>(pts_stable.size()) - 1);
        row["fitted_stable_degree"] = fs.poly.degree();
        rep.check("fitted degree of the stable count for " + w, fs.poly.degree() == d.stable);
      }
      if (static_cast<int>(pts_flag.size()) > d.flag) row["fitted_flag_degree"] = interpolate(pts_flag, static_cast<int>(pts_flag.size()) - 1).poly.degree();
      rep.results.push_back(row);
      rep.table.push_back(w + ": dim F " + std::to_string(d.flag) + ", dim F~ " + std::to_string(d.stable) + ", |F|(q) = " +
                          P.flag.str());
    }
  }
}

void suite_hall_check(const RunConfig& cfg, const QuiverPtr& Q, const std::shared_ptr<HallCache>& cache, SuiteReport& rep) {
  for (int q : cfg.qs)
    for (const auto& nu : cfg.nus) {
      auto cat = std::make_shared<Catalog>(Q, q, nu);
      HallAlgebra H(cat, cache);
      int words = 0, splits = 0;
      bool eval_ok = true, concat_ok = true;
      for (const auto& s : compositions(*Q, nu, 60)) {
        ++words;
        const HallElement e = H.evaluate_word(s);
        eval_ok = eval_ok && H.values(e) == count_function(s, *cat);
        for (std::size_t k = 1; k < s.size(); ++k) {
          Word a, b;
          a.entries.assign(s.entries.begin(), s.entries.begin() + static_cast<long>(k));
          b.entries.assign(s.entries.begin() + static_cast<long>(k), s.entries.end());
          concat_ok = concat_ok && H.product(H.evaluate_word(a), H.evaluate_word(b)) == e;
          ++splits;
        }
      }
      rep.check("evaluate_word equals the flag count function at " + tag(q, nu), eval_ok, std::to_string(words) + " words");
      rep.check("concatenation equals the Hall product at " + tag(q, nu), concat_ok, std::to_string(splits) + " splits");

      std::mt19937_64 rng(7);
      auto random_element = [&](const DimVec& w) {
        std::vector<ScalarSqrtQ> vals;
        for (std::size_t k = 0; k < cat->orbits(w).size(); ++k)
          vals.emplace_back(q, Rational(static_cast<long long>(rng() % 5) - 2));
        return H.from_values(w, vals);
      };
      bool assoc = true;
      for (int t = 0; t < 10; ++t) {
        DimVec a(nu.size()), b(nu.size()), c(nu.size());
        for (std::size_t i = 0; i < nu.size(); ++i) {
          a[i] = static_cast<int>(rng() % (nu[i] + 1));
          b[i] = static_cast<int>(rng() % (nu[i] - a[i] + 1));
          c[i] = nu[i] - a[i] - b[i];
        }
        const HallElement x = random_element(a), y = random_element(b), z = random_element(c);
        assoc = assoc && H.product(H.product(x, y), z) == H.product(x, H.product(y, z));
      }
      rep.check("associativity on 10 random triples at " + tag(q, nu), assoc);
      rep.results.push_back({{"q", q}, {"nu", dv_json(nu)}, {"words", words}, {"splits", splits}});
    }
  if (cfg.qs.size() >= 4) {
    std::vector<int> fit(cfg.qs.begin(), cfg.qs.end() - 1);
    for (const auto& nu : cfg.nus) {
      const CrossValidation cv = cross_validate_hall_numbers(Q, nu, fit, cfg.qs.back(), cache);
      rep.results.push_back({{"interpolation", {{"bound", dv_json(nu)}, {"configurations", cv.configurations}, {"skipped", cv.skipped},
                                                {"failures", cv.failures}}}});
      rep.check("Hall numbers below " + dv_str(nu) + " predict the recount at q=" + std::to_string(cfg.qs.back()), cv.ok,
                std::to_string(cv.configurations) + " configurations");
    }
  }
}

void suite_strata(const RunConfig& cfg, const QuiverPtr& Q, SuiteReport& rep) {
  for (const auto& nu : cfg.nus) {
    std::vector<CatalogPtr> cats;
    for (int q : cfg.qs) cats.push_back(std::make_shared<Catalog>(Q, q, nu));
    const Catalog& C0 = *cats.front();
    const auto delta = enumerate_delta(C0, nu);
    ClosureOracle oracle(Q, nu);
    json strata = json::array();
    std::map<std::pair<Fingerprint, int>, RatPoly> support_poly;
    for (const auto& idx : delta) {
      const RatPoly P = stratum_polynomial(C0, idx.a, idx.m());
      support_poly[{idx.a, idx.m()}] = P;
      json counts = json::array();
      bool match = true;
      for (const auto& cat : cats) {
        const BigInt n = stratum_count(*cat, nu, idx.a, idx.m());
        match = match && Rational(n) == P.eval(cat->q());
        counts.push_back({{"q", cat->q()}, {"count", n.str()}});
      }
      const SequencePlan plan = build_plan(C0, idx, cfg.tube_search);
      strata.push_back({{"index", idx.str()}, {"counts", counts}, {"polynomial", P.str()}, {"dimension", P.degree()},
                        {"expected_shift", plan.expected_shift}});
      rep.check("stratum polynomial matches counts for " + idx.str(), match);
      rep.check("stratum dimension equals the shift for " + idx.str(), P.degree() == plan.expected_shift,
                std::to_string(P.degree()) + " vs " + std::to_string(plan.expected_shift));
      rep.table.push_back(idx.str() + ": " + P.str());
    }
    for (const auto& cat : cats) {
      BigInt total = 0, outside = 0;
      for (const auto& [sup, P] : support_poly) total += stratum_count(*cat, nu, sup.first, sup.second);
      for (const auto& o : cat->orbits(nu))
        if (!classify_point(*cat, o.fp).in_stratum()) outside += o.size;
      const BigInt all = boost::multiprecision::pow(BigInt(cat->q()), cat->ev_dim(nu));
      rep.check("strata and excluded points partition E_V at " + tag(cat->q(), nu), total + outside == all,
                total.str() + " + " + outside.str() + " of " + all.str());
    }
    const std::size_t n = delta.size();
    json order = json::array();
    std::vector<std::vector<Order>> M(n, std::vector<Order>(n));
    for (std::size_t a = 0; a < n; ++a) {
      json row = json::array();
      for (std::size_t b = 0; b < n; ++b) {
        M[a][b] = oracle.order(delta[a], delta[b]);
        row.push_back(order_str(M[a][b]));
      }
      order.push_back(row);
    }
    bool strict = true;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        if ((M[a][b] == Order::Equal) != (a == b)) strict = false;
        if (M[a][b] == Order::Less && M[b][a] != Order::Greater) strict = false;
        for (std::size_t c = 0; c < n; ++c)
          if (M[a][b] == Order::Less && M[b][c] == Order::Less && M[a][c] != Order::Less) strict = false;
      }
    rep.check("stratum order is a strict partial order at nu=" + dv_str(nu), strict, std::to_string(n) + " strata");
    rep.results.push_back({{"nu", dv_json(nu)}, {"strata", strata}, {"order", order}, {"oracle_q", oracle.q()}});
  }
}

void suite_triangularity(const RunConfig& cfg, const QuiverPtr& Q, const std::shared_ptr<HallCache>& cache, SuiteReport& rep) {
  for (int q : cfg.qs)
    for (const auto& nu : cfg.nus) {
      auto cat = std::make_shared<Catalog>(Q, q, nu);
      HallAlgebra H(cat, cache);
      ClosureOracle oracle(Q, nu);
      const TriangularityReport T = verify_triangularity(H, oracle, nu, cfg.tube_search);
      json idx = json::array(), matrix = json::array(), order = json::array();
      for (const auto& s : T.strata) idx.push_back(s.str());
      for (std::size_t r = 0; r < T.raw.size(); ++r) {
        json row = json::array(), orow = json::array();
        std::ostringstream line;
        for (std::size_t c = 0; c < T.raw[r].size(); ++c) {
          row.push_back(T.raw[r][c]);
          orow.push_back(order_str(T.order[r][c]));
          line << (c ? " " : "") << T.raw[r][c];
        }
        matrix.push_back(row);
        order.push_back(orow);
        rep.table.push_back(line.str() + "   " + T.strata[r].str());
      }
      rep.results.push_back({{"q", q}, {"nu", dv_json(nu)}, {"strata", idx}, {"matrix", matrix}, {"order", order},
                             {"verdicts", T.verdicts}, {"counterexamples", T.counterexamples}});
      rep.check("triangularity at " + tag(q, nu), T.pass,
                T.pass ? std::to_string(T.strata.size()) + "x" + std::to_string(T.strata.size()) : T.counterexamples.front());
    }
}

void suite_resolution(const RunConfig& cfg, const QuiverPtr& Q, SuiteReport& rep) {
  for (int q : cfg.qs)
    for (const auto& nu : cfg.nus) {
      Catalog cat(Q, q, nu);
      ClosureOracle oracle(Q, nu);
      json rows = json::array();
      for (const auto& idx : enumerate_delta(cat, nu)) {
        const auto r = verify_resolution(cat, oracle, idx, cfg.tube_search);
        rows.push_back({{"index", idx.str()}, {"pass", r.pass}, {"verdicts", r.verdicts}, {"counterexamples", r.counterexamples}});
        rep.check("resolution for " + idx.str() + " at " + tag(q, nu), r.pass, r.pass ? "" : r.counterexamples.front());
      }
      rep.results.push_back({{"q", q}, {"nu", dv_json(nu)}, {"strata", rows}});
    }
}

void suite_symbolic(const RunConfig& cfg, const QuiverPtr& Q, const std::shared_ptr<HallCache>& cache, SuiteReport& rep) {
  UMinus U(cartan_of(*Q), 8);
  for (int i = 0; i < Q->num_vertices(); ++i)
    for (int j = 0; j < Q->num_vertices(); ++j) {
      if (i == j) continue;
      const auto rel = U.serre_relator(i, j);
      rep.check("Serre relator (" + Q->vertices()[i] + "," + Q->vertices()[j] + ") reduces to zero", U.combination(rel).is_zero());
    }
  for (const auto& nu : cfg.nus) {
    json dims = json::array();
    for (const auto& w : weights_below(nu)) {
      if (dv_total(w) > 8) continue;
      dims.push_back({{"weight", dv_json(w)}, {"dim", U.dim(w)}});
    }
    rep.results.push_back({{"nu", dv_json(nu)}, {"weight_spaces", dims}});
    for (int q : cfg.qs) {
      auto cat = std::make_shared<Catalog>(Q, q, nu);
      HallAlgebra H(cat, cache);
      for (const auto& w : weights_below(nu)) {
        if (dv_total(w) > 6) continue;
        std::vector<Word> words;
        for (const auto& p : U.words(w)) {
          Word s;
          for (int i : p) s.entries.push_back({1, i});
          words.push_back(s);
        }
        const Consistency c = hall_consistency(U, H, words);
        rep.check("symbolic and Hall relations agree at q=" + std::to_string(q) + " weight " + dv_str(w), c.ok,
                  c.ok ? "rank " + std::to_string(c.hall_rank) : c.message);
      }
    }
  }
}

// ---------------------------------------------------------------- output

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
  return r + "\"";
}

std::string render(const RunConfig& cfg, const QuiverPtr& Q, const SuiteReport& rep) {
  std::ostringstream os;
  if (cfg.format == "json") {
    json vs = json::array();
    for (const auto& v : rep.verdicts) vs.push_back({{"check", v.name}, {"pass", v.pass}, {"detail", v.detail}});
    json nus = json::array();
    for (const auto& nu : cfg.nus) nus.push_back(dv_json(nu));
    json doc{{"suite", cfg.suite}, {"quiver", Q->hash()}, {"q", cfg.qs}, {"nu", nus},
             {"results", rep.results}, {"verdicts", vs}, {"pass", rep.pass()}};
    os << doc.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << "check,pass,detail\n";
    for (const auto& v : rep.verdicts) os << csv_field(v.name) << "," << (v.pass ? "true" : "false") << "," << csv_field(v.detail) << "\n";
  } else {
    for (const auto& l : rep.table) os << l << "\n";
    if (!rep.table.empty()) os << "\n";
    for (const auto& v : rep.verdicts) os << (v.pass ? "PASS  " : "FAIL  ") << v.name << (v.detail.empty() ? "" : "  [" + v.detail + "]") << "\n";
    os << (rep.pass() ? "all checks passed" : "some checks failed") << "\n";
  }
  return os.str();
}

DimVec parse_dims(const std::string& s, int n) {
  DimVec d;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    const int x = std::stoi(tok, &used);
    if (used != tok.size() || x < 0) throw domain_error("bad dimension vector " + s);
    d.push_back(x);
  }
  if (static_cast<int>(d.size()) != n) throw domain_error("dimension vector " + s + " needs " + std::to_string(n) + " entries");
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ringel-Hall algebra verification suites for affine quivers"};
  RunConfig cfg;
  std::vector<std::string> nu_text;
  std::string q_text = "2";
  app.add_option("suite", cfg.suite, "roots | catalog | flags | hall-check | strata | triangularity | resolution | symbolic")
      ->required()
      ->check(CLI::IsMember({"roots", "catalog", "flags", "hall-check", "strata", "triangularity", "resolution", "symbolic"}));
  app.add_option("--quiver", cfg.quiver_path, "quiver JSON file")->required();
  app.add_option("--q", q_text, "comma-separated field sizes")->capture_default_str();
  app.add_option("--nu", nu_text, "dimension vector, e.g. 2,2; repeat for several (default delta)");
  app.add_option("--bound", cfg.bound, "largest total dimension accepted")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--tube-search", cfg.tube_search, "block bound for tube word search")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out, "report file (default stdout)");
  app.add_option("--cache", cfg.cache, "directory for the Hall number cache");
  app.add_option("--format", cfg.format, "json | csv | table")->capture_default_str()->check(CLI::IsMember({"json", "csv", "table"}));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  QuiverPtr Q;
  try {
    Q = intern_quiver(Quiver::load(cfg.quiver_path));
    cfg.qs.clear();
    std::stringstream ss(q_text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
      const int q = std::stoi(tok);
      if (!is_prime_power(q)) throw domain_error("q=" + tok + " is not a prime power");
      cfg.qs.push_back(q);
    }
    if (cfg.qs.empty()) throw domain_error("no field sizes given");
    for (const auto& t : nu_text) cfg.nus.push_back(parse_dims(t, Q->num_vertices()));
    if (cfg.nus.empty()) cfg.nus.push_back(Q->delta());
    for (const auto& nu : cfg.nus)
      if (dv_total(nu) > cfg.bound) throw domain_error("nu=" + dv_str(nu) + " exceeds --bound " + std::to_string(cfg.bound));
  } catch (const std::exception& e) {
    std::cerr << "affine-hall: " << e.what() << "\n";
    return 2;
  }

  auto cache = std::make_shared<HallCache>(cfg.cache);
  SuiteReport rep;
  try {
    if (cfg.suite == "roots") suite_roots(cfg, Q, rep);
    else if (cfg.suite == "catalog") suite_catalog(cfg, Q, rep);
    else if (cfg.suite == "flags") suite_flags(cfg, Q, rep);
    else if (cfg.suite == "hall-check") suite_hall_check(cfg, Q, cache, rep);
    else if (cfg.suite == "strata") suite_strata(cfg, Q, rep);
    else if (cfg.suite == "triangularity") suite_triangularity(cfg, Q, cache, rep);
    else if (cfg.suite == "resolution") suite_resolution(cfg, Q, rep);
    else suite_symbolic(cfg, Q, cache, rep);
  } catch (const resource_error& e) {
    rep.check("suite completed", false, e.what());
  } catch (const std::exception& e) {
    std::cerr << "affine-hall: " << e.what() << "\n";
    return 2;
  }

  const std::string text = render(cfg, Q, rep);
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.out);
    if (!f) {
      std::cerr << "affine-hall: cannot write " << cfg.out << "\n";
      return 2;
    }
    f << text;
  }
  return rep.pass() ? 0 : 1;
}
