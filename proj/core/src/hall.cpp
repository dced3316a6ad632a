#include "affine_hall/hall.hpp"

#include "affine_hall/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ah {

// ---------------------------------------------------------------- HallElement

ScalarSqrtQ HallElement::at(const std::string& key) const {
  auto it = c_.find(key);
  return it == c_.end() ? ScalarSqrtQ(q_) : it->second;
}

void HallElement::set(const std::string& key, const ScalarSqrtQ& v) {
  if (v.is_zero())
    c_.erase(key);
  else
    c_[key] = v;
}

void HallElement::add(const std::string& key, const ScalarSqrtQ& v) { set(key, at(key) + v); }

void HallElement::check_same(const HallElement& o) const {
  if (q_ != o.q_) throw domain_error("Hall elements over different fields");
  if (weight_ != o.weight_) throw domain_error("Hall elements of different weight");
}

HallElement& HallElement::operator+=(const HallElement& o) {
  check_same(o);
  for (const auto& [k, v] : o.c_) add(k, v);
  return *this;
}

HallElement& HallElement::operator-=(const HallElement& o) {
  check_same(o);
  for (const auto& [k, v] : o.c_) add(k, -v);
  return *this;
}

HallElement operator*(const ScalarSqrtQ& s, const HallElement& e) {
  HallElement r(e.q_, e.weight_);
  for (const auto& [k, v] : e.c_) r.set(k, s * v);
  return r;
}

bool operator==(const HallElement& a, const HallElement& b) {
  return a.q_ == b.q_ && a.weight_ == b.weight_ && a.c_ == b.c_;
}

int hall_twist(const Quiver& Q, const DimVec& tau, const DimVec& omega) {
  int t = 0;
  for (int i = 0; i < Q.num_vertices(); ++i) t += tau[i] * omega[i];
  for (const auto& h : Q.arrows()) t += tau[h.s] * omega[h.t];
  return t;
}

// ---------------------------------------------------------------- HallAlgebra

HallAlgebra::HallAlgebra(CatalogPtr cat, std::shared_ptr<HallCache> cache)
    : cat_(std::move(cat)), cache_(cache ? std::move(cache) : std::make_shared<HallCache>()) {
  scope_ = HallCache::scope_for(cat_->quiver(), cat_->q());
}

long long HallAlgebra::hall_number(const FqRep& M, const Fingerprint& N, const Fingerprint& L) const {
  const Catalog& C = *cat_;
  DimVec dl = C.quiver().zero();
  for (const auto& [lab, m] : L) dl = dv_add(dl, dv_scale(m, C.find(lab)->rep.dims()));
  DimVec dn = C.quiver().zero();
  for (const auto& [lab, m] : N) dn = dv_add(dn, dv_scale(m, C.find(lab)->rep.dims()));
  if (dv_add(dl, dn) != M.dims()) throw domain_error("hall_number: |N| + |L| differs from |M|");
  const HallTable t = hall_table(C.orbit(M.dims(), fp_str(C.identify(M))), dl);
  auto it = t.find({fp_str(N), fp_str(L)});
  return it == t.end() ? 0 : it->second;
}

HallTable HallAlgebra::hall_table(const Orbit& M, const DimVec& sub) const {
  const auto key = std::make_pair(M.key, sub);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  if (auto hit = cache_->get(scope_, M.key, sub)) {
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.emplace(key, *hit).first->second;
  }
  const Catalog& C = *cat_;
  const DimVec& nu = M.rep.dims();
  if (!dv_leq(sub, nu)) throw domain_error("hall_table: sub weight exceeds the module");
  HallTable t;
  const std::string zero_key = fp_str({});
  if (dv_total(sub) == 0) {
    t[{M.key, zero_key}] = 1;
  } else if (sub == nu) {
    t[{zero_key, M.key}] = 1;
  } else {
    for_each_stable_subspace(M.rep, sub, [&](const std::vector<Mat>& bases) {
      const std::string l = fp_str(C.identify(M.rep.restrict_to(bases)));
      const std::string n = fp_str(C.identify(M.rep.quotient_by(bases)));
      ++t[{n, l}];
    });
  }
  cache_->put(scope_, M.key, sub, t);
  std::lock_guard<std::mutex> lock(mu_);
  return memo_.emplace(key, std::move(t)).first->second;
}

HallElement HallAlgebra::unit() const {
  HallElement e(q(), cat_->quiver().zero());
  e.set(fp_str({}), ScalarSqrtQ(q(), 1));
  return e;
}

HallElement HallAlgebra::generator(int i, int n) const {
  if (n < 0) throw domain_error("generator: negative power");
  DimVec w = dv_scale(n, cat_->quiver().simple(i));
  HallElement e(q(), w);
  Fingerprint fp;
  if (n > 0) fp[cat_->identify(FqRep::simple(cat_->quiver_ptr(), q(), i)).begin()->first] = n;
  e.set(fp_str(fp), ScalarSqrtQ(q(), 1));
  return e;
}

HallElement HallAlgebra::product(const HallElement& f, const HallElement& g) const {
  if (f.q() != q() || g.q() != q()) throw domain_error("hall_product: field mismatch");
  const DimVec nu = dv_add(f.weight(), g.weight());
  HallElement r(q(), nu);
  if (f.is_zero() || g.is_zero()) return r;
  const ScalarSqrtQ tw = ScalarSqrtQ::v_power(q(), -hall_twist(cat_->quiver(), f.weight(), g.weight()));
  for (const auto& M : cat_->orbits(nu)) {
    ScalarSqrtQ acc(q());
    for (const auto& [nl, count] : hall_table(M, g.weight())) {
      auto fi = f.coeffs().find(nl.first);
      if (fi == f.coeffs().end()) continue;
      auto gi = g.coeffs().find(nl.second);
      if (gi == g.coeffs().end()) continue;
      acc += ScalarSqrtQ(q(), Rational(count)) * fi->second * gi->second;
    }
    r.set(M.key, tw * acc);
  }
  return r;
}

HallElement HallAlgebra::evaluate_word(const Word& s) const {
  HallElement r = unit();
  for (auto it = s.entries.rbegin(); it != s.entries.rend(); ++it) r = product(generator(it->vertex, it->mult), r);
  return r;
}

HallElement HallAlgebra::from_values(const DimVec& weight, const std::vector<ScalarSqrtQ>& values) const {
  const auto& os = cat_->orbits(weight);
  if (os.size() != values.size()) throw domain_error("from_values: one value per orbit required");
  HallElement e(q(), weight);
  for (std::size_t k = 0; k < os.size(); ++k) e.set(os[k].key, values[k]);
  return e;
}

std::vector<ScalarSqrtQ> HallAlgebra::values(const HallElement& e) const {
  std::vector<ScalarSqrtQ> out;
  for (const auto& o : cat_->orbits(e.weight())) out.push_back(e.at(o.key));
  return out;
}

// ---------------------------------------------------------------- q-stable keys

std::string q_stable_key(const std::vector<Fingerprint>& fps) {
  std::vector<std::pair<std::string, int>> params;
  for (const auto& fp : fps)
    for (const auto& [lab, m] : fp)
      if (!lab.discrete() && std::find(params.begin(), params.end(), std::make_pair(lab.param, lab.degree)) == params.end())
        params.emplace_back(lab.param, lab.degree);
  if (params.size() > 7) throw resource_error("q_stable_key: too many distinct parameters");
  std::vector<int> perm(params.size());
  for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = static_cast<int>(k);
  std::string best;
  bool first = true;
  do {
    std::map<std::string, std::string> rename;
    for (std::size_t k = 0; k < params.size(); ++k)
      rename[params[k].first] = "#" + std::to_string(perm[k]) + "d" + std::to_string(params[k].second);
    std::string s;
    for (const auto& fp : fps) {
      Fingerprint r;
      for (const auto& [lab, m] : fp) {
        IndecLabel l = lab;
        if (!l.discrete()) l.param = rename.at(l.param);
        r[l] = m;
      }
      s += fp_str(r) + "|";
    }
    if (first || s < best) best = s;
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// ---------------------------------------------------------------- interpolation

Interpolation interpolate(const std::vector<std::pair<long long, BigInt>>& values, int degree_bound) {
  if (degree_bound < 0) throw domain_error("interpolate: negative degree bound");
  if (static_cast<int>(values.size()) <= degree_bound) throw domain_error("interpolate: need more points than the degree bound");
  std::set<long long> xs;
  for (const auto& [x, y] : values)
    if (!xs.insert(x).second) throw domain_error("interpolate: repeated abscissa");
  Interpolation out;
  const int k = degree_bound + 1;
  for (int a = 0; a < k; ++a) {
    RatPoly term(Rational(values[a].second));
    for (int b = 0; b < k; ++b) {
      if (b == a) continue;
      term = term * (RatPoly::x_power(1) - RatPoly(Rational(values[b].first)));
      term = term * RatPoly(Rational(1) / Rational(values[a].first - values[b].first));
    }
    out.poly += term;
  }
  out.ok = true;
  for (std::size_t a = k; a < values.size(); ++a) {
    Rational got = out.poly.eval(Rational(values[a].first));
    if (got != Rational(values[a].second)) {
      out.ok = false;
      out.message = "inconsistent at q=" + std::to_string(values[a].first) + ": fit gives " + got.str() + ", data " + values[a].second.str();
      return out;
    }
  }
  return out;
}

// ---------------------------------------------------------------- cross-validation

CrossValidation cross_validate_hall_numbers(const QuiverPtr& Q, const DimVec& bound, const std::vector<int>& fit_qs,
                                            int check_q, const std::shared_ptr<HallCache>& cache) {
  if (fit_qs.empty()) throw domain_error("cross_validate_hall_numbers: no fitting fields");
  std::vector<int> qs = fit_qs;
  qs.push_back(check_q);
  std::vector<DimVec> weights;
  std::function<void(std::size_t, DimVec&)> rec = [&](std::size_t i, DimVec& cur) {
    if (i == cur.size()) {
      if (dv_total(cur) > 0) weights.push_back(cur);
      return;
    }
    for (cur[i] = 0; cur[i] <= bound[i]; ++cur[i]) rec(i + 1, cur);
  };
  DimVec cur(bound.size(), 0);
  rec(0, cur);

  // per q: M pattern -> (triple pattern -> value)
  std::vector<std::map<std::string, std::map<std::string, long long>>> data(qs.size());
  CrossValidation out;
  for (std::size_t k = 0; k < qs.size(); ++k) {
    auto cat = std::make_shared<Catalog>(Q, qs[k], bound);
    HallAlgebra H(cat, cache);
    for (const auto& nu : weights)
      for (const auto& M : cat->orbits(nu)) {
        const std::string mkey = q_stable_key({M.fp});
        auto& slot = data[k][mkey];
        std::map<std::string, long long> mine;
        for (const auto& sub : weights) {
          if (!dv_leq(sub, nu) || sub == nu) continue;
          for (const auto& [nl, g] : H.hall_table(M, sub)) {
            const Catalog& C = *cat;
            auto fp_of = [&](const std::string& key) {
              DimVec w = dv_sub(nu, sub);
              if (key == nl.second) w = sub;
              return C.orbit(w, key).fp;
            };
            mine[q_stable_key({M.fp, fp_of(nl.first), fp_of(nl.second)})] = g;
          }
        }
        // Instances of one pattern must agree before anything is fitted.
        if (!slot.empty() && slot != mine) {
          out.ok = false;
          out.failures.push_back("q=" + std::to_string(qs[k]) + ": instances of " + mkey + " disagree");
        }
        slot = std::move(mine);
      }
  }
  std::set<std::string> mkeys;
  for (const auto& d : data)
    for (const auto& [m, t] : d) mkeys.insert(m);
  for (const auto& m : mkeys) {
    if (!std::all_of(data.begin(), data.end(), [&](const auto& d) { return d.count(m) > 0; })) {
      ++out.skipped;
      continue;
    }
    std::set<std::string> triples;
    for (const auto& d : data)
      for (const auto& [t, g] : d.at(m)) triples.insert(t);
    for (const auto& t : triples) {
      std::vector<std::pair<long long, BigInt>> pts;
      for (std::size_t k = 0; k < fit_qs.size(); ++k) {
        auto it = data[k].at(m).find(t);
        pts.emplace_back(qs[k], BigInt(it == data[k].at(m).end() ? 0 : it->second));
      }
      const Interpolation fit = interpolate(pts, static_cast<int>(fit_qs.size()) - 1);
      auto it = data.back().at(m).find(t);
      const BigInt actual = it == data.back().at(m).end() ? 0 : it->second;
      ++out.configurations;
      if (fit.poly.eval(Rational(check_q)) != Rational(actual)) {
        out.ok = false;
        out.failures.push_back(t + ": fit " + fit.poly.str() + " predicts " + fit.poly.eval(Rational(check_q)).str() + " at q=" +
                               std::to_string(check_q) + ", recount " + actual.str());
      }
    }
  }
  return out;
}

}  // namespace ah
