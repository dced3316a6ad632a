#include "affine_hall/strata.hpp"

#include "affine_hall/errors.hpp"
#include "affine_hall/flags.hpp"
#include "affine_hall/field.hpp"

#include <deque>
#include <functional>
#include <set>

namespace ah {

std::string StratumIndex::str() const {
  std::string s = "a={" + fp_str(a) + "} lam=" + lam.str();
  return s;
}

DimVec discrete_weight(const Catalog& cat, const Fingerprint& a) {
  DimVec w = cat.quiver().zero();
  for (const auto& [lab, mult] : a) {
    const CatalogEntry* e = cat.find(lab);
    if (!e) throw domain_error("label " + lab.str() + " not in catalog");
    w = dv_add(w, dv_scale(mult, e->rep.dims()));
  }
  return w;
}

namespace {

// Largest m with m delta <= nu, and the remainder nu - m delta.
int delta_multiple(const DimVec& delta, const DimVec& nu) {
  int m = 0;
  while (dv_leq(dv_scale(m + 1, delta), nu)) ++m;
  return m;
}

// rest is m delta for some m >= 0; returns m or -1.
int exact_delta_multiple(const DimVec& delta, const DimVec& rest) {
  const int m = delta_multiple(delta, rest);
  return dv_scale(m, delta) == rest ? m : -1;
}

Fingerprint tube_part(const Fingerprint& a) {
  Fingerprint t;
  for (const auto& [lab, m] : a)
    if (lab.kind == IndecLabel::Kind::RegularInhomog) t[lab] = m;
  return t;
}

}  // namespace

std::vector<StratumIndex> enumerate_delta(const Catalog& cat, const DimVec& nu) {
  if (!dv_leq(nu, cat.bound())) throw domain_error("enumerate_delta: weight exceeds the catalog bound");
  const DimVec& delta = cat.quiver().delta();
  std::vector<const CatalogEntry*> disc;
  for (const auto& e : cat.entries())
    if (e.label.discrete() && dv_leq(e.rep.dims(), nu)) disc.push_back(&e);
  std::vector<StratumIndex> out;
  Fingerprint cur;
  std::function<void(std::size_t, const DimVec&)> rec = [&](std::size_t k, const DimVec& rest) {
    if (k == disc.size()) {
      const int m = exact_delta_multiple(delta, rest);
      if (m < 0 || !cat.is_aperiodic(tube_part(cur))) return;
      for (const auto& lam : partitions_of(m)) out.push_back({cur, lam});
      return;
    }
    const CatalogEntry& e = *disc[k];
    DimVec r = rest;
    for (int mult = 0;; ++mult) {
      if (mult > 0) cur[e.label] = mult;
      rec(k + 1, r);
      r = dv_sub(r, e.rep.dims());
      if (!dv_nonneg(r)) break;
    }
    cur.erase(e.label);
  };
  rec(0, nu);
  std::sort(out.begin(), out.end());
  return out;
}

PointClass classify_point(const Catalog& cat, const Fingerprint& fp) {
  PointClass pc;
  std::vector<int> parts;
  std::set<std::string> params;
  for (const auto& [lab, mult] : fp) {
    if (lab.discrete()) {
      pc.a[lab] = mult;
      continue;
    }
    pc.homogeneous[lab] = mult;
    pc.m += mult * (lab.level + 1) * lab.degree;
    for (int k = 0; k < mult; ++k) parts.push_back((lab.level + 1) * lab.degree);
    if (mult > 1 || !params.insert(lab.param).second) pc.squarefree = false;
    if (lab.level != 0 || lab.degree != 1) pc.split = false;
  }
  pc.split = pc.split && pc.squarefree;
  pc.aperiodic = cat.is_aperiodic(tube_part(pc.a));
  pc.level_partition = Partition(parts);
  return pc;
}

PointClass classify_point(const Catalog& cat, const FqRep& x) { return classify_point(cat, cat.identify(x)); }

BigInt stratum_count(const Catalog& cat, const DimVec& nu, const Fingerprint& a, int m) {
  BigInt s = 0;
  for (const auto& o : cat.orbits(nu)) {
    const PointClass pc = classify_point(cat, o.fp);
    if (pc.in_stratum() && pc.a == a && pc.m == m) s += o.size;
  }
  return s;
}

RatPoly stratum_polynomial(const Catalog& cat, const Fingerprint& a, int m) {
  const Quiver& Q = cat.quiver();
  const DimVec nu = dv_add(discrete_weight(cat, a), dv_scale(m, Q.delta()));
  RatPoly gv(1);
  for (int d : nu) gv = gv * gl_order_poly(d);
  const int s = static_cast<int>(cat.tubes().size());
  auto n_params = [&](int d) {
    return d == 1 ? RatPoly::x_power(1) + RatPoly(Rational(1 - s)) : irreducible_count_poly(d);
  };
  // Hom between the discrete part and a homogeneous module of weight w, both directions.
  auto cross_hom = [&](const DimVec& w) {
    int h = 0;
    for (const auto& [lab, mult] : a) {
      const DimVec& dv = cat.find(lab)->rep.dims();
      if (lab.kind == IndecLabel::Kind::Preprojective) h += mult * Q.euler_form(dv, w);
      if (lab.kind == IndecLabel::Kind::Preinjective) h += mult * Q.euler_form(w, dv);
    }
    return h;
  };
  int disc_end = cat.end_dim(a);
  RatPoly disc_aut(1);
  for (const auto& [lab, mult] : a) {
    disc_aut = disc_aut * gl_order_poly(mult);
    disc_end -= mult * mult;
  }

  // Patterns: multisets of (degree, level) with sum degree * (level + 1) = m.
  std::vector<std::pair<int, int>> slots;
  for (int d = 1; d <= m; ++d)
    for (int l = 0; d * (l + 1) <= m; ++l) slots.emplace_back(d, l);
  RatPoly total;
  std::vector<int> count(slots.size(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int rest) {
    if (k == slots.size()) {
      if (rest != 0) return;
      RatPoly choices(1);
      std::map<int, int> used;  // parameters of each degree already chosen
      RatPoly aut = disc_aut;
      int rad = disc_end;
      for (std::size_t t = 0; t < slots.size(); ++t) {
        const auto [d, l] = slots[t];
        for (int c = 0; c < count[t]; ++c) {
          choices = choices * (n_params(d) - RatPoly(Rational(used[d]++)));
          aut = aut * (RatPoly::x_power(d) - RatPoly(1));
          const DimVec w = dv_scale((l + 1) * d, Q.delta());
          rad += (l + 1) * d - d + cross_hom(w);
        }
        choices = choices * RatPoly(Rational(1, factorial(count[t])));
      }
      total += choices * gv.exact_div(aut * RatPoly::x_power(rad));
      return;
    }
    const int w = slots[k].first * (slots[k].second + 1);
    for (int c = 0; c * w <= rest; ++c) {
      count[k] = c;
      rec(k + 1, rest - c * w);
    }
    count[k] = 0;
  };
  rec(0, m);
  return total;
}

std::string order_str(Order o) {
  switch (o) {
    case Order::Less: return "less";
    case Order::Equal: return "equal";
    case Order::Greater: return "greater";
    case Order::Incomparable: return "incomparable";
  }
  return "?";
}

// ---------------------------------------------------------------- closure oracle

namespace {

int next_prime_power(int q) {
  for (int k = q + 1;; ++k)
    if (is_prime_power(k)) return k;
}

}  // namespace

ClosureOracle::ClosureOracle(QuiverPtr Q, DimVec nu) : nu_(std::move(nu)) {
  const DimVec& delta = Q->delta();
  const int m_max = delta_multiple(delta, nu_);
  int q = 2;
  if (m_max > 0) {
    const int s = static_cast<int>(Catalog(Q, 2, delta).tubes().size());
    // X and Y use at most 2 m_max parameters; one more stays fresh for the test modules.
    while (q + 1 - s < 2 * m_max + 1) q = next_prime_power(q);
  }
  // Discrete test modules need to reach past nu: a larger preprojective or preinjective can
  // separate two modules that agree on everything of dimension at most nu.
  cat_ = std::make_shared<Catalog>(Q, q, dv_add(nu_, dv_scale(2, delta)), nu_);
  std::set<std::pair<int, int>> fresh_seen;
  for (const auto& e : cat_->entries())
    if (e.label.kind == IndecLabel::Kind::RegularHomog && e.label.degree == 1 && e.label.level == 0) params_.push_back(e.label);
  // Parameters [0, m_max) belong to X and are tested; [m_max, 2 m_max) are Y's fresh ones and
  // must stay untested, since Y stands for a generic member of its family.
  std::set<std::string> pool, y_fresh;
  fresh_base_ = m_max;
  for (std::size_t k = 0; k < params_.size() && static_cast<int>(k) < 2 * m_max; ++k)
    (static_cast<int>(k) < m_max ? pool : y_fresh).insert(params_[k].param);
  for (std::size_t k = 0; k < cat_->entries().size(); ++k) {
    const IndecLabel& l = cat_->entries()[k].label;
    if (l.discrete() || pool.count(l.param)) {
      tests_.push_back(k);
    } else if (y_fresh.count(l.param)) {
      continue;
    } else if (fresh_seen.insert({l.degree, l.level}).second) {
      // Parameters outside the pool all relate to X and Y alike; one per degree and level.
      tests_.push_back(k);
    }
  }
}

FqRep ClosureOracle::generic_point(const Fingerprint& a, const std::vector<int>& params) const {
  Fingerprint fp = a;
  for (int p : params) {
    if (p < 0 || p >= static_cast<int>(params_.size())) throw resource_error("closure oracle: too few homogeneous parameters");
    fp[params_[p]] += 1;
  }
  return cat_->realize(fp);
}

bool ClosureOracle::hom_order_leq(const FqRep& X, const FqRep& Y) const {
  for (std::size_t k : tests_) {
    const FqRep& N = cat_->entries()[k].rep;
    if (hom_dim(N, X) < hom_dim(N, Y)) return false;
  }
  return true;
}

std::optional<std::pair<FqRep, FqRep>> ClosureOracle::find(const Fingerprint& a, int m, const Fingerprint& b, int mb) const {
  auto key = std::make_tuple(a, m, b, mb);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  std::optional<std::pair<FqRep, FqRep>> res;
  const DimVec& delta = cat_->quiver().delta();
  if (dv_add(discrete_weight(*cat_, a), dv_scale(m, delta)) == dv_add(discrete_weight(*cat_, b), dv_scale(mb, delta))) {
    std::vector<int> px;
    for (int k = 0; k < m; ++k) px.push_back(k);
    const FqRep X = generic_point(a, px);
    for (const auto& yfp : specializations(b, m, mb)) {
      FqRep Y = cat_->realize(yfp);
      if (hom_order_leq(X, Y)) {
        res = std::make_pair(X, Y);
        break;
      }
    }
  }
  memo_.emplace(key, res);
  return res;
}

std::vector<Fingerprint> ClosureOracle::specializations(const Fingerprint& b, int m, int mb) const {
  // Blocks of k colliding parameters specialize to R_{p,k-1}, at one of X's parameters or a
  // fresh one, or to T_{t,a,kP-1} when they run into the tube t of period P.
  std::vector<Fingerprint> out;
  const auto& tubes = cat_->tubes();
  for (const auto& lam : partitions_of(mb)) {
    const auto& blocks = lam.parts();
    Fingerprint cur = b;
    std::set<int> used_tubes;
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t k, int next_x, int next_fresh) {
      if (k == blocks.size()) {
        out.push_back(cur);
        return;
      }
      const int size = blocks[k];
      auto with = [&](const IndecLabel& lab, int nx, int nf) {
        if (!cat_->find(lab)) return;
        cur[lab] += 1;
        rec(k + 1, nx, nf);
        if (--cur[lab] == 0) cur.erase(lab);
      };
      auto homog = [&](int p) {
        if (p >= static_cast<int>(params_.size())) throw resource_error("closure oracle: too few homogeneous parameters");
        IndecLabel lab = params_[p];
        lab.level = size - 1;
        return lab;
      };
      if (next_x < m) with(homog(next_x), next_x + 1, next_fresh);
      with(homog(next_fresh), next_x, next_fresh + 1);
      for (std::size_t t = 0; t < tubes.size(); ++t) {
        if (!used_tubes.insert(static_cast<int>(t)).second) continue;
        for (int ray = 1; ray <= tubes[t].period; ++ray)
          with(tube_module(static_cast<int>(t) + 1, ray, size * tubes[t].period - 1), next_x, next_fresh);
        used_tubes.erase(static_cast<int>(t));
      }
    };
    rec(0, 0, fresh_base_);
  }
  return out;
}

bool ClosureOracle::contained(const Fingerprint& a, int m, const Fingerprint& b, int mb) const {
  if (a == b && m == mb) return true;
  return find(a, m, b, mb).has_value();
}

std::pair<FqRep, FqRep> ClosureOracle::witness(const Fingerprint& a, int m, const Fingerprint& b, int mb) const {
  auto r = find(a, m, b, mb);
  if (!r) throw domain_error("witness: no containment");
  return *r;
}

Order ClosureOracle::order(const StratumIndex& p, const StratumIndex& r) const {
  if (p == r) return Order::Equal;
  if (p.a == r.a && p.m() == r.m()) return r.lam < p.lam ? Order::Less : Order::Greater;
  const bool pr = contained(p.a, p.m(), r.a, r.m());
  const bool rp = contained(r.a, r.m(), p.a, p.m());
  if (pr && rp) throw std::logic_error("distinct supports with equal closures: " + p.str() + " / " + r.str());
  if (pr) return Order::Less;
  if (rp) return Order::Greater;
  return Order::Incomparable;
}

bool degenerates_by_extensions(const Catalog& cat, const FqRep& Y, const FqRep& X, int max_nodes) {
  const std::string target = fp_str(cat.identify(X));
  std::set<std::string> seen;
  std::deque<Fingerprint> queue;
  Fingerprint start = cat.identify(Y);
  seen.insert(fp_str(start));
  queue.push_back(start);
  const DimVec nu = Y.dims();
  std::vector<DimVec> subs;
  std::function<void(std::size_t, DimVec&)> gen = [&](std::size_t i, DimVec& d) {
    if (i == d.size()) {
      if (dv_total(d) > 0 && d != nu) subs.push_back(d);
      return;
    }
    for (int k = 0; k <= nu[i]; ++k) {
      d[i] = k;
      gen(i + 1, d);
    }
  };
  DimVec d(nu.size());
  gen(0, d);
  while (!queue.empty()) {
    Fingerprint fp = queue.front();
    queue.pop_front();
    if (fp_str(fp) == target) return true;
    const FqRep E = cat.realize(fp);
    for (const auto& sub : subs)
      for_each_stable_subspace(E, sub, [&](const std::vector<Mat>& bases) {
        Fingerprint n = cat.identify(E.restrict_to(bases));
        for (const auto& [l, mult] : cat.identify(E.quotient_by(bases))) n[l] += mult;
        if (static_cast<int>(seen.size()) < max_nodes && seen.insert(fp_str(n)).second) queue.push_back(n);
      });
  }
  return false;
}

}  // namespace ah
