#include "affine_hall/catalog.hpp"

#include "affine_hall/embed.hpp"
#include "affine_hall/errors.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace ah {

std::string IndecLabel::str() const {
  switch (kind) {
    case Kind::Preprojective:
      return "P" + std::to_string(index);
    case Kind::Preinjective:
      return "I" + std::to_string(index);
    case Kind::RegularInhomog:
      return "T" + std::to_string(tube) + "." + std::to_string(ray) + "." + std::to_string(level);
    case Kind::RegularHomog:
      return "R[" + param + "]." + std::to_string(level);
  }
  return "?";
}

IndecLabel preprojective(int m) {
  IndecLabel l;
  l.kind = IndecLabel::Kind::Preprojective;
  l.index = m;
  return l;
}

IndecLabel preinjective(int l) {
  IndecLabel r;
  r.kind = IndecLabel::Kind::Preinjective;
  r.index = l;
  return r;
}

IndecLabel tube_module(int tube, int ray, int level) {
  IndecLabel r;
  r.kind = IndecLabel::Kind::RegularInhomog;
  r.tube = tube;
  r.ray = ray;
  r.level = level;
  return r;
}

std::string fp_str(const Fingerprint& fp) {
  if (fp.empty()) return "0";
  std::string s;
  for (const auto& [l, m] : fp) {
    if (!s.empty()) s += "+";
    s += l.str();
    if (m != 1) s += "^" + std::to_string(m);
  }
  return s;
}

int preprojective_index(const FqRep& M) {
  if (M.is_zero()) return -1;
  const auto& order = M.quiver().admissible_order();
  const int n1 = static_cast<int>(order.size());
  const int steps = n1 * (M.total_dim() + 2);
  FqRep X = M;
  for (int c = 1; c <= steps; ++c) {
    X = bgp_reflect(order[(c - 1) % n1], +1, X);
    if (X.is_zero()) return c - 1;
  }
  return -1;
}

bool preinjective_index(const FqRep& M, int& l) {
  if (M.is_zero()) return false;
  const auto& order = M.quiver().admissible_order();
  const int n1 = static_cast<int>(order.size());
  const int steps = n1 * (M.total_dim() + 2);
  FqRep X = M;
  for (int c = 1; c <= steps; ++c) {
    X = bgp_reflect(order[n1 - 1 - (c - 1) % n1], -1, X);
    if (X.is_zero()) {
      l = n1 - c;
      return true;
    }
  }
  return false;
}

int coxeter_period(const FqRep& M, int max_period) {
  FqRep X = M;
  for (int k = 1; k <= max_period; ++k) {
    X = coxeter(X, +1);
    if (X.is_zero()) return 0;
    if (isomorphic_indecomposables(X, M)) return k;
  }
  return 0;
}

Catalog::Catalog(QuiverPtr quiver, int q, DimVec bound) : Catalog(quiver, q, bound, bound) {}

Catalog::Catalog(QuiverPtr quiver, int q, DimVec bound, DimVec homogeneous_bound)
    : quiver_(std::move(quiver)), q_(q), bound_(std::move(bound)), homog_bound_(std::move(homogeneous_bound)) {
  if (static_cast<int>(bound_.size()) != quiver_->num_vertices() || homog_bound_.size() != bound_.size())
    throw domain_error("catalog bound has wrong size");
  if (!dv_leq(homog_bound_, bound_)) throw domain_error("homogeneous bound exceeds the catalog bound");
  (void)quiver_->admissible_order();
  build_preprojectives();
  build_preinjectives();
  build_regular();
  std::sort(entries_.begin(), entries_.end(),
            [](const CatalogEntry& a, const CatalogEntry& b) { return a.label < b.label; });
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    by_label_[entries_[k].label] = k;
    by_dims_[entries_[k].rep.dims()].push_back(k);
    entries_[k].end_dim = hom_dim(entries_[k].rep, entries_[k].rep);
  }
}

void Catalog::add(IndecLabel label, FqRep rep, int top_degree) {
  entries_.push_back({std::move(label), rep.with_quiver(quiver_), 1, top_degree});
}

void Catalog::build_preprojectives() {
  const auto& order = quiver_->admissible_order();
  const int n1 = static_cast<int>(order.size());
  const int limit = dv_total(bound_) + dv_total(quiver_->delta()) * (n1 + 1);
  for (int r = 0; r < n1; ++r) {
    QuiverPtr Qr = quiver_;
    for (int k = 0; k < r; ++k) Qr = reflected_quiver(Qr, order[k]);
    FqRep X = FqRep::simple(Qr, q_, order[r]);
    for (int k = r - 1; k >= 0; --k) X = bgp_reflect(order[k], -1, X);
    X = X.with_quiver(quiver_);
    for (int m = r; X.total_dim() <= limit; m += n1) {
      if (dv_leq(X.dims(), bound_)) add(preprojective(m), X, 1);
      X = coxeter(X, -1);
    }
  }
}

void Catalog::build_preinjectives() {
  const auto& order = quiver_->admissible_order();
  const int n1 = static_cast<int>(order.size());
  const int limit = dv_total(bound_) + dv_total(quiver_->delta()) * (n1 + 1);
  for (int l = 0; l < n1; ++l) {
    QuiverPtr Ql = quiver_;
    for (int k = 0; k <= l; ++k) Ql = reflected_quiver(Ql, order[k]);
    FqRep X = FqRep::simple(Ql, q_, order[l]);
    for (int k = l + 1; k < n1; ++k) X = bgp_reflect(order[k], +1, X);
    X = X.with_quiver(quiver_);
    for (int idx = l; X.total_dim() <= limit; idx -= n1) {
      if (dv_leq(X.dims(), bound_)) add(preinjective(idx), X, 1);
      X = coxeter(X, +1);
    }
  }
}

void Catalog::build_regular() {
  if (quiver_->is_kronecker()) {
    const Field& F = Field::get(q_);
    const int cap = std::min(homog_bound_[0], homog_bound_[1]);
    auto add_param = [&](const FqPoly* f, int d) {
      for (int l = 0; d * (l + 1) <= cap; ++l) {
        IndecLabel lab;
        lab.kind = IndecLabel::Kind::RegularHomog;
        lab.param = f ? poly_str(*f) : "inf";
        lab.degree = d;
        lab.level = l;
        add(lab, kronecker_regular(quiver_, q_, f, l), d);
      }
    };
    add_param(nullptr, 1);
    for (int d = 1; d <= cap; ++d)
      for (const auto& f : monic_irreducibles(F, d)) add_param(&f, d);
    return;
  }
  build_tubes();
  build_homogeneous();
}

void Catalog::build_tubes() {
  const DimVec& delta = quiver_->delta();
  std::vector<Root> roots = quiver_->positive_roots(delta);
  std::set<DimVec> covered;
  std::vector<std::vector<FqRep>> orbits;
  std::mt19937_64 rng(0x7abe5ull);
  for (const auto& r : roots) {
    if (!r.real || covered.count(r.dim)) continue;
    for (int t = 0; t < 4000; ++t) {
      FqRep X = FqRep::random(quiver_, q_, r.dim, rng);
      if (!is_indecomposable(X)) continue;
      // The indecomposable of a real root is unique; decide its kind once.
      int l;
      if (preprojective_index(X) >= 0 || preinjective_index(X, l)) break;
      std::vector<FqRep> orbit{X};
      DimVec sum = X.dims();
      FqRep Y = coxeter(X, +1);
      while (!isomorphic_indecomposables(Y, X) && static_cast<int>(orbit.size()) <= quiver_->num_vertices()) {
        orbit.push_back(Y);
        sum = dv_add(sum, Y.dims());
        Y = coxeter(Y, +1);
      }
      if (sum == delta) {
        for (const auto& o : orbit) covered.insert(o.dims());
        orbits.push_back(std::move(orbit));
      }
      break;
    }
  }
  // Ray 1 is the simple with the lexicographically least dimension vector.
  for (auto& o : orbits) {
    auto it = std::min_element(o.begin(), o.end(), [](const FqRep& a, const FqRep& b) { return a.dims() < b.dims(); });
    std::rotate(o.begin(), it, o.end());
  }
  std::sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) { return a[0].dims() < b[0].dims(); });
  for (auto& o : orbits) tubes_.push_back({static_cast<int>(o.size()), std::move(o)});

  for (std::size_t t = 0; t < tubes_.size(); ++t) {
    const int p = tubes_[t].period;
    // level -> ray -> module, built as the non-split extension of T_{a,0} by T_{a+1,l-1}.
    std::vector<std::vector<FqRep>> lv{tubes_[t].simples};
    for (int l = 1;; ++l) {
      std::vector<FqRep> next;
      bool any = false;
      for (int a = 0; a < p; ++a) {
        const FqRep& U = lv[l - 1][(a + 1) % p];
        const FqRep& W = lv[0][a];
        if (U.is_zero() || !dv_leq(dv_add(U.dims(), W.dims()), bound_)) {
          next.push_back(FqRep::zero(quiver_, q_, quiver_->zero()));
          continue;
        }
        next.push_back(nonsplit_extension(W, U));
        any = true;
      }
      if (!any) break;
      lv.push_back(std::move(next));
    }
    for (std::size_t l = 0; l < lv.size(); ++l)
      for (int a = 0; a < p; ++a)
        if (!lv[l][a].is_zero() && dv_leq(lv[l][a].dims(), bound_))
          add(tube_module(static_cast<int>(t) + 1, a + 1, static_cast<int>(l)), lv[l][a], 1);
  }
}

void Catalog::build_homogeneous() {
  const Field& F = Field::get(q_);
  const QuiverPtr K = intern_quiver(*Quiver::kronecker());
  const int kase = default_embed_case(*quiver_);
  const DimVec& delta = quiver_->delta();
  int cap = 0;
  while (dv_leq(dv_scale(cap + 1, delta), homog_bound_)) ++cap;
  auto add_param = [&](const FqPoly* f, int d) {
    if (d > cap) return;
    FqRep R0 = kronecker_embed(kase, quiver_, kronecker_regular(K, q_, f, 0));
    if (coxeter_period(R0, 1) != 1) return;
    for (int l = 0; d * (l + 1) <= cap; ++l) {
      IndecLabel lab;
      lab.kind = IndecLabel::Kind::RegularHomog;
      lab.param = f ? poly_str(*f) : "inf";
      lab.degree = d;
      lab.level = l;
      add(lab, l == 0 ? R0 : kronecker_embed(kase, quiver_, kronecker_regular(K, q_, f, l)), d);
    }
  };
  add_param(nullptr, 1);
  for (int d = 1; d <= cap; ++d)
    for (const auto& f : monic_irreducibles(F, d)) add_param(&f, d);
}

int Catalog::homogeneous_points() const {
  int c = 0;
  for (const auto& e : entries_)
    if (e.label.kind == IndecLabel::Kind::RegularHomog && e.label.level == 0 && e.label.degree == 1) ++c;
  return c;
}

const CatalogEntry* Catalog::find(const IndecLabel& label) const {
  auto it = by_label_.find(label);
  return it == by_label_.end() ? nullptr : &entries_[it->second];
}

IndecLabel Catalog::lookup(const FqRep& M) const {
  auto it = by_dims_.find(M.dims());
  if (it == by_dims_.end()) throw domain_error("indecomposable of dimension " + dv_str(M.dims()) + " outside the catalog");
  const auto& cand = it->second;
  // Real roots carry a unique indecomposable.
  if (cand.size() == 1 && quiver_->symmetric_form(M.dims(), M.dims()) == 2) return entries_[cand[0]].label;
  for (std::size_t k : cand)
    if (isomorphic_indecomposables(entries_[k].rep, M)) return entries_[k].label;
  throw domain_error("indecomposable not found in the catalog: " + M.str());
}

IndecLabel Catalog::classify(const FqRep& M) const {
  if (!is_indecomposable(M)) throw domain_error("classify: representation is not indecomposable");
  const int m = preprojective_index(M);
  if (m >= 0) return preprojective(m);
  int l;
  if (preinjective_index(M, l)) return preinjective(l);
  IndecLabel lab = lookup(M);
  if (lab.kind != IndecLabel::Kind::RegularInhomog && lab.kind != IndecLabel::Kind::RegularHomog)
    throw std::logic_error("catalog label disagrees with reflection classification");
  return lab;
}

Fingerprint Catalog::identify(const FqRep& M) const {
  if (!(M.quiver() == *quiver_) || M.q() != q_) throw domain_error("identify: representation from another catalog");
  std::string key = M.key();
  {
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = identify_memo_.find(key);
    if (it != identify_memo_.end()) return it->second;
  }
  Fingerprint fp;
  for (const auto& s : decompose(M)) fp[lookup(s.rep)] += s.mult;
  std::lock_guard<std::recursive_mutex> lock(mu_);
  identify_memo_.emplace(std::move(key), fp);
  return fp;
}

FqRep Catalog::realize(const Fingerprint& fp) const {
  std::vector<FqRep> parts;
  for (const auto& [l, m] : fp) {
    const CatalogEntry* e = find(l);
    if (!e) throw domain_error("realize: label " + l.str() + " not in catalog");
    for (int k = 0; k < m; ++k) parts.push_back(e->rep);
  }
  return direct_sum(parts, quiver_, q_);
}

bool Catalog::is_aperiodic(const Fingerprint& fp) const {
  std::map<int, std::set<int>> levels;
  for (const auto& [l, m] : fp) {
    if (l.kind != IndecLabel::Kind::RegularInhomog) throw domain_error("is_aperiodic: summand outside an inhomogeneous tube");
    levels[l.tube].insert(l.level);
  }
  for (const auto& [t, ls] : levels) {
    const int p = tubes_.at(t - 1).period;
    for (int lev : ls) {
      bool missing = false;
      for (int a = 1; a <= p && !missing; ++a)
        if (!fp.count(tube_module(t, a, lev))) missing = true;
      if (!missing) return false;
    }
  }
  return true;
}

int Catalog::hom(const IndecLabel& a, const IndecLabel& b) const {
  const std::size_t i = by_label_.at(a), j = by_label_.at(b);
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = hom_memo_.find({i, j});
  if (it != hom_memo_.end()) return it->second;
  const int h = hom_dim(entries_[i].rep, entries_[j].rep);
  hom_memo_.emplace(std::make_pair(i, j), h);
  return h;
}

int Catalog::end_dim(const Fingerprint& fp) const {
  int d = 0;
  for (const auto& [a, ma] : fp)
    for (const auto& [b, mb] : fp) d += ma * mb * hom(a, b);
  return d;
}

BigInt Catalog::aut_order(const Fingerprint& fp) const {
  int rad = end_dim(fp);
  BigInt r = 1;
  for (const auto& [l, m] : fp) {
    const int d = find(l)->top_degree;
    rad -= m * m * d;
    r *= gl_order(m, boost::multiprecision::pow(BigInt(q_), d));
  }
  return r * boost::multiprecision::pow(BigInt(q_), rad);
}

BigInt Catalog::gv_order(const DimVec& nu) const {
  BigInt r = 1;
  for (int d : nu) r *= gl_order(d, BigInt(q_));
  return r;
}

int Catalog::ev_dim(const DimVec& nu) const {
  int d = 0;
  for (const auto& h : quiver_->arrows()) d += nu[h.s] * nu[h.t];
  return d;
}

const std::vector<Orbit>& Catalog::orbits(const DimVec& nu) const {
  std::lock_guard<std::recursive_mutex> lock(mu_);
  auto it = orbit_memo_.find(nu);
  if (it != orbit_memo_.end()) return *it->second;
  if (!dv_leq(nu, homog_bound_)) throw domain_error("orbits: weight " + dv_str(nu) + " exceeds the catalog bound");
  auto out = std::make_unique<std::vector<Orbit>>();
  std::vector<std::size_t> cand;
  for (std::size_t k = 0; k < entries_.size(); ++k)
    if (dv_leq(entries_[k].rep.dims(), nu)) cand.push_back(k);
  const BigInt gv = gv_order(nu);
  Fingerprint cur;
  std::function<void(std::size_t, const DimVec&)> rec = [&](std::size_t k, const DimVec& rest) {
    if (std::all_of(rest.begin(), rest.end(), [](int x) { return x == 0; })) {
      Orbit o;
      o.fp = cur;
      o.key = fp_str(cur);
      o.rep = realize(cur);
      o.end_dim = end_dim(cur);
      o.size = gv / aut_order(cur);
      out->push_back(std::move(o));
      return;
    }
    if (k == cand.size()) return;
    const CatalogEntry& e = entries_[cand[k]];
    DimVec r = rest;
    int m = 0;
    while (true) {
      rec(k + 1, r);
      r = dv_sub(r, e.rep.dims());
      if (!dv_nonneg(r)) break;
      ++m;
      cur[e.label] = m;
    }
    cur.erase(e.label);
  };
  rec(0, nu);
  std::sort(out->begin(), out->end(), [](const Orbit& a, const Orbit& b) { return a.fp < b.fp; });
  auto& idx = orbit_index_[nu];
  for (std::size_t k = 0; k < out->size(); ++k) idx[(*out)[k].key] = k;
  return *orbit_memo_.emplace(nu, std::move(out)).first->second;
}

const Orbit& Catalog::orbit(const DimVec& nu, const std::string& key) const {
  const auto& os = orbits(nu);
  std::lock_guard<std::recursive_mutex> lock(mu_);
  return os.at(orbit_index_.at(nu).at(key));
}

bool Catalog::orbits_complete(const DimVec& nu) const {
  BigInt s = 0;
  for (const auto& o : orbits(nu)) s += o.size;
  return s == boost::multiprecision::pow(BigInt(q_), ev_dim(nu));
}

}  // namespace ah
