#include "affine_hall/quiver.hpp"

#include "affine_hall/errors.hpp"
#include "affine_hall/ring.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

namespace ah {

DimVec dv_add(const DimVec& a, const DimVec& b) {
  DimVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

DimVec dv_sub(const DimVec& a, const DimVec& b) {
  DimVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

DimVec dv_scale(int k, const DimVec& a) {
  DimVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

bool dv_leq(const DimVec& a, const DimVec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool dv_nonneg(const DimVec& a) {
  return std::all_of(a.begin(), a.end(), [](int x) { return x >= 0; });
}

int dv_total(const DimVec& a) { return std::accumulate(a.begin(), a.end(), 0); }

std::string dv_str(const DimVec& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
  return s + ")";
}

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  const int n = num_vertices();
  if (n == 0) throw domain_error("quiver has no vertices");
  if (std::set<std::string>(vertices_.begin(), vertices_.end()).size() != vertices_.size())
    throw domain_error("duplicate vertex id");
  for (const auto& h : arrows_) {
    if (h.s < 0 || h.s >= n || h.t < 0 || h.t >= n) throw domain_error("arrow endpoint out of range");
    if (h.s == h.t) throw unsupported_error("loops are not allowed in an affine quiver");
  }
  detect_type();

  // Kahn-style check for oriented cycles.
  std::vector<int> indeg(n, 0);
  for (const auto& h : arrows_) ++indeg[h.t];
  std::vector<int> stack;
  for (int i = 0; i < n; ++i)
    if (!indeg[i]) stack.push_back(i);
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (const auto& h : arrows_)
      if (h.s == v && --indeg[h.t] == 0) stack.push_back(h.t);
  }
  acyclic_ = seen == n;
  if (!acyclic_) return;

  std::vector<Arrow> cur = arrows_;
  std::vector<bool> used(n, false);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int i = 0; i < n && pick < 0; ++i) {
      if (used[i]) continue;
      bool sink = std::none_of(cur.begin(), cur.end(), [i](const Arrow& h) { return h.s == i; });
      if (sink) pick = i;
    }
    if (pick < 0) throw std::logic_error("acyclic quiver without an admissible order");
    used[pick] = true;
    order_.push_back(pick);
    for (auto& h : cur)
      if (h.s == pick || h.t == pick) std::swap(h.s, h.t);
  }
}

QuiverPtr Quiver::kronecker() {
  return std::make_shared<const Quiver>(std::vector<std::string>{"0", "1"}, std::vector<Arrow>{{1, 0}, {1, 0}});
}

Quiver Quiver::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw parse_error(std::string("quiver json: ") + e.what());
  }
  if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
    throw parse_error("quiver json: expected an object with \"vertices\" and \"arrows\"");
  std::vector<std::string> vs;
  for (std::size_t k = 0; k < j["vertices"].size(); ++k) {
    const auto& v = j["vertices"][k];
    if (!v.is_string()) throw parse_error("quiver json: vertices[" + std::to_string(k) + "] is not a string");
    vs.push_back(v.get<std::string>());
  }
  std::vector<Arrow> hs;
  for (std::size_t k = 0; k < j["arrows"].size(); ++k) {
    const auto& a = j["arrows"][k];
    const std::string where = "quiver json: arrows[" + std::to_string(k) + "]";
    if (!a.is_array() || a.size() != 2 || !a[0].is_string() || !a[1].is_string())
      throw parse_error(where + " must be a pair of vertex ids");
    auto find = [&](const std::string& id) {
      auto it = std::find(vs.begin(), vs.end(), id);
      if (it == vs.end()) throw parse_error(where + ": unknown vertex \"" + id + "\"");
      return static_cast<int>(it - vs.begin());
    };
    hs.push_back({find(a[0].get<std::string>()), find(a[1].get<std::string>())});
  }
  try {
    return Quiver(std::move(vs), std::move(hs));
  } catch (const domain_error& e) {
    throw parse_error(std::string("quiver json: ") + e.what());
  }
}

Quiver Quiver::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open quiver file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return from_json(ss.str());
  } catch (const parse_error& e) {
    throw parse_error(path + ": " + e.what());
  }
}

int Quiver::index_of(const std::string& id) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end()) throw domain_error("unknown vertex " + id);
  return static_cast<int>(it - vertices_.begin());
}

DimVec Quiver::simple(int i) const {
  DimVec d = zero();
  d.at(i) = 1;
  return d;
}

int Quiver::edges(int i, int j) const {
  int c = 0;
  for (const auto& h : arrows_)
    if ((h.s == i && h.t == j) || (h.s == j && h.t == i)) ++c;
  return c;
}

int Quiver::symmetric_form(const DimVec& a, const DimVec& b) const {
  int r = 0;
  for (int i = 0; i < num_vertices(); ++i) r += 2 * a[i] * b[i];
  for (const auto& h : arrows_) r -= a[h.s] * b[h.t] + a[h.t] * b[h.s];
  return r;
}

int Quiver::euler_form(const DimVec& a, const DimVec& b) const {
  int r = 0;
  for (int i = 0; i < num_vertices(); ++i) r += a[i] * b[i];
  for (const auto& h : arrows_) r -= a[h.s] * b[h.t];
  return r;
}

DimVec Quiver::reflect(int i, const DimVec& a) const {
  DimVec r = a;
  r[i] -= symmetric_form(a, simple(i));
  return r;
}

bool Quiver::is_sink(int i) const {
  return std::none_of(arrows_.begin(), arrows_.end(), [i](const Arrow& h) { return h.s == i; });
}

bool Quiver::is_source(int i) const {
  return std::none_of(arrows_.begin(), arrows_.end(), [i](const Arrow& h) { return h.t == i; });
}

bool Quiver::acyclic() const { return acyclic_; }

Quiver Quiver::reflected_at(int i) const {
  std::vector<Arrow> hs = arrows_;
  for (auto& h : hs)
    if (h.s == i || h.t == i) std::swap(h.s, h.t);
  return Quiver(vertices_, std::move(hs));
}

const std::vector<int>& Quiver::admissible_order() const {
  if (!acyclic_) throw unsupported_error("admissible order requires a quiver without oriented cycles");
  return order_;
}

std::vector<int> Quiver::extending_vertices() const {
  std::vector<int> r;
  for (int i = 0; i < num_vertices(); ++i)
    if (delta_[i] == 1) r.push_back(i);
  return r;
}

void Quiver::detect_type() {
  const int n = num_vertices();
  // Connectedness of the underlying graph.
  std::vector<int> comp(n, -1);
  std::vector<int> stack{0};
  comp[0] = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& h : arrows_) {
      int w = h.s == v ? h.t : (h.t == v ? h.s : -1);
      if (w >= 0 && comp[w] < 0) {
        comp[w] = 0;
        stack.push_back(w);
      }
    }
  }
  if (std::count(comp.begin(), comp.end(), -1) > 0) throw unsupported_error("quiver graph is not connected");

  // Affine graphs are exactly the connected ones whose Cartan matrix has a one-dimensional
  // kernel spanned by a positive vector; that vector is delta.
  std::vector<std::vector<Rational>> c(n, std::vector<Rational>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[i][j] = i == j ? 2 : -edges(i, j);
  std::vector<int> piv;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int sel = -1;
    for (int i = row; i < n; ++i)
      if (c[i][col] != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(c[sel], c[row]);
    Rational s = c[row][col];
    for (auto& x : c[row]) x /= s;
    for (int i = 0; i < n; ++i) {
      if (i == row || c[i][col] == 0) continue;
      Rational f = c[i][col];
      for (int j = 0; j < n; ++j) c[i][j] -= f * c[row][j];
    }
    piv.push_back(col);
    ++row;
  }
  if (static_cast<int>(piv.size()) != n - 1) throw unsupported_error("quiver is not of affine type");
  int free_col = 0;
  while (std::find(piv.begin(), piv.end(), free_col) != piv.end()) ++free_col;
  std::vector<Rational> v(n, 0);
  v[free_col] = 1;
  for (std::size_t k = 0; k < piv.size(); ++k) v[piv[k]] = -c[k][free_col];
  BigInt den = 1;
  for (const auto& x : v) den = boost::multiprecision::lcm(den, boost::multiprecision::denominator(x));
  std::vector<BigInt> iv(n);
  BigInt g = 0;
  for (int i = 0; i < n; ++i) {
    iv[i] = boost::multiprecision::numerator(Rational(v[i] * den));
    g = boost::multiprecision::gcd(g, iv[i]);
  }
  if (iv[0] < 0) g = -g;
  delta_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    BigInt d = iv[i] / g;
    if (d <= 0) throw unsupported_error("quiver is not of affine type");
    delta_[i] = static_cast<int>(d);
  }
  const int mx = *std::max_element(delta_.begin(), delta_.end());
  if (n == 2) {
    type_ = "A1";
  } else if (mx == 1) {
    type_ = "A" + std::to_string(n - 1);
  } else if (mx == 2) {
    type_ = "D" + std::to_string(n - 1);
  } else if (mx == 3) {
    type_ = "E6";
  } else if (mx == 4) {
    type_ = "E7";
  } else if (mx == 6) {
    type_ = "E8";
  } else {
    throw unsupported_error("quiver is not of affine type");
  }
}

std::vector<Root> Quiver::positive_roots(const DimVec& bound) const {
  std::vector<Root> out;
  DimVec a = zero();
  const int n = num_vertices();
  while (true) {
    int k = 0;
    while (k < n && a[k] == bound[k]) a[k++] = 0;
    if (k == n) break;
    ++a[k];
    const int f = symmetric_form(a, a);
    if (f <= 2) out.push_back({a, f == 2});
  }
  std::sort(out.begin(), out.end(), [](const Root& x, const Root& y) {
    int tx = dv_total(x.dim), ty = dv_total(y.dim);
    return tx != ty ? tx < ty : x.dim < y.dim;
  });
  return out;
}

std::string Quiver::to_json() const {
  nlohmann::json j;
  j["vertices"] = vertices_;
  j["arrows"] = nlohmann::json::array();
  for (const auto& h : arrows_) j["arrows"].push_back({vertices_[h.s], vertices_[h.t]});
  return j.dump();
}

std::string Quiver::hash() const {
  // 64-bit FNV-1a of the canonical JSON text.
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : to_json()) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace ah
