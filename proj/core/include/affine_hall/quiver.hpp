#pragma once

#include <memory>
#include <string>
#include <vector>

namespace ah {

// Per-vertex integers, indexed by vertex position. Signed where roots require it.
using DimVec = std::vector<int>;

DimVec dv_add(const DimVec& a, const DimVec& b);
DimVec dv_sub(const DimVec& a, const DimVec& b);
DimVec dv_scale(int k, const DimVec& a);
bool dv_leq(const DimVec& a, const DimVec& b);
bool dv_nonneg(const DimVec& a);
int dv_total(const DimVec& a);
std::string dv_str(const DimVec& a);

struct Arrow {
  int s;
  int t;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

struct Root {
  DimVec dim;
  bool real;
};

class Quiver;
using QuiverPtr = std::shared_ptr<const Quiver>;

class Quiver {
 public:
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  // {"vertices":[...], "arrows":[[s,t],...]}; throws parse_error with a location.
  static Quiver from_json(const std::string& text);
  static Quiver load(const std::string& path);
  static QuiverPtr kronecker();

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  int index_of(const std::string& id) const;
  DimVec simple(int i) const;
  DimVec zero() const { return DimVec(vertices_.size(), 0); }

  // Number of edges between i and j (i != j) in the underlying graph.
  int edges(int i, int j) const;
  int symmetric_form(const DimVec& a, const DimVec& b) const;
  int euler_form(const DimVec& a, const DimVec& b) const;
  DimVec reflect(int i, const DimVec& a) const;

  bool is_sink(int i) const;
  bool is_source(int i) const;
  bool acyclic() const;
  // The quiver with every arrow at i reversed; arrow indices are kept.
  Quiver reflected_at(int i) const;

  // "A1" (Kronecker), "A<n>", "D<n>", "E<n>" for the affine graph types.
  const std::string& affine_type() const { return type_; }
  const DimVec& delta() const { return delta_; }
  std::vector<int> extending_vertices() const;
  bool is_kronecker() const { return type_ == "A1"; }

  // i_0,...,i_n with i_0 a sink and each i_k a sink after reflecting at i_0..i_{k-1}.
  // Throws unsupported_error for quivers with an oriented cycle.
  const std::vector<int>& admissible_order() const;

  std::vector<Root> positive_roots(const DimVec& bound) const;

  std::string to_json() const;
  // Stable content hash of the canonical JSON (vertex and arrow order included).
  std::string hash() const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertices_ == b.vertices_ && a.arrows_ == b.arrows_;
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::string type_;
  DimVec delta_;
  std::vector<int> order_;
  bool acyclic_ = true;
  void detect_type();
};

}  // namespace ah
