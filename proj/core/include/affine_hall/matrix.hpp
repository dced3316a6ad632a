#pragma once

#include "affine_hall/field.hpp"

#include <string>
#include <vector>

namespace ah {

// Dense row-major matrix over some GF(q); the field is passed to each operation.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<Elt> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

  Elt& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  Elt operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  bool is_zero() const;
  friend bool operator==(const Mat& x, const Mat& y) = default;
  friend auto operator<=>(const Mat& x, const Mat& y) = default;

  static Mat identity(int n);
  std::string str() const;
};

Mat mat_mul(const Field& F, const Mat& x, const Mat& y);
Mat mat_add(const Field& F, const Mat& x, const Mat& y);
Mat mat_sub(const Field& F, const Mat& x, const Mat& y);
Mat mat_scale(const Field& F, Elt c, const Mat& x);
Mat transpose(const Mat& x);
Mat hcat(const Mat& x, const Mat& y);
Mat vcat(const Mat& x, const Mat& y);
Mat block(const Mat& x, int r0, int c0, int nr, int nc);
Mat direct_sum(const Mat& x, const Mat& y);
Mat mat_pow(const Field& F, const Mat& x, int k);

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(const Field& F, Mat& x);
int rank(const Field& F, Mat x);
// Columns form a basis of the kernel (cols x k).
Mat nullspace(const Field& F, const Mat& x);
// Columns form a basis of the column space, chosen among the columns of x.
Mat column_space(const Field& F, const Mat& x);
bool is_invertible(const Field& F, const Mat& x);
Mat inverse(const Field& F, const Mat& x);
// For x of full column rank: L with L x = I.
Mat left_inverse(const Field& F, const Mat& x);
// Columns extending the column space of x (full column rank) to the whole space.
Mat complement(const Field& F, const Mat& x);
// A matrix whose kernel is exactly the column space of x (rows = n - rank).
Mat annihilator(const Field& F, const Mat& x);

// Calls f(basis) for every k-dimensional subspace of GF(q)^n, basis as an n x k matrix in
// column echelon form; cell_dim is the number of free entries of that echelon cell.
template <class Fn>
void for_each_subspace(const Field& F, int n, int k, Fn&& f);

}  // namespace ah

#include "affine_hall/detail/subspaces.hpp"
