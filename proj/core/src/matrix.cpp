#include "affine_hall/matrix.hpp"

#include "affine_hall/errors.hpp"

#include <sstream>

namespace ah {

bool Mat::is_zero() const {
  for (Elt e : a)
    if (e) return false;
  return true;
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

std::string Mat::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < rows; ++i) {
    if (i) os << ";";
    for (int j = 0; j < cols; ++j) os << (j ? " " : "") << int((*this)(i, j));
  }
  os << "]";
  return os.str();
}

Mat mat_mul(const Field& F, const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw domain_error("mat_mul: shape mismatch");
  Mat r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Elt c = x(i, k);
      if (!c) continue;
      for (int j = 0; j < y.cols; ++j) {
        const Elt b = y(k, j);
        if (b) r(i, j) = F.add(r(i, j), F.mul(c, b));
      }
    }
  return r;
}

Mat mat_add(const Field& F, const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw domain_error("mat_add: shape mismatch");
  Mat r(x.rows, x.cols);
  for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = F.add(x.a[i], y.a[i]);
  return r;
}

Mat mat_sub(const Field& F, const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw domain_error("mat_sub: shape mismatch");
  Mat r(x.rows, x.cols);
  for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = F.sub(x.a[i], y.a[i]);
  return r;
}

Mat mat_scale(const Field& F, Elt c, const Mat& x) {
  Mat r(x.rows, x.cols);
  for (std::size_t i = 0; i < x.a.size(); ++i) r.a[i] = F.mul(c, x.a[i]);
  return r;
}

Mat transpose(const Mat& x) {
  Mat r(x.cols, x.rows);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r(j, i) = x(i, j);
  return r;
}

Mat hcat(const Mat& x, const Mat& y) {
  if (x.rows != y.rows) throw domain_error("hcat: row mismatch");
  Mat r(x.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) r(i, j) = x(i, j);
    for (int j = 0; j < y.cols; ++j) r(i, x.cols + j) = y(i, j);
  }
  return r;
}

Mat vcat(const Mat& x, const Mat& y) {
  if (x.cols != y.cols) throw domain_error("vcat: column mismatch");
  Mat r(x.rows + y.rows, x.cols);
  std::copy(x.a.begin(), x.a.end(), r.a.begin());
  std::copy(y.a.begin(), y.a.end(), r.a.begin() + x.a.size());
  return r;
}

Mat block(const Mat& x, int r0, int c0, int nr, int nc) {
  Mat r(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) r(i, j) = x(r0 + i, c0 + j);
  return r;
}

Mat direct_sum(const Mat& x, const Mat& y) {
  Mat r(x.rows + y.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int j = 0; j < x.cols; ++j) r(i, j) = x(i, j);
  for (int i = 0; i < y.rows; ++i)
    for (int j = 0; j < y.cols; ++j) r(x.rows + i, x.cols + j) = y(i, j);
  return r;
}

Mat mat_pow(const Field& F, const Mat& x, int k) {
  Mat r = Mat::identity(x.rows);
  Mat b = x;
  while (k > 0) {
    if (k & 1) r = mat_mul(F, r, b);
    k >>= 1;
    if (k) b = mat_mul(F, b, b);
  }
  return r;
}

std::vector<int> rref(const Field& F, Mat& x) {
  std::vector<int> piv;
  int row = 0;
  for (int col = 0; col < x.cols && row < x.rows; ++col) {
    int sel = -1;
    for (int i = row; i < x.rows; ++i)
      if (x(i, col)) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != row)
      for (int j = 0; j < x.cols; ++j) std::swap(x(sel, j), x(row, j));
    const Elt s = F.inv(x(row, col));
    for (int j = col; j < x.cols; ++j) x(row, j) = F.mul(s, x(row, j));
    for (int i = 0; i < x.rows; ++i) {
      if (i == row) continue;
      const Elt c = x(i, col);
      if (!c) continue;
      const Elt nc = F.neg(c);
      for (int j = col; j < x.cols; ++j)
        if (x(row, j)) x(i, j) = F.add(x(i, j), F.mul(nc, x(row, j)));
    }
    piv.push_back(col);
    ++row;
  }
  return piv;
}

int rank(const Field& F, Mat x) { return static_cast<int>(rref(F, x).size()); }

Mat nullspace(const Field& F, const Mat& x) {
  Mat r = x;
  std::vector<int> piv = rref(F, r);
  std::vector<bool> is_piv(x.cols, false);
  for (int p : piv) is_piv[p] = true;
  Mat out(x.cols, x.cols - static_cast<int>(piv.size()));
  int k = 0;
  for (int f = 0; f < x.cols; ++f) {
    if (is_piv[f]) continue;
    out(f, k) = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) out(piv[i], k) = F.neg(r(static_cast<int>(i), f));
    ++k;
  }
  return out;
}

Mat column_space(const Field& F, const Mat& x) {
  Mat r = x;
  std::vector<int> piv = rref(F, r);
  Mat out(x.rows, static_cast<int>(piv.size()));
  for (std::size_t k = 0; k < piv.size(); ++k)
    for (int i = 0; i < x.rows; ++i) out(i, static_cast<int>(k)) = x(i, piv[k]);
  return out;
}

bool is_invertible(const Field& F, const Mat& x) { return x.rows == x.cols && rank(F, x) == x.rows; }

Mat inverse(const Field& F, const Mat& x) {
  if (x.rows != x.cols) throw domain_error("inverse of non-square matrix");
  const int n = x.rows;
  Mat aug = hcat(x, Mat::identity(n));
  std::vector<int> piv = rref(F, aug);
  if (static_cast<int>(piv.size()) < n || (n > 0 && piv[n - 1] >= n)) throw domain_error("matrix is singular");
  return block(aug, 0, n, n, n);
}

Mat left_inverse(const Field& F, const Mat& x) {
  // Row-reduce [x | I]; the rows that pivot on x give L with L x = I.
  const int n = x.rows, k = x.cols;
  Mat aug = hcat(x, Mat::identity(n));
  std::vector<int> piv = rref(F, aug);
  int used = 0;
  for (int p : piv)
    if (p < k) ++used;
  if (used != k) throw domain_error("left_inverse: matrix lacks full column rank");
  return block(aug, 0, k, k, n);
}

Mat complement(const Field& F, const Mat& x) {
  const int n = x.rows;
  Mat aug = hcat(x, Mat::identity(n));
  Mat r = aug;
  std::vector<int> piv = rref(F, r);
  Mat out(n, 0);
  std::vector<int> extra;
  for (int p : piv)
    if (p >= x.cols) extra.push_back(p - x.cols);
  out = Mat(n, static_cast<int>(extra.size()));
  for (std::size_t k = 0; k < extra.size(); ++k) out(extra[k], static_cast<int>(k)) = 1;
  return out;
}

Mat annihilator(const Field& F, const Mat& x) {
  // Rows spanning the left kernel of x.
  return transpose(nullspace(F, transpose(x)));
}

}  // namespace ah
