#pragma once

#include <utility>
#include <vector>

namespace ah {

template <class Fn>
void for_each_subspace(const Field& F, int n, int k, Fn&& f) {
  if (k < 0 || k > n) return;
  const int q = F.q();
  std::vector<int> piv(k);
  for (int c = 0; c < k; ++c) piv[c] = c;
  while (true) {
    std::vector<bool> is_piv(n, false);
    for (int p : piv) is_piv[p] = true;
    std::vector<std::pair<int, int>> free;  // (row, col)
    for (int c = 0; c < k; ++c)
      for (int r = piv[c] + 1; r < n; ++r)
        if (!is_piv[r]) free.emplace_back(r, c);
    Mat basis(n, k);
    for (int c = 0; c < k; ++c) basis(piv[c], c) = 1;
    std::vector<int> digit(free.size(), 0);
    const int cell_dim = static_cast<int>(free.size());
    while (true) {
      f(static_cast<const Mat&>(basis), cell_dim);
      std::size_t t = 0;
      for (; t < digit.size(); ++t) {
        if (++digit[t] < q) {
          basis(free[t].first, free[t].second) = static_cast<Elt>(digit[t]);
          break;
        }
        digit[t] = 0;
        basis(free[t].first, free[t].second) = 0;
      }
      if (t == digit.size()) break;
    }
    int c = k - 1;
    while (c >= 0 && piv[c] == n - k + c) --c;
    if (c < 0) break;
    ++piv[c];
    for (int d = c + 1; d < k; ++d) piv[d] = piv[d - 1] + 1;
  }
}

}  // namespace ah
