#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace swreg {

/// Binomial coefficient as a double; exact for the sizes used here and
/// free of integer overflow when used as a budget estimate.
inline double binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (long long i = 1; i <= k; ++i) r = r * static_cast<double>(n - k + i) / static_cast<double>(i);
  return std::round(r);
}

/// Calls fn(const std::vector<int>&) for every k-subset of {0..n-1} in
/// lexicographic order. fn returns false to stop early; the return value
/// says whether the enumeration ran to completion.
template <typename Fn>
bool for_each_combination(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return true;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (!fn(static_cast<const std::vector<int>&>(idx))) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return true;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace swreg
