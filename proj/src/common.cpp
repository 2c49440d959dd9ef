#include "srk/common.hpp"

#include <algorithm>

namespace srk {

Subset set_union(const Subset& a, const Subset& b) {
  Subset out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Subset set_intersect(const Subset& a, const Subset& b) {
  Subset out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Subset set_difference(const Subset& a, const Subset& b) {
  Subset out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_contains(const Subset& a, Elem x) {
  return std::binary_search(a.begin(), a.end(), x);
}

bool is_subset_of(const Subset& a, const Subset& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; (long long)d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<int> prime_divisors(int n) {
  std::vector<int> ps;
  for (int p = 2; p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  return ps;
}

int valuation(int n, int p) {
  int v = 0;
  while (n % p == 0) {
    n /= p;
    ++v;
  }
  return v;
}

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

}  // namespace srk
