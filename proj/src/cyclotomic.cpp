#include "srk/cyclotomic.hpp"

#include <algorithm>
#include <map>

namespace srk {

namespace {

// exact division of a by b (b monic), remainder must vanish
std::vector<long long> poly_divide_exact(std::vector<long long> a,
                                         const std::vector<long long>& b) {
  std::vector<long long> q(a.size() >= b.size() ? a.size() - b.size() + 1 : 1, 0);
  while (a.size() >= b.size()) {
    long long lead = a.back();
    size_t shift = a.size() - b.size();
    q[shift] = lead;
    for (size_t i = 0; i < b.size(); ++i) a[i + shift] -= lead * b[i];
    while (!a.empty() && a.back() == 0) a.pop_back();
    if (a.empty()) break;
  }
  for (long long c : a)
    if (c != 0) throw internal_error("cyclotomic division left a remainder");
  return q;
}

}  // namespace

std::vector<long long> cyclotomic_poly(int m) {
  if (m < 1) throw invalid_input("cyclotomic polynomial index must be >= 1");
  static std::map<int, std::vector<long long>> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  // x^m - 1 divided by Phi_d for every proper divisor d of m
  std::vector<long long> num(m + 1, 0);
  num[0] = -1;
  num[m] = 1;
  for (int d = 1; d < m; ++d) {
    if (m % d != 0) continue;
    num = poly_divide_exact(std::move(num), cyclotomic_poly(d));
  }
  cache[m] = num;
  return num;
}

CycRing::CycRing(int m) : m_(m), phi_(cyclotomic_poly(m)), deg_((int)phi_.size() - 1) {}

CycRing::Val CycRing::reduce(std::vector<long long> poly) const {
  while ((int)poly.size() > deg_) {
    long long lead = poly.back();
    size_t shift = poly.size() - phi_.size();
    for (size_t i = 0; i < phi_.size(); ++i) poly[i + shift] -= lead * phi_[i];
    while (!poly.empty() && poly.back() == 0) poly.pop_back();
  }
  poly.resize(deg_, 0);
  return poly;
}

CycRing::Val CycRing::from_int(long long n) const {
  std::vector<long long> p{n};
  return reduce(std::move(p));
}

CycRing::Val CycRing::root_power(long long k) const {
  k %= m_;
  if (k < 0) k += m_;
  std::vector<long long> p(k + 1, 0);
  p[k] = 1;
  return reduce(std::move(p));
}

CycRing::Val CycRing::add(const Val& a, const Val& b) const {
  Val v = a;
  for (int i = 0; i < deg_; ++i) v[i] += b[i];
  return v;
}

CycRing::Val CycRing::sub(const Val& a, const Val& b) const {
  Val v = a;
  for (int i = 0; i < deg_; ++i) v[i] -= b[i];
  return v;
}

CycRing::Val CycRing::mul(const Val& a, const Val& b) const {
  std::vector<long long> p(2 * deg_ - 1 > 0 ? 2 * deg_ - 1 : 1, 0);
  for (int i = 0; i < deg_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < deg_; ++j) p[i + j] += a[i] * b[j];
  }
  return reduce(std::move(p));
}

bool CycRing::is_zero(const Val& a) const {
  return std::all_of(a.begin(), a.end(), [](long long c) { return c == 0; });
}

}  // namespace srk
