#ifndef SRK_CYCLOTOMIC_HPP
#define SRK_CYCLOTOMIC_HPP

#include <vector>

#include "srk/common.hpp"

namespace srk {

// Coefficients of the m-th cyclotomic polynomial, ascending degree, monic.
std::vector<long long> cyclotomic_poly(int m);

// Exact arithmetic in Z[x]/(Phi_m), i.e. the ring of integers of the m-th
// cyclotomic field. Values are coefficient vectors of length deg(Phi_m).
class CycRing {
 public:
  using Val = std::vector<long long>;

  explicit CycRing(int m);

  int conductor() const { return m_; }
  int degree() const { return deg_; }

  Val zero() const { return Val(deg_, 0); }
  Val from_int(long long n) const;
  Val root_power(long long k) const;  // zeta_m^k reduced
  Val add(const Val& a, const Val& b) const;
  Val sub(const Val& a, const Val& b) const;
  Val mul(const Val& a, const Val& b) const;
  bool is_zero(const Val& a) const;

 private:
  Val reduce(std::vector<long long> poly) const;
  int m_;
  std::vector<long long> phi_;
  int deg_;
};

}  // namespace srk

#endif
