#include "realenum/sumformula.hpp"

#include "realenum/common.hpp"

namespace realenum {

namespace {

Integer parity_sign(long long exponent) { return exponent % 2 == 0 ? Integer(1) : Integer(-1); }

}  // namespace

void CombinationMode::validate() const {
  if (chi_rx0 != 0 && chi_rx0 != 2) throw input_error("chi(RX0) must be 0 or 2");
  if (gamma != 0 && gamma != 1) throw input_error("gamma must be 0 or 1");
}

Integer mu0(long long k, long long a, long long b, long long m, int gamma) {
  if (k < 0 || a < 0 || b < 0 || m < 0) throw input_error("mu0 takes nonnegative arguments");
  if (gamma != 0 && gamma != 1) throw input_error("gamma must be 0 or 1");
  Integer sum(0);
  for (long long bk = 0; 2 * bk <= k; ++bk) {
    long long ak = k - 2 * bk;
    sum += binomial(a, ak) * binomial(b, bk);
  }
  return parity_sign(m + gamma * (a + b)) * sum;
}

Integer mu2(long long k, long long a, long long b, long long m, int gamma) {
  if (k < 0 || a < 0 || b < 0 || m < 0) throw input_error("mu2 takes nonnegative arguments");
  if (gamma != 0 && gamma != 1) throw input_error("gamma must be 0 or 1");
  if (a != 0 || k != b) return Integer(0);
  return parity_sign(m + gamma * b) * Integer::pow2(static_cast<unsigned>(b));
}

Integer muH2(long long k, long long a, long long b, long long m) {
  if (k < 0 || a < 0 || b < 0 || m < 0) throw input_error("muH2 takes nonnegative arguments");
  if (k != 0 || a != 0 || b != 0) return Integer(0);
  return parity_sign(m);
}

Integer combine_complex(long long d_dot_e, const std::map<long long, Integer>& counts) {
  Integer total(0);
  for (const auto& [k, value] : counts) {
    if (k < 0) throw input_error("strata are indexed by nonnegative k");
    if (d_dot_e + 2 * k < 0) throw input_error("combine_complex needs d.E + 2k >= 0");
    total += binomial(d_dot_e + 2 * k, k) * value;
  }
  return total;
}

Integer combine_real(const CombinationMode& mode, const StratifiedCounts& strata) {
  mode.validate();
  Integer total(0);
  for (const auto& [key, value] : strata.entries) {
    Integer factor(0);
    switch (mode.hypothesis) {
      case Hypothesis::H2:
        factor = muH2(key.k, key.a, key.b, 0);
        break;
      case Hypothesis::H1:
        factor = mode.chi_rx0 == 0 ? mu0(key.k, key.a, key.b, 0, mode.gamma)
                                   : mu2(key.k, key.a, key.b, 0, mode.gamma);
        break;
    }
    total += factor * value;
  }
  return total;
}

Integer welschinger_ellipsoid(int d) {
  if (d < 1) throw input_error("welschinger_ellipsoid needs d >= 1");
  const SurfaceModel& f2 = surface("f2");
  return welschinger_toric(f2, f2.cls({d, 0}));
}

}  // namespace realenum
