#ifndef REALENUM_SUMFORMULA_HPP
#define REALENUM_SUMFORMULA_HPP

#include "realenum/floors.hpp"
#include "realenum/integer.hpp"

namespace realenum {

/*
  Multiplicities attached to a curve on the (-2)-summand meeting the
  splitting curve in a real points and b conjugate pairs, and the sums
  combining stratified counts into invariants of the glued surface.

  Which multiplicity applies depends on the real locus of the quadric
  summand: chi = 0 (torus or empty) uses mu0, chi = 2 (sphere) uses mu2;
  the disk configurations (hypothesis H2) use muH2 and only see the
  (0,0,0) stratum.  gamma records whether the tracked surface F0 + L0
  represents the vanishing class.
*/

enum class Hypothesis { H1, H2 };

struct CombinationMode {
  Hypothesis hypothesis = Hypothesis::H1;
  int chi_rx0 = 0;  // 0 or 2
  int gamma = 0;    // 0 or 1

  void validate() const;
};

// (-1)^(m + gamma (a+b)) * sum over k = a_k + 2 b_k of C(a, a_k) C(b, b_k).
Integer mu0(long long k, long long a, long long b, long long m, int gamma);

// (-1)^(m + gamma b) 2^b when a = 0 and k = b, else 0.
Integer mu2(long long k, long long a, long long b, long long m, int gamma);

// (-1)^m when k = a = b = 0, else 0.
Integer muH2(long long k, long long a, long long b, long long m);

// Sum over k of C(dE + 2k, k) * counts[k].
Integer combine_complex(long long d_dot_e, const std::map<long long, Integer>& counts);

// Combination of pre-signed stratified counts (each entry already holds the
// sum of (-1)^m over its curves, so the mu formulas are applied with m = 0
// and the gamma sign factored out per stratum).
Integer combine_real(const CombinationMode& mode, const StratifiedCounts& strata);

// Gamma calibrated once against the real trade identity on the hyperboloid
// (chi = 0) and frozen; recorded in every abv-real report.
constexpr int kCalibratedGammaHyperboloid = 0;

// Welschinger count of the quadric ellipsoid for the class d(l1 + l2) at
// s = 0: equal by the trapezoid correspondence to the count of class (d, 0)
// on the f2 model.
Integer welschinger_ellipsoid(int d);

}  // namespace realenum

#endif  // REALENUM_SUMFORMULA_HPP
