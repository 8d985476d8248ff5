#include <doctest.h>

#include <vector>

#include "realenum/common.hpp"
#include "realenum/sumformula.hpp"

using namespace realenum;

TEST_CASE("mu0 values") {
  CHECK(mu0(1, 2, 1, 0, 0) == Integer(2));  // only (a_k, b_k) = (1, 0) contributes
  // (2,0) and (0,1) contribute one each; the sign exponent m + gamma(a+b) = 4 is even
  CHECK(mu0(2, 2, 1, 1, 1) == Integer(2));
  CHECK(mu0(3, 0, 1, 0, 0) == Integer(0));  // no split of 3 into a_k + 2 b_k fits
  CHECK(mu0(0, 0, 0, 1, 0) == Integer(-1));
  CHECK_THROWS_AS(mu0(-1, 0, 0, 0, 0), input_error);
  CHECK_THROWS_AS(mu0(0, 0, 0, 0, 2), input_error);
}

TEST_CASE("mu0 equals a coefficient of (1+x)^a (1+x^2)^b") {
  for (long long a = 0; a <= 8; ++a) {
    for (long long b = 0; b <= 8; ++b) {
      // expand the product with exact coefficients
      std::vector<Integer> poly{Integer(1)};
      for (long long i = 0; i < a; ++i) {
        std::vector<Integer> next(poly.size() + 1, Integer(0));
        for (std::size_t j = 0; j < poly.size(); ++j) {
          next[j] += poly[j];
          next[j + 1] += poly[j];
        }
        poly = next;
      }
      for (long long i = 0; i < b; ++i) {
        std::vector<Integer> next(poly.size() + 2, Integer(0));
        for (std::size_t j = 0; j < poly.size(); ++j) {
          next[j] += poly[j];
          next[j + 2] += poly[j];
        }
        poly = next;
      }
      for (long long k = 0; k <= a + 2 * b; ++k) {
        CHECK(mu0(k, a, b, 0, 0) == poly[static_cast<std::size_t>(k)]);
        CHECK(mu0(k, a, b, 1, 0) == -poly[static_cast<std::size_t>(k)]);
      }
    }
  }
}

TEST_CASE("total mass identity") {
  for (long long a = 0; a <= 12; ++a) {
    for (long long b = 0; b <= 12; ++b) {
      Integer total(0);
      for (long long k = 0; k <= a + 2 * b; ++k) total += mu0(k, a, b, 0, 0);
      CHECK(total == Integer::pow2(static_cast<unsigned>(a + b)));
    }
  }
}

TEST_CASE("mu2 values") {
  CHECK(mu2(2, 0, 2, 0, 1) == Integer(4));
  CHECK(mu2(2, 1, 2, 0, 0) == Integer(0));
  CHECK(mu2(1, 0, 2, 0, 0) == Integer(0));
  CHECK(mu2(0, 0, 0, 0, 0) == Integer(1));
  CHECK(mu2(3, 0, 3, 1, 1) == Integer(8));  // (-1)^(1+3) 2^3
  for (long long a = 1; a <= 4; ++a) {
    for (long long k = 0; k <= 4; ++k) {
      for (long long b = 0; b <= 4; ++b) CHECK(mu2(k, a, b, 0, 0).is_zero());
    }
  }
}

TEST_CASE("muH2 values") {
  CHECK(muH2(0, 0, 0, 3) == Integer(-1));
  CHECK(muH2(0, 1, 0, 0) == Integer(0));
  CHECK(muH2(1, 0, 0, 0) == Integer(0));
  CHECK(muH2(0, 0, 0, 0) == Integer(1));
}

TEST_CASE("combine_complex") {
  std::map<long long, Integer> counts{{0, Integer(7)}, {1, Integer(5)}, {2, Integer(3)}};
  // binomials C(0,0), C(2,1), C(4,2)
  CHECK(combine_complex(0, counts) == Integer(7) + Integer(2) * Integer(5) + Integer(6) * Integer(3));
  std::map<long long, Integer> single{{0, Integer(11)}};
  for (long long de = 0; de <= 5; ++de) CHECK(combine_complex(de, single) == Integer(11));
  std::map<long long, Integer> one_k{{3, Integer(2)}};
  CHECK(combine_complex(1, one_k) == binomial(7, 3) * Integer(2));
  std::map<long long, Integer> bad{{0, Integer(1)}};
  CHECK_THROWS_AS(combine_complex(-1, bad), input_error);
}

TEST_CASE("combine_real modes") {
  StratifiedCounts strata;
  strata.d_dot_e = 0;
  strata.entries[StratumKey{0, 0, 0}] = Integer(5);
  strata.entries[StratumKey{1, 2, 0}] = Integer(7);

  CHECK(combine_real({Hypothesis::H2, 0, 0}, strata) == Integer(5));
  CHECK(combine_real({Hypothesis::H1, 2, 0}, strata) == Integer(5));  // mu2 kills k >= 1 at b = 0
  // chi = 0: C(0,0)*5 + C(2,1)*7
  CHECK(combine_real({Hypothesis::H1, 0, 0}, strata) == Integer(19));
  CHECK_THROWS_AS(combine_real({Hypothesis::H1, 1, 0}, strata), input_error);
  CHECK_THROWS_AS(combine_real({Hypothesis::H1, 0, 2}, strata), input_error);
}

TEST_CASE("combine_real chi=0 b=0 reduces to binomial sums") {
  const SurfaceModel& f0 = surface("f0");
  DivisorClass d = f0.cls({2, 2});
  StratifiedCounts strata = relative_real_counts_f2(d);
  Integer expect(0);
  for (const auto& [key, value] : strata.entries) {
    expect += binomial(key.a, key.k) * value;
  }
  CHECK(combine_real({Hypothesis::H1, 0, 0}, strata) == expect);
}

TEST_CASE("gamma calibration is pinned by odd-pairing classes") {
  // classes with odd d.E separate the two gamma candidates; the frozen bit
  // is the one matching the direct count
  const SurfaceModel& f0 = surface("f0");
  DivisorClass d = f0.cls({1, 2});
  StratifiedCounts strata = relative_real_counts_f2(d);
  Integer direct = welschinger_toric(f0, d);
  CHECK(combine_real({Hypothesis::H1, 0, kCalibratedGammaHyperboloid}, strata) == direct);
  CHECK(combine_real({Hypothesis::H1, 0, 1 - kCalibratedGammaHyperboloid}, strata) == -direct);
  CHECK(direct == Integer(1));
}

TEST_CASE("ellipsoid counts") {
  CHECK(welschinger_ellipsoid(1) == Integer(1));
  // pinned by the floor-diagram engine after its oracle calibration
  CHECK(welschinger_ellipsoid(2) == Integer(6));
  CHECK_THROWS_AS(welschinger_ellipsoid(0), input_error);

  const SurfaceModel& f0 = surface("f0");
  const SurfaceModel& f2 = surface("f2");
  for (int d = 1; d <= 3; ++d) {
    Integer direct = welschinger_toric(f2, f2.cls({d, 0}));
    CHECK(welschinger_ellipsoid(d) == direct);
    StratifiedCounts strata = relative_real_counts_f2(f0.cls({d, d}));
    CHECK(combine_real({Hypothesis::H1, 2, 0}, strata) == direct);
    // only the k = 0 stratum survives the sphere multiplicity at s = 0
    for (const auto& [key, value] : strata.entries) {
      if (key.k > 0) CHECK(mu2(key.k, key.a, key.b, 0, 0).is_zero());
    }
  }
}
