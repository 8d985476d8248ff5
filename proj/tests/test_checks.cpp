#include <doctest.h>

#include "realenum/checks.hpp"
#include "realenum/common.hpp"

using namespace realenum;

namespace {

InvariantTable flagged_f0_table() {
  InvariantTable t;
  t.meta.surface = "f0";
  t.meta.real_structure = "tau_hy";
  t.meta.L = "torus";
  t.meta.F = "complement-of-L";
  t.meta.convention = "mass-F";
  t.meta.source = "synthetic";
  t.meta.chain_of_spheres = true;
  t.meta.F_nontrivial = true;
  return t;
}

TableEntry entry(std::vector<long long> coords, long long s, long long value) {
  return TableEntry{DivisorClass{"f0", std::move(coords)}, s, Integer(value)};
}

}  // namespace

TEST_CASE("vanishing checker") {
  InvariantTable t = flagged_f0_table();
  t.entries.push_back(entry({2, 2}, 2, 0));  // r = 3: must vanish, does
  t.entries.push_back(entry({2, 2}, 0, 0));  // r = 7
  Report ok = check_vanishing(t);
  CHECK(!ok.any_fail());

  t.entries.push_back(entry({2, 2}, 1, 5));  // r = 5, nonzero: violation
  Report bad = check_vanishing(t);
  CHECK(bad.any_fail());

  InvariantTable unflagged = flagged_f0_table();
  unflagged.meta.chain_of_spheres.reset();
  unflagged.entries.push_back(entry({2, 2}, 1, 5));
  Report na = check_vanishing(unflagged);
  CHECK(!na.any_fail());
  CHECK(na.results.at(0).status == CheckStatus::not_applicable);
}

TEST_CASE("divisibility checker") {
  // r = 1 entries: c1.d = 2 + 2s on f0, so (a, b) with 2a + 2b = 2 + 2s
  InvariantTable t = flagged_f0_table();
  t.entries.push_back(entry({2, 2}, 3, 48));  // c1.d = 8, divisor 2^2 | 48
  t.entries.push_back(entry({1, 1}, 1, 7));   // c1.d = 4, divisor 2^0: anything passes
  Report ok = check_divisibility(t);
  CHECK(!ok.any_fail());

  InvariantTable bad = flagged_f0_table();
  bad.entries.push_back(entry({1, 2}, 2, 3));  // c1.d = 6, divisor 2^1 does not divide 3
  CHECK(check_divisibility(bad).any_fail());

  InvariantTable skipped = flagged_f0_table();
  skipped.entries.push_back(entry({1, 0}, 0, 1));  // c1.d = 2: exponent negative, skipped
  Report r = check_divisibility(skipped);
  CHECK(!r.any_fail());
  CHECK(r.results.at(0).status == CheckStatus::not_applicable);

  InvariantTable unflagged;
  unflagged.meta = flagged_f0_table().meta;
  unflagged.meta.F_nontrivial.reset();
  unflagged.entries.push_back(entry({1, 2}, 2, 3));
  CHECK(check_divisibility(unflagged).results.at(0).status == CheckStatus::not_applicable);
}

TEST_CASE("sign checker") {
  InvariantTable t = flagged_f0_table();
  t.entries.push_back(entry({2, 2}, 3, -7));  // node count 1: negative value expected
  t.entries.push_back(entry({3, 1}, 3, 0));   // zero always passes
  CHECK(!check_sign(t).any_fail());

  InvariantTable bad = flagged_f0_table();
  bad.entries.push_back(entry({1, 2}, 2, -1));  // node count 0: must be >= 0
  CHECK(check_sign(bad).any_fail());

  InvariantTable other_f = flagged_f0_table();
  other_f.meta.F = "zero";
  other_f.entries.push_back(entry({1, 2}, 2, -1));
  CHECK(check_sign(other_f).results.at(0).status == CheckStatus::not_applicable);

  // r != 1 entries are not in scope
  InvariantTable r2 = flagged_f0_table();
  r2.entries.push_back(entry({2, 2}, 0, -5));
  CHECK(check_sign(r2).results.at(0).status == CheckStatus::not_applicable);
}

TEST_CASE("sign twists") {
  CHECK(sign_twist_curve(Integer(5), 2) == Integer(-5));
  CHECK(sign_twist_curve(Integer(5), 4) == Integer(5));
  CHECK(sign_twist_curve(Integer(0), 6) == Integer(0));
  CHECK_THROWS_AS(sign_twist_curve(Integer(5), 3), input_error);

  CHECK(sign_twist_kernel(Integer(7), 1) == Integer(-7));
  CHECK(sign_twist_kernel(Integer(7), 0) == Integer(7));
  CHECK(sign_twist_kernel(Integer(0), 1) == Integer(0));
  CHECK_THROWS_AS(sign_twist_kernel(Integer(7), 2), input_error);

  for (long long v : {-9, 0, 4}) {
    for (long long d : {0, 2, 4, 10}) {
      CHECK(sign_twist_curve(sign_twist_curve(Integer(v), d), d) == Integer(v));
    }
  }
}

TEST_CASE("monotonicity checker") {
  CHECK(!check_monotonicity({{-5, Integer(10)}, {-3, Integer(4)}, {-1, Integer(0)}}).any_fail());
  CHECK(check_monotonicity({{-5, Integer(2)}, {-3, Integer(4)}}).any_fail());
  CHECK(!check_monotonicity({{0, Integer(5)}}).any_fail());
  CHECK(check_monotonicity({{0, Integer(-1)}}).any_fail());
  // order of presentation does not matter
  CHECK(!check_monotonicity({{-1, Integer(0)}, {-5, Integer(10)}, {-3, Integer(4)}}).any_fail());
}

TEST_CASE("reports are deterministic") {
  InvariantTable t = flagged_f0_table();
  t.entries.push_back(entry({2, 2}, 3, 48));
  t.entries.push_back(entry({2, 2}, 1, 5));
  Report a = check_vanishing(t);
  Report b = check_vanishing(t);
  CHECK(a.to_text() == b.to_text());
  CHECK(a.to_json() == b.to_json());
}

TEST_CASE("exponent zero never fails") {
  for (long long v = -50; v <= 50; ++v) {
    InvariantTable t = flagged_f0_table();
    t.entries.push_back(entry({1, 1}, 1, v));  // c1.d = 4: divisor 2^0 = 1
    CHECK(!check_divisibility(t).any_fail());
  }
}

TEST_CASE("table validation") {
  InvariantTable t = flagged_f0_table();
  t.entries.push_back(entry({2, 2}, 0, 1));
  t.entries.push_back(entry({2, 2}, 0, 2));  // duplicate key
  CHECK_THROWS_AS(t.validate(), input_error);

  InvariantTable over = flagged_f0_table();
  over.entries.push_back(entry({1, 1}, 5, 1));  // r < 0
  CHECK_THROWS_AS(over.validate(), input_error);

  InvariantTable negative_s = flagged_f0_table();
  negative_s.entries.push_back(entry({1, 1}, -1, 1));
  CHECK_THROWS_AS(negative_s.validate(), input_error);
}
