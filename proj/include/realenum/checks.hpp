#ifndef REALENUM_CHECKS_HPP
#define REALENUM_CHECKS_HPP

#include <optional>
#include <string>
#include <vector>

#include "realenum/integer.hpp"
#include "realenum/lattice.hpp"

namespace realenum {

/*
  Theorem checkers over invariant tables.  Whether a table satisfies the
  geometric hypotheses (the tracked class connected to L by a chain of real
  Lagrangian spheres, F nonzero in the quotient group) cannot be decided
  from the numbers; those travel as flags, and a missing flag makes the
  gated checks report "not applicable", never "pass".
*/

struct TableMeta {
  std::string surface;
  std::string real_structure;
  std::string L;
  std::string F;
  std::string convention;  // sign-convention tag, mandatory on ingest
  std::string source;
  std::optional<bool> chain_of_spheres;
  std::optional<bool> F_nontrivial;
};

struct TableEntry {
  DivisorClass cls;
  long long s = 0;
  Integer value;
};

struct InvariantTable {
  TableMeta meta;
  std::vector<TableEntry> entries;

  void validate() const;  // duplicate keys, constraint counts
};

enum class CheckStatus { pass, fail, not_applicable };

struct CheckResult {
  std::string entry_key;
  std::string check_id;
  CheckStatus status = CheckStatus::not_applicable;
  std::string detail;
};

struct Report {
  std::vector<CheckResult> results;

  bool any_fail() const;
  std::string to_text() const;
  std::string to_json() const;
};

// r >= 2 forces a vanishing invariant (needs both hypothesis flags).
Report check_vanishing(const InvariantTable& table);

// r = 1, c1.d >= 2: 2^((c1.d - 4)/2) divides the value; entries whose
// exponent is negative are skipped with a reason.
Report check_divisibility(const InvariantTable& table);

// r = 1, F the complement of L: (-1)^node_count(d) * value >= 0.
Report check_sign(const InvariantTable& table);

// Twist by a curve class delta disjoint from the real locus.
Integer sign_twist_curve(const Integer& value, long long d_dot_delta);

// Twist by a kernel class delta; the bit is delta . l_d.
Integer sign_twist_kernel(const Integer& value, int delta_dot_ld);

// Values are >= 0 and non-increasing as chi increases.
Report check_monotonicity(const std::vector<std::pair<long long, Integer>>& series);

}  // namespace realenum

#endif  // REALENUM_CHECKS_HPP
