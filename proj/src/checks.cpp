#include "realenum/checks.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

#include "realenum/common.hpp"

namespace realenum {

void InvariantTable::validate() const {
  std::set<std::pair<std::vector<long long>, long long>> seen;
  for (const TableEntry& e : entries) {
    if (e.cls.surface_id != meta.surface) {
      throw input_error("table entry class does not live on " + meta.surface);
    }
    if (e.s < 0) throw input_error("s counts conjugate point pairs and cannot be negative");
    if (!seen.insert({e.cls.coords, e.s}).second) {
      throw input_error("duplicate (class, s) key in table");
    }
    constraint_split(e.cls, e.s);  // throws when r < 0
  }
}

bool Report::any_fail() const {
  return std::any_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.status == CheckStatus::fail; });
}

namespace {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::not_applicable: return "n/a";
  }
  return "?";
}

std::string entry_key_of(const TableEntry& e) {
  std::ostringstream os;
  os << "class=[";
  for (std::size_t i = 0; i < e.cls.coords.size(); ++i) {
    if (i) os << ",";
    os << e.cls.coords[i];
  }
  os << "],s=" << e.s;
  return os.str();
}

}  // namespace

std::string Report::to_text() const {
  std::ostringstream os;
  for (const CheckResult& r : results) {
    os << r.check_id << " " << r.entry_key << " " << status_name(r.status);
    if (!r.detail.empty()) os << " (" << r.detail << ")";
    os << "\n";
  }
  return os.str();
}

std::string Report::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const CheckResult& r : results) {
    arr.push_back({{"entry", r.entry_key},
                   {"check", r.check_id},
                   {"status", status_name(r.status)},
                   {"detail", r.detail}});
  }
  return arr.dump(2);
}

Report check_vanishing(const InvariantTable& table) {
  table.validate();
  Report report;
  bool applicable = table.meta.chain_of_spheres.value_or(false) &&
                    table.meta.F_nontrivial.value_or(false);
  for (const TableEntry& e : table.entries) {
    CheckResult r{entry_key_of(e), "vanishing", CheckStatus::not_applicable, ""};
    if (!applicable) {
      r.detail = "hypothesis flags absent or unset";
    } else {
      long long rr = constraint_split(e.cls, e.s);
      if (rr < 2) {
        r.detail = "r < 2";
      } else if (e.value.is_zero()) {
        r.status = CheckStatus::pass;
      } else {
        r.status = CheckStatus::fail;
        r.detail = "r = " + std::to_string(rr) + " but value = " + e.value.to_string();
      }
    }
    report.results.push_back(std::move(r));
  }
  return report;
}

Report check_divisibility(const InvariantTable& table) {
  table.validate();
  Report report;
  bool applicable = table.meta.chain_of_spheres.value_or(false) &&
                    table.meta.F_nontrivial.value_or(false);
  for (const TableEntry& e : table.entries) {
    CheckResult r{entry_key_of(e), "divisibility", CheckStatus::not_applicable, ""};
    if (!applicable) {
      r.detail = "hypothesis flags absent or unset";
    } else {
      long long rr = constraint_split(e.cls, e.s);
      long long c1d = c1_dot(e.cls).to_long_long();
      if (rr != 1 || c1d < 2) {
        r.detail = "needs r = 1 and c1.d >= 2";
      } else if ((c1d - 4) % 2 != 0 || c1d < 4) {
        r.detail = "exponent (c1.d - 4)/2 not a nonnegative integer; skipped";
      } else {
        unsigned exponent = static_cast<unsigned>((c1d - 4) / 2);
        if (e.value.divisible_by_pow2(exponent)) {
          r.status = CheckStatus::pass;
        } else {
          r.status = CheckStatus::fail;
          r.detail = "2^" + std::to_string(exponent) + " does not divide " + e.value.to_string();
        }
      }
    }
    report.results.push_back(std::move(r));
  }
  return report;
}

Report check_sign(const InvariantTable& table) {
  table.validate();
  Report report;
  bool f_is_complement = table.meta.F == "complement-of-L";
  for (const TableEntry& e : table.entries) {
    CheckResult r{entry_key_of(e), "sign", CheckStatus::not_applicable, ""};
    if (!f_is_complement) {
      r.detail = "F is not the complement class";
    } else {
      long long rr = constraint_split(e.cls, e.s);
      if (rr != 1) {
        r.detail = "needs r = 1";
      } else {
        Integer nodes = node_count(e.cls);
        Integer signed_value = nodes.is_even() ? e.value : -e.value;
        if (!signed_value.is_negative()) {
          r.status = CheckStatus::pass;
        } else {
          r.status = CheckStatus::fail;
          r.detail = "(-1)^" + nodes.to_string() + " * " + e.value.to_string() + " < 0";
        }
      }
    }
    report.results.push_back(std::move(r));
  }
  return report;
}

Integer sign_twist_curve(const Integer& value, long long d_dot_delta) {
  if (d_dot_delta < 0 || d_dot_delta % 2 != 0) {
    throw input_error("d.delta must be even and nonnegative: disjoint real parts "
                      "meet in conjugate pairs");
  }
  return (d_dot_delta / 2) % 2 == 0 ? value : -value;
}

Integer sign_twist_kernel(const Integer& value, int delta_dot_ld) {
  if (delta_dot_ld != 0 && delta_dot_ld != 1) throw input_error("delta.l_d is a bit");
  return delta_dot_ld == 0 ? value : -value;
}

Report check_monotonicity(const std::vector<std::pair<long long, Integer>>& series) {
  std::vector<std::pair<long long, Integer>> sorted = series;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  Report report;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    CheckResult r{"chi=" + std::to_string(sorted[i].first), "monotonicity", CheckStatus::pass, ""};
    if (sorted[i].second.is_negative()) {
      r.status = CheckStatus::fail;
      r.detail = "negative value " + sorted[i].second.to_string();
    } else if (i > 0 && sorted[i - 1].second < sorted[i].second) {
      r.status = CheckStatus::fail;
      r.detail = "value increases from " + sorted[i - 1].second.to_string() + " to " +
                 sorted[i].second.to_string() + " as chi grows";
    }
    report.results.push_back(std::move(r));
  }
  return report;
}

}  // namespace realenum
