#include "realenum/table_io.hpp"

#include <sstream>

#include <json.hpp>

#include "realenum/common.hpp"

namespace realenum {

std::string table_to_json(const InvariantTable& table) {
  nlohmann::json meta;
  meta["surface"] = table.meta.surface;
  meta["real_structure"] = table.meta.real_structure;
  meta["L"] = table.meta.L;
  meta["F"] = table.meta.F;
  nlohmann::json flags = nlohmann::json::object();
  if (table.meta.chain_of_spheres.has_value()) flags["chain_of_spheres"] = *table.meta.chain_of_spheres;
  if (table.meta.F_nontrivial.has_value()) flags["F_nontrivial"] = *table.meta.F_nontrivial;
  meta["flags"] = flags;
  meta["convention"] = table.meta.convention;
  meta["source"] = table.meta.source;

  nlohmann::json entries = nlohmann::json::array();
  for (const TableEntry& e : table.entries) {
    entries.push_back({{"class", e.cls.coords}, {"s", e.s}, {"value", e.value.to_string()}});
  }
  nlohmann::json j;
  j["schema"] = 1;
  j["meta"] = meta;
  j["entries"] = entries;
  return j.dump(2) + "\n";
}

namespace {

InvariantTable parse_table(const std::string& text, bool strict) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("malformed table JSON: ") + e.what());
  }
  try {
    if (!j.contains("schema") || j.at("schema").get<int>() != 1) {
      throw input_error("table schema must be 1");
    }
    InvariantTable table;
    const nlohmann::json& meta = j.at("meta");
    table.meta.surface = meta.at("surface").get<std::string>();
    table.meta.real_structure = meta.value("real_structure", std::string());
    table.meta.L = meta.value("L", std::string());
    table.meta.F = meta.value("F", std::string());
    table.meta.convention = meta.value("convention", std::string());
    table.meta.source = meta.value("source", std::string());
    if (meta.contains("flags")) {
      const nlohmann::json& flags = meta.at("flags");
      if (flags.contains("chain_of_spheres")) {
        table.meta.chain_of_spheres = flags.at("chain_of_spheres").get<bool>();
      }
      if (flags.contains("F_nontrivial")) {
        table.meta.F_nontrivial = flags.at("F_nontrivial").get<bool>();
      }
    }
    if (strict) {
      if (table.meta.convention.empty()) {
        throw input_error(
            "missing sign-convention tag: published tables disagree on whether the sign of a "
            "curve uses the mass against F or against F plus the complement of L; declare "
            "meta.convention (e.g. \"mass-F\" or \"mass-F-plus-complement\")");
      }
      if (table.meta.source.empty()) {
        throw input_error("missing provenance: meta.source is required on ingest");
      }
    }
    const SurfaceModel& m = surface(table.meta.surface);
    for (const nlohmann::json& je : j.at("entries")) {
      TableEntry e;
      e.cls = m.cls(je.at("class").get<std::vector<long long>>());
      e.s = je.at("s").get<long long>();
      e.value = Integer::from_string(je.at("value").get<std::string>());
      table.entries.push_back(std::move(e));
    }
    table.validate();
    return table;
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("malformed table JSON: ") + e.what());
  }
}

}  // namespace

InvariantTable table_from_json(const std::string& text) { return parse_table(text, false); }

InvariantTable table_from_json_strict(const std::string& text) { return parse_table(text, true); }

std::string table_to_csv(const InvariantTable& table, const std::string& kind) {
  std::ostringstream os;
  os << "surface,class,s,kind,value\n";
  for (const TableEntry& e : table.entries) {
    os << table.meta.surface << ",";
    for (std::size_t i = 0; i < e.cls.coords.size(); ++i) {
      if (i) os << ";";
      os << e.cls.coords[i];
    }
    os << "," << e.s << "," << kind << "," << e.value.to_string() << "\n";
  }
  return os.str();
}

}  // namespace realenum
