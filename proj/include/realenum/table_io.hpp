#ifndef REALENUM_TABLE_IO_HPP
#define REALENUM_TABLE_IO_HPP

#include <string>

#include "realenum/checks.hpp"

namespace realenum {

/*
  Table schema, fixed across tools:

    { "schema": 1,
      "meta": { "surface": ..., "real_structure": ..., "L": ..., "F": ...,
                "flags": { "chain_of_spheres": bool, "F_nontrivial": bool },
                "convention": ..., "source": ... },
      "entries": [ { "class": [ints], "s": int, "value": "decimal string" } ] }

  Values are decimal strings so arbitrary-precision integers survive every
  tool in the chain.  Absent flags stay absent (meaning "unknown", which
  gates the hypothesis-bound checks to n/a).
*/

std::string table_to_json(const InvariantTable& table);
InvariantTable table_from_json(const std::string& text);

// Ingest-grade parsing: additionally requires meta.convention and
// meta.source to be present and nonempty.
InvariantTable table_from_json_strict(const std::string& text);

std::string table_to_csv(const InvariantTable& table, const std::string& kind);

}  // namespace realenum

#endif  // REALENUM_TABLE_IO_HPP
