// Newline-delimited JSON persistence for CountTable.
//
// One record per line:
//   {"d":4,"delta":3,"alpha":[2],"beta":[2],"irr":false,"value":"674"}
// Values are decimal strings. Records that fail to parse or violate the key
// invariant are skipped and reported as warnings.
#pragma once

#include "severi/recursion.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace severi {

struct CacheLoadReport {
  std::size_t loaded = 0;
  std::vector<std::string> warnings;
};

CacheLoadReport load_cache(std::istream& in, CountTable& table);
void save_cache(std::ostream& out, const CountTable& table);

/// Single-record helpers, exposed for tests and the CLI.
std::string cache_record(const SeveriKey& key, bool irreducible, const BigCount& value);

}  // namespace severi
