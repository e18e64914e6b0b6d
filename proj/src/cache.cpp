#include "severi/cache.hpp"

#include <json.hpp>

#include <istream>
#include <ostream>

namespace severi {

namespace {

using nlohmann::json;

Tally tally_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("tally must be an array");
  std::vector<int> entries;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument("tally entries must be integers");
    entries.push_back(v.get<int>());
  }
  return Tally(std::move(entries));
}

}  // namespace

std::string cache_record(const SeveriKey& key, bool irreducible, const BigCount& value) {
  json j;
  j["d"] = key.d;
  j["delta"] = key.delta;
  j["alpha"] = key.alpha.entries();
  j["beta"] = key.beta.entries();
  j["irr"] = irreducible;
  j["value"] = to_decimal(value);
  return j.dump();
}

CacheLoadReport load_cache(std::istream& in, CountTable& table) {
  CacheLoadReport report;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      json j = json::parse(line);
      SeveriKey key{j.at("d").get<int>(), j.at("delta").get<int>(), tally_from_json(j.at("alpha")),
                    tally_from_json(j.at("beta"))};
      key.validate();
      const auto& v = j.at("value");
      if (!v.is_string()) throw std::invalid_argument("value must be a decimal string");
      BigCount value;
      if (value.set_str(v.get<std::string>(), 10) != 0 || value < 0)
        throw std::invalid_argument("value is not a non-negative decimal integer");
      table.insert(key, j.at("irr").get<bool>(), value);
      ++report.loaded;
    } catch (const std::exception& e) {
      report.warnings.push_back("cache line " + std::to_string(line_no) + " skipped: " + e.what());
    }
  }
  return report;
}

void save_cache(std::ostream& out, const CountTable& table) {
  for (const auto& e : table.entries()) out << cache_record(e.key, e.irreducible, e.value) << '\n';
}

}  // namespace severi
