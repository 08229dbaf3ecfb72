#pragma once

#include <algorithm>
#include <string>
#include <string_view>

#include <json.hpp>

#include "eqsig/diagram.hpp"
#include "eqsig/errors.hpp"

namespace eqsig {

namespace detail {

inline std::string line_of(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return std::to_string(line);
}

inline Side side_from_string(const std::string& s, const char* field) {
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  fail_parse("syntax", std::string("field '") + field + "' must be \"left\" or \"right\"");
}

}  // namespace detail

// Reads the diagram file format. Returns the file's content as-is; no
// inference or repair. Structural checks beyond the format live in validate().
inline DiagramData parse(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail_parse("syntax", "line " + detail::line_of(text, e.byte) + ": " + e.what());
  }
  if (!j.is_object()) fail_parse("syntax", "top level must be a JSON object");

  static const char* keys[] = {"name", "n", "crossings", "on_axis", "involution",
                               "h_side_at_start", "h_side_at_end"};
  for (const char* k : keys)
    if (!j.contains(k)) fail_parse("syntax", std::string("missing field '") + k + "'");
  for (auto it = j.begin(); it != j.end(); ++it)
    if (std::find_if(std::begin(keys), std::end(keys),
                     [&](const char* k) { return it.key() == k; }) == std::end(keys))
      fail_parse("syntax", "unknown field '" + it.key() + "'");

  DiagramData d;
  try {
    d.name = j.at("name").get<std::string>();
    d.n = j.at("n").get<int>();
  } catch (const nlohmann::json::exception& e) {
    fail_parse("syntax", std::string("field 'name'/'n': ") + e.what());
  }
  if (d.n < 1) fail_parse("syntax", "n must be a positive integer");
  const int segs = 2 * d.n + 2;

  if (!j.at("crossings").is_array()) fail_parse("syntax", "field 'crossings' must be an array");
  std::set<int> seen_ids;
  for (const auto& jc : j.at("crossings")) {
    CrossingRecord c;
    try {
      c.id = jc.at("id").get<int>();
      auto pd = jc.at("pd").get<std::vector<int>>();
      if (pd.size() != 4) fail_parse("syntax", "crossing pd must have four entries");
      std::copy(pd.begin(), pd.end(), c.pd.begin());
    } catch (const nlohmann::json::exception& e) {
      fail_parse("syntax", std::string("field 'crossings': ") + e.what());
    }
    if (c.id < 1 || c.id > d.n)
      fail_parse("id_range", "crossing id " + std::to_string(c.id) + " outside 1..n");
    if (!seen_ids.insert(c.id).second)
      fail_parse("duplicate_id", "duplicate crossing id " + std::to_string(c.id));
    for (int s : c.pd)
      if (s < 1 || s > segs)
        fail_parse("label_range", "crossing " + std::to_string(c.id) + ": segment label " +
                                      std::to_string(s) + " outside 1..2n+2 = 1.." + std::to_string(segs));
    d.crossings.push_back(c);
  }

  try {
    d.on_axis = j.at("on_axis").get<std::vector<int>>();
    for (const auto& jp : j.at("involution")) {
      auto pr = jp.get<std::vector<int>>();
      if (pr.size() != 2) fail_parse("syntax", "involution entries must be pairs");
      d.involution.push_back({pr[0], pr[1]});
    }
    d.h_side_at_start =
        detail::side_from_string(j.at("h_side_at_start").get<std::string>(), "h_side_at_start");
    d.h_side_at_end =
        detail::side_from_string(j.at("h_side_at_end").get<std::string>(), "h_side_at_end");
  } catch (const nlohmann::json::exception& e) {
    fail_parse("syntax", e.what());
  }
  for (int id : d.on_axis)
    if (!seen_ids.count(id))
      fail_parse("id_range", "on_axis references unknown crossing " + std::to_string(id));
  for (const auto& pr : d.involution)
    for (int id : pr)
      if (!seen_ids.count(id))
        fail_parse("id_range", "involution references unknown crossing " + std::to_string(id));
  return d;
}

// Canonical serialization: crossings sorted by id, on_axis sorted, involution
// pairs (min,max) sorted lexicographically, two-space indentation, fixed key
// order. parse(serialize(d)) == d byte-for-byte on this form.
inline std::string serialize(const SymmetricDiagram& d) {
  const DiagramData& data = d.data();
  nlohmann::ordered_json j;
  j["name"] = data.name;
  j["n"] = data.n;
  auto crossings = data.crossings;
  std::sort(crossings.begin(), crossings.end(),
            [](const CrossingRecord& a, const CrossingRecord& b) { return a.id < b.id; });
  j["crossings"] = nlohmann::ordered_json::array();
  for (const auto& c : crossings)
    j["crossings"].push_back({{"id", c.id}, {"pd", c.pd}});
  auto on_axis = data.on_axis;
  std::sort(on_axis.begin(), on_axis.end());
  j["on_axis"] = on_axis;
  auto pairs = data.involution;
  for (auto& pr : pairs)
    if (pr[0] > pr[1]) std::swap(pr[0], pr[1]);
  std::sort(pairs.begin(), pairs.end());
  j["involution"] = pairs;
  j["h_side_at_start"] = to_string(data.h_side_at_start);
  j["h_side_at_end"] = to_string(data.h_side_at_end);
  return j.dump(2) + "\n";
}

}  // namespace eqsig
