#pragma once

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "perfect_code.hpp"

namespace pcl {

using json = nlohmann::ordered_json;

// Accepts {"name"?, "order", "table"} or {"name"?, "degree", "generators"}.
inline FiniteGroup load_group(json const &doc, std::size_t max_order = kDefaultMaxOrder) {
  if (!doc.is_object()) throw Error("group document must be a JSON object");
  std::string name = doc.value("name", std::string{});
  try {
    if (doc.contains("table")) {
      auto table = doc.at("table").get<std::vector<std::vector<long long>>>();
      if (doc.contains("order") && doc.at("order").get<long long>() != static_cast<long long>(table.size()))
        throw Error("declared order does not match table size");
      std::vector<std::vector<Element>> t(table.size());
      for (std::size_t i = 0; i < table.size(); ++i)
        for (auto v : table[i]) {
          if (v < 0) throw Error("table entry out of range");
          t[i].push_back(static_cast<Element>(v));
        }
      return FiniteGroup::from_table(t, std::move(name), max_order);
    }
    if (doc.contains("generators")) {
      const auto degree = doc.at("degree").get<long long>();
      if (degree <= 0) throw Error("degree must be positive");
      auto gens = doc.at("generators").get<std::vector<std::vector<long long>>>();
      std::vector<std::vector<std::uint32_t>> g;
      for (auto const &p : gens) {
        std::vector<std::uint32_t> q;
        for (auto v : p) {
          if (v < 0) throw Error("generator is not a permutation");
          q.push_back(static_cast<std::uint32_t>(v));
        }
        g.push_back(std::move(q));
      }
      return FiniteGroup::from_permutations(static_cast<std::size_t>(degree), g, std::move(name), max_order);
    }
  } catch (json::exception const &e) {
    throw Error(std::string("malformed group document: ") + e.what());
  }
  throw Error("group document needs either \"table\" or \"generators\"");
}

inline FiniteGroup load_group_text(std::string const &text, std::size_t max_order = kDefaultMaxOrder) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (json::exception const &e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }
  return load_group(doc, max_order);
}

inline FiniteGroup load_group_file(std::string const &path, std::size_t max_order = kDefaultMaxOrder) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_group_text(ss.str(), max_order);
}

inline json group_to_json(FiniteGroup const &G) {
  json doc;
  if (!G.name().empty()) doc["name"] = G.name();
  doc["order"] = G.order();
  doc["table"] = G.table();
  return doc;
}

inline json verdict_to_json(FiniteGroup const &G, Subgroup const &H, CodeVerdict const &v) {
  json doc;
  doc["group"] = G.name();
  doc["subgroup"] = H.members();
  doc["is_perfect_code"] = v.is_perfect_code;
  doc["criterion"] = std::string(to_string(v.criterion));
  if (v.witness) doc["witness"] = *v.witness;
  if (v.counterexample) doc["counterexample"] = *v.counterexample;
  if (!v.note.empty()) doc["note"] = v.note;
  return doc;
}

// Parses "i,j,k" into element indices.
inline std::vector<Element> parse_index_list(std::string const &text, std::size_t order) {
  std::vector<Element> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (std::exception const &) {
      throw Error("bad element index '" + item + "'");
    }
    if (pos != item.size() || v >= order) throw Error("bad element index '" + item + "'");
    out.push_back(static_cast<Element>(v));
  }
  return out;
}

}  // namespace pcl
