#pragma once

#include <chrono>
#include <filesystem>

#include "extraspecial.hpp"
#include "io.hpp"

namespace pcl {

enum class Provenance { BuiltIn, File, Constructed };

inline std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::BuiltIn: return "builtin";
    case Provenance::File: return "file";
    case Provenance::Constructed: return "constructed";
  }
  return "unknown";
}

struct CorpusEntry {
  FiniteGroup group;
  Provenance provenance = Provenance::BuiltIn;
  std::set<std::string> tags;

  bool has(std::string const &tag) const { return tags.count(tag) > 0; }
};

// Tags: two-group, odd-order, no-order-4, extraspecial, sylow2-extraspecial.
inline CorpusEntry make_entry(FiniteGroup G, Provenance provenance) {
  CorpusEntry e{std::move(G), provenance, {}};
  auto const &g = e.group;
  if (is_power_of_two(g.order())) e.tags.insert("two-group");
  if (g.order() % 2 == 1) e.tags.insert("odd-order");
  bool order4 = false;
  for (Element x = 0; x < g.order(); ++x) order4 = order4 || g.element_order(x) == 4;
  if (!order4) e.tags.insert("no-order-4");
  if (is_extraspecial(g).is_extraspecial) e.tags.insert("extraspecial");
  if (g.order() % 2 == 0) {
    auto p = sylow_2_subgroup(g, whole(g));
    if (is_extraspecial(induced_group(g, p).group).is_extraspecial) e.tags.insert("sylow2-extraspecial");
  }
  return e;
}

inline std::vector<CorpusEntry> builtin_corpus(bool include_order_128 = false) {
  std::vector<FiniteGroup> groups;
  for (std::size_t n = 1; n <= 16; ++n) groups.push_back(cyclic(n));
  for (std::size_t k = 2; k <= 4; ++k) groups.push_back(build_named("Z2^" + std::to_string(k)));
  for (std::size_t n = 6; n <= 16; n += 2) groups.push_back(dihedral(n));
  groups.push_back(quaternion(8));
  groups.push_back(quaternion(16));
  groups.push_back(build_family(2, ExtraspecialFamily::Gm1));
  groups.push_back(build_family(2, ExtraspecialFamily::Gm2));
  if (include_order_128) {
    groups.push_back(build_family(3, ExtraspecialFamily::Gm1));
    groups.push_back(build_family(3, ExtraspecialFamily::Gm2));
  }
  {
    auto s3 = FiniteGroup::from_permutations(3, {{1, 0, 2}, {1, 2, 0}}, "S3");
    groups.push_back(std::move(s3));
  }
  groups.push_back(symmetric(4));
  groups.push_back(alternating4());
  groups.push_back(sl23());
  groups.push_back(build_named("D8xZ3"));

  std::vector<CorpusEntry> out;
  for (auto &g : groups) out.push_back(make_entry(std::move(g), Provenance::BuiltIn));
  return out;
}

// Every *.json group file in `dir`, in filename order.
inline std::vector<CorpusEntry> load_corpus_dir(std::filesystem::path const &dir,
                                                std::size_t max_order = kDefaultMaxOrder) {
  if (!std::filesystem::is_directory(dir)) throw Error("corpus directory not found: " + dir.string());
  std::vector<std::filesystem::path> files;
  for (auto const &f : std::filesystem::directory_iterator(dir))
    if (f.is_regular_file() && f.path().extension() == ".json") files.push_back(f.path());
  std::sort(files.begin(), files.end());
  std::vector<CorpusEntry> out;
  for (auto const &f : files) {
    auto g = load_group_file(f.string(), max_order);
    if (g.name().empty()) g.set_name(f.stem().string());
    out.push_back(make_entry(std::move(g), Provenance::File));
  }
  return out;
}

inline std::vector<std::string> all_check_criteria() {
  return {"transversal", "square-coset", "double-coset", "omega-quotient",
          "sylow-statements", "decide", "graph"};
}

inline std::vector<std::string> default_check_criteria() {
  return {"transversal", "square-coset", "double-coset", "omega-quotient", "sylow-statements", "decide"};
}

struct CrossCheckRow {
  std::string group;
  std::vector<Element> subgroup;
  std::vector<std::pair<std::string, bool>> verdicts;  // in evaluation order
  bool witness_verified = true;  // found transversals pass the graph check
  bool agree = true;
  std::int64_t micros = 0;

  bool verdict() const { return verdicts.empty() ? false : verdicts.front().second; }
};

struct CrossCheckGroup {
  std::string name;
  std::size_t order = 0;
  std::vector<std::string> tags;
  std::vector<CrossCheckRow> rows;
};

struct CrossCheckReport {
  std::vector<std::string> criteria;
  std::size_t max_order = 0;
  std::vector<CrossCheckGroup> groups;

  std::size_t subgroups() const {
    std::size_t n = 0;
    for (auto const &g : groups) n += g.rows.size();
    return n;
  }
  std::size_t perfect_codes() const {
    std::size_t n = 0;
    for (auto const &g : groups)
      for (auto const &r : g.rows) n += r.verdict() ? 1 : 0;
    return n;
  }
  std::size_t disagreements() const {
    std::size_t n = 0;
    for (auto const &g : groups)
      for (auto const &r : g.rows) n += r.agree ? 0 : 1;
    return n;
  }
};

// Runs the selected criteria on every subgroup of every corpus group of
// order <= max_order. Disagreements are recorded, never resolved.
inline CrossCheckReport cross_check(std::vector<CorpusEntry> const &corpus,
                                    std::vector<std::string> const &criteria,
                                    std::size_t max_order = kDefaultEnumerationCap,
                                    std::size_t graph_max_order = 16) {
  if (criteria.empty()) throw Error("cross-check needs at least one criterion");
  auto known = all_check_criteria();
  for (auto const &c : criteria)
    if (std::find(known.begin(), known.end(), c) == known.end()) throw Error("unknown criterion '" + c + "'");
  auto selected = [&](std::string const &c) {
    return std::find(criteria.begin(), criteria.end(), c) != criteria.end();
  };

  CrossCheckReport report{criteria, max_order, {}};
  for (auto const &entry : corpus) {
    auto const &G = entry.group;
    if (G.order() > max_order) continue;
    CrossCheckGroup block{G.name(), G.order(), {entry.tags.begin(), entry.tags.end()}, {}};
    for (auto const &H : all_subgroups(G, std::max(max_order, G.order()))) {
      const auto start = std::chrono::steady_clock::now();
      CrossCheckRow row{G.name(), H.members(), {}, true, true, 0};
      auto add = [&](std::string name, bool v) { row.verdicts.emplace_back(std::move(name), v); };

      if (selected("transversal")) {
        auto T = find_inverse_closed_transversal(G, H);
        add("transversal", T.has_value());
        if (T) row.witness_verified = is_perfect_code_in_cayley_graph(
                   G, connection_set_from_transversal(G, H, *T), H.elements());
      }
      if (selected("square-coset")) add("square-coset", square_coset_condition(G, H).is_perfect_code);
      if (selected("double-coset")) add("double-coset", double_coset_condition(G, H).is_perfect_code);
      if (selected("omega-quotient") &&
          (is_power_of_two(H.order()) || is_normal(G, whole(G), H)))
        add("omega-quotient", omega_criterion(G, H).is_perfect_code);
      if (selected("sylow-statements")) {
        auto s = sylow_code_statements(G, H);
        add("h2-code-in-p", s.h2_code_in_p);
        add("omega-sylow-quotient", s.omega_sylow_quotient);
        add("omega-full-quotient", s.omega_full_quotient);
        add("h-code-in-g", s.h_code_in_g);
      }
      if (selected("decide")) add("decide", decide(G, H).is_perfect_code);
      if (selected("graph") && G.order() <= graph_max_order)
        add("graph", exhaustive_connection_set_search(G, H.elements(), graph_max_order).has_value());
      if (entry.has("extraspecial")) add("classify-extraspecial", classify_extraspecial(G, H).is_perfect_code);
      if (entry.has("sylow2-extraspecial"))
        add("classify-sylow2-extraspecial", classify_sylow2_extraspecial(G, H).is_perfect_code);

      row.agree = row.witness_verified;
      for (auto const &[name, v] : row.verdicts) row.agree = row.agree && v == row.verdict();
      row.micros = std::chrono::duration_cast<std::chrono::microseconds>(
                       std::chrono::steady_clock::now() - start).count();
      block.rows.push_back(std::move(row));
    }
    report.groups.push_back(std::move(block));
  }
  return report;
}

// Stable output: timings only appear when include_timing is set, in their own section.
inline json report_to_json(CrossCheckReport const &r, bool include_timing = false) {
  json doc;
  doc["summary"] = {{"groups", r.groups.size()},
                    {"subgroups", r.subgroups()},
                    {"perfect_codes", r.perfect_codes()},
                    {"disagreements", r.disagreements()}};
  doc["criteria"] = r.criteria;
  doc["max_order"] = r.max_order;
  json groups = json::array();
  json timing = json::object();
  for (auto const &g : r.groups) {
    json rows = json::array();
    json times = json::array();
    for (auto const &row : g.rows) {
      json verdicts = json::object();
      for (auto const &[name, v] : row.verdicts) verdicts[name] = v;
      rows.push_back({{"subgroup", row.subgroup},
                      {"order", row.subgroup.size()},
                      {"is_perfect_code", row.verdict()},
                      {"verdicts", verdicts},
                      {"witness_verified", row.witness_verified},
                      {"agree", row.agree}});
      times.push_back(row.micros);
    }
    groups.push_back({{"group", g.name}, {"order", g.order}, {"tags", g.tags}, {"rows", rows}});
    timing[g.name] = times;
  }
  doc["groups"] = groups;
  if (include_timing) doc["timing_us"] = timing;
  return doc;
}

inline std::string report_to_markdown(CrossCheckReport const &r) {
  std::ostringstream out;
  out << "# Perfect-code cross-check\n\n";
  out << "- groups: " << r.groups.size() << "\n";
  out << "- subgroups: " << r.subgroups() << "\n";
  out << "- perfect codes: " << r.perfect_codes() << "\n";
  out << "- disagreements: " << r.disagreements() << "\n\n";

  struct Section {
    std::string title;
    std::vector<std::string> keys;
  };
  const std::vector<Section> sections{
      {"Transversal and coset conditions", {"transversal", "square-coset", "double-coset"}},
      {"Omega quotient criterion", {"omega-quotient"}},
      {"Sylow normalizer statements",
       {"h2-code-in-p", "omega-sylow-quotient", "omega-full-quotient", "h-code-in-g", "decide"}},
      {"Extraspecial classification", {"classify-extraspecial"}},
      {"Sylow 2-subgroup extraspecial classification", {"classify-sylow2-extraspecial"}},
      {"Exhaustive graph search", {"graph"}},
  };
  out << "## Summary by criterion\n\n| section | rows | agreeing |\n|---|---|---|\n";
  for (auto const &s : sections) {
    std::size_t rows = 0, agree = 0;
    for (auto const &g : r.groups)
      for (auto const &row : g.rows) {
        bool touched = false, ok = true;
        for (auto const &[name, v] : row.verdicts)
          if (std::find(s.keys.begin(), s.keys.end(), name) != s.keys.end()) {
            touched = true;
            ok = ok && v == row.verdict();
          }
        if (touched) {
          ++rows;
          agree += ok ? 1 : 0;
        }
      }
    out << "| " << s.title << " | " << rows << " | " << agree << " |\n";
  }

  out << "\n## Groups\n\n| group | order | subgroups | perfect codes | disagreements | tags |\n"
         "|---|---|---|---|---|---|\n";
  for (auto const &g : r.groups) {
    std::size_t codes = 0, bad = 0;
    for (auto const &row : g.rows) {
      codes += row.verdict() ? 1 : 0;
      bad += row.agree ? 0 : 1;
    }
    std::string tags;
    for (std::size_t i = 0; i < g.tags.size(); ++i) tags += (i ? ", " : "") + g.tags[i];
    out << "| " << g.name << " | " << g.order << " | " << g.rows.size() << " | " << codes << " | "
        << bad << " | " << tags << " |\n";
  }

  if (r.disagreements()) {
    out << "\n## Disagreements\n\n";
    for (auto const &g : r.groups)
      for (auto const &row : g.rows) {
        if (row.agree) continue;
        out << "- " << g.name << " {";
        for (std::size_t i = 0; i < row.subgroup.size(); ++i) out << (i ? "," : "") << row.subgroup[i];
        out << "}:";
        for (auto const &[name, v] : row.verdicts) out << " " << name << "=" << (v ? "yes" : "no");
        if (!row.witness_verified) out << " witness-failed";
        out << "\n";
      }
  }
  return out.str();
}

inline std::string report_emit(CrossCheckReport const &r, std::string_view format,
                               bool include_timing = false) {
  if (format == "json") return report_to_json(r, include_timing).dump(2) + "\n";
  if (format == "md" || format == "markdown") return report_to_markdown(r);
  throw Error("unsupported report format '" + std::string(format) + "'");
}

}  // namespace pcl
