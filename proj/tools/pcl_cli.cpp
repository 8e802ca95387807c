// pcl: command-line front end for subgroup perfect-code computations.
//
// Exit codes: 0 success, 1 input error, 2 cross-check disagreement.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "pcl/pcl.hpp"

namespace {

std::size_t max_order_from_env() {
  const char *v = std::getenv("PCL_MAX_ORDER");
  if (!v || !*v) return pcl::kDefaultMaxOrder;
  char *end = nullptr;
  const auto n = std::strtoull(v, &end, 10);
  if (*end != '\0' || n == 0) throw pcl::Error(std::string("bad PCL_MAX_ORDER value '") + v + "'");
  return static_cast<std::size_t>(n);
}

std::vector<std::string> split(std::string const &s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

pcl::Subgroup subgroup_arg(pcl::FiniteGroup const &G, std::string const &list) {
  // Listed elements are generators; a listed subgroup closes to itself.
  return pcl::closure(G, pcl::parse_index_list(list, G.order()));
}

}  // namespace

int main(int argc, char **argv) {
  CLI::App app{"Subgroup perfect codes in Cayley graphs of finite groups"};
  app.require_subcommand(1);

  std::string file, subgroup_list, out_file, family = "gm1", corpus_dir, criteria_list, format = "json";
  bool witness = false, timing = false, with_order_128 = false;
  unsigned m = 1;
  std::size_t cross_max_order = pcl::kDefaultEnumerationCap;

  auto *validate = app.add_subcommand("validate", "Validate a group file and summarize it");
  validate->add_option("file", file, "Group JSON file")->required();

  auto *subgroups = app.add_subcommand("subgroups", "List all subgroups as sorted index arrays");
  subgroups->add_option("file", file, "Group JSON file")->required();

  auto *check = app.add_subcommand("check", "Decide whether a subgroup is a perfect code");
  check->add_option("file", file, "Group JSON file")->required();
  check->add_option("--subgroup", subgroup_list, "Comma-separated element indices (generators)")->required();
  check->add_flag("--witness", witness, "Attach an inverse-closed transversal");

  auto *classify = app.add_subcommand("classify", "Closed-form verdict for extraspecial Sylow 2-subgroups");
  classify->add_option("file", file, "Group JSON file")->required();
  classify->add_option("--subgroup", subgroup_list, "Comma-separated element indices (generators)")->required();

  auto *construct = app.add_subcommand("construct", "Emit an extraspecial 2-group as a group file");
  construct->add_option("--family", family, "gm1 or gm2")->check(CLI::IsMember({"gm1", "gm2"}));
  construct->add_option("--m", m, "Number of central factors")->required();
  construct->add_option("-o,--output", out_file, "Output path (default stdout)");

  auto *cross = app.add_subcommand("cross-check", "Run every criterion over a corpus and compare");
  cross->add_option("--max-order", cross_max_order, "Skip groups above this order");
  cross->add_option("--corpus", corpus_dir, "Directory of group JSON files (default: built-in corpus)");
  cross->add_option("--criteria", criteria_list, "Comma-separated criteria");
  cross->add_option("--format", format, "json or md")->check(CLI::IsMember({"json", "md", "markdown"}));
  cross->add_flag("--timing", timing, "Include per-row timings (json only)");
  cross->add_flag("--with-order-128", with_order_128, "Add the order-128 extraspecial groups");

  CLI11_PARSE(app, argc, argv);

  try {
    const auto max_order = max_order_from_env();

    if (*validate) {
      auto G = pcl::load_group_file(file, max_order);
      auto cls = pcl::is_extraspecial(G);
      pcl::json doc;
      doc["valid"] = true;
      doc["name"] = G.name();
      doc["order"] = G.order();
      doc["abelian"] = pcl::is_abelian(G, G.all());
      doc["exponent"] = pcl::exponent(G, G.all());
      doc["involutions"] = pcl::omega1(G, G.all()).count() - 1;
      doc["extraspecial"] = cls.is_extraspecial;
      if (cls.family) doc["family"] = std::string(pcl::to_string(*cls.family));
      std::cout << doc.dump(2) << "\n";
    } else if (*subgroups) {
      auto G = pcl::load_group_file(file, max_order);
      pcl::json list = pcl::json::array();
      for (auto const &H : pcl::all_subgroups(G, std::max(max_order, pcl::kDefaultEnumerationCap)))
        list.push_back(H.members());
      pcl::json doc;
      doc["group"] = G.name();
      doc["count"] = list.size();
      doc["subgroups"] = list;
      std::cout << doc.dump() << "\n";
    } else if (*check) {
      auto G = pcl::load_group_file(file, max_order);
      auto H = subgroup_arg(G, subgroup_list);
      std::cout << pcl::verdict_to_json(G, H, pcl::decide(G, H, witness)).dump(2) << "\n";
    } else if (*classify) {
      auto G = pcl::load_group_file(file, max_order);
      auto H = subgroup_arg(G, subgroup_list);
      pcl::CodeVerdict v;
      if (pcl::is_extraspecial(G).is_extraspecial)
        v = pcl::classify_extraspecial(G, H);
      else
        v = pcl::classify_sylow2_extraspecial(G, H);
      std::cout << pcl::verdict_to_json(G, H, v).dump(2) << "\n";
    } else if (*construct) {
      auto G = pcl::build_family(m, family == "gm1" ? pcl::ExtraspecialFamily::Gm1
                                                    : pcl::ExtraspecialFamily::Gm2,
                                 max_order);
      auto text = pcl::group_to_json(G).dump() + "\n";
      if (out_file.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_file);
        if (!out) throw pcl::Error("cannot write " + out_file);
        out << text;
      }
    } else if (*cross) {
      auto corpus = corpus_dir.empty() ? pcl::builtin_corpus(with_order_128)
                                       : pcl::load_corpus_dir(corpus_dir, max_order);
      auto criteria = criteria_list.empty() ? pcl::default_check_criteria() : split(criteria_list);
      auto report = pcl::cross_check(corpus, criteria, cross_max_order);
      std::cout << pcl::report_emit(report, format, timing);
      if (report.disagreements()) return 2;
    }
  } catch (pcl::Error const &e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
