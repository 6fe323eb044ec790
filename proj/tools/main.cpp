#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "oliver/engine.hpp"
#include "oliver/fixeddim.hpp"
#include "oliver/groupclasses.hpp"
#include "oliver/namedgroups.hpp"
#include "oliver/report.hpp"
#include "oliver/verify.hpp"

namespace {

using namespace oliver;

struct CommonArgs {
  std::string spec;
  long long cap = kDefaultElementCap;
};

Group build_group(const CommonArgs& args) { return parse_group_spec(args.spec, args.cap); }

CharacterTable table_for(const Group& G, const std::optional<std::string>& import_path) {
  if (import_path) return read_chartab_file(*import_path, G);
  return compute_character_table(G);
}

void write_output(const std::optional<std::string>& path, const std::string& text) {
  if (path) {
    std::ofstream out(*path);
    if (!out) throw std::runtime_error("cannot write output file: " + *path);
    out << text;
  } else {
    std::cout << text;
  }
}

int cmd_info(const CommonArgs& args) {
  Group G = build_group(args);
  SubgroupLattice L = SubgroupLattice::enumerate(G);
  std::cout << "group: " << args.spec << "\n"
            << "degree: " << G.degree() << "\n"
            << "order: " << G.order() << "\n"
            << "exponent: " << G.exponent() << "\n"
            << "conjugacy_classes: " << G.num_classes() << "\n"
            << "subgroup_classes: " << L.num_classes() << "\n"
            << "oliver: " << (is_oliver(G, L) ? "true" : "false") << "\n";
  return 0;
}

int cmd_subgroups(const CommonArgs& args) {
  Group G = build_group(args);
  SubgroupLattice L = SubgroupLattice::enumerate(G);
  auto tags = tag_classes(G, L);
  std::cout << "id\torder\tsize\tnormal\tcyclic\tprimary\tmpc_primes\tgpq_pairs\n";
  for (const auto& c : L.classes()) {
    const auto& t = tags[c.id];
    std::cout << c.label << "\t" << c.order << "\t" << c.conjugates.size() << "\t"
              << (c.is_normal ? "yes" : "no") << "\t" << (t.cyclic ? "yes" : "no") << "\t";
    if (t.primary.trivial)
      std::cout << "p^0";
    else if (t.primary.prime)
      std::cout << *t.primary.prime;
    else
      std::cout << "-";
    std::cout << "\t";
    if (t.mod_p_cyclic_primes.empty() && t.cyclic)
      std::cout << "all";
    else if (t.mod_p_cyclic_primes.empty())
      std::cout << "-";
    else
      for (std::size_t i = 0; i < t.mod_p_cyclic_primes.size(); ++i)
        std::cout << (i ? "," : "") << t.mod_p_cyclic_primes[i];
    std::cout << "\t";
    if (t.gpq_pairs.empty())
      std::cout << "-";
    else
      for (std::size_t i = 0; i < t.gpq_pairs.size(); ++i)
        std::cout << (i ? " " : "") << "(" << t.gpq_pairs[i].first << ","
                  << t.gpq_pairs[i].second << ")";
    std::cout << "\n";
  }
  return 0;
}

int cmd_chartab(const CommonArgs& args, bool real,
                const std::optional<std::string>& export_path,
                const std::optional<std::string>& import_path) {
  Group G = build_group(args);
  CharacterTable t = table_for(G, import_path);
  if (export_path) {
    std::ofstream out(*export_path);
    if (!out) throw std::runtime_error("cannot write export file: " + *export_path);
    write_chartab(out, t, G);
  }
  if (real) {
    auto reals = realify(t, G);
    for (const auto& r : reals) {
      std::cout << r.label << " (degree " << r.degree << ", indicator " << r.indicator
                << (r.trivial ? ", trivial" : "") << "):";
      for (const auto& v : r.values) std::cout << " " << v.to_string();
      std::cout << "\n";
    }
  } else {
    std::cout << chartab_to_string(t, G);
  }
  return 0;
}

int cmd_fixdim(const CommonArgs& args, const std::optional<std::string>& out_path,
               const std::optional<std::string>& import_path) {
  Group G = build_group(args);
  CharacterTable t = table_for(G, import_path);
  SubgroupLattice L = SubgroupLattice::enumerate(G);
  auto reals = realify(t, G);
  FixedDimTable table = fixed_dim_table(G, reals, L);
  write_output(out_path, fixdim_csv(table));
  return 0;
}

int cmd_exclude(const CommonArgs& args, long long dim, bool no_morimoto,
                const std::string& strategy, const std::optional<std::string>& out_path,
                const std::optional<std::string>& import_path) {
  auto started = std::chrono::steady_clock::now();
  ExcludeOptions options;
  options.morimoto = !no_morimoto;
  options.element_cap = args.cap;
  if (strategy == "1")
    options.strategy = StrategyFilter::only1;
  else if (strategy == "2")
    options.strategy = StrategyFilter::only2;
  else if (strategy == "both")
    options.strategy = StrategyFilter::both;
  else
    throw CLI::ValidationError("--strategy must be 1, 2 or both");

  Group G = build_group(args);
  Session session = [&] {
    if (import_path) {
      CharacterTable imported = read_chartab_file(*import_path, G);
      return Session::build(std::move(G), imported);
    }
    return Session::build(std::move(G));
  }();
  ExclusionReport report = exclude(session, args.spec, dim, options);
  std::string text = report_to_string(report);
  write_output(out_path, text);
  if (out_path) std::cout << (report.excluded ? "EXCLUDED" : "NOT_EXCLUDED") << "\n";

  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  std::cerr << "verdict " << (report.excluded ? "EXCLUDED" : "NOT_EXCLUDED") << " for "
            << args.spec << " on S^" << dim << " in " << elapsed << " ms\n";
  return report.excluded ? 0 : 1;
}

int cmd_verify(const CommonArgs& args, const std::string& cert_path) {
  Group G = build_group(args);
  std::ifstream in(cert_path);
  if (!in) throw std::runtime_error("cannot open certificate file: " + cert_path);
  nlohmann::json report = nlohmann::json::parse(in);
  std::string diagnostics;
  if (verify_report(G, report, &diagnostics)) {
    std::cout << "VALID\n";
    return 0;
  }
  std::cout << "INVALID: " << diagnostics << "\n";
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact exclusion of effective one-fixed-point actions of finite groups "
               "on low-dimensional spheres"};
  app.require_subcommand(1);

  CommonArgs common;

  auto add_spec = [&](CLI::App* cmd) {
    cmd->add_option("spec", common.spec,
                    "group spec: C<n>, S<n>, A<n>, D<2n>, SL(2,3), SL(2,5), GL(2,3), "
                    "GL(3,2), products with 'x', or @file")
        ->required();
    cmd->add_option("--cap", common.cap, "element count cap");
  };

  auto* info = app.add_subcommand("info", "order, exponent, class counts, Oliver verdict");
  add_spec(info);

  auto* subgroups = app.add_subcommand("subgroups", "subgroup class table with tags");
  add_spec(subgroups);

  auto* chartab = app.add_subcommand("chartab", "character table listing/export");
  add_spec(chartab);
  bool real = false;
  std::optional<std::string> export_path, import_path, out_path;
  chartab->add_flag("--real", real, "list the real irreducible characters");
  chartab->add_option("--export", export_path, "write the interchange format here");
  chartab->add_option("--import", import_path, "read a table instead of computing");

  auto* fixdim = app.add_subcommand("fixdim", "CSV fixed-dimension table");
  add_spec(fixdim);
  fixdim->add_option("--out", out_path, "output path (default stdout)");
  fixdim->add_option("--chartab", import_path, "imported character table");

  auto* exclude_cmd = app.add_subcommand("exclude", "run the exclusion engine");
  add_spec(exclude_cmd);
  long long dim = 0;
  bool no_morimoto = false;
  std::string strategy = "both";
  exclude_cmd->add_option("--dim", dim, "sphere dimension n")->required();
  exclude_cmd->add_flag("--no-morimoto", no_morimoto, "disable the index-2 kernel filter");
  exclude_cmd->add_option("--strategy", strategy, "1, 2 or both");
  exclude_cmd->add_option("--out", out_path, "write the JSON report here");
  exclude_cmd->add_option("--chartab", import_path, "imported character table");

  auto* verify_cmd = app.add_subcommand("verify", "re-check a report's certificates");
  add_spec(verify_cmd);
  std::string cert_path;
  verify_cmd->add_option("--cert", cert_path, "report JSON to verify")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (info->parsed()) return cmd_info(common);
    if (subgroups->parsed()) return cmd_subgroups(common);
    if (chartab->parsed()) return cmd_chartab(common, real, export_path, import_path);
    if (fixdim->parsed()) return cmd_fixdim(common, out_path, import_path);
    if (exclude_cmd->parsed())
      return cmd_exclude(common, dim, no_morimoto, strategy, out_path, import_path);
    if (verify_cmd->parsed()) return cmd_verify(common, cert_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
