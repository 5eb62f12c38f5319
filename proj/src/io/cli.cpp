// SPDX-License-Identifier: Apache-2.0
#include "polygraph/io/cli.h"

#include <algorithm>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "polygraph/analysis/density.h"
#include "polygraph/analysis/porosity.h"
#include "polygraph/analysis/tg.h"
#include "polygraph/core/error.h"
#include "polygraph/core/log.h"
#include "polygraph/fftyping/assign.h"
#include "polygraph/fftyping/composites.h"
#include "polygraph/fftyping/fragment.h"
#include "polygraph/fftyping/lookup_table.h"
#include "polygraph/fftyping/wl.h"
#include "polygraph/io/atomic_file.h"
#include "polygraph/io/lammps_data.h"
#include "polygraph/io/reports.h"
#include "polygraph/io/run_config.h"
#include "polygraph/postproc/carve.h"
#include "polygraph/simbox/embed.h"
#include "polygraph/simbox/pack.h"

namespace polygraph {
namespace {

using nlohmann::json;

struct GlobalOptions {
  std::optional<std::uint64_t> seed;
  std::string config;
  int verbose = 0;
};

std::string one_line(std::string s) {
  std::replace(s.begin(), s.end(), '\n', ' ');
  std::replace(s.begin(), s.end(), '\r', ' ');
  return s;
}

RunConfig require_config(const GlobalOptions& g) {
  if (g.config.empty()) throw Error(ErrorCode::kConfig, "this subcommand needs --config");
  RunConfig c = load_run_config(g.config);
  apply_environment_overrides(c);
  if (g.seed) set_seed(c, *g.seed);
  return c;
}

std::uint64_t effective_seed(const GlobalOptions& g) {
  if (g.seed) return *g.seed;
  RunConfig probe;
  apply_environment_overrides(probe);
  return probe.seed;
}

LookupTable table_from_files(const std::vector<std::string>& files, int depth) {
  if (files.empty()) throw Error(ErrorCode::kConfig, "no fragment files given");
  std::vector<FragmentSpec> all;
  for (const std::string& f : files) {
    std::vector<FragmentSpec> part = load_fragments(f);
    std::move(part.begin(), part.end(), std::back_inserter(all));
  }
  return build_lookup_table(all, depth);
}

std::vector<std::string> as_strings(const std::vector<std::filesystem::path>& paths) {
  std::vector<std::string> out;
  for (const auto& p : paths) out.push_back(p.string());
  return out;
}

MolecularSystem packed_system(const RunConfig& c, const LookupTable& table) {
  std::vector<MonomerTemplate> templates;
  std::vector<int> counts;
  for (const MonomerCount& m : c.monomers) {
    templates.push_back(load_monomer(m.file.string()));
    counts.push_back(m.count);
  }
  const PeriodicBox box = c.box ? make_box((*c.box)[0], (*c.box)[1], (*c.box)[2])
                                : box_for_density(templates, counts, *c.density);
  MolecularSystem s = pack(templates, counts, box, c.pack);
  assign_parameters(s, table);
  log::info("packed ", s.graph.size(), " atoms into a ", box.lengths[0], " x ", box.lengths[1], " x ",
            box.lengths[2], " A box");
  return s;
}

int axis_from_name(const std::string& name) {
  if (name == "x" || name == "0") return 0;
  if (name == "y" || name == "1") return 1;
  if (name == "z" || name == "2") return 2;
  throw Error(ErrorCode::kConfig, "axis must be x, y or z, got '" + name + "'");
}

double parse_number(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw Error(ErrorCode::kConfig, std::string(what) + " expects numbers, got '" + s + "'");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Cross-linked polymer builder with fingerprint-based force-field typing", "polygraph"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions g;
  app.add_option("--seed", g.seed, "Random seed (overrides the config and POLYGRAPH_SEED)");
  app.add_option("--config", g.config, "Run configuration (JSON)");
  app.add_flag("-v,--verbose", g.verbose, "More log output (repeatable)");

  // pack
  std::string pack_output;
  CLI::App* pack_cmd = app.add_subcommand("pack", "Pack monomers into a periodic box and write a data file");
  pack_cmd->add_option("-o,--output", pack_output, "Output data file (default: config output.data)");

  // polymerize
  std::string poly_input, poly_output, poly_report;
  CLI::App* poly_cmd = app.add_subcommand("polymerize", "Run the cross-linking loop");
  poly_cmd->add_option("-i,--input", poly_input, "Start from this data file instead of packing");
  poly_cmd->add_option("-o,--output", poly_output, "Final data file (default: config output.data)");
  poly_cmd->add_option("--report", poly_report, "Cycle report JSON (default: config output.report)");

  // assign
  std::string assign_input, assign_monomer, assign_output;
  std::vector<std::string> assign_fragments;
  int assign_depth = 0;
  CLI::App* assign_cmd = app.add_subcommand("assign", "Assign force-field parameters from fragment files");
  auto* assign_in_opt = assign_cmd->add_option("-i,--input", assign_input, "Data file to parameterize");
  auto* assign_mon_opt = assign_cmd->add_option("--monomer", assign_monomer, "Monomer JSON to parameterize");
  assign_in_opt->excludes(assign_mon_opt);
  assign_cmd->add_option("-f,--fragments", assign_fragments, "Fragment library files")->expected(1, -1);
  assign_cmd->add_option("--depth", assign_depth, "Fingerprint depth (default: config or 4)");
  assign_cmd->add_option("-o,--output", assign_output, "Output data file")->required();

  // carve
  std::string carve_input, carve_output, carve_predicate = "any";
  std::vector<std::string> carve_slab, carve_sphere, carve_cylinder, carve_fragments;
  bool carve_cap = false;
  int carve_depth = 0;
  CLI::App* carve_cmd = app.add_subcommand("carve", "Remove monomers inside a void and optionally cap");
  carve_cmd->add_option("-i,--input", carve_input, "Input data file")->required();
  carve_cmd->add_option("-o,--output", carve_output, "Output data file")->required();
  auto* slab_opt = carve_cmd->add_option("--slab", carve_slab, "AXIS LO HI")->expected(3);
  auto* sphere_opt = carve_cmd->add_option("--sphere", carve_sphere, "X Y Z RADIUS")->expected(4);
  auto* cyl_opt = carve_cmd->add_option("--cylinder", carve_cylinder, "AXIS X Y Z RADIUS")->expected(5);
  slab_opt->excludes(sphere_opt)->excludes(cyl_opt);
  sphere_opt->excludes(cyl_opt);
  carve_cmd->add_option("--predicate", carve_predicate, "any | centroid")
      ->check(CLI::IsMember({"any", "centroid"}));
  carve_cmd->add_flag("--cap", carve_cap, "Cap dangling atoms with hydrogen");
  carve_cmd->add_option("-f,--fragments", carve_fragments, "Fragment files for re-assignment after capping");
  carve_cmd->add_option("--depth", carve_depth, "Fingerprint depth (default: config or 4)");

  // analyze
  std::string an_input, an_tg, an_report, an_radii, an_output;
  bool an_porosity = false;
  double an_probe = kDefaultProbeRadius;
  std::int64_t an_samples = 100000;
  int an_surface_points = 200;
  CLI::App* an_cmd = app.add_subcommand("analyze", "Density, conversion, porosity and Tg report");
  an_cmd->add_option("-i,--input", an_input, "Data file");
  an_cmd->add_option("--tg", an_tg, "Density-temperature CSV for the Tg fit");
  an_cmd->add_option("--report", an_report, "Cycle report JSON for the conversion series");
  an_cmd->add_flag("--porosity", an_porosity, "Estimate pore volume and surface area");
  an_cmd->add_option("--probe", an_probe, "Probe radius (A)")->check(CLI::NonNegativeNumber);
  an_cmd->add_option("--samples", an_samples, "Pore-volume samples")->check(CLI::PositiveNumber);
  an_cmd->add_option("--surface-points", an_surface_points, "Surface points per atom")->check(CLI::PositiveNumber);
  an_cmd->add_option("--radii", an_radii, "vdW radii JSON overriding the built-in table");
  an_cmd->add_option("-o,--output", an_output, "Write the JSON here instead of stdout");

  // composites
  std::vector<std::string> comp_monomers;
  std::string comp_rules, comp_output;
  int comp_coverage = 0;
  bool comp_no_trimers = false, comp_capped = false, comp_with_monomers = false;
  CLI::App* comp_cmd = app.add_subcommand("composites", "Enumerate reacted composites for parameterization");
  comp_cmd->add_option("-m,--monomers", comp_monomers, "Monomer JSON files")->required()->expected(1, -1);
  comp_cmd->add_option("-r,--rules", comp_rules, "Reaction rules JSON")->required();
  comp_cmd->add_option("-o,--output", comp_output, "Fragment library (graphs only)")->required();
  comp_cmd->add_option("--coverage-depth", comp_coverage, "Enumerate reaction trees to this fingerprint depth");
  comp_cmd->add_flag("--no-trimers", comp_no_trimers, "Skip trimers");
  comp_cmd->add_flag("--capped", comp_capped, "Add hydrogen-capped site states");
  comp_cmd->add_flag("--include-monomers", comp_with_monomers, "Emit the bare monomers too");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "polygraph: usage error: " << one_line(e.what()) << "\n" << app.help();
    return 2;
  }

  log::set_level(g.verbose >= 2 ? log::Level::kDebug : g.verbose == 1 ? log::Level::kInfo : log::Level::kWarn);

  try {
    if (pack_cmd->parsed()) {
      const RunConfig c = require_config(g);
      const std::filesystem::path dest = pack_output.empty() ? c.output_data : std::filesystem::path(pack_output);
      if (dest.empty()) throw Error(ErrorCode::kConfig, "no output path (use --output or output.data)");
      const LookupTable table = table_from_files(as_strings(c.fragments), c.lookup_depth);
      save_lammps_data(dest, packed_system(c, table));
    } else if (poly_cmd->parsed()) {
      const RunConfig c = require_config(g);
      const std::filesystem::path dest = poly_output.empty() ? c.output_data : std::filesystem::path(poly_output);
      const std::filesystem::path report = poly_report.empty() ? c.output_report : std::filesystem::path(poly_report);
      if (dest.empty() || report.empty())
        throw Error(ErrorCode::kConfig, "polymerize needs output data and report paths");
      if (c.rules.empty()) throw Error(ErrorCode::kConfig, "polymerize needs 'rules' in the config");
      const LookupTable table = table_from_files(as_strings(c.fragments), c.lookup_depth);
      const ReactionRuleSet rules = load_rules(c.rules.string());
      MolecularSystem s;
      if (poly_input.empty()) {
        s = packed_system(c, table);
      } else {
        s = load_lammps_data(poly_input);
        assign_parameters(s, table);
      }
      const PolymerizationResult result = polymerize(s, c.polymerization, rules, table);
      save_lammps_data(dest, s);
      write_file_atomic(report, dump_report(to_json(result)));
    } else if (assign_cmd->parsed()) {
      std::vector<std::string> files = assign_fragments;
      int depth = assign_depth;
      if (!g.config.empty()) {
        const RunConfig c = require_config(g);
        if (files.empty()) files = as_strings(c.fragments);
        if (depth == 0) depth = c.lookup_depth;
      }
      if (depth == 0) depth = kDefaultWLDepth;
      const LookupTable table = table_from_files(files, depth);
      MolecularSystem s;
      if (!assign_input.empty()) {
        s = load_lammps_data(assign_input);
      } else if (!assign_monomer.empty()) {
        const MonomerTemplate m = load_monomer(assign_monomer);
        MolecularGraph probe = m.graph;
        if (!probe.has_positions()) crude_embed(probe, effective_seed(g));
        Vec3 lo{1e300, 1e300, 1e300}, hi{-1e300, -1e300, -1e300};
        for (const Atom& a : probe.atoms())
          for (int axis = 0; axis < 3; ++axis) {
            lo[axis] = std::min(lo[axis], a.position[axis]);
            hi[axis] = std::max(hi[axis], a.position[axis]);
          }
        // Room for the default nonbonded cutoff on both sides.
        const double edge = std::max({hi.x - lo.x, hi.y - lo.y, hi.z - lo.z}) + 2.0 * EnergyOptions{}.cutoff + 4.0;
        PackOptions opts;
        opts.seed = effective_seed(g);
        s = pack({m}, {1}, make_box(edge, edge, edge), opts);
      } else {
        throw Error(ErrorCode::kConfig, "assign needs --input or --monomer");
      }
      assign_parameters(s, table);
      save_lammps_data(assign_output, s);
    } else if (carve_cmd->parsed()) {
      VoidGeometry geometry;
      if (!carve_slab.empty()) {
        geometry = slab(axis_from_name(carve_slab[0]), parse_number(carve_slab[1], "--slab"),
                        parse_number(carve_slab[2], "--slab"));
      } else if (!carve_sphere.empty()) {
        geometry = sphere({parse_number(carve_sphere[0], "--sphere"), parse_number(carve_sphere[1], "--sphere"),
                           parse_number(carve_sphere[2], "--sphere")},
                          parse_number(carve_sphere[3], "--sphere"));
      } else if (!carve_cylinder.empty()) {
        geometry = cylinder(axis_from_name(carve_cylinder[0]),
                            {parse_number(carve_cylinder[1], "--cylinder"), parse_number(carve_cylinder[2], "--cylinder"),
                             parse_number(carve_cylinder[3], "--cylinder")},
                            parse_number(carve_cylinder[4], "--cylinder"));
      } else {
        throw Error(ErrorCode::kConfig, "carve needs one of --slab, --sphere, --cylinder");
      }
      const MolecularSystem input = load_lammps_data(carve_input);
      CarveResult carved = carve(input, geometry,
                                 carve_predicate == "centroid" ? RemovalPredicate::kCentroid : RemovalPredicate::kAnyAtom);
      MolecularSystem result = std::move(carved.system);
      if (carve_cap) {
        std::vector<std::string> files = carve_fragments;
        int depth = carve_depth;
        if (!g.config.empty()) {
          const RunConfig c = require_config(g);
          if (files.empty()) files = as_strings(c.fragments);
          if (depth == 0) depth = c.lookup_depth;
        }
        if (depth == 0) depth = kDefaultWLDepth;
        const LookupTable table = table_from_files(files, depth);
        result = cap(result, carved.dangling, CapSpec{}, &table);
      }
      save_lammps_data(carve_output, result);
      out << dump_report({{"atoms_before", input.graph.size()},
                          {"atoms_after", result.graph.size()},
                          {"removed_instances", carved.removed_instances.size()},
                          {"dangling_sites", carved.dangling.size()},
                          {"capped", carve_cap}});
    } else if (an_cmd->parsed()) {
      if (an_input.empty() && an_tg.empty() && an_report.empty())
        throw Error(ErrorCode::kConfig, "analyze needs --input, --tg or --report");
      json report{{"schema_version", kReportSchemaVersion}};
      if (!an_input.empty()) {
        const MolecularSystem s = load_lammps_data(an_input);
        report["atoms"] = s.graph.size();
        report["density"] = density(s);
        report["box"] = {s.box.lengths[0], s.box.lengths[1], s.box.lengths[2]};
        report["open_sites"] = open_sites(s).size();
        if (an_porosity) {
          const RadiiTable radii = an_radii.empty() ? RadiiTable{} : load_radii(an_radii);
          report["porosity"] = to_json(porosity(s, an_probe, an_samples, an_surface_points, effective_seed(g), radii));
        }
      }
      if (!an_report.empty()) {
        const auto series = conversion_series(cycle_reports_from_json(read_text_file(an_report), an_report));
        json js = json::array();
        for (const auto& [cycle, conversion] : series) js.push_back({cycle, conversion});
        report["conversion_series"] = std::move(js);
        report["conversion"] = series.empty() ? 0.0 : series.back().second;
      }
      if (!an_tg.empty()) report["tg"] = to_json(fit_tg_piecewise(parse_density_csv(read_text_file(an_tg))));
      if (an_output.empty()) out << dump_report(report);
      else write_file_atomic(an_output, dump_report(report));
    } else if (comp_cmd->parsed()) {
      std::vector<MonomerTemplate> templates;
      for (const std::string& f : comp_monomers) templates.push_back(load_monomer(f));
      CompositeOptions opts;
      opts.trimers = !comp_no_trimers;
      opts.coverage_depth = comp_coverage;
      opts.capped_states = comp_capped;
      opts.include_monomers = comp_with_monomers;
      const std::vector<Composite> composites = enumerate_composites(templates, load_rules(comp_rules), opts);
      std::vector<FragmentSpec> fragments;
      for (const Composite& c : composites) fragments.push_back({c.name, "composite enumeration", c.graph, {}});
      write_file_atomic(comp_output, fragment_library_to_json(fragments, false));
      log::info("wrote ", fragments.size(), " composites to ", comp_output);
    }
  } catch (const MissingEnvironmentError& e) {
    std::string ids;
    for (int id : e.atom_ids()) ids += (ids.empty() ? "" : ",") + std::to_string(id);
    err << "polygraph: error[" << error_code_name(e.code()) << "]: " << one_line(e.what()) << " atoms=" << ids
        << " context=" << e.element_context() << " suggestion=" << (e.suggestion().empty() ? "none" : e.suggestion())
        << "\n";
    return error_exit_status(e.code());
  } catch (const Error& e) {
    err << "polygraph: error[" << error_code_name(e.code()) << "]: " << one_line(e.what()) << "\n";
    return error_exit_status(e.code());
  } catch (const std::exception& e) {
    err << "polygraph: error[E_INTERNAL]: " << one_line(e.what()) << "\n";
    return 1;
  }
  return 0;
}

int run_cli(int argc, char** argv) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run_cli(args, std::cout, std::cerr);
}

}  // namespace polygraph
