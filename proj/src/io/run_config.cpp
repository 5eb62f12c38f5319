// SPDX-License-Identifier: Apache-2.0
#include "polygraph/io/run_config.h"

#include <cstdlib>
#include <set>

#include <json.hpp>

#include "polygraph/core/error.h"
#include "polygraph/io/atomic_file.h"

namespace polygraph {
namespace {

using nlohmann::json;

class ObjectReader {
 public:
  ObjectReader(const json& j, std::string path, std::string_view source)
      : j_(j), path_(std::move(path)), source_(source) {
    if (!j_.is_object()) fail("must be an object");
  }

  // Every key must be claimed by one of the accessors before finish().
  void finish() const {
    for (const auto& [key, value] : j_.items())
      if (!claimed_.contains(key)) fail("unknown key '" + key + "'");
  }

  bool has(const std::string& key) {
    claimed_.insert(key);
    return j_.contains(key) && !j_[key].is_null();
  }

  const json& at(const std::string& key) {
    claimed_.insert(key);
    return j_.at(key);
  }

  template <typename T>
  void get(const std::string& key, T& out) {
    if (!has(key)) return;
    try {
      out = j_.at(key).get<T>();
    } catch (const json::exception&) {
      fail("'" + key + "' has the wrong type");
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kConfig, std::string(source_) + ": " + (path_.empty() ? "config" : path_) + " " + what);
  }

 private:
  const json& j_;
  std::string path_;
  std::string_view source_;
  std::set<std::string> claimed_;
};

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  std::filesystem::path path(p);
  return path.is_absolute() ? path : base / path;
}

void require_file(const std::filesystem::path& p, std::string_view source) {
  if (!std::filesystem::is_regular_file(p))
    throw Error(ErrorCode::kConfig, std::string(source) + ": referenced file does not exist: " + p.string());
}

}  // namespace

RunConfig run_config_from_json(std::string_view text, const std::filesystem::path& base_dir, std::string_view source) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kConfig, std::string(source) + ": " + e.what());
  }
  RunConfig c;
  ObjectReader top(j, "", source);
  int version = 0;
  top.get("schema_version", version);
  if (version != kRunConfigSchemaVersion) top.fail("schema_version must be 1");

  if (top.has("box")) {
    std::vector<double> b;
    top.get("box", b);
    if (b.size() == 1) b = {b[0], b[0], b[0]};
    if (b.size() != 3 || b[0] <= 0 || b[1] <= 0 || b[2] <= 0) top.fail("box must be one or three positive lengths");
    c.box = std::array<double, 3>{b[0], b[1], b[2]};
  }
  if (top.has("density")) {
    double d = 0.0;
    top.get("density", d);
    if (!(d > 0.0)) top.fail("density must be positive");
    c.density = d;
  }
  if (c.box.has_value() == c.density.has_value()) top.fail("needs exactly one of 'box' and 'density'");

  if (!top.has("monomers") || !top.at("monomers").is_array() || top.at("monomers").empty())
    top.fail("needs a nonempty 'monomers' list");
  for (const json& m : top.at("monomers")) {
    ObjectReader r(m, "monomers entry", source);
    std::string file;
    MonomerCount mc;
    r.get("file", file);
    r.get("count", mc.count);
    r.finish();
    if (file.empty()) r.fail("needs 'file'");
    if (mc.count < 0) r.fail("count must be nonnegative");
    mc.file = resolve(base_dir, file);
    require_file(mc.file, source);
    c.monomers.push_back(std::move(mc));
  }
  std::string rules;
  top.get("rules", rules);
  if (!rules.empty()) {
    c.rules = resolve(base_dir, rules);
    require_file(c.rules, source);
  }
  std::vector<std::string> fragments;
  top.get("fragments", fragments);
  for (const std::string& f : fragments) {
    c.fragments.push_back(resolve(base_dir, f));
    require_file(c.fragments.back(), source);
  }
  top.get("forcefield", c.forcefield);
  c.polymerization.energy = energy_options_for_family(c.forcefield);
  top.get("lookup_depth", c.lookup_depth);
  if (c.lookup_depth < 1) top.fail("lookup_depth must be at least 1");
  top.get("seed", c.seed);
  top.get("threads", c.threads);
  if (c.threads < 1) top.fail("threads must be at least 1");

  if (top.has("pack")) {
    ObjectReader r(top.at("pack"), "pack", source);
    r.get("min_separation", c.pack.min_separation);
    r.get("max_attempts", c.pack.max_attempts);
    r.finish();
    if (!(c.pack.min_separation >= 0.0) || c.pack.max_attempts < 1) r.fail("has out-of-range values");
  }
  PolymerizationConfig& p = c.polymerization;
  if (top.has("polymerization")) {
    ObjectReader r(top.at("polymerization"), "polymerization", source);
    r.get("cutoff", p.cutoff);
    r.get("max_bonds_per_cycle", p.max_bonds_per_cycle);
    r.get("min_topological_separation", p.min_topological_separation);
    r.get("target_conversion", p.target_conversion);
    r.get("stall_limit", p.stall_limit);
    r.get("priority_patience", p.priority_patience);
    r.get("max_cycles", p.max_cycles);
    r.get("relax_between_cycles", p.relax_between_cycles);
    r.get("shake_amplitude", p.shake_amplitude);
    r.finish();
    if (!(p.cutoff > 0.0)) r.fail("cutoff must be positive");
    if (!(p.target_conversion >= 0.0 && p.target_conversion <= 1.0)) r.fail("target_conversion must lie in [0, 1]");
    if (p.stall_limit < 1) r.fail("stall_limit must be at least 1");
    if (p.max_bonds_per_cycle < 0 || p.min_topological_separation < 0 || p.priority_patience < 0 || p.max_cycles < 0 ||
        p.shake_amplitude < 0.0)
      r.fail("has negative values");
  }
  if (top.has("minimizer")) {
    ObjectReader r(top.at("minimizer"), "minimizer", source);
    std::string method;
    r.get("method", method);
    if (!method.empty()) {
      try {
        p.relax.method = minimizer_method_from_name(method);
      } catch (const Error&) {
        r.fail("method '" + method + "' is unknown");
      }
    }
    r.get("force_tolerance", p.relax.force_tolerance);
    r.get("max_steps", p.relax.max_steps);
    r.get("max_step_length", p.relax.max_step_length);
    r.finish();
    if (!(p.relax.force_tolerance > 0.0) || p.relax.max_steps < 0 || !(p.relax.max_step_length > 0.0))
      r.fail("has out-of-range values");
  }
  if (top.has("energy")) {
    ObjectReader r(top.at("energy"), "energy", source);
    r.get("cutoff", p.energy.cutoff);
    r.get("dielectric", p.energy.dielectric);
    r.get("lj14_scale", p.energy.lj14_scale);
    r.get("coulomb14_scale", p.energy.coulomb14_scale);
    r.get("skin", p.energy.skin);
    r.finish();
    if (!(p.energy.cutoff > 0.0) || !(p.energy.dielectric > 0.0)) r.fail("has out-of-range values");
  }
  if (top.has("output")) {
    ObjectReader r(top.at("output"), "output", source);
    std::string data, report;
    r.get("data", data);
    r.get("report", report);
    r.finish();
    if (!data.empty()) c.output_data = resolve(base_dir, data);
    if (!report.empty()) c.output_report = resolve(base_dir, report);
  }
  top.finish();
  set_seed(c, c.seed);
  return c;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  return run_config_from_json(text, path.has_parent_path() ? path.parent_path() : std::filesystem::path("."),
                              path.string());
}

void apply_environment_overrides(RunConfig& config) {
  auto parse = [](const char* name, const char* value) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(value, &end, 10);
    if (end == value || *end != '\0' || value[0] == '-')
      throw Error(ErrorCode::kConfig, std::string(name) + " must be a nonnegative integer, got '" + value + "'");
    return v;
  };
  if (const char* s = std::getenv("POLYGRAPH_SEED"); s != nullptr && *s != '\0')
    set_seed(config, parse("POLYGRAPH_SEED", s));
  if (const char* t = std::getenv("POLYGRAPH_THREADS"); t != nullptr && *t != '\0') {
    const auto v = parse("POLYGRAPH_THREADS", t);
    if (v < 1) throw Error(ErrorCode::kConfig, "POLYGRAPH_THREADS must be at least 1");
    config.threads = static_cast<int>(v);
  }
}

void set_seed(RunConfig& config, std::uint64_t seed) {
  config.seed = seed;
  config.pack.seed = seed;
  config.polymerization.seed = seed;
}

}  // namespace polygraph
