#include "emtoro/config.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace emtoro {

using nlohmann::json;

std::string to_string(Model m) {
  switch (m) {
    case Model::emtf: return "emtf";
    case Model::eslm: return "eslm";
    case Model::xmhd: return "xmhd";
    case Model::paired: return "paired";
  }
  return "?";
}

std::string to_string(InitialData d) {
  switch (d) {
    case InitialData::prepared_random: return "prepared-random";
    case InitialData::irrotational: return "irrotational";
    case InitialData::single_mode: return "single-mode";
    case InitialData::from_file: return "from-file";
  }
  return "?";
}

namespace {

Model model_from_string(const std::string& s) {
  if (s == "emtf") return Model::emtf;
  if (s == "eslm") return Model::eslm;
  if (s == "xmhd") return Model::xmhd;
  if (s == "paired") return Model::paired;
  throw ConfigError("unknown model '" + s + "'");
}

InitialData initial_data_from_string(const std::string& s) {
  if (s == "prepared-random") return InitialData::prepared_random;
  if (s == "irrotational") return InitialData::irrotational;
  if (s == "single-mode") return InitialData::single_mode;
  if (s == "from-file") return InitialData::from_file;
  throw ConfigError("unknown initial_data '" + s + "'");
}

const std::vector<std::string> kTopKeys = {
    "grid",         "plasma",      "model",        "epsilon",
    "epsilon_ladder", "T",         "dt",           "cfl",
    "snapshot_dt",  "sobolev_sigma", "seed",       "initial_data",
    "init_file",    "amplitude",   "band_kmax",    "density_offset",
    "output_dir",   "write_snapshots"};
const std::vector<std::string> kGridKeys = {"n", "dealias_fraction"};
const std::vector<std::string> kPlasmaKeys = {"m_e", "m_i", "n_bar",
                                              "pressure_e", "pressure_i"};
const std::vector<std::string> kPressureKeys = {"K", "gamma"};

void reject_unknown(const json& j, const std::vector<std::string>& known,
                    const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    (void)value;
    bool ok = false;
    for (const auto& k : known) {
      if (key == k) {
        ok = true;
        break;
      }
    }
    if (!ok) throw ConfigError("unknown key '" + where + key + "'");
  }
}

PressureLaw parse_pressure(const json& j, const std::string& where) {
  reject_unknown(j, kPressureKeys, where);
  PressureLaw law;
  if (j.contains("K")) law.K = j.at("K").get<double>();
  if (j.contains("gamma")) law.gamma = j.at("gamma").get<double>();
  return law;
}

RunConfig from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("config root must be an object");
  reject_unknown(j, kTopKeys, "");

  RunConfig cfg;
  if (j.contains("grid")) {
    const auto& g = j.at("grid");
    if (g.is_number_integer()) {
      cfg.grid.n = g.get<int>();
    } else {
      reject_unknown(g, kGridKeys, "grid.");
      if (g.contains("n")) cfg.grid.n = g.at("n").get<int>();
      if (g.contains("dealias_fraction")) {
        cfg.grid.dealias_fraction = g.at("dealias_fraction").get<double>();
      }
    }
  }
  if (j.contains("plasma")) {
    const auto& p = j.at("plasma");
    reject_unknown(p, kPlasmaKeys, "plasma.");
    if (p.contains("m_e")) cfg.plasma.m_e = p.at("m_e").get<double>();
    if (p.contains("m_i")) cfg.plasma.m_i = p.at("m_i").get<double>();
    if (p.contains("n_bar")) cfg.plasma.n_bar = p.at("n_bar").get<double>();
    if (p.contains("pressure_e")) {
      cfg.plasma.pressure_e = parse_pressure(p.at("pressure_e"),
                                             "plasma.pressure_e.");
    }
    if (p.contains("pressure_i")) {
      cfg.plasma.pressure_i = parse_pressure(p.at("pressure_i"),
                                             "plasma.pressure_i.");
    }
  }
  if (j.contains("model")) {
    cfg.model = model_from_string(j.at("model").get<std::string>());
  }
  if (j.contains("epsilon") && j.contains("epsilon_ladder")) {
    throw ConfigError("give either epsilon or epsilon_ladder, not both");
  }
  if (j.contains("epsilon")) {
    cfg.epsilon_ladder = {j.at("epsilon").get<double>()};
  }
  if (j.contains("epsilon_ladder")) {
    cfg.epsilon_ladder = j.at("epsilon_ladder").get<std::vector<double>>();
  }
  if (j.contains("T")) cfg.T = j.at("T").get<double>();
  if (j.contains("dt")) cfg.dt = j.at("dt").get<double>();
  if (j.contains("cfl")) cfg.cfl = j.at("cfl").get<double>();
  if (j.contains("snapshot_dt")) {
    cfg.snapshot_dt = j.at("snapshot_dt").get<double>();
  }
  if (j.contains("sobolev_sigma")) {
    cfg.sobolev_sigma = j.at("sobolev_sigma").get<double>();
  }
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("initial_data")) {
    cfg.initial_data =
        initial_data_from_string(j.at("initial_data").get<std::string>());
  }
  if (j.contains("init_file")) {
    cfg.init_file = j.at("init_file").get<std::string>();
  }
  if (j.contains("amplitude")) cfg.amplitude = j.at("amplitude").get<double>();
  if (j.contains("band_kmax")) cfg.band_kmax = j.at("band_kmax").get<int>();
  if (j.contains("density_offset")) {
    cfg.density_offset = j.at("density_offset").get<double>();
  }
  if (j.contains("output_dir")) {
    cfg.output_dir = j.at("output_dir").get<std::string>();
  }
  if (j.contains("write_snapshots")) {
    cfg.write_snapshots = j.at("write_snapshots").get<bool>();
  }
  cfg.validate();
  return cfg;
}

json to_json(const RunConfig& c) {
  json j;
  j["grid"] = {{"n", c.grid.n}, {"dealias_fraction", c.grid.dealias_fraction}};
  j["plasma"] = {
      {"m_e", c.plasma.m_e},
      {"m_i", c.plasma.m_i},
      {"n_bar", c.plasma.n_bar},
      {"pressure_e",
       {{"K", c.plasma.pressure_e.K}, {"gamma", c.plasma.pressure_e.gamma}}},
      {"pressure_i",
       {{"K", c.plasma.pressure_i.K}, {"gamma", c.plasma.pressure_i.gamma}}}};
  j["model"] = to_string(c.model);
  j["epsilon_ladder"] = c.epsilon_ladder;
  j["T"] = c.T;
  j["dt"] = c.dt;
  j["cfl"] = c.cfl;
  j["snapshot_dt"] = c.snapshot_dt;
  j["sobolev_sigma"] = c.sobolev_sigma;
  j["seed"] = c.seed;
  j["initial_data"] = to_string(c.initial_data);
  j["init_file"] = c.init_file;
  j["amplitude"] = c.amplitude;
  j["band_kmax"] = c.band_kmax;
  j["density_offset"] = c.density_offset;
  j["output_dir"] = c.output_dir;
  j["write_snapshots"] = c.write_snapshots;
  return j;
}

}  // namespace

void RunConfig::validate() const {
  std::vector<std::string> errs;
  const auto check = [&](bool ok, const std::string& msg) {
    if (!ok) errs.push_back(msg);
  };
  check(grid.n >= 8 && grid.n % 2 == 0,
        "grid.n must be even and >= 8, got " + std::to_string(grid.n));
  check(grid.dealias_fraction > 0.0 && grid.dealias_fraction <= 1.0,
        "grid.dealias_fraction must lie in (0, 1]");
  check(plasma.m_e > 0.0 && plasma.m_i > 0.0, "masses must be positive");
  check(plasma.n_bar > 0.0, "n_bar must be positive");
  check(plasma.pressure_e.K > 0.0 && plasma.pressure_i.K > 0.0,
        "pressure K must be positive");
  check(plasma.pressure_e.gamma >= 1.0 && plasma.pressure_i.gamma >= 1.0,
        "pressure gamma must be >= 1");
  check(T >= 0.0, "T must be >= 0");
  check(dt >= 0.0, "dt must be >= 0");
  check(cfl > 0.0, "cfl must be > 0");
  check(snapshot_dt >= 0.0, "snapshot_dt must be >= 0");
  check(!epsilon_ladder.empty(), "epsilon ladder must not be empty");
  for (double e : epsilon_ladder) {
    check(e > 0.0 && e <= 1.0,
          "epsilon entries must lie in (0, 1], got " + std::to_string(e));
  }
  check(amplitude >= 0.0, "amplitude must be >= 0");
  check(band_kmax >= 1 && band_kmax < grid.n / 2,
        "band_kmax must lie in [1, n/2)");
  check(initial_data != InitialData::from_file || !init_file.empty(),
        "initial_data=from-file requires init_file");
  if (!errs.empty()) {
    std::string msg = "invalid config:";
    for (const auto& e : errs) msg += "\n  - " + e;
    throw ConfigError(msg);
  }
}

std::string RunConfig::canonical_json() const { return to_json(*this).dump(); }

std::uint64_t fnv1a(const void* data, std::size_t size, std::uint64_t seed) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < size; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

std::string RunConfig::hash() const {
  const std::string s = canonical_json();
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(s.data(), s.size())));
  return buf;
}

RunConfig parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config parse error: ") + e.what());
  }
  return from_json(j);
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

RunConfig apply_overrides(const RunConfig& cfg,
                          const std::vector<std::string>& overrides) {
  json j = json::parse(cfg.canonical_json());
  j.erase("epsilon_ladder");
  j["epsilon_ladder"] = cfg.epsilon_ladder;
  for (const auto& ov : overrides) {
    const auto pos = ov.find('=');
    if (pos == std::string::npos) {
      throw ConfigError("override '" + ov + "' is not key=value");
    }
    const std::string key = ov.substr(0, pos);
    const std::string value = ov.substr(pos + 1);
    json parsed;
    try {
      parsed = json::parse(value);
    } catch (const json::parse_error&) {
      parsed = value;  // bare strings (model names, paths)
    }
    json* node = &j;
    std::size_t start = 0;
    while (true) {
      const auto dot = key.find('.', start);
      const std::string part = key.substr(start, dot - start);
      if (dot == std::string::npos) {
        if (part == "epsilon") {
          (*node)["epsilon_ladder"] = json::array({parsed});
        } else {
          (*node)[part] = parsed;
        }
        break;
      }
      node = &(*node)[part];
      start = dot + 1;
    }
  }
  return from_json(j);
}

std::string output_root() {
  const char* env = std::getenv("EMTORO_OUTPUT_ROOT");
  return env && *env ? std::string(env) : std::string(".");
}

}  // namespace emtoro
