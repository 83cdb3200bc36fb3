#include "elmid/config_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "elmid/errors.hpp"

namespace elmid {

namespace {

using nlohmann::json;

template <typename T>
T get_as(const json& j, const std::string& key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError("config: bad value for '" + key + "': " + e.what());
  }
}

Vec get_vec(const json& j, const std::string& key) {
  const auto v = get_as<std::vector<double>>(j, key);
  return Eigen::Map<const Vec>(v.data(), long(v.size()));
}

std::vector<double> to_std(const Vec& v) {
  return std::vector<double>(v.data(), v.data() + v.size());
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text,
                              const std::string& plant_override) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config: top level must be an object");

  std::string plant = plant_override;
  if (plant.empty()) {
    if (!j.contains("plant"))
      throw ConfigError("config: missing 'plant' (dc_motor or lorentz)");
    plant = get_as<std::string>(j, "plant");
  }
  ExperimentConfig c = default_config(plant);

  // prms_enabled first: the other prms_* keys require an active generator.
  if (j.contains("prms_enabled")) {
    if (get_as<bool>(j, "prms_enabled")) {
      if (!c.prms) c.prms = PrmsConfig{};
    } else {
      c.prms = std::nullopt;
    }
  }

  for (const auto& [key, unused] : j.items()) {
    (void)unused;
    if (key == "plant" || key == "prms_enabled") {
      // handled above
    } else if (key == "seed") {
      c.seed = get_as<std::uint64_t>(j, key);
    } else if (key == "dt") {
      c.dt = get_as<double>(j, key);
    } else if (key == "duration") {
      c.duration = get_as<double>(j, key);
    } else if (key == "hidden_dim") {
      c.hidden_dim = get_as<int>(j, key);
    } else if (key == "lambda") {
      c.lambda = get_as<double>(j, key);
    } else if (key == "gain") {
      c.gain = get_as<double>(j, key);
    } else if (key == "sample_stride") {
      c.sample_stride = get_as<int>(j, key);
    } else if (key == "noise_sigma") {
      c.noise_sigma = get_as<double>(j, key);
    } else if (key == "dead_zone_radius") {
      c.dead_zone_radius = get_as<double>(j, key);
    } else if (key == "A_diag") {
      c.A_diag = get_vec(j, key);
    } else if (key == "z0") {
      c.z0 = get_vec(j, key);
    } else if (key == "state_lo") {
      c.state_lo = get_vec(j, key);
    } else if (key == "state_hi") {
      c.state_hi = get_vec(j, key);
    } else if (key == "input_lo") {
      c.input_lo = get_vec(j, key);
    } else if (key == "input_hi") {
      c.input_hi = get_vec(j, key);
    } else if (key == "methods") {
      c.methods = get_as<std::vector<std::string>>(j, key);
    } else if (key == "out_dir") {
      c.out_dir = get_as<std::string>(j, key);
    } else if (key == "prms_levels" || key == "prms_lo" || key == "prms_hi" ||
               key == "prms_hold_min" || key == "prms_hold_max") {
      if (!c.prms)
        throw ConfigError("config: '" + key + "' requires prms_enabled");
      if (key == "prms_levels")
        c.prms->levels = get_as<int>(j, key);
      else if (key == "prms_lo")
        c.prms->lo = get_as<double>(j, key);
      else if (key == "prms_hi")
        c.prms->hi = get_as<double>(j, key);
      else if (key == "prms_hold_min")
        c.prms->hold_min = get_as<double>(j, key);
      else
        c.prms->hold_max = get_as<double>(j, key);
    } else if (key == "dc_c1") {
      c.dc_params.c1 = get_as<double>(j, key);
    } else if (key == "dc_c2") {
      c.dc_params.c2 = get_as<double>(j, key);
    } else if (key == "dc_c3") {
      c.dc_params.c3 = get_as<double>(j, key);
    } else if (key == "dc_c4") {
      c.dc_params.c4 = get_as<double>(j, key);
    } else if (key == "dc_c5") {
      c.dc_params.c5 = get_as<double>(j, key);
    } else if (key == "lorentz_sigma") {
      c.lorentz_params.sigma = get_as<double>(j, key);
    } else if (key == "lorentz_r") {
      c.lorentz_params.r = get_as<double>(j, key);
    } else if (key == "lorentz_b") {
      c.lorentz_params.b = get_as<double>(j, key);
    } else {
      throw ConfigError("config: unknown key '" + key + "'");
    }
  }
  return c;
}

ExperimentConfig load_config(const std::string& path,
                             const std::string& plant_override) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot read config file: " + path);
  std::ostringstream buf;
  buf << file.rdbuf();
  return parse_config(buf.str(), plant_override);
}

std::string serialize_config(const ExperimentConfig& c) {
  json j;  // nlohmann objects keep keys sorted -> canonical form
  j["plant"] = c.plant;
  j["seed"] = c.seed;
  j["dt"] = c.dt;
  j["duration"] = c.duration;
  j["hidden_dim"] = c.hidden_dim;
  j["lambda"] = c.lambda;
  j["gain"] = c.gain;
  j["sample_stride"] = c.sample_stride;
  j["noise_sigma"] = c.noise_sigma;
  j["dead_zone_radius"] = c.dead_zone_radius;
  j["A_diag"] = to_std(c.A_diag);
  j["z0"] = to_std(c.z0);
  j["state_lo"] = to_std(c.state_lo);
  j["state_hi"] = to_std(c.state_hi);
  j["input_lo"] = to_std(c.input_lo);
  j["input_hi"] = to_std(c.input_hi);
  j["methods"] = c.methods;
  j["out_dir"] = c.out_dir;
  j["prms_enabled"] = c.prms.has_value();
  if (c.prms) {
    j["prms_levels"] = c.prms->levels;
    j["prms_lo"] = c.prms->lo;
    j["prms_hi"] = c.prms->hi;
    j["prms_hold_min"] = c.prms->hold_min;
    j["prms_hold_max"] = c.prms->hold_max;
  }
  j["dc_c1"] = c.dc_params.c1;
  j["dc_c2"] = c.dc_params.c2;
  j["dc_c3"] = c.dc_params.c3;
  j["dc_c4"] = c.dc_params.c4;
  j["dc_c5"] = c.dc_params.c5;
  j["lorentz_sigma"] = c.lorentz_params.sigma;
  j["lorentz_r"] = c.lorentz_params.r;
  j["lorentz_b"] = c.lorentz_params.b;
  return j.dump();
}

void save_config(const ExperimentConfig& c, const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open for writing: " + path);
  json j = json::parse(serialize_config(c));
  file << j.dump(2) << "\n";
  if (!file) throw std::runtime_error("write failed: " + path);
}

std::uint64_t config_hash(const ExperimentConfig& c) {
  const std::string s = serialize_config(c);
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char byte : s) {
    h ^= byte;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace elmid
