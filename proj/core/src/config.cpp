#include "edlab/config.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace edlab {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

[[noreturn]] void fail_validation(const std::string& field, const std::string& why) {
  throw ValidationError("config field '" + field + "': " + why);
}

double parse_double(const std::string& field, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    fail_validation(field, "not a number: '" + value + "'");
  }
}

std::uint64_t parse_u64(const std::string& field, const std::string& value) {
  try {
    std::size_t pos = 0;
    const std::uint64_t v = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    fail_validation(field, "not an unsigned integer: '" + value + "'");
  }
}

int parse_positive_int(const std::string& field, const std::string& value) {
  try {
    std::size_t pos = 0;
    const long v = std::stol(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    if (v < 1) fail_validation(field, "must be >= 1");
    return static_cast<int>(v);
  } catch (const ValidationError&) {
    throw;
  } catch (const std::exception&) {
    fail_validation(field, "not an integer: '" + value + "'");
  }
}

// Comma-separated re,im pairs, row-major for matrices.
std::vector<Complex> parse_complex_list(const std::string& field, const std::string& value) {
  std::vector<double> reals;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    reals.push_back(parse_double(field, trim(item)));
  }
  if (reals.size() % 2 != 0) fail_validation(field, "odd number of entries, expected re,im pairs");
  std::vector<Complex> out;
  out.reserve(reals.size() / 2);
  for (std::size_t k = 0; k + 1 < reals.size(); k += 2) {
    out.emplace_back(reals[k], reals[k + 1]);
  }
  return out;
}

Matrix square_matrix(const std::string& field, const std::vector<Complex>& entries) {
  const auto d = static_cast<Eigen::Index>(std::llround(std::sqrt(double(entries.size()))));
  if (d < 1 || static_cast<std::size_t>(d) * d != entries.size()) {
    fail_validation(field, "entry count is not a perfect square");
  }
  Matrix m(d, d);
  for (Eigen::Index r = 0; r < d; ++r) {
    for (Eigen::Index c = 0; c < d; ++c) m(r, c) = entries[r * d + c];
  }
  return m;
}

Vector amplitude_vector(const std::string& field, const std::vector<Complex>& entries) {
  if (entries.empty()) fail_validation(field, "empty amplitude list");
  Vector v(static_cast<Eigen::Index>(entries.size()));
  for (Eigen::Index k = 0; k < v.size(); ++k) v(k) = entries[k];
  return v;
}

}  // namespace

ScenarioConfig parse_config(std::istream& in, const std::string& origin) {
  std::map<std::string, std::string> kv;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const std::size_t eq = stripped.find('=');
    if (eq == std::string::npos) {
      throw ParseError(origin + ":" + std::to_string(line_no) + ": expected key=value, got '" +
                       stripped + "'");
    }
    const std::string key = trim(stripped.substr(0, eq));
    if (key.empty()) {
      throw ParseError(origin + ":" + std::to_string(line_no) + ": empty key");
    }
    if (kv.count(key)) {
      throw ParseError(origin + ":" + std::to_string(line_no) + ": duplicate key '" + key + "'");
    }
    kv[key] = trim(stripped.substr(eq + 1));
  }

  ScenarioConfig c;
  c.witness = WitnessStrategy::sampled(1000, 0);

  const auto take = [&kv](const std::string& key) -> std::optional<std::string> {
    auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    std::string v = it->second;
    kv.erase(it);
    return v;
  };

  const auto scenario = take("scenario");
  if (!scenario) fail_validation("scenario", "missing (fig1|fig2|fig3|custom)");
  if (*scenario == "fig1") {
    c.scenario = ScenarioKind::Fig1;
  } else if (*scenario == "fig2") {
    c.scenario = ScenarioKind::Fig2;
  } else if (*scenario == "fig3") {
    c.scenario = ScenarioKind::Fig3;
  } else if (*scenario == "custom") {
    c.scenario = ScenarioKind::Custom;
  } else {
    fail_validation("scenario", "unknown value '" + *scenario + "'");
  }

  if (auto v = take("theta_count")) c.theta_count = parse_positive_int("theta_count", *v);
  if (auto v = take("phi")) c.phi = parse_double("phi", *v);
  if (auto v = take("lambda")) c.lambda = parse_double("lambda", *v);
  if (auto v = take("seed")) c.seed = parse_u64("seed", *v);
  if (auto v = take("output_path")) c.output_path = *v;
  if (auto v = take("theta")) c.theta = parse_double("theta", *v);

  std::optional<std::string> wkind = take("witness.kind");
  std::optional<std::string> wsamples = take("witness.samples");
  if (wkind && *wkind != "sampled" && *wkind != "optimal") {
    fail_validation("witness.kind", "expected sampled or optimal, got '" + *wkind + "'");
  }
  if (wkind && *wkind == "optimal") {
    if (wsamples) fail_validation("witness.samples", "meaningless for the optimal strategy");
    c.witness = WitnessStrategy::optimal();
  } else {
    int samples = 1000;
    if (wsamples) samples = parse_positive_int("witness.samples", *wsamples);
    c.witness = WitnessStrategy::sampled(samples, c.seed);
  }

  if (c.scenario == ScenarioKind::Custom) {
    const auto entries = [&take](const char* key) {
      auto v = take(key);
      if (!v) fail_validation(key, "required for custom scenarios");
      return parse_complex_list(key, *v);
    };
    const Vector psi = amplitude_vector("psi.amplitudes", entries("psi.amplitudes"));
    const Vector phi_p = amplitude_vector("phi_p.amplitudes", entries("phi_p.amplitudes"));
    const Matrix a = square_matrix("a.entries", entries("a.entries"));
    const Matrix b = square_matrix("b.entries", entries("b.entries"));
    const Matrix m = square_matrix("m.entries", entries("m.entries"));
    const Matrix u = square_matrix("u.entries", entries("u.entries"));
    try {
      c.custom_model.emplace(PureState(psi), PureState(phi_p), Operator::hermitian(a),
                             Operator::hermitian(b), Operator::hermitian(m),
                             Operator::unitary(u));
    } catch (const Error& e) {
      throw ValidationError(std::string("custom model: ") + e.what());
    }
  }

  if (!kv.empty()) fail_validation(kv.begin()->first, "unknown key");
  return c;
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file: " + path);
  return parse_config(in, path);
}

MeasurementModel config_model(const ScenarioConfig& c, double theta) {
  switch (c.scenario) {
    case ScenarioKind::Custom:
      return *c.custom_model;
    case ScenarioKind::Fig1:
      return scenario_model(Scenario::Fig1, ScenarioParams{theta, c.phi, c.lambda});
    case ScenarioKind::Fig2:
      return scenario_model(Scenario::Fig2, ScenarioParams{theta, c.phi, c.lambda});
    case ScenarioKind::Fig3:
      return scenario_model(Scenario::Fig3, ScenarioParams{theta, c.phi, c.lambda});
  }
  throw Error("unknown scenario kind");
}

namespace {

void append_complex_list(std::string& out, const char* key, const Matrix& m) {
  out += key;
  out += '=';
  char buf[64];
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g", m(r, c).real(), m(r, c).imag());
      if (r != 0 || c != 0) out += ',';
      out += buf;
    }
  }
  out += '\n';
}

}  // namespace

std::string serialize_model(const MeasurementModel& m) {
  std::string out = "scenario=custom\n";
  append_complex_list(out, "psi.amplitudes", m.system_state.amplitudes());
  append_complex_list(out, "phi_p.amplitudes", m.probe_state.amplitudes());
  append_complex_list(out, "a.entries", m.observable_a.matrix());
  append_complex_list(out, "b.entries", m.observable_b.matrix());
  append_complex_list(out, "m.entries", m.estimator_m.matrix());
  append_complex_list(out, "u.entries", m.coupling.matrix());
  return out;
}

}  // namespace edlab
