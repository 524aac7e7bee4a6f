// Copyright 2026 The QNAS Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qnas/harness/run_log.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "qnas/core/circuit_json.hpp"

namespace qnas {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_double(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty numeric field");
  std::size_t used = 0;
  const double v = std::stod(s, &used);
  if (used != s.size()) throw std::invalid_argument("bad number \"" + s + "\"");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

std::string join(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ";" : "") + fmt(v[i]);
  return s;
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  if (s.empty()) return out;
  for (const std::string& part : split(s, ';')) out.push_back(parse_double(part));
  return out;
}

nlohmann::json hp_json(const KernelHyperparams& hp) {
  return {{"alpha", hp.alpha}, {"alpha_bar", hp.alpha_bar}, {"beta", hp.beta}, {"beta_bar", hp.beta_bar}, {"noise", hp.noise}};
}

KernelHyperparams hp_from(const nlohmann::json& j) {
  KernelHyperparams hp;
  hp.alpha = j.at("alpha").get<double>();
  hp.alpha_bar = j.at("alpha_bar").get<double>();
  hp.beta = j.at("beta").get<std::vector<double>>();
  hp.beta_bar = j.at("beta_bar").get<std::vector<double>>();
  hp.noise = j.at("noise").get<double>();
  return hp;
}

bool better(double a, double b, bool maximize) { return maximize ? a > b : a < b; }

constexpr const char* kCsvHeader =
    "iteration,source,circuit,value,best_so_far,wall_time,failures,alpha,alpha_bar,beta,beta_bar,noise,jitter,"
    "min_eigenvalue,audit_threshold,ei,acq_evaluations,acq_discarded";

}  // namespace

std::string circuit_to_compact(const Circuit& c) {
  std::string s = std::to_string(c.n_qubits()) + "|";
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Gate& g = c[i];
    s += (i ? ";" : "") + std::string(gate_name(g.type)) + ":" + std::to_string(g.w[0]);
    if (g.arity() == 2) s += "-" + std::to_string(g.w[1]);
  }
  return s;
}

Circuit circuit_from_compact(const std::string& s) {
  const auto bar = s.find('|');
  if (bar == std::string::npos) throw std::invalid_argument("compact circuit needs \"n|gates\"");
  Circuit c(std::stoi(s.substr(0, bar)));
  const std::string body = s.substr(bar + 1);
  if (body.empty()) return c;
  for (const std::string& tok : split(body, ';')) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("bad gate token \"" + tok + "\"");
    const auto type = parse_gate_type(tok.substr(0, colon));
    if (!type) throw std::invalid_argument("unknown gate type in \"" + tok + "\"");
    const auto wires = split(tok.substr(colon + 1), '-');
    if (static_cast<int>(wires.size()) != arity(*type)) throw std::invalid_argument("wrong wire count in \"" + tok + "\"");
    c.push_back(wires.size() == 1 ? Gate(*type, std::stoi(wires[0])) : Gate(*type, std::stoi(wires[0]), std::stoi(wires[1])));
  }
  return c;
}

void RunLog::append(IterationRecord r) {
  r.best_so_far = records.empty() || better(r.value, records.back().best_so_far, maximize) ? r.value
                                                                                            : records.back().best_so_far;
  records.push_back(std::move(r));
}

const IterationRecord& RunLog::best() const {
  if (records.empty()) throw std::logic_error("empty run log");
  std::size_t b = 0;
  for (std::size_t i = 1; i < records.size(); ++i)
    if (better(records[i].value, records[b].value, maximize)) b = i;
  return records[b];
}

std::vector<double> RunLog::best_trace() const {
  std::vector<double> t;
  for (const auto& r : records) t.push_back(r.best_so_far);
  return t;
}

bool RunLog::audit_passed() const {
  for (const auto& r : records)
    if (r.surrogate && !r.surrogate->audit_passed()) return false;
  return true;
}

int RunLog::failures() const {
  int f = 0;
  for (const auto& r : records) f += r.failures;
  return f;
}

nlohmann::json RunLog::to_json() const {
  nlohmann::json recs = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json jr = {{"iteration", r.iteration},     {"source", r.source},
                         {"circuit", circuit_to_json(r.circuit)}, {"value", r.value},
                         {"best_so_far", r.best_so_far}, {"wall_time", r.wall_time},
                         {"failures", r.failures}};
    if (r.surrogate) {
      const auto& s = *r.surrogate;
      jr["surrogate"] = {{"hyperparams", hp_json(s.hp)},
                         {"jitter", s.jitter},
                         {"min_eigenvalue", s.min_eigenvalue},
                         {"audit_threshold", s.audit_threshold},
                         {"expected_improvement", s.expected_improvement},
                         {"acquisition_evaluations", s.acquisition_evaluations},
                         {"acquisition_discarded", s.acquisition_discarded}};
    }
    recs.push_back(std::move(jr));
  }
  nlohmann::json j = {{"objective", objective}, {"maximize", maximize}, {"seed", seed},
                      {"mode", mode},           {"records", recs}};
  if (!records.empty()) j["best"] = {{"iteration", best().iteration}, {"value", best().value},
                                     {"circuit", circuit_to_json(best().circuit)}};
  return j;
}

RunLog RunLog::from_json(const nlohmann::json& j) {
  RunLog log;
  log.objective = j.at("objective").get<std::string>();
  log.maximize = j.at("maximize").get<bool>();
  log.seed = j.at("seed").get<std::uint64_t>();
  log.mode = j.at("mode").get<std::string>();
  for (const auto& jr : j.at("records")) {
    IterationRecord r;
    r.iteration = jr.at("iteration").get<int>();
    r.source = jr.at("source").get<std::string>();
    r.circuit = circuit_from_json(jr.at("circuit"));
    r.value = jr.at("value").get<double>();
    r.best_so_far = jr.at("best_so_far").get<double>();
    r.wall_time = jr.at("wall_time").get<double>();
    r.failures = jr.at("failures").get<int>();
    if (jr.contains("surrogate")) {
      const auto& js = jr.at("surrogate");
      SurrogateRecord s;
      s.hp = hp_from(js.at("hyperparams"));
      s.jitter = js.at("jitter").get<double>();
      s.min_eigenvalue = js.at("min_eigenvalue").get<double>();
      s.audit_threshold = js.at("audit_threshold").get<double>();
      s.expected_improvement = js.at("expected_improvement").get<double>();
      s.acquisition_evaluations = js.at("acquisition_evaluations").get<int>();
      s.acquisition_discarded = js.at("acquisition_discarded").get<int>();
      r.surrogate = s;
    }
    log.records.push_back(std::move(r));
  }
  return log;
}

std::string RunLog::to_csv() const {
  std::ostringstream out;
  out << "# objective=" << objective << ",maximize=" << (maximize ? 1 : 0) << ",seed=" << seed << ",mode=" << mode
      << '\n'
      << kCsvHeader << '\n';
  for (const auto& r : records) {
    out << r.iteration << ',' << r.source << ',' << circuit_to_compact(r.circuit) << ',' << fmt(r.value) << ','
        << fmt(r.best_so_far) << ',' << fmt(r.wall_time) << ',' << r.failures;
    if (r.surrogate) {
      const auto& s = *r.surrogate;
      out << ',' << fmt(s.hp.alpha) << ',' << fmt(s.hp.alpha_bar) << ',' << join(s.hp.beta) << ','
          << join(s.hp.beta_bar) << ',' << fmt(s.hp.noise) << ',' << fmt(s.jitter) << ',' << fmt(s.min_eigenvalue)
          << ',' << fmt(s.audit_threshold) << ',' << fmt(s.expected_improvement) << ',' << s.acquisition_evaluations
          << ',' << s.acquisition_discarded;
    } else {
      out << ",,,,,,,,,,,";
    }
    out << '\n';
  }
  return out.str();
}

RunLog RunLog::from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  RunLog log;
  if (!std::getline(in, line) || line.rfind("# ", 0) != 0) throw std::invalid_argument("run log CSV lacks its metadata line");
  for (const std::string& kv : split(line.substr(2), ',')) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("bad metadata entry \"" + kv + "\"");
    const std::string k = kv.substr(0, eq), v = kv.substr(eq + 1);
    if (k == "objective") log.objective = v;
    else if (k == "maximize") log.maximize = v == "1";
    else if (k == "seed") log.seed = std::stoull(v);
    else if (k == "mode") log.mode = v;
  }
  if (!std::getline(in, line) || line != kCsvHeader) throw std::invalid_argument("unexpected run log CSV header");
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 18) throw std::invalid_argument("run log CSV row has " + std::to_string(f.size()) + " fields");
    IterationRecord r;
    r.iteration = std::stoi(f[0]);
    r.source = f[1];
    r.circuit = circuit_from_compact(f[2]);
    r.value = parse_double(f[3]);
    r.best_so_far = parse_double(f[4]);
    r.wall_time = parse_double(f[5]);
    r.failures = std::stoi(f[6]);
    if (!f[7].empty()) {
      SurrogateRecord s;
      s.hp.alpha = parse_double(f[7]);
      s.hp.alpha_bar = parse_double(f[8]);
      s.hp.beta = parse_list(f[9]);
      s.hp.beta_bar = parse_list(f[10]);
      s.hp.noise = parse_double(f[11]);
      s.jitter = parse_double(f[12]);
      s.min_eigenvalue = parse_double(f[13]);
      s.audit_threshold = parse_double(f[14]);
      s.expected_improvement = parse_double(f[15]);
      s.acquisition_evaluations = std::stoi(f[16]);
      s.acquisition_discarded = std::stoi(f[17]);
      r.surrogate = s;
    }
    log.records.push_back(std::move(r));
  }
  return log;
}

void RunLog::save(const std::filesystem::path& json_path) const {
  std::ofstream out(json_path);
  if (!out) throw std::runtime_error("cannot write " + json_path.string());
  out << to_json().dump(2) << '\n';
}

RunLog RunLog::load(const std::filesystem::path& json_path) {
  std::ifstream in(json_path);
  if (!in) throw std::runtime_error("cannot open " + json_path.string());
  return from_json(nlohmann::json::parse(in));
}

}  // namespace qnas
