// Copyright 2026 The wlbind Authors.
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

// Experiment reports as JSON. Top-level keys are written one per line and
// each case or counterexample sits on its own line, so reports diff cleanly.
// Loading and re-emitting a report reproduces it byte for byte.

#ifndef WLBIND_REPORT_HPP_
#define WLBIND_REPORT_HPP_

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace wlbind {

using Json = nlohmann::ordered_json;

inline constexpr const char* kEngineVersion = "0.1.0";
inline constexpr const char* kCanonicalization = "bucket-then-lex-rle/v1";

struct CaseRecord {
  std::size_t id = 0;
  std::vector<std::string> graphs;  // graph6
  std::string gi;
  std::string oracle;
  bool agree = false;
  Json detail = Json::object();
};

struct Counterexample {
  std::size_t case_id = 0;
  std::string kind;
  std::vector<std::string> graphs;
  std::string gi;
  std::string oracle;
  Json evidence = Json::object();
};

struct ExperimentReport {
  std::string experiment;
  std::string engine_version = kEngineVersion;
  std::string canonicalization = kCanonicalization;
  std::uint64_t seed = 0;
  std::map<std::size_t, std::size_t> per_n;
  std::vector<CaseRecord> cases;
  std::vector<Counterexample> counterexamples;
  double total_ms = 0.0;
  double per_case_median_ms = 0.0;
  Json summary = Json::object();
};

inline Json to_json(const CaseRecord& c) {
  Json j;
  j["id"] = c.id;
  j["graphs"] = c.graphs;
  j["gi"] = c.gi;
  j["oracle"] = c.oracle;
  j["agree"] = c.agree;
  j["detail"] = c.detail;
  return j;
}

inline Json to_json(const Counterexample& c) {
  Json j;
  j["case_id"] = c.case_id;
  j["kind"] = c.kind;
  j["graphs"] = c.graphs;
  j["gi"] = c.gi;
  j["oracle"] = c.oracle;
  j["evidence"] = c.evidence;
  return j;
}

inline CaseRecord case_from_json(const Json& j) {
  CaseRecord c;
  c.id = j.at("id").get<std::size_t>();
  c.graphs = j.at("graphs").get<std::vector<std::string>>();
  c.gi = j.at("gi").get<std::string>();
  c.oracle = j.at("oracle").get<std::string>();
  c.agree = j.at("agree").get<bool>();
  c.detail = j.value("detail", Json::object());
  return c;
}

inline Counterexample counterexample_from_json(const Json& j) {
  Counterexample c;
  c.case_id = j.at("case_id").get<std::size_t>();
  c.kind = j.at("kind").get<std::string>();
  c.graphs = j.at("graphs").get<std::vector<std::string>>();
  c.gi = j.at("gi").get<std::string>();
  c.oracle = j.at("oracle").get<std::string>();
  c.evidence = j.value("evidence", Json::object());
  return c;
}

inline std::string emit_report(const ExperimentReport& r) {
  Json per_n = Json::object();
  for (const auto& [n, count] : r.per_n) per_n[std::to_string(n)] = count;
  Json timing;
  timing["total_ms"] = r.total_ms;
  timing["per_case_median_ms"] = r.per_case_median_ms;

  std::ostringstream out;
  out << "{\n";
  out << "\"experiment\": " << Json(r.experiment).dump() << ",\n";
  out << "\"engine_version\": " << Json(r.engine_version).dump() << ",\n";
  out << "\"canonicalization\": " << Json(r.canonicalization).dump() << ",\n";
  out << "\"seed\": " << Json(r.seed).dump() << ",\n";
  out << "\"corpus\": " << Json{{"per_n", per_n}}.dump() << ",\n";
  auto lines = [&](const char* key, const auto& items) {
    out << "\"" << key << "\": [";
    for (std::size_t k = 0; k < items.size(); ++k) out << (k ? ",\n" : "\n") << to_json(items[k]).dump();
    out << (items.empty() ? "],\n" : "\n],\n");
  };
  lines("cases", r.cases);
  lines("counterexamples", r.counterexamples);
  out << "\"timing\": " << timing.dump() << ",\n";
  out << "\"summary\": " << r.summary.dump() << "\n";
  out << "}\n";
  return out.str();
}

inline ExperimentReport load_report(const std::string& text) {
  const Json j = Json::parse(text);
  ExperimentReport r;
  r.experiment = j.at("experiment").get<std::string>();
  r.engine_version = j.at("engine_version").get<std::string>();
  r.canonicalization = j.at("canonicalization").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  for (const auto& [key, count] : j.at("corpus").at("per_n").items()) {
    r.per_n[std::stoul(key)] = count.get<std::size_t>();
  }
  for (const auto& c : j.at("cases")) r.cases.push_back(case_from_json(c));
  for (const auto& c : j.at("counterexamples")) r.counterexamples.push_back(counterexample_from_json(c));
  r.total_ms = j.at("timing").at("total_ms").get<double>();
  r.per_case_median_ms = j.at("timing").at("per_case_median_ms").get<double>();
  r.summary = j.value("summary", Json::object());
  return r;
}

inline void write_report(const ExperimentReport& r, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open report file '" + path + "' for writing");
  out << emit_report(r);
  if (!out) throw std::runtime_error("failed writing report file '" + path + "'");
}

inline ExperimentReport read_report(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open report file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return load_report(buf.str());
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

}  // namespace wlbind

#endif  // WLBIND_REPORT_HPP_
