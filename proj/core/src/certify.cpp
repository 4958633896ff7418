// Copyright 2026 The cwpath Authors.
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


#include "cwpath/certify.hpp"

#include <algorithm>
#include <set>

#include "cwpath/error.hpp"
#include "json.hpp"

namespace cwpath {

using Json = nlohmann::ordered_json;

namespace {

VertexSeq seq(const Path& p) { return p.vertices; }

}  // namespace

Pi3Summary summarize(const Pi3Report& report) {
  Pi3Summary s;
  s.lower = report.lower;
  s.upper = report.upper;
  s.formula = report.formula;
  s.r = report.r;
  s.evaluated = report.evaluated;
  s.exhaustive = report.exhaustive;
  s.lower_witness = report.lower_witness;
  s.r_witness = report.r_witness;
  s.verdict = report.match() ? "MATCH" : "MISMATCH";
  return s;
}

Certificate make_certificate(const CayleyGraph& g, const Construction& c,
                             const OmegaPathSet& paths, std::uint64_t seed) {
  Certificate cert;
  cert.n = g.n();
  cert.family = std::string(family_name(g.family()));
  for (int i = 0; i < 3; ++i)
    cert.omega[i] = g.permutation(c.structure.omega[i]).to_string();

  cert.case_trace.case_id = to_string(c.trace.case_id);
  for (int i = 0; i < 3; ++i)
    cert.case_trace.copies[i] = c.trace.copies[i].value;
  cert.case_trace.j = c.trace.j;
  cert.case_trace.auxiliary = c.trace.auxiliary;
  cert.case_trace.fallback_reason = c.trace.fallback_reason;
  cert.case_trace.notes = c.trace.notes;

  for (int k = 0; k < 3; ++k)
    for (const Path& p : c.structure.bundle(static_cast<Bundle>(k)))
      cert.bundles[k].push_back(seq(p));
  for (const Path& p : paths.paths) cert.omega_paths.push_back(seq(p));

  cert.solver_metadata.seed = seed;
  cert.solver_metadata.augmentations = c.stats.augmentations;
  cert.solver_metadata.restarts_used = c.stats.restarts_used;
  cert.solver_metadata.rounds = c.stats.rounds;
  cert.solver_metadata.search_nodes = c.stats.search_nodes;
  cert.solver_metadata.strategy_path = c.strategy_path;

  const SubgraphView full = g.full_view();
  const StructureTarget target = StructureTarget::for_degree(g.n());
  const auto counts = c.structure.counts();
  cert.checks = {
      {"tripod-verified",
       verify_tripod(full, c.structure, target).ok()},
      {"target-counts", counts == std::array<int, 3>{target.x, target.y,
                                                     target.z}},
      {"omega-paths-verified", verify_omega_paths(full, paths).ok()},
      {"pairing-count",
       static_cast<int>(paths.paths.size()) ==
           pairing_capacity(counts[0], counts[1], counts[2])},
  };
  return cert;
}

// ----- emit -----

namespace {

constexpr std::array<const char*, 3> kBundleKeys{"ab", "ac", "bc"};

Json triple_json(const std::array<VertexId, 3>& t) {
  return Json::array({t[0], t[1], t[2]});
}

// Indented like dump(2), except that arrays of scalars stay on one line.
void write_pretty(const Json& j, int depth, std::string& out) {
  const std::string pad(2 * depth + 2, ' ');
  const std::string close_pad(2 * depth, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t i = 0;
    for (const auto& item : j.items()) {
      out += pad + Json(item.key()).dump() + ": ";
      write_pretty(item.value(), depth + 1, out);
      out += ++i < j.size() ? ",\n" : "\n";
    }
    out += close_pad + "}";
  } else if (j.is_array()) {
    const bool flat = std::none_of(j.begin(), j.end(), [](const Json& e) {
      return e.is_structured();
    });
    if (flat) {
      out += "[";
      for (std::size_t i = 0; i < j.size(); ++i)
        out += (i ? ", " : "") + j[i].dump();
      out += "]";
      return;
    }
    out += "[\n";
    for (std::size_t i = 0; i < j.size(); ++i) {
      out += pad;
      write_pretty(j[i], depth + 1, out);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += close_pad + "]";
  } else {
    out += j.dump();
  }
}

}  // namespace

std::string emit(const Certificate& c) {
  Json doc;
  doc["schema_version"] = c.schema_version;
  doc["ranking"] = c.ranking;
  doc["n"] = c.n;
  doc["family"] = c.family;
  doc["omega"] = Json::array({c.omega[0], c.omega[1], c.omega[2]});

  Json trace;
  trace["case_id"] = c.case_trace.case_id;
  trace["copies"] = Json::array(
      {c.case_trace.copies[0], c.case_trace.copies[1], c.case_trace.copies[2]});
  trace["j"] = c.case_trace.j ? Json(*c.case_trace.j) : Json(nullptr);
  Json aux = Json::object();
  for (const auto& [name, vs] : c.case_trace.auxiliary) aux[name] = vs;
  trace["auxiliary"] = aux;
  trace["fallback_reason"] = c.case_trace.fallback_reason;
  trace["notes"] = c.case_trace.notes;
  doc["case_trace"] = trace;

  Json bundles;
  for (int k = 0; k < 3; ++k) bundles[kBundleKeys[k]] = c.bundles[k];
  doc["bundles"] = bundles;
  doc["omega_paths"] = c.omega_paths;

  if (c.pi3_report) {
    const Pi3Summary& p = *c.pi3_report;
    Json r;
    r["lower"] = p.lower;
    r["upper"] = p.upper;
    r["formula"] = p.formula;
    r["r"] = p.r;
    r["evaluated"] = p.evaluated;
    r["exhaustive"] = p.exhaustive;
    r["lower_witness"] = triple_json(p.lower_witness);
    r["r_witness"] = triple_json(p.r_witness);
    r["verdict"] = p.verdict;
    doc["pi3_report"] = r;
  } else {
    doc["pi3_report"] = nullptr;
  }

  Json meta;
  meta["seed"] = c.solver_metadata.seed;
  meta["augmentations"] = c.solver_metadata.augmentations;
  meta["restarts_used"] = c.solver_metadata.restarts_used;
  meta["rounds"] = c.solver_metadata.rounds;
  meta["search_nodes"] = c.solver_metadata.search_nodes;
  meta["strategy_path"] = c.solver_metadata.strategy_path;
  doc["solver_metadata"] = meta;

  Json checks = Json::array();
  for (const auto& ch : c.checks)
    checks.push_back(Json{{"name", ch.name}, {"pass", ch.passed}});
  doc["checks"] = checks;
  std::string out;
  write_pretty(doc, 0, out);
  return out + "\n";
}

// ----- load -----

namespace {

[[noreturn]] void schema_error(const std::string& path,
                               const std::string& what) {
  throw Error(Errc::SchemaError, "field " + path + ": " + what);
}

// Field access that records which keys were consumed, so leftovers can be
// reported as unknown.
class Reader {
 public:
  Reader(const Json& object, std::string path)
      : object_(object), path_(std::move(path)) {
    if (!object_.is_object()) schema_error(path_, "expected an object");
  }

  const Json& at(const std::string& key) {
    seen_.insert(key);
    const auto it = object_.find(key);
    if (it == object_.end()) schema_error(child(key), "missing");
    return *it;
  }
  std::string child(const std::string& key) const {
    return path_ + "." + key;
  }
  void finish() const {
    for (const auto& item : object_.items())
      if (!seen_.count(item.key())) schema_error(child(item.key()), "unknown");
  }

 private:
  const Json& object_;
  std::string path_;
  std::set<std::string> seen_;
};

std::string as_string(const Json& j, const std::string& path) {
  if (!j.is_string()) schema_error(path, "expected a string");
  return j.get<std::string>();
}

std::int64_t as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) schema_error(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::uint64_t as_uint(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    schema_error(path, "expected a non-negative integer");
  return j.get<std::uint64_t>();
}

bool as_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) schema_error(path, "expected a boolean");
  return j.get<bool>();
}

const Json& as_array(const Json& j, const std::string& path,
                     std::optional<std::size_t> size = std::nullopt) {
  if (!j.is_array()) schema_error(path, "expected an array");
  if (size && j.size() != *size)
    schema_error(path, "expected " + std::to_string(*size) + " entries");
  return j;
}

VertexSeq as_seq(const Json& j, const std::string& path) {
  VertexSeq out;
  std::size_t i = 0;
  for (const Json& v : as_array(j, path)) {
    const std::uint64_t x = as_uint(v, path + "[" + std::to_string(i++) + "]");
    if (x >= kNoVertex) schema_error(path, "vertex rank out of range");
    out.push_back(static_cast<VertexId>(x));
  }
  return out;
}

std::vector<VertexSeq> as_seqs(const Json& j, const std::string& path) {
  std::vector<VertexSeq> out;
  std::size_t i = 0;
  for (const Json& v : as_array(j, path))
    out.push_back(as_seq(v, path + "[" + std::to_string(i++) + "]"));
  return out;
}

std::vector<std::string> as_strings(const Json& j, const std::string& path) {
  std::vector<std::string> out;
  std::size_t i = 0;
  for (const Json& v : as_array(j, path))
    out.push_back(as_string(v, path + "[" + std::to_string(i++) + "]"));
  return out;
}

std::array<VertexId, 3> as_triple(const Json& j, const std::string& path) {
  as_array(j, path, 3);
  const VertexSeq s = as_seq(j, path);
  return {s[0], s[1], s[2]};
}

}  // namespace

Certificate load(std::string_view document) {
  Json doc;
  try {
    doc = Json::parse(document);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::SchemaError,
                std::string("document is not valid JSON: ") + e.what());
  }
  Certificate c;
  Reader top(doc, "$");
  c.schema_version = as_string(top.at("schema_version"), "$.schema_version");
  if (c.schema_version != kCertificateSchema) {
    const std::string prefix = "cwpath.certificate/";
    if (c.schema_version.rfind(prefix, 0) == 0)
      throw Error(Errc::VersionMismatch,
                  "certificate schema " + c.schema_version +
                      " is not supported (expected " +
                      std::string(kCertificateSchema) + ")");
    schema_error("$.schema_version", "unrecognized schema '" +
                                         c.schema_version + "'");
  }
  c.ranking = as_string(top.at("ranking"), "$.ranking");
  if (c.ranking != kRankingScheme)
    schema_error("$.ranking", "unsupported ranking '" + c.ranking + "'");
  c.n = static_cast<int>(as_int(top.at("n"), "$.n"));
  c.family = as_string(top.at("family"), "$.family");
  {
    const auto omega =
        as_strings(as_array(top.at("omega"), "$.omega", 3), "$.omega");
    std::copy(omega.begin(), omega.end(), c.omega.begin());
  }

  {
    Reader r(top.at("case_trace"), "$.case_trace");
    c.case_trace.case_id = as_string(r.at("case_id"), r.child("case_id"));
    const Json& copies = as_array(r.at("copies"), r.child("copies"), 3);
    for (int i = 0; i < 3; ++i)
      c.case_trace.copies[i] = static_cast<int>(
          as_int(copies[i], r.child("copies") + "[" + std::to_string(i) + "]"));
    const Json& j = r.at("j");
    if (!j.is_null()) c.case_trace.j = static_cast<int>(as_int(j, r.child("j")));
    const Json& aux = r.at("auxiliary");
    if (!aux.is_object()) schema_error(r.child("auxiliary"), "expected an object");
    for (const auto& item : aux.items())
      c.case_trace.auxiliary[item.key()] =
          as_seq(item.value(), r.child("auxiliary") + "." + item.key());
    c.case_trace.fallback_reason =
        as_string(r.at("fallback_reason"), r.child("fallback_reason"));
    c.case_trace.notes = as_strings(r.at("notes"), r.child("notes"));
    r.finish();
  }
  {
    Reader r(top.at("bundles"), "$.bundles");
    for (int k = 0; k < 3; ++k)
      c.bundles[k] = as_seqs(r.at(kBundleKeys[k]), r.child(kBundleKeys[k]));
    r.finish();
  }
  c.omega_paths = as_seqs(top.at("omega_paths"), "$.omega_paths");
  if (const Json& p = top.at("pi3_report"); !p.is_null()) {
    Reader r(p, "$.pi3_report");
    Pi3Summary s;
    s.lower = static_cast<int>(as_int(r.at("lower"), r.child("lower")));
    s.upper = static_cast<int>(as_int(r.at("upper"), r.child("upper")));
    s.formula = static_cast<int>(as_int(r.at("formula"), r.child("formula")));
    s.r = static_cast<int>(as_int(r.at("r"), r.child("r")));
    s.evaluated = as_uint(r.at("evaluated"), r.child("evaluated"));
    s.exhaustive = as_bool(r.at("exhaustive"), r.child("exhaustive"));
    s.lower_witness = as_triple(r.at("lower_witness"), r.child("lower_witness"));
    s.r_witness = as_triple(r.at("r_witness"), r.child("r_witness"));
    s.verdict = as_string(r.at("verdict"), r.child("verdict"));
    r.finish();
    c.pi3_report = s;
  }
  {
    Reader r(top.at("solver_metadata"), "$.solver_metadata");
    SolverMetadata& m = c.solver_metadata;
    m.seed = as_uint(r.at("seed"), r.child("seed"));
    m.augmentations = as_uint(r.at("augmentations"), r.child("augmentations"));
    m.restarts_used =
        static_cast<int>(as_int(r.at("restarts_used"), r.child("restarts_used")));
    m.rounds = static_cast<int>(as_int(r.at("rounds"), r.child("rounds")));
    m.search_nodes = as_uint(r.at("search_nodes"), r.child("search_nodes"));
    m.strategy_path =
        as_strings(r.at("strategy_path"), r.child("strategy_path"));
    r.finish();
  }
  {
    const Json& checks = as_array(top.at("checks"), "$.checks");
    for (std::size_t i = 0; i < checks.size(); ++i) {
      Reader r(checks[i], "$.checks[" + std::to_string(i) + "]");
      CertificateCheck ch;
      ch.name = as_string(r.at("name"), r.child("name"));
      ch.passed = as_bool(r.at("pass"), r.child("pass"));
      r.finish();
      c.checks.push_back(ch);
    }
  }
  top.finish();
  return c;
}

bool VerdictReport::ok() const {
  if (schema_error) return false;
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

VerdictReport verify_certificate(std::string_view document) {
  try {
    return verify_certificate(load(document));
  } catch (const Error& e) {
    if (e.code() != Errc::SchemaError && e.code() != Errc::VersionMismatch)
      throw;
    VerdictReport report;
    report.schema_error = e.what();
    return report;
  }
}

}  // namespace cwpath
