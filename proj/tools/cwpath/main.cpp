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


#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cwpath/certify.hpp"
#include "cwpath/construct.hpp"
#include "cwpath/error.hpp"
#include "cwpath/lemmas.hpp"
#include "cwpath/pairing.hpp"
#include "cwpath/random.hpp"
#include "cwpath/topology.hpp"
#include "report.hpp"

namespace fs = std::filesystem;

namespace cwpath::cli {
namespace {

enum ExitCode {
  kSuccess = 0,
  kInternal = 1,
  kUsage = 2,
  kConstruction = 3,
  kVerification = 4,
  kMismatch = 5,
};

struct RunConfig {
  int n = 0;
  std::string family = "wheel";
  std::string omega;
  bool random = false;
  std::optional<std::uint64_t> seed;
  int samples = 0;
  bool exhaustive = false;
  std::string output;
  std::string format = "dot";
  bool strict = false;
  int jobs = 1;
  bool inject_fault = false;
  std::string path;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

fs::path output_dir() {
  const char* env = std::getenv("CWPATH_OUTPUT_DIR");
  return env && *env ? fs::path(env) : fs::path(".");
}

fs::path resolve(const RunConfig& cfg, const std::string& default_name) {
  return cfg.output.empty() ? output_dir() / default_name : fs::path(cfg.output);
}

void write_file(const fs::path& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << content;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

std::string triple_text(const std::array<VertexId, 3>& t) {
  return "{" + std::to_string(t[0]) + ", " + std::to_string(t[1]) + ", " +
         std::to_string(t[2]) + "}";
}

std::array<VertexId, 3> parse_omega(const CayleyGraph& g,
                                    const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, ';');) parts.push_back(part);
  if (parts.size() != 3)
    throw UsageError("omega needs three permutations separated by ';'");
  std::array<VertexId, 3> omega{};
  for (int i = 0; i < 3; ++i) {
    const Permutation p = Permutation::parse(parts[i]);
    if (p.degree() != g.n())
      throw UsageError("permutation " + p.to_string() + " has degree " +
                       std::to_string(p.degree()) + ", expected " +
                       std::to_string(g.n()));
    omega[i] = g.vertex(p);
  }
  return omega;
}

std::array<VertexId, 3> random_omega(const CayleyGraph& g, std::uint64_t seed) {
  Rng rng(seed);
  std::array<VertexId, 3> omega{};
  for (int i = 0; i < 3; ++i) {
    bool fresh = false;
    while (!fresh) {
      omega[i] = static_cast<VertexId>(rng.below(g.vertex_count()));
      fresh = true;
      for (int k = 0; k < i; ++k) fresh = fresh && omega[k] != omega[i];
    }
  }
  return omega;
}

int cmd_gen(const RunConfig& cfg) {
  const CayleyGraph g = CayleyGraph::build(cfg.n, parse_family(cfg.family));
  std::string body, ext;
  if (cfg.format == "dot") {
    body = to_dot(g);
    ext = ".dot";
  } else {
    body = to_edge_list(g);
    ext = ".edges";
  }
  const fs::path path =
      resolve(cfg, cfg.family + std::to_string(cfg.n) + ext);
  write_file(path, body);
  if (path != "-")
    std::cout << "wrote " << path.string() << " (" << g.vertex_count()
              << " nodes, " << g.graph().edge_count() << " edges)\n";
  return kSuccess;
}

int report_verdict(const VerdictReport& v) {
  if (v.schema_error) {
    std::cout << "schema error: " << *v.schema_error << "\n";
    return kUsage;
  }
  for (const CheckResult& c : v.checks) {
    std::cout << (c.passed ? "PASS  " : "FAIL  ") << c.name << "\n";
    for (const std::string& d : c.details) std::cout << "      " << d << "\n";
  }
  std::cout << (v.ok() ? "certificate verified\n" : "certificate rejected\n");
  return v.ok() ? kSuccess : kVerification;
}

int cmd_structure(const RunConfig& cfg) {
  if (cfg.family != "wheel")
    throw UsageError("structure is defined for the wheel family");
  if (cfg.random == !cfg.omega.empty())
    throw UsageError("give exactly one of --omega and --random");
  if (cfg.random && !cfg.seed)
    throw UsageError("--random requires --seed");
  const CayleyGraph g = CayleyGraph::build(cfg.n, Family::Wheel);
  const std::uint64_t seed = cfg.seed.value_or(0);
  const auto omega =
      cfg.random ? random_omega(g, seed) : parse_omega(g, cfg.omega);

  ConstructOptions options;
  options.strict = cfg.strict;
  options.budget.seed = seed;
  const Construction c = build_structure(g, omega, options);
  const OmegaPathSet paths = pair_structure(g.full_view(), c.structure);
  const std::string doc = emit(make_certificate(g, c, paths, seed));
  const fs::path path =
      resolve(cfg, "structure-n" + std::to_string(cfg.n) + "-" +
                       std::to_string(omega[0]) + "-" +
                       std::to_string(omega[1]) + "-" +
                       std::to_string(omega[2]) + ".json");
  write_file(path, doc);

  const auto counts = c.structure.counts();
  std::cout << "case " << to_string(c.trace.case_id);
  if (c.trace.j) std::cout << " (j = " << *c.trace.j << ")";
  std::cout << "\nbundles (" << counts[0] << "," << counts[1] << ","
            << counts[2] << "), " << paths.paths.size() << " omega-paths\n";
  if (c.trace.case_id == CaseId::FallbackGeneric)
    std::cout << "fallback: " << c.trace.fallback_reason << "\n";
  if (path != "-") std::cout << "certificate " << path.string() << "\n";
  return report_verdict(verify_certificate(doc));
}

int cmd_pi3(const RunConfig& cfg) {
  if (cfg.family != "wheel") throw UsageError("pi3 is defined for the wheel family");
  if (cfg.n < 4 || cfg.n > 6) throw UsageError("pi3 supports 4 <= n <= 6");
  if (cfg.exhaustive == (cfg.samples > 0))
    throw UsageError("give exactly one of --exhaustive and --samples");
  if (cfg.exhaustive && cfg.n != 4)
    throw UsageError("exhaustive mode is limited to n = 4");
  if (!cfg.exhaustive && !cfg.seed)
    throw UsageError("sampling requires --seed");

  const CayleyGraph g = CayleyGraph::build(cfg.n, Family::Wheel);
  SampleSpec spec;
  spec.mode = cfg.exhaustive ? SampleMode::Exhaustive : SampleMode::Stratified;
  spec.count = cfg.samples;
  spec.seed = cfg.seed.value_or(0);
  spec.construct.strict = cfg.strict;
  spec.jobs = cfg.jobs;
  const Pi3Lower lower = pi3_lower(g, spec);
  const Pi3Upper upper = pi3_upper(g);
  const Pi3Report r = make_report(cfg.n, lower, upper);

  Certificate cert =
      make_certificate(g, lower.witness, lower.witness_paths, lower.witness_seed);
  cert.pi3_report = summarize(r);
  const std::string witness_doc = emit(cert);

  Report rep;
  rep.title = "pi3 of the wheel graph, n = " + std::to_string(cfg.n);
  rep.columns = {"quantity", "value"};
  rep.add({"n", std::to_string(cfg.n)});
  rep.add({"mode", cfg.exhaustive ? "exhaustive" : "stratified sample"});
  rep.add({"seed", std::to_string(spec.seed)});
  rep.add({"triples evaluated", std::to_string(lower.evaluated)});
  for (const auto& [id, count] : lower.cases)
    rep.add({"case " + to_string(id), std::to_string(count)});
  rep.add({"lower (min omega-paths)", std::to_string(r.lower)});
  rep.add({"lower witness", triple_text(r.lower_witness)});
  rep.add({"degree k", std::to_string(upper.k)});
  rep.add({"r (max common neighbors)", std::to_string(r.r)});
  rep.add({"r witness", triple_text(r.r_witness)});
  rep.add({"upper floor((3k-r)/4)", std::to_string(r.upper)});
  rep.add({"formula floor((6n-9)/4)", std::to_string(r.formula)});
  rep.add({"verdict", r.match() ? "MATCH" : "MISMATCH"});

  const std::string stem = "pi3-n" + std::to_string(cfg.n);
  const fs::path text_path = resolve(cfg, stem + ".txt");
  fs::path base = text_path;
  base.replace_extension();
  const std::string text = rep.text(utc_stamp());
  write_file(text_path, text);
  if (text_path != "-") {
    write_file(base.string() + ".json", rep.json());
    write_file(base.string() + "-witness.json", witness_doc);
    std::cout << text;
  }
  const VerdictReport v = verify_certificate(witness_doc);
  if (!v.ok()) return report_verdict(v);
  return r.match() ? kSuccess : kMismatch;
}

int cmd_lemmas(const RunConfig& cfg) {
  if (cfg.n != 4 && cfg.n != 5) throw UsageError("lemmas supports n = 4 or 5");
  LemmaOptions options;
  options.inject_fault = cfg.inject_fault;
  const LemmaReport lr = run_lemma_suite(cfg.n, options);
  Report rep;
  rep.title = "structural checks, n = " + std::to_string(cfg.n) +
              (cfg.inject_fault ? " (fault injected)" : "");
  rep.columns = {"check", "claim", "observed", "result"};
  for (const LemmaCheck& c : lr.checks)
    rep.add({c.name, c.claim, c.observed, c.passed ? "PASS" : "FAIL"});
  const fs::path text_path =
      resolve(cfg, "lemmas-n" + std::to_string(cfg.n) + ".txt");
  const std::string text = rep.text(utc_stamp());
  write_file(text_path, text);
  if (text_path != "-") {
    fs::path base = text_path;
    base.replace_extension();
    write_file(base.string() + ".json", rep.json());
    std::cout << text;
  }
  return lr.ok() ? kSuccess : kMismatch;
}

int cmd_verify(const RunConfig& cfg) {
  std::ifstream in(cfg.path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + cfg.path);
  std::stringstream buf;
  buf << in.rdbuf();
  return report_verdict(verify_certificate(buf.str()));
}

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::ConstructionFailed:
    case Errc::InsufficientConnectivity:
      return kConstruction;
    case Errc::UnverifiedStructure:
      return kVerification;
    case Errc::OracleScaleExceeded:
      return kInternal;
    default:
      return kUsage;
  }
}

}  // namespace

int run(int argc, char** argv) {
  CLI::App app{"cwpath: disjoint path structures on three terminals in "
               "wheel-generated Cayley graphs"};
  app.require_subcommand(1);
  RunConfig cfg;

  const auto add_n = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "permutation degree")->required();
  };
  const auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output,-o", cfg.output,
                    "output file ('-' for stdout); defaults to "
                    "$CWPATH_OUTPUT_DIR or the working directory");
  };

  CLI::App* gen = app.add_subcommand("gen", "export a Cayley graph");
  add_n(gen);
  gen->add_option("--family", cfg.family, "wheel or bss")
      ->check(CLI::IsMember({"wheel", "bss"}));
  gen->add_option("--format", cfg.format, "dot or edgelist")
      ->check(CLI::IsMember({"dot", "edgelist"}));
  add_output(gen);

  CLI::App* structure =
      app.add_subcommand("structure", "build and certify one structure");
  add_n(structure);
  structure->add_option("--family", cfg.family)
      ->check(CLI::IsMember({"wheel"}));
  structure->add_option("--omega", cfg.omega,
                        "three permutations, e.g. \"[1,2,3,4];[2,1,3,4];"
                        "[1,3,2,4]\"");
  structure->add_flag("--random", cfg.random, "draw omega from --seed");
  structure->add_option("--seed", cfg.seed, "seed for omega and the solver");
  structure->add_flag("--strict", cfg.strict,
                      "fail instead of using the generic fallback");
  add_output(structure);

  CLI::App* pi3 = app.add_subcommand("pi3", "lower and upper bounds on pi3");
  add_n(pi3);
  pi3->add_option("--family", cfg.family)->check(CLI::IsMember({"wheel"}));
  pi3->add_flag("--exhaustive", cfg.exhaustive, "evaluate every triple");
  pi3->add_option("--samples", cfg.samples, "stratified sample size")
      ->check(CLI::PositiveNumber);
  pi3->add_option("--seed", cfg.seed, "sampling and solver seed");
  pi3->add_option("--jobs,-j", cfg.jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  pi3->add_flag("--strict", cfg.strict,
                "fail instead of using the generic fallback");
  add_output(pi3);

  CLI::App* lemmas =
      app.add_subcommand("lemmas", "structural checklist for n = 4 or 5");
  add_n(lemmas);
  lemmas->add_flag("--inject-fault", cfg.inject_fault)->group("");
  add_output(lemmas);

  CLI::App* verify = app.add_subcommand("verify", "re-check a certificate");
  verify->add_option("path", cfg.path, "certificate file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (*gen) return cmd_gen(cfg);
    if (*structure) return cmd_structure(cfg);
    if (*pi3) return cmd_pi3(cfg);
    if (*lemmas) return cmd_lemmas(cfg);
    return cmd_verify(cfg);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace cwpath::cli

int main(int argc, char** argv) { return cwpath::cli::run(argc, argv); }
