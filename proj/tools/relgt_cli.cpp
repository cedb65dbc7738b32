// relgt - exact computation with Gelfand-Tsetlin tableaux and relation graphs
// SPDX-License-Identifier: Apache-2.0
//
// Batch front end over the shared C API: weight analysis, module
// construction, operator application, bracket checks, localization and graph
// rendering. JSON in, JSON/DOT/plain text out. Exit codes: 0 success,
// 1 domain refusal, 2 malformed input.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "relgt/relgt.h"

namespace {

using nlohmann::ordered_json;

int status_to_exit(relgt_status s) {
  switch (s) {
    case RELGT_OK: return 0;
    case RELGT_ERR_DOMAIN: return 1;
    default: return 2;
  }
}

int fail(relgt_status s) {
  std::cerr << "error: " << relgt_last_error() << "\n";
  return status_to_exit(s);
}

struct CString {
  char* ptr = nullptr;
  ~CString() { relgt_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

struct ModuleHandle {
  relgt_module* ptr = nullptr;
  ~ModuleHandle() { relgt_module_free(ptr); }
};

std::string read_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string sigma_label(const ordered_json& image) {
  std::string s;
  for (const auto& v : image) {
    if (!s.empty()) s += ",";
    s += std::to_string(v.get<int>());
  }
  return s;
}

void print_analysis_text(const ordered_json& j) {
  std::cout << "weight lambda = [";
  for (std::size_t i = 0; i < j["lambda"].size(); ++i)
    std::cout << (i ? ", " : "") << j["lambda"][i].get<std::string>();
  std::cout << "]   mu = lambda + staircase = [";
  for (std::size_t i = 0; i < j["mu"].size(); ++i)
    std::cout << (i ? ", " : "") << j["mu"][i].get<std::string>();
  std::cout << "]\n";
  for (const auto& e : j["entries"]) {
    std::cout << "  sigma = " << sigma_label(e["sigma"]);
    if (e["accepted"].get<bool>())
      std::cout << "  accepted\n";
    else
      std::cout << "  rejected (" << e["diagnostic"].get<std::string>() << ")\n";
  }
  std::cout << "witnesses: " << j["witness_count"] << "\n";
  const auto& lb = j["lower_bound"];
  std::cout << "lower bound: " << lb["bound"] << " (subset {";
  for (std::size_t i = 0; i < lb["subset"].size(); ++i)
    std::cout << (i ? "," : "") << lb["subset"][i].get<int>();
  std::cout << "}, k=" << lb["k"] << ", p=" << lb["p"] << ")\n";
  if (j["finite_dimensional"].get<bool>())
    std::cout << "finite-dimensional, dimension " << j["dimension"] << "\n";
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Gelfand-Tsetlin relation-module toolkit"};
  app.require_subcommand(1);

  int n = 0;
  std::string lambda, sigma = "", format = "text", z_value, op_spec, tableau_path;
  int window = 6;
  int jobs = 1;
  bool use_twisting = false;

  auto add_common = [&](CLI::App* cmd, bool needs_lambda) {
    cmd->add_option("--n", n, "rank (inferred from --lambda when omitted)");
    if (needs_lambda) cmd->add_option("--lambda", lambda, "weight, e.g. \"-1/6,-2/3,5/6\"")->required();
    cmd->add_option("--format", format, "text|json|dot");
    cmd->add_option("--jobs", jobs, "worker threads for permutation sweeps");
  };

  auto* analyze = app.add_subcommand("analyze", "witness sweep, bound certificate, dimension");
  add_common(analyze, true);

  auto* witnesses = app.add_subcommand("witnesses", "witness sweep with per-sigma diagnostics");
  add_common(witnesses, true);

  auto* build = app.add_subcommand("build", "construct a twisted relation module");
  add_common(build, true);
  build->add_option("--sigma", sigma, "one-line image, e.g. \"1,3,2\"");
  build->add_option("--window", window, "basis window |z| <= B");

  auto* act = app.add_subcommand("act", "apply a root vector to a tableau");
  add_common(act, true);
  act->add_option("--sigma", sigma, "one-line image");
  act->add_option("--op", op_spec, "operator spec \"E i j\"")->required();
  act->add_option("--tableau", tableau_path, "tableau JSON file ('-' for stdin; default: seed)");

  auto* brackets = app.add_subcommand("brackets", "exact commutator sweep");
  add_common(brackets, true);
  brackets->add_option("--sigma", sigma, "one-line image");
  brackets->add_option("--window", window, "basis window |z| <= B");

  auto* localize = app.add_subcommand("localize", "localization along the corner lowering");
  add_common(localize, true);
  localize->add_option("--sigma", sigma, "one-line image");
  localize->add_option("--z", z_value, "twist parameter p/q (default 0)");
  localize->add_flag("--functor", use_twisting, "apply the twisting functor instead of D_f^z");

  auto* render = app.add_subcommand("render", "emit the module graph (DOT or JSON)");
  add_common(render, true);
  render->add_option("--sigma", sigma, "one-line image");

  CLI11_PARSE(app, argc, argv);

  auto infer_n = [&]() {
    if (n > 0) return;
    n = 1 + static_cast<int>(std::count(lambda.begin(), lambda.end(), ','));
  };
  infer_n();
  const char* sigma_arg = sigma.empty() ? nullptr : sigma.c_str();

  if (analyze->parsed() || witnesses->parsed()) {
    CString out;
    relgt_status s = relgt_analyze(n, lambda.c_str(), jobs, &out.ptr);
    if (s != RELGT_OK) return fail(s);
    if (format == "json") {
      std::cout << out.str() << "\n";
    } else {
      print_analysis_text(ordered_json::parse(out.str()));
    }
    return 0;
  }

  if (build->parsed()) {
    ModuleHandle m;
    relgt_status s = relgt_module_build(n, lambda.c_str(), sigma_arg, &m.ptr);
    if (s != RELGT_OK) return fail(s);
    CString seed, graph, basis;
    if ((s = relgt_module_seed_json(m.ptr, &seed.ptr)) != RELGT_OK) return fail(s);
    if ((s = relgt_module_graph_json(m.ptr, &graph.ptr)) != RELGT_OK) return fail(s);
    if ((s = relgt_module_enumerate(m.ptr, window, &basis.ptr)) != RELGT_OK) return fail(s);
    ordered_json basis_json = ordered_json::parse(basis.str());
    if (format == "json") {
      ordered_json j{{"schema", "relgt-build/1"},
                     {"seed", ordered_json::parse(seed.str())},
                     {"graph", ordered_json::parse(graph.str())},
                     {"basis", basis_json}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "seed tableau: " << seed.str() << "\n"
                << "graph: " << graph.str() << "\n"
                << "basis count " << basis_json["count"] << " within |z| <= " << window
                << (basis_json["complete"].get<bool>() ? " (complete)" : " (window-limited)")
                << "\n";
    }
    return 0;
  }

  if (act->parsed()) {
    int l = 0, mm = 0;
    char e = 0;
    std::istringstream is(op_spec);
    if (!(is >> e >> l >> mm) || e != 'E') {
      std::cerr << "error: operator spec must look like \"E 1 2\"\n";
      return 2;
    }
    ModuleHandle m;
    relgt_status s = relgt_module_build(n, lambda.c_str(), sigma_arg, &m.ptr);
    if (s != RELGT_OK) return fail(s);
    std::string tjson;
    if (!tableau_path.empty()) {
      try {
        tjson = read_source(tableau_path);
      } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
      }
    }
    CString out;
    s = relgt_module_act(m.ptr, l, mm, tjson.empty() ? nullptr : tjson.c_str(), &out.ptr);
    if (s != RELGT_OK) return fail(s);
    if (format == "json") {
      std::cout << out.str() << "\n";
    } else {
      ordered_json j = ordered_json::parse(out.str());
      if (j["terms"].empty()) std::cout << "0\n";
      for (const auto& term : j["terms"]) {
        std::cout << term["coeff"].get<std::string>() << " * T" << term["tableau"]["rows"].dump()
                  << "\n";
      }
    }
    return 0;
  }

  if (brackets->parsed()) {
    ModuleHandle m;
    relgt_status s = relgt_module_build(n, lambda.c_str(), sigma_arg, &m.ptr);
    if (s != RELGT_OK) return fail(s);
    CString out;
    if ((s = relgt_module_check_brackets(m.ptr, window, &out.ptr)) != RELGT_OK) return fail(s);
    ordered_json j = ordered_json::parse(out.str());
    if (format == "json") {
      std::cout << out.str() << "\n";
    } else {
      std::cout << "pairs " << j["pairs"] << ", vectors checked " << j["checked"]
                << ", skipped " << j["skipped"] << ", violations " << j["violations"] << " -> "
                << (j["violations"].get<long long>() == 0 ? "PASS" : "FAIL") << "\n";
    }
    return j["violations"].get<long long>() == 0 ? 0 : 1;
  }

  if (localize->parsed()) {
    ModuleHandle m;
    relgt_status s = relgt_module_build(n, lambda.c_str(), sigma_arg, &m.ptr);
    if (s != RELGT_OK) return fail(s);
    CString before;
    if ((s = relgt_module_graph_dot(m.ptr, &before.ptr)) != RELGT_OK) return fail(s);
    ModuleHandle loc;
    int simple = 0;
    s = relgt_module_localize(m.ptr, use_twisting ? 1 : 0,
                              z_value.empty() ? nullptr : z_value.c_str(), &loc.ptr, &simple);
    if (s != RELGT_OK) return fail(s);
    CString after, seed;
    if ((s = relgt_module_graph_dot(loc.ptr, &after.ptr)) != RELGT_OK) return fail(s);
    if ((s = relgt_module_seed_json(loc.ptr, &seed.ptr)) != RELGT_OK) return fail(s);
    if (format == "json") {
      CString before_json, after_json;
      if ((s = relgt_module_graph_json(m.ptr, &before_json.ptr)) != RELGT_OK) return fail(s);
      if ((s = relgt_module_graph_json(loc.ptr, &after_json.ptr)) != RELGT_OK) return fail(s);
      ordered_json j{{"schema", "relgt-localize/1"},
                     {"before", ordered_json::parse(before_json.str())},
                     {"after", ordered_json::parse(after_json.str())},
                     {"seed", ordered_json::parse(seed.str())},
                     {"simple", simple == 1}};
      std::cout << j.dump() << "\n";
    } else {
      std::cout << "before:\n" << before.str() << "after:\n" << after.str()
                << "seed: " << seed.str() << "\n"
                << "simple: " << (simple ? "yes" : "no") << "\n";
    }
    return 0;
  }

  if (render->parsed()) {
    ModuleHandle m;
    relgt_status s = relgt_module_build(n, lambda.c_str(), sigma_arg, &m.ptr);
    if (s != RELGT_OK) return fail(s);
    CString out;
    if (format == "json") {
      if ((s = relgt_module_graph_json(m.ptr, &out.ptr)) != RELGT_OK) return fail(s);
    } else {
      if ((s = relgt_module_graph_dot(m.ptr, &out.ptr)) != RELGT_OK) return fail(s);
    }
    std::cout << out.str();
    return 0;
  }

  return 2;
}
