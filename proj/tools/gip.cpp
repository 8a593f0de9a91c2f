// gip: command-line front end for graded monomial identities of
// block-triangular matrix algebras.
//
// Exit status: 0 success, 2 invalid input, 3 conjecture sweep left cases unresolved.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "gip/evaluation.hpp"
#include "gip/identity.hpp"
#include "gip/tideal.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

/// Invalid user input; reported on stderr with exit status 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<long long> parse_list(const std::string& text, const std::string& what) {
  std::vector<long long> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t\r");
    const auto e = item.find_last_not_of(" \t\r");
    if (b == std::string::npos) throw UsageError(what + ": empty entry in '" + text + "'");
    item = item.substr(b, e - b + 1);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw UsageError(what + ": '" + item + "' is not an integer");
    out.push_back(v);
  }
  if (out.empty()) throw UsageError(what + ": expected a comma-separated list");
  return out;
}

gip::GradedMonomial parse_monomial(const std::string& text, int n, const std::string& what) {
  std::vector<int> degrees;
  for (long long v : parse_list(text, what)) {
    if (v < 0 || v >= n) {
      throw UsageError(what + ": degree " + std::to_string(v) + " is not a residue in 0.." + std::to_string(n - 1));
    }
    degrees.push_back(static_cast<int>(v));
  }
  return gip::GradedMonomial(n, std::move(degrees));
}

gip::Permutation parse_permutation(const std::string& text, std::size_t size, const std::string& what) {
  gip::Permutation p;
  for (long long v : parse_list(text, what)) {
    if (v < 1 || static_cast<std::size_t>(v) > size) {
      throw UsageError(what + ": entry " + std::to_string(v) + " outside 1.." + std::to_string(size));
    }
    p.push_back(static_cast<std::size_t>(v - 1));
  }
  return p;
}

std::vector<gip::GradedMonomial> read_generators(const std::string& path, int n) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open generators file '" + path + "'");
  std::vector<gip::GradedMonomial> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.push_back(parse_monomial(line, n, path + ":" + std::to_string(lineno)));
  }
  return out;
}

unsigned thread_count() {
  const char* env = std::getenv("GIP_THREADS");
  if (!env || !*env) return std::max(1u, std::thread::hardware_concurrency());
  const auto v = parse_list(env, "GIP_THREADS");
  if (v.size() != 1 || v[0] < 1) throw UsageError("GIP_THREADS must be a positive integer");
  return static_cast<unsigned>(v[0]);
}

json degrees_json(const gip::GradedMonomial& m) { return json(std::vector<int>(m.degrees().begin(), m.degrees().end())); }

json permutation_json(const gip::Permutation& p) {
  json out = json::array();
  for (auto v : p) out.push_back(v + 1);
  return out;
}

json profile_json(const std::vector<gip::ProfileStep>& steps) {
  json out = json::array();
  for (const auto& s : steps) {
    out.push_back({{"prefix_length", s.prefix_length}, {"empty_lines", s.empty_lines}, {"fall", s.fall}});
  }
  return out;
}

json derivation_json(const gip::Derivation& d) {
  json blocks = json::array();
  for (std::size_t k = 0; k + 1 < d.cuts.size(); ++k) blocks.push_back({d.cuts[k] + 1, d.cuts[k + 1]});
  json arrangements = json::array();
  for (const auto& a : d.arrangements) arrangements.push_back(permutation_json(a));
  return {{"generator", degrees_json(d.generator)},
          {"generator_index", d.generator_index + 1},
          {"stripped", d.stripped},
          {"arrangements", arrangements},
          {"chain_rows", d.chain_rows},
          {"window", {d.window_begin() + 1, d.window_end()}},
          {"blocks", blocks}};
}

// ---------------------------------------------------------------------------
// output formats

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  if (v.is_array()) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (i) s += v[i].is_array() ? " " : ",";
      s += v[i].is_array() ? "(" + scalar_text(v[i]) + ")" : scalar_text(v[i]);
    }
    return s;
  }
  return v.dump();
}

bool is_sequence_list(const json& v) {
  if (!v.is_array()) return false;
  for (const auto& e : v)
    if (!e.is_array()) return false;
  return true;
}

void write_text(std::ostream& out, const json& value, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (const auto& [key, v] : value.items()) {
    if (v.is_object()) {
      out << pad << key << ":\n";
      write_text(out, v, indent + 2);
    } else if (v.is_array() && !v.empty() && v.front().is_object()) {
      out << pad << key << ":\n";
      for (const auto& e : v) {
        out << pad << "  -\n";
        write_text(out, e, indent + 4);
      }
    } else if (is_sequence_list(v) && !v.empty()) {
      out << pad << key << ":\n";
      for (const auto& e : v) out << pad << "  " << scalar_text(e) << '\n';
    } else {
      out << pad << key << ": " << scalar_text(v) << '\n';
    }
  }
}

/// Sequence lists become one row per sequence; tables of objects one row
/// per object; anything else key,value rows.
void write_csv(std::ostream& out, const std::string& command, const json& result) {
  auto rows_of = [&](const json& list) {
    for (const auto& seq : list) out << scalar_text(seq) << '\n';
  };
  if (command == "enumerate") return rows_of(result["identities"]);
  if (command == "basis") return rows_of(result["monomials"]);
  if (command == "conjecture") {
    out << "degree,identities,confirmed,unresolved\n";
    for (const auto& d : result["degrees"]) {
      out << d["degree"] << ',' << d["identities"] << ',' << d["confirmed"].dump() << ',' << d["unresolved"].size()
          << '\n';
    }
    return;
  }
  out << "key,value\n";
  for (const auto& [key, v] : result.items()) {
    std::string cell = v.is_object() ? v.dump() : scalar_text(v);
    if (cell.find_first_of(",\"") != std::string::npos) {
      std::string quoted = "\"";
      for (char c : cell) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
      cell = quoted + "\"";
    }
    out << key << ',' << cell << '\n';
  }
}

// ---------------------------------------------------------------------------
// commands

struct Config {
  int n = 0;
  std::string blocks_text;
  std::string format = "json";
  bool profile = false;
  unsigned threads = 1;
};

struct Outcome {
  json input;
  json result;
  int exit_code = 0;
};

gip::AlgebraSpec make_spec(const Config& cfg) {
  std::vector<int> blocks;
  for (long long v : parse_list(cfg.blocks_text, "--blocks")) blocks.push_back(static_cast<int>(v));
  return gip::make_algebra_spec(cfg.n, std::move(blocks));
}

json spec_input(const gip::AlgebraSpec& spec) {
  return {{"n", spec.n()}, {"blocks", std::vector<int>(spec.blocks().begin(), spec.blocks().end())}, {"algebra", spec.name()}};
}

Outcome cmd_check(const Config& cfg, const std::string& monomial) {
  const auto spec = make_spec(cfg);
  const auto m = parse_monomial(monomial, spec.n(), "--monomial");
  const auto report = gip::is_identity(spec, m, cfg.profile);
  Outcome o{spec_input(spec), {}, 0};
  o.input["monomial"] = degrees_json(m);
  o.result["identity"] = report.is_identity;
  o.result["witness_rows"] = report.witness ? json(report.witness->rows) : json(nullptr);
  if (report.profile) o.result["profile"] = profile_json(*report.profile);
  return o;
}

Outcome cmd_enumerate(const Config& cfg, std::size_t max_degree, bool include_zero) {
  const auto spec = make_spec(cfg);
  if (max_degree < 1) throw UsageError("--max-degree must be at least 1");
  const auto ids = gip::enumerate_identities(spec, max_degree, !include_zero, cfg.threads);
  Outcome o{spec_input(spec), {}, 0};
  o.input["max_degree"] = max_degree;
  o.input["nonzero_only"] = !include_zero;
  json list = json::array();
  for (const auto& m : ids) list.push_back(degrees_json(m));
  o.result["count"] = ids.size();
  o.result["identities"] = std::move(list);
  return o;
}

Outcome cmd_basis(const Config& cfg) {
  const auto spec = make_spec(cfg);
  if (spec.block_count() != 2 || spec.blocks()[1] != 1) {
    throw UsageError("basis is available for BT(n-1,1) only; use --blocks " + std::to_string(spec.n() - 1) + ",1");
  }
  const auto basis = gip::minimal_basis_bt_n11(spec.n());
  Outcome o{spec_input(spec), {}, 0};
  json list = json::array();
  for (const auto& m : basis.monomials) list.push_back(degrees_json(m));
  o.result["count"] = basis.monomials.size();
  o.result["monomials"] = std::move(list);
  return o;
}

Outcome cmd_reduce(const Config& cfg, const std::string& monomial) {
  const auto spec = make_spec(cfg);
  const auto m = parse_monomial(monomial, spec.n(), "--monomial");
  const auto dec = gip::fall_decomposition(spec, m);
  const auto c = gip::collapse(spec, m);
  Outcome o{spec_input(spec), {}, 0};
  o.input["monomial"] = degrees_json(m);
  json segments = json::array();
  for (const auto& s : dec.segments) {
    segments.push_back({{"first", s.begin + 1}, {"last", s.end}, {"degree", s.degree},
                        {"fall", s.fall ? json(*s.fall) : json(nullptr)}});
  }
  json blocks = json::array();
  for (const auto& [b, e] : c.blocks) blocks.push_back({b + 1, e});
  static constexpr const char* kMethod[] = {"unchanged", "segment-grouping", "companion"};
  o.result["reduced"] = degrees_json(c.monomial);
  o.result["method"] = kMethod[static_cast<int>(c.method)];
  o.result["blocks"] = std::move(blocks);
  o.result["context"] = c.context_begin < m.size() ? json({c.context_begin + 1, m.size()}) : json(nullptr);
  o.result["segments"] = std::move(segments);
  return o;
}

Outcome cmd_equiv(const Config& cfg, const std::string& monomial, const std::string& sigma, const std::string& tau) {
  const auto spec = make_spec(cfg);
  const auto m = parse_monomial(monomial, spec.n(), "--monomial");
  const gip::LabeledMonomialPair pair{m, parse_permutation(sigma, m.size(), "--sigma"),
                                      parse_permutation(tau, m.size(), "--tau")};
  const auto r = gip::equivalent_mod_In(spec.n(), pair);
  Outcome o{spec_input(spec), {}, 0};
  o.input["monomial"] = degrees_json(m);
  o.input["sigma"] = permutation_json(pair.sigma);
  o.input["tau"] = permutation_json(pair.tau);
  o.result["equivalent"] = r.equivalent;
  o.result["witness_rows"] = r.witness ? json(r.witness->rows) : json(nullptr);
  return o;
}

Outcome cmd_consequence(const Config& cfg, const std::string& monomial, const std::string& generators_path) {
  const auto spec = make_spec(cfg);
  const auto m = parse_monomial(monomial, spec.n(), "--monomial");
  const auto gens = read_generators(generators_path, spec.n());
  const auto v = gip::is_consequence(spec, m, gens);
  Outcome o{spec_input(spec), {}, 0};
  o.input["monomial"] = degrees_json(m);
  o.input["generators"] = gens.size();
  o.result["status"] = v.confirmed() ? "confirmed" : "unresolved";
  o.result["derivation"] = v.derivation ? derivation_json(*v.derivation) : json(nullptr);
  return o;
}

Outcome cmd_conjecture(const Config& cfg) {
  const auto spec = make_spec(cfg);
  const auto r = gip::conjecture_report(spec, cfg.threads);
  Outcome o{spec_input(spec), {}, 0};
  json degrees = json::array();
  for (const auto& d : r.sweep.degrees) {
    json unresolved = json::array();
    for (const auto& m : d.unresolved) unresolved.push_back(degrees_json(m));
    const bool target = d.degree > r.sweep.generator_degree;
    degrees.push_back({{"degree", d.degree},
                       {"identities", d.identities},
                       {"confirmed", target ? json(d.confirmed) : json(nullptr)},
                       {"unresolved", std::move(unresolved)}});
  }
  o.result["max_degree"] = r.max_degree;
  o.result["generator_degree"] = r.sweep.generator_degree;
  o.result["degrees"] = std::move(degrees);
  o.result["unresolved_total"] = r.sweep.unresolved_count();
  o.result["minimal_generating_degree"] =
      r.minimal_generating_degree ? json(*r.minimal_generating_degree) : json(nullptr);
  o.exit_code = r.sweep.unresolved_count() == 0 ? 0 : 3;
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded monomial identities of block-triangular matrix algebras"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Config cfg;
  app.add_option("--n", cfg.n, "Matrix size and grading modulus")->required();
  app.add_option("--blocks", cfg.blocks_text, "Diagonal block sizes, e.g. 4,1")->required();
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_flag("--profile", cfg.profile, "Include the stepwise fall profile (check)");

  std::string monomial, sigma, tau, generators;
  std::size_t max_degree = 0;
  bool include_zero = false;

  auto* check = app.add_subcommand("check", "Decide whether a monomial is an identity");
  check->add_option("--monomial", monomial, "Degrees, e.g. 1,2,3")->required();

  auto* enumerate = app.add_subcommand("enumerate", "List identities up to a length");
  enumerate->add_option("--max-degree", max_degree, "Longest monomial to consider")->required();
  enumerate->add_flag("--include-zero", include_zero, "Also use degree-0 variables");

  app.add_subcommand("basis", "Minimal basis of BT(n-1,1)");

  auto* reduce = app.add_subcommand("reduce", "Collapse an identity to a short one");
  reduce->add_option("--monomial", monomial, "Degrees of an identity")->required();

  auto* equiv = app.add_subcommand("equiv", "Test two arrangements for equivalence modulo I_n");
  equiv->add_option("--monomial", monomial, "Degrees of x_1..x_k")->required();
  equiv->add_option("--sigma", sigma, "First arrangement, 1-based")->required();
  equiv->add_option("--tau", tau, "Second arrangement, 1-based")->required();

  auto* consequence = app.add_subcommand("consequence", "Derive an identity from generators");
  consequence->add_option("--monomial", monomial, "Degrees of the target identity")->required();
  consequence->add_option("--generators", generators, "File with one sequence per line")->required();

  app.add_subcommand("conjecture", "Check that long identities follow from those of length <= n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    cfg.threads = thread_count();
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    if (command == "check") o = cmd_check(cfg, monomial);
    else if (command == "enumerate") o = cmd_enumerate(cfg, max_degree, include_zero);
    else if (command == "basis") o = cmd_basis(cfg);
    else if (command == "reduce") o = cmd_reduce(cfg, monomial);
    else if (command == "equiv") o = cmd_equiv(cfg, monomial, sigma, tau);
    else if (command == "consequence") o = cmd_consequence(cfg, monomial, generators);
    else o = cmd_conjecture(cfg);
    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (cfg.format == "json") {
      json report = {{"command", command}, {"input", o.input}, {"result", o.result},
                     {"elapsed_ms", elapsed}, {"version", kVersion}};
      std::cout << report.dump(2) << '\n';
    } else if (cfg.format == "csv") {
      write_csv(std::cout, command, o.result);
    } else {
      std::cout << command << " on " << o.input["algebra"].get<std::string>() << '\n';
      write_text(std::cout, o.result, 2);
    }
    return o.exit_code;
  } catch (const UsageError& e) {
    std::cerr << "gip " << command << ": " << e.what() << '\n';
  } catch (const gip::Error& e) {
    std::cerr << "gip " << command << ": " << e.what() << '\n';
  }
  return 2;
}
