// Copyright 2026 The sparsezt Authors
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

#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "sparsezt/io.hpp"
#include "sparsezt/oracle.hpp"
#include "sparsezt/solver.hpp"
#include "sparsezt/suites.hpp"
#include "sparsezt/tester.hpp"

namespace sparsezt::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  std::string command;
  std::string poly_path;
  std::string domain_path;
  std::string system_path;
  std::string field;
  std::string set;
  std::string anchor;
  std::string bound;
  std::string out_path;
  unsigned jobs = 1;
  std::uint64_t seed = 42;
  std::size_t per_theorem = 200;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const Field* field_override(const RunConfig& config) {
  return config.field.empty() ? nullptr : &io::parse_field(config.field);
}

json load(const std::string& path, const char* flag) {
  if (path.empty()) throw UsageError(std::string(flag) + " is required");
  return io::read_json_file(path);
}

std::optional<BigInt> parse_bound(const RunConfig& config) {
  if (config.bound.empty()) return std::nullopt;
  BigInt m;
  try {
    m = BigInt(config.bound);
  } catch (const std::exception&) {
    throw io::ParseError("--bound must be a positive integer");
  }
  if (m < 1) throw io::ParseError("--bound must be a positive integer");
  return m;
}

std::vector<FieldElement> set_of(const RunConfig& config, const json& file, const Field& field) {
  if (!config.set.empty()) return io::parse_point(field, config.set);
  if (file.is_object() && file.contains("set")) return io::point_from_json(field, file.at("set"));
  throw UsageError("a set S is required (--set or a \"set\" entry in the polynomial file)");
}

RectangularDomain domain_of(const RunConfig& config, const json& file, const SparsePoly& f) {
  if (!config.domain_path.empty()) return io::domain_from_json(io::read_json_file(config.domain_path), &f.field());
  if (file.contains("domain")) return io::domain_from_json(file.at("domain"), &f.field());
  if (file.contains("set") || !config.set.empty()) {
    return RectangularDomain::power(f.field(), set_of(config, file, f.field()), f.nvars());
  }
  throw UsageError("a domain is required (--domain, a \"domain\" entry, or a set)");
}

Point anchor_of(const RunConfig& config, const json& file, const RectangularDomain& q) {
  if (!config.anchor.empty()) return io::parse_point(q.field(), config.anchor);
  if (file.is_object() && file.contains("anchor")) return io::point_from_json(q.field(), file.at("anchor"));
  Point a;
  for (const auto& s : q.sets()) a.push_back(s.front());
  return a;
}

void check_bound(const std::optional<BigInt>& bound, const SparsePoly& f) {
  if (bound && *bound < BigInt(f.monomial_count())) {
    throw io::ParseError("--bound " + to_string(*bound) + " is below M(f) = " + std::to_string(f.monomial_count()));
  }
}

std::string summary_line(const SearchReport& r) {
  std::ostringstream s;
  const bool system = r.kind == ReportKind::kSystem;
  if (r.verdict == Verdict::kWitnessFound) {
    s << (system ? "solution" : "nonzero") << " at distance " << *r.distance;
  } else {
    s << (system ? "no solution" : "vanishes");
  }
  s << " (radius " << r.radius << ", " << rule_name(r.rule) << ", " << r.evaluations << " evaluations)";
  return s.str();
}

int exit_for(const SearchReport& r) {
  if (r.kind == ReportKind::kSystem) return r.verdict == Verdict::kWitnessFound ? kExitOk : kExitFound;
  return r.verdict == Verdict::kVanishes ? kExitOk : kExitFound;
}

struct Outcome {
  json report;
  int code = kExitOk;
  std::string summary;
};

Outcome cmd_test_zero(const RunConfig& config) {
  const json file = load(config.poly_path, "--poly");
  const SparsePoly f = io::poly_from_json(file, field_override(config));
  const auto s = set_of(config, file, f.field());
  const auto bound = parse_bound(config);
  check_bound(bound, f);
  PolynomialOracle oracle(f, bound.value_or(std::max(BigInt(1), BigInt(f.monomial_count()))));
  const SearchReport r = test_zero_on_power_domain(oracle, s, f.nvars(), SearchOptions{config.jobs});
  json out = io::report_to_json(r);
  out["field"] = f.field().name();
  out["n"] = f.nvars();
  out["set"] = io::element_list(s);
  out["bound"] = to_string(oracle.bound());
  return {out, exit_for(r), summary_line(r)};
}

Outcome cmd_find_nonzero(const RunConfig& config) {
  const json file = load(config.poly_path, "--poly");
  const SparsePoly f = io::poly_from_json(file, field_override(config));
  const RectangularDomain q = domain_of(config, file, f);
  const Point anchor = anchor_of(config, file, q);
  const auto bound = parse_bound(config);
  check_bound(bound, f);
  SearchReport r;
  if (bound) {
    PolynomialOracle oracle(f, *bound);
    r = find_nonzero_near(oracle, anchor, q, SearchOptions{config.jobs});
  } else {
    r = find_nonzero_near(f, anchor, q, SearchOptions{config.jobs});
  }
  json out = io::report_to_json(r);
  out["field"] = f.field().name();
  out["anchor"] = io::element_list(anchor);
  return {out, exit_for(r), summary_line(r)};
}

Outcome cmd_solve(const RunConfig& config) {
  const json file = load(config.system_path, "--system");
  io::SystemInput in = io::system_from_json(file);
  const Field& field = in.system.field();
  if (!config.field.empty() && field_override(config) != &field) throw io::ParseError("field mismatch");
  if (!in.domain) throw UsageError("the system file needs a \"domain\"");
  const RectangularDomain& q = *in.domain;
  SearchReport r;
  Point anchor;
  if (q.contains_zero()) {
    if (!q.is_zero_pair_domain()) {
      throw UsageError("domains containing zero must have the form {a_1,0} x ... x {a_N,0}");
    }
    for (const auto& s : q.sets()) anchor.push_back(s[1]);
    r = solve_near_zero_domain(in.system, anchor, SearchOptions{config.jobs});
  } else {
    anchor = !config.anchor.empty() ? io::parse_point(field, config.anchor)
                                    : (in.anchor ? *in.anchor : anchor_of(config, json::object(), q));
    r = solve_near(in.system, anchor, q, SearchOptions{config.jobs});
  }
  json out = io::report_to_json(r);
  out["field"] = field.name();
  out["anchor"] = io::element_list(anchor);
  return {out, exit_for(r), summary_line(r)};
}

Outcome cmd_reduce(const RunConfig& config) {
  const json file = load(config.poly_path, "--poly");
  const SparsePoly f = io::poly_from_json(file, field_override(config));
  const RectangularDomain q = domain_of(config, file, f);
  const SparsePoly g = reduce_mod_domain(f, q);
  json out = {{"input", io::format_poly(f)},
              {"reduced", io::poly_to_json(g)},
              {"text", io::format_poly(g)},
              {"monomials_before", f.monomial_count()},
              {"monomials_after", g.monomial_count()}};
  return {out, kExitOk, std::to_string(f.monomial_count()) + " -> " + std::to_string(g.monomial_count()) + " monomials"};
}

Outcome cmd_verify_bounds(const RunConfig& config) {
  const suites::SuiteConfig sc{config.seed, config.per_theorem};
  const auto results = suites::run_all_suites(sc);
  const json out = suites::summary_json(sc, results);
  std::ostringstream s;
  for (const auto& r : results) s << r.name << ": " << r.instances - r.failures << "/" << r.instances << " hold\n";
  return {out, out.at("all_pass").get<bool>() ? kExitOk : kExitFound, s.str()};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sparse polynomial zero testing over finite fields"};
  app.require_subcommand(1);
  RunConfig config;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--field", config.field, "field, e.g. GF(4) or GF(3^2)");
    sub->add_option("--out", config.out_path, "write the JSON report here instead of stdout");
    sub->add_option("--jobs", config.jobs, "worker threads for ball evaluation")->check(CLI::Range(1U, 256U));
    sub->add_option("--seed", config.seed, "seed recorded in the report");
  };
  auto* test_zero = app.add_subcommand("test-zero", "decide whether f vanishes on S^N");
  test_zero->add_option("--poly", config.poly_path, "polynomial JSON file");
  test_zero->add_option("--set", config.set, "S as comma-separated element indices");
  test_zero->add_option("--bound", config.bound, "declared monomial bound M");
  common(test_zero);

  auto* find = app.add_subcommand("find-nonzero", "nearest nonzero of f around an anchor");
  find->add_option("--poly", config.poly_path, "polynomial JSON file");
  find->add_option("--domain", config.domain_path, "domain JSON file");
  find->add_option("--set", config.set, "use S^N as the domain");
  find->add_option("--anchor", config.anchor, "anchor as comma-separated element indices");
  find->add_option("--bound", config.bound, "declared monomial bound M (black-box mode)");
  common(find);

  auto* solve = app.add_subcommand("solve", "nearest common zero of a system");
  solve->add_option("--system", config.system_path, "system JSON file");
  solve->add_option("--anchor", config.anchor, "anchor as comma-separated element indices");
  common(solve);

  auto* reduce = app.add_subcommand("reduce", "normal form modulo the vanishing ideal of a domain");
  reduce->add_option("--poly", config.poly_path, "polynomial JSON file");
  reduce->add_option("--domain", config.domain_path, "domain JSON file");
  reduce->add_option("--set", config.set, "use S^N as the domain");
  common(reduce);

  auto* verify = app.add_subcommand("verify-bounds", "run the seeded lower-bound suites");
  verify->add_option("--per-theorem", config.per_theorem, "instances per suite")->check(CLI::Range(1, 100000));
  common(verify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  Outcome outcome;
  try {
    if (app.got_subcommand(test_zero)) outcome = cmd_test_zero(config);
    if (app.got_subcommand(find)) outcome = cmd_find_nonzero(config);
    if (app.got_subcommand(solve)) outcome = cmd_solve(config);
    if (app.got_subcommand(reduce)) outcome = cmd_reduce(config);
    if (app.got_subcommand(verify)) outcome = cmd_verify_bounds(config);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  outcome.report["seed"] = config.seed;
  const std::string text = outcome.report.dump(2) + "\n";
  if (config.out_path.empty()) {
    out << text;
  } else {
    std::ofstream file(config.out_path, std::ios::binary);
    if (!file || !(file << text)) {
      err << "error: cannot write " << config.out_path << "\n";
      return kExitError;
    }
  }
  err << outcome.summary;
  if (!outcome.summary.empty() && outcome.summary.back() != '\n') err << "\n";
  return outcome.code;
}

}  // namespace sparsezt::cli
