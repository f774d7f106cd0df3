/*
 * Copyright 2026 The Growth Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "growth/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <set>
#include <vector>

#include "growth/arith.hpp"
#include "growth/checks.hpp"
#include "growth/chevalley.hpp"
#include "growth/comgraph.hpp"
#include "growth/errors.hpp"
#include "growth/parahoric.hpp"
#include "growth/rootsys.hpp"

namespace growth::cli {
namespace {

using nlohmann::json;

const std::map<Subcommand, std::set<std::string>>& allowed_keys() {
  static const std::map<Subcommand, std::set<std::string>> keys{
      {Subcommand::Rank1, {"n"}},
      {Subcommand::Ball, {"family", "dim", "n"}},
      {Subcommand::RootSys, {"type"}},
      {Subcommand::Order, {"type", "p", "k", "brute-force"}},
      {Subcommand::Parahoric, {"type", "k", "p", "m"}},
      {Subcommand::Check, {"suite", "samples"}},
  };
  return keys;
}

class Params {
 public:
  explicit Params(const std::map<std::string, std::string>& values) : values_(values) {}

  bool has(const std::string& key) const { return values_.contains(key); }

  std::string text(const std::string& key) const {
    const auto it = values_.find(key);
    if (it == values_.end()) throw DomainError("missing required parameter --" + key);
    return it->second;
  }

  std::uint64_t u64(const std::string& key) const {
    const std::string raw = text(key);
    if (raw.empty() || !std::all_of(raw.begin(), raw.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
      throw DomainError("parameter --" + key + " must be a nonnegative integer, got '" + raw + "'");
    }
    try {
      return std::stoull(raw);
    } catch (const std::out_of_range&) {
      throw DomainError("parameter --" + key + " is out of range: " + raw);
    }
  }

  std::uint64_t u64_or(const std::string& key, std::uint64_t fallback) const { return has(key) ? u64(key) : fallback; }

 private:
  const std::map<std::string, std::string>& values_;
};

void emit_json(std::ostream& out, const json& value) { out << value.dump(2) << '\n'; }

json subgroup_json(const RationalCyclic& g) { return json{{"a", g.a()}, {"b", g.b()}}; }

json subgroup_json(const RationalLattice& l) { return json{{"denom", l.denom()}, {"hnf", l.basis().to_rows()}}; }

int run_rank1(const Params& params, OutputFormat format, std::ostream& out) {
  const std::uint64_t n = params.u64("n");
  if (n < 1) throw DomainError("--n must be >= 1");
  const GrowthSeries series = growth_series_rank1(n);
  switch (format) {
    case OutputFormat::Json:
      emit_json(out, json{{"n", n}, {"c", series.c}, {"C", series.C}});
      break;
    case OutputFormat::Csv:
      out << "k,c_k,C_k\n";
      for (std::uint64_t k = 1; k <= n; ++k) out << k << ',' << series.c[k - 1] << ',' << series.C[k - 1] << '\n';
      break;
    case OutputFormat::Text:
      out << "k\tc_k\tC_k\n";
      for (std::uint64_t k = 1; k <= n; ++k) out << k << '\t' << series.c[k - 1] << '\t' << series.C[k - 1] << '\n';
      break;
  }
  return kExitOk;
}

template <class G>
void emit_ball(const std::vector<G>& ball, OutputFormat format, std::ostream& out) {
  if (format == OutputFormat::Json) {
    json arr = json::array();
    for (const auto& g : ball) arr.push_back(subgroup_json(g));
    emit_json(out, arr);
    return;
  }
  out << "# " << ball.size() << " subgroups\n";
  for (const auto& g : ball) out << g.to_string() << '\n';
}

int run_ball(const Params& params, OutputFormat format, std::ostream& out) {
  const std::string family = params.has("family") ? params.text("family") : "lattice";
  const std::uint64_t n = params.u64("n");
  if (family == "cyclic") {
    if (params.has("dim") && params.u64("dim") != 1) throw DomainError("--family cyclic requires --dim 1");
    emit_ball(enumerate_ball(RationalCyclic(1, 1), n), format, out);
  } else if (family == "lattice") {
    const std::uint64_t dim = params.u64_or("dim", 1);
    if (dim < 1) throw DomainError("--dim must be >= 1");
    BallGuard guard;
    if (dim > guard.max_dim) throw ResourceError("--dim " + std::to_string(dim) + " exceeds guard " + std::to_string(guard.max_dim));
    emit_ball(enumerate_ball(RationalLattice::standard(dim), n, guard), format, out);
  } else {
    throw DomainError("--family must be cyclic or lattice, got '" + family + "'");
  }
  return kExitOk;
}

int run_rootsys(const Params& params, OutputFormat format, std::ostream& out) {
  const RootSystem rs = build_root_system(params.text("type"));
  if (format == OutputFormat::Json) {
    emit_json(out, json{{"label", rs.label},
                        {"rank", rs.rank},
                        {"N", rs.num_positive_roots()},
                        {"d", dimension(rs)},
                        {"degrees", rs.degrees},
                        {"positive_roots", rs.positive_roots}});
    return kExitOk;
  }
  out << "label " << rs.label << "\nrank " << rs.rank << "\nN " << rs.num_positive_roots() << "\nd " << dimension(rs)
      << "\ndegrees";
  for (int d : rs.degrees) out << ' ' << d;
  out << '\n';
  for (const auto& root : rs.positive_roots) {
    out << "root";
    for (int c : root) out << ' ' << c;
    out << '\n';
  }
  return kExitOk;
}

int run_order(const Params& params, OutputFormat format, std::ostream& out, std::ostream& err) {
  const RootSystem rs = build_root_system(params.text("type"));
  const std::uint64_t p = params.u64("p");
  const std::uint64_t k = params.u64_or("k", 1);
  if (k < 1 || k > 1'000'000) throw DomainError("--k must be in [1, 10^6]");
  const BigInt order = order_zpk(rs, p, static_cast<std::uint32_t>(k));
  json doc{{"label", rs.label}, {"p", p}, {"k", k}, {"order", order.str()}};
  int status = kExitOk;
  if (params.has("brute-force")) {
    MatrixFamily family = MatrixFamily::SpecialLinear;
    int n = 0;
    if (rs.label == "A1" || rs.label == "A2") {
      n = rs.rank + 1;
    } else if (rs.label == "C2" || rs.label == "B2") {
      family = MatrixFamily::Symplectic;
      n = 4;
    } else {
      throw DomainError("--brute-force supports A1, A2 and C2/B2 only");
    }
    const BigInt modulus = ipow(BigInt(p), k);
    if (modulus > 1'000'000) throw ResourceError("--brute-force modulus too large");
    const std::uint64_t counted = brute_force_order(family, n, static_cast<std::uint64_t>(modulus));
    doc["brute_force"] = std::to_string(counted);
    if (BigInt(counted) != order) {
      err << "brute-force count " << counted << " disagrees with formula " << order << '\n';
      status = kExitBoundFailed;
    }
  }
  if (format == OutputFormat::Json) {
    emit_json(out, doc);
  } else {
    out << order << '\n';
    if (doc.contains("brute_force")) out << "brute_force " << doc["brute_force"].get<std::string>() << '\n';
  }
  return status;
}

int run_parahoric(const Params& params, OutputFormat format, std::ostream& out) {
  const RootSystem rs = build_root_system(params.text("type"));
  const std::uint64_t k = params.u64("k");
  std::vector<BoundReport> reports;
  const CocharacterCount count = count_admissible_cocharacters(rs, k + 1);
  reports.push_back(lambda_bound(rs, k));
  json doc{{"label", rs.label},
           {"k", k},
           {"exact", count.exact ? json(count.exact->str()) : json(nullptr)},
           {"box_bound", count.box_bound.str()},
           {"lambda_bound", ipow(BigInt(2 * k + 3), dimension(rs)).str()},
           {"per_prime", nullptr},
           {"m_bound", nullptr}};
  if (params.has("p")) {
    const std::uint64_t p = params.u64("p");
    reports.push_back(per_prime_bound(rs, p, k));
    doc["p"] = p;
    doc["per_prime"] = to_decimal(reports.back().lhs);
    if (k >= 1) reports.push_back(check_two_k_plus_three(p, k));
  }
  if (params.has("m")) {
    const std::uint64_t m = params.u64("m");
    doc["m"] = m;
    doc["m_bound"] = maximal_lattice_bound(rs, m).str();
  }
  const bool all_hold = std::all_of(reports.begin(), reports.end(), [](const BoundReport& r) { return r.holds; });
  if (format == OutputFormat::Json) {
    doc["holds"] = all_hold;
    emit_json(out, doc);
  } else {
    for (const char* key : {"exact", "box_bound", "lambda_bound", "per_prime", "m_bound"}) {
      out << key << ' ' << (doc[key].is_null() ? std::string("-") : doc[key].get<std::string>()) << '\n';
    }
    for (const auto& r : reports) out << describe(r) << '\n';
  }
  return all_hold ? kExitOk : kExitBoundFailed;
}

int run_check(const Params& params, OutputFormat format, std::uint64_t seed, std::ostream& out) {
  const std::string suite = params.text("suite");
  SuiteResult result;
  if (suite == "metric") {
    result = check_metric_suite(params.u64_or("samples", 1000), seed);
  } else if (suite == "transfer") {
    result = check_transfer_suite(params.u64_or("samples", 50), seed);
  } else {
    throw DomainError("unknown check suite '" + suite + "' (expected metric or transfer)");
  }
  if (format == OutputFormat::Json) {
    json arr = json::array();
    for (const auto& t : result.properties) {
      arr.push_back({{"name", t.name}, {"checked", t.checked}, {"failed", t.failed}, {"first_failure", t.first_failure}});
    }
    emit_json(out, json{{"suite", suite}, {"seed", seed}, {"passed", result.passed()}, {"properties", arr}});
  } else {
    for (const auto& t : result.properties) {
      out << (t.failed == 0 ? "PASS " : "FAIL ") << t.name << ' ' << t.checked - t.failed << '/' << t.checked;
      if (t.failed != 0) out << " first failure: " << t.first_failure;
      out << '\n';
    }
  }
  return result.passed() ? kExitOk : kExitBoundFailed;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const auto& keys = allowed_keys().at(config.subcommand);
    for (const auto& [key, value] : config.parameters) {
      if (!keys.contains(key)) throw DomainError("unknown parameter --" + key);
    }
    const Params params(config.parameters);
    switch (config.subcommand) {
      case Subcommand::Rank1:
        return run_rank1(params, config.format, out);
      case Subcommand::Ball:
        return run_ball(params, config.format, out);
      case Subcommand::RootSys:
        return run_rootsys(params, config.format, out);
      case Subcommand::Order:
        return run_order(params, config.format, out, err);
      case Subcommand::Parahoric:
        return run_parahoric(params, config.format, out);
      case Subcommand::Check:
        return run_check(params, config.format, config.seed, out);
    }
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResourceError;
  }
  return kExitDomainError;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Commensurability growth: series, subgroup balls, root systems, group orders and bounds", "growth"};
  app.set_version_flag("--version", std::string("growth ") + kVersion);
  app.require_subcommand(1);

  RunConfig config;
  std::map<std::string, std::string> values;
  bool json_flag = false;
  bool csv_flag = false;

  auto value_option = [&](CLI::App* sub, const std::string& name, const std::string& help) {
    return sub->add_option_function<std::string>(
        "--" + name, [&values, name](const std::string& v) { values[name] = v; }, help);
  };
  auto json_option = [&](CLI::App* sub) { sub->add_flag("--json", json_flag, "emit JSON"); };

  CLI::App* rank1 = app.add_subcommand("rank1", "rank-1 growth series c_k, C_k");
  value_option(rank1, "n", "series length")->required();
  json_option(rank1);
  rank1->add_flag("--csv", csv_flag, "emit CSV");

  CLI::App* ball = app.add_subcommand("ball", "enumerate {D : c(G, D) <= n}");
  value_option(ball, "family", "cyclic or lattice");
  value_option(ball, "dim", "lattice dimension");
  value_option(ball, "n", "radius")->required();
  json_option(ball);

  CLI::App* rootsys = app.add_subcommand("rootsys", "root system data");
  value_option(rootsys, "type", "type label, e.g. G2")->required();
  json_option(rootsys);

  CLI::App* order = app.add_subcommand("order", "order of G(Z/p^k)");
  value_option(order, "type", "type label")->required();
  value_option(order, "p", "prime")->required();
  value_option(order, "k", "exponent (default 1)");
  order->add_flag_function("--brute-force", [&values](std::int64_t) { values["brute-force"] = "true"; },
                           "cross-check by exhaustive matrix enumeration");
  json_option(order);

  CLI::App* parahoric = app.add_subcommand("parahoric", "cocharacter counts and maximal-lattice bounds");
  value_option(parahoric, "type", "type label")->required();
  value_option(parahoric, "k", "congruence level exponent")->required();
  value_option(parahoric, "p", "prime for the per-prime bound");
  value_option(parahoric, "m", "level for the global bound");
  json_option(parahoric);

  CLI::App* check = app.add_subcommand("check", "seeded property suites");
  check->add_option_function<std::string>(
      "suite", [&values](const std::string& v) { values["suite"] = v; }, "metric or transfer")->required();
  value_option(check, "samples", "number of random samples");
  check->add_option("--seed", config.seed, "RNG seed (default 0)");
  json_option(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitDomainError;
  }

  const std::map<CLI::App*, Subcommand> by_app{{rank1, Subcommand::Rank1},     {ball, Subcommand::Ball},
                                               {rootsys, Subcommand::RootSys}, {order, Subcommand::Order},
                                               {parahoric, Subcommand::Parahoric}, {check, Subcommand::Check}};
  config.subcommand = by_app.at(app.get_subcommands().front());
  config.parameters = std::move(values);
  if (json_flag && csv_flag) {
    err << "error: --json and --csv are mutually exclusive\n";
    return kExitDomainError;
  }
  config.format = json_flag ? OutputFormat::Json : csv_flag ? OutputFormat::Csv : OutputFormat::Text;
  return run(config, out, err);
}

}  // namespace growth::cli
