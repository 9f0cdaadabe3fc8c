// Copyright 2026 The streamshare Authors.
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

#include "streamshare/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include <CLI11.hpp>
#endif
#include <nlohmann/json.hpp>

#include "streamshare/axioms.hpp"
#include "streamshare/csv.hpp"
#include "streamshare/error.hpp"
#include "streamshare/games.hpp"
#include "streamshare/generator.hpp"
#include "streamshare/induced_games.hpp"
#include "streamshare/rational.hpp"
#include "streamshare/report.hpp"

namespace streamshare::cli {
namespace {

using nlohmann::ordered_json;

// Violations beyond this many are counted but not listed.
constexpr std::size_t kListedViolations = 10;

int exit_code_for(Errc code) {
  switch (code) {
    case Errc::kZeroIndexSum:
    case Errc::kAllArtistsBelowThreshold:
      return kExitDomain;
    default:
      return kExitInput;
  }
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }
}

void write_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << line << "\n";
  }
}

void write_csv_rows(std::ostream& out, const std::vector<std::vector<std::string>>& rows) {
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << row[c];
    out << "\n";
  }
}

ordered_json effective_params(const RunConfig& config) {
  const ParamSchema schema = param_schema(config.index);
  ordered_json out = ordered_json::object();
  if (schema.tau) out["tau"] = config.params.tau.value_or(kDefaultThreshold);
  if (schema.cap) out["cap"] = config.params.cap.value_or(kDefaultCap);
  if (schema.beta) out["beta"] = to_fraction_string(config.params.beta.value_or(Rational(1, 2)));
  return out;
}

std::string verdict_word(bool satisfied) { return satisfied ? "satisfied" : "violated"; }

struct AuditPair {
  std::string label;
  DecompositionFunction d;
  InducedGameFamily game;
};

AuditPair parse_pair(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) {
    throw Error(Errc::kInvalidParameter, "pair '" + spec + "' is not decomposition:game");
  }
  const std::string d_name = spec.substr(0, colon);
  const std::string game_name = spec.substr(colon + 1);
  AuditPair pair{spec, {}, {}};
  if (d_name == "pro-rata") {
    pair.d = decompositions::pro_rata();
  } else if (d_name == "user-centric") {
    pair.d = decompositions::user_centric();
  } else if (d_name == "shapley") {
    pair.d = decompositions::shapley();
  } else {
    throw Error(Errc::kInvalidParameter,
                "unknown decomposition '" + d_name + "' (pro-rata, user-centric, shapley)");
  }
  if (game_name == "pro-rata-game") {
    pair.game = induced_games::pro_rata();
  } else if (game_name == "shapley-game") {
    pair.game = induced_games::shapley();
  } else {
    throw Error(Errc::kInvalidParameter,
                "unknown game family '" + game_name + "' (pro-rata-game, shapley-game)");
  }
  return pair;
}

}  // namespace

std::uint64_t default_seed() {
  const char* raw = std::getenv(kSeedEnvVar);
  if (raw == nullptr || *raw == '\0') return kDefaultSeed;
  const std::string text(raw);
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.front() == '-' || value == 0) {
    throw Error(Errc::kInvalidParameter,
                std::string(kSeedEnvVar) + " must be a positive integer, got '" + text + "'");
  }
  return value;
}

void validate(const RunConfig& config) {
  if (config.seed == 0) throw Error(Errc::kInvalidParameter, "seed must be positive");
  if (config.budget == 0) throw Error(Errc::kInvalidParameter, "budget must be positive");
  if (config.precision < 0 || config.precision > 30) {
    throw Error(Errc::kInvalidParameter, "precision must lie in [0, 30]");
  }
  if (config.command == Command::kCompute) {
    // Rejects unknown names and parameters outside the schema.
    (void)make_index(config.index, config.params);
  }
}

int cmd_compute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate(config);
    if (config.input.empty()) throw Error(Errc::kInvalidParameter, "compute needs --input");
    const StreamingProblem p = read_csv_file(config.input);
    const Index idx = make_index(config.index, config.params);
    const IndexVector values = idx(p);
    const RewardVector rewards = reward(values, p);

    switch (config.format) {
      case Format::kJson: {
        ordered_json report;
        report["index"] = idx.name();
        report["parameters"] = effective_params(config);
        report["users"] = p.user_count();
        report["precision"] = config.precision;
        ordered_json rows = ordered_json::array();
        for (std::size_t a = 0; a < p.artist_count(); ++a) {
          ordered_json row;
          row["artist"] = p.artists()[a];
          row["index"] = to_fraction_string(values[a]);
          row["reward"] = to_fraction_string(rewards[a]);
          row["reward_decimal"] = to_decimal_string(rewards[a], config.precision);
          rows.push_back(std::move(row));
        }
        report["artists"] = std::move(rows);
        out << report.dump(2) << "\n";
        break;
      }
      case Format::kCsv:
      case Format::kTable: {
        std::vector<std::vector<std::string>> rows = {{"artist_id", "index", "reward", "decimal"}};
        for (std::size_t a = 0; a < p.artist_count(); ++a) {
          rows.push_back({p.artists()[a], to_fraction_string(values[a]),
                          to_fraction_string(rewards[a]),
                          to_decimal_string(rewards[a], config.precision)});
        }
        if (config.format == Format::kCsv) {
          write_csv_rows(out, rows);
        } else {
          out << "index " << idx.name() << " on " << p.artist_count() << " artists, "
              << p.user_count() << " users\n";
          write_table(out, rows);
        }
        break;
      }
    }
    return static_cast<int>(kExitOk);
  });
}

int cmd_axioms(const RunConfig& config, std::span<const Index> indices, std::ostream& out,
               std::ostream& err) {
  return guarded(err, [&] {
    validate(config);
    if (indices.empty()) throw Error(Errc::kNoWork, "no indices to audit");
    SearchOptions options;
    options.threads = config.threads;
    const AxiomMatrix matrix = axiom_matrix(indices, config.budget, config.seed, options);

    std::vector<std::string> mismatches;
    // expected[r][c]: nullopt when nothing is shipped for the cell.
    std::vector<std::vector<std::optional<bool>>> expected(indices.size());
    for (std::size_t r = 0; r < indices.size(); ++r) {
      for (std::size_t c = 0; c < kMatrixAxioms.size(); ++c) {
        const AxiomVerdict& cell = matrix.cells[r][c];
        expected[r].push_back(expected_verdict(indices[r].name(), kMatrixAxioms[c]));
        const bool wrong_verdict = expected[r][c] && *expected[r][c] != cell.satisfied();
        const bool bad_witness = !cell.satisfied() && !reverify(indices[r], cell);
        if (wrong_verdict || bad_witness) {
          mismatches.push_back(indices[r].name() + "/" + std::string(axiom_name(kMatrixAxioms[c])));
        }
      }
    }

    switch (config.format) {
      case Format::kJson: {
        ordered_json report;
        report["seed"] = config.seed;
        report["budget"] = config.budget;
        ordered_json body = to_json(matrix);
        for (std::size_t r = 0; r < indices.size(); ++r) {
          for (std::size_t c = 0; c < kMatrixAxioms.size(); ++c) {
            ordered_json& cell = body["rows"][r]["cells"][c];
            const auto& want = expected[r][c];
            cell["expected"] = want ? ordered_json(verdict_word(*want)) : ordered_json(nullptr);
            const std::string id =
                indices[r].name() + "/" + std::string(axiom_name(kMatrixAxioms[c]));
            cell["matches"] =
                std::find(mismatches.begin(), mismatches.end(), id) == mismatches.end();
          }
        }
        report["axioms"] = std::move(body["axioms"]);
        report["rows"] = std::move(body["rows"]);
        report["matches_expected"] = mismatches.empty();
        report["mismatches"] = mismatches;
        out << report.dump(2) << "\n";
        break;
      }
      case Format::kCsv: {
        std::vector<std::vector<std::string>> rows = {
            {"index", "axiom", "verdict", "expected", "instances_checked", "lhs", "rhs"}};
        for (std::size_t r = 0; r < indices.size(); ++r) {
          for (std::size_t c = 0; c < kMatrixAxioms.size(); ++c) {
            const AxiomVerdict& cell = matrix.cells[r][c];
            const auto& want = expected[r][c];
            rows.push_back({indices[r].name(), std::string(axiom_name(kMatrixAxioms[c])),
                            verdict_word(cell.satisfied()), want ? verdict_word(*want) : "",
                            std::to_string(cell.instances_checked),
                            cell.witness ? to_fraction_string(cell.witness->lhs) : "",
                            cell.witness ? to_fraction_string(cell.witness->rhs) : ""});
          }
        }
        write_csv_rows(out, rows);
        break;
      }
      case Format::kTable: {
        std::vector<std::vector<std::string>> rows(1, {"index"});
        for (Axiom a : kMatrixAxioms) rows[0].emplace_back(axiom_name(a));
        rows[0].emplace_back("reasonable-lower-bound");
        for (std::size_t r = 0; r < indices.size(); ++r) {
          std::vector<std::string> row = {indices[r].name()};
          for (std::size_t c = 0; c < kMatrixAxioms.size(); ++c) {
            const bool sat = matrix.cells[r][c].satisfied();
            const auto& want = expected[r][c];
            std::string text = sat ? "yes" : "no";
            if (want && *want != sat) text += " (expected " + std::string(*want ? "yes" : "no") + ")";
            row.push_back(std::move(text));
          }
          row.emplace_back("n/a");
          rows.push_back(std::move(row));
        }
        write_table(out, rows);
        out << "seed " << config.seed << ", budget " << config.budget << ": ";
        if (mismatches.empty()) {
          out << "matches the expected pattern\n";
        } else {
          out << mismatches.size() << " mismatch(es):";
          for (const auto& m : mismatches) out << " " << m;
          out << "\n";
        }
        break;
      }
    }
    if (!mismatches.empty()) {
      err << "axiom matrix differs from the expected pattern in " << mismatches.size()
          << " cell(s)\n";
      return static_cast<int>(kExitMismatch);
    }
    return static_cast<int>(kExitOk);
  });
}

int cmd_axioms(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    std::vector<Index> indices;
    if (config.indices.empty()) {
      indices = matrix_indices();
    } else {
      for (const auto& name : config.indices) indices.push_back(make_index(name));
    }
    return cmd_axioms(config, indices, out, err);
  });
}

int cmd_shapley_audit(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    validate(config);
    if (config.profiles == 0) throw Error(Errc::kNoWork, "--profiles must be at least 1");
    if (config.games == 0) throw Error(Errc::kNoWork, "--games must be at least 1");

    std::vector<AuditPair> pairs;
    if (config.pairs.empty()) {
      pairs.push_back(parse_pair("pro-rata:pro-rata-game"));
      pairs.push_back(parse_pair("shapley:shapley-game"));
    } else {
      for (const auto& spec : config.pairs) pairs.push_back(parse_pair(spec));
    }

    // x = (1, 2) leads the sample: the smallest profile separating the
    // user-centric split from the pro-rata game.
    std::vector<OwnedProfile> sample;
    sample.push_back(OwnedProfile{"x", {"1", "2"}, {Rational(1), Rational(2)}});
    for (auto& p : generate_profiles(config.profiles - 1, config.seed)) {
      sample.push_back(std::move(p));
    }

    bool ok = true;
    ordered_json report;
    report["seed"] = config.seed;
    report["profiles"] = sample.size();
    ordered_json pair_reports = ordered_json::array();
    std::vector<std::vector<std::string>> rows = {
        {"check", "samples", "coalitions", "violations"}};
    for (const auto& pair : pairs) {
      const ShapleyInducedReport r = verify_shapley_induced(pair.d, pair.game, sample);
      ok = ok && r.ok();
      ordered_json entry;
      entry["pair"] = pair.label;
      entry["profiles_checked"] = r.profiles_checked;
      entry["coalitions_checked"] = r.coalitions_checked;
      entry["violation_count"] = r.violations.size();
      ordered_json listed = ordered_json::array();
      for (std::size_t k = 0; k < std::min(r.violations.size(), kListedViolations); ++k) {
        listed.push_back(to_json(r.violations[k], sample[r.violations[k].profile]));
      }
      entry["violations"] = std::move(listed);
      pair_reports.push_back(std::move(entry));
      rows.push_back({pair.label, std::to_string(r.profiles_checked),
                      std::to_string(r.coalitions_checked),
                      std::to_string(r.violations.size())});
    }
    report["pairs"] = std::move(pair_reports);

    const std::vector<TUGame> games = generate_games(config.games, config.seed);
    std::size_t failures = 0;
    ordered_json listed = ordered_json::array();
    for (std::size_t g = 0; g < games.size(); ++g) {
      const BalancedContributionsResult r = balanced_contributions_check(games[g]);
      if (r.holds) continue;
      ++failures;
      if (listed.size() < kListedViolations) {
        ordered_json v = to_json(*r.witness, games[g]);
        v["game"] = g;
        listed.push_back(std::move(v));
      }
    }
    ok = ok && failures == 0;
    ordered_json balanced;
    balanced["games_checked"] = games.size();
    balanced["violation_count"] = failures;
    balanced["violations"] = std::move(listed);
    report["balanced_contributions"] = std::move(balanced);
    report["ok"] = ok;
    rows.push_back({"balanced-contributions", std::to_string(games.size()), "",
                    std::to_string(failures)});

    switch (config.format) {
      case Format::kJson:
        out << report.dump(2) << "\n";
        break;
      case Format::kCsv:
        write_csv_rows(out, rows);
        break;
      case Format::kTable:
        write_table(out, rows);
        out << (ok ? "all checks pass\n" : "violations found\n");
        break;
    }
    if (!ok) {
      err << "shapley audit found violations\n";
      return static_cast<int>(kExitMismatch);
    }
    return static_cast<int>(kExitOk);
  });
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  switch (config.command) {
    case Command::kCompute:
      return cmd_compute(config, out, err);
    case Command::kAxioms:
      return cmd_axioms(config, out, err);
    case Command::kShapleyAudit:
      return cmd_shapley_audit(config, out, err);
  }
  return kExitInput;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config.seed = default_seed();
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInput;
  }

  CLI::App app{"Revenue-sharing indices for streaming platforms, with axiom audits.",
               "streamshare"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats = {
      {"json", Format::kJson}, {"csv", Format::kCsv}, {"table", Format::kTable}};
  std::optional<StreamCount> tau;
  std::optional<StreamCount> cap;
  std::string beta;
  std::string format = "json";

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "output format (default json)")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_option("--seed", config.seed, "positive seed (default $STREAMSHARE_SEED or 42)");
    sub->add_option("--precision", config.precision, "decimal places for display");
  };

  CLI::App* compute = app.add_subcommand("compute", "Index values and rewards for a CSV matrix");
  compute->add_option("--input", config.input, "CSV stream matrix")->required();
  compute->add_option("--index", config.index, "index name")
      ->check(CLI::IsMember(registry_names()));
  compute->add_option("--tau", tau, "stream threshold");
  compute->add_option("--cap", cap, "per-user stream cap");
  compute->add_option("--beta", beta, "blend weight as P/Q");
  add_common(compute);

  CLI::App* axioms = app.add_subcommand("axioms", "Axiom verdict matrix by counterexample search");
  axioms->add_option("--indices", config.indices, "comma-separated registry names")
      ->delimiter(',');
  axioms->add_option("--budget", config.budget, "generated problems per cell");
  axioms->add_option("--threads", config.threads, "worker threads (0 = all cores)");
  add_common(axioms);

  CLI::App* audit =
      app.add_subcommand("shapley-audit", "Shapley-induced and balanced-contributions audits");
  audit->add_option("--profiles", config.profiles, "profiles to sample");
  audit->add_option("--games", config.games, "random games for balanced contributions");
  audit->add_option("--pair", config.pairs, "decomposition:game, repeatable");
  add_common(audit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? static_cast<int>(kExitOk)
                                      : static_cast<int>(kExitInput);
  }

  if (*compute) {
    config.command = Command::kCompute;
  } else if (*axioms) {
    config.command = Command::kAxioms;
  } else {
    config.command = Command::kShapleyAudit;
  }
  config.format = formats.at(format);
  config.params.tau = tau;
  config.params.cap = cap;
  if (!beta.empty()) {
    try {
      config.params.beta = parse_rational(beta);
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kExitInput;
    }
  }
  return run(config, out, err);
}

}  // namespace streamshare::cli
