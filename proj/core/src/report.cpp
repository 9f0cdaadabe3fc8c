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

#include "streamshare/report.hpp"

#include "streamshare/csv.hpp"

namespace streamshare {

using nlohmann::ordered_json;

ordered_json to_json(const Instantiation& inst) {
  ordered_json out;
  out["axiom"] = axiom_name(inst.axiom);
  if (!inst.first_part.empty()) out["first_part"] = inst.first_part;
  if (!inst.artist.empty()) out["i"] = inst.artist;
  if (!inst.other_artist.empty()) out["i_prime"] = inst.other_artist;
  if (!inst.user.empty()) out["j"] = inst.user;
  if (!inst.other_user.empty()) out["j_prime"] = inst.other_user;
  if (inst.axiom == Axiom::kPairwiseHomogeneity) out["lambda"] = to_fraction_string(inst.lambda);
  ordered_json problems = ordered_json::object();
  for (const auto& [label, problem] : derived_problems(inst)) problems[label] = to_csv(problem);
  out["problems"] = std::move(problems);
  return out;
}

ordered_json to_json(const AxiomVerdict& verdict) {
  ordered_json out;
  out["index"] = verdict.index_name;
  out["axiom"] = axiom_name(verdict.axiom);
  out["verdict"] = verdict_name(verdict.verdict);
  out["instances_checked"] = verdict.instances_checked;
  out["instances_skipped"] = verdict.instances_skipped;
  if (verdict.witness) {
    const Witness& w = *verdict.witness;
    ordered_json witness;
    witness["instance"] = to_json(w.instance);
    witness["compared"] = w.compared;
    witness["relation"] = w.relation == Relation::kEqual ? "==" : ">";
    witness["lhs"] = to_fraction_string(w.lhs);
    witness["rhs"] = to_fraction_string(w.rhs);
    if (!w.evaluated_on.empty()) witness["evaluated_on"] = w.evaluated_on;
    out["witness"] = std::move(witness);
  } else {
    out["note"] = "bounded evidence: no counterexample among the sampled instances";
  }
  return out;
}

ordered_json to_json(const AxiomMatrix& matrix) {
  ordered_json out;
  ordered_json axioms = ordered_json::array();
  for (Axiom a : kMatrixAxioms) axioms.push_back(axiom_name(a));
  axioms.push_back("reasonable-lower-bound");
  out["axioms"] = std::move(axioms);
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < matrix.indices.size(); ++r) {
    ordered_json row;
    row["index"] = matrix.indices[r];
    ordered_json cells = ordered_json::array();
    for (const auto& cell : matrix.cells[r]) cells.push_back(to_json(cell));
    ordered_json lower_bound;
    lower_bound["axiom"] = "reasonable-lower-bound";
    lower_bound["verdict"] = "not-implemented";
    cells.push_back(std::move(lower_bound));
    row["cells"] = std::move(cells);
    rows.push_back(std::move(row));
  }
  out["rows"] = std::move(rows);
  return out;
}

ordered_json to_json(const BalancedContributionsViolation& violation, const TUGame& game) {
  ordered_json out;
  out["i"] = game.players()[violation.i];
  out["j"] = game.players()[violation.j];
  out["phi_i"] = to_fraction_string(violation.value_i);
  out["phi_i_without_j"] = to_fraction_string(violation.value_i_without_j);
  out["phi_j"] = to_fraction_string(violation.value_j);
  out["phi_j_without_i"] = to_fraction_string(violation.value_j_without_i);
  return out;
}

ordered_json to_json(const ShapleyInducedViolation& violation, const OwnedProfile& profile) {
  ordered_json out;
  std::vector<std::string> streams;
  for (const auto& x : profile.streams) streams.push_back(to_fraction_string(x));
  out["user"] = profile.user;
  out["profile"] = streams;
  if (violation.kind == ShapleyInducedViolation::Kind::kRestriction) {
    out["kind"] = "restriction";
    std::vector<std::string> members;
    for (std::size_t i = 0; i < profile.artists.size(); ++i) {
      if (violation.coalition & (Coalition{1} << i)) members.push_back(profile.artists[i]);
    }
    out["coalition"] = members;
    out["restricted_value"] = to_fraction_string(violation.expected);
    out["game_value"] = to_fraction_string(violation.actual);
  } else {
    out["kind"] = "value";
    out["artist"] = profile.artists[violation.artist];
    out["d"] = to_fraction_string(violation.expected);
    out["shapley"] = to_fraction_string(violation.actual);
  }
  return out;
}

}  // namespace streamshare
