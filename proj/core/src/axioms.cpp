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

#include "streamshare/axioms.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace streamshare {
namespace {

constexpr std::pair<Axiom, std::string_view> kAxiomNames[] = {
    {Axiom::kAdditivity, "additivity"},
    {Axiom::kNullArtists, "null-artists"},
    {Axiom::kPairwiseHomogeneity, "pairwise-homogeneity"},
    {Axiom::kEqualIndividualImpact, "equal-individual-impact"},
    {Axiom::kEqualGlobalImpact, "equal-global-impact"},
    {Axiom::kEqualImpactOfArtists, "equal-impact-of-artists"},
    {Axiom::kJointIndividualGlobal, "joint-individual-global"},
};

AxiomVerdict satisfied(const Index& idx, Axiom axiom) {
  AxiomVerdict v;
  v.axiom = axiom;
  v.index_name = idx.name();
  v.instances_checked = 1;
  return v;
}

AxiomVerdict violated(const Index& idx, Instantiation inst, std::string compared, Rational lhs,
                      Rational rhs, Relation relation = Relation::kEqual,
                      std::string evaluated_on = {}) {
  AxiomVerdict v = satisfied(idx, inst.axiom);
  v.verdict = Verdict::kCounterexampleFound;
  v.witness = Witness{.instance = std::move(inst),
                      .compared = std::move(compared),
                      .relation = relation,
                      .lhs = std::move(lhs),
                      .rhs = std::move(rhs),
                      .evaluated_on = std::move(evaluated_on)};
  return v;
}

void require(bool condition, const std::string& message) {
  if (!condition) throw Error(Errc::kInvalidParameter, message);
}

std::vector<std::string> complement(const StreamingProblem& p,
                                    std::span<const std::string> part) {
  std::vector<std::string> rest;
  for (const auto& u : p.users()) {
    if (std::find(part.begin(), part.end(), u) == part.end()) rest.push_back(u);
  }
  return rest;
}

std::string without_label(std::string_view id) { return "without " + std::string(id); }

}  // namespace

std::string_view axiom_name(Axiom axiom) {
  for (const auto& [a, name] : kAxiomNames) {
    if (a == axiom) return name;
  }
  return "unknown";
}

std::optional<Axiom> parse_axiom(std::string_view name) {
  for (const auto& [a, n] : kAxiomNames) {
    if (n == name) return a;
  }
  return std::nullopt;
}

std::string_view verdict_name(Verdict verdict) {
  return verdict == Verdict::kSatisfiedOnSample ? "satisfied-on-sample" : "counterexample-found";
}

AxiomVerdict check_additivity(const Index& idx, const StreamingProblem& p,
                              std::span<const std::string> first_part) {
  const std::vector<std::string> first(first_part.begin(), first_part.end());
  const std::vector<std::string> second = complement(p, first);
  require(!first.empty() && !second.empty() && first.size() + second.size() == p.user_count(),
          "additivity needs a partition of the users into two nonempty parts");

  const IndexVector whole = idx.evaluate(p);
  const IndexVector part1 = idx.evaluate(p.with_users(first));
  const IndexVector part2 = idx.evaluate(p.with_users(second));
  for (std::size_t a = 0; a < p.artist_count(); ++a) {
    const Rational sum = part1[a] + part2[a];
    if (whole[a] != sum) {
      return violated(idx,
                      Instantiation{.axiom = Axiom::kAdditivity, .problem = p, .first_part = first},
                      p.artists()[a], whole[a], sum);
    }
  }
  return satisfied(idx, Axiom::kAdditivity);
}

AxiomVerdict check_null_artists(const Index& idx, const StreamingProblem& p) {
  const IndexVector values = idx.evaluate(p);
  for (std::size_t a = 0; a < p.artist_count(); ++a) {
    if (p.artist_total_at(a) == 0 && values[a] != 0) {
      return violated(
          idx, Instantiation{.axiom = Axiom::kNullArtists, .problem = p, .artist = p.artists()[a]},
          p.artists()[a], values[a], Rational(0));
    }
  }
  return satisfied(idx, Axiom::kNullArtists);
}

AxiomVerdict check_pairwise_homogeneity(const Index& idx, const StreamingProblem& p,
                                        std::string_view i, std::string_view i_prime,
                                        const Rational& lambda) {
  const std::size_t a = p.artist_position(i);
  const std::size_t b = p.artist_position(i_prime);
  require(a != b, "pairwise homogeneity needs two distinct artists");
  require(lambda >= 0, "lambda must be nonnegative");
  for (std::size_t u = 0; u < p.user_count(); ++u) {
    require(Rational(p.stream(a, u)) == lambda * p.stream(b, u),
            "streams of '" + std::string(i) + "' are not " + to_fraction_string(lambda) +
                " times those of '" + std::string(i_prime) + "'");
  }
  const IndexVector values = idx.evaluate(p);
  const Rational scaled = lambda * values[b];
  if (values[a] != scaled) {
    return violated(idx,
                    Instantiation{.axiom = Axiom::kPairwiseHomogeneity,
                                  .problem = p,
                                  .artist = std::string(i),
                                  .other_artist = std::string(i_prime),
                                  .lambda = lambda},
                    std::string(i), values[a], scaled);
  }
  return satisfied(idx, Axiom::kPairwiseHomogeneity);
}

AxiomVerdict check_equal_individual_impact(const Index& idx, const StreamingProblem& p,
                                           std::string_view i, std::string_view j,
                                           std::string_view j_prime) {
  const std::size_t a = p.artist_position(i);
  const std::size_t u = p.user_position(j);
  const std::size_t w = p.user_position(j_prime);
  require(u != w, "equal individual impact needs two distinct users");
  require(p.stream(a, u) == p.stream(a, w),
          "users '" + std::string(j) + "' and '" + std::string(j_prime) +
              "' stream artist '" + std::string(i) + "' differently");
  const Rational lhs = idx.evaluate(p.without_user(j))[a];
  const Rational rhs = idx.evaluate(p.without_user(j_prime))[a];
  if (lhs != rhs) {
    return violated(idx,
                    Instantiation{.axiom = Axiom::kEqualIndividualImpact,
                                  .problem = p,
                                  .artist = std::string(i),
                                  .user = std::string(j),
                                  .other_user = std::string(j_prime)},
                    std::string(i), lhs, rhs);
  }
  return satisfied(idx, Axiom::kEqualIndividualImpact);
}

AxiomVerdict check_equal_global_impact(const Index& idx, const StreamingProblem& p,
                                       std::string_view j, std::string_view j_prime) {
  require(p.user_position(j) != p.user_position(j_prime),
          "equal global impact needs two distinct users");
  const Rational lhs = idx.evaluate(p.without_user(j)).sum();
  const Rational rhs = idx.evaluate(p.without_user(j_prime)).sum();
  if (lhs != rhs) {
    return violated(idx,
                    Instantiation{.axiom = Axiom::kEqualGlobalImpact,
                                  .problem = p,
                                  .user = std::string(j),
                                  .other_user = std::string(j_prime)},
                    "sum", lhs, rhs);
  }
  return satisfied(idx, Axiom::kEqualGlobalImpact);
}

AxiomVerdict check_equal_impact_artists(const Index& idx, const StreamingProblem& p,
                                        std::string_view i, std::string_view i_prime) {
  const std::size_t a = p.artist_position(i);
  const std::size_t b = p.artist_position(i_prime);
  require(a != b, "equal impact of artists needs two distinct artists");
  const StreamingProblem without_b = p.without_artist(i_prime);
  const StreamingProblem without_a = p.without_artist(i);
  const IndexVector full = idx.evaluate(p);
  const Rational lhs = full[a] - idx.evaluate(without_b).at(i);
  const Rational rhs = full[b] - idx.evaluate(without_a).at(i_prime);
  if (lhs != rhs) {
    return violated(idx,
                    Instantiation{.axiom = Axiom::kEqualImpactOfArtists,
                                  .problem = p,
                                  .artist = std::string(i),
                                  .other_artist = std::string(i_prime)},
                    std::string(i), lhs, rhs);
  }
  return satisfied(idx, Axiom::kEqualImpactOfArtists);
}

AxiomVerdict check_joint_individual_global(const Index& idx, const StreamingProblem& p,
                                           std::string_view i, std::string_view j,
                                           std::string_view j_prime) {
  Instantiation inst{.axiom = Axiom::kJointIndividualGlobal,
                     .problem = p,
                     .artist = std::string(i),
                     .user = std::string(j),
                     .other_user = std::string(j_prime)};
  auto rebrand = [&](AxiomVerdict v) {
    v.axiom = Axiom::kJointIndividualGlobal;
    if (v.witness) v.witness->instance = inst;
    return v;
  };
  if (auto v = check_equal_individual_impact(idx, p, i, j, j_prime); !v.satisfied()) {
    return rebrand(std::move(v));
  }
  if (auto v = check_equal_global_impact(idx, p, j, j_prime); !v.satisfied()) {
    return rebrand(std::move(v));
  }
  // Indices are assumed to have a positive total on every problem.
  for (const auto& [label, problem] : derived_problems(inst)) {
    const Rational total = idx.evaluate(problem).sum();
    if (!(total > 0)) {
      return violated(idx, inst, "sum", total, Rational(0), Relation::kGreater, label);
    }
  }
  return satisfied(idx, Axiom::kJointIndividualGlobal);
}

AxiomVerdict check(const Index& idx, const Instantiation& inst) {
  const StreamingProblem& p = inst.problem;
  switch (inst.axiom) {
    case Axiom::kAdditivity:
      return check_additivity(idx, p, inst.first_part);
    case Axiom::kNullArtists:
      return check_null_artists(idx, p);
    case Axiom::kPairwiseHomogeneity:
      return check_pairwise_homogeneity(idx, p, inst.artist, inst.other_artist, inst.lambda);
    case Axiom::kEqualIndividualImpact:
      return check_equal_individual_impact(idx, p, inst.artist, inst.user, inst.other_user);
    case Axiom::kEqualGlobalImpact:
      return check_equal_global_impact(idx, p, inst.user, inst.other_user);
    case Axiom::kEqualImpactOfArtists:
      return check_equal_impact_artists(idx, p, inst.artist, inst.other_artist);
    case Axiom::kJointIndividualGlobal:
      return check_joint_individual_global(idx, p, inst.artist, inst.user, inst.other_user);
  }
  throw Error(Errc::kInvalidParameter, "unknown axiom");
}

bool reverify(const Index& idx, const AxiomVerdict& verdict) {
  if (verdict.satisfied()) return true;
  if (!verdict.witness || !verdict.witness->violated()) return false;
  const AxiomVerdict again = check(idx, verdict.witness->instance);
  return !again.satisfied() && again.witness && again.witness->violated() &&
         again.witness->compared == verdict.witness->compared &&
         again.witness->relation == verdict.witness->relation &&
         again.witness->lhs == verdict.witness->lhs && again.witness->rhs == verdict.witness->rhs;
}

std::vector<std::pair<std::string, StreamingProblem>> derived_problems(const Instantiation& inst) {
  const StreamingProblem& p = inst.problem;
  std::vector<std::pair<std::string, StreamingProblem>> out{{"P", p}};
  switch (inst.axiom) {
    case Axiom::kAdditivity:
      out.emplace_back("M1", p.with_users(inst.first_part));
      out.emplace_back("M2", p.with_users(complement(p, inst.first_part)));
      break;
    case Axiom::kEqualIndividualImpact:
    case Axiom::kEqualGlobalImpact:
    case Axiom::kJointIndividualGlobal:
      out.emplace_back(without_label(inst.user), p.without_user(inst.user));
      out.emplace_back(without_label(inst.other_user), p.without_user(inst.other_user));
      break;
    case Axiom::kEqualImpactOfArtists:
      out.emplace_back(without_label(inst.other_artist), p.without_artist(inst.other_artist));
      out.emplace_back(without_label(inst.artist), p.without_artist(inst.artist));
      break;
    case Axiom::kNullArtists:
    case Axiom::kPairwiseHomogeneity:
      break;
  }
  return out;
}

}  // namespace streamshare
