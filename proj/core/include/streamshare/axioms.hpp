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

#ifndef STREAMSHARE_AXIOMS_HPP_
#define STREAMSHARE_AXIOMS_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "streamshare/generator.hpp"
#include "streamshare/indices.hpp"

namespace streamshare {

enum class Axiom {
  kAdditivity,
  kNullArtists,
  kPairwiseHomogeneity,
  kEqualIndividualImpact,
  kEqualGlobalImpact,
  kEqualImpactOfArtists,
  // Equal individual impact and equal global impact checked together on the
  // same instance; no decomposable index can pass both.
  kJointIndividualGlobal,
};

inline constexpr std::array<Axiom, 6> kMatrixAxioms = {
    Axiom::kAdditivity,           Axiom::kNullArtists,
    Axiom::kPairwiseHomogeneity,  Axiom::kEqualIndividualImpact,
    Axiom::kEqualGlobalImpact,    Axiom::kEqualImpactOfArtists,
};

std::string_view axiom_name(Axiom axiom);
std::optional<Axiom> parse_axiom(std::string_view name);

// One concrete instance of an axiom: the problem and the objects the axiom
// quantifies over. Unused fields stay empty.
struct Instantiation {
  Axiom axiom = Axiom::kAdditivity;
  StreamingProblem problem;
  std::vector<std::string> first_part{};  // additivity: M1 (M2 is the rest)
  std::string artist{};                   // i
  std::string other_artist{};             // i'
  std::string user{};                     // j
  std::string other_user{};               // j'
  Rational lambda{};                      // pairwise homogeneity
};

// The relation the axiom demands between the two sides.
enum class Relation {
  kEqual,    // lhs == rhs
  kGreater,  // lhs > rhs; the positive-sum standing assumption
};

struct Witness {
  Instantiation instance;
  // What was compared: an artist id, "sum" for sums over artists.
  std::string compared;
  Relation relation = Relation::kEqual;
  Rational lhs;
  Rational rhs;
  // The problem the compared sides were evaluated on when it is not the
  // instance's own problem (positive-sum violations on a reduced problem).
  std::string evaluated_on;

  // True when lhs and rhs violate `relation`.
  bool violated() const {
    return relation == Relation::kEqual ? lhs != rhs : !(lhs > rhs);
  }
};

enum class Verdict { kSatisfiedOnSample, kCounterexampleFound };

std::string_view verdict_name(Verdict verdict);

struct AxiomVerdict {
  Axiom axiom = Axiom::kAdditivity;
  std::string index_name;
  Verdict verdict = Verdict::kSatisfiedOnSample;
  std::size_t instances_checked = 0;
  std::size_t instances_skipped = 0;
  std::optional<Witness> witness;

  bool satisfied() const { return verdict == Verdict::kSatisfiedOnSample; }
};

// Individual checks. Each evaluates the raw index (Index::evaluate) and
// compares exactly; on failure the witness holds both sides.

// I(N,M,t) == I(N,M1,t1) + I(N,M2,t2) with M1 = first_part, M2 = M \ M1.
AxiomVerdict check_additivity(const Index& idx, const StreamingProblem& p,
                              std::span<const std::string> first_part);
// I_i == 0 for every artist with T_i == 0.
AxiomVerdict check_null_artists(const Index& idx, const StreamingProblem& p);
// Requires t_i = lambda * t_i' row-wise (kInvalidParameter otherwise).
AxiomVerdict check_pairwise_homogeneity(const Index& idx, const StreamingProblem& p,
                                        std::string_view i, std::string_view i_prime,
                                        const Rational& lambda);
// Requires t_ij == t_ij'.
AxiomVerdict check_equal_individual_impact(const Index& idx, const StreamingProblem& p,
                                           std::string_view i, std::string_view j,
                                           std::string_view j_prime);
AxiomVerdict check_equal_global_impact(const Index& idx, const StreamingProblem& p,
                                       std::string_view j, std::string_view j_prime);
// Both reduced problems must be valid (kEmptyUserColumn otherwise).
AxiomVerdict check_equal_impact_artists(const Index& idx, const StreamingProblem& p,
                                        std::string_view i, std::string_view i_prime);
// Individual impact for (i, j, j') and global impact for (j, j'); the raw
// index summing to zero on a reduced problem also counts as a violation of
// the standing positive-sum assumption.
AxiomVerdict check_joint_individual_global(const Index& idx, const StreamingProblem& p,
                                           std::string_view i, std::string_view j,
                                           std::string_view j_prime);

// Dispatches on inst.axiom.
AxiomVerdict check(const Index& idx, const Instantiation& inst);

// Re-runs the stored witness from its problem alone and confirms the same
// inequality. Satisfied verdicts re-verify trivially.
bool reverify(const Index& idx, const AxiomVerdict& verdict);

// Sub-problems an instantiation compares, labelled for reports.
std::vector<std::pair<std::string, StreamingProblem>> derived_problems(
    const Instantiation& inst);

// --- Counterexample search -------------------------------------------------

struct SearchOptions {
  // 0 = hardware concurrency.
  std::size_t threads = 0;
  // Enumerate every bipartition up to this many users, sample beyond.
  std::size_t max_enumerated_users = 8;
  std::size_t sampled_partitions = 64;
};

// All qualifying instantiations of `axiom` on `p`.
std::vector<Instantiation> instantiations(Axiom axiom, const StreamingProblem& p,
                                          const SearchOptions& options = {},
                                          std::uint64_t seed = 0);

// Deterministic instances always tried before random ones: the classic
// witnesses and, for the joint check, the 1_S unit-vector family.
std::vector<Instantiation> injected_instances(Axiom axiom);

// The 1_S family: for n in [2, max_artists], users a = 1_N and b = 1_S for
// each nonempty proper S, checked at every i in S.
std::vector<Instantiation> unit_vector_family(std::size_t max_artists = 4);

// Generator settings tuned per axiom (constraint flags), n <= 5, m <= 6.
ProblemGenerator generator_for(Axiom axiom, std::uint64_t seed);

// Injected instances first, then up to `budget` generated problems with all
// their instantiations. Returns the counterexample of lowest instance number,
// so the result does not depend on thread scheduling.
AxiomVerdict search_counterexample(const Index& idx, Axiom axiom,
                                   const ProblemGenerator& gen, std::size_t budget,
                                   const SearchOptions& options = {});

struct AxiomMatrix {
  std::vector<std::string> indices;
  // cells[r][c] for indices[r] and kMatrixAxioms[c].
  std::vector<std::vector<AxiomVerdict>> cells;
};

AxiomMatrix axiom_matrix(std::span<const Index> indices, std::size_t budget,
                         std::uint64_t seed, const SearchOptions& options = {});

// Expected satisfied (true) / violated (false) pattern shipped with the tool,
// or nullopt for an index/axiom pair with no recorded expectation.
std::optional<bool> expected_verdict(std::string_view index_name, Axiom axiom);

}  // namespace streamshare

#endif  // STREAMSHARE_AXIOMS_HPP_
