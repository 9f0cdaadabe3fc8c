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

#ifndef STREAMSHARE_INDICES_HPP_
#define STREAMSHARE_INDICES_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "streamshare/artist_values.hpp"
#include "streamshare/error.hpp"
#include "streamshare/problem.hpp"
#include "streamshare/rational.hpp"

namespace streamshare {

// One user's streaming vector as seen by decomposition, weight and
// probability systems. Entries are rational so that capped profiles can be
// fed through the same functions as raw ones.
struct UserProfile {
  std::string_view user;
  std::span<const std::string> artists;
  std::span<const Rational> streams;

  std::size_t size() const { return streams.size(); }
  Rational total() const;
  std::size_t positive_count() const;
};

// Owning counterpart of UserProfile, used for sampled profiles and for
// profiles derived from a problem column.
struct OwnedProfile {
  std::string user;
  std::vector<std::string> artists;
  std::vector<Rational> streams;

  UserProfile view() const { return {user, artists, streams}; }
  static OwnedProfile from_column(const StreamingProblem& p, std::size_t u);
};

// d(i, j, x): contribution of user j with profile x to the artist at
// position i. Must vanish when x_i == 0 and be deterministic.
using DecompositionFunction = std::function<Rational(std::size_t, const UserProfile&)>;

// w(j, x) > 0.
using WeightSystem = std::function<Rational(const UserProfile&)>;

// rho(j, x): a probability vector over the profile's artists with no mass on
// unstreamed artists.
using ProbabilitySystem = std::function<std::vector<Rational>(const UserProfile&)>;

// A function f_i per artist with f_i(0) == 0; artists without a dedicated
// function use the fallback.
class PerArtistFunction {
 public:
  using Function = std::function<Rational(const Rational&)>;

  explicit PerArtistFunction(Function fallback) : fallback_(std::move(fallback)) {}
  PerArtistFunction& set(std::string artist, Function f);

  // Throws kNullArtistViolation when f_i(0) != 0 is observed.
  Rational operator()(std::string_view artist, const Rational& streams) const;
  DecompositionFunction as_decomposition() const;

 private:
  Function fallback_;
  std::map<std::string, Function, std::less<>> functions_;
};

namespace decompositions {
// x_i
DecompositionFunction pro_rata();
// x_i / sum(x)
DecompositionFunction user_centric();
// 1 / |{k : x_k > 0}| for streamed artists
DecompositionFunction shapley();
// x_i when x_i >= tau, else 0
DecompositionFunction threshold(StreamCount tau);
// Applies `base` to the proportionally capped profile.
DecompositionFunction capped(StreamCount cap, DecompositionFunction base);
}  // namespace decompositions

namespace weights {
WeightSystem constant(Rational w);
// 1 / sum(x); turns the weighted index into user-centric.
WeightSystem inverse_total();
}  // namespace weights

namespace probabilities {
// x_i / sum(x)
ProbabilitySystem proportional();
// uniform over streamed artists
ProbabilitySystem uniform();
// all mass on the first streamed artist in artist order
ProbabilitySystem first_streamed();
}  // namespace probabilities

// Proportional cap: x unchanged if sum(x) <= cap, else x_i * cap / sum(x).
std::vector<Rational> cap_profile(std::span<const Rational> streams, StreamCount cap);

IndexVector pro_rata(const StreamingProblem& p);
IndexVector user_centric(const StreamingProblem& p);
IndexVector shapley_index(const StreamingProblem& p);
IndexVector weighted_index(const WeightSystem& w, const StreamingProblem& p);
IndexVector probabilistic_index(const ProbabilitySystem& rho, const StreamingProblem& p);
IndexVector decomposable_index(const DecompositionFunction& d, const StreamingProblem& p);

// m / n for every artist, so that the vector sums to m.
IndexVector equal_division(const StreamingProblem& p);
// beta * E + (1 - beta) * U, beta in [0, n / (n - 1)].
IndexVector blend_user_centric(const Rational& beta, const StreamingProblem& p);
// beta * E + (1 - beta) * R^P, beta in [0, n / (n - 1)].
IndexVector blend_pro_rata_reward(const Rational& beta, const StreamingProblem& p);

// T_i if T_i >= tau, else 0. Throws kAllArtistsBelowThreshold on an all-zero
// result.
IndexVector spotify_index(StreamCount tau, const StreamingProblem& p);
// Per-user threshold on each entry. Throws kZeroIndexSum on an all-zero result.
IndexVector per_user_threshold_index(StreamCount tau, const StreamingProblem& p);
IndexVector deezer_cap_index(StreamCount cap, const DecompositionFunction& base,
                             const StreamingProblem& p);

// sum_j (t_ij + T_i) / (T^j + sum_k T_k)
IndexVector squared_blend_index(const StreamingProblem& p);
// 1 for the artist with the most streams (ties: first in artist order), 0 else.
IndexVector top_streams_takes_all(const StreamingProblem& p);
// 1 for every artist with T_i > 0, 0 for null artists.
IndexVector binary_positive_index(const StreamingProblem& p);

// R_i = I_i / sum(I) * m. Throws kZeroIndexSum.
RewardVector reward(const IndexVector& index, const StreamingProblem& p);

// Named index behind a single evaluation interface.
//
// evaluate() returns the raw vector, which may sum to zero on degenerate
// sub-problems; the axiom checkers need those raw values. operator() enforces
// the positive-sum standing assumption and raises the index's own error code.
class Index {
 public:
  using Evaluator = std::function<IndexVector(const StreamingProblem&)>;

  Index(std::string name, Evaluator raw, bool decomposable = false,
        Errc zero_sum_error = Errc::kZeroIndexSum);

  const std::string& name() const { return name_; }
  bool decomposable() const { return decomposable_; }

  IndexVector evaluate(const StreamingProblem& p) const { return raw_(p); }
  IndexVector operator()(const StreamingProblem& p) const;
  RewardVector reward(const StreamingProblem& p) const;

 private:
  std::string name_;
  Evaluator raw_;
  bool decomposable_;
  Errc zero_sum_error_;
};

Index make_decomposable(std::string name, DecompositionFunction d);

}  // namespace streamshare

#endif  // STREAMSHARE_INDICES_HPP_
