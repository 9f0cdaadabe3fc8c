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

#include "streamshare/indices.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "indices_detail.hpp"

namespace streamshare {
namespace {

IndexVector make_vector(const StreamingProblem& p, std::vector<Rational> values) {
  return IndexVector(p.artists(), std::move(values));
}

std::vector<Rational> column(const StreamingProblem& p, std::size_t u) {
  std::vector<Rational> out(p.artist_count());
  for (std::size_t a = 0; a < p.artist_count(); ++a) out[a] = p.stream(a, u);
  return out;
}

// Sums d over users, validating nonnegativity and the null-entry condition.
// `transform` maps a raw column to the profile handed to d.
template <class Transform>
IndexVector accumulate(const StreamingProblem& p, const DecompositionFunction& d,
                       Transform&& transform) {
  std::vector<Rational> values(p.artist_count(), Rational(0));
  for (std::size_t u = 0; u < p.user_count(); ++u) {
    const std::vector<Rational> x = transform(column(p, u));
    const UserProfile view{p.users()[u], p.artists(), x};
    for (std::size_t a = 0; a < p.artist_count(); ++a) {
      Rational r = d(a, view);
      if (r < 0) {
        throw Error(Errc::kNegativeDecomposition,
                    "d is negative for artist '" + p.artists()[a] + "', user '" + p.users()[u] +
                        "'");
      }
      if (x[a] == 0 && r != 0) {
        throw Error(Errc::kNullArtistViolation,
                    "d is positive for unstreamed artist '" + p.artists()[a] + "', user '" +
                        p.users()[u] + "'");
      }
      values[a] += r;
    }
  }
  return make_vector(p, std::move(values));
}

struct Identity {
  std::vector<Rational> operator()(std::vector<Rational> x) const { return x; }
};

void require_nonnegative(StreamCount value, const char* what) {
  if (value < 0) {
    throw Error(Errc::kInvalidParameter, std::string(what) + " must be nonnegative");
  }
}

}  // namespace

Rational UserProfile::total() const {
  Rational sum = 0;
  for (const auto& x : streams) sum += x;
  return sum;
}

std::size_t UserProfile::positive_count() const {
  return static_cast<std::size_t>(
      std::count_if(streams.begin(), streams.end(), [](const Rational& x) { return x > 0; }));
}

OwnedProfile OwnedProfile::from_column(const StreamingProblem& p, std::size_t u) {
  return {p.users()[u], p.artists(), column(p, u)};
}

PerArtistFunction& PerArtistFunction::set(std::string artist, Function f) {
  functions_.insert_or_assign(std::move(artist), std::move(f));
  return *this;
}

Rational PerArtistFunction::operator()(std::string_view artist, const Rational& streams) const {
  auto it = functions_.find(artist);
  const Function& f = it == functions_.end() ? fallback_ : it->second;
  Rational r = f(streams);
  if (streams == 0 && r != 0) {
    throw Error(Errc::kNullArtistViolation,
                "f(0) != 0 for artist '" + std::string(artist) + "'");
  }
  return r;
}

DecompositionFunction PerArtistFunction::as_decomposition() const {
  return [self = *this](std::size_t i, const UserProfile& x) {
    return self(x.artists[i], x.streams[i]);
  };
}

namespace decompositions {

DecompositionFunction pro_rata() {
  return [](std::size_t i, const UserProfile& x) { return x.streams[i]; };
}

DecompositionFunction user_centric() {
  return [](std::size_t i, const UserProfile& x) -> Rational {
    if (x.streams[i] == 0) return 0;
    return x.streams[i] / x.total();
  };
}

DecompositionFunction shapley() {
  return [](std::size_t i, const UserProfile& x) -> Rational {
    if (x.streams[i] == 0) return 0;
    return Rational(1, static_cast<long long>(x.positive_count()));
  };
}

DecompositionFunction threshold(StreamCount tau) {
  require_nonnegative(tau, "tau");
  return [tau](std::size_t i, const UserProfile& x) -> Rational {
    return x.streams[i] >= tau ? x.streams[i] : Rational(0);
  };
}

DecompositionFunction capped(StreamCount cap, DecompositionFunction base) {
  if (cap < 1) throw Error(Errc::kInvalidParameter, "cap must be at least 1");
  return [cap, base = std::move(base)](std::size_t i, const UserProfile& x) {
    const auto capped_streams = cap_profile(x.streams, cap);
    return base(i, UserProfile{x.user, x.artists, capped_streams});
  };
}

}  // namespace decompositions

namespace weights {

WeightSystem constant(Rational w) {
  return [w = std::move(w)](const UserProfile&) { return w; };
}

WeightSystem inverse_total() {
  return [](const UserProfile& x) -> Rational { return 1 / x.total(); };
}

}  // namespace weights

namespace probabilities {

ProbabilitySystem proportional() {
  return [](const UserProfile& x) {
    const Rational total = x.total();
    std::vector<Rational> out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = x.streams[i] / total;
    return out;
  };
}

ProbabilitySystem uniform() {
  return [](const UserProfile& x) {
    const Rational share(1, static_cast<long long>(x.positive_count()));
    std::vector<Rational> out(x.size(), Rational(0));
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x.streams[i] > 0) out[i] = share;
    }
    return out;
  };
}

ProbabilitySystem first_streamed() {
  return [](const UserProfile& x) {
    std::vector<Rational> out(x.size(), Rational(0));
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x.streams[i] > 0) {
        out[i] = 1;
        break;
      }
    }
    return out;
  };
}

}  // namespace probabilities

std::vector<Rational> cap_profile(std::span<const Rational> streams, StreamCount cap) {
  if (cap < 1) throw Error(Errc::kInvalidParameter, "cap must be at least 1");
  Rational total = 0;
  for (const auto& x : streams) total += x;
  std::vector<Rational> out(streams.begin(), streams.end());
  if (total <= cap) return out;
  for (auto& x : out) x = x * cap / total;
  return out;
}

IndexVector pro_rata(const StreamingProblem& p) {
  std::vector<Rational> values(p.artist_count());
  for (std::size_t a = 0; a < p.artist_count(); ++a) values[a] = p.artist_total_at(a);
  return make_vector(p, std::move(values));
}

IndexVector user_centric(const StreamingProblem& p) {
  std::vector<Rational> values(p.artist_count(), Rational(0));
  for (std::size_t u = 0; u < p.user_count(); ++u) {
    for (std::size_t a = 0; a < p.artist_count(); ++a) {
      if (p.stream(a, u) > 0) values[a] += Rational(p.stream(a, u), p.user_total_at(u));
    }
  }
  return make_vector(p, std::move(values));
}

IndexVector shapley_index(const StreamingProblem& p) {
  std::vector<Rational> values(p.artist_count(), Rational(0));
  for (std::size_t u = 0; u < p.user_count(); ++u) {
    long long listed = 0;
    for (std::size_t a = 0; a < p.artist_count(); ++a) listed += p.stream(a, u) > 0 ? 1 : 0;
    for (std::size_t a = 0; a < p.artist_count(); ++a) {
      if (p.stream(a, u) > 0) values[a] += Rational(1, listed);
    }
  }
  return make_vector(p, std::move(values));
}

IndexVector weighted_index(const WeightSystem& w, const StreamingProblem& p) {
  std::vector<Rational> values(p.artist_count(), Rational(0));
  for (std::size_t u = 0; u < p.user_count(); ++u) {
    const auto x = column(p, u);
    const Rational weight = w(UserProfile{p.users()[u], p.artists(), x});
    if (weight <= 0) {
      throw Error(Errc::kNonPositiveWeight, "weight of user '" + p.users()[u] + "' is " +
                                                to_fraction_string(weight));
    }
    for (std::size_t a = 0; a < p.artist_count(); ++a) values[a] += weight * x[a];
  }
  return make_vector(p, std::move(values));
}

IndexVector probabilistic_index(const ProbabilitySystem& rho, const StreamingProblem& p) {
  std::vector<Rational> values(p.artist_count(), Rational(0));
  for (std::size_t u = 0; u < p.user_count(); ++u) {
    const auto x = column(p, u);
    const auto probs = rho(UserProfile{p.users()[u], p.artists(), x});
    const std::string where = "user '" + p.users()[u] + "'";
    if (probs.size() != x.size()) {
      throw Error(Errc::kInvalidProbabilitySystem, "wrong vector length for " + where);
    }
    Rational total = 0;
    for (std::size_t a = 0; a < x.size(); ++a) {
      if (probs[a] < 0 || probs[a] > 1) {
        throw Error(Errc::kInvalidProbabilitySystem,
                    "probability outside [0, 1] for artist '" + p.artists()[a] + "', " + where);
      }
      if (x[a] == 0 && probs[a] != 0) {
        throw Error(Errc::kInvalidProbabilitySystem,
                    "mass on unstreamed artist '" + p.artists()[a] + "', " + where);
      }
      total += probs[a];
    }
    if (total != 1) {
      throw Error(Errc::kInvalidProbabilitySystem,
                  "probabilities sum to " + to_fraction_string(total) + " for " + where);
    }
    for (std::size_t a = 0; a < x.size(); ++a) values[a] += probs[a];
  }
  return make_vector(p, std::move(values));
}

IndexVector decomposable_index(const DecompositionFunction& d, const StreamingProblem& p) {
  return accumulate(p, d, Identity{});
}

IndexVector equal_division(const StreamingProblem& p) {
  const Rational share(static_cast<long long>(p.user_count()),
                       static_cast<long long>(p.artist_count()));
  return make_vector(p, std::vector<Rational>(p.artist_count(), share));
}

namespace detail {

void require_beta_in_range(const Rational& beta, std::size_t artists) {
  const bool ok = artists >= 2
                      ? beta >= 0 && beta <= Rational(static_cast<long long>(artists),
                                                      static_cast<long long>(artists - 1))
                      : beta == 0;
  if (!ok) {
    throw Error(Errc::kBetaOutOfRange, "beta = " + to_fraction_string(beta) +
                                           " outside [0, n/(n-1)] for n = " +
                                           std::to_string(artists));
  }
}

IndexVector spotify_scores(StreamCount tau, const StreamingProblem& p) {
  require_nonnegative(tau, "tau");
  std::vector<Rational> values(p.artist_count());
  for (std::size_t a = 0; a < p.artist_count(); ++a) {
    const StreamCount total = p.artist_total_at(a);
    values[a] = total >= tau ? total : 0;
  }
  return make_vector(p, std::move(values));
}

IndexVector per_user_threshold_scores(StreamCount tau, const StreamingProblem& p) {
  return decomposable_index(decompositions::threshold(tau), p);
}

}  // namespace detail

namespace {

IndexVector blend(const Rational& beta, const IndexVector& other, const StreamingProblem& p) {
  detail::require_beta_in_range(beta, p.artist_count());
  const IndexVector equal = equal_division(p);
  std::vector<Rational> values(p.artist_count());
  for (std::size_t a = 0; a < p.artist_count(); ++a) {
    values[a] = beta * equal[a] + (1 - beta) * other[a];
  }
  return make_vector(p, std::move(values));
}

IndexVector as_index(const RewardVector& r) { return IndexVector(r.artists(), r.values()); }

std::string largest_artist(const StreamingProblem& p) {
  std::size_t best = 0;
  for (std::size_t a = 1; a < p.artist_count(); ++a) {
    if (p.artist_total_at(a) > p.artist_total_at(best)) best = a;
  }
  return "largest is artist " + p.artists()[best] + " with " +
         std::to_string(p.artist_total_at(best)) + " streams";
}

std::string largest_entry(const StreamingProblem& p) {
  std::size_t best_a = 0;
  std::size_t best_u = 0;
  for (std::size_t a = 0; a < p.artist_count(); ++a) {
    for (std::size_t u = 0; u < p.user_count(); ++u) {
      if (p.stream(a, u) > p.stream(best_a, best_u)) {
        best_a = a;
        best_u = u;
      }
    }
  }
  return "largest is user " + p.users()[best_u] + " on artist " + p.artists()[best_a] +
         " with " + std::to_string(p.stream(best_a, best_u)) + " streams";
}

}  // namespace

IndexVector blend_user_centric(const Rational& beta, const StreamingProblem& p) {
  return blend(beta, user_centric(p), p);
}

IndexVector blend_pro_rata_reward(const Rational& beta, const StreamingProblem& p) {
  return blend(beta, as_index(reward(pro_rata(p), p)), p);
}

IndexVector spotify_index(StreamCount tau, const StreamingProblem& p) {
  IndexVector out = detail::spotify_scores(tau, p);
  if (out.sum() == 0) {
    throw Error(Errc::kAllArtistsBelowThreshold,
                "no artist reaches " + std::to_string(tau) + " streams; " + largest_artist(p));
  }
  return out;
}

IndexVector per_user_threshold_index(StreamCount tau, const StreamingProblem& p) {
  IndexVector out = detail::per_user_threshold_scores(tau, p);
  if (out.sum() == 0) {
    throw Error(Errc::kZeroIndexSum, "no user streams any artist at least " +
                                         std::to_string(tau) + " times; " + largest_entry(p));
  }
  return out;
}

IndexVector deezer_cap_index(StreamCount cap, const DecompositionFunction& base,
                             const StreamingProblem& p) {
  if (cap < 1) throw Error(Errc::kInvalidParameter, "cap must be at least 1");
  return accumulate(p, base, [cap](std::vector<Rational> x) { return cap_profile(x, cap); });
}

IndexVector squared_blend_index(const StreamingProblem& p) {
  const StreamCount grand = p.grand_total();
  std::vector<Rational> values(p.artist_count(), Rational(0));
  for (std::size_t a = 0; a < p.artist_count(); ++a) {
    for (std::size_t u = 0; u < p.user_count(); ++u) {
      values[a] += Rational(p.stream(a, u) + p.artist_total_at(a), p.user_total_at(u) + grand);
    }
  }
  return make_vector(p, std::move(values));
}

IndexVector top_streams_takes_all(const StreamingProblem& p) {
  std::size_t best = 0;
  for (std::size_t a = 1; a < p.artist_count(); ++a) {
    if (p.artist_total_at(a) > p.artist_total_at(best)) best = a;
  }
  std::vector<Rational> values(p.artist_count(), Rational(0));
  values[best] = 1;
  return make_vector(p, std::move(values));
}

IndexVector binary_positive_index(const StreamingProblem& p) {
  std::vector<Rational> values(p.artist_count());
  for (std::size_t a = 0; a < p.artist_count(); ++a) {
    values[a] = p.artist_total_at(a) > 0 ? 1 : 0;
  }
  return make_vector(p, std::move(values));
}

RewardVector reward(const IndexVector& index, const StreamingProblem& p) {
  if (index.artists() != p.artists()) {
    throw Error(Errc::kDimensionMismatch, "index vector does not match the problem's artists");
  }
  const Rational total = index.sum();
  if (total <= 0) throw Error(Errc::kZeroIndexSum, "index values sum to zero");
  const Rational scale = Rational(static_cast<long long>(p.user_count())) / total;
  std::vector<Rational> values(index.size());
  for (std::size_t a = 0; a < index.size(); ++a) values[a] = index[a] * scale;
  return RewardVector(p.artists(), std::move(values));
}

Index::Index(std::string name, Evaluator raw, bool decomposable, Errc zero_sum_error)
    : name_(std::move(name)),
      raw_(std::move(raw)),
      decomposable_(decomposable),
      zero_sum_error_(zero_sum_error) {}

IndexVector Index::operator()(const StreamingProblem& p) const {
  IndexVector out = raw_(p);
  if (out.sum() <= 0) {
    throw Error(zero_sum_error_,
                "index '" + name_ + "' sums to zero on this problem; " + largest_artist(p));
  }
  return out;
}

RewardVector Index::reward(const StreamingProblem& p) const {
  return streamshare::reward((*this)(p), p);
}

Index make_decomposable(std::string name, DecompositionFunction d) {
  return Index(
      std::move(name),
      [d = std::move(d)](const StreamingProblem& p) { return decomposable_index(d, p); }, true);
}

}  // namespace streamshare
