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

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <random>
#include <string>
#include <thread>
#include <utility>

#include "streamshare/axioms.hpp"

namespace streamshare {
namespace {

StreamingProblem matrix(std::vector<std::vector<StreamCount>> rows) {
  std::vector<std::string> artists, users;
  for (std::size_t a = 0; a < rows.size(); ++a) artists.push_back(std::to_string(a + 1));
  for (std::size_t u = 0; u < rows.front().size(); ++u) {
    users.push_back(std::string(1, static_cast<char>('a' + u)));
  }
  return StreamingProblem::build(std::move(artists), std::move(users), rows);
}

// Classic witnesses, tried for every axiom before any random problem.
const std::vector<StreamingProblem>& catalog() {
  static const std::vector<StreamingProblem> problems = {
      matrix({{100, 0, 10}, {0, 10, 20}}),  // the running example
      matrix({{600, 600}}),                 // threshold split across two users
      matrix({{5}, {0}}),                   // a null artist
      matrix({{2}, {1}}),
      matrix({{1000}, {500}}),
      matrix({{2, 4}, {1, 2}}),
      matrix({{0, 0}, {1, 2}}),
      matrix({{1, 1}, {0, 1}}),
      matrix({{1, 1}, {0, 5}}),
      matrix({{2, 0}, {3, 3}}),
      matrix({{1, 2}}),
      matrix({{1000, 1}}),
      matrix({{1}, {2}, {3}}),
  };
  return problems;
}

bool reduced_problem_valid(const StreamingProblem& p, std::size_t removed) {
  if (p.artist_count() < 2) return false;
  for (std::size_t u = 0; u < p.user_count(); ++u) {
    if (p.user_total_at(u) - p.stream(removed, u) <= 0) return false;
  }
  return true;
}

std::optional<Rational> row_ratio(const StreamingProblem& p, std::size_t a, std::size_t b) {
  std::optional<Rational> lambda;
  for (std::size_t u = 0; u < p.user_count(); ++u) {
    if (p.stream(b, u) != 0) {
      lambda = Rational(p.stream(a, u), p.stream(b, u));
      break;
    }
  }
  if (!lambda) return std::nullopt;
  for (std::size_t u = 0; u < p.user_count(); ++u) {
    if (Rational(p.stream(a, u)) != *lambda * p.stream(b, u)) return std::nullopt;
  }
  return lambda;
}

std::vector<std::vector<std::string>> partitions(const StreamingProblem& p,
                                                 const SearchOptions& options,
                                                 std::uint64_t seed) {
  const std::size_t m = p.user_count();
  std::vector<std::vector<std::string>> out;
  if (m < 2) return out;
  // user 0 is always in the first part; the second part must be nonempty
  auto part_of = [&](std::uint64_t others) {
    std::vector<std::string> first{p.users()[0]};
    for (std::size_t u = 1; u < m; ++u) {
      if (others & (std::uint64_t{1} << (u - 1))) first.push_back(p.users()[u]);
    }
    return first;
  };
  if (m <= options.max_enumerated_users) {
    const std::uint64_t full = (std::uint64_t{1} << (m - 1)) - 1;
    for (std::uint64_t others = 0; others < full; ++others) out.push_back(part_of(others));
    return out;
  }
  std::mt19937_64 engine(seed);
  for (std::size_t k = 0; k < options.sampled_partitions; ++k) {
    std::vector<std::string> first{p.users()[0]};
    for (std::size_t u = 1; u < m; ++u) {
      if (engine() & 1) first.push_back(p.users()[u]);
    }
    if (first.size() < m) out.push_back(std::move(first));
  }
  return out;
}

}  // namespace

std::vector<Instantiation> instantiations(Axiom axiom, const StreamingProblem& p,
                                          const SearchOptions& options, std::uint64_t seed) {
  std::vector<Instantiation> out;
  const auto& artists = p.artists();
  const auto& users = p.users();
  const std::size_t n = p.artist_count();
  const std::size_t m = p.user_count();
  switch (axiom) {
    case Axiom::kAdditivity:
      for (auto& first : partitions(p, options, seed)) {
        out.push_back({.axiom = axiom, .problem = p, .first_part = std::move(first)});
      }
      break;
    case Axiom::kNullArtists:
      for (std::size_t a = 0; a < n; ++a) {
        if (p.artist_total_at(a) == 0) {
          out.push_back({.axiom = axiom, .problem = p});
          break;
        }
      }
      break;
    case Axiom::kPairwiseHomogeneity:
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
          if (a == b) continue;
          std::optional<Rational> lambda;
          if (p.artist_total_at(a) == 0) {
            lambda = Rational(0);
          } else {
            lambda = row_ratio(p, a, b);
          }
          if (lambda) {
            out.push_back({.axiom = axiom,
                           .problem = p,
                           .artist = artists[a],
                           .other_artist = artists[b],
                           .lambda = *lambda});
          }
        }
      }
      break;
    case Axiom::kEqualIndividualImpact:
    case Axiom::kJointIndividualGlobal:
      for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t u = 0; u < m; ++u) {
          for (std::size_t w = u + 1; w < m; ++w) {
            if (p.stream(a, u) == p.stream(a, w)) {
              out.push_back({.axiom = axiom,
                             .problem = p,
                             .artist = artists[a],
                             .user = users[u],
                             .other_user = users[w]});
            }
          }
        }
      }
      break;
    case Axiom::kEqualGlobalImpact:
      for (std::size_t u = 0; u < m; ++u) {
        for (std::size_t w = u + 1; w < m; ++w) {
          out.push_back({.axiom = axiom, .problem = p, .user = users[u], .other_user = users[w]});
        }
      }
      break;
    case Axiom::kEqualImpactOfArtists:
      for (std::size_t a = 0; a < n; ++a) {
        if (!reduced_problem_valid(p, a)) continue;
        for (std::size_t b = a + 1; b < n; ++b) {
          if (!reduced_problem_valid(p, b)) continue;
          out.push_back(
              {.axiom = axiom, .problem = p, .artist = artists[a], .other_artist = artists[b]});
        }
      }
      break;
  }
  return out;
}

std::vector<Instantiation> unit_vector_family(std::size_t max_artists) {
  std::vector<Instantiation> out;
  // Scale 1 is the family itself; scale 1000 keeps threshold-style d
  // (zero below 1000 streams) away from the degenerate all-zero case.
  for (StreamCount scale : {StreamCount{1}, StreamCount{1000}}) {
    for (std::size_t n = 2; n <= max_artists; ++n) {
      const unsigned everyone = (1u << n) - 1;
      for (unsigned s = 1; s < everyone; ++s) {
        std::vector<std::vector<StreamCount>> rows(n, std::vector<StreamCount>(2));
        for (std::size_t a = 0; a < n; ++a) {
          rows[a][0] = scale;
          rows[a][1] = (s & (1u << a)) ? scale : 0;
        }
        const StreamingProblem p = matrix(rows);
        for (std::size_t a = 0; a < n; ++a) {
          if (!(s & (1u << a))) continue;
          out.push_back({.axiom = Axiom::kJointIndividualGlobal,
                         .problem = p,
                         .artist = p.artists()[a],
                         .user = "a",
                         .other_user = "b"});
        }
      }
    }
  }
  return out;
}

std::vector<Instantiation> injected_instances(Axiom axiom) {
  std::vector<Instantiation> out;
  if (axiom == Axiom::kJointIndividualGlobal) out = unit_vector_family();
  for (const auto& p : catalog()) {
    auto more = instantiations(axiom, p);
    out.insert(out.end(), std::make_move_iterator(more.begin()),
               std::make_move_iterator(more.end()));
  }
  return out;
}

ProblemGenerator generator_for(Axiom axiom, std::uint64_t seed) {
  ProblemGenerator gen;
  gen.seed = seed ^ (static_cast<std::uint64_t>(axiom) * 0x9e3779b97f4a7c15ULL);
  gen.min_artists = 2;
  gen.max_artists = 5;
  gen.min_users = 2;
  gen.max_users = 6;
  gen.max_stream = 4;
  gen.sparsity = 0.35;
  switch (axiom) {
    case Axiom::kNullArtists:
      gen.sparsity = 0.6;
      break;
    case Axiom::kPairwiseHomogeneity:
      gen.ensure_proportional_artist_pair = true;
      break;
    case Axiom::kEqualIndividualImpact:
    case Axiom::kJointIndividualGlobal:
      gen.ensure_similar_user_pair = true;
      break;
    case Axiom::kEqualImpactOfArtists:
      gen.every_user_streams_two = true;
      break;
    case Axiom::kAdditivity:
    case Axiom::kEqualGlobalImpact:
      break;
  }
  return gen;
}

AxiomVerdict search_counterexample(const Index& idx, Axiom axiom, const ProblemGenerator& gen,
                                   std::size_t budget, const SearchOptions& options) {
  const std::vector<Instantiation> injected = injected_instances(axiom);
  const std::size_t total = injected.size() + budget;
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  struct TaskResult {
    std::optional<AxiomVerdict> counterexample;
    std::size_t skipped = 0;
  };
  std::vector<TaskResult> results(total);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{kNone};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto run_task = [&](std::size_t k) {
    std::vector<Instantiation> cases;
    if (k < injected.size()) {
      cases.push_back(injected[k]);
    } else {
      const std::uint64_t ordinal = k - injected.size();
      cases = instantiations(axiom, generate_problem(gen, ordinal), options, gen.seed + ordinal);
    }
    for (const auto& inst : cases) {
      if (k > best.load()) return;
      AxiomVerdict v;
      try {
        v = check(idx, inst);
      } catch (const Error&) {
        // index undefined on this instance (e.g. beta range after a removal)
        ++results[k].skipped;
        continue;
      }
      if (!v.satisfied()) {
        results[k].counterexample = std::move(v);
        std::size_t current = best.load();
        while (k < current && !best.compare_exchange_weak(current, k)) {
        }
        return;
      }
    }
  };

  auto worker = [&] {
    try {
      for (std::size_t k = next++; k < total; k = next++) {
        if (k > best.load()) break;
        run_task(k);
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      best.store(0);
    }
  };

  std::size_t threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(total, 1));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  const std::size_t found = best.load();
  const std::size_t examined = found == kNone ? total : found + 1;
  std::size_t skipped = 0;
  for (std::size_t k = 0; k < examined; ++k) skipped += results[k].skipped;

  AxiomVerdict out = found == kNone ? AxiomVerdict{} : *results[found].counterexample;
  out.axiom = axiom;
  out.index_name = idx.name();
  out.verdict = found == kNone ? Verdict::kSatisfiedOnSample : Verdict::kCounterexampleFound;
  out.instances_checked = examined;
  out.instances_skipped = skipped;
  return out;
}

AxiomMatrix axiom_matrix(std::span<const Index> indices, std::size_t budget, std::uint64_t seed,
                         const SearchOptions& options) {
  AxiomMatrix matrix;
  for (const auto& idx : indices) {
    matrix.indices.push_back(idx.name());
    auto& row = matrix.cells.emplace_back();
    for (Axiom axiom : kMatrixAxioms) {
      row.push_back(search_counterexample(idx, axiom, generator_for(axiom, seed), budget, options));
    }
  }
  return matrix;
}

std::optional<bool> expected_verdict(std::string_view index_name, Axiom axiom) {
  struct Row {
    std::string_view index;
    // additivity, null, pairwise, individual, global, artists
    std::array<bool, 6> satisfied;
  };
  static constexpr Row kRows[] = {
      {"pro-rata", {true, true, true, true, false, true}},
      {"user-centric", {true, true, true, false, true, false}},
      {"shapley", {true, true, false, false, true, true}},
      {"equal-division", {true, false, false, true, true, true}},
      {"spotify", {false, true, false, true, false, true}},
      // equal individual impact fails: t = [[2,0],[3,3]], artist 2, users a/b
      {"squared-blend", {false, true, true, false, true, false}},
      {"top-takes-all", {false, true, false, false, true, false}},
      {"binary", {false, true, false, true, false, true}},
  };
  const auto column = std::find(kMatrixAxioms.begin(), kMatrixAxioms.end(), axiom);
  if (column == kMatrixAxioms.end()) return std::nullopt;
  for (const auto& row : kRows) {
    if (row.index == index_name) {
      return row.satisfied[static_cast<std::size_t>(column - kMatrixAxioms.begin())];
    }
  }
  return std::nullopt;
}

}  // namespace streamshare
