//  Copyright 2026 The argagg Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef ARGAGG_ANALYSIS_HPP_
#define ARGAGG_ANALYSIS_HPP_

#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "argagg/aggregation.hpp"
#include "argagg/issues.hpp"
#include "argagg/lattice.hpp"
#include "argagg/metrics.hpp"
#include "argagg/preferences.hpp"

namespace argagg {

enum class CandidateSetKind { adm_leq, adm_compat, comp_compat };

constexpr std::string_view to_string(CandidateSetKind k) noexcept {
  switch (k) {
    case CandidateSetKind::adm_leq:
      return "adm-leq";
    case CandidateSetKind::adm_compat:
      return "adm-compat";
    default:
      return "comp-compat";
  }
}

/// Candidate set matched to each operator.
constexpr CandidateSetKind default_candidates(OperatorKind op) noexcept {
  switch (op) {
    case OperatorKind::skeptical:
      return CandidateSetKind::adm_leq;
    case OperatorKind::credulous:
      return CandidateSetKind::adm_compat;
    default:
      return CandidateSetKind::comp_compat;
  }
}

namespace detail {

inline bool in_candidate_set(const Labeling& l, const std::vector<Labeling>& ballots,
                             CandidateSetKind kind) noexcept {
  for (const auto& b : ballots) {
    const bool ok = kind == CandidateSetKind::adm_leq
                        ? leq_unchecked(l, b)
                        : compatible_unchecked(l, b);
    if (!ok) return false;
  }
  return true;
}

/// Filters pre-enumerated admissible (or complete) labelings.
inline std::vector<Labeling> filter_candidates(
    const std::vector<Labeling>& pool, const std::vector<Labeling>& ballots,
    CandidateSetKind kind) {
  std::vector<Labeling> r;
  for (const auto& l : pool)
    if (in_candidate_set(l, ballots, kind)) r.push_back(l);
  return r;
}

}  // namespace detail

inline std::vector<Labeling> candidate_set(const ArgumentationFramework& af,
                                           const Profile& profile,
                                           CandidateSetKind kind,
                                           const EnumerationOptions& opts = {}) {
  for (const auto& b : profile.ballots()) check_domain(af, b);
  const SemanticsKind sem = kind == CandidateSetKind::comp_compat
                                ? SemanticsKind::complete
                                : SemanticsKind::admissible;
  return detail::filter_candidates(enumerate_labelings(af, sem, opts),
                                   profile.distinct(), kind);
}

namespace detail {

inline void check_partition_for(const PreferenceProfile& prefs,
                                const IssuePartition* p) {
  if (prefs.needs_partition() && p == nullptr)
    throw ConfigError("issue-wise preference classes need an issue partition");
}

inline std::vector<Score> scores(const PreferenceProfile& prefs,
                                 const Labeling& l, const IssuePartition* p) {
  std::vector<Score> s;
  s.reserve(prefs.size());
  for (const auto& a : prefs.agents()) s.push_back(score(a, l, p));
  return s;
}

inline bool dominates(const PreferenceProfile& prefs,
                      const std::vector<Score>& x,
                      const std::vector<Score>& y) noexcept {
  bool strict = false;
  for (std::size_t i = 0; i < prefs.size(); ++i) {
    const MeasureKind m = prefs[i].measure;
    if (!weak_prefers(m, x[i], y[i])) return false;
    if (!strict && !weak_prefers(m, y[i], x[i])) strict = true;
  }
  return strict;
}

}  // namespace detail

/// Everyone weakly prefers `l` to `l2`, and someone strictly.
inline bool pareto_dominates(const Labeling& l, const Labeling& l2,
                             const PreferenceProfile& prefs,
                             const IssuePartition* p = nullptr) {
  detail::check_partition_for(prefs, p);
  return detail::dominates(prefs, detail::scores(prefs, l, p),
                           detail::scores(prefs, l2, p));
}

/// Returns the first candidate dominating `l`, or nothing if `l` is Pareto
/// optimal in `candidates`.
inline std::optional<Labeling> pareto_dominator(
    const Labeling& l, const std::vector<Labeling>& candidates,
    const PreferenceProfile& prefs, const IssuePartition* p = nullptr) {
  detail::check_partition_for(prefs, p);
  const auto base = detail::scores(prefs, l, p);
  for (const auto& c : candidates)
    if (detail::dominates(prefs, detail::scores(prefs, c, p), base)) return c;
  return std::nullopt;
}

inline bool is_pareto_optimal(const Labeling& l,
                              const std::vector<Labeling>& candidates,
                              const PreferenceProfile& prefs,
                              const IssuePartition* p = nullptr) {
  return !pareto_dominator(l, candidates, prefs, p).has_value();
}

enum class LieClass { benevolent, malicious, neutral };

constexpr std::string_view to_string(LieClass c) noexcept {
  switch (c) {
    case LieClass::benevolent:
      return "benevolent";
    case LieClass::malicious:
      return "malicious";
    default:
      return "neutral";
  }
}

struct LieReport {
  std::string agent;
  Labeling true_ballot;
  Labeling lie;
  Labeling honest_outcome;
  Labeling lie_outcome;
  LieClass classification = LieClass::neutral;
};

/// Benevolent: every agent weakly prefers the new outcome and some other
/// agent strictly prefers it. Malicious: some other agent strictly prefers
/// the old outcome. Neutral otherwise.
inline LieClass classify_lie(const PreferenceProfile& prefs, std::size_t liar,
                             const Labeling& honest, const Labeling& lied,
                             const IssuePartition* p = nullptr) {
  bool all_weak = true, other_gains = false, other_loses = false;
  for (std::size_t j = 0; j < prefs.size(); ++j) {
    const Relation r = relate(prefs[j], lied, honest, p);
    if (r == Relation::strict_2 || r == Relation::incomparable) all_weak = false;
    if (j == liar) continue;
    if (r == Relation::strict_1) other_gains = true;
    if (r == Relation::strict_2) other_loses = true;
  }
  if (other_loses) return LieClass::malicious;
  if (all_weak && other_gains) return LieClass::benevolent;
  return LieClass::neutral;
}

struct LieSearchOptions {
  SemanticsKind lie_space = SemanticsKind::complete;
  EnumerationOptions enumeration;
  /// Stop after the first lie.
  bool first_only = false;
};

namespace detail {

/// Core lie search over a pre-enumerated lie space. Ballot gating is the
/// caller's job.
inline std::vector<LieReport> strategic_lies(
    const ArgumentationFramework& af, const Profile& profile, OperatorKind op,
    const PreferenceProfile& prefs, std::size_t liar,
    const std::vector<Labeling>& lie_space, const IssuePartition* p,
    bool first_only) {
  std::vector<LieReport> out;
  const Labeling& truth = profile.ballot(liar);
  const Labeling honest = aggregate_unchecked(af, profile.distinct(), op);
  const AgentPreference& me = prefs[liar];
  const Score honest_score = score(me, honest, p);
  for (const auto& lie : lie_space) {
    if (lie == truth) continue;
    const Profile lied_profile = profile.replaced(liar, lie);
    const Labeling outcome =
        aggregate_unchecked(af, lied_profile.distinct(), op);
    if (outcome == honest) continue;
    if (relate(me.measure, score(me, outcome, p), honest_score) !=
        Relation::strict_1)
      continue;
    out.push_back({profile.agents()[liar], truth, lie, honest, outcome,
                   classify_lie(prefs, liar, honest, outcome, p)});
    if (first_only) break;
  }
  return out;
}

}  // namespace detail

/// All lies by `liar` from the lie space whose outcome the liar strictly
/// prefers (measured against their true ballot) to the honest outcome.
inline std::vector<LieReport> find_strategic_lies(
    const ArgumentationFramework& af, const Profile& profile, OperatorKind op,
    const PreferenceProfile& prefs, std::string_view liar,
    const IssuePartition* p = nullptr, const LieSearchOptions& opts = {}) {
  const std::size_t k = profile.agent_index(liar);
  if (prefs.size() != profile.size())
    throw DomainError("preference profile does not match the ballot profile");
  detail::check_partition_for(prefs, p);
  check_ballots(af, profile, SemanticsKind::all);
  const auto space = enumerate_labelings(af, opts.lie_space, opts.enumeration);
  return detail::strategic_lies(af, profile, op, prefs, k, space, p,
                                opts.first_only);
}

/// Calls `fn` on every multiset of `k` items drawn from `n` (as
/// non-decreasing index vectors, lexicographic).
template <typename Fn>
void for_each_multiset(std::size_t n, std::size_t k, Fn&& fn) {
  if (n == 0) return;
  std::vector<std::size_t> idx(k, 0);
  for (;;) {
    if (!fn(static_cast<const std::vector<std::size_t>&>(idx))) return;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - 1) --i;
    if (i == 0) return;
    const std::size_t v = idx[i - 1] + 1;
    for (std::size_t j = i - 1; j < k; ++j) idx[j] = v;
  }
}

struct StrategyProofResult {
  bool strategy_proof = true;
  std::optional<LieReport> witness;
  Profile profile;
  std::size_t profiles_tested = 0;
};

/// Exhaustive check over all `n_agents`-agent profiles of complete ballots
/// (as multisets; every agent is tried as the liar).
inline StrategyProofResult check_strategy_proof(
    const ArgumentationFramework& af, OperatorKind op, MeasureKind measure,
    std::size_t n_agents, SemanticsKind lie_space = SemanticsKind::complete,
    const EnumerationOptions& opts = {}) {
  if (n_agents == 0) throw ArityError("strategy-proofness needs an agent");
  const auto comps = enumerate_labelings(af, SemanticsKind::complete, opts);
  const auto space = lie_space == SemanticsKind::complete
                         ? comps
                         : enumerate_labelings(af, lie_space, opts);
  std::optional<IssuePartition> part;
  if (is_issue_measure(measure))
    part = detail::issue_partition_from(af.size(), comps);
  const IssuePartition* p = part ? &*part : nullptr;
  StrategyProofResult res;
  for_each_multiset(comps.size(), n_agents, [&](const auto& idx) {
    std::vector<Labeling> ballots;
    for (auto i : idx) ballots.push_back(comps[i]);
    const Profile profile = Profile::of(std::move(ballots));
    const auto prefs = PreferenceProfile::homogeneous(profile, measure);
    ++res.profiles_tested;
    for (std::size_t k = 0; k < n_agents; ++k) {
      auto lies =
          detail::strategic_lies(af, profile, op, prefs, k, space, p, true);
      if (!lies.empty()) {
        res.strategy_proof = false;
        res.witness = lies.front();
        res.profile = profile;
        return false;
      }
    }
    return true;
  });
  return res;
}

/// Directed graph with each ordered pair (self-loops included) present with
/// probability `edge_prob`. Arguments are named a1..an.
inline ArgumentationFramework random_framework(std::uint64_t seed,
                                               std::size_t n_args,
                                               double edge_prob) {
  if (n_args > kMaxArguments)
    throw SizeError("frameworks support at most " +
                    std::to_string(kMaxArguments) + " arguments");
  if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
    throw ConfigError("edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n_args; ++i)
    names.push_back("a" + std::to_string(i + 1));
  std::vector<std::pair<std::size_t, std::size_t>> attacks;
  for (std::size_t i = 0; i < n_args; ++i)
    for (std::size_t j = 0; j < n_args; ++j) {
      // 53-bit uniform in [0,1); fixed formula keeps output identical
      // across standard library implementations
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < edge_prob) attacks.emplace_back(i, j);
    }
  return ArgumentationFramework::from_indices(std::move(names), attacks);
}

}  // namespace argagg

#endif  // ARGAGG_ANALYSIS_HPP_
