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

#ifndef ARGAGG_AGGREGATION_HPP_
#define ARGAGG_AGGREGATION_HPP_

#include <algorithm>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "argagg/af.hpp"
#include "argagg/lattice.hpp"

namespace argagg {

/// Agents in submission order with one ballot each. Operators see only the
/// deduplicated ballot set; the agent list is kept for per-agent analysis.
class Profile {
 public:
  Profile() = default;

  Profile(std::vector<std::string> agents, std::vector<Labeling> ballots)
      : agents_(std::move(agents)), ballots_(std::move(ballots)) {
    if (agents_.size() != ballots_.size())
      throw DomainError("profile needs exactly one ballot per agent");
    if (agents_.empty()) throw ArityError("profile has no agents");
    for (std::size_t i = 0; i < agents_.size(); ++i) {
      for (std::size_t j = 0; j < i; ++j)
        if (agents_[i] == agents_[j])
          throw DomainError("duplicate agent '" + agents_[i] + "'");
      check_domain(ballots_[0], ballots_[i]);
    }
    rebuild();
  }

  /// Anonymous agents named 1..n.
  static Profile of(std::vector<Labeling> ballots) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < ballots.size(); ++i)
      names.push_back(std::to_string(i + 1));
    return Profile(std::move(names), std::move(ballots));
  }

  std::size_t size() const noexcept { return agents_.size(); }
  std::size_t domain_size() const noexcept { return ballots_.front().size(); }

  const std::vector<std::string>& agents() const noexcept { return agents_; }
  const std::vector<Labeling>& ballots() const noexcept { return ballots_; }
  const std::vector<Labeling>& distinct() const noexcept { return distinct_; }

  const Labeling& ballot(std::size_t agent) const { return ballots_.at(agent); }
  const Labeling& ballot(std::string_view agent) const {
    return ballots_[agent_index(agent)];
  }

  std::size_t agent_index(std::string_view agent) const {
    for (std::size_t i = 0; i < agents_.size(); ++i)
      if (agents_[i] == agent) return i;
    throw DomainError("unknown agent '" + std::string(agent) + "'");
  }

  /// Copy with agent k's ballot replaced.
  Profile replaced(std::size_t agent, const Labeling& l) const {
    check_domain(ballots_.at(agent), l);
    Profile p = *this;
    p.ballots_[agent] = l;
    p.rebuild();
    return p;
  }

  friend bool operator==(const Profile& a, const Profile& b) {
    return a.agents_ == b.agents_ && a.ballots_ == b.ballots_;
  }

 private:
  void rebuild() {
    distinct_ = ballots_;
    std::sort(distinct_.begin(), distinct_.end());
    distinct_.erase(std::unique(distinct_.begin(), distinct_.end()),
                    distinct_.end());
  }

  std::vector<std::string> agents_;
  std::vector<Labeling> ballots_;
  std::vector<Labeling> distinct_;
};

enum class OperatorKind { skeptical, credulous, super_credulous };

inline constexpr OperatorKind kAllOperators[] = {
    OperatorKind::skeptical, OperatorKind::credulous,
    OperatorKind::super_credulous};

constexpr std::string_view to_string(OperatorKind k) noexcept {
  switch (k) {
    case OperatorKind::skeptical:
      return "skeptical";
    case OperatorKind::credulous:
      return "credulous";
    default:
      return "super-credulous";
  }
}

struct AggregationOptions {
  /// Each ballot must satisfy this semantics.
  SemanticsKind ballot_gate = SemanticsKind::complete;
};

namespace detail {

template <typename Range>
Labeling aggregate_unchecked(const ArgumentationFramework& af,
                             const Range& ballots, OperatorKind op) {
  switch (op) {
    case OperatorKind::skeptical:
      return down_admissible_unchecked(af, skeptical_initial(ballots));
    case OperatorKind::credulous:
      return down_admissible_unchecked(af, credulous_initial(ballots));
    default:
      return up_complete_unchecked(
          af, down_admissible_unchecked(af, credulous_initial(ballots)));
  }
}

}  // namespace detail

inline void check_ballots(const ArgumentationFramework& af,
                          const Profile& profile, SemanticsKind gate) {
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const Labeling& b = profile.ballot(i);
    check_domain(af, b);
    if (!satisfies(af, b, gate))
      throw BallotError(profile.agents()[i],
                        "ballot of agent '" + profile.agents()[i] +
                            "' is not " + std::string(to_string(gate)));
  }
}

/// so = (meet P) down, co = (join P) down, sco = ((join P) down) up.
inline Labeling aggregate(const ArgumentationFramework& af,
                          const Profile& profile, OperatorKind op,
                          const AggregationOptions& opts = {}) {
  check_ballots(af, profile, opts.ballot_gate);
  return detail::aggregate_unchecked(af, profile.distinct(), op);
}

/// True iff the outcome is compatible with every ballot.
inline bool is_compatible_operator_witness(const ArgumentationFramework& af,
                                           const Profile& profile,
                                           OperatorKind op,
                                           const AggregationOptions& opts = {}) {
  const Labeling outcome = aggregate(af, profile, op, opts);
  return std::all_of(profile.ballots().begin(), profile.ballots().end(),
                     [&](const Labeling& b) {
                       return detail::compatible_unchecked(outcome, b);
                     });
}

}  // namespace argagg

#endif  // ARGAGG_AGGREGATION_HPP_
