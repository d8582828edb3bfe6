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

#ifndef ARGAGG_PREFERENCES_HPP_
#define ARGAGG_PREFERENCES_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "argagg/aggregation.hpp"
#include "argagg/metrics.hpp"

namespace argagg {

enum class PreferenceFlavor { set, distance };

constexpr PreferenceFlavor flavor(MeasureKind m) noexcept {
  return is_set_measure(m) ? PreferenceFlavor::set : PreferenceFlavor::distance;
}

/// An agent's preference: labelings closer to `top` under `measure` are
/// better.
struct AgentPreference {
  Labeling top;
  MeasureKind measure = MeasureKind::hd;
  double alpha = kDefaultIuoAlpha;
};

enum class Relation { strict_1, strict_2, indifferent, incomparable };

constexpr std::string_view to_string(Relation r) noexcept {
  switch (r) {
    case Relation::strict_1:
      return "strict-1";
    case Relation::strict_2:
      return "strict-2";
    case Relation::indifferent:
      return "indifferent";
    default:
      return "incomparable";
  }
}

/// Disagreement of `l` with the agent's top, precomputed for repeated
/// comparisons.
struct Score {
  DisagreementSet set;
  double size = 0;
};

inline Score score(const AgentPreference& a, const Labeling& l,
                   const IssuePartition* p = nullptr) {
  DisagreementSet s = disagreement(a.measure, l, a.top, p);
  return {s, magnitude(s, a.alpha)};
}

inline bool weak_prefers(MeasureKind m, const Score& x, const Score& y) noexcept {
  if (is_set_measure(m)) return pair_subset(x.set, y.set);
  return x.size <= y.size;
}

inline Relation relate(MeasureKind m, const Score& x, const Score& y) noexcept {
  const bool xy = weak_prefers(m, x, y), yx = weak_prefers(m, y, x);
  if (xy && yx) return Relation::indifferent;
  if (xy) return Relation::strict_1;
  if (yx) return Relation::strict_2;
  return Relation::incomparable;
}

/// `l` is at least as good as `l2` for the agent.
inline bool weak_prefers(const AgentPreference& a, const Labeling& l,
                         const Labeling& l2, const IssuePartition* p = nullptr) {
  return weak_prefers(a.measure, score(a, l, p), score(a, l2, p));
}

inline bool strictly_prefers(const AgentPreference& a, const Labeling& l,
                             const Labeling& l2,
                             const IssuePartition* p = nullptr) {
  return relate(a.measure, score(a, l, p), score(a, l2, p)) == Relation::strict_1;
}

inline Relation relate(const AgentPreference& a, const Labeling& l,
                       const Labeling& l2, const IssuePartition* p = nullptr) {
  return relate(a.measure, score(a, l, p), score(a, l2, p));
}

/// One preference per agent, in profile order.
class PreferenceProfile {
 public:
  PreferenceProfile() = default;

  explicit PreferenceProfile(std::vector<AgentPreference> prefs)
      : prefs_(std::move(prefs)) {}

  /// Every agent's top is their ballot, all with the same measure.
  static PreferenceProfile homogeneous(const Profile& profile, MeasureKind m,
                                       double alpha = kDefaultIuoAlpha) {
    return heterogeneous(profile,
                         std::vector<MeasureKind>(profile.size(), m), alpha);
  }

  static PreferenceProfile heterogeneous(const Profile& profile,
                                         const std::vector<MeasureKind>& ms,
                                         double alpha = kDefaultIuoAlpha) {
    if (ms.size() != profile.size())
      throw DomainError("one preference class is needed per agent");
    check_alpha(alpha);
    std::vector<AgentPreference> prefs;
    for (std::size_t i = 0; i < ms.size(); ++i)
      prefs.push_back({profile.ballot(i), ms[i], alpha});
    return PreferenceProfile(std::move(prefs));
  }

  std::size_t size() const noexcept { return prefs_.size(); }
  const AgentPreference& operator[](std::size_t i) const { return prefs_[i]; }
  const std::vector<AgentPreference>& agents() const noexcept { return prefs_; }

  bool is_homogeneous() const noexcept {
    for (const auto& p : prefs_)
      if (p.measure != prefs_.front().measure) return false;
    return true;
  }

  bool needs_partition() const noexcept {
    for (const auto& p : prefs_)
      if (is_issue_measure(p.measure)) return true;
    return false;
  }

 private:
  std::vector<AgentPreference> prefs_;
};

}  // namespace argagg

#endif  // ARGAGG_PREFERENCES_HPP_
