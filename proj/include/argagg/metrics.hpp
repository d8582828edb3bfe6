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

#ifndef ARGAGG_METRICS_HPP_
#define ARGAGG_METRICS_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "argagg/af.hpp"
#include "argagg/issues.hpp"

namespace argagg {

enum class MeasureKind { hs, hd, iws, iwd, iuo_hs, iuo_hd, iuo_iws, iuo_iwd };

inline constexpr MeasureKind kAllMeasures[] = {
    MeasureKind::hs,     MeasureKind::hd,     MeasureKind::iws,
    MeasureKind::iwd,    MeasureKind::iuo_hs, MeasureKind::iuo_hd,
    MeasureKind::iuo_iws, MeasureKind::iuo_iwd};

constexpr std::string_view to_string(MeasureKind m) noexcept {
  switch (m) {
    case MeasureKind::hs:
      return "hs";
    case MeasureKind::hd:
      return "hd";
    case MeasureKind::iws:
      return "iws";
    case MeasureKind::iwd:
      return "iwd";
    case MeasureKind::iuo_hs:
      return "iuo-hs";
    case MeasureKind::iuo_hd:
      return "iuo-hd";
    case MeasureKind::iuo_iws:
      return "iuo-iws";
    default:
      return "iuo-iwd";
  }
}

inline MeasureKind parse_measure(std::string_view s) {
  for (MeasureKind m : kAllMeasures)
    if (to_string(m) == s) return m;
  throw ConfigError("unknown measure '" + std::string(s) +
                    "' (expected hs, hd, iws, iwd, iuo-hs, iuo-hd, iuo-iws, "
                    "iuo-iwd)");
}

/// Set-valued measures induce partial orders, distances total preorders.
constexpr bool is_set_measure(MeasureKind m) noexcept {
  return m == MeasureKind::hs || m == MeasureKind::iws ||
         m == MeasureKind::iuo_hs || m == MeasureKind::iuo_iws;
}

constexpr bool is_issue_measure(MeasureKind m) noexcept {
  return m == MeasureKind::iws || m == MeasureKind::iwd ||
         m == MeasureKind::iuo_iws || m == MeasureKind::iuo_iwd;
}

constexpr bool is_iuo_measure(MeasureKind m) noexcept {
  return m == MeasureKind::iuo_hs || m == MeasureKind::iuo_hd ||
         m == MeasureKind::iuo_iws || m == MeasureKind::iuo_iwd;
}

/// Set measure with the same granularity and weighting.
constexpr MeasureKind set_counterpart(MeasureKind m) noexcept {
  switch (m) {
    case MeasureKind::hd:
      return MeasureKind::hs;
    case MeasureKind::iwd:
      return MeasureKind::iws;
    case MeasureKind::iuo_hd:
      return MeasureKind::iuo_hs;
    case MeasureKind::iuo_iwd:
      return MeasureKind::iuo_iws;
    default:
      return m;
  }
}

enum class Granularity { argument, issue };

/// A disagreement set. For uniform measures only `first` is used; for IUO
/// measures `first` is the in/out opposition set and `second` the
/// decided/undecided set. Bits index arguments or issue blocks.
struct DisagreementSet {
  Granularity granularity = Granularity::argument;
  bool pair = false;
  Mask first = 0;
  Mask second = 0;

  Mask io() const noexcept { return first; }
  Mask du() const noexcept { return second; }

  friend bool operator==(const DisagreementSet&,
                         const DisagreementSet&) = default;
};

/// Componentwise subset; uniform sets compare on `first` alone.
inline bool pair_subset(const DisagreementSet& a, const DisagreementSet& b) {
  return is_subset(a.first, b.first) && is_subset(a.second, b.second);
}

inline constexpr double kDefaultIuoAlpha = 2.0;

inline void check_alpha(double alpha) {
  if (!(alpha > 1.0 && alpha <= 2.0))
    throw ConfigError("iuo alpha must lie in (1, 2]");
}

namespace detail {

inline Mask diff_mask(const Labeling& a, const Labeling& b) noexcept {
  return (a.in_mask() ^ b.in_mask()) | (a.out_mask() ^ b.out_mask());
}

inline Mask io_mask(const Labeling& a, const Labeling& b) noexcept {
  return (a.in_mask() & b.out_mask()) | (a.out_mask() & b.in_mask());
}

inline Mask du_mask(const Labeling& a, const Labeling& b) noexcept {
  return a.dec_mask() ^ b.dec_mask();
}

inline void check_partition(const Labeling& l, const IssuePartition& p) {
  if (p.domain_size() != l.size())
    throw DomainError("issue partition does not match the labeling domain");
}

}  // namespace detail

inline DisagreementSet hamming_set(const Labeling& a, const Labeling& b) {
  check_domain(a, b);
  return {Granularity::argument, false, detail::diff_mask(a, b), 0};
}

inline std::size_t hamming_distance(const Labeling& a, const Labeling& b) {
  check_domain(a, b);
  return count(detail::diff_mask(a, b));
}

/// Blocks on which the labelings differ for some member.
inline DisagreementSet issue_set(const Labeling& a, const Labeling& b,
                                 const IssuePartition& p) {
  check_domain(a, b);
  detail::check_partition(a, p);
  return {Granularity::issue, false, p.blocks_touching(detail::diff_mask(a, b)),
          0};
}

inline std::size_t issue_distance(const Labeling& a, const Labeling& b,
                                  const IssuePartition& p) {
  return count(issue_set(a, b, p).first);
}

inline DisagreementSet iuo_hamming_sets(const Labeling& a, const Labeling& b) {
  check_domain(a, b);
  return {Granularity::argument, true, detail::io_mask(a, b),
          detail::du_mask(a, b)};
}

inline std::size_t iuo_hamming_distance(const Labeling& a, const Labeling& b) {
  const auto s = iuo_hamming_sets(a, b);
  return 2 * count(s.io()) + count(s.du());
}

inline double iuo_hamming_distance(const Labeling& a, const Labeling& b,
                                   double alpha) {
  check_alpha(alpha);
  const auto s = iuo_hamming_sets(a, b);
  return alpha * static_cast<double>(count(s.io())) +
         static_cast<double>(count(s.du()));
}

inline DisagreementSet iuo_issue_sets(const Labeling& a, const Labeling& b,
                                      const IssuePartition& p) {
  check_domain(a, b);
  detail::check_partition(a, p);
  // A block with an in/out clash on some member counts as an in/out block
  // only, so the distance stays a metric when blocks are not uniform.
  const Mask io = p.blocks_touching(detail::io_mask(a, b));
  return {Granularity::issue, true, io,
          p.blocks_touching(detail::du_mask(a, b)) & ~io};
}

inline std::size_t iuo_issue_distance(const Labeling& a, const Labeling& b,
                                      const IssuePartition& p) {
  const auto s = iuo_issue_sets(a, b, p);
  return 2 * count(s.io()) + count(s.du());
}

inline double iuo_issue_distance(const Labeling& a, const Labeling& b,
                                 const IssuePartition& p, double alpha) {
  check_alpha(alpha);
  const auto s = iuo_issue_sets(a, b, p);
  return alpha * static_cast<double>(count(s.io())) +
         static_cast<double>(count(s.du()));
}

/// Disagreement set under any measure (distance measures yield the set they
/// count). Issue measures need a partition.
inline DisagreementSet disagreement(MeasureKind m, const Labeling& a,
                                    const Labeling& b,
                                    const IssuePartition* p = nullptr) {
  if (is_issue_measure(m) && p == nullptr)
    throw ConfigError("measure '" + std::string(to_string(m)) +
                      "' needs an issue partition");
  switch (set_counterpart(m)) {
    case MeasureKind::hs:
      return hamming_set(a, b);
    case MeasureKind::iws:
      return issue_set(a, b, *p);
    case MeasureKind::iuo_hs:
      return iuo_hamming_sets(a, b);
    default:
      return iuo_issue_sets(a, b, *p);
  }
}

/// Size of a disagreement set: |first| for uniform sets,
/// alpha*|io| + |du| for pairs.
inline double magnitude(const DisagreementSet& s,
                        double alpha = kDefaultIuoAlpha) noexcept {
  if (!s.pair) return static_cast<double>(count(s.first));
  return alpha * static_cast<double>(count(s.first)) +
         static_cast<double>(count(s.second));
}

inline double distance(MeasureKind m, const Labeling& a, const Labeling& b,
                       const IssuePartition* p = nullptr,
                       double alpha = kDefaultIuoAlpha) {
  check_alpha(alpha);
  return magnitude(disagreement(m, a, b, p), alpha);
}

}  // namespace argagg

#endif  // ARGAGG_METRICS_HPP_
