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

#ifndef ARGAGG_ISSUES_HPP_
#define ARGAGG_ISSUES_HPP_

#include <string>
#include <string_view>
#include <vector>

#include "argagg/af.hpp"

namespace argagg {

/// Partition of the arguments into issues. Each block lists its members in
/// canonical order; the first member is the representative and carries sign
/// +1. A member with sign -1 mirrors the representative's in/out label.
class IssuePartition {
 public:
  IssuePartition() = default;

  /// Builds a partition from explicit blocks (all signs +1 unless given).
  IssuePartition(std::size_t n, std::vector<std::vector<std::size_t>> blocks,
                 std::vector<std::vector<int>> signs = {})
      : n_(n), blocks_(std::move(blocks)), signs_(std::move(signs)) {
    if (n_ > kMaxArguments) throw SizeError("partition domain too large");
    if (signs_.empty())
      for (const auto& b : blocks_) signs_.emplace_back(b.size(), 1);
    if (signs_.size() != blocks_.size())
      throw DomainError("partition signs do not match blocks");
    block_of_.assign(n_, kNone);
    Mask seen = 0;
    for (std::size_t k = 0; k < blocks_.size(); ++k) {
      if (blocks_[k].empty()) throw DomainError("partition has an empty block");
      if (signs_[k].size() != blocks_[k].size())
        throw DomainError("partition signs do not match blocks");
      Mask m = 0;
      for (std::size_t a : blocks_[k]) {
        if (a >= n_) throw DomainError("partition member out of range");
        if (seen & bit(a)) throw DomainError("partition blocks overlap");
        seen |= bit(a);
        m |= bit(a);
        block_of_[a] = k;
      }
      masks_.push_back(m);
    }
    if (seen != full_mask(n_))
      throw DomainError("partition does not cover every argument");
  }

  /// Builds a partition from blocks of argument names.
  static IssuePartition from_names(
      const ArgumentationFramework& af,
      const std::vector<std::vector<std::string>>& blocks) {
    std::vector<std::vector<std::size_t>> idx;
    for (const auto& b : blocks) {
      idx.emplace_back();
      for (const auto& name : b) idx.back().push_back(af.index_of(name));
    }
    return IssuePartition(af.size(), std::move(idx));
  }

  std::size_t domain_size() const noexcept { return n_; }
  std::size_t size() const noexcept { return blocks_.size(); }

  const std::vector<std::vector<std::size_t>>& blocks() const noexcept {
    return blocks_;
  }
  const std::vector<std::size_t>& block(std::size_t k) const {
    return blocks_.at(k);
  }
  const std::vector<int>& signs(std::size_t k) const { return signs_.at(k); }
  Mask block_mask(std::size_t k) const { return masks_.at(k); }
  std::size_t block_of(std::size_t arg) const { return block_of_.at(arg); }

  /// Mask of blocks (bit k = block k) having at least one member in `args`.
  Mask blocks_touching(Mask args) const noexcept {
    Mask r = 0;
    for (std::size_t k = 0; k < masks_.size(); ++k)
      if (masks_[k] & args) r |= bit(k);
    return r;
  }

  friend bool operator==(const IssuePartition& a, const IssuePartition& b) {
    return a.n_ == b.n_ && a.blocks_ == b.blocks_ && a.signs_ == b.signs_;
  }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  std::size_t n_ = 0;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<std::vector<int>> signs_;
  std::vector<Mask> masks_;
  std::vector<std::size_t> block_of_;
};

namespace detail {

inline bool same_everywhere(const std::vector<Labeling>& labs, std::size_t a,
                            std::size_t b) {
  for (const auto& l : labs)
    if (l[a] != l[b]) return false;
  return true;
}

inline bool mirrored_everywhere(const std::vector<Labeling>& labs,
                                std::size_t a, std::size_t b) {
  for (const auto& l : labs) {
    const bool ok = (l[a] == Label::in && l[b] == Label::out) ||
                    (l[a] == Label::out && l[b] == Label::in) ||
                    (l[a] == Label::undec && l[b] == Label::undec);
    if (!ok) return false;
  }
  return true;
}

/// Partition from a precomputed list of complete labelings.
inline IssuePartition issue_partition_from(std::size_t n,
                                           const std::vector<Labeling>& comps) {
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::vector<int>> signs;
  for (std::size_t a = 0; a < n; ++a) {
    bool placed = false;
    for (std::size_t k = 0; k < blocks.size() && !placed; ++k) {
      const std::size_t rep = blocks[k].front();
      int sign = 0;
      if (same_everywhere(comps, rep, a))
        sign = 1;
      else if (mirrored_everywhere(comps, rep, a))
        sign = -1;
      if (sign != 0) {
        blocks[k].push_back(a);
        signs[k].push_back(sign);
        placed = true;
      }
    }
    if (!placed) {
      blocks.push_back({a});
      signs.push_back({1});
    }
  }
  return IssuePartition(n, std::move(blocks), std::move(signs));
}

}  // namespace detail

/// Two arguments are in sync when, across all complete labelings, they carry
/// the same label, or always opposite in/out labels.
inline bool in_sync(const ArgumentationFramework& af, std::string_view a,
                    std::string_view b, const EnumerationOptions& opts = {}) {
  const std::size_t ia = af.index_of(a), ib = af.index_of(b);
  const auto comps = enumerate_labelings(af, SemanticsKind::complete, opts);
  return detail::same_everywhere(comps, ia, ib) ||
         detail::mirrored_everywhere(comps, ia, ib);
}

/// Equivalence classes of in_sync over complete semantics.
inline IssuePartition issue_partition(const ArgumentationFramework& af,
                                      const EnumerationOptions& opts = {}) {
  return detail::issue_partition_from(
      af.size(), enumerate_labelings(af, SemanticsKind::complete, opts));
}

}  // namespace argagg

#endif  // ARGAGG_ISSUES_HPP_
