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

#ifndef ARGAGG_AF_HPP_
#define ARGAGG_AF_HPP_

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "argagg/errors.hpp"

namespace argagg {

/// One bit per argument, bit i = i-th argument of the framework.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxArguments = 64;

constexpr Mask bit(std::size_t i) noexcept { return Mask{1} << i; }

constexpr Mask full_mask(std::size_t n) noexcept {
  return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1;
}

constexpr std::size_t count(Mask m) noexcept {
  return static_cast<std::size_t>(std::popcount(m));
}

constexpr bool is_subset(Mask a, Mask b) noexcept { return (a & ~b) == 0; }

enum class Label : std::uint8_t { in = 0, out = 1, undec = 2 };

constexpr std::string_view to_string(Label l) noexcept {
  switch (l) {
    case Label::in:
      return "in";
    case Label::out:
      return "out";
    default:
      return "undec";
  }
}

/// A total map from arguments to labels, stored as the (in, out) masks;
/// undec is the complement. Labelings carry their domain size only, so two
/// labelings are comparable iff their sizes agree.
class Labeling {
 public:
  Labeling() = default;

  static Labeling all_undec(std::size_t n) {
    check_size(n);
    Labeling l;
    l.size_ = n;
    return l;
  }

  static Labeling from_masks(std::size_t n, Mask in, Mask out) {
    check_size(n);
    if ((in & out) != 0)
      throw DomainError("labeling assigns both in and out to one argument");
    if (!is_subset(in | out, full_mask(n)))
      throw DomainError("labeling mask exceeds its argument domain");
    Labeling l;
    l.size_ = n;
    l.in_ = in;
    l.out_ = out;
    return l;
  }

  std::size_t size() const noexcept { return size_; }

  Mask in_mask() const noexcept { return in_; }
  Mask out_mask() const noexcept { return out_; }
  Mask dec_mask() const noexcept { return in_ | out_; }
  Mask undec_mask() const noexcept { return full_mask(size_) & ~(in_ | out_); }

  Label operator[](std::size_t i) const noexcept {
    if (in_ & bit(i)) return Label::in;
    if (out_ & bit(i)) return Label::out;
    return Label::undec;
  }

  Labeling with(std::size_t i, Label l) const {
    if (i >= size_) throw DomainError("argument index out of range");
    Labeling r = *this;
    r.in_ &= ~bit(i);
    r.out_ &= ~bit(i);
    if (l == Label::in) r.in_ |= bit(i);
    if (l == Label::out) r.out_ |= bit(i);
    return r;
  }

  friend bool operator==(const Labeling&, const Labeling&) = default;

  /// Total order matching enumeration order: argument 0 most significant,
  /// in < out < undec.
  friend bool operator<(const Labeling& a, const Labeling& b) noexcept {
    if (a.size_ != b.size_) return a.size_ < b.size_;
    Mask diff = (a.in_ ^ b.in_) | (a.out_ ^ b.out_);
    if (diff == 0) return false;
    std::size_t first = static_cast<std::size_t>(std::countr_zero(diff));
    return static_cast<int>(a[first]) < static_cast<int>(b[first]);
  }

 private:
  static void check_size(std::size_t n) {
    if (n > kMaxArguments)
      throw SizeError("labelings support at most " +
                      std::to_string(kMaxArguments) + " arguments");
  }

  std::size_t size_ = 0;
  Mask in_ = 0;
  Mask out_ = 0;
};

struct LabelingHash {
  std::size_t operator()(const Labeling& l) const noexcept {
    std::uint64_t h = l.in_mask() * 0x9E3779B97F4A7C15ULL;
    h ^= l.out_mask() + 0x632BE59BD9B4E019ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h ^ l.size());
  }
};

/// Directed defeat graph over named arguments. Immutable once built; the
/// argument order given at construction is the canonical order used by
/// every enumeration and by JSON output.
class ArgumentationFramework {
 public:
  using Attack = std::pair<std::string, std::string>;

  ArgumentationFramework() = default;

  ArgumentationFramework(std::vector<std::string> arguments,
                         const std::vector<Attack>& attacks)
      : names_(std::move(arguments)) {
    if (names_.size() > kMaxArguments)
      throw SizeError("frameworks support at most " +
                      std::to_string(kMaxArguments) + " arguments");
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!index_.emplace(names_[i], i).second)
        throw DomainError("duplicate argument '" + names_[i] + "'");
    }
    attackers_.assign(names_.size(), 0);
    for (const auto& [from, to] : attacks) add_attack(index_of(from), index_of(to));
    std::sort(attacks_.begin(), attacks_.end());
  }

  /// Index-based construction, used by generators.
  static ArgumentationFramework from_indices(
      std::vector<std::string> arguments,
      const std::vector<std::pair<std::size_t, std::size_t>>& attacks) {
    ArgumentationFramework af(std::move(arguments), {});
    for (auto [from, to] : attacks) {
      if (from >= af.size() || to >= af.size())
        throw DomainError("attack endpoint out of range");
      af.add_attack(from, to);
    }
    std::sort(af.attacks_.begin(), af.attacks_.end());
    return af;
  }

  std::size_t size() const noexcept { return names_.size(); }
  bool empty() const noexcept { return names_.empty(); }

  const std::vector<std::string>& arguments() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }

  bool contains(std::string_view id) const {
    return index_.find(std::string(id)) != index_.end();
  }

  std::size_t index_of(std::string_view id) const {
    auto it = index_.find(std::string(id));
    if (it == index_.end())
      throw DomainError("unknown argument '" + std::string(id) + "'");
    return it->second;
  }

  /// Attackers of argument i as a mask.
  Mask attackers(std::size_t i) const noexcept { return attackers_[i]; }

  bool attacks(std::size_t from, std::size_t to) const noexcept {
    return (attackers_[to] & bit(from)) != 0;
  }

  /// Sorted (attacker, target) index pairs.
  const std::vector<std::pair<std::size_t, std::size_t>>& attack_list()
      const noexcept {
    return attacks_;
  }

  Mask all() const noexcept { return full_mask(size()); }

  /// Builds a labeling from argument names; unnamed arguments are undec.
  Labeling labeling(std::initializer_list<std::string_view> in,
                    std::initializer_list<std::string_view> out) const {
    Mask in_mask = 0, out_mask = 0;
    for (auto id : in) in_mask |= bit(index_of(id));
    for (auto id : out) out_mask |= bit(index_of(id));
    return Labeling::from_masks(size(), in_mask, out_mask);
  }

  friend bool operator==(const ArgumentationFramework& a,
                         const ArgumentationFramework& b) {
    return a.names_ == b.names_ && a.attacks_ == b.attacks_;
  }

 private:
  void add_attack(std::size_t from, std::size_t to) {
    if (attacks(from, to)) return;
    attackers_[to] |= bit(from);
    attacks_.emplace_back(from, to);
  }

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<Mask> attackers_;
  std::vector<std::pair<std::size_t, std::size_t>> attacks_;
};

enum class SemanticsKind { all, admissible, complete };

constexpr std::string_view to_string(SemanticsKind k) noexcept {
  switch (k) {
    case SemanticsKind::all:
      return "all";
    case SemanticsKind::admissible:
      return "admissible";
    default:
      return "complete";
  }
}

inline void check_domain(const ArgumentationFramework& af, const Labeling& l) {
  if (l.size() != af.size())
    throw DomainError("labeling over " + std::to_string(l.size()) +
                      " arguments does not match framework with " +
                      std::to_string(af.size()));
}

inline void check_domain(const Labeling& a, const Labeling& b) {
  if (a.size() != b.size())
    throw DomainError("labelings have different argument domains (" +
                      std::to_string(a.size()) + " vs " +
                      std::to_string(b.size()) + ")");
}

namespace detail {

// Unchecked predicates; callers guarantee the domain matches.

inline bool admissible_unchecked(const ArgumentationFramework& af,
                                 const Labeling& l) noexcept {
  const Mask in = l.in_mask(), out = l.out_mask();
  for (Mask m = in; m; m &= m - 1) {
    auto a = static_cast<std::size_t>(std::countr_zero(m));
    if (!is_subset(af.attackers(a), out)) return false;
  }
  for (Mask m = out; m; m &= m - 1) {
    auto a = static_cast<std::size_t>(std::countr_zero(m));
    if ((af.attackers(a) & in) == 0) return false;
  }
  return true;
}

inline bool complete_unchecked(const ArgumentationFramework& af,
                               const Labeling& l) noexcept {
  if (!admissible_unchecked(af, l)) return false;
  const Mask in = l.in_mask(), out = l.out_mask();
  for (Mask m = l.undec_mask(); m; m &= m - 1) {
    auto a = static_cast<std::size_t>(std::countr_zero(m));
    const Mask att = af.attackers(a);
    if ((att & in) != 0 || is_subset(att, out)) return false;
  }
  return true;
}

}  // namespace detail

/// Every in argument has all attackers out; every out argument has an in
/// attacker.
inline bool is_admissible(const ArgumentationFramework& af, const Labeling& l) {
  check_domain(af, l);
  return detail::admissible_unchecked(af, l);
}

/// Admissible, and every undec argument has no in attacker and at least one
/// attacker that is not out. ("Legal" labelings are the same thing.)
inline bool is_complete(const ArgumentationFramework& af, const Labeling& l) {
  check_domain(af, l);
  return detail::complete_unchecked(af, l);
}

inline bool satisfies(const ArgumentationFramework& af, const Labeling& l,
                      SemanticsKind kind) {
  check_domain(af, l);
  switch (kind) {
    case SemanticsKind::all:
      return true;
    case SemanticsKind::admissible:
      return detail::admissible_unchecked(af, l);
    default:
      return detail::complete_unchecked(af, l);
  }
}

struct EnumerationOptions {
  std::size_t max_arguments = 16;
};

/// Calls `fn` on each of the 3^n total labelings in enumeration order
/// (argument 0 most significant, in < out < undec).
template <typename Fn>
void for_each_labeling(std::size_t n, Fn&& fn) {
  std::vector<std::uint8_t> digit(n, 0);
  Mask in = full_mask(n), out = 0;
  for (;;) {
    fn(Labeling::from_masks(n, in, out));
    // odometer step from the least significant argument (n-1)
    std::size_t i = n;
    while (i > 0) {
      --i;
      const Mask b = bit(i);
      if (digit[i] == 0) {
        digit[i] = 1;
        in &= ~b;
        out |= b;
        break;
      }
      if (digit[i] == 1) {
        digit[i] = 2;
        out &= ~b;
        break;
      }
      digit[i] = 0;
      in |= b;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

/// Filtered scan of all 3^n labelings. Throws SizeError above the cap.
inline std::vector<Labeling> enumerate_labelings(
    const ArgumentationFramework& af, SemanticsKind kind,
    const EnumerationOptions& opts = {}) {
  if (af.size() > opts.max_arguments)
    throw SizeError("framework has " + std::to_string(af.size()) +
                    " arguments; enumeration cap is " +
                    std::to_string(opts.max_arguments));
  std::vector<Labeling> result;
  for_each_labeling(af.size(), [&](const Labeling& l) {
    switch (kind) {
      case SemanticsKind::all:
        result.push_back(l);
        break;
      case SemanticsKind::admissible:
        if (detail::admissible_unchecked(af, l)) result.push_back(l);
        break;
      case SemanticsKind::complete:
        if (detail::complete_unchecked(af, l)) result.push_back(l);
        break;
    }
  });
  return result;
}

}  // namespace argagg

#endif  // ARGAGG_AF_HPP_
