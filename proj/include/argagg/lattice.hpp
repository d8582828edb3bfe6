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

#ifndef ARGAGG_LATTICE_HPP_
#define ARGAGG_LATTICE_HPP_

#include <bit>
#include <string_view>

#include "argagg/af.hpp"

namespace argagg {

enum class CommitmentOrder { leq, geq, equal, incomparable };

constexpr std::string_view to_string(CommitmentOrder o) noexcept {
  switch (o) {
    case CommitmentOrder::leq:
      return "leq";
    case CommitmentOrder::geq:
      return "geq";
    case CommitmentOrder::equal:
      return "equal";
    default:
      return "incomparable";
  }
}

namespace detail {

inline bool leq_unchecked(const Labeling& a, const Labeling& b) noexcept {
  return is_subset(a.in_mask(), b.in_mask()) &&
         is_subset(a.out_mask(), b.out_mask());
}

inline bool compatible_unchecked(const Labeling& a, const Labeling& b) noexcept {
  return (a.in_mask() & b.out_mask()) == 0 && (a.out_mask() & b.in_mask()) == 0;
}

}  // namespace detail

/// in(a) is a subset of in(b) and out(a) a subset of out(b).
inline bool leq_committed(const Labeling& a, const Labeling& b) {
  check_domain(a, b);
  return detail::leq_unchecked(a, b);
}

inline CommitmentOrder compare_commitment(const Labeling& a, const Labeling& b) {
  check_domain(a, b);
  const bool le = detail::leq_unchecked(a, b);
  const bool ge = detail::leq_unchecked(b, a);
  if (le && ge) return CommitmentOrder::equal;
  if (le) return CommitmentOrder::leq;
  if (ge) return CommitmentOrder::geq;
  return CommitmentOrder::incomparable;
}

/// No argument is in on one side and out on the other.
inline bool compatible(const Labeling& a, const Labeling& b) {
  check_domain(a, b);
  return detail::compatible_unchecked(a, b);
}

/// Argument-wise meet: in (out) only where every labeling says in (out).
template <typename Range>
Labeling skeptical_initial(const Range& labelings) {
  auto it = std::begin(labelings);
  if (it == std::end(labelings))
    throw ArityError("skeptical initial operator needs a non-empty profile");
  const Labeling& first = *it;
  Mask in = first.in_mask(), out = first.out_mask();
  for (++it; it != std::end(labelings); ++it) {
    check_domain(first, *it);
    in &= it->in_mask();
    out &= it->out_mask();
  }
  return Labeling::from_masks(first.size(), in, out);
}

/// Argument-wise join: in (out) where someone says in (out) and nobody
/// says the opposite.
template <typename Range>
Labeling credulous_initial(const Range& labelings) {
  auto it = std::begin(labelings);
  if (it == std::end(labelings))
    throw ArityError("credulous initial operator needs a non-empty profile");
  const Labeling& first = *it;
  Mask in = 0, out = 0;
  for (; it != std::end(labelings); ++it) {
    check_domain(first, *it);
    in |= it->in_mask();
    out |= it->out_mask();
  }
  const Mask clash = in & out;
  return Labeling::from_masks(first.size(), in & ~clash, out & ~clash);
}

namespace detail {

inline Labeling down_admissible_unchecked(const ArgumentationFramework& af,
                                          const Labeling& l) {
  Mask in = l.in_mask(), out = l.out_mask();
  for (bool changed = true; changed;) {
    changed = false;
    for (Mask m = in; m; m &= m - 1) {
      auto a = static_cast<std::size_t>(std::countr_zero(m));
      if (!is_subset(af.attackers(a), out)) {
        in &= ~bit(a);
        changed = true;
      }
    }
    for (Mask m = out; m; m &= m - 1) {
      auto a = static_cast<std::size_t>(std::countr_zero(m));
      if ((af.attackers(a) & in) == 0) {
        out &= ~bit(a);
        changed = true;
      }
    }
  }
  return Labeling::from_masks(l.size(), in, out);
}

inline Labeling up_complete_unchecked(const ArgumentationFramework& af,
                                      const Labeling& l) {
  Mask in = l.in_mask(), out = l.out_mask();
  for (bool changed = true; changed;) {
    changed = false;
    for (Mask m = af.all() & ~(in | out); m; m &= m - 1) {
      auto a = static_cast<std::size_t>(std::countr_zero(m));
      const Mask att = af.attackers(a);
      if (is_subset(att, out)) {
        in |= bit(a);
        changed = true;
      } else if ((att & in) != 0) {
        out |= bit(a);
        changed = true;
      }
    }
  }
  return Labeling::from_masks(l.size(), in, out);
}

}  // namespace detail

/// Greatest admissible labeling below `l`.
inline Labeling down_admissible(const ArgumentationFramework& af,
                                const Labeling& l) {
  check_domain(af, l);
  return detail::down_admissible_unchecked(af, l);
}

/// Least complete labeling above an admissible `l`.
inline Labeling up_complete(const ArgumentationFramework& af, const Labeling& l) {
  check_domain(af, l);
  if (!detail::admissible_unchecked(af, l))
    throw PreconditionError("up-complete closure requires an admissible labeling");
  return detail::up_complete_unchecked(af, l);
}

/// The least complete labeling.
inline Labeling grounded(const ArgumentationFramework& af) {
  return detail::up_complete_unchecked(af, Labeling::all_undec(af.size()));
}

}  // namespace argagg

#endif  // ARGAGG_LATTICE_HPP_
