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

#ifndef ARGAGG_SUITE_HPP_
#define ARGAGG_SUITE_HPP_

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "argagg/analysis.hpp"
#include "argagg/io.hpp"

namespace argagg {

struct SuiteOptions {
  std::uint64_t seed = 42;
  /// Every framework up to this size (up to isomorphism) is tested with every
  /// profile of complete ballots.
  std::size_t max_exhaustive_args = 4;
  std::size_t random_frameworks = 1000;
  std::size_t random_min_args = 5;
  std::size_t random_max_args = 7;
  std::size_t min_agents = 2;
  std::size_t max_agents = 3;
  /// Profiles sampled per random framework when the full multiset space is
  /// larger.
  std::size_t profiles_per_framework = 12;
  /// Random frameworks with more complete labelings are skipped.
  std::size_t max_complete_labelings = 64;
  /// Extra random frameworks searched (all profiles of the smallest agent
  /// count, larger counts when few) when some expected counterexample is
  /// still missing.
  std::size_t extended_frameworks = 4000;
  /// Random heterogeneous class assignments per random instance.
  std::size_t heterogeneous_samples = 8;
  /// Also runs skeptical checks on profiles with admissible, non-complete
  /// ballots (reported as informational).
  bool experimental_noncomplete_ballots = false;
};

enum class Expectation { holds, counterexample, informational };

constexpr std::string_view to_string(Expectation e) noexcept {
  switch (e) {
    case Expectation::holds:
      return "holds";
    case Expectation::counterexample:
      return "counterexample";
    default:
      return "informational";
  }
}

struct CheckResult {
  std::string name;
  Expectation expectation = Expectation::holds;
  std::size_t instances_tested = 0;
  std::size_t violations = 0;
  std::optional<json> witness;

  /// holds: no violation. counterexample: a witness was found.
  bool passed() const {
    switch (expectation) {
      case Expectation::holds:
        return violations == 0;
      case Expectation::counterexample:
        return witness.has_value();
      default:
        return true;
    }
  }

  std::string verdict() const {
    if (expectation == Expectation::informational)
      return violations == 0 ? "no-violation" : "violations-found";
    return passed() ? "pass" : "fail";
  }
};

struct SuiteReport {
  SuiteOptions options;
  std::vector<CheckResult> checks;
  json tables;
  std::size_t exhaustive_frameworks = 0;
  std::size_t exhaustive_instances = 0;
  std::size_t random_frameworks = 0;
  std::size_t random_instances = 0;
  std::size_t extended_frameworks = 0;
  std::size_t extended_instances = 0;
  /// Randomly drawn heterogeneous class assignments checked for skeptical
  /// Pareto optimality in the random stage.
  std::size_t random_class_assignments = 0;
  bool tables_match = true;

  bool ok() const {
    return tables_match &&
           std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed(); });
  }

  const CheckResult* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  json to_json() const {
    json checks_json = json::array();
    for (const auto& c : checks) {
      json j = {{"name", c.name},
                {"expectation", to_string(c.expectation)},
                {"verdict", c.verdict()},
                {"instances_tested", c.instances_tested},
                {"violations", c.violations}};
      if (c.witness) j["witness"] = *c.witness;
      checks_json.push_back(std::move(j));
    }
    std::size_t passed = 0, failed = 0;
    for (const auto& c : checks) {
      if (c.expectation == Expectation::informational) continue;
      (c.passed() ? passed : failed)++;
    }
    return {{"options",
             {{"seed", options.seed},
              {"max_exhaustive_args", options.max_exhaustive_args},
              {"random_frameworks", options.random_frameworks},
              {"random_args",
               {options.random_min_args, options.random_max_args}},
              {"agents", {options.min_agents, options.max_agents}},
              {"profiles_per_framework", options.profiles_per_framework},
              {"max_complete_labelings", options.max_complete_labelings},
              {"extended_frameworks", options.extended_frameworks},
              {"heterogeneous_samples", options.heterogeneous_samples},
              {"experimental_noncomplete_ballots",
               options.experimental_noncomplete_ballots}}},
            {"instances",
             {{"exhaustive_frameworks", exhaustive_frameworks},
              {"exhaustive_instances", exhaustive_instances},
              {"random_frameworks", random_frameworks},
              {"random_instances", random_instances},
              {"extended_frameworks", extended_frameworks},
              {"extended_instances", extended_instances},
              {"random_class_assignments", random_class_assignments}}},
            {"summary",
             {{"passed", passed},
              {"failed", failed},
              {"tables_match", tables_match},
              {"ok", ok()}}},
            {"tables", tables},
            {"checks", checks_json}};
  }
};

/// Frameworks on `n` arguments named A, B, ..., one per isomorphism class
/// (the one with the smallest adjacency bitmask), in increasing mask order.
inline std::vector<ArgumentationFramework> canonical_frameworks(std::size_t n) {
  if (n > 4) throw SizeError("canonical enumeration supports at most 4 arguments");
  std::vector<ArgumentationFramework> out;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.emplace_back(1, char('A' + i));
  std::vector<std::size_t> perm(n);
  const std::uint64_t limit = std::uint64_t{1} << (n * n);
  for (std::uint64_t m = 0; m < limit; ++m) {
    std::iota(perm.begin(), perm.end(), 0);
    bool minimal = true;
    do {
      std::uint64_t pm = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if ((m >> (i * n + j)) & 1) pm |= std::uint64_t{1} << (perm[i] * n + perm[j]);
      if (pm < m) {
        minimal = false;
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!minimal) continue;
    std::vector<std::pair<std::size_t, std::size_t>> attacks;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if ((m >> (i * n + j)) & 1) attacks.emplace_back(i, j);
    out.push_back(ArgumentationFramework::from_indices(names, attacks));
  }
  return out;
}

namespace suite_detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Claimed carry-over verdicts on the 8x8 grid of measures, in the order of
/// kAllMeasures. Rows carry over to columns.
inline std::string claimed_carry_over(MeasureKind row, MeasureKind col) {
  auto group = [](MeasureKind m) {
    switch (m) {
      case MeasureKind::hs:
      case MeasureKind::iws:
        return 0;
      case MeasureKind::hd:
        return 1;
      case MeasureKind::iwd:
        return 2;
      case MeasureKind::iuo_hs:
      case MeasureKind::iuo_iws:
        return 3;
      case MeasureKind::iuo_hd:
        return 4;
      default:
        return 5;
    }
  };
  static const char* grid[6][6] = {
      {"Y", "N", "N", "Y*", "N", "N"},   {"Y", "Y", "N", "Y*", "Y*", "N"},
      {"Y", "N", "Y", "Y*", "N", "Y*"},  {"Y*", "N", "N", "Y", "N", "N"},
      {"Y*", "Y*", "N", "Y", "Y", "N"},  {"Y*", "N", "Y*", "Y", "N", "Y"}};
  return grid[group(row)][group(col)];
}

inline std::string claimed_pareto(OperatorKind op, MeasureKind m) {
  if (op == OperatorKind::skeptical || is_set_measure(m)) return "Yes";
  return "No";
}

inline std::string claimed_strategy(OperatorKind op, MeasureKind m) {
  if (op != OperatorKind::skeptical) return "No, and not benevolent";
  if (m == MeasureKind::iuo_hs || m == MeasureKind::iuo_iws) return "Yes";
  return "No, but benevolent";
}

inline std::string mname(MeasureKind m) { return std::string(to_string(m)); }
inline std::string oname(OperatorKind o) { return std::string(to_string(o)); }

struct FrameworkContext {
  const ArgumentationFramework* af = nullptr;
  std::vector<Labeling> comps;
  std::vector<Labeling> adms;
  IssuePartition partition;
};

}  // namespace suite_detail

/// Runs every property and counterexample search over the instance space and
/// builds the verdict tables.
class TheoremSuite {
 public:
  explicit TheoremSuite(SuiteOptions opts = {}) : opts_(opts) {
    if (opts_.min_agents == 0 || opts_.min_agents > opts_.max_agents)
      throw ConfigError("agent range must be non-empty and start at 1 or more");
    if (opts_.random_min_args > opts_.random_max_args)
      throw ConfigError("random argument range is empty");
    if (opts_.max_exhaustive_args > 4)
      throw ConfigError("exhaustive stage supports at most 4 arguments");
    register_checks();
  }

  SuiteReport run() {
    SuiteReport report;
    report.options = opts_;

    for (std::size_t n = 0; n <= opts_.max_exhaustive_args; ++n) {
      for (const auto& af : canonical_frameworks(n)) {
        ++report.exhaustive_frameworks;
        auto fc = context(af);
        framework_checks(fc);
        for (std::size_t k = opts_.min_agents; k <= opts_.max_agents; ++k)
          for_each_multiset(fc.comps.size(), k, [&](const auto& idx) {
            instance(fc, profile_of(fc, idx));
            ++report.exhaustive_instances;
            return true;
          });
        if (opts_.experimental_noncomplete_ballots && n <= 3)
          experimental(fc);
      }
    }

    for (std::size_t i = 0; i < opts_.random_frameworks; ++i) {
      const auto af = random_for(i);
      auto fc = context(af);
      if (fc.comps.size() > opts_.max_complete_labelings) continue;
      ++report.random_frameworks;
      framework_checks(fc);
      std::mt19937_64 rng(suite_detail::splitmix64(opts_.seed ^ (i + 1)));
      report.random_instances += sampled_profiles(fc, rng);
    }

    for (std::size_t i = 0; i < opts_.extended_frameworks && missing_witness();
         ++i) {
      const auto af = random_for(opts_.random_frameworks + i);
      auto fc = context(af);
      if (fc.comps.size() > 24) continue;
      ++report.extended_frameworks;
      for (std::size_t k = opts_.min_agents; k <= opts_.max_agents; ++k) {
        std::size_t total = 1;
        for (std::size_t j = 0; j < k; ++j) total = total * (fc.comps.size() + j) / (j + 1);
        if (k > opts_.min_agents && total > 400) break;
        for_each_multiset(fc.comps.size(), k, [&](const auto& idx) {
          instance(fc, profile_of(fc, idx));
          ++report.extended_instances;
          return true;
        });
      }
    }

    report.random_class_assignments = random_assignments_;
    for (auto& c : checks_) report.checks.push_back(c);
    report.tables = build_tables(report.tables_match);
    return report;
  }

 private:
  CheckResult& check(const std::string& name) {
    auto it = index_.find(name);
    if (it == index_.end()) throw DomainError("unregistered check " + name);
    return checks_[it->second];
  }

  void add(const std::string& name, Expectation e) {
    index_[name] = checks_.size();
    checks_.push_back({name, e, 0, 0, std::nullopt});
  }

  void register_checks() {
    using suite_detail::mname;
    using suite_detail::oname;
    add("aggregation/skeptical-greatest-admissible-lower-bound",
        Expectation::holds);
    add("aggregation/outcomes-compatible-with-ballots", Expectation::holds);
    add("aggregation/credulous-admissible-below-complete-super-credulous",
        Expectation::holds);
    add("aggregation/duplicate-and-permutation-invariance", Expectation::holds);
    add("property/hamming-set-formulas", Expectation::holds);
    add("property/iuo-size-identities", Expectation::holds);
    add("property/more-committed-is-preferred", Expectation::holds);
    add("property/set-preferred-is-more-committed", Expectation::holds);
    add("property/issue-sets-agree-with-hamming-sets", Expectation::holds);
    add("property/issue-sets-agree-with-hamming-sets-admissible",
        Expectation::informational);
    add("property/compatible-uniform-agrees-with-iuo", Expectation::holds);
    add("property/set-dominance-implies-distance-dominance", Expectation::holds);
    add("issues/blocks-uniform-on-complete-labelings", Expectation::holds);
    for (OperatorKind op : kAllOperators)
      for (MeasureKind m : kAllMeasures)
        add("pareto/" + oname(op) + "/" + mname(m),
            suite_detail::claimed_pareto(op, m) == "Yes"
                ? Expectation::holds
                : Expectation::counterexample);
    for (MeasureKind r : kAllMeasures)
      for (MeasureKind c : kAllMeasures) {
        if (r == c) continue;
        const auto claim = suite_detail::claimed_carry_over(r, c);
        add("carry-over/" + mname(r) + "/" + mname(c),
            claim == "N" ? Expectation::counterexample : Expectation::holds);
      }
    add("pareto/iuo-agreement-on-compatible-sets", Expectation::holds);
    add("heterogeneous/skeptical-any-classes", Expectation::holds);
    add("heterogeneous/credulous-set-classes", Expectation::holds);
    add("heterogeneous/super-credulous-set-classes", Expectation::holds);
    add("heterogeneous/hamming-and-iuo-sets-carry-over", Expectation::holds);
    add("heterogeneous/mixed-distance-dominance", Expectation::counterexample);
    add("heterogeneous/skeptical-strategy-proof-iuo-sets", Expectation::holds);
    for (OperatorKind op : kAllOperators)
      for (MeasureKind m : kAllMeasures) {
        const auto claim = suite_detail::claimed_strategy(op, m);
        const auto base = "strategy/" + oname(op) + "/" + mname(m);
        if (claim == "Yes") {
          add(base + "/no-lies", Expectation::holds);
        } else if (claim == "No, but benevolent") {
          add(base + "/lie-exists", Expectation::counterexample);
          add(base + "/lies-benevolent", Expectation::holds);
        } else {
          add(base + "/malicious-lie", Expectation::counterexample);
        }
      }
    add("strategy/iuo-hamming-distance-lies-are-hamming-lies",
        Expectation::holds);
    add("strategy/iuo-issue-distance-lies-are-issue-lies", Expectation::holds);
    add("strategy/single-agent-truthful", Expectation::holds);
    if (opts_.experimental_noncomplete_ballots) {
      add("experimental/noncomplete-ballots/skeptical-pareto",
          Expectation::informational);
      add("experimental/noncomplete-ballots/skeptical-lies-benevolent",
          Expectation::informational);
    }
  }

  bool missing_witness() const {
    return std::any_of(checks_.begin(), checks_.end(), [](const CheckResult& c) {
      return c.expectation == Expectation::counterexample && !c.witness;
    });
  }

  ArgumentationFramework random_for(std::size_t i) const {
    static constexpr double probs[] = {0.15, 0.2, 0.25, 0.3, 0.35};
    const std::size_t span = opts_.random_max_args - opts_.random_min_args + 1;
    const std::size_t n = opts_.random_min_args + i % span;
    const double p = probs[(i / span) % 5];
    return random_framework(suite_detail::splitmix64(opts_.seed + i), n, p);
  }

  static suite_detail::FrameworkContext context(const ArgumentationFramework& af) {
    suite_detail::FrameworkContext fc;
    fc.af = &af;
    fc.comps = enumerate_labelings(af, SemanticsKind::complete);
    fc.adms = enumerate_labelings(af, SemanticsKind::admissible);
    fc.partition = detail::issue_partition_from(af.size(), fc.comps);
    return fc;
  }

  static Profile profile_of(const suite_detail::FrameworkContext& fc,
                            const std::vector<std::size_t>& idx) {
    std::vector<Labeling> ballots;
    for (auto i : idx) ballots.push_back(fc.comps[i]);
    return Profile::of(std::move(ballots));
  }

  std::size_t sampled_profiles(const suite_detail::FrameworkContext& fc,
                               std::mt19937_64& rng) {
    std::size_t count = 0;
    const std::size_t c = fc.comps.size();
    for (std::size_t k = opts_.min_agents; k <= opts_.max_agents; ++k) {
      // number of k-multisets of c items, saturating
      std::size_t total = 1;
      for (std::size_t i = 0; i < k && total <= opts_.profiles_per_framework; ++i)
        total = total * (c + i) / (i + 1);
      if (total <= opts_.profiles_per_framework) {
        for_each_multiset(c, k, [&](const auto& idx) {
          instance(fc, profile_of(fc, idx));
          ++count;
          return true;
        });
        continue;
      }
      for (std::size_t s = 0; s < opts_.profiles_per_framework; ++s) {
        std::vector<std::size_t> idx(k);
        for (auto& x : idx) x = static_cast<std::size_t>(rng() % c);
        std::sort(idx.begin(), idx.end());
        instance(fc, profile_of(fc, idx), &rng);
        ++count;
      }
    }
    return count;
  }

  json witness_base(const suite_detail::FrameworkContext& fc,
                    const Profile& p) const {
    return {{"framework", framework_to_json(*fc.af)},
            {"profile", profile_to_json(*fc.af, p)}};
  }

  json lab(const suite_detail::FrameworkContext& fc, const Labeling& l) const {
    return labeling_to_json(*fc.af, l);
  }

  static json measures_json(const std::vector<MeasureKind>& ms) {
    json j = json::array();
    for (auto m : ms) j.push_back(to_string(m));
    return j;
  }

  void hold(const std::string& name, bool ok, const auto& make_witness) {
    auto& c = check(name);
    ++c.instances_tested;
    if (ok) return;
    ++c.violations;
    if (!c.witness) c.witness = make_witness();
  }

  void found(const std::string& name, const auto& make_witness) {
    auto& c = check(name);
    if (!c.witness) c.witness = make_witness();
  }

  void tested(const std::string& name, std::size_t n = 1) {
    check(name).instances_tested += n;
  }

  // -------------------------------------------------------------------------
  // Per-framework properties over pairs and triples of labelings.

  void framework_checks(const suite_detail::FrameworkContext& fc) {
    const auto& af = *fc.af;
    const IssuePartition* part = &fc.partition;
    // Cap the admissible pool so 7-argument frameworks stay cheap.
    std::vector<Labeling> pool(fc.adms.begin(),
                               fc.adms.begin() + std::min<std::size_t>(fc.adms.size(), 160));
    auto fw = [&] { return json{{"framework", framework_to_json(af)}}; };

    for (const auto& l : fc.comps) {
      for (std::size_t k = 0; k < part->size(); ++k) {
        const Mask b = part->block_mask(k);
        const bool uniform = (l.undec_mask() & b) == 0 || (l.undec_mask() & b) == b;
        bool oriented = true;
        const std::size_t rep = part->block(k).front();
        for (std::size_t m = 0; m < part->block(k).size(); ++m) {
          const std::size_t a = part->block(k)[m];
          const Label want = part->signs(k)[m] > 0 ? l[rep]
                             : l[rep] == Label::in ? Label::out
                             : l[rep] == Label::out ? Label::in
                                                    : Label::undec;
          if (l[a] != want) oriented = false;
        }
        hold("issues/blocks-uniform-on-complete-labelings", uniform && oriented,
             [&] {
               auto w = fw();
               w["labeling"] = lab(fc, l);
               w["partition"] = partition_to_json(af, *part);
               return w;
             });
      }
    }

    for (const auto& a : pool)
      for (const auto& b : pool) {
        const Mask diff = detail::diff_mask(a, b);
        const Mask ua = a.undec_mask(), ub = b.undec_mask();
        const Mask da = a.dec_mask(), db = b.dec_mask();
        bool ok = diff == ((a.in_mask() & (b.out_mask() | ub)) |
                           (a.out_mask() & (b.in_mask() | ub)) |
                           (ua & db));
        if (detail::leq_unchecked(a, b)) ok = ok && diff == (ua & db);
        if (detail::compatible_unchecked(a, b))
          ok = ok && diff == ((da & ub) | (ua & db));
        hold("property/hamming-set-formulas", ok, [&] {
          auto w = fw();
          w["l1"] = lab(fc, a);
          w["l2"] = lab(fc, b);
          return w;
        });
        const auto io = count(detail::io_mask(a, b)), du = count(detail::du_mask(a, b));
        hold("property/iuo-size-identities",
             hamming_distance(a, b) == io + du &&
                 iuo_hamming_distance(a, b) == hamming_distance(a, b) + io,
             [&] {
               auto w = fw();
               w["l1"] = lab(fc, a);
               w["l2"] = lab(fc, b);
               return w;
             });
      }

    for (const auto& top : fc.comps) {
      std::vector<const Labeling*> below;
      for (const auto& l : pool)
        if (detail::leq_unchecked(l, top)) below.push_back(&l);
      for (const Labeling* l : below)
        for (const Labeling* l2 : below) {
          if (!detail::leq_unchecked(*l, *l2)) continue;
          hold("property/more-committed-is-preferred",
               is_subset(detail::diff_mask(*l2, top), detail::diff_mask(*l, top)),
               [&] {
                 auto w = fw();
                 w["top"] = lab(fc, top);
                 w["l"] = lab(fc, *l);
                 w["l_prime"] = lab(fc, *l2);
                 return w;
               });
        }
      for (const Labeling* l : below)
        for (const auto& l2 : pool) {
          if (!is_subset(detail::diff_mask(l2, top), detail::diff_mask(*l, top)))
            continue;
          hold("property/set-preferred-is-more-committed",
               detail::leq_unchecked(*l, l2), [&] {
                 auto w = fw();
                 w["top"] = lab(fc, top);
                 w["l"] = lab(fc, *l);
                 w["l_prime"] = lab(fc, l2);
                 return w;
               });
        }
    }

    auto relation_pairs = [&](const Labeling& top, const Labeling& x,
                              const Labeling& y, MeasureKind m1, MeasureKind m2) {
      AgentPreference p1{top, m1}, p2{top, m2};
      return relate(p1, x, y, part) == relate(p2, x, y, part);
    };
    auto triple_witness = [&](const Labeling& top, const Labeling& x,
                              const Labeling& y) {
      auto w = fw();
      w["partition"] = partition_to_json(af, *part);
      w["top"] = lab(fc, top);
      w["l1"] = lab(fc, x);
      w["l2"] = lab(fc, y);
      return w;
    };

    // Issue-wise sets order labelings exactly like Hamming sets; complete
    // labelings only, since issues are uniform there.
    const std::size_t tri = std::min<std::size_t>(fc.comps.size(), 24);
    for (std::size_t t = 0; t < tri; ++t)
      for (std::size_t i = 0; i < tri; ++i)
        for (std::size_t j = 0; j < tri; ++j) {
          const auto &top = fc.comps[t], &x = fc.comps[i], &y = fc.comps[j];
          hold("property/issue-sets-agree-with-hamming-sets",
               relation_pairs(top, x, y, MeasureKind::hs, MeasureKind::iws) &&
                   relation_pairs(top, x, y, MeasureKind::iuo_hs,
                                  MeasureKind::iuo_iws),
               [&] { return triple_witness(top, x, y); });
        }

    const std::size_t apool = std::min<std::size_t>(pool.size(), 48);
    for (std::size_t t = 0; t < tri; ++t) {
      const auto& top = fc.comps[t];
      for (std::size_t i = 0; i < apool; ++i)
        for (std::size_t j = 0; j < apool; ++j) {
          const auto &x = pool[i], &y = pool[j];
          hold("property/issue-sets-agree-with-hamming-sets-admissible",
               relation_pairs(top, x, y, MeasureKind::hs, MeasureKind::iws) &&
                   relation_pairs(top, x, y, MeasureKind::iuo_hs,
                                  MeasureKind::iuo_iws),
               [&] { return triple_witness(top, x, y); });

          if (detail::compatible_unchecked(top, x) &&
              detail::compatible_unchecked(top, y)) {
            bool ok = true;
            for (auto [m1, m2] : {std::pair{MeasureKind::hs, MeasureKind::iuo_hs},
                                  {MeasureKind::hd, MeasureKind::iuo_hd},
                                  {MeasureKind::iws, MeasureKind::iuo_iws},
                                  {MeasureKind::iwd, MeasureKind::iuo_iwd}})
              ok = ok && relation_pairs(top, x, y, m1, m2);
            hold("property/compatible-uniform-agrees-with-iuo", ok,
                 [&] { return triple_witness(top, x, y); });
          }

          bool ok = true;
          for (MeasureKind d : {MeasureKind::hd, MeasureKind::iwd,
                                MeasureKind::iuo_hd, MeasureKind::iuo_iwd}) {
            AgentPreference ps{top, set_counterpart(d)}, pd{top, d};
            const Relation rs = relate(ps, x, y, part), rd = relate(pd, x, y, part);
            if (rs == Relation::strict_1 && rd != Relation::strict_1) ok = false;
            if (rs == Relation::indifferent && rd != Relation::indifferent) ok = false;
          }
          hold("property/set-dominance-implies-distance-dominance", ok,
               [&] { return triple_witness(top, x, y); });
        }
    }

    // A lone truthful agent can never gain.
    for (const auto& l : fc.comps) {
      const Profile p = Profile::of({l});
      for (OperatorKind op : kAllOperators)
        for (MeasureKind m : kAllMeasures) {
          const auto prefs = PreferenceProfile::homogeneous(p, m);
          const auto lies =
              detail::strategic_lies(af, p, op, prefs, 0, fc.comps, part, true);
          hold("strategy/single-agent-truthful", lies.empty(), [&] {
            auto w = witness_base(fc, p);
            w["operator"] = to_string(op);
            w["measure"] = to_string(m);
            w["lie"] = lie_to_json(af, lies.front());
            return w;
          });
        }
    }
  }

  // -------------------------------------------------------------------------
  // Per-instance checks.

  void instance(const suite_detail::FrameworkContext& fc, const Profile& p,
                std::mt19937_64* rng = nullptr) {
    using suite_detail::mname;
    using suite_detail::oname;
    const auto& af = *fc.af;
    const IssuePartition* part = &fc.partition;
    const auto& ballots = p.distinct();

    std::array<Labeling, 3> outcome;
    for (OperatorKind op : kAllOperators)
      outcome[static_cast<int>(op)] = detail::aggregate_unchecked(af, ballots, op);
    const Labeling& so = outcome[0];
    const Labeling& co = outcome[1];
    const Labeling& sco = outcome[2];

    const auto adm_leq =
        detail::filter_candidates(fc.adms, ballots, CandidateSetKind::adm_leq);
    const auto adm_compat =
        detail::filter_candidates(fc.adms, ballots, CandidateSetKind::adm_compat);
    const auto comp_compat =
        detail::filter_candidates(fc.comps, ballots, CandidateSetKind::comp_compat);
    auto candidates = [&](OperatorKind op) -> const std::vector<Labeling>& {
      switch (op) {
        case OperatorKind::skeptical:
          return adm_leq;
        case OperatorKind::credulous:
          return adm_compat;
        default:
          return comp_compat;
      }
    };

    std::array<PreferenceProfile, 8> prefs;
    for (std::size_t c = 0; c < 8; ++c)
      prefs[c] = PreferenceProfile::homogeneous(p, kAllMeasures[c]);

    auto base = [&] { return witness_base(fc, p); };

    // Aggregation properties.
    {
      bool ok = std::find(adm_leq.begin(), adm_leq.end(), so) != adm_leq.end();
      for (const auto& l : adm_leq) ok = ok && detail::leq_unchecked(l, so);
      hold("aggregation/skeptical-greatest-admissible-lower-bound", ok, [&] {
        auto w = base();
        w["outcome"] = lab(fc, so);
        return w;
      });
      bool compat = true;
      for (const auto& o : outcome)
        for (const auto& b : ballots)
          compat = compat && detail::compatible_unchecked(o, b);
      hold("aggregation/outcomes-compatible-with-ballots", compat,
           [&] { return base(); });
      hold("aggregation/credulous-admissible-below-complete-super-credulous",
           detail::admissible_unchecked(af, co) &&
               detail::complete_unchecked(af, sco) &&
               detail::leq_unchecked(co, sco),
           [&] { return base(); });
      std::vector<std::string> names(p.agents().rbegin(), p.agents().rend());
      std::vector<Labeling> rev(p.ballots().rbegin(), p.ballots().rend());
      names.push_back("dup");
      rev.push_back(p.ballots().front());
      const Profile q(std::move(names), std::move(rev));
      bool inv = true;
      for (OperatorKind op : kAllOperators)
        inv = inv && detail::aggregate_unchecked(af, q.distinct(), op) ==
                         outcome[static_cast<int>(op)];
      hold("aggregation/duplicate-and-permutation-invariance", inv,
           [&] { return base(); });
    }

    // Operator Pareto optimality.
    for (OperatorKind op : kAllOperators)
      for (std::size_t c = 0; c < 8; ++c) {
        const auto name = "pareto/" + oname(op) + "/" + mname(kAllMeasures[c]);
        const auto& out = outcome[static_cast<int>(op)];
        const auto dom = pareto_dominator(out, candidates(op), prefs[c], part);
        auto w = [&] {
          auto j = base();
          j["operator"] = to_string(op);
          j["measure"] = to_string(kAllMeasures[c]);
          j["candidate_set"] = to_string(default_candidates(op));
          j["outcome"] = lab(fc, out);
          j["dominated_by"] = lab(fc, *dom);
          return j;
        };
        auto& chk = check(name);
        if (chk.expectation == Expectation::holds)
          hold(name, !dom.has_value(), w);
        else {
          ++chk.instances_tested;
          if (dom) found(name, w);
        }
      }

    carry_over(fc, p, prefs, comp_compat, adm_compat);
    heterogeneous(fc, p, outcome, adm_leq, adm_compat, comp_compat, rng);
    strategy(fc, p, outcome, prefs);
  }

  /// Pairwise form of Pareto carry-over: optimality under R implies
  /// optimality under C in every subset of a universe iff every C-dominance
  /// between two members is also an R-dominance.
  void carry_over(const suite_detail::FrameworkContext& fc, const Profile& p,
                  const std::array<PreferenceProfile, 8>& prefs,
                  const std::vector<Labeling>& comp_compat,
                  const std::vector<Labeling>& adm_compat) {
    using suite_detail::mname;
    const IssuePartition* part = &fc.partition;
    struct U {
      const char* name;
      bool compatible;
      bool complete;
      const std::vector<Labeling>* labs;
    };
    const U universes[] = {{"complete", false, true, &fc.comps},
                           {"complete-compatible", true, true, &comp_compat},
                           {"admissible-compatible", true, false, &adm_compat}};
    for (const auto& u : universes) {
      const auto& T = *u.labs;
      if (T.size() > 200) continue;
      std::array<std::vector<std::vector<Score>>, 8> sc;
      for (std::size_t c = 0; c < 8; ++c)
        for (const auto& l : T) sc[c].push_back(detail::scores(prefs[c], l, part));
      for (std::size_t x = 0; x < T.size(); ++x)
        for (std::size_t y = 0; y < T.size(); ++y) {
          if (x == y) continue;
          bool d[8];
          for (std::size_t c = 0; c < 8; ++c)
            d[c] = detail::dominates(prefs[c], sc[c][y], sc[c][x]);
          if (u.compatible && !u.complete) {
            const bool agree = d[0] == d[4] && d[1] == d[5] && d[2] == d[6] &&
                               d[3] == d[7];
            hold("pareto/iuo-agreement-on-compatible-sets", agree, [&] {
              auto w = witness_base(fc, p);
              w["universe"] = u.name;
              w["labeling"] = labeling_to_json(*fc.af, T[x]);
              w["other"] = labeling_to_json(*fc.af, T[y]);
              return w;
            });
          }
          for (std::size_t r = 0; r < 8; ++r)
            for (std::size_t c = 0; c < 8; ++c) {
              if (r == c) continue;
              const MeasureKind mr = kAllMeasures[r], mc = kAllMeasures[c];
              // Issue measures are only granularity-consistent on complete
              // labelings.
              if (!u.complete && (is_issue_measure(mr) || is_issue_measure(mc)))
                continue;
              const auto claim = suite_detail::claimed_carry_over(mr, mc);
              const bool violated = d[c] && !d[r];
              auto& cell = observed_[r][c];
              if (violated) (u.compatible ? cell.compatible : cell.general) = true;
              const auto name = "carry-over/" + mname(mr) + "/" + mname(mc);
              auto w = [&] {
                auto j = witness_base(fc, p);
                j["universe"] = u.name;
                j["from"] = to_string(mr);
                j["to"] = to_string(mc);
                j["labeling"] = labeling_to_json(*fc.af, T[x]);
                j["dominated_under_to_by"] = labeling_to_json(*fc.af, T[y]);
                return j;
              };
              if (claim == "Y" || (claim == "Y*" && u.compatible)) {
                hold(name, !violated, w);
              } else if (claim == "N") {
                ++check(name).instances_tested;
                if (violated && u.compatible) found(name, w);
              }
            }
        }
    }
  }

  void heterogeneous(const suite_detail::FrameworkContext& fc, const Profile& p,
                     const std::array<Labeling, 3>& outcome,
                     const std::vector<Labeling>& adm_leq,
                     const std::vector<Labeling>& adm_compat,
                     const std::vector<Labeling>& comp_compat,
                     std::mt19937_64* rng) {
    const IssuePartition* part = &fc.partition;
    const std::size_t k = p.size();
    const MeasureKind sets4[] = {MeasureKind::hs, MeasureKind::iws,
                                 MeasureKind::iuo_hs, MeasureKind::iuo_iws};

    // Assignments: exhaustive over the class pool, or sampled.
    auto each_assignment = [&](std::span<const MeasureKind> pool, bool sample,
                               auto&& fn) {
      std::vector<MeasureKind> ms(k);
      if (sample && rng) {
        for (std::size_t s = 0; s < opts_.heterogeneous_samples; ++s) {
          for (auto& m : ms) m = pool[(*rng)() % pool.size()];
          fn(ms);
        }
        return;
      }
      std::vector<std::size_t> digit(k, 0);
      for (;;) {
        for (std::size_t i = 0; i < k; ++i) ms[i] = pool[digit[i]];
        fn(ms);
        std::size_t i = 0;
        while (i < k && ++digit[i] == pool.size()) digit[i++] = 0;
        if (i == k) return;
      }
    };
    auto assignment_witness = [&](const std::vector<MeasureKind>& ms,
                                  const Labeling& l, const Labeling& dom) {
      auto w = witness_base(fc, p);
      w["classes"] = measures_json(ms);
      w["labeling"] = lab(fc, l);
      w["dominated_by"] = lab(fc, dom);
      return w;
    };

    each_assignment(kAllMeasures, true, [&](const std::vector<MeasureKind>& ms) {
      if (rng) ++random_assignments_;
      const auto prefs = PreferenceProfile::heterogeneous(p, ms);
      const auto dom = pareto_dominator(outcome[0], adm_leq, prefs, part);
      hold("heterogeneous/skeptical-any-classes", !dom,
           [&] { return assignment_witness(ms, outcome[0], *dom); });
    });
    each_assignment(sets4, true, [&](const std::vector<MeasureKind>& ms) {
      const auto prefs = PreferenceProfile::heterogeneous(p, ms);
      const auto d1 = pareto_dominator(outcome[1], adm_compat, prefs, part);
      hold("heterogeneous/credulous-set-classes", !d1,
           [&] { return assignment_witness(ms, outcome[1], *d1); });
      const auto d2 = pareto_dominator(outcome[2], comp_compat, prefs, part);
      hold("heterogeneous/super-credulous-set-classes", !d2,
           [&] { return assignment_witness(ms, outcome[2], *d2); });
    });

    // Optimal for homogeneous HS and IUO_HS implies optimal for any mix.
    if (adm_compat.size() <= 200) {
      const auto hs = PreferenceProfile::homogeneous(p, MeasureKind::hs);
      const auto iuo = PreferenceProfile::homogeneous(p, MeasureKind::iuo_hs);
      const MeasureKind pair[] = {MeasureKind::hs, MeasureKind::iuo_hs};
      for (const auto& l : adm_compat) {
        if (!is_pareto_optimal(l, adm_compat, hs, part) ||
            !is_pareto_optimal(l, adm_compat, iuo, part))
          continue;
        each_assignment(pair, false, [&](const std::vector<MeasureKind>& ms) {
          const auto prefs = PreferenceProfile::heterogeneous(p, ms);
          const auto dom = pareto_dominator(l, adm_compat, prefs, part);
          hold("heterogeneous/hamming-and-iuo-sets-carry-over", !dom,
               [&] { return assignment_witness(ms, l, *dom); });
        });
      }
    }

    // Two labelings: optimal under homogeneous HD and IWD, dominated when the
    // agents mix the two.
    if (k == 2 && !check("heterogeneous/mixed-distance-dominance").witness) {
      ++check("heterogeneous/mixed-distance-dominance").instances_tested;
      const auto hd = PreferenceProfile::homogeneous(p, MeasureKind::hd);
      const auto iwd = PreferenceProfile::homogeneous(p, MeasureKind::iwd);
      const auto mix1 = PreferenceProfile::heterogeneous(
          p, {MeasureKind::hd, MeasureKind::iwd});
      const auto mix2 = PreferenceProfile::heterogeneous(
          p, {MeasureKind::iwd, MeasureKind::hd});
      for (const auto& l : fc.comps)
        for (const auto& x : fc.comps) {
          if (l == x) continue;
          if (pareto_dominates(x, l, hd, part) || pareto_dominates(x, l, iwd, part))
            continue;
          for (const auto* mix : {&mix1, &mix2})
            if (pareto_dominates(x, l, *mix, part))
              found("heterogeneous/mixed-distance-dominance", [&] {
                auto w = witness_base(fc, p);
                std::vector<MeasureKind> ms;
                for (const auto& a : mix->agents()) ms.push_back(a.measure);
                w["classes"] = measures_json(ms);
                w["set"] = json::array({lab(fc, l), lab(fc, x)});
                w["labeling"] = lab(fc, l);
                w["dominated_by"] = lab(fc, x);
                return w;
              });
        }
    }
  }

  void strategy(const suite_detail::FrameworkContext& fc, const Profile& p,
                const std::array<Labeling, 3>& outcome,
                const std::array<PreferenceProfile, 8>& prefs) {
    using suite_detail::mname;
    using suite_detail::oname;
    const auto& af = *fc.af;
    const IssuePartition* part = &fc.partition;
    const std::size_t k = p.size();
    const auto& space = fc.comps;

    for (OperatorKind op : kAllOperators) {
      const Labeling& honest = outcome[static_cast<int>(op)];
      for (std::size_t liar = 0; liar < k; ++liar) {
        const Labeling& truth = p.ballot(liar);
        std::vector<Labeling> results;
        std::vector<const Labeling*> lies;
        for (const auto& lie : space) {
          if (lie == truth) continue;
          const Profile q = p.replaced(liar, lie);
          results.push_back(detail::aggregate_unchecked(af, q.distinct(), op));
          lies.push_back(&lie);
        }
        std::array<std::vector<bool>, 8> gains;
        for (std::size_t c = 0; c < 8; ++c) {
          const MeasureKind m = kAllMeasures[c];
          const AgentPreference& me = prefs[c][liar];
          const Score hs = score(me, honest, part);
          const auto base = "strategy/" + oname(op) + "/" + mname(m);
          const auto claim = suite_detail::claimed_strategy(op, m);
          gains[c].assign(results.size(), false);
          for (std::size_t i = 0; i < results.size(); ++i) {
            if (results[i] == honest) continue;
            if (relate(m, score(me, results[i], part), hs) != Relation::strict_1)
              continue;
            gains[c][i] = true;
            LieReport r{p.agents()[liar], truth, *lies[i], honest, results[i],
                        classify_lie(prefs[c], liar, honest, results[i], part)};
            auto w = [&] {
              auto j = witness_base(fc, p);
              j["operator"] = to_string(op);
              j["measure"] = to_string(m);
              j["lie"] = lie_to_json(af, r);
              return j;
            };
            if (claim == "Yes") {
              hold(base + "/no-lies", false, w);
            } else if (claim == "No, but benevolent") {
              found(base + "/lie-exists", w);
              hold(base + "/lies-benevolent",
                   r.classification == LieClass::benevolent, w);
            } else if (r.classification == LieClass::malicious) {
              found(base + "/malicious-lie", w);
            }
            note_strategy(op, m, r.classification);
          }
          if (claim == "Yes") tested(base + "/no-lies");
          if (claim == "No, but benevolent") tested(base + "/lie-exists");
          if (claim == "No, and not benevolent") tested(base + "/malicious-lie");
        }
        // Outcomes gained under an IUO distance are gained under its
        // uniform counterpart.
        auto subset = [&](std::size_t iuo, std::size_t uni) {
          for (std::size_t i = 0; i < results.size(); ++i)
            if (gains[iuo][i] && !gains[uni][i]) return false;
          return true;
        };
        auto w = [&] {
          auto j = witness_base(fc, p);
          j["operator"] = to_string(op);
          j["liar"] = p.agents()[liar];
          return j;
        };
        hold("strategy/iuo-hamming-distance-lies-are-hamming-lies", subset(5, 1), w);
        hold("strategy/iuo-issue-distance-lies-are-issue-lies", subset(7, 3), w);

        if (op == OperatorKind::skeptical) {
          // Heterogeneous agents drawn from the two IUO set classes.
          for (std::uint32_t bits = 0; bits < (1u << k); ++bits) {
            std::vector<MeasureKind> ms(k);
            for (std::size_t i = 0; i < k; ++i)
              ms[i] = (bits >> i) & 1 ? MeasureKind::iuo_iws : MeasureKind::iuo_hs;
            const auto hp = PreferenceProfile::heterogeneous(p, ms);
            const auto ls =
                detail::strategic_lies(af, p, op, hp, liar, space, part, true);
            hold("heterogeneous/skeptical-strategy-proof-iuo-sets", ls.empty(), [&] {
              auto j = witness_base(fc, p);
              j["classes"] = measures_json(ms);
              j["lie"] = lie_to_json(af, ls.front());
              return j;
            });
          }
        }
      }
    }
  }

  void note_strategy(OperatorKind op, MeasureKind m, LieClass c) {
    auto& cell = sp_observed_[static_cast<int>(op)][static_cast<int>(m)];
    ++cell.lies;
    if (c == LieClass::malicious) ++cell.malicious;
    if (c == LieClass::neutral) ++cell.neutral;
  }

  void experimental(const suite_detail::FrameworkContext& fc) {
    const IssuePartition* part = &fc.partition;
    for_each_multiset(fc.adms.size(), 2, [&](const auto& idx) {
      const Profile p = Profile::of({fc.adms[idx[0]], fc.adms[idx[1]]});
      const Labeling so =
          detail::aggregate_unchecked(*fc.af, p.distinct(), OperatorKind::skeptical);
      const auto cands =
          detail::filter_candidates(fc.adms, p.distinct(), CandidateSetKind::adm_leq);
      for (MeasureKind m : kAllMeasures) {
        const auto prefs = PreferenceProfile::homogeneous(p, m);
        const auto dom = pareto_dominator(so, cands, prefs, part);
        hold("experimental/noncomplete-ballots/skeptical-pareto", !dom, [&] {
          auto w = witness_base(fc, p);
          w["measure"] = to_string(m);
          w["dominated_by"] = lab(fc, *dom);
          return w;
        });
        for (std::size_t liar = 0; liar < 2; ++liar)
          for (const auto& r : detail::strategic_lies(*fc.af, p, OperatorKind::skeptical,
                                                      prefs, liar, fc.adms, part, false))
            hold("experimental/noncomplete-ballots/skeptical-lies-benevolent",
                 r.classification == LieClass::benevolent, [&] {
                   auto w = witness_base(fc, p);
                   w["measure"] = to_string(m);
                   w["lie"] = lie_to_json(*fc.af, r);
                   return w;
                 });
      }
      return true;
    });
  }

  // -------------------------------------------------------------------------
  // Tables

  json build_tables(bool& all_match) const {
    using suite_detail::mname;
    using suite_detail::oname;
    all_match = true;

    json pareto = json::array();
    for (MeasureKind m : kAllMeasures) {
      json row = {{"measure", to_string(m)}};
      for (OperatorKind op : kAllOperators) {
        const auto& c = checks_[index_.at("pareto/" + oname(op) + "/" + mname(m))];
        const std::string claimed = suite_detail::claimed_pareto(op, m);
        std::string generated;
        if (c.expectation == Expectation::holds)
          generated = c.violations == 0 ? "Yes" : "No";
        else
          generated = c.witness ? "No" : "Yes";
        all_match = all_match && claimed == generated;
        row[oname(op)] = {{"claimed", claimed},
                          {"generated", generated},
                          {"match", claimed == generated}};
      }
      pareto.push_back(row);
    }

    json strategy = json::array();
    for (MeasureKind m : kAllMeasures) {
      json row = {{"measure", to_string(m)}};
      for (OperatorKind op : kAllOperators) {
        const auto& cell = sp_observed_[static_cast<int>(op)][static_cast<int>(m)];
        const std::string claimed = suite_detail::claimed_strategy(op, m);
        std::string generated = "Yes";
        if (cell.lies > 0)
          generated = cell.malicious > 0   ? "No, and not benevolent"
                      : cell.neutral > 0   ? "No"
                                           : "No, but benevolent";
        all_match = all_match && claimed == generated;
        row[oname(op)] = {{"claimed", claimed},
                          {"generated", generated},
                          {"match", claimed == generated},
                          {"lies", cell.lies},
                          {"malicious", cell.malicious},
                          {"neutral", cell.neutral}};
      }
      strategy.push_back(row);
    }

    json carry = json::array();
    std::size_t match = 0, stronger = 0, mismatch = 0;
    for (std::size_t r = 0; r < 8; ++r) {
      json row = {{"from", to_string(kAllMeasures[r])}};
      for (std::size_t c = 0; c < 8; ++c) {
        const auto claimed =
            suite_detail::claimed_carry_over(kAllMeasures[r], kAllMeasures[c]);
        std::string generated = "Y";
        if (r != c) {
          const auto& o = observed_[r][c];
          generated = o.compatible ? "N" : o.general ? "Y*" : "Y";
        }
        std::string status = claimed == generated ? "match" : "mismatch";
        // Holding everywhere implies holding on compatible sets.
        if (claimed == "Y*" && generated == "Y") status = "stronger";
        if (status == "match") ++match;
        else if (status == "stronger") ++stronger;
        else ++mismatch;
        row[mname(kAllMeasures[c])] = {
            {"claimed", claimed}, {"generated", generated}, {"status", status}};
      }
      carry.push_back(row);
    }
    all_match = all_match && mismatch == 0;

    return {{"pareto", pareto},
            {"strategy_proofness", strategy},
            {"carry_over",
             {{"cells", carry},
              {"match", match},
              {"stronger", stronger},
              {"mismatch", mismatch}}}};
  }

  struct CarryCell {
    bool general = false;
    bool compatible = false;
  };
  struct StrategyCell {
    std::size_t lies = 0, malicious = 0, neutral = 0;
  };

  SuiteOptions opts_;
  std::vector<CheckResult> checks_;
  std::map<std::string, std::size_t> index_;
  CarryCell observed_[8][8];
  StrategyCell sp_observed_[3][8];
  std::size_t random_assignments_ = 0;
};

inline SuiteReport verify_theorem_suite(const SuiteOptions& opts = {}) {
  return TheoremSuite(opts).run();
}

}  // namespace argagg

#endif  // ARGAGG_SUITE_HPP_
