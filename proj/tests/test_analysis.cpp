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

#include <catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace argagg;

namespace {

ArgumentationFramework murder() {
  return ArgumentationFramework({"A", "B", "C"}, {{"B", "A"}, {"B", "C"}, {"C", "B"}});
}

// Pareto dominance straight from the definition on numeric distances.
bool oracle_dominated(const oracle::Lab& l, const std::vector<oracle::Lab>& cands,
                      const std::vector<oracle::Lab>& tops,
                      std::size_t (*dist)(const oracle::Lab&, const oracle::Lab&)) {
  for (const auto& x : cands) {
    bool all = true, some = false;
    for (const auto& t : tops) {
      all = all && dist(x, t) <= dist(l, t);
      some = some || dist(x, t) < dist(l, t);
    }
    if (all && some) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("candidate sets", "[analysis]") {
  const auto af = murder();
  const auto l1 = af.labeling({"A", "C"}, {"B"});
  const auto p = Profile::of({l1, Labeling::all_undec(3)});
  const auto leq = candidate_set(af, p, CandidateSetKind::adm_leq);
  REQUIRE(leq.size() == 1);
  CHECK(leq[0] == Labeling::all_undec(3));
  const auto compat = candidate_set(af, p, CandidateSetKind::adm_compat);
  CHECK(std::find(compat.begin(), compat.end(), l1) != compat.end());
  CHECK(candidate_set(af, p, CandidateSetKind::comp_compat).size() == 2);
  CHECK(default_candidates(OperatorKind::credulous) == CandidateSetKind::adm_compat);
}

TEST_CASE("Pareto dominance matches the oracle for Hamming distance",
          "[analysis][oracle]") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * n)); ++bits) {
      const auto g = oracle::Graph::from_bits(n, bits);
      const auto af = g.to_af();
      const auto comps = oracle::filter(g, oracle::complete);
      const auto adms = oracle::filter(g, oracle::admissible);
      for (std::size_t i = 0; i < comps.size(); ++i)
        for (std::size_t j = i; j < comps.size(); ++j) {
          const auto p = Profile::of({oracle::to(comps[i]), oracle::to(comps[j])});
          std::vector<oracle::Lab> cands;
          for (const auto& a : adms)
            if (oracle::compatible(a, comps[i]) && oracle::compatible(a, comps[j]))
              cands.push_back(a);
          const auto lib = candidate_set(af, p, CandidateSetKind::adm_compat);
          REQUIRE(lib.size() == cands.size());
          const auto hd = PreferenceProfile::homogeneous(p, MeasureKind::hd);
          const auto ihd = PreferenceProfile::homogeneous(p, MeasureKind::iuo_hd);
          for (const auto& l : cands) {
            REQUIRE(is_pareto_optimal(oracle::to(l), lib, hd) ==
                    !oracle_dominated(l, cands, {comps[i], comps[j]}, oracle::hamming));
            REQUIRE(is_pareto_optimal(oracle::to(l), lib, ihd) ==
                    !oracle_dominated(l, cands, {comps[i], comps[j]}, oracle::iuo_hamming));
          }
        }
    }
}

TEST_CASE("lie classification", "[analysis]") {
  const auto af = murder();
  const auto l1 = af.labeling({"A", "C"}, {"B"});
  const auto l2 = af.labeling({"B"}, {"A", "C"});
  const auto u = Labeling::all_undec(3);
  const auto p = Profile::of({l1, l1, l2});
  const auto hd = PreferenceProfile::homogeneous(p, MeasureKind::hd);
  CHECK(classify_lie(hd, 0, u, l1) == LieClass::benevolent);
  const auto iuo = PreferenceProfile::homogeneous(p, MeasureKind::iuo_hd);
  CHECK(classify_lie(iuo, 0, u, l1) == LieClass::malicious);
  const auto q = Profile::of({l1, l1});
  const auto qp = PreferenceProfile::homogeneous(q, MeasureKind::hd);
  CHECK(classify_lie(qp, 0, u, l1) == LieClass::benevolent);
  const auto r = Profile::of({l1, u});
  const auto rp = PreferenceProfile::homogeneous(r, MeasureKind::hs);
  CHECK(classify_lie(rp, 0, u, l1) == LieClass::malicious);
  const auto s = Profile::of({l1});
  const auto sp = PreferenceProfile::homogeneous(s, MeasureKind::hs);
  CHECK(classify_lie(sp, 0, u, l1) == LieClass::neutral);
}

TEST_CASE("reported lies help the liar", "[analysis]") {
  const auto af = murder();
  const auto l1 = af.labeling({"A", "C"}, {"B"});
  const auto p = Profile({"x", "y"}, {l1, Labeling::all_undec(3)});
  for (OperatorKind op : kAllOperators)
    for (MeasureKind m : {MeasureKind::hs, MeasureKind::hd, MeasureKind::iuo_hd}) {
      const auto prefs = PreferenceProfile::homogeneous(p, m);
      for (const auto& agent : p.agents())
        for (const auto& r : find_strategic_lies(af, p, op, prefs, agent)) {
          const auto k = p.agent_index(agent);
          CHECK(r.lie != r.true_ballot);
          CHECK(aggregate(af, p.replaced(k, r.lie), op) == r.lie_outcome);
          CHECK(strictly_prefers(prefs[k], r.lie_outcome, r.honest_outcome));
        }
    }
  CHECK_THROWS_AS(find_strategic_lies(af, p, OperatorKind::skeptical,
                                      PreferenceProfile::homogeneous(p, MeasureKind::hs), "z"),
                  DomainError);
}

TEST_CASE("strategy-proofness check", "[analysis]") {
  const auto af = murder();
  const auto sp = check_strategy_proof(af, OperatorKind::skeptical, MeasureKind::iuo_hs, 2);
  CHECK(sp.strategy_proof);
  CHECK(sp.profiles_tested == 6);
  for (OperatorKind op : kAllOperators) {
    const auto r = check_strategy_proof(af, op, MeasureKind::hd, 3);
    if (!r.strategy_proof) {
      REQUIRE(r.witness.has_value());
      const auto k = r.profile.agent_index(r.witness->agent);
      const auto prefs = PreferenceProfile::homogeneous(r.profile, MeasureKind::hd);
      CHECK(strictly_prefers(prefs[k], r.witness->lie_outcome, r.witness->honest_outcome));
    }
  }
}

TEST_CASE("multiset enumeration", "[analysis]") {
  std::size_t count = 0;
  for_each_multiset(4, 3, [&](const auto& idx) {
    CHECK(std::is_sorted(idx.begin(), idx.end()));
    ++count;
    return true;
  });
  CHECK(count == 20);
}

TEST_CASE("random frameworks are deterministic", "[analysis]") {
  const auto a = random_framework(7, 6, 0.3);
  CHECK(a == random_framework(7, 6, 0.3));
  CHECK(a.name(0) == "a1");
  CHECK(random_framework(7, 6, 0.0).attack_list().empty());
  CHECK(random_framework(7, 3, 1.0).attack_list().size() == 9);
  CHECK_THROWS_AS(random_framework(1, 3, 1.5), ConfigError);
}
