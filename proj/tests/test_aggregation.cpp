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

}  // namespace

TEST_CASE("profile validation", "[aggregation]") {
  const auto l = Labeling::all_undec(2);
  CHECK_THROWS_AS(Profile({}, {}), ArityError);
  CHECK_THROWS_AS(Profile({"x"}, {l, l}), DomainError);
  CHECK_THROWS_AS(Profile({"x", "x"}, {l, l}), DomainError);
  CHECK_THROWS_AS(Profile({"x", "y"}, {l, Labeling::all_undec(3)}), DomainError);
  const auto p = Profile::of({l, l, Labeling::from_masks(2, 1, 2)});
  CHECK(p.size() == 3);
  CHECK(p.agents()[2] == "3");
  CHECK(p.distinct().size() == 2);
  CHECK(p.agent_index("2") == 1);
  CHECK_THROWS_AS(p.agent_index("9"), DomainError);
  CHECK(p.replaced(0, Labeling::from_masks(2, 1, 2)).distinct().size() == 2);
}

TEST_CASE("murder case operators", "[aggregation]") {
  const auto af = murder();
  const auto l1 = af.labeling({"A", "C"}, {"B"});
  const auto l2 = af.labeling({"B"}, {"A", "C"});
  const Profile p({"j1", "j2"}, {l1, l2});
  for (OperatorKind op : kAllOperators)
    CHECK(aggregate(af, p, op) == Labeling::all_undec(3));
  const Profile q({"j1", "j2"}, {l1, Labeling::all_undec(3)});
  CHECK(aggregate(af, q, OperatorKind::skeptical) == Labeling::all_undec(3));
  CHECK(aggregate(af, q, OperatorKind::credulous) == l1);
  CHECK(aggregate(af, q, OperatorKind::super_credulous) == l1);
}

TEST_CASE("ballot gate", "[aggregation]") {
  const auto af = murder();
  const Profile p({"x"}, {af.labeling({"C"}, {"B"})});
  CHECK_THROWS_AS(aggregate(af, p, OperatorKind::skeptical), BallotError);
  CHECK_NOTHROW(aggregate(af, p, OperatorKind::skeptical, {SemanticsKind::admissible}));
  try {
    aggregate(af, p, OperatorKind::skeptical);
  } catch (const BallotError& e) {
    CHECK(e.agent() == "x");
  }
}

TEST_CASE("operators agree with the brute-force oracle", "[aggregation][oracle]") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * n)); ++bits) {
      const auto g = oracle::Graph::from_bits(n, bits);
      const auto af = g.to_af();
      const auto comps = oracle::filter(g, oracle::complete);
      for (std::size_t i = 0; i < comps.size(); ++i)
        for (std::size_t j = i; j < comps.size(); ++j) {
          const std::vector<oracle::Lab> bs{comps[i], comps[j]};
          const auto p = Profile::of({oracle::to(comps[i]), oracle::to(comps[j])});
          for (int op = 0; op < 3; ++op)
            REQUIRE(aggregate(af, p, kAllOperators[op]) ==
                    oracle::to(oracle::aggregate(g, bs, op)));
        }
    }
}

TEST_CASE("operator names", "[aggregation]") {
  CHECK(to_string(OperatorKind::super_credulous) == "super-credulous");
}
