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

TEST_CASE("commitment order and compatibility", "[lattice]") {
  const auto u = Labeling::all_undec(2);
  const auto a = Labeling::from_masks(2, 0b01, 0b10);
  const auto b = Labeling::from_masks(2, 0b10, 0b01);
  CHECK(leq_committed(u, a));
  CHECK_FALSE(leq_committed(a, u));
  CHECK(compare_commitment(a, a) == CommitmentOrder::equal);
  CHECK(compare_commitment(u, a) == CommitmentOrder::leq);
  CHECK(compare_commitment(a, u) == CommitmentOrder::geq);
  CHECK(compare_commitment(a, b) == CommitmentOrder::incomparable);
  CHECK(compatible(u, a));
  CHECK_FALSE(compatible(a, b));
  CHECK_THROWS_AS(compatible(a, Labeling::all_undec(3)), DomainError);
}

TEST_CASE("initial operators", "[lattice]") {
  const auto a = Labeling::from_masks(3, 0b001, 0b010);
  const auto b = Labeling::from_masks(3, 0b101, 0b000);
  CHECK(skeptical_initial(std::vector{a, b}) == Labeling::from_masks(3, 0b001, 0));
  CHECK(credulous_initial(std::vector{a, b}) == Labeling::from_masks(3, 0b101, 0b010));
  CHECK_THROWS_AS(skeptical_initial(std::vector<Labeling>{}), ArityError);
  CHECK_THROWS_AS(credulous_initial(std::vector<Labeling>{}), ArityError);
}

TEST_CASE("grounded labeling of the chain", "[lattice]") {
  const ArgumentationFramework af({"A1", "A2", "A3", "A4", "A5"},
                                  {{"A2", "A1"}, {"A4", "A1"}, {"A3", "A2"}, {"A5", "A4"}});
  CHECK(grounded(af) == af.labeling({"A1", "A3", "A5"}, {"A2", "A4"}));
}

TEST_CASE("up_complete requires an admissible labeling", "[lattice]") {
  const ArgumentationFramework af({"a", "b"}, {{"a", "b"}});
  CHECK_THROWS_AS(up_complete(af, af.labeling({"b"}, {})), PreconditionError);
}

TEST_CASE("fixpoints equal the brute-force extrema on every 3-argument framework",
          "[lattice][oracle]") {
  for (std::size_t n = 0; n <= 3; ++n)
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * n)); ++bits) {
      const auto g = oracle::Graph::from_bits(n, bits);
      const auto af = g.to_af();
      const auto adms = oracle::filter(g, oracle::admissible);
      const auto comps = oracle::filter(g, oracle::complete);
      for (const auto& l : oracle::all_labs(n)) {
        const auto down = oracle::greatest_admissible_below(adms, l);
        REQUIRE(down.has_value());
        REQUIRE(down_admissible(af, oracle::to(l)) == oracle::to(*down));
        if (oracle::admissible(g, l)) {
          const auto up = oracle::least_complete_above(comps, l);
          REQUIRE(up.has_value());
          REQUIRE(up_complete(af, oracle::to(l)) == oracle::to(*up));
        }
      }
      const auto gr = oracle::least_complete_above(comps, oracle::Lab(n, oracle::UND));
      REQUIRE(grounded(af) == oracle::to(*gr));
    }
}
