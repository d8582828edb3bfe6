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

TEST_CASE("labeling masks and accessors", "[af]") {
  const auto l = Labeling::from_masks(4, 0b0011, 0b0100);
  CHECK(l.size() == 4);
  CHECK(l[0] == Label::in);
  CHECK(l[2] == Label::out);
  CHECK(l[3] == Label::undec);
  CHECK(l.dec_mask() == 0b0111);
  CHECK(l.undec_mask() == 0b1000);
  CHECK(l.with(3, Label::out).out_mask() == 0b1100);
  CHECK(Labeling::all_undec(3).undec_mask() == 0b111);
  CHECK_THROWS_AS(Labeling::from_masks(2, 0b01, 0b01), DomainError);
  CHECK_THROWS_AS(Labeling::from_masks(2, 0b100, 0), DomainError);
  CHECK_THROWS_AS(Labeling::all_undec(65), SizeError);
  CHECK_NOTHROW(Labeling::all_undec(64));
}

TEST_CASE("framework construction and lookup", "[af]") {
  const auto af = murder();
  CHECK(af.size() == 3);
  CHECK(af.index_of("C") == 2);
  CHECK(af.attacks(1, 0));
  CHECK_FALSE(af.attacks(0, 1));
  CHECK(af.attackers(1) == bit(2));
  CHECK(af.attack_list().size() == 3);
  CHECK_THROWS_AS(af.index_of("Z"), DomainError);
  CHECK_THROWS_AS(ArgumentationFramework({"A", "A"}, {}), DomainError);
  CHECK_THROWS_AS(ArgumentationFramework({"A"}, {{"A", "B"}}), DomainError);
  CHECK(af.labeling({"A", "C"}, {"B"}) == Labeling::from_masks(3, 0b101, 0b010));
}

TEST_CASE("murder case has three complete labelings", "[af]") {
  const auto af = murder();
  const auto comps = enumerate_labelings(af, SemanticsKind::complete);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == af.labeling({"A", "C"}, {"B"}));
  CHECK(comps[1] == af.labeling({"B"}, {"A", "C"}));
  CHECK(comps[2] == Labeling::all_undec(3));
}

TEST_CASE("chain framework labelings", "[af]") {
  const ArgumentationFramework af({"A1", "A2", "A3", "A4", "A5"},
                                  {{"A2", "A1"}, {"A4", "A1"}, {"A3", "A2"}, {"A5", "A4"}});
  const auto comps = enumerate_labelings(af, SemanticsKind::complete);
  REQUIRE(comps.size() == 1);
  CHECK(comps[0] == af.labeling({"A1", "A3", "A5"}, {"A2", "A4"}));
  CHECK(is_admissible(af, af.labeling({"A3", "A5"}, {"A2", "A4"})));
  CHECK(is_admissible(af, af.labeling({"A3"}, {"A2"})));
  CHECK(is_admissible(af, af.labeling({"A5"}, {})));
  CHECK(is_admissible(af, Labeling::all_undec(5)));
  CHECK_FALSE(is_admissible(af, af.labeling({"A1"}, {})));
  CHECK_FALSE(is_complete(af, af.labeling({"A3", "A5"}, {"A2", "A4"})));
}

TEST_CASE("enumeration order puts the first argument most significant", "[af]") {
  const ArgumentationFramework af({"a", "b"}, {});
  const auto all = enumerate_labelings(af, SemanticsKind::all);
  REQUIRE(all.size() == 9);
  CHECK(all.front() == af.labeling({"a", "b"}, {}));
  CHECK(all[1] == af.labeling({"a"}, {"b"}));
  CHECK(all.back() == Labeling::all_undec(2));
  CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("enumeration cap", "[af]") {
  std::vector<std::string> names;
  for (int i = 0; i < 17; ++i) names.push_back("a" + std::to_string(i));
  const ArgumentationFramework af(names, {});
  CHECK_THROWS_AS(enumerate_labelings(af, SemanticsKind::complete), SizeError);
  CHECK_THROWS_AS(enumerate_labelings(af, SemanticsKind::complete, {3}), SizeError);
}

TEST_CASE("semantics agree with the brute-force oracle on every 3-argument framework",
          "[af][oracle]") {
  for (std::size_t n = 0; n <= 3; ++n)
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * n)); ++bits) {
      const auto g = oracle::Graph::from_bits(n, bits);
      const auto af = g.to_af();
      for (const auto& l : oracle::all_labs(n)) {
        const auto lab = oracle::to(l);
        REQUIRE(is_admissible(af, lab) == oracle::admissible(g, l));
        REQUIRE(is_complete(af, lab) == oracle::complete(g, l));
      }
      REQUIRE(enumerate_labelings(af, SemanticsKind::complete).size() ==
              oracle::filter(g, oracle::complete).size());
      REQUIRE(enumerate_labelings(af, SemanticsKind::admissible).size() ==
              oracle::filter(g, oracle::admissible).size());
    }
}

TEST_CASE("domain mismatches are rejected", "[af]") {
  const auto af = murder();
  CHECK_THROWS_AS(is_admissible(af, Labeling::all_undec(2)), DomainError);
}
