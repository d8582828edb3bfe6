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

TEST_CASE("partition validation", "[issues]") {
  CHECK_THROWS_AS(IssuePartition(3, {{0, 1}}), DomainError);
  CHECK_THROWS_AS(IssuePartition(2, {{0, 1}, {1}}), DomainError);
  CHECK_THROWS_AS(IssuePartition(2, {{0, 1}, {}}), DomainError);
  const IssuePartition p(4, {{0, 2}, {1}, {3}});
  CHECK(p.size() == 3);
  CHECK(p.block_of(2) == 0);
  CHECK(p.block_mask(0) == 0b0101);
  CHECK(p.blocks_touching(0b1000) == 0b100);
  CHECK(p.blocks_touching(0b0100) == 0b001);
}

TEST_CASE("murder case is a single issue with B mirrored", "[issues]") {
  const ArgumentationFramework af({"A", "B", "C"}, {{"B", "A"}, {"B", "C"}, {"C", "B"}});
  const auto p = issue_partition(af);
  REQUIRE(p.size() == 1);
  CHECK(p.signs(0) == std::vector<int>{1, -1, 1});
  CHECK(in_sync(af, "A", "C"));
  CHECK(in_sync(af, "A", "B"));
}

TEST_CASE("issue partition matches the in-sync definition", "[issues][oracle]") {
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << (n * n)); ++bits) {
      const auto g = oracle::Graph::from_bits(n, bits);
      const auto p = issue_partition(g.to_af());
      std::set<std::set<std::size_t>> got;
      for (const auto& b : p.blocks()) got.insert({b.begin(), b.end()});
      REQUIRE(got == oracle::issues(g));
    }
}

TEST_CASE("from_names", "[issues]") {
  const ArgumentationFramework af({"a", "b", "c"}, {});
  const auto p = IssuePartition::from_names(af, {{"a", "c"}, {"b"}});
  CHECK(p.block_of(2) == 0);
  CHECK_THROWS_AS(IssuePartition::from_names(af, {{"a"}, {"z"}}), DomainError);
}
