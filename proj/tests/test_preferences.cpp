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

#include "worked_examples.hpp"

using namespace argagg;

TEST_CASE("set preferences from the Hamming example", "[preferences]") {
  const worked::HammingExample ex;
  const AgentPreference hs{ex.l1, MeasureKind::hs};
  CHECK(relate(hs, ex.l1, ex.l2) == Relation::strict_1);
  CHECK(relate(hs, ex.l2, ex.l4) == Relation::strict_1);
  CHECK(relate(hs, ex.l3, ex.l4) == Relation::strict_1);
  CHECK(relate(hs, ex.l2, ex.l3) == Relation::incomparable);
  const AgentPreference hd{ex.l1, MeasureKind::hd};
  CHECK(relate(hd, ex.l2, ex.l3) == Relation::strict_1);
  CHECK(relate(hd, ex.l4, ex.l3) == Relation::strict_2);
}

TEST_CASE("issue and IUO preferences", "[preferences]") {
  const worked::IssueExample ex;
  const auto p = issue_partition(ex.af);
  CHECK(relate({ex.l1, MeasureKind::hd}, ex.l2, ex.l3, &p) == Relation::indifferent);
  CHECK(relate({ex.l1, MeasureKind::iwd}, ex.l3, ex.l2, &p) == Relation::strict_1);
  const worked::IuoExample iu;
  const auto q = issue_partition(iu.af);
  CHECK(relate({iu.l1, MeasureKind::hd}, iu.l2, iu.l3) == Relation::indifferent);
  CHECK(relate({iu.l1, MeasureKind::iwd}, iu.l2, iu.l3, &q) == Relation::indifferent);
  CHECK(relate({iu.l1, MeasureKind::iuo_hd}, iu.l3, iu.l2) == Relation::strict_1);
  CHECK(relate({iu.l1, MeasureKind::iuo_iws}, iu.l3, iu.l2, &q) == Relation::incomparable);
  CHECK(relate({iu.l1, MeasureKind::iuo_iwd}, iu.l3, iu.l2, &q) == Relation::strict_1);
}

TEST_CASE("weak and strict preference", "[preferences]") {
  const worked::IuoExample ex;
  const AgentPreference a{ex.l1, MeasureKind::hs};
  CHECK(weak_prefers(a, ex.l1, ex.l1));
  CHECK_FALSE(strictly_prefers(a, ex.l1, ex.l1));
  CHECK(strictly_prefers(a, ex.l1, ex.l2));
}

TEST_CASE("preference profiles", "[preferences]") {
  const worked::IuoExample ex;
  const auto p = Profile::of({ex.l1, ex.l2});
  const auto h = PreferenceProfile::homogeneous(p, MeasureKind::hd);
  CHECK(h.is_homogeneous());
  CHECK_FALSE(h.needs_partition());
  const auto m = PreferenceProfile::heterogeneous(p, {MeasureKind::hd, MeasureKind::iws});
  CHECK_FALSE(m.is_homogeneous());
  CHECK(m.needs_partition());
  CHECK(m[1].top == ex.l2);
  CHECK_THROWS_AS(PreferenceProfile::heterogeneous(p, {MeasureKind::hd}), DomainError);
  CHECK_THROWS_AS(PreferenceProfile::homogeneous(p, MeasureKind::hd, 3.0), ConfigError);
}
