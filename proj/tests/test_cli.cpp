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

#include <cstdio>
#include <sys/wait.h>

#include "argagg/argagg.hpp"

using argagg::json;

namespace {

struct Run {
  int status;
  std::string out;
};

/// Runs the tool through the shell; stderr is folded into the output when
/// `merge` is set.
Run run(const std::string& args, bool merge = false) {
  const std::string cmd = std::string("'") + ARGAGG_CLI + "' " + args + (merge ? " 2>&1" : " 2>/dev/null");
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f);
  std::string out;
  char buf[4096];
  for (std::size_t n; (n = fread(buf, 1, sizeof buf, f)) > 0;) out.append(buf, n);
  const int st = pclose(f);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

const std::string murder = std::string("-f '") + ARGAGG_SAMPLES_DIR + "/murder.apx'";
const std::string profile = std::string("-p '") + ARGAGG_SAMPLES_DIR + "/murder_profile.json'";

}  // namespace

TEST_CASE("labelings subcommand", "[cli]") {
  const auto r = run("labelings " + murder);
  REQUIRE(r.status == 0);
  const auto j = json::parse(r.out);
  CHECK(j["count"] == 3);
  CHECK(j["labelings"][0]["in"] == json::array({"A", "C"}));
  const auto pretty = run("labelings --pretty " + murder);
  CHECK(pretty.out.find("3 complete labeling(s)") != std::string::npos);
}

TEST_CASE("aggregate subcommand on the murder profile", "[cli]") {
  const auto r = run("aggregate --op skeptical " + murder + " " + profile);
  REQUIRE(r.status == 0);
  CHECK(json::parse(r.out)["outcome"]["undec"] == json::array({"A", "B", "C"}));
}

TEST_CASE("distance of identical labelings is zero", "[cli]") {
  const auto r = run("distance -m hd " + murder +
                     R"( --first '{"in":["A","C"],"out":["B"]}' --second '{"in":["A","C"],"out":["B"]}')");
  REQUIRE(r.status == 0);
  CHECK(json::parse(r.out)["distance"] == 0);
  const auto iw = run("distance -m iuo-iwd " + murder +
                      R"( --first '{"in":["A","C"],"out":["B"]}' --second '{"in":["B"],"out":["A","C"]}')");
  CHECK(json::parse(iw.out)["distance"] == 2);
}

TEST_CASE("issues, prefer, pareto and manipulate subcommands", "[cli]") {
  CHECK(json::parse(run("issues " + murder).out)["issues"].size() == 1);
  const auto pr = run("prefer -m hs " + murder +
                      R"( --top '{"in":["A","C"],"out":["B"]}' --first '{"in":["A","C"],"out":["B"]}' --second '{"undec":["A","B","C"]}')");
  CHECK(json::parse(pr.out)["relation"] == "strict-1");
  const auto pa = run("pareto --op credulous -m hs " + murder + " " + profile);
  REQUIRE(pa.status == 0);
  CHECK(json::parse(pa.out)["pareto_optimal"] == true);
  const auto ma = run("manipulate --op skeptical -m iuo-hs " + murder + " " + profile);
  REQUIRE(ma.status == 0);
  CHECK(json::parse(ma.out)["lies"].empty());
}

TEST_CASE("gen is stable for a seed", "[cli]") {
  const auto a = run("gen -n 6 --seed 9");
  const auto b = run("gen -n 6 --seed 9");
  REQUIRE(a.status == 0);
  CHECK(a.out == b.out);
  CHECK(json::parse(a.out)["arguments"].size() == 6);
  CHECK(run("gen -n 4 --format apx").out.find("arg(a1).") != std::string::npos);
}

TEST_CASE("errors use the envelope on stderr", "[cli]") {
  const auto missing = run("labelings -f /nonexistent.apx", true);
  CHECK(missing.status == 2);
  CHECK(json::parse(missing.out)["error"]["kind"] == "config-error");
  const auto bad_op = run("aggregate --op median " + murder + " " + profile, true);
  CHECK(json::parse(bad_op.out)["error"]["kind"] == "config-error");
  const auto ballot = run("aggregate --op skeptical " + murder +
                          R"( -p '{"agents":{"x":{"in":["C"],"out":["B"],"undec":["A"]}}}')", true);
  const auto e = json::parse(ballot.out)["error"];
  CHECK(e["kind"] == "ballot-error");
  CHECK(e["location"] == "agents.x");
  CHECK(run("frobnicate", true).status == 2);
  const auto cap = run("labelings " + murder + " --max-args 2", true);
  CHECK(json::parse(cap.out)["error"]["kind"] == "size-error");
}

TEST_CASE("environment cap override", "[cli]") {
  const std::string cmd = std::string("ARGAGG_MAX_ARGS=2 '") + ARGAGG_CLI + "' labelings " + murder + " 2>&1";
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f);
  char buf[4096];
  const std::size_t n = fread(buf, 1, sizeof buf, f);
  pclose(f);
  CHECK(std::string(buf, n).find("size-error") != std::string::npos);
}

TEST_CASE("verify runs the reduced suite", "[cli]") {
  const auto r = run("verify --random 30");
  REQUIRE(r.status == 0);
  CHECK(json::parse(r.out)["summary"]["ok"] == true);
}
