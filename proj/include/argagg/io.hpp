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

#ifndef ARGAGG_IO_HPP_
#define ARGAGG_IO_HPP_

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "argagg/aggregation.hpp"
#include "argagg/analysis.hpp"
#include "argagg/issues.hpp"
#include "argagg/metrics.hpp"

namespace argagg {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// apx-style framework text

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

inline bool valid_identifier(std::string_view id) {
  if (id.empty()) return false;
  for (char c : id) {
    const auto u = static_cast<unsigned char>(c);
    if (std::isspace(u) || c == '(' || c == ')' || c == ',' || c == '.' ||
        c == '#')
      return false;
  }
  return true;
}

inline std::string line_location(std::string_view source, std::size_t line) {
  return source.empty() ? "line " + std::to_string(line)
                        : std::string(source) + ":" + std::to_string(line);
}

}  // namespace detail

/// Parses `arg(x).` and `att(x,y).` statements. Several statements may
/// share a line; `#` starts a comment. Repeated statements are ignored.
inline ArgumentationFramework parse_framework(std::string_view text,
                                              std::string_view source = {}) {
  std::vector<std::string> args;
  struct PendingAttack {
    std::string from, to;
    std::size_t line;
  };
  std::vector<PendingAttack> attacks;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto c = line.find_first_of("#%"); c != std::string_view::npos)
      line = line.substr(0, c);
    line = detail::trim(line);
    const auto where = detail::line_location(source, line_no);
    while (!line.empty()) {
      const auto open = line.find('(');
      const auto close = line.find(')');
      if (open == std::string_view::npos || close == std::string_view::npos ||
          close < open)
        throw ParseError("malformed statement '" + std::string(line) + "'",
                         where);
      const auto keyword = detail::trim(line.substr(0, open));
      const auto body = line.substr(open + 1, close - open - 1);
      auto rest = detail::trim(line.substr(close + 1));
      if (rest.empty() || rest.front() != '.')
        throw ParseError("statement must end with '.'", where);
      rest.remove_prefix(1);
      line = detail::trim(rest);

      if (keyword == "arg") {
        const auto id = detail::trim(body);
        if (!detail::valid_identifier(id))
          throw ParseError("invalid argument identifier '" + std::string(id) +
                               "'",
                           where);
        if (std::find(args.begin(), args.end(), id) == args.end())
          args.emplace_back(id);
      } else if (keyword == "att") {
        const auto comma = body.find(',');
        if (comma == std::string_view::npos)
          throw ParseError("att needs two arguments", where);
        const auto from = detail::trim(body.substr(0, comma));
        const auto to = detail::trim(body.substr(comma + 1));
        if (!detail::valid_identifier(from) || !detail::valid_identifier(to))
          throw ParseError("invalid attack endpoints", where);
        attacks.push_back({std::string(from), std::string(to), line_no});
      } else {
        throw ParseError("unknown statement '" + std::string(keyword) + "'",
                         where);
      }
    }
  }
  std::vector<ArgumentationFramework::Attack> pairs;
  for (const auto& a : attacks) {
    for (const auto* id : {&a.from, &a.to})
      if (std::find(args.begin(), args.end(), *id) == args.end())
        throw ParseError("attack references undeclared argument '" + *id + "'",
                         detail::line_location(source, a.line));
    pairs.emplace_back(a.from, a.to);
  }
  return ArgumentationFramework(std::move(args), pairs);
}

inline std::string serialize_framework(const ArgumentationFramework& af) {
  std::string out;
  for (const auto& name : af.arguments()) out += "arg(" + name + ").\n";
  for (auto [from, to] : af.attack_list())
    out += "att(" + af.name(from) + "," + af.name(to) + ").\n";
  return out;
}

inline std::string to_dot(const ArgumentationFramework& af) {
  std::string out = "digraph af {\n";
  for (const auto& name : af.arguments()) out += "  \"" + name + "\";\n";
  for (auto [from, to] : af.attack_list())
    out += "  \"" + af.name(from) + "\" -> \"" + af.name(to) + "\";\n";
  return out + "}\n";
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

inline ArgumentationFramework load_framework(const std::string& path) {
  return parse_framework(read_file(path), path);
}

// ---------------------------------------------------------------------------
// JSON

inline json names_json(const ArgumentationFramework& af, Mask m) {
  json a = json::array();
  for (std::size_t i = 0; i < af.size(); ++i)
    if (m & bit(i)) a.push_back(af.name(i));
  return a;
}

inline json framework_to_json(const ArgumentationFramework& af) {
  json attacks = json::array();
  for (auto [from, to] : af.attack_list())
    attacks.push_back({af.name(from), af.name(to)});
  return {{"arguments", af.arguments()}, {"attacks", attacks}};
}

inline ArgumentationFramework framework_from_json(const json& j) {
  try {
    std::vector<ArgumentationFramework::Attack> attacks;
    for (const auto& a : j.at("attacks")) {
      if (!a.is_array() || a.size() != 2)
        throw ParseError("attack must be a pair", "attacks");
      attacks.emplace_back(a[0].get<std::string>(), a[1].get<std::string>());
    }
    return ArgumentationFramework(
        j.at("arguments").get<std::vector<std::string>>(), attacks);
  } catch (const json::exception& e) {
    throw ParseError(std::string("invalid framework JSON: ") + e.what(), "");
  }
}

inline json labeling_to_json(const ArgumentationFramework& af,
                             const Labeling& l) {
  check_domain(af, l);
  return {{"in", names_json(af, l.in_mask())},
          {"out", names_json(af, l.out_mask())},
          {"undec", names_json(af, l.undec_mask())}};
}

/// Labelings must be total: each argument appears in exactly one of the
/// three lists.
inline Labeling labeling_from_json(const ArgumentationFramework& af,
                                   const json& j,
                                   const std::string& where = "labeling") {
  if (!j.is_object()) throw ParseError("labeling must be an object", where);
  Mask seen = 0, in = 0, out = 0;
  for (const char* key : {"in", "out", "undec"}) {
    if (!j.contains(key)) continue;
    if (!j[key].is_array())
      throw ParseError(std::string("'") + key + "' must be a list", where);
    for (const auto& id : j[key]) {
      if (!id.is_string())
        throw ParseError("argument identifiers must be strings", where);
      const auto name = id.get<std::string>();
      if (!af.contains(name))
        throw ParseError("unknown argument '" + name + "'", where);
      const Mask b = bit(af.index_of(name));
      if (seen & b)
        throw ParseError("argument '" + name + "' labeled twice", where);
      seen |= b;
      if (std::string_view(key) == "in") in |= b;
      if (std::string_view(key) == "out") out |= b;
    }
  }
  for (const auto& key : j.items())
    if (key.key() != "in" && key.key() != "out" && key.key() != "undec")
      throw ParseError("unexpected key '" + key.key() + "'", where);
  if (seen != af.all()) {
    std::string missing;
    for (std::size_t i = 0; i < af.size(); ++i)
      if (!(seen & bit(i))) missing += (missing.empty() ? "" : ", ") + af.name(i);
    throw ParseError("labeling omits argument(s) " + missing, where);
  }
  return Labeling::from_masks(af.size(), in, out);
}

inline json profile_to_json(const ArgumentationFramework& af,
                            const Profile& p) {
  json agents = json::object();
  for (std::size_t i = 0; i < p.size(); ++i)
    agents[p.agents()[i]] = labeling_to_json(af, p.ballot(i));
  return {{"agents", agents}};
}

inline Profile profile_from_json(const ArgumentationFramework& af,
                                 const json& j) {
  if (!j.is_object() || !j.contains("agents") || !j["agents"].is_object())
    throw ParseError("profile needs an 'agents' object", "profile");
  std::vector<std::string> names;
  std::vector<Labeling> ballots;
  for (const auto& [id, lab] : j["agents"].items()) {
    names.push_back(id);
    ballots.push_back(labeling_from_json(af, lab, "agents." + id));
  }
  if (names.empty()) throw ArityError("profile has no agents");
  return Profile(std::move(names), std::move(ballots));
}

inline json parse_json_text(const std::string& text, const std::string& where) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(),
                     where + ":byte " + std::to_string(e.byte));
  }
}

inline json partition_to_json(const ArgumentationFramework& af,
                              const IssuePartition& p) {
  json blocks = json::array();
  for (std::size_t k = 0; k < p.size(); ++k) {
    json members = json::array();
    for (std::size_t m = 0; m < p.block(k).size(); ++m)
      members.push_back({{"argument", af.name(p.block(k)[m])},
                         {"sign", p.signs(k)[m] > 0 ? "+" : "-"}});
    blocks.push_back(members);
  }
  return blocks;
}

/// Accepts either the output format above or plain lists of names.
inline IssuePartition partition_from_json(const ArgumentationFramework& af,
                                          const json& j) {
  if (!j.is_array()) throw ParseError("partition must be a list", "partition");
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::vector<int>> signs;
  for (const auto& b : j) {
    if (!b.is_array()) throw ParseError("block must be a list", "partition");
    blocks.emplace_back();
    signs.emplace_back();
    for (const auto& m : b) {
      if (m.is_string()) {
        blocks.back().push_back(af.index_of(m.get<std::string>()));
        signs.back().push_back(1);
      } else {
        blocks.back().push_back(af.index_of(m.at("argument").get<std::string>()));
        signs.back().push_back(m.value("sign", "+") == "-" ? -1 : 1);
      }
    }
  }
  return IssuePartition(af.size(), std::move(blocks), std::move(signs));
}

inline json disagreement_to_json(const ArgumentationFramework& af,
                                 const DisagreementSet& s,
                                 const IssuePartition* p) {
  auto render = [&](Mask m) {
    if (s.granularity == Granularity::argument) return names_json(af, m);
    json blocks = json::array();
    for (std::size_t k = 0; p && k < p->size(); ++k)
      if (m & bit(k)) blocks.push_back(names_json(af, p->block_mask(k)));
    return blocks;
  };
  if (!s.pair) return {{"set", render(s.first)}};
  return {{"io", render(s.first)}, {"du", render(s.second)}};
}

inline json lie_to_json(const ArgumentationFramework& af, const LieReport& r) {
  return {{"agent", r.agent},
          {"true_ballot", labeling_to_json(af, r.true_ballot)},
          {"lie", labeling_to_json(af, r.lie)},
          {"honest_outcome", labeling_to_json(af, r.honest_outcome)},
          {"lie_outcome", labeling_to_json(af, r.lie_outcome)},
          {"classification", to_string(r.classification)}};
}

// ---------------------------------------------------------------------------
// Name parsing

inline OperatorKind parse_operator(std::string_view s) {
  for (OperatorKind k : kAllOperators)
    if (to_string(k) == s) return k;
  if (s == "super_credulous" || s == "supercredulous")
    return OperatorKind::super_credulous;
  throw ConfigError("unknown operator '" + std::string(s) +
                    "' (expected skeptical, credulous, super-credulous)");
}

inline SemanticsKind parse_semantics(std::string_view s) {
  for (SemanticsKind k : {SemanticsKind::all, SemanticsKind::admissible,
                          SemanticsKind::complete})
    if (to_string(k) == s) return k;
  throw ConfigError("unknown semantics '" + std::string(s) +
                    "' (expected all, admissible, complete)");
}

inline CandidateSetKind parse_candidate_set(std::string_view s) {
  for (CandidateSetKind k :
       {CandidateSetKind::adm_leq, CandidateSetKind::adm_compat,
        CandidateSetKind::comp_compat})
    if (to_string(k) == s) return k;
  throw ConfigError("unknown candidate set '" + std::string(s) +
                    "' (expected adm-leq, adm-compat, comp-compat)");
}

// ---------------------------------------------------------------------------
// Run configuration

struct RunConfig {
  std::string framework_path;
  std::string profile_path;
  std::optional<OperatorKind> op;
  std::optional<MeasureKind> measure;
  /// Per-agent classes; overrides `measure` for the named agents.
  std::vector<std::pair<std::string, MeasureKind>> agent_measures;
  SemanticsKind ballot_gate = SemanticsKind::complete;
  SemanticsKind lie_space = SemanticsKind::complete;
  std::optional<CandidateSetKind> candidates;
  double iuo_alpha = kDefaultIuoAlpha;
  std::uint64_t seed = 42;
  std::size_t max_arguments = 16;
  std::string output_path;

  void validate() const {
    check_alpha(iuo_alpha);
    if (max_arguments == 0) throw ConfigError("size caps must be positive");
    if (max_arguments > kMaxArguments)
      throw ConfigError("argument cap cannot exceed " +
                        std::to_string(kMaxArguments));
  }

  EnumerationOptions enumeration() const { return {max_arguments}; }
};

}  // namespace argagg

#endif  // ARGAGG_IO_HPP_
