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

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "argagg/argagg.hpp"

using namespace argagg;

namespace {

struct Globals {
  bool pretty = false;
  std::uint64_t seed = 42;
  std::size_t max_args = 16;
  bool max_args_given = false;
  std::string output;
};

std::size_t env_cap(std::size_t fallback) {
  const char* v = std::getenv("ARGAGG_MAX_ARGS");
  if (!v || !*v) return fallback;
  char* end = nullptr;
  const unsigned long long n = std::strtoull(v, &end, 10);
  if (*end != '\0' || n == 0)
    throw ConfigError(std::string("ARGAGG_MAX_ARGS must be a positive integer, got '") +
                      v + "'");
  return static_cast<std::size_t>(n);
}

/// Inline JSON when the value starts with '{' or '[', a file path otherwise.
json json_arg(const std::string& value, const std::string& what) {
  const auto t = detail::trim(value);
  if (!t.empty() && (t.front() == '{' || t.front() == '['))
    return parse_json_text(std::string(t), what);
  return parse_json_text(read_file(value), value);
}

std::vector<MeasureKind> agent_classes(const Profile& p,
                                       const std::optional<MeasureKind>& base,
                                       const std::vector<std::string>& overrides) {
  std::map<std::string, MeasureKind> by_agent;
  for (const auto& o : overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos)
      throw ConfigError("--agent-measure expects AGENT=CLASS, got '" + o + "'");
    const auto agent = o.substr(0, eq);
    p.agent_index(agent);
    by_agent[agent] = parse_measure(o.substr(eq + 1));
  }
  std::vector<MeasureKind> ms;
  for (const auto& a : p.agents()) {
    auto it = by_agent.find(a);
    if (it != by_agent.end()) {
      ms.push_back(it->second);
    } else if (base) {
      ms.push_back(*base);
    } else {
      throw ConfigError("no preference class for agent '" + a +
                        "' (use --measure or --agent-measure)");
    }
  }
  return ms;
}

json classes_json(const std::vector<MeasureKind>& ms, const Profile& p) {
  json j = json::object();
  for (std::size_t i = 0; i < ms.size(); ++i) j[p.agents()[i]] = to_string(ms[i]);
  return j;
}

// ---------------------------------------------------------------------------
// Human-readable rendering

std::string names(const json& list) {
  std::string s = "{";
  for (std::size_t i = 0; i < list.size(); ++i)
    s += (i ? "," : "") + list[i].get<std::string>();
  return s + "}";
}

bool is_labeling(const json& j) {
  return j.is_object() && j.size() == 3 && j.contains("in") &&
         j.contains("out") && j.contains("undec");
}

std::string compact(const json& j) {
  if (is_labeling(j))
    return "in=" + names(j["in"]) + " out=" + names(j["out"]) +
           " undec=" + names(j["undec"]);
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

void render(std::ostream& os, const json& j, int depth) {
  const std::string pad(2 * depth, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if ((v.is_object() && !is_labeling(v)) ||
          (v.is_array() && !v.empty() && v.front().is_structured() &&
           !is_labeling(v.front()))) {
        os << pad << k << ":\n";
        render(os, v, depth + 1);
      } else if (v.is_array() && !v.empty() && is_labeling(v.front())) {
        os << pad << k << ":\n";
        for (const auto& e : v) os << pad << "  - " << compact(e) << "\n";
      } else {
        os << pad << k << ": " << compact(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (e.is_structured() && !is_labeling(e)) {
        os << pad << "-\n";
        render(os, e, depth + 1);
      } else {
        os << pad << "- " << compact(e) << "\n";
      }
    }
  } else {
    os << pad << compact(j) << "\n";
  }
}

void labeling_table(std::ostream& os, const ArgumentationFramework& af,
                    const std::vector<Labeling>& labs) {
  std::size_t w = 1;
  for (const auto& a : af.arguments()) w = std::max(w, a.size());
  w = std::max<std::size_t>(w, 5);
  os << std::string(4, ' ');
  for (const auto& a : af.arguments()) os << " " << std::setw(int(w)) << a;
  os << "\n";
  for (std::size_t i = 0; i < labs.size(); ++i) {
    os << std::setw(4) << i + 1;
    for (std::size_t a = 0; a < af.size(); ++a)
      os << " " << std::setw(int(w)) << to_string(labs[i][a]);
    os << "\n";
  }
}

std::string verdict_cell(const json& c, const char* field) {
  std::string cell = c[field].get<std::string>();
  if (c.contains("match") && !c["match"].get<bool>()) cell += " !";
  if (c.contains("status") && c["status"] != "match")
    cell += " (" + c["status"].get<std::string>() + ")";
  return cell;
}

void verdict_table(std::ostream& os, const json& rows, const char* first,
                   const std::vector<std::string>& cols, const char* field) {
  std::size_t w = 10;
  for (const auto& r : rows)
    for (const auto& c : cols) w = std::max(w, verdict_cell(r[c], field).size() + 2);
  os << std::left << std::setw(10) << first;
  for (const auto& c : cols) os << std::setw(int(w)) << c;
  os << "\n";
  for (const auto& r : rows) {
    os << std::setw(10) << r[first].get<std::string>();
    for (const auto& c : cols) os << std::setw(int(w)) << verdict_cell(r[c], field);
    os << "\n";
  }
  os << std::right;
}

void pretty_report(std::ostream& os, const json& r) {
  std::vector<std::string> ops, ms;
  for (OperatorKind o : kAllOperators) ops.emplace_back(to_string(o));
  for (MeasureKind m : kAllMeasures) ms.emplace_back(to_string(m));
  os << "instances:\n";
  render(os, r["instances"], 1);
  os << "\nPareto optimality (generated)\n";
  verdict_table(os, r["tables"]["pareto"], "measure", ops, "generated");
  os << "\nStrategy-proofness (generated)\n";
  verdict_table(os, r["tables"]["strategy_proofness"], "measure", ops, "generated");
  os << "\nCarry-over of Pareto optimality, row to column (generated)\n";
  verdict_table(os, r["tables"]["carry_over"]["cells"], "from", ms, "generated");
  os << "\nchecks:\n";
  for (const auto& c : r["checks"])
    os << "  " << std::left << std::setw(18) << c["verdict"].get<std::string>()
       << std::right << c["name"].get<std::string>() << " ("
       << c["instances_tested"].get<std::size_t>() << ")\n";
  os << "\n";
  render(os, json{{"summary", r["summary"]}}, 0);
}

// ---------------------------------------------------------------------------

struct Output {
  json data;
  std::function<void(std::ostream&)> pretty;
  int exit_code = 0;
};

void emit(const Globals& g, const Output& out) {
  std::ostringstream os;
  if (g.pretty) {
    if (out.pretty)
      out.pretty(os);
    else
      render(os, out.data, 0);
  } else {
    os << out.data.dump(2) << "\n";
  }
  if (g.output.empty()) {
    std::cout << os.str();
    return;
  }
  std::ofstream f(g.output, std::ios::binary);
  if (!f) throw ConfigError("cannot write '" + g.output + "'");
  f << os.str();
}

void error_envelope(const std::string& kind, const std::string& message,
                    const std::string& location = {}) {
  json e = {{"kind", kind}, {"message", message}};
  if (!location.empty()) e["location"] = location;
  std::cerr << json{{"error", e}}.dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Collective evaluation of abstract argumentation frameworks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--pretty", g.pretty, "Human-readable output instead of JSON");
  app.add_option("--seed", g.seed, "Seed for randomized paths")->capture_default_str();
  auto* max_opt = app.add_option("--max-args", g.max_args,
                                 "Argument cap for enumeration (env ARGAGG_MAX_ARGS)");
  app.add_option("-o,--output", g.output, "Write output to a file");

  std::string fw_path, profile_path, op_name, measure_name, semantics = "complete",
              gate = "complete", lie_space = "complete", candidates, liar,
              first, second, top, labeling_arg, partition_arg, format = "json";
  std::vector<std::string> agent_measures;
  double alpha = kDefaultIuoAlpha;
  bool first_only = false, experimental = false;
  std::size_t gen_n = 5, random_frameworks = 1000;
  double gen_p = 0.25;

  auto add_fw = [&](CLI::App* c) {
    c->add_option("-f,--framework", fw_path, "Framework file (apx)")->required();
  };
  auto add_profile = [&](CLI::App* c) {
    c->add_option("-p,--profile", profile_path, "Profile JSON (file or inline)")
        ->required();
    c->add_option("--ballot-gate", gate, "Semantics every ballot must satisfy")
        ->capture_default_str();
  };
  auto add_prefs = [&](CLI::App* c) {
    c->add_option("-m,--measure", measure_name, "Preference class for all agents");
    c->add_option("--agent-measure", agent_measures, "AGENT=CLASS override");
    c->add_option("--alpha", alpha, "IUO weight of in/out clashes, in (1, 2]")
        ->capture_default_str();
  };

  auto* c_lab = app.add_subcommand("labelings", "Enumerate labelings");
  add_fw(c_lab);
  c_lab->add_option("-s,--semantics", semantics, "all, admissible or complete")
      ->capture_default_str();

  auto* c_agg = app.add_subcommand("aggregate", "Operator outcome of a profile");
  add_fw(c_agg);
  add_profile(c_agg);
  c_agg->add_option("--op", op_name, "skeptical, credulous, super-credulous")->required();

  auto* c_iss = app.add_subcommand("issues", "Issue partition");
  add_fw(c_iss);

  auto* c_dist = app.add_subcommand("distance", "Disagreement between two labelings");
  add_fw(c_dist);
  c_dist->add_option("-m,--measure", measure_name, "Measure class")->required();
  c_dist->add_option("--first", first, "Labeling JSON (file or inline)")->required();
  c_dist->add_option("--second", second, "Labeling JSON (file or inline)")->required();
  c_dist->add_option("--alpha", alpha, "IUO weight of in/out clashes, in (1, 2]")
      ->capture_default_str();
  c_dist->add_option("--partition", partition_arg, "Issue partition JSON override");

  auto* c_pref = app.add_subcommand("prefer", "Relate two labelings for one agent");
  add_fw(c_pref);
  c_pref->add_option("-m,--measure", measure_name, "Measure class")->required();
  c_pref->add_option("--top", top, "The agent's top labeling")->required();
  c_pref->add_option("--first", first, "Labeling JSON (file or inline)")->required();
  c_pref->add_option("--second", second, "Labeling JSON (file or inline)")->required();
  c_pref->add_option("--alpha", alpha, "IUO weight of in/out clashes, in (1, 2]")
      ->capture_default_str();
  c_pref->add_option("--partition", partition_arg, "Issue partition JSON override");

  auto* c_par = app.add_subcommand("pareto", "Pareto optimality of an outcome");
  add_fw(c_par);
  add_profile(c_par);
  add_prefs(c_par);
  c_par->add_option("--op", op_name, "Operator whose outcome is checked");
  c_par->add_option("--labeling", labeling_arg, "Check this labeling instead");
  c_par->add_option("--candidates", candidates, "adm-leq, adm-compat, comp-compat");

  auto* c_man = app.add_subcommand("manipulate", "Strategic lies");
  add_fw(c_man);
  add_profile(c_man);
  add_prefs(c_man);
  c_man->add_option("--op", op_name, "Operator")->required();
  c_man->add_option("--liar", liar, "Only this agent (default: every agent)");
  c_man->add_option("--lie-space", lie_space, "Semantics of candidate lies")
      ->capture_default_str();
  c_man->add_flag("--first-only", first_only, "Stop at the first lie per agent");

  auto* c_ver = app.add_subcommand("verify", "Run the property and counterexample suite");
  c_ver->add_option("--random", random_frameworks, "Random frameworks")
      ->capture_default_str();
  c_ver->add_flag("--experimental-noncomplete-ballots", experimental,
                  "Also try admissible, non-complete ballots");

  auto* c_gen = app.add_subcommand("gen", "Random framework");
  c_gen->add_option("-n,--arguments", gen_n, "Number of arguments")->capture_default_str();
  c_gen->add_option("--edge-prob", gen_p, "Attack probability per ordered pair")
      ->capture_default_str();
  c_gen->add_option("--format", format, "json, apx or dot (raw text)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    error_envelope("usage-error", e.what());
    return 2;
  }

  try {
    g.max_args_given = max_opt->count() > 0;
    if (!g.max_args_given) g.max_args = env_cap(g.max_args);
    RunConfig cfg;
    cfg.framework_path = fw_path;
    cfg.profile_path = profile_path;
    cfg.seed = g.seed;
    cfg.max_arguments = g.max_args;
    cfg.iuo_alpha = alpha;
    cfg.output_path = g.output;
    cfg.ballot_gate = parse_semantics(gate);
    cfg.lie_space = parse_semantics(lie_space);
    if (!op_name.empty()) cfg.op = parse_operator(op_name);
    if (!measure_name.empty()) cfg.measure = parse_measure(measure_name);
    if (!candidates.empty()) cfg.candidates = parse_candidate_set(candidates);
    cfg.validate();
    const auto enumeration = cfg.enumeration();

    Output out;
    if (c_gen->parsed()) {
      const auto af = random_framework(g.seed, gen_n, gen_p);
      if (format == "json") {
        out.data = framework_to_json(af);
      } else if (format == "apx" || format == "dot") {
        const std::string text = format == "apx" ? serialize_framework(af) : to_dot(af);
        out.data = {{"format", format}, {"text", text}};
        out.pretty = [text](std::ostream& os) { os << text; };
        g.pretty = true;
      } else {
        throw ConfigError("unknown format '" + format + "' (expected apx, json, dot)");
      }
      emit(g, out);
      return 0;
    }

    if (c_ver->parsed()) {
      SuiteOptions so;
      so.seed = g.seed;
      if (g.max_args_given) so.max_exhaustive_args = g.max_args;
      so.random_frameworks = random_frameworks;
      so.experimental_noncomplete_ballots = experimental;
      const auto report = verify_theorem_suite(so);
      out.data = report.to_json();
      out.pretty = [&](std::ostream& os) { pretty_report(os, out.data); };
      out.exit_code = report.ok() ? 0 : 1;
      emit(g, out);
      return out.exit_code;
    }

    const auto af = load_framework(fw_path);
    if (af.size() > cfg.max_arguments)
      throw SizeError("framework has " + std::to_string(af.size()) +
                      " arguments, above the cap of " +
                      std::to_string(cfg.max_arguments));
    auto partition = [&]() {
      if (!partition_arg.empty())
        return partition_from_json(af, json_arg(partition_arg, "partition"));
      return issue_partition(af, enumeration);
    };
    auto load_profile = [&]() {
      const auto p = profile_from_json(af, json_arg(profile_path, "profile"));
      check_ballots(af, p, cfg.ballot_gate);
      return p;
    };

    if (c_lab->parsed()) {
      const auto kind = parse_semantics(semantics);
      const auto labs = enumerate_labelings(af, kind, enumeration);
      json arr = json::array();
      for (const auto& l : labs) arr.push_back(labeling_to_json(af, l));
      out.data = {{"semantics", to_string(kind)}, {"count", labs.size()}, {"labelings", arr}};
      out.pretty = [&af, labs, kind](std::ostream& os) {
        os << labs.size() << " " << to_string(kind) << " labeling(s)\n";
        labeling_table(os, af, labs);
      };
    } else if (c_agg->parsed()) {
      const auto p = load_profile();
      const auto l = detail::aggregate_unchecked(af, p.distinct(), *cfg.op);
      out.data = {{"operator", to_string(*cfg.op)}, {"outcome", labeling_to_json(af, l)}};
    } else if (c_iss->parsed()) {
      const auto part = issue_partition(af, enumeration);
      out.data = {{"issues", partition_to_json(af, part)}};
      out.pretty = [&af, part](std::ostream& os) {
        for (std::size_t k = 0; k < part.size(); ++k) {
          os << "issue " << k + 1 << ":";
          for (std::size_t m = 0; m < part.block(k).size(); ++m)
            os << " " << (part.signs(k)[m] > 0 ? "+" : "-")
               << af.name(part.block(k)[m]);
          os << "\n";
        }
      };
    } else if (c_dist->parsed()) {
      const auto m = *cfg.measure;
      const auto a = labeling_from_json(af, json_arg(first, "first"), "first");
      const auto b = labeling_from_json(af, json_arg(second, "second"), "second");
      std::optional<IssuePartition> part;
      if (is_issue_measure(m)) part = partition();
      const IssuePartition* pp = part ? &*part : nullptr;
      const auto set = disagreement(m, a, b, pp);
      out.data = {{"measure", to_string(m)},
                  {"disagreement", disagreement_to_json(af, set, pp)}};
      if (!is_set_measure(m)) {
        const double d = distance(m, a, b, pp, alpha);
        if (d == static_cast<double>(static_cast<std::size_t>(d)))
          out.data["distance"] = static_cast<std::size_t>(d);
        else
          out.data["distance"] = d;
      }
    } else if (c_pref->parsed()) {
      const auto m = *cfg.measure;
      AgentPreference agent{labeling_from_json(af, json_arg(top, "top"), "top"), m, alpha};
      const auto a = labeling_from_json(af, json_arg(first, "first"), "first");
      const auto b = labeling_from_json(af, json_arg(second, "second"), "second");
      std::optional<IssuePartition> part;
      if (is_issue_measure(m)) part = partition();
      const IssuePartition* pp = part ? &*part : nullptr;
      out.data = {{"measure", to_string(m)},
                  {"relation", to_string(relate(agent, a, b, pp))},
                  {"first_weakly_preferred", weak_prefers(agent, a, b, pp)},
                  {"second_weakly_preferred", weak_prefers(agent, b, a, pp)}};
    } else if (c_par->parsed()) {
      const auto p = load_profile();
      if (!cfg.op && labeling_arg.empty())
        throw ConfigError("pareto needs --op or --labeling");
      if (!cfg.candidates && !cfg.op)
        throw ConfigError("pareto with --labeling needs --candidates or --op");
      const auto kind = cfg.candidates ? *cfg.candidates : default_candidates(*cfg.op);
      const Labeling l =
          labeling_arg.empty()
              ? detail::aggregate_unchecked(af, p.distinct(), *cfg.op)
              : labeling_from_json(af, json_arg(labeling_arg, "labeling"), "labeling");
      const auto ms = agent_classes(p, cfg.measure, agent_measures);
      const auto prefs = PreferenceProfile::heterogeneous(p, ms, alpha);
      std::optional<IssuePartition> part;
      if (prefs.needs_partition()) part = partition();
      const auto cands = candidate_set(af, p, kind, enumeration);
      const auto dom = pareto_dominator(l, cands, prefs, part ? &*part : nullptr);
      out.data = json::object();
      if (cfg.op && labeling_arg.empty()) out.data["operator"] = to_string(*cfg.op);
      out.data["candidate_set"] = to_string(kind);
      out.data["classes"] = classes_json(ms, p);
      out.data["labeling"] = labeling_to_json(af, l);
      out.data["in_candidate_set"] = std::find(cands.begin(), cands.end(), l) != cands.end();
      out.data["pareto_optimal"] = !dom.has_value();
      if (dom) out.data["dominated_by"] = labeling_to_json(af, *dom);
    } else if (c_man->parsed()) {
      const auto p = load_profile();
      const auto ms = agent_classes(p, cfg.measure, agent_measures);
      const auto prefs = PreferenceProfile::heterogeneous(p, ms, alpha);
      std::optional<IssuePartition> part;
      if (prefs.needs_partition()) part = partition();
      LieSearchOptions lo{cfg.lie_space, enumeration, first_only};
      json lies = json::array();
      for (const auto& agent : p.agents()) {
        if (!liar.empty() && agent != liar) continue;
        for (const auto& r : find_strategic_lies(af, p, *cfg.op, prefs, agent,
                                                 part ? &*part : nullptr, lo))
          lies.push_back(lie_to_json(af, r));
      }
      if (!liar.empty()) p.agent_index(liar);
      const auto honest = detail::aggregate_unchecked(af, p.distinct(), *cfg.op);
      out.data = {{"operator", to_string(*cfg.op)},
                  {"classes", classes_json(ms, p)},
                  {"lie_space", to_string(cfg.lie_space)},
                  {"honest_outcome", labeling_to_json(af, honest)},
                  {"strategy_proof_here", lies.empty()},
                  {"lies", lies}};
    }
    emit(g, out);
    return out.exit_code;
  } catch (const ParseError& e) {
    error_envelope(e.kind(), e.what(), e.location());
  } catch (const BallotError& e) {
    error_envelope(e.kind(), e.what(), "agents." + e.agent());
  } catch (const Error& e) {
    error_envelope(e.kind(), e.what());
  } catch (const std::exception& e) {
    error_envelope("internal-error", e.what());
  }
  return 2;
}
