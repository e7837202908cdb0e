#pragma once

// JSON views of the library's reports. Requires nlohmann/json on the include path.

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "conjectures.hpp"
#include "necklace.hpp"
#include "plabic.hpp"
#include "purity.hpp"
#include "verify.hpp"

namespace wsc::report {

using nlohmann::json;

inline json literals(const std::vector<Subset>& sets)
{
  json out = json::array();
  for (const Subset& s : sets)
    out.push_back(to_literal(s));
  return out;
}

inline json literals(const Collection& c) { return literals(c.members()); }

inline json purity(const PurityReport& rep, const std::string& domain, std::optional<int> alignments, double elapsed_ms,
                   std::uint64_t seed)
{
  json out{
    {"n", rep.context.n},
    {"r", rep.context.r},
    {"domain", domain},
    {"domain_size", rep.domain_size},
    {"num_maximal", rep.maximal_collections.size()},
    {"sizes", rep.sizes},
    {"pure", rep.pure},
    {"rank", rep.rank},
    {"alignments", alignments ? json(*alignments) : json(nullptr)},
    {"elapsed_ms", elapsed_ms},
    {"seed", seed},
  };
  return out;
}

inline json cell(const Cell& c)
{
  return json{{"key", to_literal(c.key)}, {"boundary", literals(c.boundary)}};
}

inline json geometry(const Tiling& t, std::optional<bool> fills, std::optional<bool> simple_curve,
                     const std::optional<ComplexReport>& check)
{
  json vertices = json::array();
  for (const auto& [s, p] : t.vertices)
    vertices.push_back(json{{"set", to_literal(s)}, {"x", p.x}, {"y", p.y}});
  json edges = json::array();
  for (const auto& [a, b] : t.edges)
    edges.push_back(json::array({to_literal(a), to_literal(b)}));
  json white = json::array(), black = json::array();
  for (const Cell& c : t.white_cells)
    white.push_back(cell(c));
  for (const Cell& c : t.black_cells)
    black.push_back(cell(c));
  json out{
    {"n", t.context.n},
    {"r", t.context.r},
    {"vertices", vertices},
    {"edges", edges},
    {"white_cells", white},
    {"black_cells", black},
    {"euler", t.euler_characteristic()},
    {"fills", fills ? json(*fills) : json(nullptr)},
    {"simple_curve", simple_curve ? json(*simple_curve) : json(nullptr)},
  };
  if (check)
    out["complex"] = json{{"pass", check->pass}, {"violations", check->violations}};
  return out;
}

inline json verification(const VerificationRun& run)
{
  json claims = json::array();
  for (const ClaimResult& c : run.claims)
    claims.push_back(json{
      {"id", c.id},
      {"statement", c.statement},
      {"range", c.range},
      {"status", to_string(c.status)},
      {"cases", c.cases},
      {"witness", c.witness.empty() ? json(nullptr) : json(c.witness)},
      {"elapsed_ms", c.elapsed_ms},
    });
  return json{
    {"suite", run.suite}, {"n_max", run.n_max},           {"seed", run.seed},     {"threads", run.threads},
    {"samples", run.samples}, {"incomplete", run.incomplete}, {"note", run.note},   {"pass", run.all_pass()},
    {"claims", claims},   {"elapsed_ms", run.elapsed_ms},
  };
}

/// Timing is left out so that a fixed seed reproduces the report byte for byte.
inline json conjectures(const ConjectureReport& rep)
{
  json cases = json::array();
  for (const GeneralizedCase& c : rep.cases)
    cases.push_back(json{
      {"sequence", literals(c.sequence)},
      {"grassmann", c.grassmann},
      {"interior_size", c.interior_size},
      {"exterior_size", c.exterior_size},
      {"interior_pure", c.interior_pure},
      {"exterior_pure", c.exterior_pure},
      {"interior_rank", c.interior_rank},
      {"exterior_rank", c.exterior_rank},
      {"restriction_holds", c.restriction_holds},
      {"restrictions_checked", c.restrictions_checked},
      {"separated", c.separated},
    });
  json tallies = json::array();
  for (const ConjectureTally& t : rep.tallies)
    tallies.push_back(json{{"id", t.id}, {"statement", t.statement}, {"checked", t.checked}, {"holds", t.holds}});
  json counter = json::array();
  for (const ConjectureCounterexample& c : rep.counterexamples)
    counter.push_back(json{{"conjecture", c.conjecture},
                           {"sequence", literals(c.sequence)},
                           {"grassmann", c.grassmann},
                           {"detail", c.detail}});
  return json{
    {"n", rep.n},
    {"r", rep.r},
    {"mode", rep.mode == ConjectureMode::exhaustive ? "exhaustive" : "sample"},
    {"trials", rep.trials},
    {"seed", rep.seed},
    {"generalized_necklaces", rep.cases.size()},
    {"grassmann_cases", rep.grassmann_cases},
    {"grassmann_all_hold", rep.grassmann_all_hold},
    {"tallies", tallies},
    {"counterexamples", counter},
    {"cases", cases},
  };
}

} // namespace wsc::report
