// Acceptance gate. Prints one PASS/FAIL line per criterion; exits non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include <wsc/report.hpp>
#include <wsc/wsc.hpp>

using namespace wsc;

namespace {

struct Outcome
{
  bool pass = true;
  std::string detail;
};

Outcome from_claims(const std::vector<ClaimResult>& claims)
{
  Outcome o;
  for (const ClaimResult& c : claims) {
    if (c.status != ClaimStatus::pass || c.cases == 0) {
      o.pass = false;
      o.detail += c.id + " [" + c.range + "] " + to_string(c.status) + ": " + c.witness + "; ";
    } else {
      o.detail += c.id + " " + std::to_string(c.cases) + " cases; ";
    }
  }
  return o;
}

Outcome grassmannian_purity(GrassmannianCache& cache)
{
  Outcome o = from_claims({check_grassmannian_purity(2, 7, cache)});
  if (cache.maximal(4, 2).front().size() != 5 || cache.maximal(7, 3).front().size() != 13) {
    o.pass = false;
    o.detail += "unexpected rank for C(4,2) or C(7,3)";
  }
  return o;
}

Outcome heptagon_fixture()
{
  Outcome o;
  auto fail = [&](const std::string& why) {
    o.pass = false;
    o.detail += why + "; ";
  };
  const GroundContext ctx(7, 3);
  std::vector<Subset> sets;
  for (const char* s : {"127", "123", "234", "345", "456", "567", "167", "126", "124", "134", "346", "467", "146"})
    sets.push_back(parse_subset(s, 7));
  const Collection c(ctx, sets);
  const Necklace top = largest_necklace(ctx);
  if (!is_separated(c))
    fail("not separated");
  if (!is_maximal(c, full_grassmannian(ctx)))
    fail("not maximal");
  if (!top.as_collection().is_subset_of(c))
    fail("does not contain the largest necklace");
  if (c.size() != 13 || grassmannian_rank(ctx) != 13)
    fail("size is not 13");
  const Tiling t = build_tiling(c);
  const ComplexReport cr = complex_check(t);
  if (!cr.pass)
    fail("complex check: " + cr.violations.front());
  if (t.euler_characteristic() != 1)
    fail("V - E + F = " + std::to_string(t.euler_characteristic()));
  if (cr.pass && !fills_region(t, necklace_curve(top)))
    fail("does not fill the regular 7-gon");
  o.detail += "V=" + std::to_string(t.vertices.size()) + " E=" + std::to_string(t.edges.size()) +
              " F=" + std::to_string(t.cell_count());
  return o;
}

Outcome conjecture_harness()
{
  Outcome o;
  std::size_t cases = 0, grassmann = 0, counterexamples = 0;
  for (int n = 1; n <= 4; ++n)
    for (int r = 0; r <= n; ++r) {
      const ConjectureReport rep = run_conjectures(n, r, ConjectureMode::exhaustive, 0, 1);
      const std::string text = report::conjectures(rep).dump();
      const auto parsed = nlohmann::json::parse(text);
      for (const char* key : {"n", "r", "mode", "tallies", "counterexamples", "cases", "grassmann_all_hold"})
        if (!parsed.contains(key)) {
          o.pass = false;
          o.detail += "report for (" + std::to_string(n) + "," + std::to_string(r) + ") lacks " + key + "; ";
        }
      if (!rep.grassmann_all_hold) {
        o.pass = false;
        o.detail += "a Grassmann necklace violates a property in C(" + std::to_string(n) + "," + std::to_string(r) + "); ";
      }
      cases += rep.cases.size();
      grassmann += rep.grassmann_cases;
      counterexamples += rep.counterexamples.size();
    }
  if (grassmann == 0) {
    o.pass = false;
    o.detail += "no Grassmann necklace special cases were enumerated; ";
  }
  o.detail += std::to_string(cases) + " generalized necklaces, " + std::to_string(grassmann) + " Grassmann, " +
              std::to_string(counterexamples) + " counterexamples reported";
  return o;
}

} // namespace

int main()
{
  const int threads = default_threads();
  GrassmannianCache cache;

  struct Criterion
  {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
    {"grassmannian-purity (2<=n<=7)", [&] { return grassmannian_purity(cache); }},
    {"interior-exterior-rank (n<=6)", [&] { return from_claims({check_interior_rank(1, 6, threads)}); }},
    {"chamber-interior (n<=6)", [&] { return from_claims({check_chamber_interior(1, 6, threads)}); }},
    {"interior-exterior-separated (n<=6)",
     [&] { return from_claims({check_interior_exterior_separated(1, 6, threads)}); }},
    {"restriction-maximal (exhaustive n<=5, 100 samples n=6)",
     [&] { return from_claims({check_restriction_maximal(1, 6, 5, 100, 1, threads, cache)}); }},
    {"square-diagonal (n<=6)", [&] { return from_claims({check_square_diagonals(2, 6, cache)}); }},
    {"two-necklace-cells (n<=5)", [&] { return from_claims({check_two_necklaces(1, 5, threads)}); }},
    {"necklace-lemmas (triples n<=6, intervals n<=7, less n<=5)",
     [&] {
       return from_claims({check_dominance_transitivity(1, 6), check_necklace_intervals(1, 7, threads),
                           check_less_criterion(1, 5, threads)});
     }},
    {"geometric-interior-and-fill-in (n<=6)",
     [&] {
       return from_claims({check_simple_curves(3, 6, threads), check_geometric_interior(3, 6, 5, threads),
                           check_fill_in(3, 6, threads)});
     }},
    {"mutation-connectivity-and-catalan (n<=6, C(2,n) n<=8)",
     [&] {
       Outcome o = from_claims({check_interior_mutation_connected(1, 6, threads), check_catalan(3, 8, cache)});
       if (cache.maximal(8, 2).size() != 132 || count_polygon_triangulations(8) != 132) {
         o.pass = false;
         o.detail += "C(8,2) count is not 132";
       }
       return o;
     }},
    {"heptagon-tiling-fixture", heptagon_fixture},
    {"conjecture-harness (n<=4, all r)", conjecture_harness},
  };

  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%02zu] %-4s %s (%.0f ms) -- %s\n", k + 1, o.pass ? "PASS" : "FAIL", criteria[k].name, ms,
                o.detail.c_str());
    failed += !o.pass;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
