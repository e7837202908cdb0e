// wsc: command-line front end for the weak-separation toolkit.
//
// Exit status: 0 success, 1 a checked property was falsified, 2 invalid
// input, 3 resource limit reached.

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <wsc/report.hpp>
#include <wsc/wsc.hpp>

namespace {

using namespace wsc;
using nlohmann::json;

constexpr int kExitFalsified = 1;

struct Globals
{
  std::optional<int> n;
  std::optional<int> r;
  bool json = false;
  std::uint64_t seed = 1;
  int threads = default_threads();
  std::size_t limit = kDefaultDomainLimit;
  bool auto_reduce = false;
};

struct NecklaceSource
{
  std::string file;
  std::string perm;
  bool largest = false;
};

void add_necklace_source(CLI::App* sub, NecklaceSource& src, bool with_largest)
{
  auto* f = sub->add_option("--necklace", src.file, "necklace file (one set per line)");
  auto* p = sub->add_option("--perm", src.perm, "permutation image list, e.g. 4,3,1,2");
  f->excludes(p);
  if (with_largest)
    sub->add_flag("--largest", src.largest, "largest necklace of C(n,r) (needs --n and --r)");
}

Necklace load_necklace(const NecklaceSource& src, const Globals& g, std::vector<Element>* removed = nullptr)
{
  Necklace nk;
  if (!src.file.empty())
    nk = read_necklace_file(src.file);
  else if (!src.perm.empty())
    nk = permutation_to_necklace(parse_permutation(src.perm));
  else if (src.largest) {
    if (!g.n || !g.r)
      throw InputError("--largest needs --n and --r");
    nk = largest_necklace(GroundContext(*g.n, *g.r));
  } else
    throw InputError("give a necklace with --necklace FILE or --perm LIST");
  if (g.n && *g.n != nk.n())
    throw InputError("--n=" + std::to_string(*g.n) + " contradicts the necklace (n=" + std::to_string(nk.n()) + ")");
  if (g.auto_reduce && !nk.dummy_free()) {
    auto red = reduce_dummies(nk);
    if (removed)
      *removed = red.removed;
    nk = red.necklace;
  }
  return nk;
}

int infer_n(const Globals& g, const std::vector<std::string>& literals)
{
  if (g.n)
    return *g.n;
  int n = 1;
  for (const auto& l : literals)
    for (Element e : parse_subset(l, l.find(',') == std::string::npos ? 9 : kMaxGround).elements())
      n = std::max(n, e);
  return n;
}

std::string join(const std::vector<std::string>& parts, const char* sep)
{
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k)
    out += (k ? sep : "") + parts[k];
  return out;
}

std::vector<std::string> lits(const std::vector<Subset>& sets)
{
  std::vector<std::string> out;
  for (const Subset& s : sets)
    out.push_back(to_literal(s));
  return out;
}

double ms_since(std::chrono::steady_clock::time_point t)
{
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t).count();
}

// ---------------------------------------------------------------------------

int cmd_ws(const Globals& g, const std::string& xs, const std::string& ys)
{
  const int n = infer_n(g, {xs, ys});
  const Subset x = parse_subset(xs, n), y = parse_subset(ys, n);
  const bool sep = weakly_separated(x, y);
  std::vector<int> shifts;
  for (int i = 1; i <= n; ++i)
    if (dominates(x, y, CyclicShift{i}))
      shifts.push_back(i);
  if (g.json)
    std::cout << json{{"x", to_literal(x)}, {"y", to_literal(y)}, {"n", n}, {"separated", sep},
                      {"neighbors", neighbors(x, y)}, {"dominating_shifts", shifts}}
                   .dump(2)
              << "\n";
  else {
    std::cout << to_literal(x) << (sep ? " || " : " crosses ") << to_literal(y) << " (n=" << n << ")\n";
    if (!shifts.empty()) {
      std::cout << "X <<_i Y for i in {";
      for (std::size_t k = 0; k < shifts.size(); ++k)
        std::cout << (k ? "," : "") << shifts[k];
      std::cout << "}\n";
    }
  }
  return 0;
}

int cmd_necklace(const Globals& g, const NecklaceSource& src)
{
  std::vector<Element> removed;
  const Necklace nk = load_necklace(src, g, &removed);
  json out{{"n", nk.n()},
           {"r", nk.r()},
           {"necklace", lits(nk.sets())},
           {"dummy_free", nk.dummy_free()},
           {"connected", nk.connected()},
           {"dummies", nk.dummies()},
           {"removed", removed}};
  if (nk.dummy_free()) {
    const Permutation p = necklace_to_permutation(nk);
    json aligned = json::array();
    for (const Alignment& a : alignments(p))
      aligned.push_back({a.i, a.j});
    out["permutation"] = to_literal(p);
    out["average_rotation"] = average_rotation(p);
    out["alignments"] = aligned;
    const auto simple = find_simple_alignment(p);
    out["simple_alignment"] = simple ? json{simple->i, simple->j} : json(nullptr);
  }
  if (g.json) {
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << "necklace (n=" << nk.n() << ", r=" << nk.r() << "): " << join(lits(nk.sets()), " ") << "\n";
  std::cout << "connected: " << (nk.connected() ? "yes" : "no") << ", dummy-free: " << (nk.dummy_free() ? "yes" : "no")
            << "\n";
  if (!removed.empty())
    std::cout << "reduced away dummies: " << out["removed"].dump() << "\n";
  if (nk.dummy_free()) {
    std::cout << "permutation: " << out["permutation"].get<std::string>() << "\n";
    std::cout << "alignments (" << out["alignments"].size() << "): " << out["alignments"].dump() << "\n";
    std::cout << "simple alignment: " << out["simple_alignment"].dump() << "\n";
  } else
    std::cout << "dummies: " << out["dummies"].dump() << " (use --auto-reduce)\n";
  return 0;
}

Collection region_of(const Necklace& nk, const std::string& which)
{
  if (which == "int")
    return interior(nk);
  if (which == "out")
    return exterior(nk);
  if (which == "sep")
    return separated_fan(nk);
  throw InputError("unknown region '" + which + "' (int, out, sep)");
}

int cmd_region(const Globals& g, const NecklaceSource& src, const std::string& which, const std::string& out_path)
{
  const Necklace nk = load_necklace(src, g);
  const Collection c = region_of(nk, which);
  if (!out_path.empty())
    write_text_file(out_path, format_collection(c));
  if (g.json)
    std::cout << json{{"n", nk.n()}, {"r", nk.r()}, {"region", which}, {"size", c.size()}, {"sets", report::literals(c)}}
                   .dump(2)
              << "\n";
  else if (out_path.empty())
    std::cout << format_collection(c);
  else
    std::cout << which << ": " << c.size() << " sets written to " << out_path << "\n";
  return 0;
}

int cmd_purity(const Globals& g, const std::string& domain, const std::string& path, const NecklaceSource& src)
{
  const auto start = std::chrono::steady_clock::now();
  Collection dom;
  std::optional<int> aligned;
  std::optional<int> expected_rank;
  if (domain == "grassmannian") {
    if (!g.n || !g.r)
      throw InputError("--domain grassmannian needs --n and --r");
    dom = full_grassmannian(GroundContext(*g.n, *g.r));
    if (*g.r >= 1 && *g.r < *g.n)
      expected_rank = grassmannian_rank(dom.context());
  } else if (domain == "int" || domain == "out") {
    const Necklace nk = load_necklace(src, g);
    dom = domain == "int" ? interior(nk) : exterior(nk);
    aligned = static_cast<int>(alignments(necklace_to_permutation(nk)).size());
    expected_rank = domain == "int" ? grassmannian_rank(nk.context()) - *aligned : *aligned;
  } else if (domain == "file") {
    if (path.empty())
      throw InputError("--domain file needs a PATH");
    dom = read_collection_file(path, g.n);
  } else
    throw InputError("unknown domain '" + domain + "' (grassmannian, int, out, file)");

  const PurityReport rep = purity_report(dom, g.limit);
  const bool falsified = expected_rank && (!rep.pure || rep.rank != *expected_rank);
  if (g.json) {
    json j = report::purity(rep, domain, aligned, ms_since(start), g.seed);
    if (expected_rank)
      j["expected_rank"] = *expected_rank;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "domain " << domain << " (n=" << rep.context.n << ", r=" << rep.context.r << "): " << rep.domain_size
              << " sets, " << rep.maximal_collections.size() << " maximal separated collections\n";
    std::cout << (rep.pure ? "pure, rank " : "not pure, sizes ") << (rep.pure ? std::to_string(rep.rank) : "");
    if (!rep.pure)
      for (std::size_t k = 0; k < rep.sizes.size(); ++k)
        std::cout << (k ? "," : "") << rep.sizes[k];
    std::cout << "\n";
    if (aligned)
      std::cout << "alignments: " << *aligned << "\n";
    if (expected_rank)
      std::cout << "expected rank " << *expected_rank << ": " << (falsified ? "MISMATCH" : "ok") << "\n";
  }
  return falsified ? kExitFalsified : 0;
}

int cmd_mutate(const Globals& g, const std::string& path, bool list, std::optional<std::size_t> apply,
               const std::string& out_path)
{
  const Collection c = read_collection_file(path, g.n);
  if (!is_separated(c))
    throw InputError("collection is not separated");
  const auto muts = find_mutations(c);
  if (apply) {
    if (*apply >= muts.size())
      throw InputError("mutation index " + std::to_string(*apply) + " out of range (" + std::to_string(muts.size()) +
                       " available)");
    const Collection next = apply_mutation(c, muts[*apply]);
    if (!out_path.empty())
      write_text_file(out_path, format_collection(next));
    if (g.json)
      std::cout << json{{"applied", *apply},
                        {"from", to_literal(muts[*apply].from)},
                        {"to", to_literal(muts[*apply].to)},
                        {"collection", report::literals(next)}}
                     .dump(2)
                << "\n";
    else if (out_path.empty())
      std::cout << format_collection(next);
    return 0;
  }
  (void)list;
  if (g.json) {
    json arr = json::array();
    for (std::size_t k = 0; k < muts.size(); ++k)
      arr.push_back({{"index", k},
                     {"base", to_literal(muts[k].base)},
                     {"quadruple", {muts[k].i, muts[k].j, muts[k].k, muts[k].l}},
                     {"from", to_literal(muts[k].from)},
                     {"to", to_literal(muts[k].to)}});
    std::cout << json{{"n", c.context().n}, {"r", c.context().r}, {"mutations", arr}}.dump(2) << "\n";
  } else {
    std::cout << muts.size() << " mutation(s)\n";
    for (std::size_t k = 0; k < muts.size(); ++k)
      std::cout << "[" << k << "] " << to_literal(muts[k].from) << " -> " << to_literal(muts[k].to) << "  (A="
                << to_literal(muts[k].base) << ", i,j,k,l=" << muts[k].i << "," << muts[k].j << "," << muts[k].k
                << "," << muts[k].l << ")\n";
  }
  return 0;
}

int cmd_tile(const Globals& g, const std::string& path, const std::string& necklace_path, const std::string& svg,
             bool check)
{
  const Collection c = read_collection_file(path, g.n);
  const Tiling t = build_tiling(c);
  std::optional<PolyCurve> curve;
  const GroundContext ctx = c.context();
  if (!necklace_path.empty()) {
    const Necklace nk = read_necklace_file(necklace_path);
    if (nk.context() != ctx)
      throw InputError("necklace and collection have different (n, r)");
    curve = curve_through(nk.sets());
  } else if (ctx.n >= 3 && ctx.r >= 1 && ctx.r < ctx.n)
    curve = curve_through(largest_necklace(ctx).sets());

  if (!svg.empty())
    render_svg(t, curve && curve->simple() ? curve : std::nullopt, svg);

  std::optional<ComplexReport> cr;
  std::optional<bool> fills;
  if (check) {
    cr = complex_check(t);
    if (cr->pass && curve && curve->simple()) {
      try {
        fills = fills_region(t, *curve);
      } catch (const PreconditionError&) {
        fills = false;
      }
    }
  }
  const std::optional<bool> simple = curve ? std::optional<bool>(curve->simple()) : std::nullopt;
  if (g.json)
    std::cout << report::geometry(t, fills, simple, cr).dump(2) << "\n";
  else {
    std::cout << "vertices " << t.vertices.size() << ", edges " << t.edges.size() << ", white cells "
              << t.white_cells.size() << ", black cells " << t.black_cells.size() << ", V-E+F "
              << t.euler_characteristic() << "\n";
    if (simple)
      std::cout << "curve simple: " << (*simple ? "yes" : "no") << "\n";
    if (cr) {
      std::cout << "complex: " << (cr->pass ? "ok" : "VIOLATED") << "\n";
      for (const auto& v : cr->violations)
        std::cout << "  " << v << "\n";
    }
    if (fills)
      std::cout << "fills the curve: " << (*fills ? "yes" : "no") << "\n";
    if (!svg.empty())
      std::cout << "wrote " << svg << "\n";
  }
  return cr && !cr->pass ? kExitFalsified : 0;
}

int cmd_verify(const Globals& g, const std::string& suite, int n_max, int samples)
{
  const VerificationRun run = run_verify(suite, {n_max, g.seed, g.threads, samples});
  if (g.json)
    std::cout << report::verification(run).dump(2) << "\n";
  else {
    for (const ClaimResult& c : run.claims) {
      std::printf("%-4s %-30s %10zu cases %9.1f ms  [%s]\n", c.status == ClaimStatus::pass   ? "ok"
                                                             : c.status == ClaimStatus::fail ? "FAIL"
                                                                                              : "skip",
                  c.id.c_str(), c.cases, c.elapsed_ms, c.range.c_str());
      if (c.status == ClaimStatus::fail)
        std::printf("     witness: %s\n", c.witness.c_str());
    }
    std::printf("%s in %.1f ms%s\n", run.all_pass() ? "all claims hold" : "SOME CLAIMS FAILED", run.elapsed_ms,
                run.incomplete ? (" (incomplete: " + run.note + ")").c_str() : "");
    std::fflush(stdout);
  }
  if (!run.all_pass())
    return kExitFalsified;
  return run.incomplete ? ResourceError("").exit_code() : 0;
}

int cmd_conjectures(const Globals& g, const std::string& mode, int trials)
{
  if (!g.n || !g.r)
    throw InputError("conjectures needs --n and --r");
  ConjectureMode m;
  if (mode == "exhaustive")
    m = ConjectureMode::exhaustive;
  else if (mode == "sample")
    m = ConjectureMode::sample;
  else
    throw InputError("unknown mode '" + mode + "' (exhaustive, sample)");
  const ConjectureReport rep = run_conjectures(*g.n, *g.r, m, trials, g.seed, g.limit);
  if (g.json)
    std::cout << report::conjectures(rep).dump(2) << "\n";
  else {
    std::cout << rep.cases.size() << " generalized necklaces in C(" << rep.n << "," << rep.r << "), "
              << rep.grassmann_cases << " of them Grassmann necklaces\n";
    for (const auto& t : rep.tallies)
      std::cout << "  " << t.id << ": holds in " << t.holds << "/" << t.checked << "  (" << t.statement << ")\n";
    std::cout << "Grassmann special cases all hold: " << (rep.grassmann_all_hold ? "yes" : "NO") << "\n";
    for (const auto& c : rep.counterexamples)
      std::cout << "counterexample [" << c.conjecture << "] " << join(lits(c.sequence), " ") << ": " << c.detail
                << "\n";
  }
  // counterexamples are findings, not failures
  return 0;
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Weakly separated collections, necklaces and plabic tilings"};
  app.fallthrough();
  app.require_subcommand(1);
  Globals g;
  app.add_option("--n", g.n, "ground set size");
  app.add_option("--r", g.r, "subset cardinality");
  app.add_flag("--json", g.json, "machine-readable JSON output");
  app.add_option("--seed", g.seed, "seed for sampled checks")->capture_default_str();
  app.add_option("--threads", g.threads, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--limit", g.limit, "largest domain for maximal-collection enumeration")->capture_default_str();
  app.add_flag("--auto-reduce", g.auto_reduce, "delete dummy elements of a necklace before use");

  std::string x, y;
  auto* ws = app.add_subcommand("ws", "weak separation of two sets");
  ws->add_option("X", x)->required();
  ws->add_option("Y", y)->required();

  NecklaceSource nsrc;
  auto* neck = app.add_subcommand("necklace", "validate a necklace and show its permutation and alignments");
  add_necklace_source(neck, nsrc, true);

  NecklaceSource rsrc;
  std::string region_kind, region_out;
  auto* region = app.add_subcommand("region", "interior, exterior or separated fan of a necklace");
  region->add_option("kind", region_kind, "int | out | sep")->required()->check(CLI::IsMember({"int", "out", "sep"}));
  add_necklace_source(region, rsrc, true);
  region->add_option("--out", region_out, "write the collection to a file");

  NecklaceSource psrc;
  std::string domain = "grassmannian", domain_path;
  auto* purity = app.add_subcommand("purity", "maximal separated collections, purity and rank of a domain");
  purity->add_option("--domain", domain, "grassmannian | int | out | file")
    ->check(CLI::IsMember({"grassmannian", "int", "out", "file"}))
    ->capture_default_str();
  purity->add_option("path", domain_path, "collection file for --domain file");
  add_necklace_source(purity, psrc, true);

  std::string mut_path, mut_out;
  bool mut_list = false;
  std::optional<std::size_t> mut_apply;
  auto* mutate = app.add_subcommand("mutate", "list or apply square moves");
  mutate->add_option("--collection", mut_path, "collection file")->required();
  auto* lst = mutate->add_flag("--list", mut_list, "list available mutations (default)");
  auto* app_opt = mutate->add_option("--apply", mut_apply, "apply the mutation with this index");
  lst->excludes(app_opt);
  mutate->add_option("--out", mut_out, "write the mutated collection to a file");

  std::string tile_path, tile_neck, tile_svg;
  bool tile_check = false;
  auto* tile = app.add_subcommand("tile", "plabic tiling of a separated collection");
  tile->add_option("--collection", tile_path, "collection file")->required();
  tile->add_option("--necklace", tile_neck, "necklace file for the boundary curve (default: largest necklace)");
  tile->add_option("--svg", tile_svg, "write an SVG drawing");
  tile->add_flag("--check", tile_check, "check the complex property and fill-in");

  std::string suite = "theorems";
  int n_max = 6, samples = 100;
  auto* verify = app.add_subcommand("verify", "exhaustive verification battery");
  verify->add_option("--suite", suite, "battery name")->capture_default_str();
  verify->add_option("--n-max", n_max, "largest ground set")->capture_default_str();
  verify->add_option("--samples", samples, "sampled completions per necklace where sampling is used")
    ->capture_default_str();

  std::string mode = "exhaustive";
  int trials = 200;
  auto* conj = app.add_subcommand("conjectures", "property checks on generalized necklaces");
  conj->add_option("--mode", mode, "exhaustive | sample")->capture_default_str();
  conj->add_option("--trials", trials, "random walks in sample mode")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*ws)
      return cmd_ws(g, x, y);
    if (*neck)
      return cmd_necklace(g, nsrc);
    if (*region)
      return cmd_region(g, rsrc, region_kind, region_out);
    if (*purity)
      return cmd_purity(g, domain, domain_path, psrc);
    if (*mutate)
      return cmd_mutate(g, mut_path, mut_list, mut_apply, mut_out);
    if (*tile)
      return cmd_tile(g, tile_path, tile_neck, tile_svg, tile_check);
    if (*verify)
      return cmd_verify(g, suite, n_max, samples);
    if (*conj)
      return cmd_conjectures(g, mode, trials);
  } catch (const wsc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
