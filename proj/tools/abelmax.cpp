// abelmax: m(G) computations, verification suites and number-theory series.
//
// Exit codes: 0 ok (expected exceptions included), 1 verification failure,
// 2 usage or input error, 3 capacity error.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "abelmax/catalog.hpp"
#include "abelmax/errors.hpp"
#include "abelmax/numtheory.hpp"
#include "abelmax/search.hpp"
#include "abelmax/verify.hpp"

namespace {

using namespace abelmax;

enum Exit : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kCapacity = 3 };

struct RunConfig
{
  std::uint64_t brute_cap = kDefaultBruteCap;
  std::uint64_t enum_cap = kDefaultEnumCap;
  int workers = 1;
  std::string out;
  std::string format = "text";
  std::string manifest;

  VerifyConfig verify() const
  {
    VerifyConfig cfg;
    cfg.brute_cap = brute_cap;
    cfg.enum_cap = enum_cap;
    cfg.workers = workers;
    return cfg;
  }
};

void emit(RunConfig const &rc, std::string const &text)
{
  if (rc.out.empty() || rc.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(rc.out, std::ios::binary);
  if (!f)
    throw std::runtime_error("cannot write " + rc.out);
  f << text;
}

std::string fixed12(double x)
{
  std::ostringstream s;
  s << std::setprecision(12) << x;
  return s.str();
}

int cmd_numtheory(RunConfig const &rc, std::string const &kind, std::uint64_t n)
{
  std::string text;
  if (kind == "g") {
    text = nt::g_of(n).to_string();
  } else if (kind == "h") {
    text = nt::h_of(n).to_string();
  } else if (kind == "f") {
    text = nt::f_of(n).to_string();
  } else if (kind == "ratio") {
    text = fixed12(nt::asymptotic_ratio(n).ratio);
  } else if (kind == "exceptions") {
    for (auto m : nt::large_prime_count_exceptions(n))
      text += (text.empty() ? "" : " ") + std::to_string(m);
  } else if (kind == "nagura") {
    auto const scan = nt::nagura_scan(n);
    text = "violations";
    for (auto x : scan.violations)
      text += " " + std::to_string(x);
    text += "\nendpoint_only";
    for (auto x : scan.endpoint_only)
      text += " " + std::to_string(x);
  }
  emit(rc, text + "\n");
  return kOk;
}

int cmd_mgroup(RunConfig const &rc, std::string const &spec_text)
{
  auto const spec = GroupSpec::parse(spec_text);
  auto const a = analyze(spec, rc.verify());
  auto const &w = a.max_abelian.witness;

  if (rc.format == "json") {
    nlohmann::ordered_json gens = nlohmann::ordered_json::array();
    for (auto const &g : w.generators)
      gens.push_back(g.to_cycle_string());
    nlohmann::ordered_json j{{"group_id", a.id},
                             {"order", a.group.order().to_string()},
                             {"m", a.m()},
                             {"witness", gens},
                             {"nodes", a.max_abelian.nodes_explored}};
    emit(rc, j.dump(2) + "\n");
    return kOk;
  }
  std::ostringstream s;
  if (rc.format == "csv") {
    s << "group_id,order,m,nodes\n"
      << a.id << ',' << a.group.order().to_string() << ',' << a.m() << ','
      << a.max_abelian.nodes_explored << '\n';
  } else {
    s << "group " << a.id << "\norder " << a.group.order().to_string() << "\nm=" << a.m()
      << "\nwitness";
    for (auto const &g : w.generators)
      s << ' ' << g.to_cycle_string();
    s << "\nnodes " << a.max_abelian.nodes_explored << '\n';
  }
  emit(rc, s.str());
  return kOk;
}

std::vector<GroupSpec> collect_specs(RunConfig const &rc, std::vector<std::string> const &texts)
{
  std::vector<GroupSpec> specs;
  if (texts.empty()) {
    auto const path = rc.manifest.empty() ? default_manifest_path()
                                          : resolve_data_path(rc.manifest);
    return load_manifest(path);
  }
  for (auto const &t : texts)
    specs.push_back(GroupSpec::parse(t));
  return specs;
}

std::string render(RunConfig const &rc, VerificationReport const &r)
{
  if (rc.format == "json")
    return to_json(r);
  if (rc.format == "csv")
    return to_csv(r);
  return to_text(r);
}

int cmd_verify(RunConfig const &rc, std::string const &suite, std::vector<std::string> const &texts)
{
  auto const cfg = rc.verify();
  auto const specs = collect_specs(rc, texts);
  auto const groups = analyze_all(specs, cfg);
  auto const report = run_suite(suite, groups, cfg);
  emit(rc, render(rc, report));

  for (auto const &c : report.checks) {
    if (c.status == CheckStatus::fail)
      std::cerr << "FAILED " << c.theorem << ' ' << c.group_id << '\n';
  }
  // text reports carry their own summary line
  bool const to_file = !rc.out.empty() && rc.out != "-";
  if (to_file || rc.format != "text") {
    auto const s = report.summary();
    (to_file ? std::cout : std::cerr)
      << "suite " << suite << ": " << s.total << " checks, " << s.passed << " pass, " << s.failed
      << " fail, " << s.expected_exceptions << " expected, " << s.unverified << " unverified\n";
  }
  return report.ok() ? kOk : kVerifyFailed;
}

int cmd_classify(RunConfig const &rc, std::vector<std::string> const &texts)
{
  auto const cfg = rc.verify();
  std::string text;
  for (auto const &t : texts) {
    auto const a = analyze(GroupSpec::parse(t), cfg);
    auto const r = classify_large_prime_case(a, cfg);
    if (rc.format == "json") {
      text += to_json(r);
      continue;
    }
    text += r.group_id + " m=" + std::to_string(r.m) + " large_primes=";
    for (std::size_t i = 0; i < r.large_primes.size(); ++i)
      text += (i ? "," : "") + std::to_string(r.large_primes[i]);
    text += " case=" + std::string(case_name(r.which)) + "\n";
  }
  emit(rc, text);
  return kOk;
}

// "a:b" or "a:b:step", inclusive.
std::vector<std::uint64_t> parse_range(std::string const &text)
{
  std::vector<std::uint64_t> parts;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ':')) {
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
      v = std::stoull(item, &used);
    } catch (std::exception const &) {
      used = 0;
    }
    if (used == 0 || used != item.size())
      throw ParseError("bad range '" + text + "', expected a:b or a:b:step");
    parts.push_back(v);
  }
  if (parts.size() < 2 || parts.size() > 3 || (parts.size() == 3 && parts[2] == 0))
    throw ParseError("bad range '" + text + "', expected a:b or a:b:step");
  std::vector<std::uint64_t> out;
  std::uint64_t const step = parts.size() == 3 ? parts[2] : 1;
  for (auto n = parts[0]; n <= parts[1]; n += step)
    out.push_back(n);
  return out;
}

int cmd_series(RunConfig const &rc, std::vector<std::uint64_t> ns, std::string const &range)
{
  if (!range.empty()) {
    auto const more = parse_range(range);
    ns.insert(ns.end(), more.begin(), more.end());
  }
  std::string text = "n,log_f,ratio\n";
  for (auto n : ns) {
    auto const s = nt::asymptotic_ratio(n);
    text += std::to_string(s.n) + "," + fixed12(s.log_f) + "," + fixed12(s.ratio) + "\n";
  }
  emit(rc, text);
  return kOk;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Maximal abelian subgroup orders and divisibility checks"};
  app.require_subcommand(1);

  RunConfig rc;
  app.add_option("--brute-cap", rc.brute_cap, "largest order for the brute-force oracle")
    ->envname("ABELMAX_BRUTE_CAP")
    ->check(CLI::PositiveNumber);
  app.add_option("--enum-cap", rc.enum_cap, "largest order that may be enumerated")
    ->envname("ABELMAX_ENUM_CAP")
    ->check(CLI::PositiveNumber);
  app.add_option("--workers", rc.workers, "OpenMP threads for the search")
    ->envname("ABELMAX_WORKERS")
    ->check(CLI::PositiveNumber);
  app.add_option("--out", rc.out, "output file (default stdout)");
  app.add_option("--format", rc.format, "json | csv | text")
    ->envname("ABELMAX_FORMAT")
    ->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--manifest", rc.manifest, "spec list used when no specs are given")
    ->envname("ABELMAX_MANIFEST");

  std::string nt_kind;
  std::uint64_t nt_n = 0;
  auto *numtheory = app.add_subcommand("numtheory", "g, h, f, ratio, exceptions or nagura at N");
  numtheory->add_option("kind", nt_kind)
    ->required()
    ->check(CLI::IsMember({"g", "h", "f", "ratio", "exceptions", "nagura"}));
  numtheory->add_option("n", nt_n)->required();

  std::string spec_text;
  auto *mgroup = app.add_subcommand("mgroup", "m(G) with a witness");
  mgroup->add_option("spec", spec_text, "e.g. alt:5, psl2:13, file:groups/m11.gens")->required();

  std::string suite;
  std::vector<std::string> verify_specs;
  auto *verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
  verify->add_option("specs", verify_specs, "groups (default: the manifest)");

  std::vector<std::string> classify_specs;
  auto *classify = app.add_subcommand("classify", "large-prime case of each group");
  classify->add_option("specs", classify_specs)->required();

  std::vector<std::uint64_t> series_ns;
  std::string series_range;
  auto *series = app.add_subcommand("series", "CSV of log f(n) / (n/2)");
  series->add_option("n", series_ns);
  series->add_option("--range", series_range, "a:b or a:b:step");

  for (auto *sub : {numtheory, mgroup, verify, classify, series})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const &e) {
    return app.exit(e);
  } catch (CLI::ParseError const &e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*numtheory)
      return cmd_numtheory(rc, nt_kind, nt_n);
    if (*mgroup)
      return cmd_mgroup(rc, spec_text);
    if (*verify)
      return cmd_verify(rc, suite, verify_specs);
    if (*classify)
      return cmd_classify(rc, classify_specs);
    if (*series)
      return cmd_series(rc, series_ns, series_range);
  } catch (CapacityError const &e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return kCapacity;
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
