// sifkit: library front end for stabilized-interval-free permutation
// machinery: counting, splitting, the list bijection, and series checks.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "sif/bijection.hpp"
#include "sif/counting.hpp"
#include "sif/noncrossing.hpp"
#include "sif/series.hpp"
#include "sif/split.hpp"
#include "sif/text.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_usage = 1;
constexpr int exit_validation = 2;
constexpr int exit_verification = 3;

struct Options {
  std::string command;
  std::string perm_text;
  std::string list_text;
  int max_n = 0;
  int n = 0;
  int k = 0;
  int order = 0;
  int step = 1;
  bool bfile = false;
  bool json = false;
  bool force = false;
  bool dump = false;
  int threads = 0;
  std::string check;
  std::string render = "none";
};

int run_count(const Options& opt) {
  sif::CountContext ctx;
  // The table is already in OEIS b-file form: "n a_n", one per line.
  (void)opt.bfile;
  for (int n = 0; n <= opt.max_n; ++n)
    std::cout << n << ' ' << ctx.sif_count(n) << '\n';
  return exit_ok;
}

int run_connected(const Options& opt) {
  sif::CountContext ctx;
  for (int n = 0; n <= opt.max_n; ++n)
    std::cout << n << ' ' << ctx.connected_count(n) << '\n';
  return exit_ok;
}

int run_partial(const Options& opt) {
  sif::CountContext ctx;
  std::cout << ctx.partial_count(opt.n, opt.k) << '\n';
  return exit_ok;
}

int run_is_sif(const Options& opt) {
  const sif::Permutation p = sif::parse_one_line(opt.perm_text);
  const auto witness = sif::first_stabilized_proper_subinterval(p);
  if (witness)
    std::cout << "false stabilized=[" << witness->lo << ',' << witness->hi << "]\n";
  else
    std::cout << "true\n";
  return exit_ok;
}

int run_split(const Options& opt) {
  const sif::Permutation p = sif::parse_one_line(opt.perm_text);
  const sif::SifFamily family = sif::split(p);
  if (opt.json)
    std::cout << sif::to_json(family).dump() << '\n';
  else
    std::cout << sif::to_text(family) << '\n';
  if (opt.render == "murasaki") {
    std::vector<std::vector<int>> blocks;
    for (const auto& piece : family.pieces()) blocks.push_back(piece.support);
    if (!blocks.empty())
      std::cout << sif::murasaki_render(
          sif::NoncrossingPartition::from_blocks(p.size(), std::move(blocks)));
  }
  return exit_ok;
}

int run_encode(const Options& opt) {
  const sif::Permutation p = sif::parse_one_line(opt.perm_text);
  const sif::SifList list = sif::encode(p);
  if (opt.json)
    std::cout << sif::to_json(list).dump() << '\n';
  else
    std::cout << sif::to_text(list) << '\n';
  if (opt.render == "path") {
    const sif::BalancedForm q = sif::canonical_q(p);
    std::cout << "Q: " << q.to_path().text() << '\n';
    std::size_t label = 0;
    for (std::size_t i = 0; i < q.descent_lengths.size(); ++i) {
      const int len = q.descent_lengths[i];
      if (len == 0) continue;
      std::cout << "descent " << (i + 1) << ": len=" << len
                << " label=" << sif::to_one_line(q.labels[label++]) << '\n';
    }
    if (q.marked_upstep) std::cout << "marked upstep: " << *q.marked_upstep << '\n';
  }
  return exit_ok;
}

int run_decode(const Options& opt) {
  const sif::SifList list = sif::parse_sif_list(opt.list_text);
  const sif::Permutation p = sif::decode(list);
  if (opt.json) {
    nlohmann::json out = {{"n", p.size()},
                          {"images", std::vector<int>(p.images().begin(), p.images().end())}};
    std::cout << out.dump() << '\n';
  } else {
    std::cout << sif::to_one_line(p) << '\n';
  }
  return exit_ok;
}

int run_verify(const Options& opt) {
  if (opt.n < 1) {
    std::cerr << "verify: --n must be at least 1\n";
    return exit_usage;
  }
  if (opt.n > 9 && !opt.force) {
    std::cerr << "verify: n > 9 enumerates more than 9! permutations; pass --force to insist\n";
    return exit_usage;
  }
  bool all_ok = true;
  for (int n = 1; n <= opt.n; ++n) {
    const sif::BijectionReport report = sif::verify_bijection(n, opt.threads);
    std::cout << "n=" << report.n << " permutations=" << report.permutations
              << " roundtrip_failures=" << report.roundtrip_failures
              << " invalid_outputs=" << report.invalid_outputs
              << " distinct=" << report.distinct_outputs
              << " valid_lists=" << report.valid_list_count
              << " result=" << (report.passed() ? "ok" : "FAIL") << '\n';
    for (const std::string& sample : report.failure_samples)
      std::cerr << "  failure: " << sample << '\n';
    all_ok = all_ok && report.passed();
  }
  return all_ok ? exit_ok : exit_verification;
}

int run_series(const Options& opt) {
  sif::CountContext ctx;
  if (opt.dump) {
    const sif::IntSeries a = sif::series_from_counts(ctx, opt.order);
    for (int n = 0; n <= opt.order; ++n) std::cout << n << ": " << a[n] << '\n';
    if (opt.check.empty()) return exit_ok;
  }
  if (opt.check.empty()) {
    std::cerr << "series: pass --check gf|ode and/or --dump\n";
    return exit_usage;
  }
  if (opt.check == "gf") {
    bool all_ok = true;
    for (const auto& row : sif::check_gf_identity(ctx, opt.order)) {
      std::cout << "n=" << row.n << " coefficient=" << row.coefficient
                << " factorial=" << row.expected << ' ' << (row.pass ? "PASS" : "FAIL") << '\n';
      all_ok = all_ok && row.pass;
    }
    std::cout << (all_ok ? "gf identity holds" : "gf identity FAILED") << " through n=" << opt.order
              << '\n';
    return all_ok ? exit_ok : exit_verification;
  }
  const sif::IntSeries residual = sif::check_ode(ctx, opt.order);
  if (residual.is_zero()) {
    std::cout << "ode residual is the zero series through order " << opt.order << " PASS\n";
    return exit_ok;
  }
  for (int i = 0; i <= residual.order(); ++i)
    if (residual[i] != 0) std::cout << i << ": " << residual[i] << '\n';
  std::cout << "ode residual is nonzero FAIL\n";
  return exit_verification;
}

int run_asym(const Options& opt) {
  sif::CountContext ctx;
  std::cout << "n\ta_n/n!\te*a_n/n!\tn*(1-e*a_n/n!)\tn^2*(1-1/n-e*a_n/n!)\n";
  for (const auto& row : sif::asymptotic_report(ctx, opt.max_n, opt.step))
    std::cout << row.n << '\t' << sif::decimal_string(row.sif_fraction) << '\t'
              << sif::decimal_string(row.e_scaled) << '\t'
              << sif::decimal_string(row.first_order) << '\t'
              << sif::decimal_string(row.second_order) << '\n';
  return exit_ok;
}

int run_enumerate(const Options& opt) {
  if (opt.n < 0) throw std::invalid_argument("--n must be nonnegative");
  std::vector<int> v(static_cast<std::size_t>(opt.n));
  std::iota(v.begin(), v.end(), 1);
  do {
    const sif::Permutation p = sif::Permutation::from_one_line(v);
    if (sif::is_sif(p)) std::cout << sif::to_one_line(p) << '\n';
  } while (std::next_permutation(v.begin(), v.end()));
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"stabilized-interval-free permutation toolkit"};
  app.require_subcommand(1);
  Options opt;

  auto* count = app.add_subcommand("count", "print a_0..a_N, one \"n a_n\" line each");
  count->add_option("--max", opt.max_n, "largest n")->required();
  count->add_flag("--bfile", opt.bfile, "OEIS b-file layout (the default layout already is)");

  auto* connected = app.add_subcommand("connected", "print c_0..c_N (connected permutations)");
  connected->add_option("--max", opt.max_n, "largest n")->required();

  auto* partial = app.add_subcommand("partial", "print a_{N,K}");
  partial->add_option("--n", opt.n, "n")->required();
  partial->add_option("--k", opt.k, "k")->required();

  auto* is_sif_cmd = app.add_subcommand("is-sif", "test a permutation, report a witness interval");
  is_sif_cmd->add_option("perm", opt.perm_text, "one-line permutation, quoted")->required();

  auto* split_cmd = app.add_subcommand("split", "decompose into a SIF family");
  split_cmd->add_option("perm", opt.perm_text, "one-line permutation, quoted")->required();
  split_cmd->add_flag("--json", opt.json, "JSON output");
  split_cmd->add_option("--render", opt.render, "none|murasaki")
      ->check(CLI::IsMember({"none", "murasaki"}));

  auto* encode_cmd = app.add_subcommand("encode", "encode as an n-list of SIF permutations");
  encode_cmd->add_option("perm", opt.perm_text, "one-line permutation, quoted")->required();
  encode_cmd->add_flag("--json", opt.json, "JSON output");
  encode_cmd->add_option("--render", opt.render, "none|path")
      ->check(CLI::IsMember({"none", "path"}));

  auto* decode_cmd = app.add_subcommand("decode", "decode an n-list back to a permutation");
  decode_cmd->add_option("list", opt.list_text, "items joined by '/', empty item 'e'")->required();
  decode_cmd->add_flag("--json", opt.json, "JSON output");

  auto* verify = app.add_subcommand("verify", "exhaustively verify the bijection for 1..N");
  verify->add_option("--n", opt.n, "largest n to verify")->required();
  verify->add_flag("--force", opt.force, "allow n > 9");
  verify->add_option("--threads", opt.threads, "worker count (0 = automatic)");

  auto* series = app.add_subcommand("series", "generating-function checks and dumps");
  series->add_option("--order", opt.order, "truncation order")->required();
  series->add_option("--check", opt.check, "gf|ode")->check(CLI::IsMember({"gf", "ode"}));
  series->add_flag("--dump", opt.dump, "print A(x) coefficients, one \"n: a_n\" line each");

  auto* asym = app.add_subcommand("asym", "asymptotic diagnostics as TSV");
  asym->add_option("--max", opt.max_n, "largest n")->required();
  asym->add_option("--step", opt.step, "row spacing");

  auto* enumerate = app.add_subcommand("enumerate-sif", "all SIF permutations of [N]");
  enumerate->add_option("--n", opt.n, "n")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (count->parsed()) return run_count(opt);
    if (connected->parsed()) return run_connected(opt);
    if (partial->parsed()) return run_partial(opt);
    if (is_sif_cmd->parsed()) return run_is_sif(opt);
    if (split_cmd->parsed()) return run_split(opt);
    if (encode_cmd->parsed()) return run_encode(opt);
    if (decode_cmd->parsed()) return run_decode(opt);
    if (verify->parsed()) return run_verify(opt);
    if (series->parsed()) return run_series(opt);
    if (asym->parsed()) return run_asym(opt);
    if (enumerate->parsed()) return run_enumerate(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_validation;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_validation;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return exit_verification;
  }
  return exit_usage;
}
