// Batch driver: every experiment is a subcommand with reproducible seeds and
// machine-readable output. Exit codes: 0 success, 1 verification failure,
// 2 configuration error, 3 resource cap.

#include <CLI11.hpp>
#include <cmath>
#include <iostream>
#include <sstream>

#include "slq/fourier.hpp"
#include "slq/io.hpp"
#include "slq/oracles.hpp"
#include "slq/spectral.hpp"
#include "slq/suite.hpp"
#include "slq/walks.hpp"

namespace {

using namespace slq;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitConfig = 2;
constexpr int kExitResource = 3;

std::vector<u64> parse_q_range(const std::string& spec) {
  // A:B[:STEP]
  std::vector<u64> qs;
  u64 a = 0, b = 0, step = 1;
  char c1 = 0, c2 = 0;
  std::istringstream is(spec);
  if (!(is >> a >> c1 >> b) || c1 != ':')
    throw ConfigError("bad --q-range, expected A:B[:STEP]");
  if (is >> c2 >> step) {
    if (c2 != ':' || step == 0) throw ConfigError("bad --q-range step");
  }
  for (u64 q = a; q <= b; q += step) qs.push_back(q);
  if (qs.empty()) throw ConfigError("empty --q-range");
  return qs;
}

GeneratorSet gens_from_flag(const std::string& path) {
  if (path.empty()) throw ConfigError("missing --gens");
  return load_generator_set(path);
}

int cmd_gap(const std::string& gens_path, u64 q, const std::string& q_range,
            u64 seed, double tol, u64 cap, const std::string& format) {
  GapConfig config;
  config.gens = gens_from_flag(gens_path);
  if (!q_range.empty())
    config.qs = parse_q_range(q_range);
  else if (q >= 2)
    config.qs = {q};
  else
    throw ConfigError("gap: need --q or --q-range");
  config.seed = seed;
  config.tol = tol;
  config.enum_cap = cap;
  std::vector<GapRow> rows = gap_sweep(config);
  if (format == "json")
    std::cout << gap_json(rows).dump(2) << "\n";
  else
    std::cout << gap_csv(rows);
  return kExitOk;
}

int cmd_verify(const std::string& gens_path, u64 seed,
               const std::vector<int>& criteria, long corrupt) {
  SuiteOptions opt;
  opt.seed = seed;
  opt.criteria = criteria;
  opt.bracket_formula_corruption = corrupt;
  if (!gens_path.empty()) opt.sweep_gens = load_generator_set(gens_path);
  std::vector<CriterionResult> results = run_acceptance_suite(opt);
  ordered_json report = ordered_json::array();
  bool all_passed = true;
  for (const CriterionResult& r : results) {
    report.push_back(ordered_json{{"id", r.id},
                                  {"name", r.name},
                                  {"passed", r.passed},
                                  {"details", r.details}});
    all_passed = all_passed && r.passed;
  }
  std::cout << ordered_json{{"passed", all_passed}, {"criteria", report}}.dump(2)
            << "\n";
  return all_passed ? kExitOk : kExitVerifyFail;
}

int cmd_walk(const std::string& gens_path, u64 q, int l_max,
             const std::string& format) {
  GeneratorSet S = gens_from_flag(gens_path);
  if (q < 2) throw ConfigError("walk: need --q >= 2");
  GroupTable table(S, Modulus(q));
  std::vector<FlatteningRow> rows = flattening_profile(table, l_max);
  if (format == "json") {
    ordered_json out = ordered_json::array();
    for (const FlatteningRow& r : rows)
      out.push_back(ordered_json{
          {"l", r.l},
          {"norm_2l_sq", fmt_rational(r.norm_2l_sq)},
          {"norm_4l_sq", fmt_rational(r.norm_4l_sq)},
          {"norm_2l", fmt_double(std::sqrt(r.norm_2l_sq.get_d()))},
          {"delta", fmt_double(r.delta)},
          {"precision", "norms exact, delta double"}});
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "l,norm_2l_sq,norm_4l_sq,norm_2l,delta,precision\n";
    for (const FlatteningRow& r : rows)
      std::cout << r.l << ',' << fmt_rational(r.norm_2l_sq) << ','
                << fmt_rational(r.norm_4l_sq) << ','
                << fmt_double(std::sqrt(r.norm_2l_sq.get_d())) << ','
                << fmt_double(r.delta) << ",exact-norms\n";
  }
  return kExitOk;
}

int cmd_growth(const std::string& gens_path, u64 q, const std::string& subset_path,
               u64 random_size, u64 seed, int iteration_l,
               const std::string& format) {
  GeneratorSet S = gens_from_flag(gens_path);
  if (q < 2) throw ConfigError("growth: need --q >= 2");
  GroupTable table(S, Modulus(q));
  SubsetHandle a = subset_empty(table);
  if (!subset_path.empty()) {
    a = subset_of(table, load_subset_indices(subset_path));
  } else if (random_size > 0) {
    Rng rng(seed);
    a = subset_random(table, random_size, rng);
  } else {
    throw ConfigError("growth: need --subset or --random-size");
  }
  ordered_json out;
  out["q"] = q;
  out["group_order"] = table.size();
  out["subset_size"] = a.size();
  out["tripling_exponent"] = fmt_double(tripling_exponent(a));
  SubsetHandle aaa = product_set(product_set(a, a), a);
  out["triple_product_size"] = aaa.size();
  if (iteration_l >= 3) {
    SubsetHandle sym = a;
    sym.bits |= subset_inverse(a).bits;
    sym.bits.set(0);
    IterationBound ib = iteration_bound_check(sym, iteration_l);
    out["iteration_bound"] =
        ordered_json{{"l", iteration_l},
                     {"symmetrized_size", sym.size()},
                     {"lhs", ib.lhs.get_str()},
                     {"rhs", fmt_rational(ib.rhs)},
                     {"ok", ib.ok}};
  }
  if (format == "csv") {
    std::cout << "q,group_order,subset_size,triple_product_size,tripling_exponent\n"
              << q << ',' << table.size() << ',' << a.size() << ',' << aaa.size()
              << ',' << fmt_double(tripling_exponent(a)) << "\n";
  } else {
    std::cout << out.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_fourier(const std::string& gens_path, u64 q, const std::string& l_list,
                int conv_c, const std::string& format) {
  GeneratorSet S = gens_from_flag(gens_path);
  if (q < 2) throw ConfigError("fourier: need --q >= 2");
  GroupTable table(S, Modulus(q));
  Modulus mod(q);
  LieVec v0 = lie_sub(basis_offdiag(S.d, mod, 0, 1), basis_offdiag(S.d, mod, 1, 0));
  std::vector<int> ls;
  std::istringstream is(l_list);
  std::string tok;
  while (std::getline(is, tok, ',')) ls.push_back(std::stoi(tok));
  if (ls.empty()) throw ConfigError("fourier: empty --l-list");
  std::vector<DecayRow> rows = decay_profile(table, v0, ls);
  if (format == "json") {
    ordered_json out = ordered_json::array();
    for (const DecayRow& r : rows)
      out.push_back(ordered_json{{"l", r.l},
                                 {"max_coeff", fmt_double(r.max_nontrivial)},
                                 {"l2_norm", fmt_double(r.l2_norm)},
                                 {"support_size", r.support},
                                 {"precision", "double (dft)"}});
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "l,max_coeff,l2_norm,support_size\n";
    for (const DecayRow& r : rows)
      std::cout << r.l << ',' << fmt_double(r.max_nontrivial) << ','
                << fmt_double(r.l2_norm) << ',' << r.support << "\n";
  }
  if (conv_c >= 1) {
    LieDist dist = pushforward(table, ls.back(), v0);
    std::cout << "c,l2_norm,support_size,precision\n";
    for (int c = 1; c <= conv_c; ++c) {
      std::vector<double> conv = convolution_power_dense(dist, c);
      double norm_sq = 0.0;
      u64 support = 0;
      for (double x : conv) {
        norm_sq += x * x;
        if (std::abs(x) > 1e-14) ++support;
      }
      std::cout << c << ',' << fmt_double(std::sqrt(norm_sq)) << ',' << support
                << ",double\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"verification laboratory for expansion in SL_d(Z/qZ)"};
  app.require_subcommand(1);

  std::string gens_path, q_range, format = "csv", subset_path, l_list = "0";
  u64 q = 0, seed = 0, cap = kDefaultEnumCap, random_size = 0;
  double tol = 1e-10;
  int l_max = 6, iteration_l = 0, conv_c = 0;
  long corrupt = 0;
  std::vector<int> criteria;

  CLI::App* gap = app.add_subcommand("gap", "spectral gap / expansion sweep");
  gap->add_option("--gens", gens_path, "generator-set JSON file")->required();
  gap->add_option("--q", q, "single modulus");
  gap->add_option("--q-range", q_range, "modulus range A:B[:STEP]");
  gap->add_option("--seed", seed, "RNG seed");
  gap->add_option("--tol", tol, "eigenvalue tolerance");
  gap->add_option("--cap", cap, "enumeration cap");
  gap->add_option("--format", format, "csv|json");

  CLI::App* verify = app.add_subcommand("verify", "run the verification suites");
  verify->add_option("--gens", gens_path, "generator set for the gap sweep");
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--criteria", criteria, "criterion ids (default: all)");
  verify
      ->add_option("--corrupt-bracket-formula", corrupt,
                   "test hook: offset the counting formula")
      ->group("");

  CLI::App* walk = app.add_subcommand("walk", "exact random-walk flattening profile");
  walk->add_option("--gens", gens_path, "generator-set JSON file")->required();
  walk->add_option("--q", q, "modulus")->required();
  walk->add_option("--l-max", l_max, "profile depth");
  walk->add_option("--format", format, "csv|json");

  CLI::App* growth = app.add_subcommand("growth", "product-set growth measurements");
  growth->add_option("--gens", gens_path, "generator-set JSON file")->required();
  growth->add_option("--q", q, "modulus")->required();
  growth->add_option("--subset", subset_path, "subset JSON file (index list)");
  growth->add_option("--random-size", random_size, "seeded random subset size");
  growth->add_option("--seed", seed, "RNG seed");
  growth->add_option("--l", iteration_l, "also check the l-fold iteration bound");
  growth->add_option("--format", format, "csv|json");

  CLI::App* fourier = app.add_subcommand("fourier", "conjugation-orbit Fourier decay");
  fourier->add_option("--gens", gens_path, "generator-set JSON file")->required();
  fourier->add_option("--q", q, "prime modulus")->required();
  fourier->add_option("--l-list", l_list, "comma-separated walk lengths");
  fourier->add_option("--conv-c", conv_c, "report C-fold additive convolution norms");
  fourier->add_option("--format", format, "csv|json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? kExitConfig : kExitOk;
  }

  try {
    if (gap->parsed()) return cmd_gap(gens_path, q, q_range, seed, tol, cap, format);
    if (verify->parsed()) return cmd_verify(gens_path, seed, criteria, corrupt);
    if (walk->parsed()) return cmd_walk(gens_path, q, l_max, format);
    if (growth->parsed())
      return cmd_growth(gens_path, q, subset_path, random_size, seed, iteration_l,
                        format);
    if (fourier->parsed()) return cmd_fourier(gens_path, q, l_list, conv_c, format);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const TooLarge& e) {
    std::cerr << "resource cap: " << e.what() << "\n";
    return kExitResource;
  } catch (const CoveringViolation& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerifyFail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitVerifyFail;
  }
  return kExitConfig;
}
