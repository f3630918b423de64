#include "overpart/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <numeric>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "overpart/halfint.hpp"
#include "overpart/prover.hpp"
#include "overpart/qgen.hpp"
#include "overpart/report.hpp"
#include "overpart/sturm.hpp"

namespace overpart::cli {

namespace {

struct RunConfig {
  std::string output = "text";
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::string cache_dir;
};

bool json_mode(const RunConfig& cfg) { return cfg.output == "json"; }

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

/// Loads a series from the cache directory or computes and stores it.
TruncSeries cached(const RunConfig& cfg, const std::string& generator, ResidueRing ring, std::size_t trunc,
                   const std::function<TruncSeries()>& compute) {
  if (cfg.cache_dir.empty()) return compute();
  const std::string key = generator + "|" + std::to_string(ring.modulus()) + "|" + std::to_string(trunc);
  std::ostringstream name;
  name << std::hex << std::setw(16) << std::setfill('0') << fnv1a(key) << ".qser";
  const std::filesystem::path path = std::filesystem::path(cfg.cache_dir) / name.str();
  if (std::filesystem::exists(path)) {
    try {
      TruncSeries s = read_series_file(path);
      if (s.ring() == ring && s.trunc() == trunc) return s;
    } catch (const Error&) {
      // unreadable entries are recomputed and overwritten
    }
  }
  TruncSeries s = compute();
  std::filesystem::create_directories(path.parent_path());
  write_series_file(path, s);
  return s;
}

TruncSeries expand_generator(const RunConfig& cfg, const std::string& gen, ResidueRing ring, std::size_t trunc) {
  std::function<TruncSeries()> compute;
  if (gen == "phi") {
    compute = [=] { return theta_phi(trunc, ring); };
  } else if (gen == "F") {
    compute = [=] { return theta_F(trunc, ring); };
  } else if (gen == "overpartition") {
    compute = [=] { return overpartition_series(trunc, ring); };
  } else if (gen.starts_with("eta:")) {
    const EtaQuotient q = EtaQuotient::parse(gen.substr(4));
    compute = [=] { return eta_series(q, trunc, ring); };
  } else if (gen.starts_with("rm:")) {
    std::uint64_t m = 0;
    try {
      std::size_t used = 0;
      m = std::stoull(gen.substr(3), &used);
      if (used != gen.size() - 3) throw std::invalid_argument(gen);
    } catch (const std::logic_error&) {
      throw InvalidArgument("cannot parse generator '" + gen + "'");
    }
    compute = [=] { return r_m_series(m, trunc, ring); };
  } else {
    throw InvalidArgument("unknown generator '" + gen + "' (phi, F, eta:<d^r,...>, overpartition, rm:<m>)");
  }
  return cached(cfg, gen, ring, trunc, compute);
}

std::string join_coeffs(std::span<const Residue> c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(c[i]);
  }
  return out;
}

std::string monomial_sum(const Decomposition& d) {
  std::string out;
  for (int b = static_cast<int>(d.coeffs.size()) - 1; b >= 0; --b) {
    const Residue c = d.coeffs[static_cast<std::size_t>(b)];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c) + "*";
    const int a = d.k2 - 4 * b;
    std::string term;
    if (b > 0) term += b == 1 ? "F" : "F^" + std::to_string(b);
    if (a > 0) term += (term.empty() ? "" : "*") + (a == 1 ? std::string("phi") : "phi^" + std::to_string(a));
    out += term.empty() ? "1" : term;
  }
  return out.empty() ? "0" : out;
}

TruncSeries read_decompose_input(std::istream& in, ResidueRing ring) {
  std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (data.starts_with("QSER")) {
    const std::vector<std::uint8_t> bytes(data.begin(), data.end());
    TruncSeries s = decode_series(bytes);
    if (s.ring() != ring) {
      throw RingMismatch("input series is modulo " + std::to_string(s.modulus()) + ", expected " +
                         std::to_string(ring.modulus()));
    }
    return s;
  }
  std::istringstream text(data);
  std::vector<std::int64_t> values;
  std::string token;
  while (text >> token) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
    if (ec != std::errc{} || ptr != token.data() + token.size()) {
      throw InvalidArgument("cannot parse coefficient '" + token + "'");
    }
    values.push_back(v);
  }
  if (values.empty()) throw InvalidArgument("decompose: no coefficients given");
  return TruncSeries::from_integers(ring, values);
}

int emit_report(const RunConfig& cfg, const ProofReport& report, std::ostream& out, std::ostream& err) {
  if (json_mode(cfg)) {
    out << to_json(report).dump(2) << "\n";
  } else {
    out << render_text(report);
  }
  for (const auto& s : report.steps) {
    err << "time " << std::fixed << std::setprecision(3) << s.seconds << "s  " << s.anchor << "\n";
  }
  return report.pass ? kExitPass : kExitFail;
}

std::pair<std::uint64_t, std::uint64_t> parse_pair(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw InvalidArgument("--progression expects A,B");
  try {
    return {std::stoull(s.substr(0, comma)), std::stoull(s.substr(comma + 1))};
  } catch (const std::logic_error&) {
    throw InvalidArgument("--progression expects A,B with non-negative integers");
  }
}

std::string read_claim_text(const std::string& arg) {
  if (!arg.empty() && arg.front() == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw InvalidArgument("cannot open claim file '" + arg.substr(1) + "'");
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  }
  return arg;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv("OVERPART_CACHE_DIR")) cfg.cache_dir = env;

  CLI::App app{"Overpartition congruences via modular forms mod m"};
  app.name("overpart");
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--output", cfg.output, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--threads", cfg.threads, "Worker threads for scans")->check(CLI::PositiveNumber);
  app.add_option("--cache-dir", cfg.cache_dir, "Coefficient cache directory (env OVERPART_CACHE_DIR)");

  std::function<int()> action;

  // expand
  std::string generator;
  std::uint64_t modulus = 0;
  std::size_t trunc = 0;
  auto* expand = app.add_subcommand("expand", "Print the q-expansion of a generator");
  expand->add_option("generator", generator, "phi, F, eta:<d^r,...>, overpartition, rm:<m>")->required();
  expand->add_option("--mod", modulus, "Modulus")->required();
  expand->add_option("--trunc", trunc, "Truncation")->required();
  expand->callback([&] {
    action = [&] {
      const TruncSeries s = expand_generator(cfg, generator, ResidueRing(modulus), trunc);
      if (json_mode(cfg)) {
        const std::vector<Residue> coeffs(s.coeffs().begin(), s.coeffs().end());
        out << Json{{"generator", generator}, {"modulus", modulus}, {"trunc", trunc}, {"coeffs", coeffs}}.dump()
            << "\n";
      } else {
        out << join_coeffs(s.coeffs()) << "\n";
      }
      return kExitPass;
    };
  });

  // decompose
  int k2 = 0;
  std::string input;
  auto* decompose_cmd = app.add_subcommand("decompose", "Write a series in the basis F^b phi^a");
  decompose_cmd->add_option("--k2", k2, "Twice the weight")->required();
  decompose_cmd->add_option("--mod", modulus, "Modulus")->required();
  decompose_cmd->add_option("--input", input, "QSER file or whitespace-separated coefficients (default stdin)");
  decompose_cmd->callback([&] {
    action = [&]() -> int {
      const ResidueRing ring(modulus);
      TruncSeries f = TruncSeries::zero(ring, 0);
      if (input.empty()) {
        f = read_decompose_input(std::cin, ring);
      } else {
        std::ifstream in(input, std::ios::binary);
        if (!in) throw InvalidArgument("cannot open '" + input + "'");
        f = read_decompose_input(in, ring);
      }
      try {
        const Decomposition d = decompose(f, k2);
        if (json_mode(cfg)) {
          out << Json{{"k2", k2}, {"modulus", modulus}, {"coeffs", d.coeffs}, {"form", monomial_sum(d)}}.dump()
              << "\n";
        } else {
          out << join_coeffs(d.coeffs) << "\n" << monomial_sum(d) << "\n";
        }
        return kExitPass;
      } catch (const NotInSpan& e) {
        if (json_mode(cfg)) {
          out << Json{{"k2", k2}, {"modulus", modulus}, {"coeffs", nullptr}, {"first_exponent", e.first_exponent}}
                     .dump()
              << "\n";
        }
        err << e.what() << "\n";
        return kExitFail;
      }
    };
  });

  // bound
  int weight2 = 0;
  std::uint64_t level = 0;
  std::string group = "g0";
  std::string progression;
  auto* bound = app.add_subcommand("bound", "Sturm bound and progression limit");
  bound->add_option("--weight2", weight2, "Twice the weight")->required()->check(CLI::PositiveNumber);
  bound->add_option("--level", level, "Level (multiple of 4)")->required();
  bound->add_option("--group", group, "g0 or g1")->check(CLI::IsMember({"g0", "g1"}));
  bound->add_option("--progression", progression, "A,B");
  bound->callback([&] {
    action = [&] {
      const SpaceLabel label = group == "g0" ? SpaceLabel::gamma0(weight2, level, DirichletChar::trivial(1))
                                             : SpaceLabel::gamma1(weight2, level);
      SturmBudget budget = sturm_bound(label);
      if (!progression.empty()) {
        const auto [A, B] = parse_pair(progression);
        if (A == 0 || B >= A) throw InvalidArgument("--progression needs 0 <= B < A");
        if (std::gcd(A, B) != 1) throw InvalidArgument("--progression needs gcd(A, B) = 1");
        if (A > UINT32_MAX || level % (A * A) != 0) {
          throw InvalidArgument("--progression modulus A^2 must divide the level " + std::to_string(level));
        }
        budget = with_progression(budget, A, B);
      }
      if (json_mode(cfg)) {
        Json j{{"label", label.to_string()},
               {"effective_weight", budget.effective_weight},
               {"index", budget.index},
               {"bound", budget.bound}};
        if (budget.per_progression) {
          j["progression"] = {{"A", budget.per_progression->A},
                              {"B", budget.per_progression->B},
                              {"max_n", budget.per_progression->max_n}};
        }
        out << j.dump() << "\n";
      } else {
        out << label.to_string() << "\n"
            << "effective weight " << budget.effective_weight << "\n"
            << "index " << budget.index << "\n"
            << "bound " << budget.bound << "\n";
        if (budget.per_progression) {
          out << "progression " << budget.per_progression->A << "n+" << budget.per_progression->B << ": n <= "
              << budget.per_progression->max_n << "\n";
        }
      }
      return kExitPass;
    };
  });

  // prove
  std::string theorem;
  auto* prove = app.add_subcommand("prove", "Run a congruence proof");
  prove->add_option("theorem", theorem, "thm11 or thm13")->required()->check(CLI::IsMember({"thm11", "thm13"}));
  prove->callback([&] {
    action = [&] {
      return emit_report(cfg, theorem == "thm11" ? prove_theorem_mod11() : prove_theorem_mod13(), out, err);
    };
  });

  // verify-identity
  std::uint32_t identity_m = 0;
  std::size_t identity_trunc = 2000;
  auto* verify = app.add_subcommand("verify-identity", "Check sum pbar(mn)(-q)^n against its monomial combination");
  verify->add_option("m", identity_m, "Prime modulus, e.g. 17 or 23")->required();
  verify->add_option("--trunc", identity_trunc, "Truncation");
  verify->callback([&] {
    action = [&] { return emit_report(cfg, verify_identity(identity_m, identity_trunc), out, err); };
  });

  // lemma1
  std::uint64_t lemma_p = 0;
  int lemma_alpha = 1;
  std::size_t lemma_trunc = 500;
  auto* lemma = app.add_subcommand("lemma1", "(q;q)^{p^a} = (q^p;q^p)^{p^(a-1)} mod p^a");
  lemma->add_option("--p", lemma_p, "Prime")->required();
  lemma->add_option("--alpha", lemma_alpha, "Exponent")->required();
  lemma->add_option("--trunc", lemma_trunc, "Truncation");
  lemma->callback([&] {
    action = [&] {
      const bool ok = verify_lemma1(lemma_p, lemma_alpha, lemma_trunc);
      if (json_mode(cfg)) {
        out << Json{{"p", lemma_p}, {"alpha", lemma_alpha}, {"trunc", lemma_trunc}, {"pass", ok}}.dump() << "\n";
      } else {
        out << (ok ? "pass" : "FAIL") << "\n";
      }
      return ok ? kExitPass : kExitFail;
    };
  });

  // scan
  ScanRequest request;
  std::uint32_t scan_mod = 0;
  auto* scan_cmd = app.add_subcommand("scan", "Search progressions for vanishing pbar(d(At+B)) mod m");
  scan_cmd->add_option("--mod", scan_mod, "Modulus")->required();
  scan_cmd->add_option("--d", request.multipliers, "Multipliers")->required();
  scan_cmd->add_option("--A", request.progressions, "Progression moduli")->required();
  scan_cmd->add_option("--nmax", request.n_max, "Largest t tested");
  scan_cmd->add_option("--min-support", request.min_support, "Smallest number of tested t per residue");
  scan_cmd->add_option("--budget", request.index_budget, "Largest coefficient index expanded");
  scan_cmd->callback([&] {
    action = [&] {
      request.modulus = scan_mod;
      request.threads = cfg.threads;
      const ResidueRing ring(scan_mod);
      const std::size_t t = scan_trunc(request);
      const TruncSeries pbar = expand_generator(cfg, "overpartition", ring, t);
      const auto findings = scan(request, pbar);
      if (json_mode(cfg)) {
        Json list = Json::array();
        for (const auto& f : findings) list.push_back(to_json(f));
        out << Json{{"modulus", scan_mod}, {"series_trunc", t}, {"findings", list}}.dump(2) << "\n";
      } else {
        out << "pbar mod " << scan_mod << " through q^" << t << "\n";
        for (const auto& f : findings) {
          out << "d=" << f.multiplier << " A=" << f.A << " residues {";
          for (std::size_t i = 0; i < f.residues.size(); ++i) out << (i ? "," : "") << f.residues[i];
          out << "}";
          if (f.compressed) out << "  => " << f.compressed->describe();
          out << "\n";
        }
      }
      return kExitPass;
    };
  });

  // check
  std::string claim_arg;
  std::uint64_t check_nmax = 100;
  auto* check = app.add_subcommand("check", "Test a congruence claim against the generating function");
  check->add_option("--claim", claim_arg, "Claim as JSON text, or @file")->required();
  check->add_option("--nmax", check_nmax, "Largest t tested");
  check->callback([&] {
    action = [&] {
      const CongruenceClaim claim = parse_claim(read_claim_text(claim_arg));
      ClaimCheck result;
      if (claim.modulus == 1) {
        result = check_claim_direct(claim, check_nmax);
      } else {
        const std::uint64_t top = claim.multiplier * (claim.A * check_nmax + claim.B);
        if (check_nmax > kMaxScanIndex || top > kMaxScanIndex) {
          throw BudgetExceeded("check: coefficient index exceeds budget " + std::to_string(kMaxScanIndex));
        }
        const TruncSeries pbar = expand_generator(cfg, "overpartition", ResidueRing(claim.modulus), top);
        result = check_claim_direct(claim, check_nmax, pbar);
      }
      if (json_mode(cfg)) {
        out << to_json(result, claim, check_nmax).dump(2) << "\n";
      } else {
        out << claim.describe() << "\n";
        if (result.pass) {
          out << "pass, support " << result.support << "\n";
        } else {
          out << "counterexample at n = " << claim.A * *result.first_counterexample + claim.B << ": pbar("
              << *result.counterexample_index << ") != 0 (mod " << claim.modulus << ")\n";
        }
      }
      return result.pass ? kExitPass : kExitFail;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitPass;
    }
    err << "error: " << e.what() << "\n" << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    return action ? action() : kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace overpart::cli
