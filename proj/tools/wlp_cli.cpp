// wlp: command-line front end for the WLP deciders and syzygy-gap oracles.
//
// Records go to stdout (one canonical JSON object per line, or CSV for
// table), diagnostics to stderr. Exit codes: 0 success; 1 usage or
// validation error; 2 degenerate mathematical input; 3 cross-check
// disagreement (a correctness alarm, never expected).

#include <chrono>
#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "wlp/wlp.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitDisagreement = 3;

using wlp::Json;

int cmd_decide(std::int64_t d, std::int64_t p_raw, const std::string& method) {
  const wlp::PrimeModulus p(p_raw);
  Json r = wlp::make_record("decide", {{"d", d}, {"p", p_raw}});
  r["method"] = method;

  if (method == "all") {
    const wlp::WlpVerdict criterion = wlp::decide_wlp_criterion(d, p);
    const wlp::WlpVerdict bruteforce = wlp::wlp_bruteforce(d, p);
    const wlp::HanCertificate han = wlp::delta_star_han(d, d, d, p);
    const bool han_holds = han.delta_star <= 1;
    const bool consistent =
        criterion.holds == bruteforce.holds && bruteforce.holds == han_holds;
    r["criterion"] = wlp::verdict_json(criterion);
    r["bruteforce"] = wlp::verdict_json(bruteforce);
    r["han"] = Json{{"holds", han_holds}, {"certificate", wlp::han_json(han)}};
    r["consistent"] = consistent;
    std::cout << wlp::finalize_record(std::move(r)) << "\n";
    if (!consistent) {
      std::cerr << "wlp: decide --method all: the three routes disagree\n";
      return kExitDisagreement;
    }
    return kExitOk;
  }

  if (method == "criterion") {
    r["verdict"] = wlp::verdict_json(wlp::decide_wlp_criterion(d, p));
  } else if (method == "bruteforce") {
    r["verdict"] = wlp::verdict_json(wlp::wlp_bruteforce(d, p));
  } else {  // han
    const wlp::HanCertificate han = wlp::delta_star_han(d, d, d, p);
    r["verdict"] = Json{{"holds", han.delta_star <= 1}, {"witness", nullptr}};
    r["certificate"] = wlp::han_json(han);
  }
  std::cout << wlp::finalize_record(std::move(r)) << "\n";
  return kExitOk;
}

int cmd_gap(std::int64_t d1, std::int64_t d2, std::int64_t d3, std::int64_t p_raw,
            const std::string& method) {
  const wlp::PrimeModulus p(p_raw);
  Json r = wlp::make_record("gap", {{"d1", d1}, {"d2", d2}, {"d3", d3}, {"p", p_raw}});
  r["method"] = method;

  std::optional<wlp::GapCertificate> oracle;
  std::optional<wlp::HanCertificate> han;
  if (method == "oracle" || method == "both") oracle = wlp::gap_oracle(d1, d2, d3, p);
  if (method == "han" || method == "both") han = wlp::delta_star_han(d1, d2, d3, p);
  if (oracle) r["oracle"] = wlp::gap_json(*oracle);
  if (han) r["han"] = wlp::han_json(*han);

  int code = kExitOk;
  if (method == "both") {
    const bool agree = oracle->delta == han->delta_star;
    r["agree"] = agree;
    if (!agree) {
      std::cerr << "wlp: gap --method both: oracle and closed form disagree\n";
      code = kExitDisagreement;
    }
  }
  std::cout << wlp::finalize_record(std::move(r)) << "\n";
  return code;
}

int cmd_primes(std::int64_t d) {
  const std::vector<std::int64_t> primes = wlp::exceptional_primes(d);
  Json r = wlp::make_record("primes", {{"d", d}});
  r["primes"] = primes;
  Json witnesses = Json::array();
  for (const std::int64_t p : primes) {
    const wlp::WlpVerdict v = wlp::decide_wlp_criterion(d, wlp::PrimeModulus(p));
    witnesses.push_back(Json{{"p", p}, {"witness", wlp::witness_json(v.witness)}});
  }
  r["witnesses"] = std::move(witnesses);
  std::cout << wlp::finalize_record(std::move(r)) << "\n";
  return kExitOk;
}

int cmd_table(std::int64_t d_max, std::int64_t p_max, const std::string& format) {
  const bool csv = format == "csv";
  if (csv) std::cout << wlp::kTableCsvHeader << "\n";
  for (std::int64_t d = 1; d <= d_max; ++d) {
    for (std::int64_t p = 2; p <= p_max; ++p) {
      if (!wlp::is_prime(static_cast<std::uint64_t>(p))) continue;
      const wlp::WlpVerdict v = wlp::decide_wlp_criterion(d, wlp::PrimeModulus(p));
      if (csv) {
        std::cout << wlp::table_csv_row(d, p, v) << "\n";
      } else {
        Json r = wlp::make_record("table", {{"d", d}, {"p", p}});
        r["verdict"] = wlp::verdict_json(v);
        std::cout << wlp::finalize_record(std::move(r)) << "\n";
      }
    }
  }
  return kExitOk;
}

int cmd_wlp_degrees(std::int64_t t_max) {
  std::vector<std::int64_t> degrees;
  for (std::int64_t t = 1; t <= t_max; ++t) {
    const std::int64_t d = ((std::int64_t{1} << t) + 1) / 3;
    if (degrees.empty() || degrees.back() != d) degrees.push_back(d);
  }
  Json r = wlp::make_record("wlp-degrees", {{"t_max", t_max}});
  r["degrees"] = degrees;
  std::cout << wlp::finalize_record(std::move(r)) << "\n";
  return kExitOk;
}

int cmd_verify(std::int64_t d_max, std::int64_t p_max) {
  const auto start = std::chrono::steady_clock::now();
  std::int64_t cells = 0;
  Json counterexample = nullptr;
  for (std::int64_t d = 1; d <= d_max && counterexample.is_null(); ++d) {
    for (std::int64_t pr = 2; pr <= p_max; ++pr) {
      if (!wlp::is_prime(static_cast<std::uint64_t>(pr))) continue;
      const wlp::PrimeModulus p(pr);
      const bool criterion = wlp::decide_wlp_criterion(d, p).holds;
      const bool bruteforce = wlp::wlp_bruteforce(d, p).holds;
      const wlp::HanCertificate han = wlp::delta_star_han(d, d, d, p);
      const bool han_holds = han.delta_star <= 1;
      std::optional<bool> oracle_holds;
      try {
        oracle_holds = wlp::gap_oracle(d, d, d, p).delta <= 1;
      } catch (const wlp::DegenerateTripleError&) {
        // d a power of p: the triple is not minimally generated; skip
      }
      ++cells;
      const bool ok = criterion == bruteforce && bruteforce == han_holds &&
                      (!oracle_holds || *oracle_holds == criterion);
      if (!ok) {
        counterexample = Json{{"d", d},
                              {"p", pr},
                              {"criterion", criterion},
                              {"bruteforce", bruteforce},
                              {"han_delta_star", han.delta_star}};
        counterexample["oracle_holds"] = oracle_holds ? Json(*oracle_holds) : Json(nullptr);
        break;
      }
    }
  }
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);

  Json r = wlp::make_record("verify", {{"d_max", d_max}, {"p_max", p_max}});
  r["cells"] = cells;
  r["pass"] = counterexample.is_null();
  r["counterexample"] = counterexample;
  std::cout << wlp::finalize_record(std::move(r)) << "\n";
  std::cerr << "wlp: verify checked " << cells << " cells in " << elapsed.count() << " ms\n";
  if (!counterexample.is_null()) {
    std::cerr << "wlp: verify: the routes disagree; this is a bug in one of them\n";
    return kExitDisagreement;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weak Lefschetz property of K[X,Y,Z]/(X^d,Y^d,Z^d) over F_p"};
  app.require_subcommand(1);

  // canonical base-10 only: CLI11 would otherwise read 0x.. as hex and a
  // leading 0 as octal
  const CLI::Validator base10(
      [](std::string& input) -> std::string {
        if (input.empty() || input.find_first_not_of("0123456789") != std::string::npos ||
            (input.size() > 1 && input.front() == '0'))
          return "'" + input + "' is not a canonical base-10 integer";
        return {};
      },
      "UINT", "base10");

  std::int64_t d = 0, p = 0, d1 = 0, d2 = 0, d3 = 0;
  std::int64_t d_max = 0, p_max = 0, t_max = 0;
  std::string decide_method = "criterion";
  std::string gap_method = "both";
  std::string format = "json";

  CLI::App* decide = app.add_subcommand("decide", "decide WLP for given d and prime p");
  decide->add_option("--d", d, "exponent d of the relations")->required()
      ->check(base10)->check(CLI::PositiveNumber);
  decide->add_option("--p", p, "prime characteristic")->required()->check(base10);
  decide->add_option("--method", decide_method, "criterion | bruteforce | han | all")
      ->check(CLI::IsMember({"criterion", "bruteforce", "han", "all"}));

  CLI::App* gap = app.add_subcommand("gap", "syzygy gap of (x^d1, y^d2, (x+y)^d3)");
  gap->add_option("--d1", d1, "first degree")->required()->check(base10)->check(CLI::PositiveNumber);
  gap->add_option("--d2", d2, "second degree")->required()->check(base10)->check(CLI::PositiveNumber);
  gap->add_option("--d3", d3, "third degree")->required()->check(base10)->check(CLI::PositiveNumber);
  gap->add_option("--p", p, "prime characteristic")->required()->check(base10);
  gap->add_option("--method", gap_method, "oracle | han | both")
      ->check(CLI::IsMember({"oracle", "han", "both"}));

  CLI::App* primes = app.add_subcommand("primes", "exceptional primes for given d");
  primes->add_option("--d", d, "exponent d")->required()->check(base10)->check(CLI::PositiveNumber);

  CLI::App* table = app.add_subcommand("table", "criterion verdicts over a (d, p) grid");
  table->add_option("--d-max", d_max, "largest d")->required()->check(base10)->check(CLI::PositiveNumber);
  table->add_option("--p-max", p_max, "largest prime")->required()->check(base10)->check(CLI::PositiveNumber);
  table->add_option("--format", format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}));

  CLI::App* degrees =
      app.add_subcommand("wlp-degrees", "the d with WLP in characteristic 2, from the closed form");
  degrees->add_option("--t-max", t_max, "largest exponent t in floor((2^t+1)/3)")
      ->required()->check(base10)->check(CLI::Range(std::int64_t{1}, std::int64_t{62}));

  CLI::App* verify =
      app.add_subcommand("verify", "cross-validate all routes over a (d, p) grid");
  verify->add_option("--d-max", d_max, "largest d")->required()->check(base10)->check(CLI::PositiveNumber);
  verify->add_option("--p-max", p_max, "largest prime")->required()->check(base10)->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (decide->parsed()) return cmd_decide(d, p, decide_method);
    if (gap->parsed()) return cmd_gap(d1, d2, d3, p, gap_method);
    if (primes->parsed()) return cmd_primes(d);
    if (table->parsed()) return cmd_table(d_max, p_max, format);
    if (degrees->parsed()) return cmd_wlp_degrees(t_max);
    if (verify->parsed()) return cmd_verify(d_max, p_max);
  } catch (const wlp::DegenerateTripleError& e) {
    std::cerr << "wlp: " << e.what() << "\n";
    return kExitDegenerate;
  } catch (const std::exception& e) {
    std::cerr << "wlp: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
