#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "ptopo/combinatorics.hpp"
#include "ptopo/complexes.hpp"
#include "ptopo/json_io.hpp"
#include "ptopo/posets.hpp"
#include "ptopo/verify.hpp"

using nlohmann::json;

namespace {

ptopo::Composition parse_composition(const std::string& s) {
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    parts.push_back(std::stoi(tok));
  ptopo::Composition c(std::move(parts));
  if (!c.valid())
    throw CLI::ValidationError("--composition",
                               "not a pointed composition: " + s);
  return c;
}

std::vector<int> parse_partition(const std::string& s) {
  std::vector<int> parts;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    parts.push_back(std::stoi(tok));
  return parts;
}

void print_report(const ptopo::VerificationReport& report,
                  const std::string& format) {
  if (format == "json") {
    json out = json::array();
    for (const auto& c : report.claims)
      out.push_back({{"id", c.id},
                     {"statement", c.statement},
                     {"pass", c.pass},
                     {"witness", c.witness},
                     {"wall_time", c.wall_time}});
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "id,pass,wall_time,witness\n";
    for (const auto& c : report.claims) {
      std::string w = c.witness;
      for (char& ch : w)
        if (ch == ',' || ch == '\n') ch = ';';
      std::printf("%s,%s,%.3f,%s\n", c.id.c_str(), c.pass ? "true" : "false",
                  c.wall_time, w.c_str());
    }
  } else {
    for (const auto& c : report.claims) {
      std::printf("%-34s %s  (%.2fs)\n", c.id.c_str(),
                  c.pass ? "PASS" : "FAIL", c.wall_time);
      if (!c.pass) std::printf("    %s\n", c.witness.c_str());
    }
    int passed = 0;
    for (const auto& c : report.claims) passed += c.pass;
    std::printf("%d/%zu claims passed\n", passed, report.claims.size());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toolkit for pointed partition posets and their complexes"};
  app.require_subcommand(1);

  // beta -----------------------------------------------------------------
  auto* beta_cmd = app.add_subcommand(
      "beta", "Descent-class count of a pointed composition");
  std::string beta_comp;
  bool beta_list = false;
  beta_cmd->add_option("--composition", beta_comp, "comma-separated parts, e.g. 1,2,1")
      ->required();
  beta_cmd->add_flag("--list", beta_list,
                     "also list the permutations in the descent class");

  // homology ---------------------------------------------------------------
  auto* hom_cmd = app.add_subcommand("homology",
                                     "Reduced integer homology of a complex");
  std::string hom_kind = "delta";
  std::string hom_comp, hom_lambda, hom_poset = "pi-c", hom_format = "table";
  int hom_m = 0;
  hom_cmd->add_option("--complex", hom_kind, "delta | lambda | order-complex")
      ->check(CLI::IsMember({"delta", "lambda", "order-complex"}));
  hom_cmd->add_option("--composition", hom_comp, "for delta / order-complex pi-c");
  hom_cmd->add_option("--lambda", hom_lambda, "knapsack parts, e.g. 2,1");
  hom_cmd->add_option("--m", hom_m, "pointed part of the knapsack pair");
  hom_cmd->add_option("--poset", hom_poset, "order-complex source: pi-c | filter")
      ->check(CLI::IsMember({"pi-c", "filter"}));
  hom_cmd->add_option("--format", hom_format, "json | table")
      ->check(CLI::IsMember({"json", "table"}));

  // verify -------------------------------------------------------------
  auto* ver_cmd = app.add_subcommand("verify", "Run a verification suite");
  std::string ver_suite = "all", ver_format = "table";
  int ver_max_n = 4, ver_jobs = 1;
  unsigned ver_seed = 0;
  ver_cmd->add_option("--suite", ver_suite,
                      "mobius | homology | morse | cycles | specht | all")
      ->check(CLI::IsMember(
          {"mobius", "homology", "morse", "cycles", "specht", "all"}));
  ver_cmd->add_option("--max-n", ver_max_n, "largest ground-set size")
      ->check(CLI::Range(1, 10));
  ver_cmd->add_option("--format", ver_format, "json | csv | table")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  ver_cmd->add_option("--jobs", ver_jobs, "worker threads")->check(CLI::Range(1, 64));
  ver_cmd->add_option("--rng-seed", ver_seed, "seed for sampled checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (beta_cmd->parsed()) {
      ptopo::Composition c = parse_composition(beta_comp);
      json out;
      out["composition"] = ptopo::to_json(c);
      out["beta"] = ptopo::beta(c);
      if (beta_list) {
        json perms = json::array();
        for (const ptopo::Perm& a : ptopo::perms_with_descent_composition(c))
          perms.push_back(a);
        out["permutations"] = perms;
      }
      std::cout << out.dump(2) << "\n";
      return 0;
    }

    if (hom_cmd->parsed()) {
      ptopo::HomologyProfile hp;
      json meta;
      if (hom_kind == "delta") {
        if (hom_comp.empty())
          throw CLI::ValidationError("--composition", "required for delta");
        ptopo::Composition c = parse_composition(hom_comp);
        hp = ptopo::reduced_homology(ptopo::build_delta_c(c));
        meta["complex"] = "delta";
        meta["composition"] = ptopo::to_json(c);
      } else if (hom_kind == "lambda") {
        if (hom_lambda.empty())
          throw CLI::ValidationError("--lambda", "required for lambda");
        ptopo::KnapsackPartition kp(parse_partition(hom_lambda), hom_m);
        hp = ptopo::reduced_homology(ptopo::build_lambda(kp));
        meta["complex"] = "lambda";
        meta["knapsack"] = ptopo::to_json(kp);
      } else {
        ptopo::PointedPoset pp;
        if (hom_poset == "pi-c") {
          if (hom_comp.empty())
            throw CLI::ValidationError("--composition", "required for pi-c");
          ptopo::Composition c = parse_composition(hom_comp);
          pp = ptopo::build_subposet_pi_c(c);
          meta["composition"] = ptopo::to_json(c);
        } else {
          if (hom_lambda.empty())
            throw CLI::ValidationError("--lambda", "required for filter");
          ptopo::KnapsackPartition kp(parse_partition(hom_lambda), hom_m);
          pp = ptopo::build_filter(kp);
          meta["knapsack"] = ptopo::to_json(kp);
        }
        auto t = pp.poset.top();
        if (!t) throw std::runtime_error("poset has no top element");
        hp = ptopo::reduced_homology(
            ptopo::order_complex(pp.poset.without(*t)));
        meta["complex"] = "order-complex";
        meta["poset"] = hom_poset;
      }
      if (hom_format == "json") {
        json out = meta;
        out["homology"] = ptopo::to_json(hp);
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << hp.to_string() << "\n";
      }
      return 0;
    }

    if (ver_cmd->parsed()) {
      ptopo::VerificationReport report =
          ptopo::run_suite(ver_suite, ver_max_n, ver_jobs, ver_seed);
      print_report(report, ver_format);
      return report.all_pass() ? 0 : 1;
    }
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
