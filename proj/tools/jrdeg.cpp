// jrdeg: inspect how strongly a committee represents cohesive voter groups,
// run the committee rules, and generate benchmark elections.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "jrdeg/degree.hpp"
#include "jrdeg/generators.hpp"
#include "jrdeg/reports.hpp"
#include "jrdeg/rules.hpp"
#include "jrdeg/solvers.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolated = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitBudget = 3;
constexpr int kExitBadLambda = 4;

using jrdeg::Committee;
using jrdeg::Rational;

std::string fmt_degree(const std::optional<int>& d) {
  return d ? std::to_string(*d) : "undefined";
}

std::string fmt_members(const std::vector<int>& ms) {
  std::string s;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(ms[i]);
  }
  return s;
}

void print_witness_text(const char* label, const std::optional<jrdeg::CohesiveWitness>& w) {
  if (!w) return;
  std::cout << label << ": level " << w->level << ", shared candidates {"
            << fmt_members(w->shared_candidates) << "}, group of " << w->voters.size()
            << " voters {" << fmt_members(w->voters) << "}, " << w->represented_count
            << " represented\n";
}

void print_degree_text(const jrdeg::DegreeReport& rep) {
  std::cout << "jr_degree: " << fmt_degree(rep.jr_degree) << '\n';
  std::cout << "ejr_degree: " << fmt_degree(rep.ejr_degree) << '\n';
  print_witness_text("jr_witness", rep.jr_witness);
  print_witness_text("ejr_witness", rep.ejr_witness);
}

void print_solve_text(const jrdeg::SolveResult& res, bool show_trace) {
  std::cout << "rule: " << res.rule << '\n';
  std::cout << "committee: " << fmt_members(res.committee.members) << '\n';
  std::cout << "jr_degree: " << fmt_degree(res.degrees.jr_degree) << '\n';
  std::cout << "ejr_degree: " << fmt_degree(res.degrees.ejr_degree) << '\n';
  std::cout << "c_max_proven: " << (res.c_max_proven ? "true" : "false") << '\n';
  std::cout << "enumerated: " << res.enumerated << '\n';
  if (res.search_limit) {
    std::cout << "search_limit: " << *res.search_limit << '\n';
    std::cout << "search_limit_raised: " << (res.search_limit_raised ? "true" : "false") << '\n';
  }
  if (show_trace && res.trace) {
    std::cout << "initial: " << fmt_members(res.trace->initial.members) << '\n';
    for (const auto& s : res.trace->swaps)
      std::cout << "swap: -" << s.removed << " +" << s.added << " delta " << s.delta.str()
                << '\n';
  }
}

struct GenParams {
  std::string family;
  std::string out;
  std::string cnf_path;
  std::string sc_path;
  int P = 2;
  int p = 1;
  int exponent = 1;
  int n = 0, m = 0, k = 0;
  std::string prob = "1/2";
  std::uint64_t seed = 0;
  bool seed_set = false;
};

int run_gen(const GenParams& g) {
  std::string payload;
  if (g.family == "tiny") {
    payload = serialize_instance(jrdeg::gen_tiny());
  } else if (g.family == "prop-example") {
    payload = serialize_instance(jrdeg::gen_prop_example());
  } else if (g.family == "appendix-b") {
    payload = serialize_instance(jrdeg::gen_appendix_b(g.P));
  } else if (g.family == "pav-fail") {
    payload = serialize_instance(jrdeg::gen_pav_failure(g.p));
  } else if (g.family == "sparse-sat") {
    if (g.cnf_path.empty()) throw jrdeg::ValidationError("sparse-sat needs --cnf");
    payload = serialize_instance(
        jrdeg::sparse_sat_to_voting(jrdeg::parse_dimacs_file(g.cnf_path)));
  } else if (g.family == "sat2sparse") {
    if (g.cnf_path.empty()) throw jrdeg::ValidationError("sat2sparse needs --cnf");
    payload = serialize_dimacs(jrdeg::sat_to_sparse_sat(jrdeg::parse_dimacs_file(g.cnf_path)));
  } else if (g.family == "pad-sparse") {
    if (g.cnf_path.empty()) throw jrdeg::ValidationError("pad-sparse needs --cnf");
    payload = serialize_dimacs(
        jrdeg::pad_sparse_sat(jrdeg::parse_dimacs_file(g.cnf_path), g.exponent));
  } else if (g.family == "setcover-jr") {
    if (g.sc_path.empty()) throw jrdeg::ValidationError("setcover-jr needs --sc");
    payload = serialize_instance(
        jrdeg::set_cover_to_mdjr(jrdeg::parse_setcover_file(g.sc_path)));
  } else if (g.family == "setcover-ejr") {
    if (g.sc_path.empty()) throw jrdeg::ValidationError("setcover-ejr needs --sc");
    payload = serialize_instance(
        jrdeg::set_cover_to_mdejr(jrdeg::parse_setcover_file(g.sc_path)));
  } else if (g.family == "random") {
    if (g.n < 1 || g.m < 1 || g.k < 1)
      throw jrdeg::ValidationError("random needs --n, --m and --k");
    if (!g.seed_set) throw jrdeg::ValidationError("random needs an explicit --seed");
    payload = serialize_instance(
        jrdeg::gen_random(g.n, g.m, g.k, Rational::parse(g.prob), g.seed));
  } else {
    throw jrdeg::ValidationError("unknown family '" + g.family + "'");
  }

  if (g.out.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(g.out);
    if (!out) throw jrdeg::ValidationError("cannot write '" + g.out + "'");
    out << payload;
  }
  return kExitOk;
}

struct BenchRow {
  std::string file, op, status, value;
  int n = 0, m = 0, k = 0;
  double ms = 0;
};

int run_bench(const std::string& dir, const jrdeg::SolverOptions& opts) {
  namespace fs = std::filesystem;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.is_regular_file() && e.path().extension() == ".abc") files.push_back(e.path());
  std::sort(files.begin(), files.end());

  bool budget_hit = false;
  std::cout << "file,op,n,m,k,wall_ms,status,value\n";
  for (const auto& f : files) {
    std::optional<jrdeg::ApprovalInstance> inst;
    std::vector<BenchRow> rows;
    auto timed = [&](const std::string& op, auto&& fn) {
      BenchRow row;
      row.file = f.filename().string();
      row.op = op;
      row.n = inst->n;
      row.m = inst->m;
      row.k = inst->k;
      auto start = std::chrono::steady_clock::now();
      try {
        row.value = fn();
        row.status = "ok";
      } catch (const jrdeg::BudgetExceeded&) {
        row.status = "budget-exceeded";
        budget_hit = true;
      }
      row.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                   .count();
      rows.push_back(std::move(row));
    };

    try {
      inst = jrdeg::parse_instance_file(f.string());
    } catch (const jrdeg::ValidationError&) {
      BenchRow row;
      row.file = f.filename().string();
      row.op = "parse";
      row.status = "parse-error";
      rows.push_back(row);
    }
    if (inst) {
      Committee greedy;
      timed("greedyav", [&] {
        greedy = jrdeg::greedy_av(*inst);
        return fmt_members(greedy.members);
      });
      timed("degree", [&] {
        auto rep = jrdeg::compute_degrees(*inst, greedy);
        return "jr=" + fmt_degree(rep.jr_degree) + " ejr=" + fmt_degree(rep.ejr_degree);
      });
      timed("lspav", [&] {
        Rational lambda(1, 2LL * inst->k * inst->k);
        return fmt_members(jrdeg::ls_pav(*inst, lambda).committee.members);
      });
      timed("brute-jr", [&] {
        auto r = jrdeg::brute_force_max_jr(*inst, opts);
        return "max=" + fmt_degree(r.degree);
      });
      timed("brute-ejr", [&] {
        auto r = jrdeg::brute_force_max_ejr(*inst, opts);
        return "max=" + fmt_degree(r.degree);
      });
    }
    for (const auto& r : rows) {
      std::cout << r.file << ',' << r.op << ',' << r.n << ',' << r.m << ',' << r.k << ','
                << r.ms << ',' << r.status << ',' << '"' << r.value << '"' << '\n';
    }
  }
  return budget_hit ? kExitBudget : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"JR/EJR degree toolkit for approval-based committee elections"};
  app.require_subcommand(1);

  bool json_out = false;
  app.add_flag("--json", json_out, "emit JSON instead of text");
  jrdeg::SolverOptions opts;
  app.add_option("--budget", opts.budget, "committee enumeration budget");
  app.add_option("--threads", opts.threads, "worker threads for enumeration");
  app.add_flag("--collapse-duplicates", opts.collapse_duplicates,
               "merge identical-approver-set candidates before enumerating");
  std::uint64_t seed = 0;
  auto* seed_opt = app.add_option("--seed", seed, "seed for every randomized path");

  // degree
  auto* cmd_degree = app.add_subcommand("degree", "JR and EJR degree of a committee");
  cmd_degree->fallthrough();
  std::string degree_file;
  std::vector<int> degree_committee;
  cmd_degree->add_option("instance", degree_file, "instance file")->required();
  cmd_degree->add_option("--committee", degree_committee, "committee candidate ids")
      ->required()
      ->delimiter(',');

  // solve
  auto* cmd_solve = app.add_subcommand("solve", "run a committee rule");
  cmd_solve->fallthrough();
  std::string solve_file, solve_rule, solve_lambda;
  std::vector<int> solve_initial;
  bool solve_trace = false;
  cmd_solve->add_option("instance", solve_file, "instance file")->required();
  cmd_solve
      ->add_option("--rule", solve_rule,
                   "greedyav | lspav | pav | mdjr | mdejr | brute-jr | brute-ejr")
      ->required();
  cmd_solve->add_option("--lambda", solve_lambda,
                        "swap threshold for lspav as 'p/q' (default 1/(2k^2))");
  auto* initial_opt = cmd_solve->add_option("--initial", solve_initial,
                                            "start committee for lspav")
                          ->delimiter(',');
  std::uint64_t initial_seed = 0;
  auto* initial_seed_opt =
      cmd_solve->add_option("--initial-seed", initial_seed,
                           "seed a random start committee for lspav instead");
  initial_seed_opt->excludes(initial_opt);
  cmd_solve->add_flag("--trace", solve_trace, "show local-search swaps");

  // gen
  GenParams gen;
  auto* cmd_gen = app.add_subcommand("gen", "generate instances and reductions");
  cmd_gen->fallthrough();
  cmd_gen
      ->add_option("family", gen.family,
                   "tiny | prop-example | appendix-b | pav-fail | sparse-sat | sat2sparse | "
                   "pad-sparse | setcover-jr | setcover-ejr | random")
      ->required();
  cmd_gen->add_option("--out", gen.out, "output path (stdout if omitted)");
  cmd_gen->add_option("--cnf", gen.cnf_path, "input CNF in DIMACS form");
  cmd_gen->add_option("--sc", gen.sc_path, "input set-cover file");
  cmd_gen->add_option("--P", gen.P, "block parameter for appendix-b (>= 2)");
  cmd_gen->add_option("--p", gen.p, "size parameter for pav-fail (>= 1)");
  cmd_gen->add_option("--exponent", gen.exponent, "padding exponent for pad-sparse");
  cmd_gen->add_option("--n", gen.n, "voters (random)");
  cmd_gen->add_option("--m", gen.m, "candidates (random)");
  cmd_gen->add_option("--k", gen.k, "committee size (random)");
  cmd_gen->add_option("--prob", gen.prob, "approval probability 'p/q' (random)");

  // verify
  auto* cmd_verify = app.add_subcommand("verify", "check a committee against an axiom");
  cmd_verify->fallthrough();
  std::string verify_file, verify_axiom;
  std::vector<int> verify_committee;
  int verify_min_degree = 1;
  cmd_verify->add_option("instance", verify_file, "instance file")->required();
  cmd_verify->add_option("--committee", verify_committee, "committee candidate ids")
      ->required()
      ->delimiter(',');
  cmd_verify->add_option("--axiom", verify_axiom, "jr | ejr")->required();
  cmd_verify->add_option("--min-degree", verify_min_degree,
                         "required degree (default 1, the plain axiom)");

  // bench
  auto* cmd_bench = app.add_subcommand("bench", "time the core operations over a directory");
  cmd_bench->fallthrough();
  std::string bench_dir;
  cmd_bench->add_option("dir", bench_dir, "directory of .abc instance files")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);  // prints the message (or help text, code 0)
    return code == 0 ? kExitOk : kExitInvalid;
  }
  gen.seed = seed;
  gen.seed_set = seed_opt->count() > 0;

  try {
    if (cmd_degree->parsed()) {
      auto inst = jrdeg::parse_instance_file(degree_file);
      Committee w{degree_committee};
      auto rep = jrdeg::compute_degrees(inst, w);
      if (json_out)
        std::cout << jrdeg::to_json(rep).dump(2) << '\n';
      else
        print_degree_text(rep);
      return kExitOk;
    }

    if (cmd_solve->parsed()) {
      auto inst = jrdeg::parse_instance_file(solve_file);
      jrdeg::SolveResult res;
      if (solve_rule == "greedyav") {
        res.rule = solve_rule;
        res.committee = jrdeg::greedy_av(inst);
      } else if (solve_rule == "lspav") {
        Rational lambda(1, 2LL * inst.k * inst.k);
        if (!solve_lambda.empty()) {
          try {
            lambda = Rational::parse(solve_lambda);
          } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << '\n';
            return kExitBadLambda;
          }
          if (lambda < Rational(0)) {
            std::cerr << "error: lambda must be >= 0\n";
            return kExitBadLambda;
          }
        }
        std::optional<Committee> initial;
        if (!solve_initial.empty()) initial = Committee{solve_initial};
        if (initial_seed_opt->count() > 0) initial = jrdeg::random_committee(inst, initial_seed);
        auto ls = jrdeg::ls_pav(inst, lambda, initial);
        res.rule = solve_rule;
        res.committee = ls.committee;
        res.trace = std::move(ls.trace);
      } else if (solve_rule == "pav") {
        res.rule = solve_rule;
        res.committee = jrdeg::pav_exact(inst, opts.budget);
        res.enumerated = jrdeg::committee_count(inst.m, inst.k, opts.budget);
      } else if (solve_rule == "mdjr") {
        res = jrdeg::mdjr_rule(inst, opts);
      } else if (solve_rule == "mdejr") {
        res = jrdeg::mdejr_rule(inst, opts);
      } else if (solve_rule == "brute-jr" || solve_rule == "brute-ejr") {
        auto r = solve_rule == "brute-jr" ? jrdeg::brute_force_max_jr(inst, opts)
                                          : jrdeg::brute_force_max_ejr(inst, opts);
        res.rule = solve_rule;
        res.committee = r.committee;
        res.c_max_proven = true;
        res.enumerated = r.enumerated;
      } else {
        std::cerr << "error: unknown rule '" << solve_rule << "'\n";
        return kExitInvalid;
      }
      res.degrees = jrdeg::compute_degrees(inst, res.committee);
      if (!solve_trace) res.trace.reset();
      if (json_out)
        std::cout << jrdeg::to_json(res).dump(2) << '\n';
      else
        print_solve_text(res, solve_trace);
      return kExitOk;
    }

    if (cmd_gen->parsed()) return run_gen(gen);

    if (cmd_verify->parsed()) {
      if (verify_axiom != "jr" && verify_axiom != "ejr") {
        std::cerr << "error: axiom must be 'jr' or 'ejr'\n";
        return kExitInvalid;
      }
      if (verify_min_degree < 1) {
        std::cerr << "error: --min-degree must be >= 1\n";
        return kExitInvalid;
      }
      auto inst = jrdeg::parse_instance_file(verify_file);
      Committee w{verify_committee};
      jrdeg::DegreeReport rep = verify_axiom == "jr" ? jrdeg::jr_degree(inst, w)
                                                     : jrdeg::ejr_degree(inst, w);
      auto degree = verify_axiom == "jr" ? rep.jr_degree : rep.ejr_degree;
      auto witness = verify_axiom == "jr" ? rep.jr_witness : rep.ejr_witness;
      bool ok = !degree.has_value() || *degree >= verify_min_degree;
      if (json_out) {
        nlohmann::json j;
        j["axiom"] = verify_axiom;
        j["min_degree"] = verify_min_degree;
        j["degree"] = degree ? nlohmann::json(*degree) : nlohmann::json(nullptr);
        j["satisfied"] = ok;
        j["witness"] = witness ? jrdeg::to_json(*witness) : nlohmann::json(nullptr);
        std::cout << j.dump(2) << '\n';
      } else {
        std::cout << "axiom: " << verify_axiom << " (degree >= " << verify_min_degree << ")\n";
        std::cout << "degree: " << fmt_degree(degree) << '\n';
        std::cout << "satisfied: " << (ok ? "true" : "false") << '\n';
        if (!ok) print_witness_text("violating group", witness);
      }
      return ok ? kExitOk : kExitViolated;
    }

    if (cmd_bench->parsed()) return run_bench(bench_dir, opts);
  } catch (const jrdeg::BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const jrdeg::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitOk;
}
