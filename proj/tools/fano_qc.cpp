#include <unistd.h>

#include <algorithm>
#include <cstdlib>
#include <future>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fanoqc/render.hpp"
#include "fanoqc/verify.hpp"

namespace {

using namespace fanoqc;

bool color_enabled() {
  const char* env = std::getenv("FANO_QC_COLOR");
  if (env && std::string(env) == "0") return false;
  return isatty(STDOUT_FILENO);
}

std::string tag(bool pass) {
  if (!color_enabled()) return pass ? "[PASS]" : "[FAIL]";
  return pass ? "\x1b[32m[PASS]\x1b[0m" : "\x1b[31m[FAIL]\x1b[0m";
}

int run_verify(const FanoParams& p) {
  VerificationReport report = verify_pipeline(p);
  std::cout << "verification of M_" << p.N << "^" << p.k << "\n";
  for (const auto& c : report.checks) {
    std::cout << tag(c.pass) << " " << c.name << "\n";
    if (!c.pass && !c.detail.empty()) std::cout << "       " << c.detail << "\n";
  }
  for (const auto& n : report.notes) std::cout << "note: " << n << "\n";
  return report.pass() ? 0 : 1;
}

int run_batch(int n_max, unsigned jobs) {
  std::vector<FanoParams> pairs;
  for (int n = 5; n <= n_max; ++n)
    for (int k = 1; k < n; ++k) pairs.push_back(FanoParams::make(n, k));

  std::vector<std::future<VerificationReport>> futures;
  futures.reserve(pairs.size());
  size_t next = 0;
  int failures = 0;
  while (next < pairs.size() || !futures.empty()) {
    while (next < pairs.size() && futures.size() < jobs) {
      futures.push_back(std::async(std::launch::async, verify_pipeline, pairs[next]));
      ++next;
    }
    VerificationReport r = futures.front().get();
    futures.erase(futures.begin());
    int passed = 0;
    for (const auto& c : r.checks) passed += c.pass ? 1 : 0;
    std::cout << tag(r.pass()) << " M_" << r.params.N << "^" << r.params.k << " (" << passed
              << "/" << r.checks.size() << " checks)\n";
    if (!r.pass()) ++failures;
  }
  std::cout << (failures == 0 ? "all pairs verified" : "failures: " + std::to_string(failures))
            << "\n";
  return failures == 0 ? 0 : 1;
}

enum class Format { table, json, latex };

void print_matrix(const PolyMatrix& m, const FanoParams& p, const std::string& target,
                  Format fmt) {
  switch (fmt) {
    case Format::table:
      std::cout << render::matrix_text(m);
      break;
    case Format::latex:
      std::cout << render::matrix_latex(m);
      break;
    case Format::json: {
      nlohmann::ordered_json j{{"N", p.N}, {"k", p.k}, {"target", target}};
      j["rows"] = render::matrix_json(m);
      std::cout << j.dump(2) << "\n";
      break;
    }
  }
}

void print_gw(const GWTable& t, Format fmt) {
  switch (fmt) {
    case Format::table:
      std::cout << render::gw_table_text(t);
      break;
    case Format::latex:
      std::cout << render::gw_table_latex(t);
      break;
    case Format::json:
      std::cout << render::gw_table_json(t).dump(2) << "\n";
      break;
  }
}

int run_emit(const FanoParams& p, const std::string& target, Format fmt) {
  AdaptedFamily pf = build_omega_pf(p);
  if (target == "pf") {
    DiffOperator op = picard_fuchs_operator(p);
    if (fmt == Format::table) {
      std::cout << op.str() << "\n";
    } else if (fmt == Format::latex) {
      std::cout << render::operator_latex(op) << "\n";
    } else {
      nlohmann::ordered_json j{{"N", p.N}, {"k", p.k}, {"target", "pf"}, {"operator", op.str()}};
      nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
      for (int g = 0; g <= op.order(); ++g) coeffs.push_back(op.coeff(g).str());
      j["coeffs"] = std::move(coeffs);
      std::cout << j.dump(2) << "\n";
    }
    return 0;
  }
  if (target == "omega-pf") {
    // the connection matrix itself, with the 1/h inside the entries
    print_matrix(pf.R.shifted(BigRat(1), 0, -1), p, target, fmt);
    return 0;
  }

  QSystem sys = solve_q_system(pf);
  if (target == "q-matrices") {
    if (fmt == Format::table)
      std::cout << render::qsystem_text(sys);
    else if (fmt == Format::latex)
      std::cout << render::qsystem_latex(sys);
    else
      std::cout << render::qsystem_json(sys).dump(2) << "\n";
    return 0;
  }
  if (target == "lplus") {
    print_matrix(assemble_lplus(sys), p, target, fmt);
    return 0;
  }

  NormalizedConnection hat = normalized_connection(sys, pf);
  if (target == "omega-hat") {
    // print M of Omega-hat = (1/h) M dt, the 1/h factored out
    print_matrix(hat.M, p, target, fmt);
    return 0;
  }
  NormalizedConnection dub = apply_dubrovin_shift(hat);
  if (target == "dubrovin") {
    print_matrix(dub.M, p, target, fmt);
    return 0;
  }
  // target == "gw"
  print_gw(structural_constants(dub), fmt);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact quantum cohomology of Fano hypersurfaces M_N^k in CP^{N-1}"};
  app.require_subcommand(1);

  int N = 0, k = 0, n_max = 0;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  bool allow_small = false;
  std::string target = "gw";
  std::string format = "table";
  const std::vector<std::string> targets{"pf",    "omega-pf",  "q-matrices", "lplus",
                                         "omega-hat", "dubrovin", "gw"};

  auto add_common = [&](CLI::App* cmd, bool with_format) {
    cmd->add_option("N", N, "ambient projective space CP^{N-1}")->required();
    cmd->add_option("k", k, "hypersurface degree")->required();
    cmd->add_flag("--allow-small", allow_small, "accept N = 3, 4 outside the default guard");
    if (with_format)
      cmd->add_option("--format", format, "output format")
          ->check(CLI::IsMember({"table", "json", "latex"}));
  };

  CLI::App* compute = app.add_subcommand("compute", "compute the 3-point GW invariants");
  add_common(compute, true);
  CLI::App* emit = app.add_subcommand("emit", "print an intermediate of the pipeline");
  add_common(emit, true);
  emit->add_option("--emit-target", target, "which intermediate to print")
      ->check(CLI::IsMember(targets));
  CLI::App* verify = app.add_subcommand("verify", "run the invariant suite for one (N,k)");
  add_common(verify, false);
  CLI::App* batch = app.add_subcommand("batch", "verify every Fano pair with 5 <= N <= n-max");
  batch->add_option("--n-max", n_max, "largest N in the sweep")->required();
  batch->add_option("--jobs", jobs, "concurrent verification jobs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  Format fmt = format == "json" ? Format::json : format == "latex" ? Format::latex : Format::table;

  try {
    if (batch->parsed()) return run_batch(n_max, std::max(1u, jobs));
    FanoParams p = FanoParams::make(N, k, allow_small);
    if (verify->parsed()) return run_verify(p);
    if (emit->parsed()) return run_emit(p, target, fmt);
    return run_emit(p, "gw", fmt);  // compute
  } catch (const InvalidParams& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
