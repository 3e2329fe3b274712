// Acceptance criteria 1-9. Prints one PASS/FAIL line per criterion and exits
// non-zero when any selected criterion fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "gwadams/borel.hpp"
#include "gwadams/forms.hpp"
#include "gwadams/gwring.hpp"
#include "gwadams/lambda.hpp"
#include "gwadams/symfunc.hpp"

namespace {

using namespace gwadams;
using gw::GWElem;
using poly::Integer;
using Clock = std::chrono::steady_clock;

// Time limits, in seconds.
constexpr double kAppendixBLimit = 60.0;
constexpr double kVerifyAllLimit = 120.0;

struct Outcome {
  bool ok = true;
  std::vector<std::string> problems;
  std::string summary;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (problems.size() < 8) problems.push_back(what);
    }
  }
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::size_t count_lemma(const VerificationReport& r, const std::string& lemma) {
  std::size_t n = 0;
  for (const auto& e : r.entries) n += e.lemma == lemma;
  return n;
}

// Every entry of `lemma` passes and there are at least `min` of them.
void require_lemma(Outcome& o, const VerificationReport& r, const std::string& lemma, std::size_t min) {
  const std::size_t n = count_lemma(r, lemma);
  o.require(n >= min, lemma + ": " + std::to_string(n) + " entries, expected >= " + std::to_string(min));
  for (const auto& e : r.entries)
    if (e.lemma == lemma && e.status != Status::pass)
      o.require(false, lemma + params_text(e.params) + " is " + to_string(e.status));
}

bool has_entry(const VerificationReport& r, const std::string& lemma, const std::vector<Param>& params) {
  for (const auto& e : r.entries)
    if (e.lemma == lemma && e.params == params && e.status == Status::pass) return true;
  return false;
}

// 1. Appendix B.
Outcome criterion1() {
  Outcome o;
  const auto t0 = Clock::now();
  const auto b = sym::check_appendix_b();
  const auto a = sym::check_appendix_a();
  const double secs = seconds_since(t0);
  for (long n = 0; n <= 4; ++n) o.require(has_entry(b, "P_stability", {n}), "P_" + std::to_string(n) + " arity stability");
  for (long i = 1; i <= 6; ++i)
    for (long j = 1; i * j <= 6; ++j)
      o.require(has_entry(b, "Q_stability", {i, j}), "Q_" + std::to_string(i) + "," + std::to_string(j) + " arity stability");
  for (long n = 0; n <= 4; ++n)
    o.require(has_entry(b, "R_stability_composed", {n}), "R_" + std::to_string(n) + " composed arity stability");
  for (long n = 0; n <= 3; ++n) o.require(has_entry(b, "R_stability", {n}), "R_" + std::to_string(n) + " direct arity stability");
  for (const char* lemma : {"RXY", "RB", "RZ", "R_P", "R_abc"}) require_lemma(o, b, lemma, 1);
  for (const char* lemma : {"lambda_dim1", "product_dim1"}) require_lemma(o, a, lemma, 1);
  o.require(b.ok() && a.ok(), "appendix suites report failures");
  o.require(secs < kAppendixBLimit, "runtime " + std::to_string(secs) + " s");
  o.summary = std::to_string(a.entries.size() + b.entries.size()) + " entries in " + std::to_string(secs) + " s";
  return o;
}

// 2. Coefficient ring identities, recomputed directly and through the suite.
Outcome criterion2() {
  Outcome o;
  const GWElem h = gw::h(), tau = GWElem::tau(), gamma = GWElem::gamma(), eps = GWElem::eps(), one = GWElem::one();
  o.require(h * h == h * Integer(2), "h^2 = 2h");
  o.require(h * tau == tau * Integer(2), "h tau = 2 tau");
  o.require(tau * tau == gamma * h * Integer(2), "tau^2 = 2 gamma h");
  for (long i = -4; i <= 4; ++i) {
    o.require(((one + eps) * gw::hyperbolic_unit(i)).is_zero(), "(1+eps) h_2i(1) = 0 at i = " + std::to_string(i));
    for (long j = -4; j <= 4; ++j)
      o.require(gw::hyperbolic_unit(i) * gw::hyperbolic_unit(j) == gw::hyperbolic_unit(i + j) * Integer(2),
                "h_2i h_2j at " + std::to_string(i) + "," + std::to_string(j));
  }
  for (long m = 1; m <= 6; ++m)
    for (long n = 1; n <= 6; ++n)
      o.require(gw::n_star(m * n) == gw::n_star(m) * gw::n_star(n), "(mn)* at " + std::to_string(m) + "," + std::to_string(n));
  const auto r = gw::check_coefficient_identities([](int n) { return borel::omega(n); });
  for (const char* lemma : {"tau_sq", "2_sigma", "product_h", "m_n_star"}) require_lemma(o, r, lemma, 3);
  o.require(count_lemma(r, "product_h") >= 81, "product_h covers |i|,|j| <= 4");
  o.require(r.ok(), "coefficient-ring suite reports failures");
  o.summary = std::to_string(r.entries.size()) + " suite entries";
  return o;
}

// 3. omega(n).
Outcome criterion3() {
  Outcome o;
  for (int n = 0; n <= 10; ++n)
    o.require(borel::omega(n) == borel::omega(n, borel::OmegaMethod::closed_form), "omega_explicit n = " + std::to_string(n));
  for (int m = 2; m <= 5; ++m)
    for (int n = 2; n <= 5; ++n)
      o.require(borel::omega(m * n) == borel::omega(n) * lambda::adams(n, borel::omega(m)),
                "omega(mn) at " + std::to_string(m) + "," + std::to_string(n));
  for (int n = 1; n <= 8; ++n) {
    const auto s = borel::psi_u_minus_tau(n);
    o.require(s.constant.is_zero() && s.linear == borel::omega(n), "psi^n(u - tau) at n = " + std::to_string(n));
  }
  const auto r = borel::check_omega_laws();
  require_lemma(o, r, "omega_explicit", 11);
  require_lemma(o, r, "omega_psi", 16);
  require_lemma(o, r, "omega_n", 8);
  require_lemma(o, r, "localization_odd", 5);
  require_lemma(o, r, "omega_sq", 4);
  o.summary = std::to_string(r.entries.size()) + " suite entries";
  return o;
}

// 4. psi^n(tau): tau gamma^{(n-1)/2} for odd n, 2 <-1>^{n/2} gamma^{n/2} for even n.
Outcome criterion4() {
  Outcome o;
  const GWElem tau = GWElem::tau();
  const auto psi = lambda::adams_all(10, lambda::SymClass::constant(tau, 1));
  for (int n = 0; n <= 10; ++n) {
    const GWElem want = n % 2 ? tau.shift((n - 1) / 2) : (gw::minus_one_form().pow(n / 2) * Integer(2)).shift(n / 2);
    o.require(psi[n].constant_part() == want && lambda::adams(n, tau) == want,
              "psi^" + std::to_string(n) + "(tau) = " + gw::to_text(psi[n].constant_part()) + ", want " + gw::to_text(want));
  }
  o.summary = "n = 0..10";
  return o;
}

// 5. Lambda-ring axioms and Adams compatibilities on the default samples.
Outcome criterion5() {
  Outcome o;
  const auto r = lambda::check_lambda_axioms();
  for (const char* lemma : {"L1", "L2", "psi_compose", "psi_mult"}) require_lemma(o, r, lemma, 1);
  o.require(r.ok(), "lambda-axioms suite reports failures");
  o.summary = std::to_string(r.entries.size()) + " entries";
  return o;
}

// 6. Ternary laws against the published displays.
Outcome criterion6() {
  Outcome o;
  const auto gw_laws = borel::ternary_laws(borel::Theory::gw), gw_disp = borel::displayed_laws(borel::Theory::gw);
  const auto k_laws = borel::ternary_laws(borel::Theory::k), k_disp = borel::displayed_laws(borel::Theory::k);
  const auto w_laws = borel::ternary_laws(borel::Theory::witt);
  for (int i = 0; i < 4; ++i) {
    const std::string F = "F" + std::to_string(i + 1);
    o.require(gw_laws[i].sym == gw_disp[i].sym, "GW " + F);
    o.require(k_laws[i].k == k_disp[i].k, "K " + F);
    // Witt: specialize the GW law term by term; survivors are eps-free and tau-free.
    lambda::SymClass spec = gw_laws[i].sym.map_coeffs(borel::witt_specialize);
    o.require(w_laws[i].sym == spec, "Witt " + F + " is the specialization");
    for (const auto& [e, c] : w_laws[i].sym.terms())
      for (const auto& [k, t] : c.slots()) o.require(t.b == 0 && t.c == 0, "Witt " + F + " coefficient has eps or tau");
  }
  const auto r = borel::check_ternary();
  for (const char* lemma : {"ternary_gw", "ternary_k", "ternary_witt"}) require_lemma(o, r, lemma, 4);
  o.summary = "F1..F4 for gw, k, witt";
  return o;
}

// 7. Bilinear forms.
Outcome criterion7() {
  Outcome o;
  const auto r = forms::check_forms();
  std::set<std::pair<long, long>> rank_n;
  std::size_t pairs = 0;
  for (const auto& e : r.entries) {
    if (e.lemma == "lambda_n_rank_n" && e.params.size() == 2 && std::holds_alternative<long>(e.params[1]) &&
        e.status == Status::pass)
      rank_n.insert({std::get<long>(e.params[0]), std::get<long>(e.params[1])});
    if (e.lemma == "lambda_22" && std::get<long>(e.params[1]) == 2) ++pairs;
  }
  for (long m = 1; m <= 3; ++m)
    for (long i = 0; i <= 2 * m; ++i)
      o.require(rank_n.count({m, i}) == 1, "lambda_n_rank_n m = " + std::to_string(m) + ", i = " + std::to_string(i));
  for (const std::string v : {"<1,-1>", "plane"}) {
    o.require(has_entry(r, "tens2_decomp", {v}), "tens2_decomp for " + v);
    o.require(has_entry(r, "+-_SymLambda", {v, std::string("+")}) && has_entry(r, "+-_SymLambda", {v, std::string("-")}),
              "+-_SymLambda for " + v);
  }
  for (long rk = 1; rk <= 2; ++rk)
    for (long n : {1L, 3L, 5L})
      for (const std::string d : {"+", "-"})
        o.require(has_entry(r, "lambda_hyp", {rk, n, d}), "lambda_hyp rank identity " + std::to_string(rk) + "," + std::to_string(n) + d);
  o.require(pairs >= 10, "lambda_22 pairs: " + std::to_string(pairs));
  require_lemma(o, r, "lambda_22", 50);
  require_lemma(o, r, "hilbert_product", 100);
  o.require(r.ok(), "forms suite reports failures");
  o.summary = std::to_string(r.entries.size()) + " entries, " + std::to_string(pairs) + " symplectic pairs";
  return o;
}

// 8. Documented discrepancies, exactly at even n with even i for n in {2, 4}, i in {0, 1, 2}.
Outcome criterion8() {
  Outcome o;
  const auto r = lambda::check_adams_hyperbolic();
  std::ostringstream seen;
  for (long n = 1; n <= 5; ++n)
    for (long i = 0; i <= 2; ++i) {
      const ReportEntry* e = nullptr;
      for (const auto& x : r.entries)
        if (x.lemma == "psi_h_1" && x.params == std::vector<Param>{n, i}) e = &x;
      const std::string at = "(" + std::to_string(n) + "," + std::to_string(i) + ")";
      if (!e) {
        o.require(false, "psi_h_1" + at + " missing");
        continue;
      }
      const bool want_mismatch = (n == 2 || n == 4) && i % 2 == 0;
      const Status want = want_mismatch ? Status::mismatch_documented : Status::pass;
      if (e->status == Status::mismatch_documented) seen << at;
      o.require(e->status == want, "psi_h_1" + at + " is " + to_string(e->status) + ", expected " + to_string(want));
    }
  o.require(r.count(Status::fail) == 0, "adams-hyperbolic has failing entries");
  o.summary = "mismatch-documented at " + seen.str();
  return o;
}

// 9. verify all through the CLI under the time limit, and every golden output.
Outcome criterion9(const std::string& cli, const std::string& golden) {
  Outcome o;
  auto run = [&](const std::string& args, std::string& out) {
    FILE* p = popen((cli + " " + args + " 2>/dev/null").c_str(), "r");
    if (!p) return -1;
    std::array<char, 4096> buf;
    std::size_t n;
    out.clear();
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    const int status = pclose(p);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  };
  std::string out;
  const auto t0 = Clock::now();
  const int code = run("verify all", out);
  const double secs = seconds_since(t0);
  o.require(code == 0, "verify all exit code " + std::to_string(code));
  o.require(secs < kVerifyAllLimit, "verify all took " + std::to_string(secs) + " s");

  std::ifstream cases(golden + "/cases.txt");
  o.require(bool(cases), "cannot read " + golden + "/cases.txt");
  std::string line;
  std::size_t checked = 0;
  while (std::getline(cases, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto bar = line.find('|');
    const std::string name = line.substr(0, bar);
    std::string args;
    std::istringstream words(line.substr(bar + 1));
    for (std::string w; words >> w;) args += " '" + (w[0] == '@' ? golden + "/" + w.substr(1) : w) + "'";
    std::ifstream f(golden + "/" + name + ".txt", std::ios::binary);
    const std::string want((std::istreambuf_iterator<char>(f)), {});
    std::string first, second;
    run(args, first);
    run(args, second);
    o.require(first == want && second == want, "golden " + name);
    ++checked;
  }
  o.summary = "verify all in " + std::to_string(secs) + " s, " + std::to_string(checked) + " golden outputs";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> selected;
  std::string cli, golden;
  app.add_option("--criterion", selected, "Criterion numbers (default: all)")->check(CLI::Range(1, 9));
  app.add_option("--cli", cli, "Path to the gwadams executable")->required();
  app.add_option("--golden", golden, "Golden directory")->required();
  CLI11_PARSE(app, argc, argv);
  if (selected.empty()) selected = {1, 2, 3, 4, 5, 6, 7, 8, 9};

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Appendix B polynomials and lemmas", criterion1},
      {"coefficient ring identities", criterion2},
      {"omega(n) laws", criterion3},
      {"psi^n(tau)", criterion4},
      {"lambda-ring axioms", criterion5},
      {"ternary laws", criterion6},
      {"bilinear forms", criterion7},
      {"documented psi_h_1 discrepancies", criterion8},
      {"end to end", [&] { return criterion9(cli, golden); }},
  };
  bool all_ok = true;
  for (int c : selected) {
    Outcome o;
    try {
      o = criteria[c - 1].second();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    all_ok = all_ok && o.ok;
    std::cout << "criterion " << c << " " << (o.ok ? "PASS" : "FAIL") << ": " << criteria[c - 1].first;
    if (!o.summary.empty()) std::cout << " (" << o.summary << ")";
    std::cout << "\n";
    for (const auto& p : o.problems) std::cout << "    " << p << "\n";
  }
  return all_ok ? 0 : 1;
}
