// gwadams: universal polynomials, Adams operations, ternary laws, forms and the
// verification suites from the command line.

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "expr.hpp"
#include "gwadams/borel.hpp"
#include "gwadams/forms.hpp"
#include "gwadams/gwring.hpp"
#include "gwadams/lambda.hpp"
#include "gwadams/poly_json.hpp"
#include "gwadams/symfunc.hpp"

namespace {

using namespace gwadams;
using nlohmann::json;

constexpr int kUsage = 2;

const std::vector<std::string> kSuites{"appendix-a", "appendix-b", "coefficient-ring", "lambda-axioms",
                                       "adams-hyperbolic", "omega", "borel", "ternary", "forms"};

std::string timestamp_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&t));
  return buf;
}

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// ------------------------------------------------------------------ universal

struct UniversalArgs {
  std::string kind;
  std::vector<int> indices;
  std::string method = "composed";
  int max = -1;
};

int run_universal(const UniversalArgs& a, const std::string& format) {
  auto render = [&](const poly::MultiPoly& p) {
    if (format == "json") return to_json(p).dump();
    if (format == "latex") return poly::to_latex(p);
    return poly::to_text(p);
  };
  auto need = [&](std::size_t n) {
    if (a.indices.size() != n)
      throw UsageError("universal " + a.kind + " takes " + std::to_string(n) + " index argument(s)");
    for (int i : a.indices)
      if (i < 1) throw UsageError("indices must be positive");
  };
  auto bound = [&](int value, int def, const std::string& what) {
    const int cap = a.max >= 0 ? a.max : def;
    if (value > cap)
      throw UsageError(what + " = " + std::to_string(value) + " exceeds the bound " + std::to_string(cap) +
                       " (raise it with --max)");
  };
  if (a.kind == "P") {
    need(1);
    bound(a.indices[0], 4, "n");
    std::cout << render(sym::universal_P(a.indices[0]).value) << "\n";
    return 0;
  }
  if (a.kind == "Q") {
    need(2);
    bound(a.indices[0] * a.indices[1], 6, "ij");
    std::cout << render(sym::universal_Q(a.indices[0], a.indices[1]).value) << "\n";
    return 0;
  }
  if (a.kind != "R") throw UsageError("kind must be P, Q or R");
  need(1);
  const int n = a.indices[0];
  const bool direct = a.method == "direct" || a.method == "both";
  const bool composed = a.method == "composed" || a.method == "both";
  if (direct) bound(n, 3, "n (direct)");
  if (composed) bound(n, 4, "n");
  std::optional<poly::MultiPoly> d, c;
  if (direct) d = sym::universal_R(n, sym::RMethod::direct).value;
  if (composed) c = sym::universal_R(n, sym::RMethod::composed).value;
  if (d) std::cout << render(*d) << "\n";
  if (c) std::cout << render(*c) << "\n";
  if (d && c) {
    const bool agree = *d == *c;
    std::cout << (agree ? "agree" : "disagree") << "\n";
    return agree ? 0 : 1;
  }
  return 0;
}

// ------------------------------------------------------------------ omega / adams / ternary

std::string render_gw(const gw::GWElem& x, const std::string& format) {
  if (format == "json") return gw::to_json(x).dump();
  if (format == "latex") return gw::to_latex(x);
  return gw::to_text(x);
}

int run_omega(int n, int table, const std::string& format) {
  if (table >= 0) {
    if (format == "json") {
      json rows = json::array();
      for (int m = 0; m <= table; ++m) rows.push_back({{"n", m}, {"omega", gw::to_json(borel::omega(m))}});
      std::cout << rows.dump() << "\n";
    } else {
      for (int m = 0; m <= table; ++m) std::cout << m << "\t" << render_gw(borel::omega(m), format) << "\n";
    }
    return 0;
  }
  if (n < 0) throw UsageError("omega needs n >= 0 or --table N");
  std::cout << render_gw(borel::omega(n), format) << "\n";
  return 0;
}

int run_adams(int n, const std::string& target, const std::string& format) {
  if (target.empty()) throw UsageError("adams needs --target");
  const lambda::SymClass x = cli::parse_target(target);
  const lambda::SymClass y = n < 0 ? lambda::adams_negative(n, x) : lambda::adams(n, x);
  bool constant = true;
  for (const auto& [e, c] : y.terms())
    for (int k : e)
      if (k) constant = false;
  for (const auto& [e, c] : x.terms())
    for (int k : e)
      if (k) constant = false;
  if (constant) {
    std::cout << render_gw(y.constant_part(), format) << "\n";
  } else if (format == "json") {
    std::cout << lambda::to_json(y).dump() << "\n";
  } else {
    std::cout << (format == "latex" ? lambda::to_latex(y) : lambda::to_text(y)) << "\n";
  }
  return 0;
}

int run_ternary(const std::string& theory, int cls, const std::string& format) {
  const auto laws = borel::ternary_laws(borel::theory_from_string(theory));
  if (cls != 0 && (cls < 1 || cls > 4)) throw UsageError("--class must be 1..4");
  auto render = [&](const borel::TernaryLaw& f) {
    if (format == "json") return borel::to_json(f).dump();
    return format == "latex" ? borel::to_latex(f) : borel::to_text(f);
  };
  if (cls) {
    std::cout << render(laws[cls - 1]) << "\n";
  } else if (format == "json") {
    json all = json::array();
    for (const auto& f : laws) all.push_back(borel::to_json(f));
    std::cout << all.dump() << "\n";
  } else {
    for (const auto& f : laws) std::cout << "F" << f.index << " = " << render(f) << "\n";
  }
  return 0;
}

// ------------------------------------------------------------------ verify

VerificationReport run_suite(const std::string& suite, int max) {
  if (suite == "appendix-a") {
    auto r = sym::check_appendix_a();
    r.append(lambda::check_twist_rules());
    r.suite = suite;
    r.sort();
    return r;
  }
  if (suite == "appendix-b") {
    sym::AppendixBOptions o;
    if (max > 0) o.max_n = max;
    return sym::check_appendix_b(o);
  }
  if (suite == "coefficient-ring")
    return gw::check_coefficient_identities([](int n) { return borel::omega(n); });
  if (suite == "lambda-axioms") return lambda::check_lambda_axioms();
  if (suite == "adams-hyperbolic") return lambda::check_adams_hyperbolic();
  if (suite == "omega") return borel::check_omega_laws();
  if (suite == "borel") return borel::check_borel_prop();
  if (suite == "ternary") return borel::check_ternary();
  if (suite == "forms") return forms::check_forms();
  throw UsageError("unknown suite '" + suite + "'");
}

void print_summary(const VerificationReport& r, const std::string& name, bool list) {
  std::cout << name << ": " << r.entries.size() << " entries, " << r.count(Status::pass) << " pass, "
            << r.count(Status::mismatch_documented) << " mismatch-documented, " << r.count(Status::fail) << " fail\n";
  if (!list) return;
  for (const auto& e : r.entries)
    if (e.status != Status::pass) std::cout << "  " << to_string(e.status) << " " << e.lemma << params_text(e.params) << "\n";
}

int run_verify(const std::string& suite, const std::string& json_path, bool no_timestamp, int max,
               const std::string& format) {
  std::vector<std::string> names;
  if (suite == "all") names = kSuites;
  else if (std::find(kSuites.begin(), kSuites.end(), suite) != kSuites.end()) names = {suite};
  else throw UsageError("unknown suite '" + suite + "'");

  std::vector<VerificationReport> reports;
  for (const auto& s : names) {
    reports.push_back(run_suite(s, max));
    reports.back().suite = s;
  }
  const std::string version = GWADAMS_VERSION;
  json doc;
  if (reports.size() == 1) {
    doc = to_json(reports[0], version);
  } else {
    json arr = json::array();
    for (const auto& r : reports) {
      json j = to_json(r, version);
      j.erase("tool_version");
      arr.push_back(std::move(j));
    }
    doc = {{"suite", "all"}, {"tool_version", version}, {"reports", arr}};
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();

  if (format == "json") {
    std::cout << doc.dump(2) << "\n";
  } else {
    VerificationReport total;
    for (const auto& r : reports) {
      print_summary(r, r.suite, true);
      total.append(r);
    }
    if (reports.size() > 1) print_summary(total, "all", false);
  }
  if (!json_path.empty()) {
    if (!no_timestamp) doc["timestamp"] = timestamp_now();
    std::ofstream out(json_path, std::ios::binary);
    if (!out) throw UsageError("cannot write " + json_path);
    out << doc.dump(2) << "\n";
  }
  return ok ? 0 : 1;
}

// ------------------------------------------------------------------ form

json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

forms::GramForm read_form(const std::string& path) { return forms::gram_from_json(read_json(path)); }

void print_form(const forms::GramForm& f, const std::string& format) {
  std::cout << (format == "text" ? forms::to_text(f) : forms::to_json(f).dump()) << "\n";
}

int parse_delta(const std::string& s) {
  if (s == "+" || s == "plus" || s == "symmetric") return 1;
  if (s == "-" || s == "minus" || s == "skew") return -1;
  throw UsageError("delta must be + or -");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adams operations, ternary laws and bilinear forms over Z[1/2]"};
  app.set_version_flag("--version", std::string(GWADAMS_VERSION));
  app.require_subcommand(1);

  // Defaults differ per subcommand (form commands write Gram JSON), so they are
  // resolved after parsing.
  std::string format;
  std::map<CLI::App*, std::string> format_default;
  auto add_format = [&](CLI::App* sub, const std::string& def) {
    sub->add_option("--format", format, "Output format (default " + def + ")")
        ->check(CLI::IsMember({"text", "latex", "json"}));
    format_default[sub] = def;
  };

  UniversalArgs ua;
  auto* universal = app.add_subcommand("universal", "Universal lambda-ring polynomials P_n, Q_ij, R_n");
  universal->add_option("kind", ua.kind, "P, Q or R")->required()->check(CLI::IsMember({"P", "Q", "R"}));
  universal->add_option("indices", ua.indices, "n, or i j for Q")->required();
  universal->add_option("--method", ua.method, "R pipeline")->check(CLI::IsMember({"direct", "composed", "both"}));
  universal->add_option("--max", ua.max, "Raise the index bound");
  add_format(universal, "text");

  int omega_n = -1, omega_table = -1;
  auto* omega = app.add_subcommand("omega", "The classes omega(n)");
  omega->add_option("n", omega_n, "n >= 0");
  omega->add_option("--table", omega_table, "omega(0..N)");
  add_format(omega, "text");

  int adams_n = 0;
  std::string target;
  auto* adams = app.add_subcommand("adams", "psi^n of an expression");
  adams->add_option("n", adams_n)->required()->allow_extra_args(false);
  adams->add_option("--target", target, "Expression or JSON");
  add_format(adams, "text");

  std::string theory = "gw";
  int cls = 0;
  auto* ternary = app.add_subcommand("ternary", "Ternary laws F_1..F_4");
  ternary->add_option("--theory", theory)->check(CLI::IsMember({"gw", "k", "witt"}));
  ternary->add_option("--class", cls, "1..4 (default: all)");
  add_format(ternary, "text");

  std::string suite, json_path;
  bool no_timestamp = false;
  int verify_max = -1;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suite", suite)->required();
  verify->add_option("--json", json_path, "Write the report here");
  verify->add_flag("--no-timestamp", no_timestamp);
  verify->add_option("--max", verify_max, "Appendix B bound");
  add_format(verify, "text");

  auto* form = app.add_subcommand("form", "Bilinear forms over Q (Gram JSON)");
  form->require_subcommand(1);
  std::string fa, fb, delta;
  int fn = 0, rank = 0;
  auto* ext = form->add_subcommand("ext-power", "n-th exterior power");
  ext->add_option("form", fa)->required();
  ext->add_option("n", fn)->required();
  add_format(ext, "json");
  auto* symp = form->add_subcommand("sym-power", "n-th symmetric power");
  symp->add_option("form", fa)->required();
  symp->add_option("n", fn)->required();
  add_format(symp, "json");
  auto* tens = form->add_subcommand("tensor", "Tensor product");
  tens->add_option("f", fa)->required();
  tens->add_option("g", fb)->required();
  add_format(tens, "json");
  auto* hyp = form->add_subcommand("hyperbolic", "H_delta of a trivial bundle");
  hyp->add_option("r", rank)->required();
  hyp->add_option("delta", delta, "+ or -")->required();
  add_format(hyp, "json");
  auto* inv = form->add_subcommand("invariants", "Hasse-Minkowski invariants");
  inv->add_option("form", fa)->required();
  add_format(inv, "json");
  auto* eq = form->add_subcommand("gw-equal", "Equality in GW(Q)");
  eq->add_option("f", fa)->required();
  eq->add_option("g", fb)->required();
  add_format(eq, "text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (format.empty())
    for (const auto& [sub, def] : format_default)
      if (sub->parsed()) format = def;

  if (const char* cache = std::getenv("GWADAMS_CACHE")) sym::set_cache_path(cache);

  try {
    if (*universal) return run_universal(ua, format);
    if (*omega) return run_omega(omega_n, omega_table, format);
    if (*adams) return run_adams(adams_n, target, format);
    if (*ternary) return run_ternary(theory, cls, format);
    if (*verify) return run_verify(suite, json_path, no_timestamp, verify_max, format);
    if (*ext) print_form(forms::ext_power(read_form(fa), fn), format);
    else if (*symp) print_form(forms::sym_power(read_form(fa), fn), format);
    else if (*tens) print_form(forms::tensor(read_form(fa), read_form(fb)), format);
    else if (*hyp) print_form(forms::hyperbolic(rank, parse_delta(delta)), format);
    else if (*inv) {
      const auto x = forms::invariants(read_form(fa));
      if (format == "json") {
        std::cout << forms::to_json(x).dump() << "\n";
      } else {
        std::cout << "rank " << x.rank << ", signature " << x.signature << ", disc " << x.disc << ", hasse";
        for (const auto& [p, h] : x.hasse) std::cout << " " << (p == forms::kRealPlace ? "inf" : p.get_str()) << ":" << h;
        std::cout << "\n";
      }
    } else if (*eq) {
      std::string why;
      const bool same = forms::gw_equal(read_form(fa), read_form(fb), &why);
      if (format == "json") std::cout << json{{"equal", same}, {"diagnostic", why}}.dump() << "\n";
      else std::cout << (same ? "equal" : "not equal: " + why) << "\n";
    }
    return 0;
  } catch (const UsageError& e) {
    std::cerr << "gwadams: " << e.what() << "\n";
    return kUsage;
  } catch (const gwadams::Error& e) {
    std::cerr << "gwadams: " << e.what() << "\n";
    return kUsage;
  }
}
