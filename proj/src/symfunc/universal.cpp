#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "gwadams/poly_json.hpp"
#include "gwadams/symfunc.hpp"

#ifndef GWADAMS_VERSION
#define GWADAMS_VERSION "0.0.0"
#endif

namespace gwadams::sym {

using poly::Monomial;
using poly::VarContext;

namespace {

// Coefficient of t^n in prod_f (1 + t*monos[f]).
MultiPoly product_coefficient(const ContextPtr& ctx, const std::vector<Monomial>& monos, int n) {
  std::vector<MultiPoly> c(n + 1, MultiPoly(ctx));
  c[0] = MultiPoly::constant(ctx, 1);
  int filled = 0;
  for (const auto& mono : monos) {
    const MultiPoly m = MultiPoly::monomial(ctx, mono);
    filled = std::min(filled + 1, n);
    for (int k = filled; k >= 1; --k)
      if (!c[k - 1].is_zero()) c[k] += c[k - 1] * m;
  }
  return c[n];
}

Monomial unit_mono(const ContextPtr& ctx, std::initializer_list<std::size_t> idx) {
  Monomial m{std::vector<std::int32_t>(ctx->size(), 0)};
  for (auto i : idx) ++m.exps[i];
  return m;
}

// Memo of universal polynomials, optionally mirrored to a JSON file.
class UniversalCache {
 public:
  std::optional<MultiPoly> get(const std::string& key) {
    load_once();
    std::shared_lock lock(mu_);
    auto it = mem_.find(key);
    if (it == mem_.end()) return std::nullopt;
    return it->second;
  }

  void put(const std::string& key, const MultiPoly& value) {
    load_once();
    std::unique_lock lock(mu_);
    if (!mem_.emplace(key, value).second) return;
    if (!path_.empty()) save_locked();
  }

  void set_path(const std::string& path) {
    std::unique_lock lock(mu_);
    path_ = path;
    path_set_ = true;
    loaded_ = false;
  }

  void clear() {
    std::unique_lock lock(mu_);
    mem_.clear();
    loaded_ = false;
  }

 private:
  std::shared_mutex mu_;
  std::map<std::string, MultiPoly> mem_;
  std::string path_;
  bool path_set_ = false;
  bool loaded_ = false;

  void load_once() {
    std::unique_lock lock(mu_);
    if (loaded_) return;
    loaded_ = true;
    if (!path_set_) {
      const char* env = std::getenv("GWADAMS_CACHE");
      path_ = env ? env : "";
    }
    if (path_.empty() || !std::filesystem::exists(path_)) return;
    try {
      std::ifstream in(path_);
      auto j = nlohmann::json::parse(in);
      if (j.value("tool_version", "") != GWADAMS_VERSION || j.value("format", 0) != 1) return;
      for (const auto& [key, value] : j.at("entries").items()) mem_.emplace(key, poly::poly_from_json(value));
    } catch (const std::exception&) {
      // An unreadable cache is ignored and rewritten on the next insert.
    }
  }

  void save_locked() {
    nlohmann::json entries = nlohmann::json::object();
    for (const auto& [key, value] : mem_) entries[key] = poly::to_json(value);
    nlohmann::json j{{"format", 1}, {"tool_version", GWADAMS_VERSION}, {"entries", entries}};
    const std::string tmp = path_ + ".tmp";
    {
      std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
      out << j.dump(1) << '\n';
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path_, ec);
  }
};

UniversalCache& cache() {
  static UniversalCache c;
  return c;
}

template <class F>
MultiPoly cached(const std::string& key, F&& compute) {
  if (auto hit = cache().get(key)) return *hit;
  MultiPoly value = compute();
  cache().put(key, value);
  return value;
}

std::string key_of(const char* kind, std::initializer_list<int> xs) {
  std::string k = kind;
  for (int x : xs) k += "/" + std::to_string(x);
  return k;
}

}  // namespace

void set_cache_path(const std::string& path) { cache().set_path(path); }
void clear_memory_cache() { cache().clear(); }

MultiPoly P_restricted(int n, int a, int b) {
  return cached(key_of("P", {n, a, b}), [&] {
    auto uv = family_context({{"U", a}, {"V", b}});
    std::vector<Monomial> monos;
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j) monos.push_back(unit_mono(uv, {std::size_t(i), std::size_t(a + j)}));
    MultiPoly coeff = product_coefficient(uv, monos, n);
    auto xv = family_context({{"X", a}, {"V", b}});
    auto xy = family_context({{"X", a}, {"Y", b}});
    MultiPoly step = symmetric_reduce(coeff, family("U", a), family("X", a), xv);
    return symmetric_reduce(step, family("V", b), family("Y", b), xy);
  });
}

MultiPoly Q_restricted(int i, int j, int a) {
  return cached(key_of("Q", {i, j, a}), [&] {
    auto u = family_context({{"U", a}});
    std::vector<Monomial> monos;
    if (j <= a) {
      std::vector<bool> pick(a, false);
      std::fill(pick.begin(), pick.begin() + j, true);
      do {
        Monomial m{std::vector<std::int32_t>(a, 0)};
        for (int k = 0; k < a; ++k) m.exps[k] = pick[k] ? 1 : 0;
        monos.push_back(std::move(m));
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    MultiPoly coeff = product_coefficient(u, monos, i);
    return symmetric_reduce(coeff, family("U", a), family("X", a), family_context({{"X", a}}));
  });
}

MultiPoly R_direct(int n, int a, int b, int c) {
  return cached(key_of("Rd", {n, a, b, c}), [&] {
    auto uvw = family_context({{"U", a}, {"V", b}, {"W", c}});
    std::vector<Monomial> monos;
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j)
        for (int k = 0; k < c; ++k)
          monos.push_back(unit_mono(uvw, {std::size_t(i), std::size_t(a + j), std::size_t(a + b + k)}));
    MultiPoly coeff = product_coefficient(uvw, monos, n);
    auto c1 = family_context({{"X", a}, {"V", b}, {"W", c}});
    auto c2 = family_context({{"X", a}, {"Y", b}, {"W", c}});
    auto c3 = family_context({{"X", a}, {"Y", b}, {"Z", c}});
    MultiPoly s1 = symmetric_reduce(coeff, family("U", a), family("X", a), c1);
    MultiPoly s2 = symmetric_reduce(s1, family("V", b), family("Y", b), c2);
    return symmetric_reduce(s2, family("W", c), family("Z", c), c3);
  });
}

MultiPoly R_composed(int n, int a, int b, int c) {
  return cached(key_of("Rc", {n, a, b, c}), [&] {
    auto xyz = family_context({{"X", a}, {"Y", b}, {"Z", c}});
    // p_k = P_k(Y, Z) vanishes for k > bc, so the outer P_n needs only that many Y slots.
    const int inner = std::min(n, b * c);
    std::map<std::string, MultiPoly> rename;
    for (int i = 1; i <= b; ++i) rename.emplace("X" + std::to_string(i), MultiPoly::variable(xyz, "Y" + std::to_string(i)));
    for (int j = 1; j <= c; ++j) rename.emplace("Y" + std::to_string(j), MultiPoly::variable(xyz, "Z" + std::to_string(j)));
    std::map<std::string, MultiPoly> bind;
    for (int k = 1; k <= inner; ++k)
      bind.emplace("Y" + std::to_string(k), poly::substitute(P_restricted(k, b, c), rename, xyz));
    return poly::substitute(P_restricted(n, a, inner), bind, xyz);
  });
}

UniversalPoly universal_P(int n) {
  if (n < 0) throw OrderError("universal_P: negative index");
  return {Kind::P, {n}, P_restricted(n, n, n), n};
}

UniversalPoly universal_Q(int i, int j) {
  if (i < 0 || j < 1) throw OrderError("universal_Q: need i >= 0 and j >= 1");
  return {Kind::Q, {i, j}, Q_restricted(i, j, i * j), i * j};
}

UniversalPoly universal_R(int n, RMethod method) {
  if (n < 0) throw OrderError("universal_R: negative index");
  MultiPoly v = method == RMethod::direct ? R_direct(n, n, n, n) : R_composed(n, n, n, n);
  return {Kind::R, {n}, std::move(v), n};
}

}  // namespace gwadams::sym
