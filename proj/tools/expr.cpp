#include "expr.hpp"

#include <cctype>
#include <regex>

#include <nlohmann/json.hpp>

namespace gwadams::cli {

using gw::GWElem;
using lambda::SymClass;

namespace {

class Parser {
 public:
  Parser(std::string s, int generators) : s_(std::move(s)), k_(generators) {}

  SymClass parse() {
    SymClass x = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return x;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("target expression, column " + std::to_string(pos_ + 1) + ": " + why);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  SymClass expr() {
    SymClass x = term();
    while (true) {
      if (eat('+')) x += term();
      else if (eat('-')) x -= term();
      else return x;
    }
  }

  SymClass term() {
    SymClass x = unary();
    while (eat('*')) x *= unary();
    return x;
  }

  SymClass unary() {
    if (eat('-')) return -unary();
    return power();
  }

  SymClass power() {
    bool is_gamma = false;
    SymClass x = atom(is_gamma);
    if (!eat('^')) return x;
    skip();
    const bool neg = eat('-');
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent expected");
    const int e = std::stoi(s_.substr(start, pos_ - start));
    if (!neg) return x.pow(e);
    if (!is_gamma) fail("negative exponents are allowed on gamma only");
    return SymClass::constant(GWElem::gamma(-e), k_);
  }

  SymClass atom(bool& is_gamma) {
    skip();
    if (eat('(')) {
      SymClass x = expr();
      if (!eat(')')) fail("')' expected");
      return x;
    }
    const std::size_t start = pos_;
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return SymClass::constant(GWElem::one() * poly::Integer(s_.substr(start, pos_ - start)), k_);
    }
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::string id = s_.substr(start, pos_ - start);
    if (id.empty()) fail(pos_ < s_.size() ? "unexpected '" + std::string(1, s_[pos_]) + "'" : "unexpected end");
    if (id == "eps") return SymClass::constant(GWElem::eps(), k_);
    if (id == "tau") return SymClass::constant(GWElem::tau(), k_);
    if (id == "h") return SymClass::constant(gw::h(), k_);
    if (id == "gamma") {
      is_gamma = true;
      return SymClass::constant(GWElem::gamma(), k_);
    }
    if (id[0] == 'u' && id.size() > 1) return SymClass::u(std::stoi(id.substr(1)), k_);
    pos_ = start;
    fail("unknown symbol '" + id + "'");
  }

  std::string s_;
  int k_;
  std::size_t pos_ = 0;
};

}  // namespace

SymClass parse_target(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("target JSON: ") + e.what());
    }
    return lambda::sym_from_json(j);
  }
  int generators = 1;
  static const std::regex u_index(R"(\bu([0-9]+)\b)");
  for (auto it = std::sregex_iterator(text.begin(), text.end(), u_index); it != std::sregex_iterator(); ++it) {
    const int i = std::stoi((*it)[1]);
    if (i < 1) throw ParseError("generator indices start at u1");
    generators = std::max(generators, i);
  }
  return Parser(text, generators).parse();
}

}  // namespace gwadams::cli
