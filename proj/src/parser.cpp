#include "bwm/parser.hpp"

#include <cctype>
#include <map>

namespace bwm {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  std::unique_ptr<Expr> parse() {
    auto e = expr();
    skip();
    if (pos_ != s_.size()) throw SyntaxError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
    return e;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) {
      throw SyntaxError(std::string("expected '") + c + "'" + (pos_ < s_.size() ? "" : " before end of input"), pos_);
    }
  }

  static std::unique_ptr<Expr> node(Expr::Kind k, std::size_t pos) {
    auto e = std::make_unique<Expr>();
    e->kind = k;
    e->position = pos;
    return e;
  }
  static std::unique_ptr<Expr> binary(Expr::Kind k, std::size_t pos, std::unique_ptr<Expr> a, std::unique_ptr<Expr> b) {
    auto e = node(k, pos);
    e->kids.push_back(std::move(a));
    e->kids.push_back(std::move(b));
    return e;
  }

  std::unique_ptr<Expr> expr() {
    auto lhs = term();
    while (true) {
      skip();
      const std::size_t at = pos_;
      if (accept('+')) {
        lhs = binary(Expr::Kind::Add, at, std::move(lhs), term());
      } else if (accept('-')) {
        lhs = binary(Expr::Kind::Sub, at, std::move(lhs), term());
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<Expr> term() {
    auto lhs = unary();
    while (true) {
      skip();
      const std::size_t at = pos_;
      if (accept('*')) {
        lhs = binary(Expr::Kind::Mul, at, std::move(lhs), unary());
      } else if (accept('/')) {
        lhs = binary(Expr::Kind::Div, at, std::move(lhs), unary());
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<Expr> unary() {
    skip();
    const std::size_t at = pos_;
    if (accept('-')) {
      auto e = node(Expr::Kind::Neg, at);
      e->kids.push_back(unary());
      return e;
    }
    return power();
  }

  std::unique_ptr<Expr> power() {
    auto base = atom();
    skip();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    const bool neg = accept('-');
    skip();
    const std::string digits = integer_literal();
    if (digits.size() > 6) throw SyntaxError("exponent too large", at);
    auto e = node(Expr::Kind::Pow, at);
    e->exponent = std::stoi(digits) * (neg ? -1 : 1);
    e->kids.push_back(std::move(base));
    return e;
  }

  std::string integer_literal() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError("expected an integer", pos_);
    return std::string(s_.substr(start, pos_ - start));
  }

  int small_integer() {
    const std::size_t at = pos_;
    const bool neg = accept('-');
    const std::string digits = integer_literal();
    if (digits.size() > 6) throw SyntaxError("argument too large", at);
    return std::stoi(digits) * (neg ? -1 : 1);
  }

  std::unique_ptr<Expr> atom() {
    skip();
    const std::size_t at = pos_;
    if (pos_ >= s_.size()) throw SyntaxError("unexpected end of input", pos_);
    const char c = s_[pos_];
    if (accept('(')) {
      auto e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      auto e = node(Expr::Kind::Number, at);
      e->text = integer_literal();
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name(s_.substr(at, pos_ - at));
      return named(name, at);
    }
    throw SyntaxError("unexpected '" + std::string(1, c) + "'", at);
  }

  std::unique_ptr<Expr> named(const std::string& name, std::size_t at) {
    if (name == "q") return node(Expr::Kind::Q, at);
    if (name == "r") return node(Expr::Kind::R, at);
    if (name == "qhat") return node(Expr::Kind::Qhat, at);
    if (name == "delta") return node(Expr::Kind::Delta, at);
    if (name.size() >= 2 && (name[0] == 'g' || name[0] == 'e') &&
        name.find_first_not_of("0123456789", 1) == std::string::npos) {
      auto e = node(Expr::Kind::Gen, at);
      try {
        e->gen = GenTok::parse(name);
      } catch (const std::invalid_argument&) {
        throw SyntaxError("bad generator '" + name + "'", at);
      }
      return e;
    }
    skip();
    if (!accept('(')) throw SyntaxError("unknown name '" + name + "'", at);
    auto e = node(Expr::Kind::Call, at);
    e->text = name;
    e->args.push_back(small_integer());
    while (accept(',')) e->args.push_back(small_integer());
    expect(')');
    return e;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::unique_ptr<Expr> parse_expr(std::string_view text) { return Parser(text).parse(); }

namespace detail {

Element<Scalar> call_constructor(const std::string& name, const std::vector<int>& args, int rank, std::size_t pos,
                                 int* idempotent_rank, Sign* idempotent_sign) {
  auto want = [&](std::size_t count) {
    if (args.size() != count) {
      throw SyntaxError(name + " takes " + std::to_string(count) + " argument" + (count == 1 ? "" : "s"), pos);
    }
  };
  *idempotent_rank = 0;
  if (name == "S" || name == "A") {
    want(1);
    if (args[0] < 1) throw IndexDomain(name + "(n) needs n >= 1");
    *idempotent_rank = args[0];
    *idempotent_sign = name == "S" ? Sign::Plus : Sign::Minus;
    return Element<Scalar>(rank);
  }
  if (name == "qint") {
    want(1);
    return Element<Scalar>(rank, Word{}, qint(args[0]));
  }
  if (name == "qfact") {
    want(1);
    if (args[0] < 0) throw IndexDomain("qfact needs k >= 0");
    return Element<Scalar>(rank, Word{}, qfact(args[0]));
  }
  static const std::map<std::string, BFamily> b_names = {
      {"b", BFamily::BRight}, {"bleft", BFamily::BLeft}, {"a", BFamily::ARight}, {"aleft", BFamily::ALeft}};
  static const std::map<std::string, DFamily> d_names = {
      {"d", DFamily::D}, {"dprime", DFamily::DPrime}, {"dbar", DFamily::DBar}, {"dbarprime", DFamily::DBarPrime}};
  for (const auto& [tag, sign] : {std::pair{std::string("plus"), Sign::Plus}, std::pair{std::string("minus"), Sign::Minus}}) {
    // bplus, bplusleft, dbarprimeminus, ...
    const auto at = name.find(tag);
    if (at == std::string::npos) continue;
    const std::string family = name.substr(0, at) + name.substr(at + tag.size());
    if (auto it = b_names.find(family); it != b_names.end()) {
      want(1);
      return b_element(it->second, sign, args[0], rank);
    }
    if (auto it = d_names.find(family); it != d_names.end()) {
      want(2);
      return d_element(it->second, sign, args[0], args[1], rank);
    }
  }
  throw SyntaxError("unknown constructor '" + name + "'", pos);
}

}  // namespace detail

}  // namespace bwm
