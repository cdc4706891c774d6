#include "qlogic/proplang.hpp"

#include <cctype>
#include <charconv>
#include <optional>

namespace qlogic {

PropPtr make_leq(std::string name, double value) {
  return std::make_shared<const Prop>(Prop{ast::Leq{std::move(name), value}});
}
PropPtr make_eq_const(std::string name, double value) {
  return std::make_shared<const Prop>(Prop{ast::EqConst{std::move(name), value}});
}
PropPtr make_in_interval(std::string name, double lower, double upper) {
  return std::make_shared<const Prop>(Prop{ast::InInterval{std::move(name), lower, upper}});
}
PropPtr make_eq_obs(std::string lhs, std::string rhs) {
  return std::make_shared<const Prop>(Prop{ast::EqObs{std::move(lhs), std::move(rhs)}});
}
PropPtr make_joint(std::vector<std::string> names) {
  return std::make_shared<const Prop>(Prop{ast::Joint{std::move(names)}});
}
PropPtr make_not(PropPtr child) {
  return std::make_shared<const Prop>(Prop{ast::Not{std::move(child)}});
}
PropPtr make_and(PropPtr lhs, PropPtr rhs) {
  return std::make_shared<const Prop>(Prop{ast::And{std::move(lhs), std::move(rhs)}});
}
PropPtr make_or(PropPtr lhs, PropPtr rhs) {
  return std::make_shared<const Prop>(Prop{ast::Or{std::move(lhs), std::move(rhs)}});
}

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { Ident, Num, Leq, Eq, LParen, RParen, Comma, RBracket, Bang, Amp, Pipe, End };

const char* describe(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Num: return "number";
    case Tok::Leq: return "'<='";
    case Tok::Eq: return "'='";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::RBracket: return "']'";
    case Tok::Bang: return "'!'";
    case Tok::Amp: return "'&'";
    case Tok::Pipe: return "'|'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::size_t offset;
  std::string_view text;
  double number = 0.0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    for (;;) {
      while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      if (pos_ == src_.size()) {
        out.push_back({Tok::End, pos_, {}});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  Token next() {
    const std::size_t start = pos_;
    const char c = src_[pos_];
    auto single = [&](Tok kind) {
      ++pos_;
      return Token{kind, start, src_.substr(start, 1)};
    };
    switch (c) {
      case '(': return single(Tok::LParen);
      case ')': return single(Tok::RParen);
      case ',': return single(Tok::Comma);
      case ']': return single(Tok::RBracket);
      case '!': return single(Tok::Bang);
      case '&': return single(Tok::Amp);
      case '|': return single(Tok::Pipe);
      case '=': return single(Tok::Eq);
      case '<':
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '=') {
          pos_ += 2;
          return {Tok::Leq, start, src_.substr(start, 2)};
        }
        throw SyntaxError(start, "expected '<=' ");
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      while (pos_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
        ++pos_;
      }
      return {Tok::Ident, start, src_.substr(start, pos_ - start)};
    }
    if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) return number(start);
    throw SyntaxError(start, std::string("unexpected character '") + c + "'");
  }

  Token number(std::size_t start) {
    if (src_[pos_] == '-') ++pos_;
    auto digits = [&] {
      const std::size_t from = pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      return pos_ - from;
    };
    if (digits() == 0) throw SyntaxError(pos_, "expected digits in number");
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      if (digits() == 0) throw SyntaxError(pos_, "expected digits after decimal point");
    }
    const std::string_view text = src_.substr(start, pos_ - start);
    double value = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc{}) throw SyntaxError(start, "number out of range");
    return {Tok::Num, start, text, value};
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Recursive descent parser

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  PropPtr parse_all() {
    PropPtr p = prop();
    if (peek().kind != Tok::End) fail("expected end of input");
    return p;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& advance() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const std::string& msg) const {
    throw SyntaxError(peek().offset, msg + ", found " + describe(peek().kind));
  }

  const Token& expect(Tok kind) {
    if (peek().kind != kind) fail(std::string("expected ") + describe(kind));
    return advance();
  }

  PropPtr prop() { return or_expr(); }

  // An operator at the very end of the input is reported at the operator
  // itself, which is where the user has to look.
  void require_operand(const Token& op) const {
    if (peek().kind == Tok::End) {
      throw SyntaxError(op.offset, "dangling '" + std::string(op.text) + "' has no operand");
    }
  }

  PropPtr or_expr() {
    PropPtr lhs = and_expr();
    while (peek().kind == Tok::Pipe) {
      require_operand(advance());
      lhs = make_or(lhs, and_expr());
    }
    return lhs;
  }

  PropPtr and_expr() {
    PropPtr lhs = unary();
    while (peek().kind == Tok::Amp) {
      require_operand(advance());
      lhs = make_and(lhs, unary());
    }
    return lhs;
  }

  PropPtr unary() {
    switch (peek().kind) {
      case Tok::Bang:
        require_operand(advance());
        return make_not(unary());
      case Tok::LParen: {
        advance();
        PropPtr inner = prop();
        expect(Tok::RParen);
        return inner;
      }
      case Tok::Ident: return atom();
      default: fail("expected proposition");
    }
  }

  std::string ident() { return std::string(expect(Tok::Ident).text); }
  double num() { return expect(Tok::Num).number; }

  PropPtr atom() {
    const Token& head = peek();
    if (peek(1).kind == Tok::LParen && (head.text == "eq" || head.text == "joint")) {
      const bool is_eq = head.text == "eq";
      advance();
      advance();
      std::vector<std::string> names{ident()};
      expect(Tok::Comma);
      names.push_back(ident());
      if (is_eq) {
        expect(Tok::RParen);
        return make_eq_obs(names[0], names[1]);
      }
      while (peek().kind == Tok::Comma) {
        advance();
        names.push_back(ident());
      }
      expect(Tok::RParen);
      return make_joint(std::move(names));
    }

    std::string name = ident();
    switch (peek().kind) {
      case Tok::Leq:
        advance();
        return make_leq(std::move(name), num());
      case Tok::Eq:
        advance();
        return make_eq_const(std::move(name), num());
      case Tok::Ident:
        if (peek().text == "in") {
          const std::size_t at = advance().offset;
          expect(Tok::LParen);
          const double lower = num();
          expect(Tok::Comma);
          const double upper = num();
          expect(Tok::RBracket);
          if (!(lower < upper)) throw SyntaxError(at, "interval (a, b] needs a < b");
          return make_in_interval(std::move(name), lower, upper);
        }
        [[fallthrough]];
      default: fail("expected '<=', '=' or 'in' after observable name");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Printer

int precedence(const Prop& p) {
  return std::visit(Overloaded{
                        [](const ast::Or&) { return 1; },
                        [](const ast::And&) { return 2; },
                        [](const ast::Not&) { return 3; },
                        [](const auto&) { return 4; },
                    },
                    p.node);
}

void print(const Prop& p, std::string& out);

void print_at(const Prop& p, int min_prec, std::string& out) {
  if (precedence(p) < min_prec) {
    out += '(';
    print(p, out);
    out += ')';
  } else {
    print(p, out);
  }
}

void print(const Prop& p, std::string& out) {
  std::visit(Overloaded{
                 [&](const ast::Leq& a) { out += a.name + " <= " + format_number(a.value); },
                 [&](const ast::EqConst& a) { out += a.name + " = " + format_number(a.value); },
                 [&](const ast::InInterval& a) {
                   out += a.name + " in (" + format_number(a.lower) + ", " +
                          format_number(a.upper) + "]";
                 },
                 [&](const ast::EqObs& a) { out += "eq(" + a.lhs + ", " + a.rhs + ")"; },
                 [&](const ast::Joint& a) {
                   out += "joint(";
                   for (std::size_t i = 0; i < a.names.size(); ++i) {
                     if (i) out += ", ";
                     out += a.names[i];
                   }
                   out += ')';
                 },
                 [&](const ast::Not& a) {
                   out += '!';
                   print_at(*a.child, 3, out);
                 },
                 [&](const ast::And& a) {
                   print_at(*a.lhs, 2, out);
                   out += " & ";
                   print_at(*a.rhs, 3, out);
                 },
                 [&](const ast::Or& a) {
                   print_at(*a.lhs, 1, out);
                   out += " | ";
                   print_at(*a.rhs, 2, out);
                 },
             },
             p.node);
}

void collect_names(const Prop& p, std::set<std::string>& out) {
  std::visit(Overloaded{
                 [&](const ast::Leq& a) { out.insert(a.name); },
                 [&](const ast::EqConst& a) { out.insert(a.name); },
                 [&](const ast::InInterval& a) { out.insert(a.name); },
                 [&](const ast::EqObs& a) {
                   out.insert(a.lhs);
                   out.insert(a.rhs);
                 },
                 [&](const ast::Joint& a) { out.insert(a.names.begin(), a.names.end()); },
                 [&](const ast::Not& a) { collect_names(*a.child, out); },
                 [&](const ast::And& a) {
                   collect_names(*a.lhs, out);
                   collect_names(*a.rhs, out);
                 },
                 [&](const ast::Or& a) {
                   collect_names(*a.lhs, out);
                   collect_names(*a.rhs, out);
                 },
             },
             p.node);
}

bool has_extended_atom(const Prop& p) {
  return std::visit(Overloaded{
                        [](const ast::EqObs&) { return true; },
                        [](const ast::Joint&) { return true; },
                        [](const ast::Not& a) { return has_extended_atom(*a.child); },
                        [](const ast::And& a) {
                          return has_extended_atom(*a.lhs) || has_extended_atom(*a.rhs);
                        },
                        [](const ast::Or& a) {
                          return has_extended_atom(*a.lhs) || has_extended_atom(*a.rhs);
                        },
                        [](const auto&) { return false; },
                    },
                    p.node);
}

}  // namespace

bool operator==(const Prop& a, const Prop& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      Overloaded{
          [&](const ast::Leq& x) {
            const auto& y = std::get<ast::Leq>(b.node);
            return x.name == y.name && x.value == y.value;
          },
          [&](const ast::EqConst& x) {
            const auto& y = std::get<ast::EqConst>(b.node);
            return x.name == y.name && x.value == y.value;
          },
          [&](const ast::InInterval& x) {
            const auto& y = std::get<ast::InInterval>(b.node);
            return x.name == y.name && x.lower == y.lower && x.upper == y.upper;
          },
          [&](const ast::EqObs& x) {
            const auto& y = std::get<ast::EqObs>(b.node);
            return x.lhs == y.lhs && x.rhs == y.rhs;
          },
          [&](const ast::Joint& x) { return x.names == std::get<ast::Joint>(b.node).names; },
          [&](const ast::Not& x) { return *x.child == *std::get<ast::Not>(b.node).child; },
          [&](const ast::And& x) {
            const auto& y = std::get<ast::And>(b.node);
            return *x.lhs == *y.lhs && *x.rhs == *y.rhs;
          },
          [&](const ast::Or& x) {
            const auto& y = std::get<ast::Or>(b.node);
            return *x.lhs == *y.lhs && *x.rhs == *y.rhs;
          },
      },
      a.node);
}

PropPtr parse(std::string_view text) { return Parser(Lexer(text).run()).parse_all(); }

std::string to_string(const Prop& p) {
  std::string out;
  print(p, out);
  return out;
}

std::string format_number(double v) {
  if (v == 0.0) return "0";
  char buf[512];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::fixed);
  return std::string(buf, res.ptr);
}

std::set<std::string> names_in(const Prop& p) {
  std::set<std::string> out;
  collect_names(p, out);
  return out;
}

bool is_standard(const Prop& p, const ObservableMap& observables, const Tolerance& tol) {
  const auto names = names_in(p);
  std::vector<const Observable*> used;
  for (const auto& name : names) {
    auto it = observables.find(name);
    if (it == observables.end()) throw Error(ErrorKind::UnknownObservable, name);
    used.push_back(&it->second);
  }
  if (has_extended_atom(p)) return false;
  for (std::size_t i = 0; i < used.size(); ++i) {
    for (std::size_t j = i + 1; j < used.size(); ++j) {
      const ComplexMatrix& a = used[i]->matrix();
      const ComplexMatrix& b = used[j]->matrix();
      if (max_abs(a * b - b * a) > tol.op_eq) return false;
    }
  }
  return true;
}

}  // namespace qlogic
