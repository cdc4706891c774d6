#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qlogic/spectral.hpp"

namespace qlogic {

struct Prop;
using PropPtr = std::shared_ptr<const Prop>;

using ObservableMap = std::map<std::string, Observable, std::less<>>;

namespace ast {

/// X <= x
struct Leq {
  std::string name;
  double value;
};
/// X = x
struct EqConst {
  std::string name;
  double value;
};
/// X in (a, b]
struct InInterval {
  std::string name;
  double lower;
  double upper;
};
/// eq(X, Y)
struct EqObs {
  std::string lhs;
  std::string rhs;
};
/// joint(X1, ..., Xn), n >= 2
struct Joint {
  std::vector<std::string> names;
};
struct Not {
  PropPtr child;
};
struct And {
  PropPtr lhs;
  PropPtr rhs;
};
struct Or {
  PropPtr lhs;
  PropPtr rhs;
};

}  // namespace ast

struct Prop {
  using Node = std::variant<ast::Leq, ast::EqConst, ast::InInterval, ast::EqObs, ast::Joint,
                            ast::Not, ast::And, ast::Or>;
  Node node;
};

PropPtr make_leq(std::string name, double value);
PropPtr make_eq_const(std::string name, double value);
PropPtr make_in_interval(std::string name, double lower, double upper);
PropPtr make_eq_obs(std::string lhs, std::string rhs);
PropPtr make_joint(std::vector<std::string> names);
PropPtr make_not(PropPtr child);
PropPtr make_and(PropPtr lhs, PropPtr rhs);
PropPtr make_or(PropPtr lhs, PropPtr rhs);

/// Structural equality.
bool operator==(const Prop& a, const Prop& b);

/// Parses the concrete syntax:
///
///   prop     = or_expr ;
///   or_expr  = and_expr { "|" and_expr } ;
///   and_expr = unary { "&" unary } ;
///   unary    = "!" unary | "(" prop ")" | atom ;
///   atom     = IDENT "<=" NUM | IDENT "=" NUM
///            | IDENT "in" "(" NUM "," NUM "]"
///            | "eq" "(" IDENT "," IDENT ")"
///            | "joint" "(" IDENT "," IDENT { "," IDENT } ")" ;
///
/// Throws SyntaxError carrying the byte offset of the offending token.
PropPtr parse(std::string_view text);

/// Canonical text that parses back to the same tree.
std::string to_string(const Prop& p);

std::set<std::string> names_in(const Prop& p);

/// True iff the proposition uses no eq/joint atoms and every pair of
/// referenced observables commutes. Throws UnknownObservable.
bool is_standard(const Prop& p, const ObservableMap& observables, const Tolerance& tol = {});

/// Number formatting used by the printer: fixed notation, shortest round-trip.
std::string format_number(double v);

}  // namespace qlogic
