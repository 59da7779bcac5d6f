#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "bwm/errors.hpp"
#include "bwm/idempotents.hpp"

namespace bwm {

/// Parse tree of an algebra expression.
///
///   expr   := term (('+' | '-') term)*
///   term   := unary (('*' | '/') unary)*
///   unary  := '-' unary | power
///   power  := atom ('^' '-'? integer)?
///   atom   := integer | q | r | qhat | delta | g<i> | e<i>
///           | name '(' integer (',' integer)* ')' | '(' expr ')'
///
/// Named constructors: S(n) A(n) qint(k) qfact(k)
///   bplus(k) bplusleft(k) aplus(k) aplusleft(k) and the *minus* forms,
///   dplus(k,i) dprimeplus(k,i) dbarplus(k,i) dbarprimeplus(k,i) and the
///   *minus* forms.
struct Expr {
  enum class Kind { Number, Q, R, Qhat, Delta, Gen, Call, Add, Sub, Mul, Div, Neg, Pow };
  Kind kind = Kind::Number;
  std::size_t position = 0;
  std::string text;          ///< literal digits or constructor name
  GenTok gen;                ///< Gen
  std::vector<int> args;     ///< Call
  int exponent = 0;          ///< Pow
  std::vector<std::unique_ptr<Expr>> kids;
};

std::unique_ptr<Expr> parse_expr(std::string_view text);

/// Evaluates in BWM_rank. Negative powers are allowed for scalars and for a
/// bare generator g_i, which is replaced by g_i - qhat + qhat e_i.
template <CoefficientRing R>
Element<typename R::Value> evaluate(const Expr& e, Idempotents<R>& ids, int rank);

// ----------------------------------------------------------------------------

namespace detail {

template <typename V>
bool is_scalar_valued(const Element<V>& x) {
  return x.is_zero() || (x.size() == 1 && x.terms().begin()->first.empty());
}

Element<Scalar> call_constructor(const std::string& name, const std::vector<int>& args, int rank, std::size_t pos,
                                 int* idempotent_rank, Sign* idempotent_sign);

}  // namespace detail

template <CoefficientRing R>
Element<typename R::Value> evaluate(const Expr& e, Idempotents<R>& ids, int rank) {
  using V = typename R::Value;
  using Elem = Element<V>;
  Engine<R>& eng = ids.engine();
  auto scalar_of = [&](const Elem& x) { return x.coefficient(Word{}, eng.zero()); };

  switch (e.kind) {
    case Expr::Kind::Number:
      return eng.constant(rank, Scalar(LaurentPoly(Integer(e.text))));
    case Expr::Kind::Q:
      return eng.constant(rank, Scalar::q());
    case Expr::Kind::R:
      return eng.constant(rank, Scalar::r());
    case Expr::Kind::Qhat:
      return eng.constant(rank, qhat());
    case Expr::Kind::Delta:
      return eng.constant(rank, delta());
    case Expr::Kind::Gen:
      if (e.gen.index >= rank) {
        throw RankMismatch("generator " + e.gen.to_string() + " at position " + std::to_string(e.position) +
                           " exceeds rank " + std::to_string(rank));
      }
      return eng.gen(rank, e.gen);
    case Expr::Kind::Call: {
      int n_id = 0;
      Sign sign = Sign::Plus;
      Element<Scalar> lit = detail::call_constructor(e.text, e.args, rank, e.position, &n_id, &sign);
      if (n_id > 0) {
        if (n_id > rank) {
          throw RankMismatch(e.text + "(" + std::to_string(n_id) + ") does not fit in rank " + std::to_string(rank));
        }
        return ids.idempotent(sign, n_id, Variant::RightB).embedded(rank);
      }
      return eng.reduce(lift(eng, lit));
    }
    case Expr::Kind::Add:
      return evaluate(*e.kids[0], ids, rank) + evaluate(*e.kids[1], ids, rank);
    case Expr::Kind::Sub:
      return evaluate(*e.kids[0], ids, rank) - evaluate(*e.kids[1], ids, rank);
    case Expr::Kind::Neg:
      return -evaluate(*e.kids[0], ids, rank);
    case Expr::Kind::Mul:
      return eng.mul(evaluate(*e.kids[0], ids, rank), evaluate(*e.kids[1], ids, rank));
    case Expr::Kind::Div: {
      const Elem num = evaluate(*e.kids[0], ids, rank);
      const Elem den = evaluate(*e.kids[1], ids, rank);
      if (!detail::is_scalar_valued(den)) throw SyntaxError("division by a non-scalar expression", e.position);
      if (den.is_zero()) throw SyntaxError("division by zero", e.position);
      return num.scaled(eng.one() / scalar_of(den));
    }
    case Expr::Kind::Pow: {
      const Expr& base_expr = *e.kids[0];
      Elem base = evaluate(base_expr, ids, rank);
      int k = e.exponent;
      if (k < 0) {
        if (detail::is_scalar_valued(base)) {
          if (base.is_zero()) throw SyntaxError("negative power of zero", e.position);
          base = eng.identity(rank).scaled(eng.one() / scalar_of(base));
        } else if (base_expr.kind == Expr::Kind::Gen && base_expr.gen.kind == GenKind::G) {
          Element<Scalar> inv(rank);
          for (const auto& [w, c] : inverse_generator(base_expr.gen.index)) inv.add_term(w, c);
          base = lift(eng, inv);
        } else {
          throw SyntaxError("negative power of an expression that is not a scalar or g_i", e.position);
        }
        k = -k;
      }
      Elem out = eng.identity(rank);
      for (int i = 0; i < k; ++i) out = eng.mul(out, base);
      return out;
    }
  }
  throw SyntaxError("unknown expression node", e.position);
}

}  // namespace bwm
