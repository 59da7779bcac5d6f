#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bwm/scalar.hpp"
#include "bwm/word.hpp"

namespace bwm {

/// An oriented identity lhs = rhs with exact coefficients. The left side is
/// a single word and is the shortlex-largest word of the identity.
struct Relation {
  std::string name;      ///< e.g. "R6[i=1]"
  std::string family;    ///< e.g. "R6"
  std::string relation;  ///< human-readable statement
  bool defining = false; ///< part of the presentation, as opposed to a consequence
  Word lhs;
  std::vector<std::pair<Word, Scalar>> rhs;
};

/// Presentation relations that involve the generators of index n-1, i.e. the
/// ones added when passing from rank n-1 to rank n.
std::vector<Relation> defining_relations_for_rank(int n);

/// Every instance of the named rule families R1..R10 valid in rank n, both
/// the defining ones and the derived consequences:
///   R1  g_i g_i            -> 1 + qhat g_i - r^{-1} qhat e_i
///   R2  g_i e_i            -> r^{-1} e_i
///   R3  e_i g_i            -> r^{-1} e_i
///   R4  e_i e_i            -> delta e_i
///   R5  x_i y_j            -> y_j x_i             (i > j + 1, x, y in {g, e})
///   R6  g_{i+1} g_i g_{i+1} -> g_i g_{i+1} g_i
///   R7  g_i g_{i+1} e_i    -> e_{i+1} e_i,  g_{i+1} g_i e_{i+1} -> e_i e_{i+1}
///   R8  e_i g_{i+1} g_i    -> e_i e_{i+1},  e_{i+1} g_i g_{i+1} -> e_{i+1} e_i
///   R9  e_i e_{i+-1} e_i   -> e_i
///   R10 e_i g_{i+-1} e_i   -> r e_i
std::vector<Relation> named_relations(int n);

/// Family name ("R4", "R9", ...) of a left-hand side, or "" when it is not one
/// of the named shapes.
std::string classify_lhs(const Word& lhs);

/// g_i^{-1} = g_i - qhat + qhat e_i as a combination of words.
std::vector<std::pair<Word, Scalar>> inverse_generator(int i);

}  // namespace bwm
