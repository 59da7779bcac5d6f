#include "bwm/relations.hpp"

#include <cstdlib>

#include "bwm/qnumbers.hpp"

namespace bwm {

namespace {

using G = GenTok;

std::string at(const std::string& family, int i) { return family + "[i=" + std::to_string(i) + "]"; }

Relation quadratic(int i) {
  const Scalar rinv = Scalar::r_pow(-1);
  return {at("R1", i), "R1", "quadratic: g_i^2 = 1 + qhat g_i - r^-1 qhat e_i", true, Word{G::g(i), G::g(i)},
          {{Word{}, Scalar(1L)}, {Word{G::g(i)}, qhat()}, {Word{G::e(i)}, -(rinv * qhat())}}};
}

Relation absorb_right(int i) {
  return {at("R2", i), "R2", "absorption: g_i e_i = r^-1 e_i", true, Word{G::g(i), G::e(i)},
          {{Word{G::e(i)}, Scalar::r_pow(-1)}}};
}

Relation absorb_left(int i) {
  return {at("R3", i), "R3", "absorption: e_i g_i = r^-1 e_i", true, Word{G::e(i), G::g(i)},
          {{Word{G::e(i)}, Scalar::r_pow(-1)}}};
}

Relation far_commute(GenTok hi, GenTok lo, bool defining) {
  std::string name = "R5[" + hi.to_string() + "," + lo.to_string() + "]";
  return {name, "R5", "far commutation: x_i y_j = y_j x_i for |i-j| > 1", defining, Word{hi, lo},
          {{Word{lo, hi}, Scalar(1L)}}};
}

Relation braid(int i) {
  return {at("R6", i), "R6", "braid: g_{i+1} g_i g_{i+1} = g_i g_{i+1} g_i", true,
          Word{G::g(i + 1), G::g(i), G::g(i + 1)}, {{Word{G::g(i), G::g(i + 1), G::g(i)}, Scalar(1L)}}};
}

Relation tangle_up(int i) {
  return {at("R7", i) + "a", "R7", "tangle: g_i g_{i+1} e_i = e_{i+1} e_i", true, Word{G::g(i), G::g(i + 1), G::e(i)},
          {{Word{G::e(i + 1), G::e(i)}, Scalar(1L)}}};
}

Relation tangle_down(int i) {
  return {at("R7", i) + "b", "R7", "tangle: g_{i+1} g_i e_{i+1} = e_i e_{i+1}", true,
          Word{G::g(i + 1), G::g(i), G::e(i + 1)}, {{Word{G::e(i), G::e(i + 1)}, Scalar(1L)}}};
}

}  // namespace

std::vector<Relation> defining_relations_for_rank(int n) {
  std::vector<Relation> out;
  if (n < 2) return out;
  const int top = n - 1;
  out.push_back(quadratic(top));
  out.push_back(absorb_right(top));
  out.push_back(absorb_left(top));
  for (int j = 1; j + 1 < top; ++j) out.push_back(far_commute(G::g(top), G::g(j), true));
  if (top >= 2) {
    out.push_back(braid(top - 1));
    out.push_back(tangle_up(top - 1));
    out.push_back(tangle_down(top - 1));
  }
  return out;
}

std::vector<Relation> named_relations(int n) {
  std::vector<Relation> out;
  const Scalar r = Scalar::r();
  for (int i = 1; i < n; ++i) {
    out.push_back(quadratic(i));
    out.push_back(absorb_right(i));
    out.push_back(absorb_left(i));
    out.push_back({at("R4", i), "R4", "loop: e_i e_i = delta e_i", false, Word{G::e(i), G::e(i)},
                   {{Word{G::e(i)}, delta()}}});
    for (int j = 1; j + 1 < i; ++j) {
      for (GenKind x : {GenKind::G, GenKind::E}) {
        for (GenKind y : {GenKind::G, GenKind::E}) {
          const bool defining = x == GenKind::G && y == GenKind::G;
          out.push_back(far_commute({x, i}, {y, j}, defining));
        }
      }
    }
    if (i + 1 < n) {
      out.push_back(braid(i));
      out.push_back(tangle_up(i));
      out.push_back(tangle_down(i));
      out.push_back({at("R8", i) + "a", "R8", "reversed tangle: e_i g_{i+1} g_i = e_i e_{i+1}", false,
                     Word{G::e(i), G::g(i + 1), G::g(i)}, {{Word{G::e(i), G::e(i + 1)}, Scalar(1L)}}});
      out.push_back({at("R8", i) + "b", "R8", "reversed tangle: e_{i+1} g_i g_{i+1} = e_{i+1} e_i", false,
                     Word{G::e(i + 1), G::g(i), G::g(i + 1)}, {{Word{G::e(i + 1), G::e(i)}, Scalar(1L)}}});
    }
    for (int j : {i - 1, i + 1}) {
      if (j < 1 || j >= n) continue;
      const std::string tag = "[i=" + std::to_string(i) + ",j=" + std::to_string(j) + "]";
      out.push_back({"R9" + tag, "R9", "e_i e_j e_i = e_i for |i-j| = 1", false, Word{G::e(i), G::e(j), G::e(i)},
                     {{Word{G::e(i)}, Scalar(1L)}}});
      out.push_back({"R10" + tag, "R10", "e_i g_j e_i = r e_i for |i-j| = 1", false, Word{G::e(i), G::g(j), G::e(i)},
                     {{Word{G::e(i)}, r}}});
    }
  }
  return out;
}

std::string classify_lhs(const Word& w) {
  const auto t = w.tokens();
  auto is = [](GenTok x, GenKind k, int i) { return x.kind == k && x.index == i; };
  if (t.size() == 2) {
    if (t[0].index == t[1].index) {
      if (t[0].kind == GenKind::G && t[1].kind == GenKind::G) return "R1";
      if (t[0].kind == GenKind::G) return "R2";
      if (t[1].kind == GenKind::G) return "R3";
      return "R4";
    }
    if (t[0].index > t[1].index + 1) return "R5";
    return "";
  }
  if (t.size() != 3) return "";
  const int i = t[0].index;
  if (is(t[0], GenKind::G, i) && is(t[1], GenKind::G, i - 1) && is(t[2], GenKind::G, i)) return "R6";
  if (is(t[0], GenKind::G, i) && is(t[1], GenKind::G, i + 1) && is(t[2], GenKind::E, i)) return "R7";
  if (is(t[0], GenKind::G, i) && is(t[1], GenKind::G, i - 1) && is(t[2], GenKind::E, i)) return "R7";
  if (is(t[0], GenKind::E, i) && is(t[1], GenKind::G, i + 1) && is(t[2], GenKind::G, i)) return "R8";
  if (is(t[0], GenKind::E, i) && is(t[1], GenKind::G, i - 1) && is(t[2], GenKind::G, i)) return "R8";
  if (t[0].kind == GenKind::E && t[2] == t[0] && std::abs(t[1].index - i) == 1) {
    return t[1].kind == GenKind::E ? "R9" : "R10";
  }
  return "";
}

std::vector<std::pair<Word, Scalar>> inverse_generator(int i) {
  return {{Word{G::g(i)}, Scalar(1L)}, {Word{}, -qhat()}, {Word{G::e(i)}, qhat()}};
}

}  // namespace bwm
