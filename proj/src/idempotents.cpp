#include "bwm/idempotents.hpp"

namespace bwm {

namespace {

Scalar weight(Sign s, int j) {
  // q^j, or (-q)^{-j}
  if (s == Sign::Plus) return Scalar::q_pow(j);
  return (j % 2 == 0 ? Scalar(1L) : Scalar(-1L)) * Scalar::q_pow(-j);
}

Word g_run(int from, int to) {
  Word w;
  const int step = from <= to ? 1 : -1;
  for (int x = from;; x += step) {
    w.append(GenTok::g(x));
    if (x == to) break;
  }
  return w;
}

Word e_run(int from, int to) {
  Word w;
  const int step = from <= to ? 1 : -1;
  for (int x = from;; x += step) {
    w.append(GenTok::e(x));
    if (x == to) break;
  }
  return w;
}

void check_rank(int needed, int rank) {
  if (needed > rank) {
    throw IndexDomain("needs rank " + std::to_string(needed) + ", element rank is " + std::to_string(rank));
  }
}

}  // namespace

std::string to_string(Sign s) { return s == Sign::Plus ? "plus" : "minus"; }

std::string to_string(DFamily f) {
  switch (f) {
    case DFamily::D: return "d";
    case DFamily::DPrime: return "dprime";
    case DFamily::DBar: return "dbar";
    case DFamily::DBarPrime: return "dbarprime";
  }
  return "?";
}

std::string to_string(BFamily f) {
  switch (f) {
    case BFamily::BRight: return "b_right";
    case BFamily::BLeft: return "b_left";
    case BFamily::ARight: return "a_right";
    case BFamily::ALeft: return "a_left";
  }
  return "?";
}

Element<Scalar> d_element(DFamily f, Sign s, int k, int i, int rank) {
  if (i < 1 || i >= k) {
    throw IndexDomain("d-family needs 1 <= i < k; got k=" + std::to_string(k) + " i=" + std::to_string(i));
  }
  check_rank(k, rank);
  Element<Scalar> out(rank);
  for (int j = 0; j < i; ++j) {
    Word g, e;
    switch (f) {
      case DFamily::D:
        e = e_run(k - 1, i);
        if (j > 0) g = g_run(i - 1, i - j);
        out.add_term(e + g, weight(s, j));
        break;
      case DFamily::DPrime:
        e = e_run(1, k - i);
        if (j > 0) g = g_run(k + 1 - i, k - i + j);
        out.add_term(e + g, weight(s, j));
        break;
      case DFamily::DBar:
        if (j > 0) g = g_run(i - j, i - 1);
        e = e_run(i, k - 1);
        out.add_term(g + e, weight(s, j));
        break;
      case DFamily::DBarPrime:
        if (j > 0) g = g_run(k - i + j, k - i + 1);
        e = e_run(k - i, 1);
        out.add_term(g + e, weight(s, j));
        break;
    }
  }
  return out;
}

Element<Scalar> b_element(BFamily f, Sign s, int k, int rank) {
  if (k < 0) throw IndexDomain("b-family needs k >= 0; got k=" + std::to_string(k));
  check_rank(k + 1, rank);
  Element<Scalar> out(rank);
  for (int i = 0; i <= k; ++i) {
    Word chain;
    if (i > 0) {
      switch (f) {
        case BFamily::BRight: chain = g_run(k, k + 1 - i); break;
        case BFamily::BLeft: chain = g_run(1, i); break;
        case BFamily::ARight: chain = g_run(k + 1 - i, k); break;
        case BFamily::ALeft: chain = g_run(i, 1); break;
      }
    }
    out.add_term(chain, weight(s, i));
  }
  if (k == 0) return out;
  const Scalar q = Scalar::q();
  const Scalar lead = s == Sign::Plus ? qhat() / (Scalar(1L) - Scalar::q_pow(2 * k - 1) * Scalar::r())
                                      : -qhat() / (Scalar(1L) + Scalar::q_pow(-2 * k + 1) * Scalar::r());
  const DFamily df = f == BFamily::BRight  ? DFamily::D
                     : f == BFamily::BLeft ? DFamily::DPrime
                     : f == BFamily::ARight ? DFamily::DBar
                                            : DFamily::DBarPrime;
  for (int i = 1; i <= k; ++i) {
    const Scalar w = s == Sign::Plus ? Scalar::q_pow(2 * k - 2 * i + 1) : Scalar::q_pow(2 * i - 2 * k - 1);
    out += d_element(df, s, k + 1, i, rank).scaled(lead * w);
  }
  return out;
}

Word e_chain(int n, int l) {
  if (l < 1 || l >= n) throw IndexDomain("e-chain needs 1 <= l < n");
  return e_run(n - 1, l);
}

Element<Scalar> s2_closed(int rank) {
  check_rank(2, rank);
  const Scalar q = Scalar::q();
  const Scalar c = (q * qint(2)).inverse();
  Element<Scalar> out(rank);
  out.add_term(Word{}, c);
  out.add_term(Word{GenTok::g(1)}, c * q);
  out.add_term(Word{GenTok::e(1)}, c * q * qhat() / (Scalar(1L) - q * Scalar::r()));
  return out;
}

Element<Scalar> a2_closed(int rank) {
  check_rank(2, rank);
  const Scalar q = Scalar::q();
  const Scalar c = qint(2).inverse();
  Element<Scalar> out(rank);
  out.add_term(Word{}, c * q);
  out.add_term(Word{GenTok::g(1)}, -c);
  out.add_term(Word{GenTok::e(1)}, -(c * qhat() / (Scalar(1L) + q.inverse() * Scalar::r())));
  return out;
}

std::string to_string(Variant v) {
  switch (v) {
    case Variant::RightB: return "right-b";
    case Variant::ShiftRightB: return "shift-right-b";
    case Variant::LeftA: return "left-a";
    case Variant::ShiftLeftA: return "shift-left-a";
    case Variant::Telescoping: return "telescoping";
  }
  return "?";
}

std::optional<Variant> parse_variant(const std::string& s) {
  for (Variant v : kAllVariants) {
    if (to_string(v) == s) return v;
  }
  return std::nullopt;
}

Scalar recursion_factor(Sign s, int n) {
  if (s == Sign::Plus) return (Scalar::q_pow(n - 1) * qint(n)).inverse();
  return Scalar::q_pow(n - 1) / qint(n);
}

}  // namespace bwm
