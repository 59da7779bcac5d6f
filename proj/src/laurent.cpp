#include "bwm/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bwm {

namespace {

// Sums adjacent equal keys and drops zeros; input must be sorted by key.
std::vector<LaurentPoly::Term> merge_sorted(std::vector<LaurentPoly::Term>&& v) {
  std::vector<LaurentPoly::Term> out;
  out.reserve(v.size());
  for (auto& t : v) {
    if (!out.empty() && out.back().key == t.key) {
      out.back().coeff += t.coeff;
      if (sgn(out.back().coeff) == 0) out.pop_back();
    } else if (sgn(t.coeff) != 0) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

}  // namespace

LaurentPoly::LaurentPoly(long c) : LaurentPoly(Integer(c)) {}

LaurentPoly::LaurentPoly(Integer c) {
  if (sgn(c) != 0) terms_.push_back({ExpKey::pack(0, 0), std::move(c)});
}

LaurentPoly LaurentPoly::monomial(Integer c, int q_exp, int r_exp) {
  LaurentPoly p;
  if (sgn(c) != 0) p.terms_.push_back({ExpKey::pack(q_exp, r_exp), std::move(c)});
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.key < b.key; });
  return LaurentPoly(merge_sorted(std::move(terms)));
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].key == ExpKey::pack(0, 0) && terms_[0].coeff == 1;
}

int LaurentPoly::min_q() const { return terms_.empty() ? 0 : terms_.front().q_exp(); }
int LaurentPoly::max_q() const { return terms_.empty() ? 0 : terms_.back().q_exp(); }

int LaurentPoly::min_r() const {
  int m = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.r_exp() < m) m = t.r_exp();
    first = false;
  }
  return m;
}

int LaurentPoly::max_r() const {
  int m = 0;
  bool first = true;
  for (const auto& t : terms_) {
    if (first || t.r_exp() > m) m = t.r_exp();
    first = false;
  }
  return m;
}

bool LaurentPoly::is_r_free() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.r_exp() == 0; });
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.coeff = -t.coeff;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) return *this = o;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].key < o.terms_[j].key)) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].key < terms_[i].key) {
      out.push_back(o.terms_[j++]);
    } else {
      Integer c = terms_[i].coeff + o.terms_[j].coeff;
      if (sgn(c) != 0) out.push_back({terms_[i].key, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return {};
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const LaurentPoly& m = a.terms_.size() == 1 ? a : b;
    const LaurentPoly& p = a.terms_.size() == 1 ? b : a;
    std::vector<LaurentPoly::Term> out;
    out.reserve(p.terms_.size());
    for (const auto& t : p.terms_) out.push_back({ExpKey::add(t.key, m.terms_[0].key), t.coeff * m.terms_[0].coeff});
    return LaurentPoly(std::move(out));
  }
  std::vector<LaurentPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) prod.push_back({ExpKey::add(x.key, y.key), x.coeff * y.coeff});
  }
  std::sort(prod.begin(), prod.end(), [](const auto& s, const auto& t) { return s.key < t.key; });
  return LaurentPoly(merge_sorted(std::move(prod)));
}

LaurentPoly LaurentPoly::scaled(const Integer& c) const {
  if (sgn(c) == 0) return {};
  LaurentPoly out = *this;
  for (auto& t : out.terms_) t.coeff *= c;
  return out;
}

LaurentPoly LaurentPoly::shifted(int dq, int dr) const {
  LaurentPoly out = *this;
  const std::int64_t d = ExpKey::pack(dq, dr);
  for (auto& t : out.terms_) t.key = ExpKey::add(t.key, d);
  return out;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result(1L);
  LaurentPoly base = *this;
  while (e != 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e != 0) base *= base;
  }
  return result;
}

Integer LaurentPoly::content() const {
  Integer g = 0;
  for (const auto& t : terms_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

LaurentPoly LaurentPoly::divided_by_integer(const Integer& c) const {
  LaurentPoly out = *this;
  for (auto& t : out.terms_) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), c.get_mpz_t());
  return out;
}

std::optional<LaurentPoly> LaurentPoly::exact_quotient(const LaurentPoly& f) const {
  if (f.terms_.empty()) throw std::domain_error("division by zero polynomial");
  if (terms_.empty()) return LaurentPoly{};
  if (f.is_monomial()) {
    const Term& m = f.terms_[0];
    LaurentPoly out;
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      if (!mpz_divisible_p(t.coeff.get_mpz_t(), m.coeff.get_mpz_t())) return std::nullopt;
      Integer c;
      mpz_divexact(c.get_mpz_t(), t.coeff.get_mpz_t(), m.coeff.get_mpz_t());
      out.terms_.push_back({ExpKey::sub(t.key, m.key), std::move(c)});
    }
    return out;
  }
  // Lex leading and trailing terms must divide (lex is a monomial order).
  const Term& lt = terms_.back();
  const Term& flt = f.terms_.back();
  const Term& tt = terms_.front();
  const Term& ftt = f.terms_.front();
  if (!mpz_divisible_p(lt.coeff.get_mpz_t(), flt.coeff.get_mpz_t())) return std::nullopt;
  if (!mpz_divisible_p(tt.coeff.get_mpz_t(), ftt.coeff.get_mpz_t())) return std::nullopt;

  const int pq0 = min_q(), pr0 = min_r();
  const int nq = max_q() - pq0 + 1, nr = max_r() - pr0 + 1;
  const int fq = f.max_q() - f.min_q() + 1;
  const int fr = f.max_r() - f.min_r() + 1;
  if (fq > nq || fr > nr) return std::nullopt;
  if (static_cast<long long>(nq) * nr > 4'000'000) throw std::length_error("polynomial too large for dense division");

  std::vector<Integer> grid(static_cast<std::size_t>(nq) * nr);
  auto at = [&](int a, int b) -> Integer& { return grid[static_cast<std::size_t>(a) * nr + b]; };
  for (const auto& t : terms_) at(t.q_exp() - pq0, t.r_exp() - pr0) = t.coeff;

  const int fq0 = f.min_q(), fr0 = f.min_r();
  struct Local {
    int a, b;
    const Integer* c;
  };
  std::vector<Local> fl;
  fl.reserve(f.terms_.size());
  for (const auto& t : f.terms_) fl.push_back({t.q_exp() - fq0, t.r_exp() - fr0, &t.coeff});
  const int la = fl.back().a, lb = fl.back().b;
  const Integer& lc = *fl.back().c;

  std::vector<Term> quot;
  Integer c, tmp;
  for (int a = nq - 1; a >= la; --a) {
    for (int b = nr - 1; b >= 0; --b) {
      Integer& g = at(a, b);
      if (sgn(g) == 0) continue;
      if (b < lb || !mpz_divisible_p(g.get_mpz_t(), lc.get_mpz_t())) return std::nullopt;
      mpz_divexact(c.get_mpz_t(), g.get_mpz_t(), lc.get_mpz_t());
      const int sa = a - la, sb = b - lb;
      for (const auto& ft : fl) {
        const int ta = sa + ft.a, tb = sb + ft.b;
        if (tb < 0 || tb >= nr) return std::nullopt;
        mpz_mul(tmp.get_mpz_t(), c.get_mpz_t(), ft.c->get_mpz_t());
        Integer& cell = at(ta, tb);
        cell -= tmp;
      }
      quot.push_back({ExpKey::pack(sa + pq0 - fq0, sb + pr0 - fr0), c});
    }
  }
  for (const auto& g : grid) {
    if (sgn(g) != 0) return std::nullopt;
  }
  return from_terms(std::move(quot));
}

LaurentPoly LaurentPoly::substitute_gamma() const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    const int a = t.q_exp();
    out.push_back({ExpKey::pack(-a, t.r_exp()), (a % 2 != 0) ? Integer(-t.coeff) : t.coeff});
  }
  return from_terms(std::move(out));
}

LaurentPoly LaurentPoly::derivative_r() const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const int b = t.r_exp();
    if (b != 0) out.push_back({ExpKey::pack(t.q_exp(), b - 1), t.coeff * b});
  }
  return from_terms(std::move(out));
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::int64_t e, std::uint64_t p) {
  if (e < 0) {
    a = invmod(a, p);
    e = -e;
  }
  std::uint64_t result = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) result = mulmod(result, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw std::domain_error("inverse of zero modulo p");
  // p is prime, so Fermat.
  return powmod(a, static_cast<std::int64_t>(p - 2), p);
}

std::uint64_t LaurentPoly::evaluate_mod(std::uint64_t q, std::uint64_t r, std::uint64_t p) const {
  const std::uint64_t qi = invmod(q, p), ri = invmod(r, p);
  std::uint64_t sum = 0;
  for (const auto& t : terms_) {
    const int a = t.q_exp(), b = t.r_exp();
    std::uint64_t m = powmod(a >= 0 ? q : qi, a >= 0 ? a : -a, p);
    m = mulmod(m, powmod(b >= 0 ? r : ri, b >= 0 ? b : -b, p), p);
    std::uint64_t c = mpz_fdiv_ui(t.coeff.get_mpz_t(), p);
    sum = (sum + mulmod(c, m, p)) % p;
  }
  return sum;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Integer c = it->coeff;
    const bool neg = sgn(c) < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    const int a = it->q_exp(), b = it->r_exp();
    bool wrote = false;
    if (c != 1 || (a == 0 && b == 0)) {
      os << c.get_str();
      wrote = true;
    }
    auto var = [&](const char* name, int e) {
      if (e == 0) return;
      if (wrote) os << "*";
      os << name;
      if (e != 1) os << "^" << e;
      wrote = true;
    };
    var("q", a);
    var("r", b);
  }
  return os.str();
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].key != b.terms_[i].key || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].key != b.terms_[i].key) return a.terms_[i].key < b.terms_[i].key;
    const int c = cmp(a.terms_[i].coeff, b.terms_[i].coeff);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace bwm
