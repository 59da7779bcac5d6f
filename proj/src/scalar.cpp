#include "bwm/scalar.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace bwm {

// ---------------------------------------------------------------- factors

LaurentPoly primitive_part(const LaurentPoly& p, int* q_shift, int* r_shift, Integer* content, int* sign) {
  if (p.is_zero()) throw std::domain_error("primitive part of zero");
  const int dq = p.min_q(), dr = p.min_r();
  LaurentPoly out = p.shifted(-dq, -dr);
  Integer c = out.content();
  if (sgn(out.leading().coeff) < 0) c = -c;
  if (c != 1) out = out.divided_by_integer(c);
  if (q_shift) *q_shift = dq;
  if (r_shift) *r_shift = dr;
  if (sign) *sign = sgn(c) < 0 ? -1 : 1;
  if (content) *content = abs(c);
  return out;
}

namespace {

const LaurentPoly& cyclotomic_locked(int m, std::map<int, LaurentPoly>& cache) {
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  // q^m - 1 divided by Phi_d for every proper divisor d.
  LaurentPoly p = LaurentPoly::monomial(1, m, 0) - LaurentPoly(1L);
  for (int d = 1; d < m; ++d) {
    if (m % d == 0) p = *p.exact_quotient(cyclotomic_locked(d, cache));
  }
  return cache.emplace(m, std::move(p)).first->second;
}

}  // namespace

const LaurentPoly& cyclotomic(int m) {
  static std::mutex mu;
  static std::map<int, LaurentPoly> cache;
  std::lock_guard lock(mu);
  return cyclotomic_locked(m, cache);
}

struct FactorTable::Impl {
  std::mutex mu;
  std::vector<std::unique_ptr<LaurentPoly>> factors;
  std::map<LaurentPoly, Scalar::FactorId> index;
};

FactorTable& FactorTable::instance() {
  static FactorTable table;
  return table;
}

FactorTable::Impl& FactorTable::impl() const {
  static Impl impl;
  return impl;
}

const LaurentPoly& FactorTable::factor(Scalar::FactorId id) const {
  Impl& im = impl();
  std::lock_guard lock(im.mu);
  return *im.factors.at(id);
}

std::size_t FactorTable::size() const {
  Impl& im = impl();
  std::lock_guard lock(im.mu);
  return im.factors.size();
}

Scalar::FactorId FactorTable::intern(const LaurentPoly& normalized) {
  Impl& im = impl();
  std::lock_guard lock(im.mu);
  auto it = im.index.find(normalized);
  if (it != im.index.end()) return it->second;
  const auto id = static_cast<Scalar::FactorId>(im.factors.size());
  im.factors.push_back(std::make_unique<LaurentPoly>(normalized));
  im.index.emplace(normalized, id);
  return id;
}

FactorTable::Split FactorTable::split(const LaurentPoly& p) {
  Split s;
  LaurentPoly rest = primitive_part(p, &s.q_shift, &s.r_shift, &s.content, &s.sign);
  std::map<Scalar::FactorId, int> found;
  auto peel = [&](const LaurentPoly& f, Scalar::FactorId id) {
    while (rest.size() > 1) {
      auto quot = rest.exact_quotient(f);
      if (!quot) break;
      rest = std::move(*quot);
      ++found[id];
    }
  };
  // Known factors first, then cyclotomic pieces of a univariate remainder.
  const std::size_t known = size();
  for (Scalar::FactorId id = 0; id < known && rest.size() > 1; ++id) peel(factor(id), id);
  if (rest.size() > 1 && rest.is_r_free()) {
    for (int m = 1; m <= rest.max_q() && rest.size() > 1; ++m) {
      const LaurentPoly& phi = cyclotomic(m);
      if (phi.max_q() > rest.max_q()) continue;
      if (rest.exact_quotient(phi)) peel(phi, intern(phi));
    }
  }
  if (rest.size() > 1) {
    rest = primitive_part(rest);
    ++found[intern(rest)];
  } else if (rest.leading().coeff != 1) {
    // A leftover monomial can only be +-1 after primitive normalization.
    if (rest.leading().coeff == -1) s.sign = -s.sign;
  }
  for (auto [id, e] : found) s.factors.push_back({id, e});
  return s;
}

// ----------------------------------------------------------------- Scalar

namespace {

std::vector<Scalar::FactorPower> merge_exponents(const std::vector<Scalar::FactorPower>& a,
                                                 const std::vector<Scalar::FactorPower>& b, bool take_max) {
  std::vector<Scalar::FactorPower> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].id < b[j].id)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].id < a[i].id) {
      out.push_back(b[j++]);
    } else {
      out.push_back({a[i].id, take_max ? std::max(a[i].exp, b[j].exp) : a[i].exp + b[j].exp});
      ++i;
      ++j;
    }
  }
  return out;
}

LaurentPoly times_missing(const LaurentPoly& p, const std::vector<Scalar::FactorPower>& have,
                          const std::vector<Scalar::FactorPower>& want) {
  LaurentPoly out = p;
  auto& table = FactorTable::instance();
  std::size_t i = 0;
  for (const auto& w : want) {
    while (i < have.size() && have[i].id < w.id) ++i;
    const int have_exp = (i < have.size() && have[i].id == w.id) ? have[i].exp : 0;
    for (int k = have_exp; k < w.exp; ++k) out *= table.factor(w.id);
  }
  return out;
}

Integer lcm_int(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace

void Scalar::cancel() {
  if (num_.is_zero()) {
    den_.clear();
    den_const_ = 1;
    return;
  }
  auto& table = FactorTable::instance();
  for (auto& fp : den_) {
    const LaurentPoly& f = table.factor(fp.id);
    while (fp.exp > 0) {
      auto quot = num_.exact_quotient(f);
      if (!quot) break;
      num_ = std::move(*quot);
      --fp.exp;
    }
  }
  std::erase_if(den_, [](const FactorPower& fp) { return fp.exp == 0; });
  if (den_const_ != 1) {
    Integer g = num_.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_const_.get_mpz_t());
    if (g != 1) {
      num_ = num_.divided_by_integer(g);
      mpz_divexact(den_const_.get_mpz_t(), den_const_.get_mpz_t(), g.get_mpz_t());
    }
  }
}

Scalar Scalar::fraction(const LaurentPoly& num, const LaurentPoly& den) {
  return Scalar(num) * Scalar(den).inverse();
}

LaurentPoly Scalar::denominator() const {
  LaurentPoly d(den_const_);
  auto& table = FactorTable::instance();
  for (const auto& fp : den_) {
    for (int k = 0; k < fp.exp; ++k) d *= table.factor(fp.id);
  }
  return d;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.num_ = -out.num_;
  return out;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  Scalar out;
  if (a.den_ == b.den_ && a.den_const_ == b.den_const_) {
    out.num_ = a.num_ + b.num_;
    out.den_ = a.den_;
    out.den_const_ = a.den_const_;
    if (!out.den_.empty() || out.den_const_ != 1) out.cancel();
    return out;
  }
  out.den_ = merge_exponents(a.den_, b.den_, true);
  out.den_const_ = lcm_int(a.den_const_, b.den_const_);
  LaurentPoly na = times_missing(a.num_, a.den_, out.den_);
  LaurentPoly nb = times_missing(b.num_, b.den_, out.den_);
  if (a.den_const_ != out.den_const_) na = na.scaled(Integer(out.den_const_ / a.den_const_));
  if (b.den_const_ != out.den_const_) nb = nb.scaled(Integer(out.den_const_ / b.den_const_));
  out.num_ = na + nb;
  out.cancel();
  return out;
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.den_.empty() && b.den_.empty() && a.den_const_ == 1 && b.den_const_ == 1) return Scalar(a.num_ * b.num_);
  // Cancel crosswise before multiplying; each side is already reduced against its own denominator.
  Scalar x = a, y = b;
  auto cross = [](Scalar& n, Scalar& d) {
    auto& table = FactorTable::instance();
    for (auto& fp : d.den_) {
      const LaurentPoly& f = table.factor(fp.id);
      while (fp.exp > 0) {
        auto quot = n.num_.exact_quotient(f);
        if (!quot) break;
        n.num_ = std::move(*quot);
        --fp.exp;
      }
    }
    std::erase_if(d.den_, [](const Scalar::FactorPower& fp) { return fp.exp == 0; });
    if (d.den_const_ != 1) {
      Integer g = n.num_.content();
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.den_const_.get_mpz_t());
      if (g != 1) {
        n.num_ = n.num_.divided_by_integer(g);
        mpz_divexact(d.den_const_.get_mpz_t(), d.den_const_.get_mpz_t(), g.get_mpz_t());
      }
    }
  };
  cross(x, y);
  cross(y, x);
  Scalar out;
  out.num_ = x.num_ * y.num_;
  out.den_ = merge_exponents(x.den_, y.den_, false);
  out.den_const_ = x.den_const_ * y.den_const_;
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  auto split = FactorTable::instance().split(num_);
  Scalar out;
  out.num_ = LaurentPoly::monomial(split.sign, -split.q_shift, -split.r_shift) * denominator();
  out.den_const_ = split.content;
  out.den_ = std::move(split.factors);
  out.cancel();
  return out;
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::pow(int e) const {
  if (e < 0) return inverse().pow(-e);
  Scalar result(1L), base = *this;
  while (e != 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.den_ == b.den_ && a.den_const_ == b.den_const_) return a.num_ == b.num_;
  return (a - b).is_zero();
}

Scalar Scalar::substitute_gamma() const {
  return Scalar::fraction(num_.substitute_gamma(), denominator().substitute_gamma());
}

bool Scalar::is_r_free() const {
  // d/dr (n/d) = (n' d - n d') / d^2
  const LaurentPoly d = denominator();
  return (num_.derivative_r() * d - num_ * d.derivative_r()).is_zero();
}

std::string Scalar::to_string() const {
  if (den_.empty() && den_const_ == 1) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + denominator().to_string() + ")";
}

}  // namespace bwm
