#include "bwm/suites.hpp"

#include <chrono>
#include <memory>
#include <random>
#include <stdexcept>
#include <type_traits>

#include "bwm/hecke.hpp"
#include "bwm/idempotents.hpp"
#include "bwm/morphisms.hpp"

namespace bwm {

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"relations", "symmetrizer", "antisymmetrizer",
                                                 "lemma",     "hecke",       "morphisms"};
  return names;
}

std::size_t brauer_dimension(int n) {
  std::size_t d = 1;
  for (int k = 2 * n - 1; k > 1; k -= 2) d *= static_cast<std::size_t>(k);
  return d;
}

namespace {

struct Outcome {
  bool equal = true;
  std::string detail;
};

template <CoefficientRing R>
class Runner {
 public:
  using V = typename R::Value;
  using Elem = Element<V>;

  Runner(R ring, const SuiteOptions& opts) : eng_(std::move(ring), opts.budget), ids_(eng_), opts_(opts) {
    report_.backend = eng_.ring().name();
    report_.certifying = std::is_same_v<R, ExactRing>;
  }

  Report run(const std::string& suite) {
    report_.suite = suite;
    if (suite == "all") {
      for (const std::string& s : suite_names()) dispatch(s);
    } else {
      dispatch(suite);
    }
    report_.sort();
    return report_;
  }

 private:
  void dispatch(const std::string& suite) {
    // Each suite draws from its own stream so that suite order does not matter.
    std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
    for (char ch : suite) h = (h ^ static_cast<unsigned char>(ch)) * 1099511628211ULL;
    rng_.seed(opts_.seed ^ h);
    const int top = opts_.n;
    if (suite == "relations") {
      for (int n = 2; n <= top; ++n) relations(n);
    } else if (suite == "symmetrizer") {
      for (int n = 2; n <= top; ++n) idempotent(Sign::Plus, n);
    } else if (suite == "antisymmetrizer") {
      for (int n = 2; n <= top; ++n) idempotent(Sign::Minus, n);
    } else if (suite == "lemma") {
      for (int n = 3; n <= top; ++n) lemma(n);
    } else if (suite == "hecke") {
      for (int n = 2; n <= top; ++n) hecke(n);
    } else if (suite == "morphisms") {
      for (int n = 2; n <= top; ++n) morphisms(n);
    } else {
      throw std::invalid_argument("unknown suite '" + suite + "'");
    }
  }

  // --- plumbing --------------------------------------------------------------

  template <typename F>
  void check(const std::string& identity, int n, const std::string& variant, F&& body) {
    Check c{identity, n, variant, verdict::kEqual, std::nullopt, report_.backend, {}};
    const auto t0 = std::chrono::steady_clock::now();
    try {
      Outcome o = body();
      if (!o.equal) {
        c.verdict = verdict::kNotReduced;
        c.detail = o.detail;
      }
    } catch (const BudgetExhausted& e) {
      c.verdict = verdict::kBudget;
      c.detail = e.what();
    } catch (const ParameterSingular& e) {
      c.verdict = verdict::kSingular;
      c.detail = e.what();
    } catch (const DenominatorVanishes& e) {
      c.verdict = verdict::kSingular;
      c.detail = e.what();
    } catch (const std::exception& e) {
      c.verdict = verdict::kError;
      c.detail = e.what();
    }
    if (opts_.timings) {
      c.wall_time_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
    report_.checks.push_back(std::move(c));
  }

  Outcome eq(const Elem& a, const Elem& b) {
    Verdict<V> v = eng_.equals(a, b);
    if (v.equal()) return {};
    return {false, "witness: " + v.witness.to_string()};
  }
  static Outcome same(const Elem& a, const Elem& b) {
    if ((a - b).is_zero()) return {};
    return {false, "difference: " + (a - b).to_string()};
  }
  static Outcome truth(bool ok, std::string detail) { return ok ? Outcome{} : Outcome{false, std::move(detail)}; }
  /// All samples must pass; reports the first that does not.
  template <typename F>
  static Outcome all(int count, F&& sample) {
    for (int j = 0; j < count; ++j) {
      Outcome o = sample(j);
      if (!o.equal) {
        o.detail = "sample " + std::to_string(j) + ": " + o.detail;
        return o;
      }
    }
    return {};
  }

  Elem lit(const Element<Scalar>& x) { return eng_.reduce(lift(eng_, x)); }
  V sc(const Scalar& s) { return eng_.scalar(s); }

  std::uint64_t draw(std::uint64_t bound) { return rng_() % bound; }
  Word random_word(int n, int max_len) {
    Word w;
    const int len = static_cast<int>(draw(static_cast<std::uint64_t>(max_len) + 1));
    for (int j = 0; j < len; ++j) {
      const int i = 1 + static_cast<int>(draw(static_cast<std::uint64_t>(n - 1)));
      w.append(draw(2) ? GenTok::e(i) : GenTok::g(i));
    }
    return w;
  }
  Word random_g_word(int n, int max_len) {
    Word w;
    const int len = static_cast<int>(draw(static_cast<std::uint64_t>(max_len) + 1));
    for (int j = 0; j < len; ++j) w.append(GenTok::g(1 + static_cast<int>(draw(static_cast<std::uint64_t>(n - 1)))));
    return w;
  }
  /// Up to three words with r-free coefficients.
  Element<Scalar> random_element(int n, int max_len) {
    static const Scalar coeffs[] = {Scalar(1L), Scalar(-1L), Scalar(2L), Scalar::q(), Scalar::q_pow(-1), qhat()};
    Element<Scalar> x(n);
    const int terms = 1 + static_cast<int>(draw(3));
    for (int j = 0; j < terms; ++j) x.add_term(random_word(n, max_len), coeffs[draw(std::size(coeffs))]);
    return x;
  }
  /// Unreduced product: words concatenated.
  static Elem concat(const Elem& a, const Elem& b) {
    Elem out(a.rank());
    for (const auto& [u, c] : a.terms()) {
      for (const auto& [v, d] : b.terms()) out.add_term(u + v, c * d);
    }
    return out;
  }
  static Element<Scalar> subst_gamma(const Element<Scalar>& x) {
    Element<Scalar> out(x.rank());
    for (const auto& [w, c] : x.terms()) out.add_term(w, c.substitute_gamma());
    return out;
  }

  /// gamma of an element built by `build`. Exact: build here and substitute
  /// q -> -q^{-1}. Modular: build at the gamma image point and reinterpret.
  template <typename F>
  Elem gamma_of(F&& build) {
    if constexpr (std::is_same_v<R, ExactRing>) {
      return gamma(eng_, build(eng_, ids_));
    } else {
      if (!gamma_eng_) {
        gamma_eng_ = std::make_unique<Engine<R>>(R{eng_.ring().point.gamma_image()}, eng_.budget());
        gamma_ids_ = std::make_unique<Idempotents<R>>(*gamma_eng_);
      }
      return gamma_transport(eng_, build(*gamma_eng_, *gamma_ids_));
    }
  }

  // --- relations ---------------------------------------------------------------

  void relations(int n) {
    std::vector<Relation> rels = named_relations(n);
    for (const Relation& rel : defining_relations_for_rank(n)) {
      bool seen = false;
      for (const Relation& r : rels) seen = seen || (r.lhs == rel.lhs && r.family == rel.family);
      if (!seen) rels.push_back(rel);
    }
    for (const Relation& rel : rels) {
      if (rel.lhs.max_index() != n - 1) continue;  // checked at a smaller rank
      check(rel.name + ": " + rel.relation, n, "", [&] {
        Element<Scalar> rhs(n);
        for (const auto& [w, c] : rel.rhs) rhs.add_term(w, c);
        return eq(eng_.word(n, rel.lhs), lift(eng_, rhs));
      });
    }

    RuleSystem<R>& sys = eng_.rules();
    for (const Rule<V>* rule : sys.rules_for_rank(n).rules) {
      if (rule->home_rank != n) continue;
      check("rule " + rule->name + " [" + rule->lhs.to_string() + "] certificate replay", n, "", [&] {
        std::string why;
        const bool ok = sys.verify(*rule, &why);
        return truth(ok, why);
      });
    }

    check("dimension (2n-1)!! = " + std::to_string(brauer_dimension(n)), n, "", [&] {
      const std::size_t d = eng_.enumerate_irreducible(n).size();
      return truth(d == brauer_dimension(n), "found " + std::to_string(d));
    });

    if (n > 4) return;
    for (int i = 1; i < n; ++i) {
      check("g" + std::to_string(i) + " (g" + std::to_string(i) + " - qhat + qhat e" + std::to_string(i) + ") = 1", n, "",
            [&] {
              Element<Scalar> inv(n);
              for (const auto& [w, c] : inverse_generator(i)) inv.add_term(w, c);
              return eq(eng_.mul(eng_.gen(n, GenTok::g(i)), lift(eng_, inv)), eng_.identity(n));
            });
    }
    check("reduce is idempotent (50 random elements)", n, "", [&] {
      return all(50, [&](int) {
        const Elem x = lift(eng_, random_element(n, 6));
        const Elem once = eng_.reduce(x);
        return truth(eng_.reduce(once) == once, once.to_string());
      });
    });
    check("associativity (50 random word triples)", n, "", [&] {
      return all(50, [&](int) {
        const Elem a = eng_.word(n, random_word(n, 4));
        const Elem b = eng_.word(n, random_word(n, 4));
        const Elem c = eng_.word(n, random_word(n, 4));
        return eq(eng_.mul(eng_.mul(a, b), c), eng_.mul(a, eng_.mul(b, c)));
      });
    });
    check("leftmost and rightmost strategies agree (100 random products)", n, "", [&] {
      return all(100, [&](int) {
        const Elem x = concat(lift(eng_, random_element(n, 4)), lift(eng_, random_element(n, 4)));
        return same(eng_.reduce(x, Strategy::Leftmost), eng_.reduce(x, Strategy::Rightmost));
      });
    });
  }

  // --- symmetrizer / antisymmetrizer ---------------------------------------------

  void idempotent(Sign s, int n) {
    const bool plus = s == Sign::Plus;
    const std::string x = plus ? "S" : "A";
    const Scalar ev = plus ? Scalar::q() : -Scalar::q_pow(-1);
    const std::string evs = plus ? "q" : "-q^-1";

    for (std::size_t a = 0; a < std::size(kAllVariants); ++a) {
      for (std::size_t b = a + 1; b < std::size(kAllVariants); ++b) {
        const Variant va = kAllVariants[a], vb = kAllVariants[b];
        check(x + " variants agree", n, to_string(va) + "=" + to_string(vb),
              [&] { return eq(ids_.idempotent(s, n, va), ids_.idempotent(s, n, vb)); });
      }
    }
    const auto get = [&]() -> const Elem& { return ids_.idempotent(s, n, Variant::RightB); };
    check(x + "^2 = " + x, n, "", [&] { return eq(eng_.mul(get(), get()), get()); });
    for (int i = 1; i < n; ++i) {
      const std::string is = std::to_string(i);
      check(x + " g" + is + " = " + evs + " " + x, n, "",
            [&] { return eq(eng_.times(get(), GenTok::g(i)), get().scaled(sc(ev))); });
      check("g" + is + " " + x + " = " + evs + " " + x, n, "",
            [&] { return eq(eng_.left_times(GenTok::g(i), get()), get().scaled(sc(ev))); });
      check(x + " e" + is + " = 0", n, "", [&] { return eq(eng_.times(get(), GenTok::e(i)), Elem(n)); });
      check("e" + is + " " + x + " = 0", n, "", [&] { return eq(eng_.left_times(GenTok::e(i), get()), Elem(n)); });
    }
    check(x + " central (20 random words)", n, "", [&] {
      return all(20, [&](int) {
        const Elem w = eng_.word(n, random_word(n, 2 * n));
        return eq(eng_.mul(get(), w), eng_.mul(w, get()));
      });
    });
    if (n == 2) {
      check(x + "_2 closed form, coefficient by coefficient", n, "", [&] {
        const Elem closed = lift(eng_, plus ? s2_closed(2) : a2_closed(2));
        for (const Word& w : {Word{}, Word{GenTok::g(1)}, Word{GenTok::e(1)}}) {
          if (get().coefficient(w, eng_.zero()) != closed.coefficient(w, eng_.zero())) {
            return Outcome{false, "coefficient of [" + w.to_string() + "] differs"};
          }
        }
        return truth(get().size() == closed.size(), "extra terms");
      });
    }
    if (plus && n <= 3) {
      check("eigenspace {v : v g_i = q v} has dimension 1", n, "", [&] {
        const auto basis = eng_.enumerate_irreducible(n);
        const auto space = right_eigenspace(eng_, n, basis, sc(Scalar::q()));
        return truth(space.size() == 1, "dimension " + std::to_string(space.size()));
      });
      check("S spans the eigenspace {v : v g_i = q v}", n, "", [&] {
        const auto basis = eng_.enumerate_irreducible(n);
        const auto space = right_eigenspace(eng_, n, basis, sc(Scalar::q()));
        if (space.size() != 1) return Outcome{false, "dimension " + std::to_string(space.size())};
        Elem v(n);
        for (std::size_t j = 0; j < basis.size(); ++j) v.add_term(basis[j], space[0][j]);
        // v is normalized to 1 at its last free coordinate; compare after scaling.
        const Word& pivot = get().terms().rbegin()->first;
        const V cv = v.coefficient(pivot, eng_.zero());
        if (cv.is_zero()) return Outcome{false, "S and the eigenvector have different supports"};
        return same(v.scaled(get().coefficient(pivot, eng_.zero()) / cv), get());
      });
    }
    if (!plus) {
      check("gamma(S) = A", n, "",
            [&] { return eq(gamma_of([&](auto&, auto& ids) { return ids.symmetrizer(n); }), get()); });
      minus_families(n);
    }
  }

  /// Literal minus formulas against gamma of the plus formulas, for the
  /// family members that first fit in rank n.
  void minus_families(int n) {
    for (BFamily f : {BFamily::BRight, BFamily::BLeft, BFamily::ARight, BFamily::ALeft}) {
      const int k = n - 1;
      check(to_string(f) + "-minus k=" + std::to_string(k) + " = gamma(plus)", n, "", [&] {
        return eq(lit(b_element(f, Sign::Minus, k, n)), lit(subst_gamma(b_element(f, Sign::Plus, k, n))));
      });
    }
    for (DFamily f : {DFamily::D, DFamily::DPrime, DFamily::DBar, DFamily::DBarPrime}) {
      for (int i = 1; i < n; ++i) {
        check(to_string(f) + "-minus k=" + std::to_string(n) + " i=" + std::to_string(i) + " = gamma(plus)", n, "", [&] {
          return eq(lit(d_element(f, Sign::Minus, n, i, n)), lit(subst_gamma(d_element(f, Sign::Plus, n, i, n))));
        });
      }
    }
  }

  // --- lemma ---------------------------------------------------------------------

  void lemma(int n) {
    for (int k = 1; k < n; ++k) {
      for (int l = 1; l < n; ++l) {
        const std::string tag = Idempotents<R>::lemma_case(k, l);
        check("S_{n-1} d_{n,k} g_l case " + tag + " k=" + std::to_string(k) + " l=" + std::to_string(l), n, "", [&] {
          auto [lhs, rhs] = ids_.lemma_sides(n, k, l);
          return eq(lhs, rhs);
        });
      }
    }
  }

  // --- hecke ---------------------------------------------------------------------

  void hecke(int n) {
    const Hecke<R> h(eng_.ring());
    const int big_n = n * (n - 1) / 2;
    check("project(S) = closed symmetrizer", n, "",
          [&] { return same(h.project(ids_.symmetrizer(n)), h.symmetrizer_closed(n)); });
    check("identity coefficient of project(S) = q^(-n(n-1)/2)/[n]!", n, "", [&] {
      const V c = h.project(ids_.symmetrizer(n)).coefficient(Word{}, eng_.zero());
      return truth(c == sc(Scalar::q_pow(-big_n) / qfact(n)), "got " + c.to_string());
    });
    check("project(A) = closed antisymmetrizer", n, "",
          [&] { return same(h.project(ids_.antisymmetrizer(n)), h.antisymmetrizer_closed(n)); });
    check("project(b_{k,1}) = sum_i q^i T(g_k...g_{k+1-i}), k=n-1", n, "", [&] {
      Elem expect(n);
      for (int i = 0; i < n; ++i) {
        Word w;
        for (int j = n - 1; j > n - 1 - i; --j) w.append(GenTok::g(j));
        expect += h.mul(Elem::identity(n, eng_.one()), Elem(n, w, sc(Scalar::q_pow(i))));
      }
      return same(h.project(lit(b_plus_right(n - 1, n))), expect);
    });
    if (n > 4) return;
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      const bool plus = s == Sign::Plus;
      const std::string x = plus ? "closed symmetrizer" : "closed antisymmetrizer";
      const Elem cl = plus ? h.symmetrizer_closed(n) : h.antisymmetrizer_closed(n);
      const V ev = sc(plus ? Scalar::q() : -Scalar::q_pow(-1));
      check(x + " is idempotent", n, "", [&] { return same(h.mul(cl, cl), cl); });
      for (int i = 1; i < n; ++i) {
        check(x + " T_" + std::to_string(i) + " = " + (plus ? "q" : "-q^-1") + " X", n, "",
              [&] { return same(h.mul(cl, h.generator(n, i)), cl.scaled(ev)); });
      }
    }
    check("project is a homomorphism (50 random pairs)", n, "", [&] {
      return all(50, [&](int) {
        const Elem a = lift(eng_, random_element(n, 4));
        const Elem b = lift(eng_, random_element(n, 4));
        return same(h.project(eng_.mul(a, b)), h.mul(h.project(eng_.reduce(a)), h.project(eng_.reduce(b))));
      });
    });
    check("hecke products close on the n! coset words", n, "", [&] {
      return all(20, [&](int) {
        const Elem p = h.mul(Elem(n, random_g_word(n, 6), eng_.one()), Elem(n, random_g_word(n, 6), eng_.one()));
        for (const auto& [w, c] : p.terms()) {
          if (coset_normal_word(permutation_of(w, n)) != w) return Outcome{false, "[" + w.to_string() + "]"};
        }
        return Outcome{};
      });
    });
  }

  // --- morphisms -----------------------------------------------------------------

  void morphisms(int n) {
    const int pairs = 50;
    check("alpha(ab) = alpha(a) alpha(b) (50 random pairs)", n, "", [&] {
      return all(pairs, [&](int) {
        const Elem a = lift(eng_, random_element(n, 4)), b = lift(eng_, random_element(n, 4));
        return eq(alpha(eng_, eng_.mul(a, b)), eng_.mul(alpha(eng_, a), alpha(eng_, b)));
      });
    });
    check("beta(ab) = beta(b) beta(a) (50 random pairs)", n, "", [&] {
      return all(pairs, [&](int) {
        const Elem a = lift(eng_, random_element(n, 4)), b = lift(eng_, random_element(n, 4));
        return eq(beta(eng_, eng_.mul(a, b)), eng_.mul(beta(eng_, b), beta(eng_, a)));
      });
    });
    check("gamma(ab) = gamma(a) gamma(b) (50 random pairs)", n, "", [&] {
      return all(pairs, [&](int) {
        const Element<Scalar> a = random_element(n, 4), b = random_element(n, 4);
        const Elem lhs = gamma_of([&](auto& e, auto&) { return e.mul(lift(e, a), lift(e, b)); });
        return eq(lhs, eng_.mul(lift(eng_, subst_gamma(a)), lift(eng_, subst_gamma(b))));
      });
    });
    check("alpha^2 = id (50 random elements)", n, "", [&] {
      return all(pairs, [&](int) {
        const Elem x = lift(eng_, random_element(n, 5));
        return eq(alpha(eng_, alpha(eng_, x)), x);
      });
    });
    check("beta^2 = id (50 random elements)", n, "", [&] {
      return all(pairs, [&](int) {
        const Elem x = lift(eng_, random_element(n, 5));
        return eq(beta(eng_, beta(eng_, x)), x);
      });
    });
    check("gamma^2 = id (50 random elements)", n, "", [&] {
      return all(pairs, [&](int) {
        const Element<Scalar> x = random_element(n, 5);
        if constexpr (std::is_same_v<R, ExactRing>) {
          return eq(gamma(eng_, gamma(eng_, x)), x);
        } else {
          return eq(lift(eng_, subst_gamma(subst_gamma(x))), lift(eng_, x));
        }
      });
    });
    const int k = n - 1;
    const std::string ks = std::to_string(k);
    check("alpha_{k+1}(b+_{k,1}) = b+_{1,k}, k=" + ks, n, "",
          [&] { return eq(alpha(eng_, lit(b_plus_right(k, n))), lit(b_plus_left(k, n))); });
    check("beta(b+_{k,1}) = a+_{k,1}, k=" + ks, n, "",
          [&] { return eq(beta(eng_, lit(b_plus_right(k, n))), lit(a_plus_right(k, n))); });
    check("beta(b+_{1,k}) = a+_{1,k}, k=" + ks, n, "",
          [&] { return eq(beta(eng_, lit(b_plus_left(k, n))), lit(a_plus_left(k, n))); });
    check("gamma(b+_{k,1}) = b-_{k,1}, k=" + ks, n, "", [&] {
      const Elem lhs = gamma_of([&](auto& e, auto&) { return e.reduce(lift(e, b_plus_right(k, n))); });
      return eq(lhs, lit(b_minus_right(k, n)));
    });
    check("alpha(S) = S and beta(S) = S", n, "", [&] {
      const Elem& s = ids_.symmetrizer(n);
      Outcome o = eq(alpha(eng_, s), s);
      return o.equal ? eq(beta(eng_, s), s) : o;
    });
  }

  Engine<R> eng_;
  Idempotents<R> ids_;
  SuiteOptions opts_;
  Report report_;
  std::mt19937_64 rng_;
  std::unique_ptr<Engine<R>> gamma_eng_;
  std::unique_ptr<Idempotents<R>> gamma_ids_;
};

}  // namespace

Report run_suite(const std::string& suite, const SuiteOptions& opts) {
  return Runner<ExactRing>(ExactRing{}, opts).run(suite);
}

Report run_suite(const std::string& suite, const PrimePoint& point, const SuiteOptions& opts) {
  if (!point.valid()) throw std::invalid_argument("invalid evaluation point " + point.to_string());
  return Runner<ModularRing>(ModularRing{point}, opts).run(suite);
}

}  // namespace bwm
