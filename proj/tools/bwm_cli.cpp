// Command-line front end: bwm <command> [options]. See --help.

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "bwm/hecke.hpp"
#include "bwm/idempotents.hpp"
#include "bwm/parser.hpp"
#include "bwm/serialize.hpp"
#include "bwm/suites.hpp"

namespace {

using namespace bwm;

enum Exit { kOk = 0, kFailed = 1, kInconclusive = 2, kUsage = 3 };

struct Options {
  int n = 3;
  std::string expr;
  std::string variant = "right-b";
  std::optional<int> k, l;
  std::string suite = "all";
  std::string backend = "exact";
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 1;
  std::size_t budget = kDefaultBudget;
  std::string format = "json";
  std::string out;
  bool timings = false;
};

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Output {
 public:
  explicit Output(const Options& o) : opts_(o) {}
  bool json() const { return opts_.format == "json"; }
  void emit(const Json& j, const std::string& text) {
    const std::string body = json() ? j.dump(2) + "\n" : text;
    if (opts_.out.empty()) {
      std::cout << body;
      return;
    }
    std::ofstream f(opts_.out, std::ios::binary);
    if (!f) throw Usage("cannot write " + opts_.out);
    f << body;
  }

 private:
  const Options& opts_;
};

PrimePoint point_for(const Options& o, int n_max) {
  if (o.prime < (std::uint64_t{1} << 30) || !is_probable_prime(o.prime)) {
    throw Usage("--prime must be a prime above 2^30");
  }
  return PrimePoint::draw(o.seed, std::max(n_max, 2), o.prime);
}

Variant variant_of(const Options& o) {
  auto v = parse_variant(o.variant);
  if (!v) throw Usage("unknown variant '" + o.variant + "'");
  return *v;
}

void need_rank(const Options& o, int lo) {
  if (o.n < lo) throw Usage("--n must be at least " + std::to_string(lo));
}

template <CoefficientRing R>
int with_backend(const Options& o, int n_max, R* /*tag*/, auto&& body) {
  if constexpr (std::is_same_v<R, ExactRing>) {
    Engine<R> eng(ExactRing{}, o.budget);
    return body(eng);
  } else {
    Engine<R> eng(ModularRing{point_for(o, n_max)}, o.budget);
    return body(eng);
  }
}

/// Runs `body(engine)` on the selected backend.
int dispatch(const Options& o, int n_max, auto&& body) {
  if (o.backend == "exact") return with_backend(o, n_max, static_cast<ExactRing*>(nullptr), body);
  return with_backend(o, n_max, static_cast<ModularRing*>(nullptr), body);
}

template <typename V>
std::string element_text(const Element<V>& x) {
  return x.to_string() + "\n";
}

// --- commands ------------------------------------------------------------------

int cmd_basis(const Options& o) {
  need_rank(o, 1);
  return dispatch(o, o.n, [&](auto& eng) {
    const std::vector<Word> words = eng.enumerate_irreducible(o.n);
    Json j;
    j["rank"] = o.n;
    j["backend"] = eng.ring().name();
    j["count"] = words.size();
    Json arr = Json::array();
    std::ostringstream text;
    text << "count: " << words.size() << "\n";
    for (const Word& w : words) {
      Json t = Json::array();
      for (const GenTok& g : w.tokens()) t.push_back(g.to_string());
      arr.push_back(std::move(t));
      text << (w.empty() ? "1" : w.to_string()) << "\n";
    }
    j["words"] = std::move(arr);
    Output(o).emit(j, text.str());
    return kOk;
  });
}

int cmd_reduce(const Options& o) {
  need_rank(o, 1);
  if (o.expr.empty()) throw Usage("--expr is required");
  const auto tree = parse_expr(o.expr);
  return dispatch(o, o.n, [&](auto& eng) {
    Idempotents ids(eng);
    const auto x = eng.reduce(evaluate(*tree, ids, o.n));
    Output(o).emit(element_to_json(x), element_text(x));
    return kOk;
  });
}

int cmd_idempotent(const Options& o, Sign s) {
  need_rank(o, 1);
  const Variant v = variant_of(o);
  return dispatch(o, o.n, [&](auto& eng) {
    Idempotents ids(eng);
    const auto& x = ids.idempotent(s, o.n, v);
    Output(o).emit(element_to_json(x), element_text(x));
    return kOk;
  });
}

int emit_report(const Options& o, Report& r) {
  r.sort();
  Output(o).emit(r.to_json(), r.to_text());
  return r.exit_code();
}

int cmd_lemma(const Options& o) {
  need_rank(o, 3);
  if (o.k.has_value() != o.l.has_value()) throw Usage("--k and --l go together");
  if (o.k && (*o.k < 1 || *o.k >= o.n || *o.l < 1 || *o.l >= o.n)) throw Usage("need 1 <= k, l < n");
  return dispatch(o, o.n, [&](auto& eng) {
    using R = std::decay_t<decltype(eng.ring())>;
    Idempotents<R> ids(eng);
    Report r;
    r.suite = "lemma";
    r.backend = eng.ring().name();
    r.certifying = std::is_same_v<R, ExactRing>;
    for (int k = 1; k < o.n; ++k) {
      for (int l = 1; l < o.n; ++l) {
        if (o.k && (k != *o.k || l != *o.l)) continue;
        Check c;
        c.identity = "S_{n-1} d_{n,k} g_l case " + Idempotents<R>::lemma_case(k, l) + " k=" + std::to_string(k) +
                     " l=" + std::to_string(l);
        c.n = o.n;
        c.backend = r.backend;
        try {
          auto [lhs, rhs] = ids.lemma_sides(o.n, k, l);
          auto v = eng.equals(lhs, rhs);
          c.verdict = v.label();
          if (!v.equal()) c.detail = "witness: " + v.witness.to_string();
        } catch (const BudgetExhausted& e) {
          c.verdict = verdict::kBudget;
          c.detail = e.what();
        }
        r.checks.push_back(std::move(c));
      }
    }
    return emit_report(o, r);
  });
}

int cmd_hecke(const Options& o) {
  need_rank(o, 1);
  return dispatch(o, o.n, [&](auto& eng) {
    using R = std::decay_t<decltype(eng.ring())>;
    Idempotents<R> ids(eng);
    const Hecke<R> h(eng.ring());
    const auto ps = h.project(ids.symmetrizer(o.n));
    const auto pa = h.project(ids.antisymmetrizer(o.n));
    const bool s_ok = (ps - h.symmetrizer_closed(o.n)).is_zero();
    const bool a_ok = (pa - h.antisymmetrizer_closed(o.n)).is_zero();
    Json j;
    j["rank"] = o.n;
    j["backend"] = eng.ring().name();
    j["symmetrizer"] = element_to_json(ps);
    j["symmetrizer_matches_closed_form"] = s_ok;
    j["antisymmetrizer"] = element_to_json(pa);
    j["antisymmetrizer_matches_closed_form"] = a_ok;
    std::ostringstream text;
    text << "project(S_" << o.n << ") = " << ps.to_string() << "\nclosed form: " << (s_ok ? "match" : "MISMATCH")
         << "\nproject(A_" << o.n << ") = " << pa.to_string() << "\nclosed form: " << (a_ok ? "match" : "MISMATCH")
         << "\n";
    Output(o).emit(j, text.str());
    return s_ok && a_ok ? kOk : kFailed;
  });
}

int cmd_verify(const Options& o) {
  need_rank(o, 2);
  if (o.suite != "all" && std::find(suite_names().begin(), suite_names().end(), o.suite) == suite_names().end()) {
    throw Usage("unknown suite '" + o.suite + "'");
  }
  SuiteOptions so{o.n, o.seed, o.timings, o.budget};
  Report r = o.backend == "exact" ? run_suite(o.suite, so) : run_suite(o.suite, point_for(o, o.n), so);
  return emit_report(o, r);
}

int cmd_bench(const Options& o) {
  need_rank(o, 2);
  return dispatch(o, o.n, [&](auto& eng) {
    using R = std::decay_t<decltype(eng.ring())>;
    using clock = std::chrono::steady_clock;
    auto ms = [](clock::time_point a) { return std::chrono::duration<double, std::milli>(clock::now() - a).count(); };
    Json t;
    std::ostringstream text;
    auto t0 = clock::now();
    const std::size_t rules = eng.rules().rules_for_rank(o.n).rules.size();
    t["completion"] = ms(t0);
    t0 = clock::now();
    const std::size_t dim = eng.enumerate_irreducible(o.n).size();
    t["enumerate_irreducible"] = ms(t0);
    Idempotents<R> ids(eng);
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      for (Variant v : kAllVariants) {
        t0 = clock::now();
        ids.idempotent(s, o.n, v);
        t[std::string(s == Sign::Plus ? "S" : "A") + " " + to_string(v)] = ms(t0);
      }
    }
    Json j;
    j["rank"] = o.n;
    j["backend"] = eng.ring().name();
    j["rules"] = rules;
    j["dimension"] = dim;
    j["symmetrizer_terms"] = ids.symmetrizer(o.n).size();
    j["timings_ms"] = t;
    text << "rank " << o.n << "  backend " << eng.ring().name() << "\nrules: " << rules << "\ndimension: " << dim
         << "\n";
    for (const auto& [key, val] : t.items()) text << key << ": " << val.template get<double>() << " ms\n";
    Output(o).emit(j, text.str());
    return kOk;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations in the BMW algebras BWM_n(r, q)"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--backend", o.backend, "exact or modular")->check(CLI::IsMember({"exact", "modular"}));
  app.add_option("--prime", o.prime, "prime modulus for the modular backend");
  app.add_option("--seed", o.seed, "seed for random samples and evaluation points");
  app.add_option("--budget", o.budget, "rewrite steps per term")->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", o.out, "write output to this file");
  app.add_flag("--timings", o.timings, "record wall times in reports");

  auto rank = [&](CLI::App* c) { c->add_option("--n", o.n, "rank")->required(); };
  auto* basis = app.add_subcommand("basis", "irreducible words of BWM_n");
  rank(basis);
  auto* reduce = app.add_subcommand("reduce", "evaluate and reduce an expression");
  rank(reduce);
  reduce->add_option("--expr", o.expr, "expression, e.g. \"g1*e2 - q^-1*S(2)\"")->required();
  auto* sym = app.add_subcommand("sym", "the symmetrizer S_n");
  rank(sym);
  sym->add_option("--variant", o.variant, "right-b, shift-right-b, left-a, shift-left-a, telescoping");
  auto* antisym = app.add_subcommand("antisym", "the antisymmetrizer A_n");
  rank(antisym);
  antisym->add_option("--variant", o.variant, "right-b, shift-right-b, left-a, shift-left-a, telescoping");
  auto* lemma = app.add_subcommand("lemma", "check S_{n-1} d_{n,k} g_l against its case formula");
  rank(lemma);
  lemma->add_option("--k", o.k);
  lemma->add_option("--l", o.l);
  auto* hecke = app.add_subcommand("hecke", "project S_n and A_n to the Hecke quotient");
  rank(hecke);
  auto* verify = app.add_subcommand("verify", "run a verification suite at ranks up to n");
  rank(verify);
  verify->add_option("--suite", o.suite)
      ->check(CLI::IsMember({"relations", "symmetrizer", "antisymmetrizer", "lemma", "hecke", "morphisms", "all"}));
  auto* bench = app.add_subcommand("bench", "time completion and the idempotent constructions");
  rank(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*basis) return cmd_basis(o);
    if (*reduce) return cmd_reduce(o);
    if (*sym) return cmd_idempotent(o, Sign::Plus);
    if (*antisym) return cmd_idempotent(o, Sign::Minus);
    if (*lemma) return cmd_lemma(o);
    if (*hecke) return cmd_hecke(o);
    if (*verify) return cmd_verify(o);
    if (*bench) return cmd_bench(o);
  } catch (const Usage& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const SyntaxError& e) {
    std::cerr << "syntax error: " << e.what() << "\n";
    return kUsage;
  } catch (const RankMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IndexDomain& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const BudgetExhausted& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const ParameterSingular& e) {
    std::cerr << "inconclusive: " << e.what() << "\n";
    return kInconclusive;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
