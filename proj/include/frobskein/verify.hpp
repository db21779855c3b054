#pragma once
// Property batteries over the whole library, grouped into named suites.  The
// command-line `verify` subcommand prints one line per check; the same
// functions back the acceptance harness.  Every check is deterministic for a
// fixed max_n and seed.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "frobskein/dtl.hpp"
#include "frobskein/frobenius.hpp"
#include "frobskein/idempotents.hpp"
#include "frobskein/invariants.hpp"
#include "frobskein/solidtorus.hpp"
#include "frobskein/surfaces.hpp"

namespace frobskein {

struct VerifyCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::vector<VerifyCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return true;
  }

  int failures() const {
    int count = 0;
    for (const auto& c : checks)
      if (!c.passed) ++count;
    return count;
  }
};

namespace detail {

template <class F>
void run_check(VerifyReport& report, const std::string& name, F&& f) {
  VerifyCheck check{name, false, ""};
  try {
    check.passed = f();
    if (!check.passed) check.detail = "property violated";
  } catch (const std::exception& e) {
    check.detail = e.what();
  }
  report.checks.push_back(std::move(check));
}

/// Rank over the scalar field of the span of the tensor embeddings of all
/// basis-decorated planar matchings in dTL_alpha(0, 2n), by sparse Gaussian
/// elimination.
inline int tensor_span_rank(int n) {
  const AlgebraPtr A = builtin_alpha();
  using Row = std::map<std::size_t, Scalar>;
  std::map<std::size_t, Row> echelon;  // keyed by pivot index
  for (const auto& m : PlanarMatching::all(n))
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<std::pair<Diagram::Arc, std::uint8_t>> arcs;
      for (int k = 0; k < n; ++k)
        arcs.push_back({m.arcs()[static_cast<std::size_t>(k)],
                        static_cast<std::uint8_t>((mask >> k) & 1u)});
      const TensorElement t =
          embed_tensor(DiagramSum::single(A, Diagram(0, 2 * n, arcs)));
      Row row;
      for (const auto& [exps, coeff] : t.terms()) {
        std::size_t idx = 0;
        for (const auto e : exps) idx = idx * A->rank() + e;
        row[idx] = coeff;
      }
      while (!row.empty()) {
        const std::size_t lead = row.begin()->first;
        const auto pivot = echelon.find(lead);
        if (pivot == echelon.end()) {
          const Scalar inv = row.begin()->second.inv();
          for (auto& [idx, c] : row) c *= inv;
          echelon.emplace(lead, std::move(row));
          break;
        }
        const Scalar factor = row.begin()->second;
        for (const auto& [idx, c] : pivot->second) {
          auto it = row.find(idx);
          const Scalar next = (it == row.end() ? Scalar(0) : it->second) -
                              factor * c;
          if (next.is_zero()) {
            if (it != row.end()) row.erase(it);
          } else {
            row[idx] = next;
          }
        }
      }
    }
  return static_cast<int>(echelon.size());
}

inline std::vector<AlgebraPtr> verify_algebras() {
  return {builtin_alpha(), builtin_bar_natan(), builtin_trivial(Scalar(2)),
          builtin_beta(3)};
}

inline std::vector<AlgebraElement> basis_of(const AlgebraPtr& A) {
  std::vector<AlgebraElement> out;
  for (std::size_t i = 0; i < A->rank(); ++i) out.push_back(A->basis(i));
  return out;
}

inline AlgebraElement counit_fold(const TensorElement& t, std::size_t slot) {
  const AlgebraPtr& A = t.algebra();
  AlgebraElement out = A->zero();
  for (const auto& [exps, coeff] : t.terms()) {
    AlgebraElement rest = A->unit();
    Scalar c = coeff;
    for (std::size_t i = 0; i < exps.size(); ++i) {
      if (i == slot)
        c *= A->counit(A->basis(exps[i]));
      else
        rest = rest * A->basis(exps[i]);
    }
    out = out + c * rest;
  }
  return out;
}

inline DiagramSum cap_at(int i, int m, const AlgebraPtr& A,
                         std::uint8_t e = 0) {
  DiagramSum cap = DiagramSum::single(A, Diagram::cap(e));
  if (i > 1) cap = tensor(DiagramSum::identity(A, i - 1), cap);
  if (i + 1 < m) cap = tensor(cap, DiagramSum::identity(A, m - i - 1));
  return cap;
}

inline DiagramSum cup_power(int n, const AlgebraPtr& A, std::uint8_t e) {
  DiagramSum cups = DiagramSum::single(A, Diagram::cup(e));
  for (int i = 1; i < n; ++i)
    cups = tensor(cups, DiagramSum::single(A, Diagram::cup(e)));
  return cups;
}

}  // namespace detail

inline VerifyReport verify_frobenius(int /*max_n*/ = 3,
                                     unsigned /*seed*/ = 0) {
  VerifyReport report{"frobenius", {}};
  const auto algebras = detail::verify_algebras();

  detail::run_check(report, "unit-laws", [&] {
    for (const auto& A : algebras)
      for (const auto& a : detail::basis_of(A))
        if (!(a * A->unit() == a && A->unit() * a == a)) return false;
    return true;
  });

  detail::run_check(report, "mul-commutative-associative", [&] {
    for (const auto& A : algebras) {
      const auto basis = detail::basis_of(A);
      for (const auto& a : basis)
        for (const auto& b : basis) {
          if (!(a * b == b * a)) return false;
          for (const auto& c : basis)
            if (!((a * b) * c == a * (b * c))) return false;
        }
    }
    return true;
  });

  detail::run_check(report, "counitality", [&] {
    for (const auto& A : algebras)
      for (const auto& a : detail::basis_of(A)) {
        const TensorElement d = A->comul(a);
        if (!(detail::counit_fold(d, 0) == a)) return false;
        if (!(detail::counit_fold(d, 1) == a)) return false;
      }
    return true;
  });

  detail::run_check(report, "coassociativity", [&] {
    for (const auto& A : algebras)
      for (const auto& a : detail::basis_of(A)) {
        const TensorElement d = A->comul(a);
        if (!(d.comul_slot(0) == d.comul_slot(1))) return false;
      }
    return true;
  });

  detail::run_check(report, "frobenius-law", [&] {
    for (const auto& A : algebras) {
      const auto basis = detail::basis_of(A);
      for (const auto& a : basis)
        for (const auto& b : basis) {
          const TensorElement lhs = A->comul(a * b);
          if (!(lhs == A->comul(b).mul_into_slot(0, a))) return false;
          if (!(lhs == A->comul(a).mul_into_slot(1, b))) return false;
        }
    }
    return true;
  });

  detail::run_check(report, "handle-elements", [&] {
    const AlgebraPtr alpha = builtin_alpha();
    const AlgebraPtr bn = builtin_bar_natan();
    const AlgebraPtr triv = builtin_trivial(Scalar(2));
    const AlgebraPtr beta = builtin_beta(3);
    if (!(handle_element(alpha) == Scalar(2) * alpha->basis(1))) return false;
    if (!(handle_element(bn) == Scalar(2) * bn->basis(1))) return false;
    if (!(handle_element(triv) == Scalar(Rational(1, 2)) * triv->unit()))
      return false;
    return handle_element(beta) == Scalar(3) * beta->basis(2);
  });

  detail::run_check(report, "separability", [&] {
    for (const auto& A : algebras) {
      const auto inv = handle_inverse(A);
      if (A->name() == "bar_natan") {
        if (inv.has_value()) return false;
      } else {
        if (!inv.has_value()) return false;
        if (!(handle_element(A) * *inv == A->unit())) return false;
      }
    }
    return true;
  });

  detail::run_check(report, "counit-tables", [&] {
    const AlgebraPtr alpha = builtin_alpha();
    if (!(alpha->counit(alpha->unit()) == Scalar(0))) return false;
    if (!(alpha->counit(alpha->basis(1)) == Scalar(1))) return false;
    const AlgebraPtr triv = builtin_trivial(Scalar(2));
    if (!(triv->counit(triv->unit()) == Scalar(2))) return false;
    const AlgebraPtr beta = builtin_beta(3);
    return beta->counit(beta->unit()) == Scalar(0) &&
           beta->counit(beta->basis(1)) == Scalar(0) &&
           beta->counit(beta->basis(2)) == Scalar(1);
  });

  return report;
}

inline VerifyReport verify_dtl(int max_n = 4, unsigned /*seed*/ = 0) {
  VerifyReport report{"dtl", {}};
  const AlgebraPtr A = builtin_alpha();
  const auto single = [&](const Diagram& d) {
    return DiagramSum::single(A, d);
  };

  detail::run_check(report, "snake-identities", [&] {
    const DiagramSum id1 = DiagramSum::identity(A, 1);
    const DiagramSum left = compose(
        tensor(single(Diagram::cap()), id1), tensor(id1, single(Diagram::cup())));
    const DiagramSum right = compose(
        tensor(id1, single(Diagram::cap())), tensor(single(Diagram::cup()), id1));
    return skein_equal(left, id1).equal && skein_equal(right, id1).equal;
  });

  detail::run_check(report, "circle-values", [&] {
    for (std::uint8_t e1 : {0, 1})
      for (std::uint8_t e2 : {0, 1}) {
        const DiagramSum circle =
            compose(single(Diagram::cap(e1)), single(Diagram::cup(e2)));
        const Scalar expect = A->counit(
            handle_element(A) *
            A->basis(1).pow(static_cast<std::size_t>(e1 + e2)));
        const DiagramSum want =
            DiagramSum::single(A, Diagram::empty(), expect);
        if (!skein_equal(circle, want).equal) return false;
      }
    return true;
  });

  detail::run_check(report, "transpose-involution", [&] {
    for (int n = 1; n <= std::min(max_n, 3); ++n)
      for (const auto& m : PlanarMatching::all(n)) {
        std::vector<std::pair<Diagram::Arc, std::uint8_t>> arcs;
        for (int k = 0; k < n; ++k)
          arcs.push_back({m.arcs()[static_cast<std::size_t>(k)],
                          static_cast<std::uint8_t>(k % 2)});
        const Diagram d(0, 2 * n, arcs);
        if (!(transpose(transpose(d)) == d)) return false;
      }
    return true;
  });

  detail::run_check(report, "render-parse-round-trip", [&] {
    if (!(Diagram::parse(Diagram::empty().render()) == Diagram::empty()))
      return false;
    for (int n = 1; n <= std::min(max_n, 3); ++n)
      for (const auto& m : PlanarMatching::all(n)) {
        std::vector<std::pair<Diagram::Arc, std::uint8_t>> arcs;
        for (int k = 0; k < n; ++k)
          arcs.push_back({m.arcs()[static_cast<std::size_t>(k)],
                          static_cast<std::uint8_t>((k + 1) % 2)});
        const Diagram d(0, 2 * n, arcs);
        if (!(Diagram::parse(d.render()) == d)) return false;
      }
    return true;
  });

  detail::run_check(report, "tensor-compose-interchange", [&] {
    const DiagramSum f1 = single(Diagram::cup(0));
    const DiagramSum f2 = single(Diagram::cap(1));
    const DiagramSum g1 = single(Diagram::cup(1));
    const DiagramSum g2 = single(Diagram::cap(0));
    const DiagramSum lhs = tensor(compose(f2, f1), compose(g2, g1));
    const DiagramSum rhs = compose(tensor(f2, g2), tensor(f1, g1));
    return skein_equal(lhs, rhs).equal;
  });

  detail::run_check(report, "symmetrizer-idempotent", [&] {
    for (int m = 1; m <= max_n; ++m) {
      const DiagramSum sym = symmetrizer(m, A);
      if (!skein_equal(compose(sym, sym), sym).equal) return false;
    }
    return true;
  });

  detail::run_check(report, "symmetrizer-absorbs-crossings", [&] {
    for (int m = 2; m <= max_n; ++m) {
      const DiagramSum sym = symmetrizer(m, A);
      for (int i = 1; i < m; ++i) {
        const DiagramSum x = crossing(i, m, A);
        if (!skein_equal(compose(sym, x), sym).equal) return false;
        if (!skein_equal(compose(x, sym), sym).equal) return false;
      }
    }
    return true;
  });

  detail::run_check(report, "caps-annihilate-symmetrizer", [&] {
    for (int m = 2; m <= max_n; ++m) {
      const DiagramSum sym = symmetrizer(m, A);
      for (int i = 1; i < m; ++i) {
        const DiagramSum capped = compose(detail::cap_at(i, m, A), sym);
        if (!embed_tensor_any(capped).is_zero()) return false;
      }
    }
    return true;
  });

  detail::run_check(report, "symmetrizer-full-sum", [&] {
    for (int m = 1; m <= std::min(max_n, 4); ++m)
      if (!skein_equal(symmetrizer(m, A), symmetrizer_full_sum(m, A)).equal)
        return false;
    return true;
  });

  return report;
}

inline VerifyReport verify_idempotents(int max_n = 3, unsigned /*seed*/ = 0) {
  VerifyReport report{"idempotents", {}};

  detail::run_check(report, "idempotent-battery", [&] {
    for (int n = 1; n <= max_n; ++n)
      for (const auto& m : PlanarMatching::all(n))
        if (!idempotent_battery(m).ok()) return false;
    return true;
  });

  detail::run_check(report, "walk-count", [&] {
    for (int n = 1; n <= max_n; ++n) {
      const Rational expect = binomial(2 * n, n) / 2;
      if (Rational(enumerate_classes(n).size()) != expect) return false;
    }
    return true;
  });

  detail::run_check(report, "embedding-span-rank", [&] {
    for (int n = 1; n <= max_n; ++n)
      if (Rational(detail::tensor_span_rank(n)) != binomial(2 * n, n))
        return false;
    return true;
  });

  detail::run_check(report, "walk-matching-shapes", [&] {
    for (int n = 1; n <= max_n; ++n)
      for (const auto& w : enumerate_classes(n)) {
        const ArcPartition p = matching_of_walk(w);
        if (p.matching().points() != 2 * n) return false;
        const DiagramSum e = to_diagram_sum(partition_idempotent(p));
        if (e.bottom() != 0 || e.top() != 2 * n) return false;
      }
    return true;
  });

  return report;
}

inline VerifyReport verify_kirby(int max_n = 2, unsigned /*seed*/ = 0) {
  VerifyReport report{"kirby", {}};
  const AlgebraPtr A = builtin_alpha();

  detail::run_check(report, "omega2-small-form", [&] {
    return kirby_closed_form(1).tensor.render() == "1/2 + 1/(2*a) * x⊗x" &&
           kirby_copair(1).tensor.render() == "1/2 + 1/(2*a) * x⊗x";
  });

  detail::run_check(report, "routes-agree", [&] {
    for (int n = 0; n <= max_n; ++n) {
      const KirbyColor copair = kirby_copair(n);
      const KirbyColor closed = kirby_closed_form(n);
      const KirbyColor sym = kirby_symmetrizer(n);
      if (!(copair.tensor == closed.tensor)) return false;
      if (!(copair.tensor == sym.tensor)) return false;
      if (!copair.dtl || !sym.dtl || closed.dtl) return false;
      if (!(embed_tensor(*copair.dtl) == copair.tensor)) return false;
      if (!(embed_tensor(*sym.dtl) == copair.tensor)) return false;
    }
    return true;
  });

  detail::run_check(report, "gram-diagonal", [&] {
    for (int n = 1; n <= max_n; ++n) {
      const GramMatrix g = gram_matrix(n);
      const std::size_t classes = g.labels.size() / 2;
      for (std::size_t i = 0; i < g.labels.size(); ++i)
        for (std::size_t j = 0; j < g.labels.size(); ++j) {
          const Scalar want = i != j ? Scalar(0)
                              : i < classes
                                  ? Scalar(2)
                                  : Scalar(2) * Scalar::alpha();
          if (!(g.entries[i][j] == want)) return false;
        }
      if (!g.perfect || !is_unit(g.det, UnitMode::kLaurent)) return false;
    }
    return true;
  });

  detail::run_check(report, "bar-natan-singular", [&] {
    if (gram_matrix(1, builtin_bar_natan()).perfect) return false;
    try {
      copairing(1, builtin_bar_natan());
    } catch (const SingularPairing& e) {
      return std::string(e.what()) ==
             "pairing singular: algebra not strongly separable";
    }
    return false;
  });

  detail::run_check(report, "annulus-caps", [&] {
    const AlgebraElement one = A->basis(0);
    const AlgebraElement x = A->basis(1);
    for (int n = 1; n <= max_n; ++n) {
      const KirbyColor w = kirby_closed_form(n);
      const KirbyColor target = kirby_closed_form(n - 1);
      for (int pos = 1; pos <= 2 * n; ++pos) {
        if (!annulus_cap(w, pos, one).tensor.is_zero()) return false;
        if (!(annulus_cap(w, pos, x).tensor == target.tensor)) return false;
      }
    }
    return true;
  });

  detail::run_check(report, "cap-pairing-duality", [&] {
    for (int n = 1; n <= max_n; ++n) {
      const KirbyColor w = kirby_copair(n);
      const SkeinElement omega(*w.dtl);
      for (const auto& cls : class_basis(n)) {
        const SkeinElement v = skein_of_class(cls);
        if (!(pairing(v, omega) == cap_value(v))) return false;
      }
    }
    return true;
  });

  detail::run_check(report, "t-recursion", [&] {
    for (int n = 1; n <= max_n; ++n) {
      const DiagramSum sym_cups =
          apply_symmetrizer(2 * n, detail::cup_power(n, A, 1));
      const DiagramSum capped =
          compose(detail::cap_at(2 * n - 1, 2 * n, A, 1), sym_cups);
      const Scalar t = Scalar(Rational(2 * n, 2 * n - 1)) * Scalar::alpha();
      const DiagramSum expect =
          n == 1 ? t * DiagramSum::single(A, Diagram::empty())
                 : t * apply_symmetrizer(2 * n - 2,
                                         detail::cup_power(n - 1, A, 1));
      if (!(embed_tensor(capped) == embed_tensor(expect))) return false;
    }
    return true;
  });

  detail::run_check(report, "von-szily", [&] {
    for (int a = 0; a <= 8; ++a)
      for (int b = 0; b <= 8; ++b)
        if (!von_szily_check(a, b)) return false;
    return true;
  });

  detail::run_check(report, "super-catalan-integral", [&] {
    for (int a = 0; a <= 8; ++a)
      for (int b = 0; b <= 8; ++b) {
        const Rational s = super_catalan(a, b);
        if (s != super_catalan(b, a)) return false;
        if (boost::multiprecision::denominator(s) != 1) return false;
      }
    return true;
  });

  return report;
}

inline VerifyReport verify_invariants(int max_n = 2, unsigned seed = 0,
                                      int random_words = 200) {
  VerifyReport report{"invariants", {}};
  const Scalar a = Scalar::alpha();
  const Scalar y = Scalar::laurent(Rational(3), 1);

  detail::run_check(report, "s2xb2-table", [&] {
    for (const Scalar& ev : {Scalar(1), y}) {
      const Scalar ev2 = ev * ev;
      if (!(invariant_S2xB2(gen_empty(), ev) == ev2)) return false;
      if (!(invariant_S2xB2(gen_D(), ev) == Scalar(0))) return false;
      for (int k = 1; k <= 3; ++k) {
        if (!(invariant_S2xB2(gen_S(2 * k - 1), ev) == Scalar(0)))
          return false;
        const Scalar want = Scalar(binomial(2 * k, k) / pow_2(2 * k)) *
                            a.pow(-k) * ev2;
        if (!(invariant_S2xB2(gen_S(2 * k), ev) == want)) return false;
      }
    }
    return true;
  });

  detail::run_check(report, "s2xb2-evaluator-agreement", [&] {
    const AlgebraPtr A = builtin_alpha();
    for (int k = 1; k <= max_n; ++k) {
      std::vector<SurfaceComponent> comps(
          static_cast<std::size_t>(2 * k),
          SurfaceComponent(2, 0, true, A->unit(), 1));
      std::vector<int> circle(static_cast<std::size_t>(2 * k));
      std::iota(circle.begin(), circle.end(), 1);
      const DecoratedSkeinInBoundary skein(
          SurfacePresentation(A, std::move(comps)), {std::move(circle)});
      if (!(handlebody_invariant(skein, y, 2) ==
            invariant_S2xB2(gen_S(2 * k), y)))
        return false;
    }
    return true;
  });

  detail::run_check(report, "b3xs1-table", [&] {
    if (!(invariant_B3xS1(gen_empty()) == Scalar(1))) return false;
    if (!(invariant_B3xS1(gen_D()) == Scalar(1))) return false;
    for (int k = 1; k <= 3; ++k)
      if (!(invariant_B3xS1(gen_S(k)) == Scalar(0))) return false;
    return true;
  });

  detail::run_check(report, "cyclic-toric-caps", [&] {
    if (!(cyclic_toric_cap(2, 1) == Scalar(2))) return false;
    if (!(cyclic_toric_cap(1, 2) == Scalar(2))) return false;
    if (!(cyclic_toric_cap(2, 2) == Scalar(2))) return false;
    if (!(cyclic_toric_cap(4, 1) == Scalar(6))) return false;
    if (!(invariant_T2xB2(gen_T(2), 1) == cyclic_toric_cap(2, 1)))
      return false;
    if (!(invariant_T2xB2(gen_T(1), 2) == Scalar(0))) return false;
    if (!(invariant_T2xB2(gen_D(), 1) == Scalar(0))) return false;
    try {
      cyclic_toric_cap(1, 1);
      return false;
    } catch (const OddProduct&) {
    }
    return true;
  });

  detail::run_check(report, "sphere-rewrite-resolutions", [&] {
    if (!(sphere_skein_normal_form("DS") ==
          SphereSkeinSum{{"SD", Scalar(-1)}}))
      return false;
    if (!(sphere_skein_normal_form("DD") ==
          SphereSkeinSum{{"", Scalar(1)}, {"SS", Scalar(-1) * a}}))
      return false;
    if (!(sphere_skein_normal_form("DDS") ==
          SphereSkeinSum{{"S", Scalar(1)}, {"SSS", Scalar(-1) * a}}))
      return false;
    return sphere_skein_normal_form("DDD") ==
           SphereSkeinSum{{"D", Scalar(1)}, {"SSD", Scalar(-1) * a}};
  });

  detail::run_check(report, "sphere-confluence", [&] {
    std::mt19937 rng(seed + 1);
    std::uniform_int_distribution<int> len(0, 8);
    std::uniform_int_distribution<int> letter(0, 1);
    for (int trial = 0; trial < random_words; ++trial) {
      std::string w;
      const int l = len(rng);
      for (int i = 0; i < l; ++i) w += letter(rng) ? 'D' : 'S';
      const SphereSkeinSum left =
          sphere_skein_normal_form(w, RewriteStrategy::kLeftmost);
      if (!(left == sphere_skein_normal_form(w, RewriteStrategy::kRightmost)))
        return false;
      if (!(left == sphere_skein_normal_form(w, RewriteStrategy::kRandom,
                                             seed + 2)))
        return false;
      for (const auto& [word, coeff] : left)
        if (word.find("DS") != std::string::npos ||
            word.find("DD") != std::string::npos)
          return false;
    }
    return true;
  });

  detail::run_check(report, "sphere-powers-distinct", [&] {
    std::string w;
    for (int k = 0; k <= 10; ++k) {
      if (!(sphere_skein_normal_form(w) == SphereSkeinSum{{w, Scalar(1)}}))
        return false;
      w += 'S';
    }
    return true;
  });

  detail::run_check(report, "trace-reduction", [&] {
    if (!sphere_skein_trace_reduce("SSD").empty()) return false;
    if (!(sphere_skein_trace_reduce("SSS") ==
          SphereSkeinSum{{"S", a.pow(-1)}}))
      return false;
    if (!(sphere_skein_trace_reduce("DD") ==
          SphereSkeinSum{{"", Scalar(1)}, {"SS", Scalar(-1) * a}}))
      return false;
    return sphere_skein_trace_reduce("SSSS") ==
           SphereSkeinSum{{"SSSS", Scalar(1)}};
  });

  detail::run_check(report, "rank-one-zigzag", [&] {
    for (const Scalar& u :
         {Scalar(2), a, Scalar::laurent(Rational(3), -1)}) {
      const RankOneHandleData t = rank_one_tables(u);
      if (!(t.p4 == Scalar(2)) || !(t.m4 == Scalar(Rational(1, 2))))
        return false;
      if (!(t.p4 * t.c4 == Scalar(1))) return false;
      if (!(t.p2[0] * t.c2[0] == Scalar(1))) return false;
      if (!(t.p2[1] * t.c2[1] == Scalar(1))) return false;
      if (!(t.p3[0][0] * t.c3[0] == Scalar(1))) return false;
      if (!(t.p3[1][1] * t.c3[1] == Scalar(1))) return false;
      if (!(Scalar(1) + t.m3[1] * t.u == t.p4)) return false;
    }
    return true;
  });

  detail::run_check(report, "rank-one-dw", [&] {
    if (rank_one_dw(1) != Rational(1, 2)) return false;
    if (rank_one_dw(2) != Rational(1)) return false;
    if (rank_one_dw(4) != Rational(2)) return false;
    try {
      rank_one_dw(0);
      return false;
    } catch (const std::invalid_argument&) {
    }
    return true;
  });

  detail::run_check(report, "euler-rescaling", [&] {
    const AlgebraPtr A = builtin_alpha();
    std::mt19937 rng(seed + 3);
    std::uniform_int_distribution<int> chi(-3, 3);
    std::uniform_int_distribution<int> exp(-2, 2);
    for (int trial = 0; trial < 10; ++trial) {
      const int k = 1 + trial % std::max(max_n, 1);
      std::vector<SurfaceComponent> comps(
          static_cast<std::size_t>(2 * k),
          SurfaceComponent(2, 0, true, A->unit(), 1));
      std::vector<int> circle(static_cast<std::size_t>(2 * k));
      std::iota(circle.begin(), circle.end(), 1);
      const DecoratedSkeinInBoundary skein(
          SurfacePresentation(A, std::move(comps)), {std::move(circle)});
      const Scalar ev = Scalar::laurent(Rational(3), exp(rng));
      const int c = chi(rng);
      if (!(handlebody_invariant(skein, ev, c) ==
            ev.pow(c) * handlebody_invariant(skein, Scalar(1), c)))
        return false;
    }
    return true;
  });

  return report;
}

inline std::vector<std::string> verify_suite_names() {
  return {"frobenius", "dtl", "idempotents", "kirby", "invariants"};
}

inline VerifyReport verify_suite(const std::string& suite,
                                 std::optional<int> max_n = std::nullopt,
                                 unsigned seed = 0) {
  if (suite == "frobenius") return verify_frobenius(max_n.value_or(3), seed);
  if (suite == "dtl") return verify_dtl(max_n.value_or(4), seed);
  if (suite == "idempotents")
    return verify_idempotents(max_n.value_or(3), seed);
  if (suite == "kirby") return verify_kirby(max_n.value_or(2), seed);
  if (suite == "invariants")
    return verify_invariants(max_n.value_or(2), seed);
  throw std::invalid_argument("unknown verify suite: " + suite);
}

}  // namespace frobskein
