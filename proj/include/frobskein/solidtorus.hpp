#pragma once

// The skein module of the solid torus with boundary condition (2n,0):
// class basis from partition idempotents, the meridional pairing and
// copairing, cap values, and the 2-handle Kirby color by three routes
// together with the annulus-capping laws.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "frobskein/dtl.hpp"
#include "frobskein/frobenius.hpp"
#include "frobskein/idempotents.hpp"
#include "frobskein/scalar.hpp"

namespace frobskein {

class SizeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SingularPairing : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An element of Sk(ℍ,(2n,0)) presented by a DiagramSum(0→2n); the tensor
/// embedding is kept in sync and faithfully represents the skein class.
class SkeinElement {
 public:
  explicit SkeinElement(DiagramSum value)
      : value_(validated(std::move(value))), embedding_(embed_tensor(value_)) {}

  const AlgebraPtr& algebra() const { return value_.algebra(); }
  int n() const { return value_.top() / 2; }
  const DiagramSum& value() const { return value_; }
  const TensorElement& embedding() const { return embedding_; }

  friend SkeinElement operator+(const SkeinElement& a, const SkeinElement& b) {
    return SkeinElement(a.value_ + b.value_);
  }
  friend SkeinElement operator-(const SkeinElement& a, const SkeinElement& b) {
    return SkeinElement(a.value_ - b.value_);
  }
  friend SkeinElement operator*(const Scalar& c, const SkeinElement& a) {
    return SkeinElement(c * a.value_);
  }
  bool operator==(const SkeinElement& o) const {
    return embedding_ == o.embedding_;
  }
  bool operator!=(const SkeinElement& o) const { return !(*this == o); }

 private:
  static DiagramSum validated(DiagramSum value) {
    if (value.bottom() != 0 || value.top() % 2 != 0)
      throw SizeMismatch("skein elements live in dTL(0, 2n)");
    return value;
  }

  DiagramSum value_;
  TensorElement embedding_;
};

/// Rank of Sk(ℍ,(m,0)) over the class basis: C(m, m/2) for even m; the
/// module vanishes for odd m.
inline Rational binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Rational r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline Rational skein_module_rank(int m) {
  if (m < 0) throw SizeMismatch("boundary count must be nonnegative");
  if (m % 2 != 0) return 0;
  return binomial(m, m / 2);
}

/// Meridional pairing: glue two solid tori to S¹×S² and evaluate abstractly.
/// Combinatorially: overlay the matchings; every cycle with accumulated
/// label a contributes ε(H·a). Realized as composition dᵀ₂ ∘ d₁ in dTL.
inline Scalar pairing(const SkeinElement& d1, const SkeinElement& d2) {
  require_same_algebra(d1.algebra(), d2.algebra());
  if (d1.n() != d2.n())
    throw SizeMismatch("pairing requires equal boundary counts");
  const DiagramSum closed = compose(transpose(d2.value()), d1.value());
  Scalar out(0);
  for (const auto& [d, c] : closed.terms()) out += c;  // only the empty diagram
  return out;
}

/// Cap value: cap off each arc with a meridional disk; each arc with label a
/// contributes ε(a), so the cap value multiplies ε over the arc labels.
inline Scalar cap_value(const DiagramSum& d) {
  const AlgebraPtr& A = d.algebra();
  if (d.bottom() != 0) throw SizeMismatch("cap value needs a dTL(0, 2n) element");
  Scalar out(0);
  for (const auto& [diagram, coeff] : d.terms()) {
    Scalar prod = coeff;
    for (std::size_t k = 0; k < diagram.arc_count() && !prod.is_zero(); ++k)
      prod *= A->counit(A->basis(diagram.exps()[k]));
    out += prod;
  }
  return out;
}

inline Scalar cap_value(const SkeinElement& d) { return cap_value(d.value()); }

/// Class basis of Sk_α(ℍ,(2n,0)): one undotted and one dotted generator per
/// isomorphism class (walk sequence); all undotted generators come first.
struct ClassBasisElement {
  BitSequence walk;
  bool dotted = false;

  std::string label() const {
    return (dotted ? "ė[" : "e[") + bits_to_string(walk) + "]";
  }
};

inline std::vector<ClassBasisElement> class_basis(int n) {
  std::vector<ClassBasisElement> out;
  const auto walks = enumerate_classes(n);
  for (const auto& w : walks) out.push_back({w, false});
  for (const auto& w : walks) out.push_back({w, true});
  return out;
}

inline SkeinElement skein_of_class(const ClassBasisElement& cls) {
  const ArcPartition p = matching_of_walk(cls.walk);
  EndoElement e = partition_idempotent(p);
  if (cls.dotted) e = dot(e, 0);
  return SkeinElement(to_diagram_sum(e));
}

struct GramMatrix {
  std::vector<std::string> labels;
  std::vector<std::vector<Scalar>> entries;
  Scalar det = Scalar(0);
  bool perfect = false;  // det a Laurent unit
};

namespace detail {
inline Scalar determinant(std::vector<std::vector<Scalar>> m) {
  const std::size_t n = m.size();
  Scalar det(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col].is_zero()) ++piv;
    if (piv == n) return Scalar(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    const Scalar inv = m[col][col].inv();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      const Scalar f = m[r][col] * inv;
      for (std::size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}
}  // namespace detail

/// Gram matrix of the meridional pairing. Over A_α the class basis is used
/// for any n; over other algebras the decorated-cup basis of the rank-N
/// skein module is used, which is only a basis for n = 1.
inline GramMatrix gram_matrix(int n, const AlgebraPtr& A = builtin_alpha()) {
  GramMatrix g;
  std::vector<SkeinElement> basis;
  if (same_algebra(*A, *builtin_alpha())) {
    for (const auto& cls : class_basis(n)) {
      g.labels.push_back(cls.label());
      basis.push_back(skein_of_class(cls));
    }
  } else {
    if (n != 1)
      throw SizeMismatch(
          "gram matrix over a general algebra is only supported for n=1");
    for (std::size_t e = 0; e < A->rank(); ++e) {
      const Diagram cup = Diagram::cup(static_cast<std::uint8_t>(e));
      g.labels.push_back(cup.render());
      basis.push_back(SkeinElement(DiagramSum::single(A, cup)));
    }
  }
  g.entries.assign(basis.size(), std::vector<Scalar>(basis.size(), Scalar(0)));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j) {
      g.entries[i][j] = pairing(basis[i], basis[j]);
      g.entries[j][i] = g.entries[i][j];
    }
  g.det = detail::determinant(g.entries);
  g.perfect = is_unit(g.det, UnitMode::kLaurent);
  return g;
}

/// Copairing id ↦ Σ_e ½ e⊗e + (1/2α) ė⊗ė with explicit class-basis duals.
struct CopairTerm {
  SkeinElement left;
  SkeinElement right;
  Scalar coeff;
};

inline std::vector<CopairTerm> copairing(int n,
                                         const AlgebraPtr& A = builtin_alpha()) {
  if (!same_algebra(*A, *builtin_alpha())) {
    if (!gram_matrix(1, A).perfect)
      throw SingularPairing("pairing singular: algebra not strongly separable");
    throw std::invalid_argument(
        "copairing is only computed for algebra alpha");
  }
  const Scalar half(Rational(1, 2));
  const Scalar half_alpha = half * Scalar::alpha().inv();
  std::vector<CopairTerm> out;
  for (const auto& w : enumerate_classes(n)) {
    const SkeinElement e = skein_of_class({w, false});
    const SkeinElement de = skein_of_class({w, true});
    out.push_back({e, e, half});
    out.push_back({de, de, half_alpha});
  }
  return out;
}

/// The 2-handle Kirby color. The tensor form is always present; the dTL
/// presentation is carried by the routes that produce one.
struct KirbyColor {
  int n;
  TensorElement tensor;
  std::optional<DiagramSum> dtl;

  KirbyColor(int n_, TensorElement tensor_,
             std::optional<DiagramSum> dtl_ = std::nullopt)
      : n(n_), tensor(std::move(tensor_)), dtl(std::move(dtl_)) {}
};

namespace detail {
inline KirbyColor kirby_from_dtl(int n, DiagramSum d) {
  TensorElement t = embed_tensor(d);
  return KirbyColor(n, std::move(t), std::move(d));
}

inline DiagramSum empty_skein() {
  return DiagramSum::single(builtin_alpha(), Diagram::empty());
}
}  // namespace detail

/// Route 1: ω = (id ⊗ cap)(copairing) = Σ ½cap(e)·e + (1/2α)cap(ė)·ė.
inline KirbyColor kirby_copair(int n) {
  if (n < 0) throw SizeMismatch("kirby color needs n >= 0");
  if (n == 0) return detail::kirby_from_dtl(0, detail::empty_skein());
  DiagramSum total(builtin_alpha(), 0, 2 * n);
  for (const auto& term : copairing(n))
    total = total + (term.coeff * cap_value(term.right)) * term.left.value();
  return detail::kirby_from_dtl(n, std::move(total));
}

/// Super Catalan number S(a,b) = (2a)!(2b)!/(a!b!(a+b)!).
inline Rational super_catalan(int a, int b) {
  if (a < 0 || b < 0) throw SizeMismatch("super catalan needs a,b >= 0");
  auto fact = [](int k) {
    Rational r = 1;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
  };
  return fact(2 * a) * fact(2 * b) / (fact(a) * fact(b) * fact(a + b));
}

/// Von Szily's identity S(a,b) = Σ_k (−1)^k C(2a, a+k) C(2b, b−k).
inline bool von_szily_check(int a, int b) {
  Rational sum = 0;
  const int lim = std::max(a, b);
  for (int k = -lim; k <= lim; ++k) {
    const Rational term = binomial(2 * a, a + k) * binomial(2 * b, b - k);
    sum += (k % 2 == 0) ? term : -term;
  }
  return sum == super_catalan(a, b);
}

/// Route 2: closed form ω = (1/2^{2n}) Σ_k α^{−k} S(n−k,k) Σ_{|z|=2k} sign(z,k) T_z,
/// with sign(z,k) = +1 exactly when Σ_{i even} z_i ≡ k (mod 2) (1-based i).
inline KirbyColor kirby_closed_form(int n) {
  if (n < 0) throw SizeMismatch("kirby color needs n >= 0");
  const AlgebraPtr A = builtin_alpha();
  KirbyColor w(n, TensorElement(A, 2 * static_cast<std::size_t>(n)));
  const Scalar lead(Rational(1) / pow_2(2 * n));
  const Scalar alpha_inv = Scalar::alpha().inv();
  for (std::uint32_t z = 0; z < (1u << (2 * n)); ++z) {
    const int weight = std::popcount(z);
    if (weight % 2 != 0) continue;
    const int k = weight / 2;
    int even_positions = 0;  // 1-based positions 2, 4, ..., 2n
    for (int i = 1; i < 2 * n; i += 2) even_positions += (z >> i) & 1u;
    Scalar coeff = lead * Scalar(super_catalan(n - k, k)) * alpha_inv.pow(k);
    if (even_positions % 2 != k % 2) coeff = -coeff;
    TensorElement::Exps e(2 * static_cast<std::size_t>(n));
    for (int i = 0; i < 2 * n; ++i) e[i] = (z >> i) & 1u;
    w.tensor.accumulate(e, coeff);
  }
  return w;
}

/// Route 3: ω = (1/2^n) C(2n,n) · Sym_{2n} ∘ (sep-cup)^{⊗n} with the
/// separability cup (1/2α)·dotted cup.
inline KirbyColor kirby_symmetrizer(int n) {
  if (n < 0) throw SizeMismatch("kirby color needs n >= 0");
  const AlgebraPtr A = builtin_alpha();
  if (n == 0) return detail::kirby_from_dtl(0, detail::empty_skein());
  DiagramSum cups = DiagramSum::single(A, Diagram::cup(1));
  for (int i = 1; i < n; ++i)
    cups = tensor(cups, DiagramSum::single(A, Diagram::cup(1)));
  const Scalar scale = Scalar(binomial(2 * n, n) / pow_2(2 * n)) *
                       Scalar::alpha().inv().pow(n);
  return detail::kirby_from_dtl(n, scale * apply_symmetrizer(2 * n, cups));
}

/// Caps the Kirby color at the cyclic slot pair (position, position+1) —
/// including the wrap-around pair (2n, 1) — with a labeled annulus. An
/// undotted cap (label 1) annihilates ω, the x-labeled cap yields ω_{2n−2}.
inline KirbyColor annulus_cap(const KirbyColor& w, int position,
                              const AlgebraElement& label) {
  if (w.n < 1) throw SizeMismatch("annulus_cap needs n >= 1");
  if (position < 1 || position > 2 * w.n)
    throw IndexOutOfRange("cap position out of range");
  const int partner = position % (2 * w.n) + 1;
  const std::size_t i = static_cast<std::size_t>(std::min(position, partner)) - 1;
  const std::size_t j = static_cast<std::size_t>(std::max(position, partner)) - 1;
  return KirbyColor(w.n - 1, contract_slots(w.tensor, i, j, label));
}

}  // namespace frobskein
