#pragma once
// Presentations of free commutative Frobenius algebras A = (A, m, η, Δ, ε)
// in a monomial basis 1, x, …, x^{N-1}, together with the handle element
// H = m∘Δ(1), strong-separability tests and Frobenius dual bases.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "frobskein/scalar.hpp"

namespace frobskein {

using Scalar = RatFunc;

struct InvalidPresentation : std::domain_error {
  explicit InvalidPresentation(const std::string& msg)
      : std::domain_error("invalid Frobenius presentation: " + msg) {}
};
struct NonUnitParameter : std::domain_error {
  explicit NonUnitParameter(const std::string& msg)
      : std::domain_error("non-unit parameter: " + msg) {}
};
struct AlgebraMismatch : std::domain_error {
  AlgebraMismatch() : std::domain_error("elements belong to different algebras") {}
};
struct NotSeparable : std::domain_error {
  explicit NotSeparable(const std::string& name)
      : std::domain_error("algebra '" + name + "' is not strongly separable") {}
};

class FrobeniusPresentation;
using AlgebraPtr = std::shared_ptr<const FrobeniusPresentation>;

class AlgebraElement;
class TensorElement;

/// A free commutative Frobenius algebra in a monomial basis.  Immutable after
/// construction; the constructor-side factory validates all structure laws.
class FrobeniusPresentation : public std::enable_shared_from_this<FrobeniusPresentation> {
 public:
  using Coords = std::vector<Scalar>;                       // length-N coordinate vector
  using ComulEntry = std::tuple<std::uint8_t, std::uint8_t, Scalar>;

  struct Tables {
    std::string name;
    std::size_t rank = 0;
    std::size_t unit_index = 0;
    std::vector<std::vector<Coords>> mul;     // mul[i][j] = coords of x^i·x^j
    Coords counit;                            // ε on basis
    std::vector<std::vector<ComulEntry>> comul;  // Δ(x^i) = Σ c·x^j⊗x^k
  };

  /// Builds and validates a presentation; throws InvalidPresentation if any
  /// of associativity, commutativity, (co)unit, coassociativity,
  /// cocommutativity or the Frobenius relation fails on basis elements.
  static AlgebraPtr create(Tables tables);

  const std::string& name() const { return t_.name; }
  std::size_t rank() const { return t_.rank; }
  std::size_t unit_index() const { return t_.unit_index; }
  const Tables& tables() const { return t_; }

  AlgebraElement basis(std::size_t i) const;
  AlgebraElement zero() const;
  AlgebraElement unit() const;
  AlgebraElement mul(const AlgebraElement& a, const AlgebraElement& b) const;
  Scalar counit(const AlgebraElement& a) const;
  TensorElement comul(const AlgebraElement& a) const;

  friend bool same_algebra(const FrobeniusPresentation& a, const FrobeniusPresentation& b);

 private:
  explicit FrobeniusPresentation(Tables t) : t_(std::move(t)) {}
  void validate() const;
  Tables t_;
};

inline bool same_algebra(const FrobeniusPresentation& a, const FrobeniusPresentation& b) {
  if (&a == &b) return true;
  return a.t_.name == b.t_.name && a.t_.rank == b.t_.rank &&
         a.t_.unit_index == b.t_.unit_index && a.t_.counit == b.t_.counit &&
         a.t_.mul == b.t_.mul && a.t_.comul == b.t_.comul;
}

inline void require_same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (!a || !b || !same_algebra(*a, *b)) throw AlgebraMismatch();
}

/// Element of A in coordinates over the monomial basis.
class AlgebraElement {
 public:
  AlgebraElement(AlgebraPtr algebra, std::vector<Scalar> coords)
      : algebra_(std::move(algebra)), coords_(std::move(coords)) {
    if (coords_.size() != algebra_->rank())
      throw std::invalid_argument("AlgebraElement: wrong coordinate length");
  }

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<Scalar>& coords() const { return coords_; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }
  bool is_zero() const {
    for (const auto& c : coords_)
      if (!c.is_zero()) return false;
    return true;
  }

  friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_algebra(a.algebra_, b.algebra_);
    std::vector<Scalar> c(a.coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] + b.coords_[i];
    return AlgebraElement(a.algebra_, std::move(c));
  }
  friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_algebra(a.algebra_, b.algebra_);
    std::vector<Scalar> c(a.coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords_[i] - b.coords_[i];
    return AlgebraElement(a.algebra_, std::move(c));
  }
  friend AlgebraElement operator*(const Scalar& s, const AlgebraElement& a) {
    std::vector<Scalar> c(a.coords_.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * a.coords_[i];
    return AlgebraElement(a.algebra_, std::move(c));
  }
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
    return a.algebra_->mul(a, b);
  }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    require_same_algebra(a.algebra_, b.algebra_);
    return a.coords_ == b.coords_;
  }

  AlgebraElement pow(std::size_t e) const {
    AlgebraElement r = algebra_->unit();
    for (std::size_t i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  std::string render() const;

 private:
  AlgebraPtr algebra_;
  std::vector<Scalar> coords_;
};

/// Element of A^{⊗k}: sparse map from exponent vectors to coefficients.
/// Zero coefficients are never stored.
class TensorElement {
 public:
  using Exps = std::vector<std::uint8_t>;
  using Terms = std::map<Exps, Scalar>;

  TensorElement(AlgebraPtr algebra, std::size_t slots)
      : algebra_(std::move(algebra)), slots_(slots) {}

  /// 0-slot element representing the scalar c.
  static TensorElement scalar(AlgebraPtr algebra, Scalar c) {
    TensorElement t(std::move(algebra), 0);
    t.add_term({}, std::move(c));
    return t;
  }
  /// 1-slot element from an algebra element.
  static TensorElement from_element(const AlgebraElement& a) {
    TensorElement t(a.algebra(), 1);
    for (std::size_t i = 0; i < a.coords().size(); ++i)
      t.add_term({static_cast<std::uint8_t>(i)}, a[i]);
    return t;
  }

  const AlgebraPtr& algebra() const { return algebra_; }
  std::size_t slots() const { return slots_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exps& e, const Scalar& c) {
    if (e.size() != slots_) throw std::invalid_argument("TensorElement: bad exponent vector");
    accumulate(e, c);
  }
  void accumulate(const Exps& e, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend TensorElement operator+(const TensorElement& s, const TensorElement& t) {
    require_same_algebra(s.algebra_, t.algebra_);
    if (s.slots_ != t.slots_) throw std::invalid_argument("TensorElement: slot mismatch");
    TensorElement r = s;
    for (const auto& [e, c] : t.terms_) r.accumulate(e, c);
    return r;
  }
  friend TensorElement operator-(const TensorElement& s, const TensorElement& t) {
    return s + (Scalar(-1)) * t;
  }
  friend TensorElement operator*(const Scalar& c, const TensorElement& t) {
    TensorElement r(t.algebra_, t.slots_);
    if (c.is_zero()) return r;
    for (const auto& [e, v] : t.terms_) r.terms_.emplace(e, c * v);
    return r;
  }
  friend bool operator==(const TensorElement& s, const TensorElement& t) {
    require_same_algebra(s.algebra_, t.algebra_);
    return s.slots_ == t.slots_ && s.terms_ == t.terms_;
  }

  /// Tensor product, concatenating slots.
  friend TensorElement outer(const TensorElement& s, const TensorElement& t) {
    require_same_algebra(s.algebra_, t.algebra_);
    TensorElement r(s.algebra_, s.slots_ + t.slots_);
    for (const auto& [e1, c1] : s.terms_)
      for (const auto& [e2, c2] : t.terms_) {
        Exps e = e1;
        e.insert(e.end(), e2.begin(), e2.end());
        r.accumulate(e, c1 * c2);
      }
    return r;
  }

  /// Applies Δ at `slot`, producing a (k+1)-slot element; the two new slots
  /// occupy positions slot, slot+1.
  TensorElement comul_slot(std::size_t slot) const;

  /// Multiplies `slot` by a (expanding products in the basis).
  TensorElement mul_into_slot(std::size_t slot, const AlgebraElement& a) const;

  /// Slotwise (componentwise) product in A^{⊗k}.
  friend TensorElement slotwise_mul(const TensorElement& s, const TensorElement& t);

  /// Reorders slots: new slot i holds old slot perm[i].
  TensorElement permuted(const std::vector<std::size_t>& perm) const {
    TensorElement r(algebra_, slots_);
    for (const auto& [e, c] : terms_) {
      Exps ne(slots_);
      for (std::size_t i = 0; i < slots_; ++i) ne[i] = e[perm[i]];
      r.accumulate(ne, c);
    }
    return r;
  }

  std::string render() const;

 private:
  AlgebraPtr algebra_;
  std::size_t slots_;
  Terms terms_;
};

// ---------------------------------------------------------------------------
// FrobeniusPresentation member definitions.

inline AlgebraElement FrobeniusPresentation::basis(std::size_t i) const {
  std::vector<Scalar> c(t_.rank, Scalar(0));
  c.at(i) = Scalar(1);
  return AlgebraElement(shared_from_this(), std::move(c));
}
inline AlgebraElement FrobeniusPresentation::zero() const {
  return AlgebraElement(shared_from_this(), std::vector<Scalar>(t_.rank, Scalar(0)));
}
inline AlgebraElement FrobeniusPresentation::unit() const { return basis(t_.unit_index); }

inline AlgebraElement FrobeniusPresentation::mul(const AlgebraElement& a,
                                                 const AlgebraElement& b) const {
  require_same_algebra(a.algebra(), b.algebra());
  std::vector<Scalar> c(t_.rank, Scalar(0));
  for (std::size_t i = 0; i < t_.rank; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < t_.rank; ++j) {
      if (b[j].is_zero()) continue;
      const Scalar w = a[i] * b[j];
      const Coords& prod = t_.mul[i][j];
      for (std::size_t k = 0; k < t_.rank; ++k)
        if (!prod[k].is_zero()) c[k] += w * prod[k];
    }
  }
  return AlgebraElement(shared_from_this(), std::move(c));
}

inline Scalar FrobeniusPresentation::counit(const AlgebraElement& a) const {
  Scalar s(0);
  for (std::size_t i = 0; i < t_.rank; ++i)
    if (!a[i].is_zero()) s += a[i] * t_.counit[i];
  return s;
}

inline TensorElement FrobeniusPresentation::comul(const AlgebraElement& a) const {
  TensorElement t(shared_from_this(), 2);
  for (std::size_t i = 0; i < t_.rank; ++i) {
    if (a[i].is_zero()) continue;
    for (const auto& [j, k, c] : t_.comul[i]) t.accumulate({j, k}, a[i] * c);
  }
  return t;
}

inline TensorElement TensorElement::comul_slot(std::size_t slot) const {
  const auto& tbl = algebra_->tables().comul;
  TensorElement r(algebra_, slots_ + 1);
  for (const auto& [e, c] : terms_) {
    for (const auto& [j, k, w] : tbl[e[slot]]) {
      Exps ne;
      ne.reserve(slots_ + 1);
      ne.insert(ne.end(), e.begin(), e.begin() + static_cast<std::ptrdiff_t>(slot));
      ne.push_back(j);
      ne.push_back(k);
      ne.insert(ne.end(), e.begin() + static_cast<std::ptrdiff_t>(slot) + 1, e.end());
      r.accumulate(ne, c * w);
    }
  }
  return r;
}

inline TensorElement TensorElement::mul_into_slot(std::size_t slot,
                                                  const AlgebraElement& a) const {
  require_same_algebra(algebra_, a.algebra());
  const auto& mul = algebra_->tables().mul;
  const std::size_t rank = algebra_->rank();
  TensorElement r(algebra_, slots_);
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < rank; ++i) {
      if (a[i].is_zero()) continue;
      const auto& prod = mul[e[slot]][i];
      for (std::size_t k = 0; k < rank; ++k) {
        if (prod[k].is_zero()) continue;
        Exps ne = e;
        ne[slot] = static_cast<std::uint8_t>(k);
        r.accumulate(ne, c * a[i] * prod[k]);
      }
    }
  }
  return r;
}

inline TensorElement slotwise_mul(const TensorElement& s, const TensorElement& t) {
  require_same_algebra(s.algebra(), t.algebra());
  if (s.slots() != t.slots()) throw std::invalid_argument("slotwise_mul: slot mismatch");
  const auto& mul = s.algebra()->tables().mul;
  const std::size_t rank = s.algebra()->rank();
  TensorElement r(s.algebra(), s.slots());
  for (const auto& [e1, c1] : s.terms()) {
    for (const auto& [e2, c2] : t.terms()) {
      // Expand Π_slots x^{e1_s}·x^{e2_s} multilinearly.
      std::vector<std::pair<TensorElement::Exps, Scalar>> partial{{{}, c1 * c2}};
      for (std::size_t slot = 0; slot < s.slots(); ++slot) {
        std::vector<std::pair<TensorElement::Exps, Scalar>> next;
        const auto& prod = mul[e1[slot]][e2[slot]];
        for (const auto& [pe, pc] : partial)
          for (std::size_t k = 0; k < rank; ++k) {
            if (prod[k].is_zero()) continue;
            auto ne = pe;
            ne.push_back(static_cast<std::uint8_t>(k));
            next.emplace_back(std::move(ne), pc * prod[k]);
          }
        partial = std::move(next);
      }
      for (auto& [pe, pc] : partial) r.accumulate(pe, pc);
    }
  }
  return r;
}

inline void FrobeniusPresentation::validate() const {
  const std::size_t n = t_.rank;
  if (n == 0) throw InvalidPresentation("rank must be positive");
  if (t_.unit_index >= n || t_.mul.size() != n || t_.counit.size() != n ||
      t_.comul.size() != n)
    throw InvalidPresentation("table sizes inconsistent with rank");
  for (const auto& row : t_.mul) {
    if (row.size() != n) throw InvalidPresentation("mul table not square");
    for (const auto& c : row)
      if (c.size() != n) throw InvalidPresentation("mul entry has wrong length");
  }

  auto fail = [&](const std::string& law) { throw InvalidPresentation(law + " fails"); };

  for (std::size_t i = 0; i < n; ++i) {
    if (!(basis(t_.unit_index) * basis(i) == basis(i))) fail("unit law");
    for (std::size_t j = 0; j < n; ++j) {
      if (!(basis(i) * basis(j) == basis(j) * basis(i))) fail("commutativity");
      for (std::size_t k = 0; k < n; ++k)
        if (!((basis(i) * basis(j)) * basis(k) == basis(i) * (basis(j) * basis(k))))
          fail("associativity");
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const TensorElement d = comul(basis(i));
    // Counit law (both sides).
    AlgebraElement left = zero(), right = zero();
    for (const auto& [e, c] : d.terms()) {
      left = left + (c * t_.counit[e[0]]) * basis(e[1]);
      right = right + (c * t_.counit[e[1]]) * basis(e[0]);
    }
    if (!(left == basis(i)) || !(right == basis(i))) fail("counit law");
    // Cocommutativity.
    if (!(d.permuted({1, 0}) == d)) fail("cocommutativity");
    // Coassociativity.
    if (!(d.comul_slot(0) == d.comul_slot(1))) fail("coassociativity");
  }
  // Frobenius relation on basis pairs: (id⊗m)(Δ(x^i)⊗x^j) = Δ(x^i·x^j)
  //                                  = (m⊗id)(x^i⊗Δ(x^j)).
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const TensorElement lhs = comul(basis(i)).mul_into_slot(1, basis(j));
      const TensorElement mid = comul(basis(i) * basis(j));
      const TensorElement rhs = comul(basis(j)).mul_into_slot(0, basis(i));
      if (!(lhs == mid) || !(rhs == mid)) fail("Frobenius relation");
    }
}

inline AlgebraPtr FrobeniusPresentation::create(Tables tables) {
  auto p = AlgebraPtr(new FrobeniusPresentation(std::move(tables)));
  p->validate();
  return p;
}

// ---------------------------------------------------------------------------
// Module operations.

/// H = m∘Δ(1), the handle element.
inline AlgebraElement handle_element(const AlgebraPtr& A) {
  AlgebraElement h = A->zero();
  const TensorElement d1 = A->comul(A->unit());
  for (const auto& [e, c] : d1.terms()) h = h + c * (A->basis(e[0]) * A->basis(e[1]));
  return h;
}

namespace detail {

// Solves the N×N linear system (mult-by-H) y = 1 over Q(a); nullopt if singular.
inline std::optional<std::vector<Scalar>> solve_mult_inverse(const AlgebraPtr& A,
                                                             const AlgebraElement& h) {
  const std::size_t n = A->rank();
  // aug[r][c] = coefficient of x^r in H·x^c, augmented with unit coords.
  std::vector<std::vector<Scalar>> aug(n, std::vector<Scalar>(n + 1, Scalar(0)));
  for (std::size_t c = 0; c < n; ++c) {
    const AlgebraElement col = h * A->basis(c);
    for (std::size_t r = 0; r < n; ++r) aug[r][c] = col[r];
  }
  aug[A->unit_index()][n] = Scalar(1);

  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && aug[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;  // singular multiplication matrix
    std::swap(aug[piv], aug[row]);
    const Scalar inv = aug[row][col].inv();
    for (auto& x : aug[row]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || aug[r][col].is_zero()) continue;
      const Scalar f = aug[r][col];
      for (std::size_t c2 = col; c2 <= n; ++c2) aug[r][c2] -= f * aug[row][c2];
    }
    ++row;
  }
  if (row < n) return std::nullopt;
  std::vector<Scalar> y(n);
  for (std::size_t r = 0; r < n; ++r) y[r] = aug[r][n];
  return y;
}

}  // namespace detail

/// H^{-1} when H is invertible over the Laurent subring Q[a^{±1}];
/// nullopt otherwise.
inline std::optional<AlgebraElement> handle_inverse(const AlgebraPtr& A) {
  auto y = detail::solve_mult_inverse(A, handle_element(A));
  if (!y) return std::nullopt;
  // Membership in the Laurent subring: canonical denominators are powers of a.
  for (const auto& c : *y)
    if (!c.is_zero() && !c.den().is_monomial()) return std::nullopt;
  return AlgebraElement(A, std::move(*y));
}

inline bool is_strongly_separable(const AlgebraPtr& A) {
  return handle_inverse(A).has_value();
}

/// β(a,b) = ε(m(a,b)), the Frobenius pairing.
inline Scalar frobenius_pairing(const AlgebraElement& a, const AlgebraElement& b) {
  require_same_algebra(a.algebra(), b.algebra());
  return a.algebra()->counit(a * b);
}

/// Bases (x_i), (y_i) with Δ(1) = Σ_i x_i⊗y_i and β(x_i, y_j) = δ_{ij}.
inline std::pair<std::vector<AlgebraElement>, std::vector<AlgebraElement>> dual_bases(
    const AlgebraPtr& A) {
  const std::size_t n = A->rank();
  std::vector<AlgebraElement> xs, ys;
  xs.reserve(n);
  ys.reserve(n);
  const TensorElement d1 = A->comul(A->unit());
  for (std::size_t i = 0; i < n; ++i) {
    xs.push_back(A->basis(i));
    AlgebraElement y = A->zero();
    for (const auto& [e, c] : d1.terms())
      if (e[0] == i) y = y + c * A->basis(e[1]);
    ys.push_back(std::move(y));
  }
  return {std::move(xs), std::move(ys)};
}

/// The separability idempotent e = Δ(H^{-1}).
inline TensorElement separability_idempotent(const AlgebraPtr& A) {
  auto hinv = handle_inverse(A);
  if (!hinv) throw NotSeparable(A->name());
  return A->comul(*hinv);
}

/// Δ^{(k)}: A → A^{⊗k}; k=0 is ε, k=1 the identity.
inline TensorElement iterated_comul(const AlgebraElement& a, std::size_t k) {
  if (k == 0) return TensorElement::scalar(a.algebra(), a.algebra()->counit(a));
  TensorElement t = TensorElement::from_element(a);
  for (std::size_t i = 1; i < k; ++i) t = t.comul_slot(0);
  return t;
}

/// Contracts slots i < j (0-based) with the weight ε(x^b·x^c·label), the
/// tensor-level image of capping boundary points i,j with a label-decorated
/// arc: by the counit law this sends Δ(ℓ) on (i,j) to ε(H·ℓ·label) (loop) and
/// Δ(ℓ₁)⊗Δ(ℓ₂) across (i,·),(j,·) to Δ(ℓ₁ℓ₂·label) on the remaining slots.
inline TensorElement contract_slots(const TensorElement& t, std::size_t i, std::size_t j,
                                    const AlgebraElement& label) {
  if (i >= j || j >= t.slots()) throw std::invalid_argument("contract_slots: bad slots");
  require_same_algebra(t.algebra(), label.algebra());
  const AlgebraPtr& A = t.algebra();
  TensorElement r(A, t.slots() - 2);
  for (const auto& [e, c] : t.terms()) {
    const Scalar w = A->counit(A->basis(e[i]) * A->basis(e[j]) * label);
    if (w.is_zero()) continue;
    TensorElement::Exps ne;
    ne.reserve(t.slots() - 2);
    for (std::size_t s = 0; s < t.slots(); ++s)
      if (s != i && s != j) ne.push_back(e[s]);
    r.accumulate(ne, c * w);
  }
  return r;
}

/// Folds all slots with m; a 0-slot element c yields c·1 (unit η).
inline AlgebraElement multi_mul(const TensorElement& t) {
  const AlgebraPtr& A = t.algebra();
  AlgebraElement r = A->zero();
  for (const auto& [e, c] : t.terms()) {
    AlgebraElement p = A->unit();
    for (const std::uint8_t i : e) p = p * A->basis(i);
    r = r + c * p;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Builtin algebras.

namespace detail {

inline FrobeniusPresentation::Tables quotient_tables(std::string name, std::size_t N,
                                                     const Scalar& xN) {
  // k[x]/(x^N − xN·1) with the monomial basis; mul reduces powers by x^N = xN.
  FrobeniusPresentation::Tables t;
  t.name = std::move(name);
  t.rank = N;
  t.unit_index = 0;
  t.mul.assign(N, std::vector<FrobeniusPresentation::Coords>(
                      N, FrobeniusPresentation::Coords(N, Scalar(0))));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      if (i + j < N)
        t.mul[i][j][i + j] = Scalar(1);
      else
        t.mul[i][j][i + j - N] = xN;
    }
  return t;
}

}  // namespace detail

/// A_α = k[x]/(x² − α): ε(1)=0, ε(x)=1, Δ(1)=1⊗x+x⊗1, Δ(x)=x⊗x+α·1⊗1.
inline AlgebraPtr builtin_alpha() {
  static const AlgebraPtr cached = [] {
    auto t = detail::quotient_tables("alpha", 2, Scalar::alpha());
    t.counit = {Scalar(0), Scalar(1)};
    t.comul = {{{0, 1, Scalar(1)}, {1, 0, Scalar(1)}},
               {{1, 1, Scalar(1)}, {0, 0, Scalar::alpha()}}};
    return FrobeniusPresentation::create(std::move(t));
  }();
  return cached;
}

/// A_BN = k[x]/(x²): same counit as A_α but x² = 0, Δ(x) = x⊗x.
inline AlgebraPtr builtin_bar_natan() {
  static const AlgebraPtr cached = [] {
    auto t = detail::quotient_tables("bar_natan", 2, Scalar(0));
    t.counit = {Scalar(0), Scalar(1)};
    t.comul = {{{0, 1, Scalar(1)}, {1, 0, Scalar(1)}}, {{1, 1, Scalar(1)}}};
    return FrobeniusPresentation::create(std::move(t));
  }();
  return cached;
}

/// k^u = k·1 with ε(1)=u, Δ(1)=u^{-1}·1⊗1; u must be a Laurent unit.
inline AlgebraPtr builtin_trivial(const Scalar& u) {
  if (!u.is_laurent_unit()) throw NonUnitParameter("trivial(u) needs a Laurent unit u");
  FrobeniusPresentation::Tables t;
  t.name = "trivial";
  t.rank = 1;
  t.unit_index = 0;
  t.mul = {{FrobeniusPresentation::Coords{Scalar(1)}}};
  t.counit = {u};
  t.comul = {{{0, 0, u.inv()}}};
  return FrobeniusPresentation::create(std::move(t));
}

/// A_β = k[x]/(x^N − β) with β realized as the formal variable α:
/// ε(x^k) = δ_{k,N−1}, Δ(1) = Σ_{i=0}^{N−1} x^{N−1−i}⊗x^i.
inline AlgebraPtr builtin_beta(std::size_t N) {
  if (N < 2) throw NonUnitParameter("beta(N) needs N >= 2");
  auto t = detail::quotient_tables("beta" + std::to_string(N), N, Scalar::alpha());
  t.counit.assign(N, Scalar(0));
  t.counit[N - 1] = Scalar(1);
  // Δ(x^j) = Δ(1)·(1⊗x^j), reducing x^{i+j} by x^N = α.
  t.comul.assign(N, {});
  for (std::size_t j = 0; j < N; ++j)
    for (std::size_t i = 0; i < N; ++i) {
      const std::size_t left = N - 1 - i;
      std::size_t right = i + j;
      Scalar c(1);
      if (right >= N) {
        right -= N;
        c = Scalar::alpha();
      }
      t.comul[j].push_back({static_cast<std::uint8_t>(left),
                            static_cast<std::uint8_t>(right), std::move(c)});
    }
  return FrobeniusPresentation::create(std::move(t));
}

/// Name-based dispatcher used by the CLI: "alpha", "bar_natan",
/// "trivial" (parameter u), "beta" (parameter N).
inline AlgebraPtr builtin_algebra(const std::string& which, const Scalar& u = Scalar(1),
                                  std::size_t N = 2) {
  if (which == "alpha") return builtin_alpha();
  if (which == "bar_natan") return builtin_bar_natan();
  if (which == "trivial") return builtin_trivial(u);
  if (which == "beta") return builtin_beta(N);
  throw std::invalid_argument("unknown builtin algebra: " + which);
}

// ---------------------------------------------------------------------------
// Rendering.

inline std::string AlgebraElement::render() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string mono = i == 0 ? "1" : (i == 1 ? "x" : "x^" + std::to_string(i));
    os << "(" << coords_[i].render() << ")*" << mono;
  }
  return first ? "0" : os.str();
}

inline std::string TensorElement::render() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    auto [neg, abs] = c.render_pretty_signed();
    os << (first ? (neg ? "-" : "") : (neg ? " - " : " + "));
    first = false;
    bool all_zero = true;
    for (auto v : e) all_zero &= (v == 0);
    const bool coeff_is_one = (abs == "1");
    if (!coeff_is_one || all_zero || slots_ == 0) os << abs;
    if (slots_ > 0 && !all_zero) {
      if (!coeff_is_one) os << " * ";
      for (std::size_t i = 0; i < slots_; ++i) {
        if (i) os << "⊗";  // ⊗
        os << (e[i] == 0 ? "1" : (e[i] == 1 ? "x" : "x^" + std::to_string(e[i])));
      }
    }
  }
  return os.str();
}

/// Optional degree-check utility: with deg(x)=2 and deg(a)=4, returns the
/// common homogeneous degree of all terms, or nullopt if inhomogeneous or a
/// coefficient is not a Laurent monomial.
inline std::optional<long> homogeneous_degree(const TensorElement& t) {
  std::optional<long> deg;
  for (const auto& [e, c] : t.terms()) {
    auto parts = c.laurent_parts();
    if (!parts) return std::nullopt;
    long d = 4 * parts->second;
    for (auto v : e) d += 2 * static_cast<long>(v);
    if (deg && *deg != d) return std::nullopt;
    deg = d;
  }
  return deg;
}

}  // namespace frobskein
