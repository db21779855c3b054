#pragma once

// Abstract evaluation of decorated surfaces: each component C contributes
// Δ^{|π₀(∂C)|}(m(H^{g(C)}, ℓ(C))) with g(C) = 1 − (χ(C)+|π₀(∂C)|)/2, and
// punctured components fold their inputs with multiplication first.

#include <cctype>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "frobskein/frobenius.hpp"

namespace frobskein {

class TypeBetaComponent : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SlotMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnsupportedShape : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// One decorated surface component, described abstractly by its Euler
/// characteristic, boundary-circle count, orientability, algebra label, and
/// puncture count. Unorientable components with χ + |∂| odd (type β) are
/// constructible but rejected by evaluation.
class SurfaceComponent {
 public:
  SurfaceComponent(int euler_char, int boundary_count, bool orientable,
                   AlgebraElement label, int punctures = 0)
      : euler_char_(euler_char),
        boundary_count_(boundary_count),
        orientable_(orientable),
        label_(std::move(label)),
        punctures_(punctures) {
    if (boundary_count < 0 || punctures < 0)
      throw std::invalid_argument("surface component: negative count");
    const int chb = euler_char + boundary_count;
    if (orientable && (euler_char > 2 || chb % 2 != 0))
      throw std::invalid_argument(
          "surface component: not an orientable surface");
    if (is_even(chb) && chb > 2)
      throw std::invalid_argument("surface component: negative genus");
  }

  int euler_char() const { return euler_char_; }
  int boundary_count() const { return boundary_count_; }
  bool orientable() const { return orientable_; }
  const AlgebraElement& label() const { return label_; }
  int punctures() const { return punctures_; }

  bool type_beta() const {
    return !orientable_ && !is_even(euler_char_ + boundary_count_);
  }
  /// g = 1 − (χ + |∂|)/2; only meaningful for type α/γ components.
  int genus() const {
    if (type_beta())
      throw TypeBetaComponent("type-beta component has no integer genus");
    return 1 - (euler_char_ + boundary_count_) / 2;
  }

 private:
  static bool is_even(int v) { return ((v % 2) + 2) % 2 == 0; }

  int euler_char_;
  int boundary_count_;
  bool orientable_;
  AlgebraElement label_;
  int punctures_;
};

/// A disjoint union of components together with bijections of their boundary
/// circles onto output slots 1..B and of their punctures onto input slots
/// 1..P. Omitted slot maps default to sequential assignment.
class SurfacePresentation {
 public:
  using SlotMap = std::vector<std::vector<int>>;

  explicit SurfacePresentation(
      AlgebraPtr algebra, std::vector<SurfaceComponent> components = {},
      std::optional<SlotMap> boundary_slots = std::nullopt,
      std::optional<SlotMap> puncture_slots = std::nullopt)
      : algebra_(std::move(algebra)), components_(std::move(components)) {
    for (const auto& c : components_)
      require_same_algebra(algebra_, c.label().algebra());
    int b = 0, p = 0;
    for (const auto& c : components_) {
      b += c.boundary_count();
      p += c.punctures();
    }
    total_boundary_ = b;
    total_punctures_ = p;
    boundary_slots_ = boundary_slots
                          ? validated(*boundary_slots, b, "boundary",
                                      [](const SurfaceComponent& c) {
                                        return c.boundary_count();
                                      })
                          : sequential([](const SurfaceComponent& c) {
                              return c.boundary_count();
                            });
    puncture_slots_ =
        puncture_slots
            ? validated(*puncture_slots, p, "puncture",
                        [](const SurfaceComponent& c) { return c.punctures(); })
            : sequential(
                  [](const SurfaceComponent& c) { return c.punctures(); });
  }

  const AlgebraPtr& algebra() const { return algebra_; }
  const std::vector<SurfaceComponent>& components() const {
    return components_;
  }
  const SlotMap& boundary_slots() const { return boundary_slots_; }
  const SlotMap& puncture_slots() const { return puncture_slots_; }
  int total_boundary() const { return total_boundary_; }
  int total_punctures() const { return total_punctures_; }

  /// The same components with all punctures removed.
  SurfacePresentation stripped() const {
    std::vector<SurfaceComponent> comps;
    for (const auto& c : components_)
      comps.push_back(SurfaceComponent(c.euler_char(), c.boundary_count(),
                                       c.orientable(), c.label(), 0));
    return SurfacePresentation(algebra_, std::move(comps), boundary_slots_);
  }

 private:
  template <class Count>
  SlotMap sequential(Count count) const {
    SlotMap map;
    int next = 1;
    for (const auto& c : components_) {
      std::vector<int> slots;
      for (int i = 0; i < count(c); ++i) slots.push_back(next++);
      map.push_back(std::move(slots));
    }
    return map;
  }

  template <class Count>
  SlotMap validated(SlotMap map, int total, const std::string& kind,
                    Count count) const {
    if (map.size() != components_.size())
      throw SlotMismatch(kind + " slot map: one entry per component required");
    std::vector<bool> seen(static_cast<std::size_t>(total), false);
    for (std::size_t c = 0; c < map.size(); ++c) {
      if (static_cast<int>(map[c].size()) != count(components_[c]))
        throw SlotMismatch(kind + " slot map: arity mismatch on a component");
      for (int s : map[c]) {
        if (s < 1 || s > total || seen[s - 1])
          throw SlotMismatch(kind + " slot map: not a bijection onto 1.." +
                             std::to_string(total));
        seen[s - 1] = true;
      }
    }
    return map;
  }

  AlgebraPtr algebra_;
  std::vector<SurfaceComponent> components_;
  SlotMap boundary_slots_;
  SlotMap puncture_slots_;
  int total_boundary_ = 0;
  int total_punctures_ = 0;
};

/// Δ^{b}: Δ⁰ = ε (scalar), Δ¹ = id, Δ^{b} = iterated comultiplication.
inline TensorElement iterated_comul(const AlgebraElement& a, int b) {
  const AlgebraPtr& A = a.algebra();
  if (b < 0) throw SlotMismatch("negative boundary count");
  if (b == 0) return TensorElement::scalar(A, A->counit(a));
  TensorElement t = TensorElement::from_element(a);
  for (int i = 1; i < b; ++i) t = t.comul_slot(0);
  return t;
}

/// eval_A(S,P): fold each component's puncture inputs with m, multiply by
/// H^{g}·ℓ, apply Δ^{|∂|}, and tensor the results into the boundary slots.
inline TensorElement eval_punctured(const SurfacePresentation& S,
                                    const TensorElement& inputs) {
  const AlgebraPtr& A = S.algebra();
  require_same_algebra(A, inputs.algebra());
  if (static_cast<int>(inputs.slots()) != S.total_punctures())
    throw SlotMismatch("inputs must have one slot per puncture");
  for (const auto& c : S.components())
    if (c.type_beta())
      throw TypeBetaComponent("type-beta component cannot be evaluated");

  const AlgebraElement H = handle_element(A);
  TensorElement out(A, static_cast<std::size_t>(S.total_boundary()));
  for (const auto& [exps, coeff] : inputs.terms()) {
    // Per input term the components decouple; expand their outer product
    // directly into the globally assigned boundary slots.
    std::vector<std::pair<TensorElement::Exps, Scalar>> partial;
    partial.push_back({TensorElement::Exps(
                           static_cast<std::size_t>(S.total_boundary()), 0),
                       coeff});
    for (std::size_t c = 0; c < S.components().size() && !partial.empty();
         ++c) {
      const SurfaceComponent& comp = S.components()[c];
      AlgebraElement a =
          H.pow(static_cast<std::size_t>(comp.genus())) * comp.label();
      for (int slot : S.puncture_slots()[c]) a = a * A->basis(exps[slot - 1]);
      const TensorElement t = iterated_comul(a, comp.boundary_count());
      std::vector<std::pair<TensorElement::Exps, Scalar>> next;
      for (const auto& [ge, gc] : partial)
        for (const auto& [te, tc] : t.terms()) {
          TensorElement::Exps merged = ge;
          for (std::size_t i = 0; i < te.size(); ++i)
            merged[S.boundary_slots()[c][i] - 1] = te[i];
          next.push_back({std::move(merged), gc * tc});
        }
      partial = std::move(next);
    }
    for (const auto& [e, v] : partial) out.accumulate(e, v);
  }
  return out;
}

/// eval_A(S) on puncture-free presentations.
inline TensorElement eval_surface(const SurfacePresentation& S) {
  if (S.total_punctures() != 0)
    throw SlotMismatch("eval_surface requires a puncture-free presentation");
  return eval_punctured(S, TensorElement::scalar(S.algebra(), Scalar(1)));
}

/// Evaluation of skein classes for the supported ambient shapes. Closed
/// shapes (S³, S¹×S²) only accept closed surfaces and return scalars.
inline TensorElement skein_eval(const std::string& shape,
                                const SurfacePresentation& S) {
  const bool closed = (shape == "S3" || shape == "S1xS2");
  if (!closed && shape != "B3" && shape != "ball" && shape != "solid_torus")
    throw UnsupportedShape("unsupported shape: " + shape);
  if (closed && S.total_boundary() != 0)
    throw SlotMismatch("closed-manifold shapes need closed surfaces");
  return eval_surface(S);
}

/// Parses an algebra element from text: a sum of terms `[<scalar>*]x[^k]`
/// or bare scalars, e.g. "x", "1", "2*x + 1", "x^2".
inline AlgebraElement parse_element(const AlgebraPtr& A,
                                    const std::string& text) {
  AlgebraElement out = Scalar(0) * A->unit();
  std::size_t i = 0;
  const auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
      ++i;
  };
  skip_ws();
  if (i == text.size())
    throw std::invalid_argument("empty algebra element text");
  bool first = true;
  while (i < text.size()) {
    bool negate = false;
    skip_ws();
    if (!first || text[i] == '+' || text[i] == '-') {
      if (i >= text.size() || (text[i] != '+' && text[i] != '-'))
        throw std::invalid_argument("expected + or - in element text");
      negate = text[i] == '-';
      ++i;
      skip_ws();
    }
    first = false;
    // Scan one term: up to the next top-level + or -.
    std::size_t start = i;
    int depth = 0;
    while (i < text.size()) {
      const char ch = text[i];
      if (ch == '(') ++depth;
      if (ch == ')') --depth;
      if (depth == 0 && (ch == '+' || ch == '-') && i > start) break;
      ++i;
    }
    std::string term = text.substr(start, i - start);
    while (!term.empty() &&
           std::isspace(static_cast<unsigned char>(term.back())))
      term.pop_back();
    if (term.empty()) throw std::invalid_argument("empty term in element text");
    // Split an optional scalar factor from a trailing monomial 1, x, x^k.
    const auto monomial_exp =
        [](const std::string& tok) -> std::optional<std::size_t> {
      if (tok == "1") return 0;
      if (tok == "x") return 1;
      if (tok.size() > 2 && tok[0] == 'x' && tok[1] == '^') {
        for (std::size_t k = 2; k < tok.size(); ++k)
          if (!std::isdigit(static_cast<unsigned char>(tok[k])))
            return std::nullopt;
        return std::stoul(tok.substr(2));
      }
      return std::nullopt;
    };
    const auto trim = [](std::string s) {
      while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
        s.pop_back();
      std::size_t k = 0;
      while (k < s.size() && std::isspace(static_cast<unsigned char>(s[k])))
        ++k;
      return s.substr(k);
    };
    std::string coeff_text = "1";
    std::size_t exp = 0;
    std::size_t split = std::string::npos;
    int tdepth = 0;
    for (std::size_t k = 0; k < term.size(); ++k) {
      if (term[k] == '(') ++tdepth;
      if (term[k] == ')') --tdepth;
      if (term[k] == '*' && tdepth == 0) split = k;
    }
    std::optional<std::size_t> tail_exp;
    if (split != std::string::npos)
      tail_exp = monomial_exp(trim(term.substr(split + 1)));
    if (tail_exp) {
      coeff_text = trim(term.substr(0, split));
      exp = *tail_exp;
    } else if (auto whole = monomial_exp(trim(term))) {
      exp = *whole;
    } else {
      coeff_text = trim(term);
    }
    // Strip one matched layer of outer parentheses (the element renderer
    // parenthesizes every coefficient).
    while (coeff_text.size() >= 2 && coeff_text.front() == '(' &&
           coeff_text.back() == ')') {
      int depth = 0;
      bool outer = true;
      for (std::size_t k = 0; k + 1 < coeff_text.size(); ++k) {
        if (coeff_text[k] == '(') ++depth;
        if (coeff_text[k] == ')') --depth;
        if (depth == 0) {
          outer = false;
          break;
        }
      }
      if (!outer) break;
      coeff_text = coeff_text.substr(1, coeff_text.size() - 2);
    }
    Scalar coeff = Scalar::parse(coeff_text);
    if (negate) coeff = -coeff;
    if (exp > 0 && A->rank() < 2)
      throw std::invalid_argument("algebra has no generator x");
    const AlgebraElement mono_el = exp == 0 ? A->unit() : A->basis(1).pow(exp);
    out = out + coeff * mono_el;
  }
  return out;
}

}  // namespace frobskein
