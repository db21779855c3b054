#pragma once
// The decorated Temperley–Lieb category dTL_A: planar diagrams with per-arc
// basis decorations, linear combinations, composition with eager closed-loop
// evaluation, horizontal tensor, crossings, symmetrizers, and the canonical
// tensor embedding of dTL_A(0,2n) into A^{⊗2n}.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "frobskein/frobenius.hpp"

namespace frobskein {

struct BoundaryMismatch : std::domain_error {
  explicit BoundaryMismatch(const std::string& msg)
      : std::domain_error("boundary mismatch: " + msg) {}
};
struct IndexOutOfRange : std::out_of_range {
  explicit IndexOutOfRange(const std::string& msg)
      : std::out_of_range("index out of range: " + msg) {}
};
struct InvalidDiagram : std::domain_error {
  explicit InvalidDiagram(const std::string& msg)
      : std::domain_error("invalid diagram: " + msg) {}
};

/// A single decorated planar diagram in dTL(m,n) (no closed loops).
///
/// Boundary points carry indices 1..m+n: bottom 1..m left→right, then the top
/// points indexed m+1..m+n left→right, so that the counterclockwise boundary
/// order of the square is 1,…,m, m+n, m+n−1, …, m+1.  Each arc joins two
/// boundary points and carries a basis exponent (decoration x^e).
class Diagram {
 public:
  using Arc = std::pair<int, int>;  // endpoints, first < second

  Diagram(int bottom, int top, std::vector<std::pair<Arc, std::uint8_t>> arcs)
      : bottom_(bottom), top_(top) {
    const int total = bottom_ + top_;
    if (bottom_ < 0 || top_ < 0 || total % 2 != 0)
      throw InvalidDiagram("boundary counts must be nonnegative with even sum");
    std::sort(arcs.begin(), arcs.end());
    endpoints_.reserve(arcs.size());
    exps_.reserve(arcs.size());
    partner_.assign(static_cast<std::size_t>(total) + 1, 0);
    arc_index_.assign(static_cast<std::size_t>(total) + 1, -1);
    for (const auto& [arc, e] : arcs) {
      auto [i, j] = arc;
      if (i >= j || i < 1 || j > total) throw InvalidDiagram("bad arc endpoints");
      if (partner_[static_cast<std::size_t>(i)] || partner_[static_cast<std::size_t>(j)])
        throw InvalidDiagram("boundary point used twice");
      partner_[static_cast<std::size_t>(i)] = j;
      partner_[static_cast<std::size_t>(j)] = i;
      arc_index_[static_cast<std::size_t>(i)] = static_cast<int>(endpoints_.size());
      arc_index_[static_cast<std::size_t>(j)] = static_cast<int>(endpoints_.size());
      endpoints_.push_back(arc);
      exps_.push_back(e);
    }
    if (2 * endpoints_.size() != static_cast<std::size_t>(total))
      throw InvalidDiagram("matching is not perfect");
    if (!non_crossing()) throw InvalidDiagram("matching crosses");
  }

  static Diagram identity(int m) {
    std::vector<std::pair<Arc, std::uint8_t>> arcs;
    for (int i = 1; i <= m; ++i) arcs.push_back({{i, m + i}, 0});
    return Diagram(m, m, std::move(arcs));
  }
  static Diagram empty() { return Diagram(0, 0, {}); }
  /// 0→2 cup with decoration x^e.
  static Diagram cup(std::uint8_t e = 0) { return Diagram(0, 2, {{{1, 2}, e}}); }
  /// 2→0 cap with decoration x^e.
  static Diagram cap(std::uint8_t e = 0) { return Diagram(2, 0, {{{1, 2}, e}}); }

  int bottom() const { return bottom_; }
  int top() const { return top_; }
  std::size_t arc_count() const { return endpoints_.size(); }
  const std::vector<Arc>& endpoints() const { return endpoints_; }
  const std::vector<std::uint8_t>& exps() const { return exps_; }
  int partner(int point) const { return partner_[static_cast<std::size_t>(point)]; }
  int arc_at(int point) const { return arc_index_[static_cast<std::size_t>(point)]; }
  std::uint8_t exp_of_arc(int arc) const { return exps_[static_cast<std::size_t>(arc)]; }

  /// Same arcs, decoration of one arc replaced.
  Diagram with_exp(int arc, std::uint8_t e) const {
    std::vector<std::pair<Arc, std::uint8_t>> arcs;
    for (std::size_t k = 0; k < endpoints_.size(); ++k)
      arcs.push_back({endpoints_[k], static_cast<int>(k) == arc ? e : exps_[k]});
    return Diagram(bottom_, top_, std::move(arcs));
  }

  friend bool operator==(const Diagram& a, const Diagram& b) {
    return a.bottom_ == b.bottom_ && a.top_ == b.top_ &&
           a.endpoints_ == b.endpoints_ && a.exps_ == b.exps_;
  }
  /// Orders by boundary type, then matching, then decorations.
  friend bool operator<(const Diagram& a, const Diagram& b) {
    return std::tie(a.bottom_, a.top_, a.endpoints_, a.exps_) <
           std::tie(b.bottom_, b.top_, b.endpoints_, b.exps_);
  }

  /// Text form `m:n | (i-j)^e ...`, arcs by left endpoint.
  std::string render() const {
    std::ostringstream os;
    os << bottom_ << ":" << top_ << " |";
    for (std::size_t k = 0; k < endpoints_.size(); ++k)
      os << " (" << endpoints_[k].first << "-" << endpoints_[k].second << ")^"
         << static_cast<int>(exps_[k]);
    return os.str();
  }
  static Diagram parse(const std::string& text);

 private:
  // Position of a boundary index in the counterclockwise order.
  int ccw_pos(int index) const {
    return index <= bottom_ ? index : bottom_ + (top_ - (index - bottom_) + 1);
  }
  bool non_crossing() const {
    const int total = bottom_ + top_;
    std::vector<int> index_at(static_cast<std::size_t>(total) + 1);
    for (int i = 1; i <= total; ++i) index_at[static_cast<std::size_t>(ccw_pos(i))] = i;
    std::vector<int> stack;
    for (int p = 1; p <= total; ++p) {
      const int i = index_at[static_cast<std::size_t>(p)];
      const int j = partner(i);
      if (ccw_pos(j) > p) {
        stack.push_back(i);
      } else {
        if (stack.empty() || stack.back() != j) return false;
        stack.pop_back();
      }
    }
    return stack.empty();
  }

  int bottom_, top_;
  std::vector<Arc> endpoints_;
  std::vector<std::uint8_t> exps_;
  std::vector<int> partner_;
  std::vector<int> arc_index_;
};

inline Diagram Diagram::parse(const std::string& text) {
  std::istringstream is(text);
  int m = 0, n = 0;
  char c = 0;
  if (!(is >> m >> c) || c != ':') throw InvalidDiagram("expected m:n");
  if (!(is >> n >> c) || c != '|') throw InvalidDiagram("expected '|'");
  std::vector<std::pair<Arc, std::uint8_t>> arcs;
  std::string tok;
  while (is >> tok) {
    int i = 0, j = 0, e = 0;
    if (std::sscanf(tok.c_str(), "(%d-%d)^%d", &i, &j, &e) != 3)
      throw InvalidDiagram("bad arc token: " + tok);
    arcs.push_back({{i, j}, static_cast<std::uint8_t>(e)});
  }
  return Diagram(m, n, std::move(arcs));
}

/// Finite k-linear combination of diagrams with a common boundary type.
class DiagramSum {
 public:
  using Terms = std::map<Diagram, Scalar>;

  DiagramSum(AlgebraPtr algebra, int bottom, int top)
      : algebra_(std::move(algebra)), bottom_(bottom), top_(top) {}

  static DiagramSum single(AlgebraPtr algebra, Diagram d, Scalar c = Scalar(1)) {
    DiagramSum s(std::move(algebra), d.bottom(), d.top());
    s.accumulate(d, std::move(c));
    return s;
  }
  static DiagramSum identity(const AlgebraPtr& algebra, int m) {
    return single(algebra, Diagram::identity(m));
  }

  const AlgebraPtr& algebra() const { return algebra_; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void accumulate(const Diagram& d, const Scalar& c) {
    if (d.bottom() != bottom_ || d.top() != top_)
      throw BoundaryMismatch("term has different boundary type");
    for (auto e : d.exps())
      if (e >= algebra_->rank()) throw InvalidDiagram("decoration exponent out of range");
    if (c.is_zero()) return;
    auto it = terms_.find(d);
    if (it == terms_.end()) {
      terms_.emplace(d, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend DiagramSum operator+(const DiagramSum& a, const DiagramSum& b) {
    require_same_algebra(a.algebra_, b.algebra_);
    if (a.bottom_ != b.bottom_ || a.top_ != b.top_)
      throw BoundaryMismatch("sum of different boundary types");
    DiagramSum r = a;
    for (const auto& [d, c] : b.terms_) r.accumulate(d, c);
    return r;
  }
  friend DiagramSum operator-(const DiagramSum& a, const DiagramSum& b) {
    return a + Scalar(-1) * b;
  }
  friend DiagramSum operator*(const Scalar& c, const DiagramSum& s) {
    DiagramSum r(s.algebra_, s.bottom_, s.top_);
    if (c.is_zero()) return r;
    for (const auto& [d, v] : s.terms_) r.terms_.emplace(d, c * v);
    return r;
  }
  friend bool operator==(const DiagramSum& a, const DiagramSum& b) {
    require_same_algebra(a.algebra_, b.algebra_);
    return a.bottom_ == b.bottom_ && a.top_ == b.top_ && a.terms_ == b.terms_;
  }

  /// One term per line, `coeff * m:n | arcs`, ordered by matching then dotting.
  std::string render() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [d, c] : terms_) {
      if (!first) os << "\n";
      first = false;
      os << c.render() << " * " << d.render();
    }
    return first ? "0" : os.str();
  }

 private:
  AlgebraPtr algebra_;
  int bottom_, top_;
  Terms terms_;
};

namespace detail {

// Multilinearly expands arc labels (AlgebraElements) into basis-decorated
// diagrams and accumulates them into `out` with the given base coefficient.
inline void expand_labels(DiagramSum& out, int bottom, int top,
                          const std::vector<std::pair<Diagram::Arc, AlgebraElement>>& arcs,
                          const Scalar& base) {
  if (base.is_zero()) return;
  std::vector<std::pair<std::vector<std::pair<Diagram::Arc, std::uint8_t>>, Scalar>> partial{
      {{}, base}};
  for (const auto& [arc, label] : arcs) {
    std::vector<std::pair<std::vector<std::pair<Diagram::Arc, std::uint8_t>>, Scalar>> next;
    for (const auto& [chosen, coeff] : partial)
      for (std::size_t k = 0; k < label.coords().size(); ++k) {
        if (label[k].is_zero()) continue;
        auto ext = chosen;
        ext.push_back({arc, static_cast<std::uint8_t>(k)});
        next.push_back({std::move(ext), coeff * label[k]});
      }
    partial = std::move(next);
  }
  for (auto& [chosen, coeff] : partial) out.accumulate(Diagram(bottom, top, chosen), coeff);
}

// Composes two single diagrams g∘f, gluing f's top to g's bottom; traces
// strands, multiplies decorations via m, evaluates loops at ε(H·a).
inline void compose_single(DiagramSum& out, const AlgebraPtr& A, const AlgebraElement& h,
                           const Diagram& g, const Diagram& f, const Scalar& base) {
  const int m = f.bottom(), n = f.top(), p = g.top();
  std::vector<bool> f_done(f.arc_count(), false), g_done(g.arc_count(), false);

  // Walks one strand starting from a free end; returns (final point, label).
  // Points are encoded (side, boundary index); side 0 = f, 1 = g.
  auto trace = [&](int side, int point) -> std::pair<std::pair<int, int>, AlgebraElement> {
    AlgebraElement label = A->unit();
    for (;;) {
      if (side == 0) {
        const int arc = f.arc_at(point);
        f_done[static_cast<std::size_t>(arc)] = true;
        label = label * A->basis(f.exp_of_arc(arc));
        const int other = f.partner(point);
        if (other <= m) return {{0, other}, label};  // result bottom
        side = 1;
        point = other - m;  // f-top j glues to g-bottom j
      } else {
        const int arc = g.arc_at(point);
        g_done[static_cast<std::size_t>(arc)] = true;
        label = label * A->basis(g.exp_of_arc(arc));
        const int other = g.partner(point);
        if (other > n) return {{1, other}, label};  // result top
        side = 0;
        point = m + other;  // g-bottom j glues to f-top j
      }
    }
  };

  std::vector<std::pair<Diagram::Arc, AlgebraElement>> arcs;
  std::vector<bool> seen(static_cast<std::size_t>(m + p) + 1, false);
  auto result_index = [&](std::pair<int, int> end) {
    return end.first == 0 ? end.second : m + (end.second - n);
  };
  for (int r = 1; r <= m + p; ++r) {
    if (seen[static_cast<std::size_t>(r)]) continue;
    auto [end, label] =
        r <= m ? trace(0, r) : trace(1, n + (r - m));
    const int s = result_index(end);
    seen[static_cast<std::size_t>(r)] = seen[static_cast<std::size_t>(s)] = true;
    arcs.push_back({{std::min(r, s), std::max(r, s)}, std::move(label)});
  }

  // Remaining arcs sit on closed loops; each loop contributes ε(H·label).
  Scalar coeff = base;
  auto eat_loop = [&](int side, int start_point) {
    AlgebraElement label = A->unit();
    int s = side, pt = start_point;
    do {
      if (s == 0) {
        const int arc = f.arc_at(pt);
        f_done[static_cast<std::size_t>(arc)] = true;
        label = label * A->basis(f.exp_of_arc(arc));
        const int other = f.partner(pt);
        s = 1;
        pt = other - m;
      } else {
        const int arc = g.arc_at(pt);
        g_done[static_cast<std::size_t>(arc)] = true;
        label = label * A->basis(g.exp_of_arc(arc));
        const int other = g.partner(pt);
        s = 0;
        pt = m + other;
      }
    } while (!(s == side && pt == start_point));
    coeff *= A->counit(h * label);
  };
  for (std::size_t k = 0; k < f.arc_count(); ++k) {
    if (f_done[k]) continue;
    eat_loop(0, f.endpoints()[k].first);
    if (coeff.is_zero()) return;
  }
  for (std::size_t k = 0; k < g.arc_count(); ++k) {
    if (g_done[k]) continue;
    eat_loop(1, g.endpoints()[k].first);
    if (coeff.is_zero()) return;
  }

  expand_labels(out, m, p, arcs, coeff);
}

}  // namespace detail

/// g∘f: glue f's top boundary (n points) to g's bottom boundary.
inline DiagramSum compose(const DiagramSum& g, const DiagramSum& f) {
  require_same_algebra(g.algebra(), f.algebra());
  if (f.top() != g.bottom())
    throw BoundaryMismatch("compose: inner boundary counts differ");
  const AlgebraPtr& A = f.algebra();
  const AlgebraElement h = handle_element(A);
  DiagramSum out(A, f.bottom(), g.top());
  for (const auto& [df, cf] : f.terms())
    for (const auto& [dg, cg] : g.terms())
      detail::compose_single(out, A, h, dg, df, cf * cg);
  return out;
}

/// Vertical reflection: f: m→n becomes fᵀ: n→m with decorations kept.
inline Diagram transpose(const Diagram& d) {
  const int m = d.bottom(), n = d.top();
  auto flip = [&](int i) { return i <= m ? n + i : i - m; };
  std::vector<std::pair<Diagram::Arc, std::uint8_t>> arcs;
  arcs.reserve(d.arc_count());
  for (std::size_t k = 0; k < d.arc_count(); ++k) {
    auto [i, j] = d.endpoints()[k];
    const int a = flip(i), b = flip(j);
    arcs.push_back({{std::min(a, b), std::max(a, b)}, d.exps()[k]});
  }
  return Diagram(n, m, std::move(arcs));
}

inline DiagramSum transpose(const DiagramSum& f) {
  DiagramSum out(f.algebra(), f.top(), f.bottom());
  for (const auto& [d, c] : f.terms()) out.accumulate(transpose(d), c);
  return out;
}

/// Horizontal stacking f ⊗ g (f to the left).
inline DiagramSum tensor(const DiagramSum& f, const DiagramSum& g) {
  require_same_algebra(f.algebra(), g.algebra());
  const int m1 = f.bottom(), n1 = f.top(), m2 = g.bottom(), n2 = g.top();
  DiagramSum out(f.algebra(), m1 + m2, n1 + n2);
  auto shift = [&](int i, bool from_g) {
    if (!from_g) return i <= m1 ? i : i + m2;             // f: bottoms keep, tops shift by m2
    return i <= m2 ? m1 + i : (m1 + m2 + n1) + (i - m2);  // g: after f's bottoms / tops
  };
  for (const auto& [df, cf] : f.terms())
    for (const auto& [dg, cg] : g.terms()) {
      std::vector<std::pair<Diagram::Arc, std::uint8_t>> arcs;
      for (std::size_t k = 0; k < df.arc_count(); ++k) {
        auto [i, j] = df.endpoints()[k];
        arcs.push_back({{shift(i, false), shift(j, false)}, df.exps()[k]});
      }
      for (std::size_t k = 0; k < dg.arc_count(); ++k) {
        auto [i, j] = dg.endpoints()[k];
        arcs.push_back({{shift(i, true), shift(j, true)}, dg.exps()[k]});
      }
      out.accumulate(Diagram(m1 + m2, n1 + n2, std::move(arcs)), cf * cg);
    }
  return out;
}

/// P_i = id − cupcap at position i, on m strands.
inline DiagramSum crossing(int i, int m, const AlgebraPtr& A = builtin_alpha()) {
  if (i < 1 || i > m - 1) throw IndexOutOfRange("crossing position");
  DiagramSum out = DiagramSum::identity(A, m);
  std::vector<std::pair<Diagram::Arc, std::uint8_t>> arcs;
  for (int j = 1; j <= m; ++j) {
    if (j == i) {
      arcs.push_back({{i, i + 1}, 0});          // bottom pair
      arcs.push_back({{m + i, m + i + 1}, 0});  // top pair
    } else if (j != i + 1) {
      arcs.push_back({{j, m + j}, 0});
    }
  }
  out.accumulate(Diagram(m, m, std::move(arcs)), Scalar(-1));
  return out;
}

/// P_σ for a permutation (one-line notation, 0-based), via adjacent
/// transpositions; well defined since σ ↦ P_σ is a group homomorphism.
inline DiagramSum crossing_of_permutation(std::vector<int> sigma,
                                          const AlgebraPtr& A = builtin_alpha()) {
  const int m = static_cast<int>(sigma.size());
  DiagramSum out = DiagramSum::identity(A, m);
  // Bubble sort; each swap contributes one adjacent crossing.
  for (bool moved = true; moved;) {
    moved = false;
    for (int i = 0; i + 1 < m; ++i)
      if (sigma[static_cast<std::size_t>(i)] > sigma[static_cast<std::size_t>(i) + 1]) {
        std::swap(sigma[static_cast<std::size_t>(i)], sigma[static_cast<std::size_t>(i) + 1]);
        out = compose(out, crossing(i + 1, m, A));
        moved = true;
      }
  }
  return out;
}

/// Sym_m, by the two-term recursion
///   Sym_m = (1/m)(Sym_{m−1}⊗id) + ((m−1)/m)(Sym_{m−1}⊗id)∘P_{m−1}∘(Sym_{m−1}⊗id),
/// memoized per algebra.
inline DiagramSum symmetrizer(int m, const AlgebraPtr& A = builtin_alpha()) {
  if (m < 1) throw IndexOutOfRange("symmetrizer needs m >= 1");
  static std::map<std::pair<const void*, int>, DiagramSum> cache;
  static std::mutex mutex;
  const std::pair<const void*, int> key{A.get(), m};
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  DiagramSum result = DiagramSum::identity(A, 1);
  if (m > 1) {
    const DiagramSum lower = tensor(symmetrizer(m - 1, A), DiagramSum::identity(A, 1));
    const Scalar inv_m = Scalar(Rational(1, m));
    result = inv_m * lower +
             (Scalar(m - 1) * inv_m) * compose(lower, compose(crossing(m - 1, m, A), lower));
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, std::move(result)).first->second;
}

/// Full permutation sum (1/m!) Σ_{σ∈S_m} P_σ; exponential, test use only.
inline DiagramSum symmetrizer_full_sum(int m, const AlgebraPtr& A = builtin_alpha()) {
  std::vector<int> sigma(static_cast<std::size_t>(m));
  std::iota(sigma.begin(), sigma.end(), 0);
  DiagramSum sum(A, m, m);
  Rational count = 0;
  do {
    sum = sum + crossing_of_permutation(sigma, A);
    count += 1;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return Scalar(Rational(1) / count) * sum;
}

/// Composes tensor(symmetrizer(k), identity(v.top() - k)) with v without
/// materializing the symmetrizer: the recursion is pushed onto v, which
/// stays small when v has few boundary points at the bottom.
inline DiagramSum apply_symmetrizer(int k, const DiagramSum& v) {
  if (k < 1 || k > v.top())
    throw IndexOutOfRange("apply_symmetrizer strand count");
  if (k == 1) return v;
  const AlgebraPtr& A = v.algebra();
  const Scalar inv_k = Scalar(Rational(1, k));
  const DiagramSum w1 = apply_symmetrizer(k - 1, v);
  const DiagramSum w2 =
      apply_symmetrizer(k - 1, compose(crossing(k - 1, v.top(), A), w1));
  return inv_k * w1 + (Scalar(k - 1) * inv_k) * w2;
}

/// Embedding for arbitrary boundary type, bending bottom points up: slot k
/// corresponds to boundary index k+1.  Used to decide equality of morphisms.
inline TensorElement embed_tensor_any(const DiagramSum& d) {
  const AlgebraPtr& A = d.algebra();
  const std::size_t slots = static_cast<std::size_t>(d.bottom() + d.top());
  TensorElement out(A, slots);
  for (const auto& [diag, coeff] : d.terms()) {
    std::vector<std::pair<TensorElement::Exps, Scalar>> partial{
        {TensorElement::Exps(slots, 0), coeff}};
    for (std::size_t k = 0; k < diag.arc_count(); ++k) {
      const auto [i, j] = diag.endpoints()[k];
      const TensorElement delta = A->comul(A->basis(diag.exps()[k]));
      std::vector<std::pair<TensorElement::Exps, Scalar>> next;
      for (const auto& [exps, c] : partial)
        for (const auto& [de, dc] : delta.terms()) {
          auto ne = exps;
          ne[static_cast<std::size_t>(i) - 1] = de[0];
          ne[static_cast<std::size_t>(j) - 1] = de[1];
          next.push_back({std::move(ne), c * dc});
        }
      partial = std::move(next);
    }
    for (auto& [exps, c] : partial) out.accumulate(exps, c);
  }
  return out;
}

/// Embedding dTL_A(0,2n) → A^{⊗2n}: each arc (i,j) decorated x^e contributes
/// Δ(x^e) at slots i,j.  Injective for A_α.
inline TensorElement embed_tensor(const DiagramSum& d) {
  if (d.bottom() != 0) throw BoundaryMismatch("embed_tensor needs bottom = 0");
  return embed_tensor_any(d);
}

/// Result of an embedding-equality test.  `decides_skein` is true exactly
/// when embedding equality is known to coincide with skein equality (A_α).
struct SkeinEqualResult {
  bool equal = false;
  bool decides_skein = false;
  explicit operator bool() const { return equal; }
};

inline SkeinEqualResult skein_equal(const DiagramSum& d1, const DiagramSum& d2) {
  require_same_algebra(d1.algebra(), d2.algebra());
  if (d1.bottom() != d2.bottom() || d1.top() != d2.top())
    throw BoundaryMismatch("skein_equal: boundary types differ");
  SkeinEqualResult r;
  r.equal = (embed_tensor_any(d1) == embed_tensor_any(d2));
  r.decides_skein = (d1.algebra()->name() == "alpha");
  return r;
}

}  // namespace frobskein
