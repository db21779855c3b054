#pragma once
// 4-dimensional 2-handlebody invariants built on the solid-torus Kirby
// color: evaluation of decorated closed surfaces against one Kirby color per
// attaching circle, the worked generator tables for S^2 x B^2, B^3 x S^1 and
// T^2 x B^2, the sphere skein algebra of S^2 x B^1 with its rewriting
// normal form, and the handle data of the rank-one theory.

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "frobskein/frobenius.hpp"
#include "frobskein/solidtorus.hpp"
#include "frobskein/surfaces.hpp"

namespace frobskein {

class NonUnitEvaluation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class OddProduct : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A generator of a skein module spanned by parallel copies of one essential
/// surface: `power` undotted copies plus one dotted copy when `dotted` is
/// set.  The interpretation (spheres or tori) is fixed by the invariant that
/// consumes it.
struct Generator {
  int power = 0;
  bool dotted = false;
};

inline Generator gen_empty() { return {0, false}; }
inline Generator gen_D() { return {0, true}; }
inline Generator gen_S(int k) { return {k, false}; }
inline Generator gen_T(int k) { return {k, false}; }

namespace detail {

inline void require_generator(const Generator& g) {
  if (g.power < 0)
    throw std::invalid_argument("generator power must be nonnegative");
}

}  // namespace detail

/// A closed decorated surface in the boundary of a 2-handlebody, together
/// with the partition of its puncture slots into groups, one group per
/// attaching circle, each listed in the cyclic order in which the surface
/// meets that circle.
class DecoratedSkeinInBoundary {
 public:
  DecoratedSkeinInBoundary(SurfacePresentation surface,
                           std::vector<std::vector<int>> intersections)
      : surface_(std::move(surface)),
        intersections_(std::move(intersections)) {
    std::vector<int> seen;
    for (const auto& group : intersections_)
      seen.insert(seen.end(), group.begin(), group.end());
    std::sort(seen.begin(), seen.end());
    const int total = surface_.total_punctures();
    bool exact = static_cast<int>(seen.size()) == total;
    for (int i = 0; exact && i < total; ++i)
      exact = seen[static_cast<std::size_t>(i)] == i + 1;
    if (!exact)
      throw SlotMismatch(
          "intersection groups must cover every puncture slot exactly once");
  }

  const SurfacePresentation& surface() const { return surface_; }
  const std::vector<std::vector<int>>& intersections() const {
    return intersections_;
  }

 private:
  SurfacePresentation surface_;
  std::vector<std::vector<int>> intersections_;
};

/// Evaluates the decorated skein against one Kirby color per intersection
/// group and rescales by ev_empty^{euler_char}.  A group of odd size admits
/// no Kirby color and annihilates the whole value.
inline Scalar handlebody_invariant(const DecoratedSkeinInBoundary& skein,
                                   const Scalar& ev_empty, int euler_char) {
  if (!is_unit(ev_empty, UnitMode::kLaurent))
    throw NonUnitEvaluation(
        "evaluation of the empty skein must be a Laurent unit");
  const SurfacePresentation& S = skein.surface();
  if (S.total_boundary() != 0)
    throw SlotMismatch("2-handlebody invariants evaluate closed surfaces");
  if (!same_algebra(*S.algebra(), *builtin_alpha()))
    throw std::invalid_argument("Kirby colors require the algebra alpha");
  for (const auto& group : skein.intersections())
    if (group.size() % 2 != 0) return Scalar(0);

  const std::size_t total = static_cast<std::size_t>(S.total_punctures());
  std::vector<std::pair<TensorElement::Exps, Scalar>> partial{
      {TensorElement::Exps(total, 0), Scalar(1)}};
  for (const auto& group : skein.intersections()) {
    const KirbyColor w = kirby_closed_form(static_cast<int>(group.size()) / 2);
    const auto& color_terms = w.tensor.terms();
    std::vector<std::pair<TensorElement::Exps, Scalar>> next;
    for (const auto& [exps, coeff] : color_terms)
      for (const auto& p : partial) {
        TensorElement::Exps ne = p.first;
        for (std::size_t i = 0; i < group.size(); ++i)
          ne[static_cast<std::size_t>(group[i]) - 1] = exps[i];
        next.emplace_back(std::move(ne), p.second * coeff);
      }
    partial = std::move(next);
  }
  TensorElement inputs(S.algebra(), total);
  for (const auto& p : partial) inputs.add_term(p.first, p.second);

  Scalar value(0);
  const auto evaluated = eval_punctured(S, inputs);
  for (const auto& [exps, coeff] : evaluated.terms()) value += coeff;
  return ev_empty.pow(euler_char) * value;
}

/// Value of d parallel unit-labelled tori, each punctured r times, against
/// the Kirby color on d*r strands, with the i-th torus taking the
/// interleaved slots i, i+d, ..., i+(r-1)d.
inline Scalar cyclic_toric_cap(int d, int r) {
  if (d < 0 || r < 0)
    throw std::invalid_argument("cyclic_toric_cap needs nonnegative counts");
  if ((d * r) % 2 != 0)
    throw OddProduct("cyclic toric cap needs an even number of strands");
  const AlgebraPtr A = builtin_alpha();
  std::vector<SurfaceComponent> comps;
  SurfacePresentation::SlotMap punctures;
  for (int i = 1; i <= d; ++i) {
    comps.push_back(SurfaceComponent(0, 0, true, A->unit(), r));
    std::vector<int> slots;
    for (int j = 0; j < r; ++j) slots.push_back(i + j * d);
    punctures.push_back(std::move(slots));
  }
  SurfacePresentation S(A, std::move(comps), std::nullopt,
                        std::move(punctures));
  std::vector<int> group(static_cast<std::size_t>(d * r));
  std::iota(group.begin(), group.end(), 1);
  DecoratedSkeinInBoundary skein(std::move(S), {std::move(group)});
  return handlebody_invariant(skein, Scalar(1), 0);
}

/// The invariant of S^2 x B^2 on the generators of the skein module of
/// S^2 x S^1: 2k parallel essential spheres extract the top stratum
/// coefficient of the Kirby color; dotted spheres and odd counts vanish.
inline Scalar invariant_S2xB2(const Generator& g, const Scalar& ev) {
  detail::require_generator(g);
  if (g.dotted || g.power % 2 != 0) return Scalar(0);
  const Scalar ev2 = ev * ev;
  if (g.power == 0) return ev2;
  const int k = g.power / 2;
  const Scalar coeff =
      Scalar(binomial(2 * k, k) / pow_2(2 * k)) * Scalar::alpha().pow(-k);
  return coeff * ev2;
}

/// The invariant of B^3 x S^1 on the generators of the skein module of
/// S^2 x S^1, given by abstract evaluation; the Euler characteristic is zero
/// so no evaluation parameter enters.
inline Scalar invariant_B3xS1(const Generator& g) {
  detail::require_generator(g);
  return g.power == 0 ? Scalar(1) : Scalar(0);
}

/// The invariant of T^2 x B^2 whose attaching slope meets the essential
/// torus |r| times, on the parallel-torus generators of the skein module of
/// the 3-torus.
inline Scalar invariant_T2xB2(const Generator& g, int r) {
  detail::require_generator(g);
  if (g.dotted || g.power % 2 != 0) return Scalar(0);
  if (g.power == 0) return Scalar(1);
  return cyclic_toric_cap(g.power, std::abs(r));
}

/// Monomial order for sphere skein words: by length, then letterwise with S
/// before D.  The irreducible monomials S^k and S^k D are exactly the words
/// with no letter D followed by another letter.
struct DegLexSD {
  bool operator()(const std::string& a, const std::string& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != b[i]) return a[i] == 'S';
    return false;
  }
};

/// One summand of an element of the sphere skein algebra of S^2 x B^1: a
/// word over the undotted sphere S and the dotted sphere D.
struct SphereSkeinWord {
  std::string word;
  Scalar coeff;
};

/// k-linear combination of sphere skein words, keyed in monomial order.
using SphereSkeinSum = std::map<std::string, Scalar, DegLexSD>;

enum class RewriteStrategy { kLeftmost, kRightmost, kRandom };

namespace detail {

inline void require_sphere_word(const std::string& w) {
  for (char ch : w)
    if (ch != 'S' && ch != 'D')
      throw std::invalid_argument("sphere skein words use the alphabet {S,D}");
}

inline std::vector<std::size_t> reducible_positions(const std::string& w) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == 'D') out.push_back(i);
  return out;
}

inline void drop_zeros(SphereSkeinSum& sum) {
  for (auto it = sum.begin(); it != sum.end();)
    it = it->second.is_zero() ? sum.erase(it) : std::next(it);
}

}  // namespace detail

inline SphereSkeinSum sphere_skein_sum(
    const std::vector<SphereSkeinWord>& words) {
  SphereSkeinSum sum;
  for (const auto& w : words) {
    detail::require_sphere_word(w.word);
    sum[w.word] += w.coeff;
  }
  detail::drop_zeros(sum);
  return sum;
}

/// Rewrites DS -> -SD and DD -> 1 - a*SS to a fixpoint.  The result is
/// supported on the irreducible words {S^k, S^k D} and is independent of the
/// strategy used to pick among reducible positions.
inline SphereSkeinSum sphere_skein_normal_form(
    const SphereSkeinSum& input,
    RewriteStrategy strategy = RewriteStrategy::kLeftmost, unsigned seed = 0) {
  std::mt19937 rng(seed);
  SphereSkeinSum pending;
  for (const auto& [w, c] : input) {
    detail::require_sphere_word(w);
    if (!c.is_zero()) pending[w] += c;
  }
  SphereSkeinSum result;
  while (!pending.empty()) {
    // Both rules strictly decrease the monomial order, so consuming the
    // largest word first touches each merged coefficient exactly once.
    auto it = std::prev(pending.end());
    const std::string w = it->first;
    const Scalar c = it->second;
    pending.erase(it);
    if (c.is_zero()) continue;
    const auto spots = detail::reducible_positions(w);
    if (spots.empty()) {
      result[w] += c;
      continue;
    }
    std::size_t pos = spots.front();
    if (strategy == RewriteStrategy::kRightmost) pos = spots.back();
    if (strategy == RewriteStrategy::kRandom)
      pos = spots[std::uniform_int_distribution<std::size_t>(
          0, spots.size() - 1)(rng)];
    if (w[pos + 1] == 'S') {
      std::string sd = w;
      sd[pos] = 'S';
      sd[pos + 1] = 'D';
      pending[sd] -= c;
    } else {
      pending[w.substr(0, pos) + w.substr(pos + 2)] += c;
      std::string ss = w;
      ss[pos] = 'S';
      ss[pos + 1] = 'S';
      pending[ss] -= Scalar::alpha() * c;
    }
  }
  detail::drop_zeros(result);
  return result;
}

inline SphereSkeinSum sphere_skein_normal_form(
    const std::string& word,
    RewriteStrategy strategy = RewriteStrategy::kLeftmost, unsigned seed = 0) {
  return sphere_skein_normal_form(sphere_skein_sum({{word, Scalar(1)}}),
                                  strategy, seed);
}

/// Normal form followed by the relations that hold after closing the B^1
/// direction into S^2 x S^1: S^k D = 0 for k >= 1, and odd sphere counts
/// reduce via S^{2k+1} = a^{-1} S^{2k-1} down to a^{-k} S.  The result is
/// supported on the spanning set {empty, D, S, S^{2k}}.
inline SphereSkeinSum sphere_skein_trace_reduce(const SphereSkeinSum& input) {
  SphereSkeinSum out;
  for (const auto& [w, c] : sphere_skein_normal_form(input)) {
    const bool dotted = !w.empty() && w.back() == 'D';
    const std::size_t k = w.size() - (dotted ? 1 : 0);
    if (dotted && k >= 1) continue;
    if (!dotted && k % 2 == 1 && k >= 3) {
      out["S"] += c * Scalar::alpha().pow(-static_cast<long>(k / 2));
      continue;
    }
    out[w] += c;
  }
  detail::drop_zeros(out);
  return out;
}

inline SphereSkeinSum sphere_skein_trace_reduce(const std::string& word) {
  return sphere_skein_trace_reduce(sphere_skein_sum({{word, Scalar(1)}}));
}

/// Handle data of the rank-one theory with parameter u, normalized to
/// evaluation 1 on the empty skein.  Bases: {empty} for m0, p1, m2, p4, c4,
/// m4; {empty, S} for m1, p3, c3, m3; the four boundary conditions (0,0),
/// (0,1), (1,0), (1,1) of the torus for p2 and c2, with the first two
/// spanned by the empty skein and the meridional disk M respectively and the
/// last two zero.
struct RankOneHandleData {
  Scalar u;
  Scalar m0;
  Scalar p1;
  std::array<Scalar, 2> m1;
  std::array<Scalar, 4> p2;
  std::array<Scalar, 4> c2;
  Scalar m2;
  std::array<std::array<Scalar, 2>, 2> p3;
  std::array<Scalar, 2> c3;
  std::array<Scalar, 2> m3;
  Scalar p4;
  Scalar c4;
  Scalar m4;
};

inline RankOneHandleData rank_one_tables(const Scalar& u) {
  if (!is_unit(u, UnitMode::kLaurent))
    throw NonUnitParameter("rank-one theory needs a Laurent unit parameter");
  RankOneHandleData t;
  t.u = u;
  t.m0 = Scalar(1);
  t.p1 = Scalar(1);
  t.m1 = {Scalar(1), u};
  t.p2 = {Scalar(1), u, Scalar(0), Scalar(0)};
  t.c2 = {Scalar(1), u.inv(), Scalar(0), Scalar(0)};
  t.m2 = Scalar(1);
  t.p3 = {{{Scalar(1), Scalar(0)}, {Scalar(0), u * u}}};
  t.c3 = {Scalar(1), (u * u).inv()};
  t.m3 = {Scalar(1), u.inv()};
  t.p4 = Scalar(2);
  t.c4 = Scalar(Rational(1, 2));
  t.m4 = Scalar(Rational(1, 2));
  return t;
}

/// The rank-one theory of a closed 4-dimensional handlebody counts half the
/// order of its third Z/2-homology.
inline Rational rank_one_dw(long h3_order) {
  if (h3_order <= 0)
    throw std::invalid_argument("homology order must be positive");
  return Rational(h3_order) / 2;
}

}  // namespace frobskein
