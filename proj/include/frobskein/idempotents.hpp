#pragma once

// Partition idempotents of the decorated disk category over A_alpha:
// planar matchings, arc partitions {B, C}, the idempotents e_P, dotting,
// the orthogonality/completeness/primitivity battery, and the walk-on-Z
// classification of isomorphism classes.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "frobskein/dtl.hpp"
#include "frobskein/frobenius.hpp"
#include "frobskein/scalar.hpp"

namespace frobskein {

class ArcMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonReturningWalk : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class UnrealizableSequence : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Non-crossing perfect matching on boundary points 1..2n of a disk; the
// distinguished boundary point is 1. Arcs are stored sorted by smaller
// endpoint, so the arc containing point 1 always has index 0.
class PlanarMatching {
 public:
  PlanarMatching(int n, std::vector<std::pair<int, int>> arcs)
      : n_(n), arcs_(std::move(arcs)) {
    if (n_ < 0 || arcs_.size() != static_cast<std::size_t>(n_))
      throw InvalidDiagram("planar matching needs exactly n arcs");
    for (auto& [i, j] : arcs_) {
      if (i > j) std::swap(i, j);
      if (i < 1 || j > 2 * n_ || i == j)
        throw InvalidDiagram("arc endpoint out of range");
    }
    std::sort(arcs_.begin(), arcs_.end());
    point_arc_.assign(2 * n_ + 1, -1);
    for (std::size_t a = 0; a < arcs_.size(); ++a) {
      for (int p : {arcs_[a].first, arcs_[a].second}) {
        if (point_arc_[p] != -1)
          throw InvalidDiagram("boundary point matched twice");
        point_arc_[p] = static_cast<int>(a);
      }
    }
    for (int p = 1; p <= 2 * n_; ++p)
      if (point_arc_[p] == -1) throw InvalidDiagram("unmatched boundary point");
    for (const auto& [i, j] : arcs_)
      for (const auto& [k, l] : arcs_)
        if (i < k && k < j && j < l) throw InvalidDiagram("arcs cross");
  }

  // All non-crossing perfect matchings on 2n points, in the deterministic
  // order induced by recursively choosing the partner of the first point.
  static std::vector<PlanarMatching> all(int n) {
    std::vector<std::vector<std::pair<int, int>>> lists = all_arcs(1, 2 * n);
    std::vector<PlanarMatching> out;
    out.reserve(lists.size());
    for (auto& arcs : lists) out.emplace_back(n, std::move(arcs));
    return out;
  }

  int arc_count() const { return n_; }
  int points() const { return 2 * n_; }
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
  int arc_at(int point) const {
    if (point < 1 || point > 2 * n_)
      throw IndexOutOfRange("boundary point out of range");
    return point_arc_[point];
  }

  bool operator==(const PlanarMatching& o) const { return arcs_ == o.arcs_; }
  bool operator!=(const PlanarMatching& o) const { return !(*this == o); }
  bool operator<(const PlanarMatching& o) const { return arcs_ < o.arcs_; }

  std::string render() const {
    std::string s;
    for (const auto& [i, j] : arcs_) {
      if (!s.empty()) s += " ";
      s += "(" + std::to_string(i) + "-" + std::to_string(j) + ")";
    }
    return s;
  }

 private:
  static std::vector<std::vector<std::pair<int, int>>> all_arcs(int lo,
                                                                int hi) {
    std::vector<std::vector<std::pair<int, int>>> out;
    if (lo > hi) {
      out.push_back({});
      return out;
    }
    for (int k = lo + 1; k <= hi; k += 2) {
      const auto inner = all_arcs(lo + 1, k - 1);
      const auto outer = all_arcs(k + 1, hi);
      for (const auto& in : inner)
        for (const auto& ou : outer) {
          std::vector<std::pair<int, int>> arcs{{lo, k}};
          arcs.insert(arcs.end(), in.begin(), in.end());
          arcs.insert(arcs.end(), ou.begin(), ou.end());
          out.push_back(std::move(arcs));
        }
    }
    return out;
  }

  int n_;
  std::vector<std::pair<int, int>> arcs_;
  std::vector<int> point_arc_;
};

// Partition of arcs(M) into blocks B and C; C may be empty, and the arc
// containing the distinguished boundary point 1 (arc index 0) lies in B.
class ArcPartition {
 public:
  ArcPartition(PlanarMatching matching, std::uint32_t c_mask)
      : matching_(std::move(matching)), c_mask_(c_mask) {
    if (matching_.arc_count() > 0 && (c_mask_ & 1u))
      throw ArcMismatch("the arc at the distinguished point must lie in B");
    if (matching_.arc_count() < 32 &&
        (c_mask_ >> matching_.arc_count()) != 0)
      throw ArcMismatch("partition mask exceeds arc count");
  }

  const PlanarMatching& matching() const { return matching_; }
  std::uint32_t c_mask() const { return c_mask_; }
  bool in_c(int arc) const { return (c_mask_ >> arc) & 1u; }
  int b_size() const { return matching_.arc_count() - c_size(); }
  int c_size() const { return std::popcount(c_mask_); }

  std::string render() const {
    std::string b = "B={", c = "C={";
    for (int a = 0; a < matching_.arc_count(); ++a) {
      const auto& [i, j] = matching_.arcs()[a];
      std::string arc =
          "{" + std::to_string(i) + "," + std::to_string(j) + "}";
      auto& dst = in_c(a) ? c : b;
      if (dst.back() != '{') dst += ",";
      dst += arc;
    }
    return b + "} " + c + "}";
  }

 private:
  PlanarMatching matching_;
  std::uint32_t c_mask_;
};

// All partitions of arcs(M) into at most two blocks with arc 0 in B; the
// one-block partition (C empty) comes first, then C-masks ascending.
inline std::vector<ArcPartition> partitions_le2(const PlanarMatching& m) {
  const int n = m.arc_count();
  std::vector<ArcPartition> out;
  const std::uint32_t total = n >= 1 ? (1u << (n - 1)) : 1u;
  out.reserve(total);
  for (std::uint32_t half = 0; half < total; ++half)
    out.emplace_back(m, half << 1);
  return out;
}

// Element of End(M), identified with A_alpha per arc: a sparse sum of dotted
// identities x_D over subsets D of arcs(M), with x_b^2 = alpha applied
// eagerly so each arc carries exponent 0 or 1.
class EndoElement {
 public:
  explicit EndoElement(PlanarMatching matching)
      : matching_(std::move(matching)) {}

  static EndoElement identity(const PlanarMatching& m) {
    EndoElement e(m);
    e.accumulate(0u, Scalar(1));
    return e;
  }
  static EndoElement dotted(const PlanarMatching& m, std::uint32_t mask) {
    EndoElement e(m);
    e.accumulate(mask, Scalar(1));
    return e;
  }

  const PlanarMatching& matching() const { return matching_; }
  const std::map<std::uint32_t, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void accumulate(std::uint32_t mask, const Scalar& coeff) {
    if (matching_.arc_count() < 32 && (mask >> matching_.arc_count()) != 0)
      throw ArcMismatch("dotting mask exceeds arc count");
    if (coeff.is_zero()) return;
    auto it = terms_.find(mask);
    if (it == terms_.end()) {
      terms_.emplace(mask, coeff);
    } else {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  EndoElement& operator+=(const EndoElement& o) {
    require_same(o);
    for (const auto& [m, c] : o.terms_) accumulate(m, c);
    return *this;
  }
  EndoElement& operator-=(const EndoElement& o) {
    require_same(o);
    for (const auto& [m, c] : o.terms_) accumulate(m, -c);
    return *this;
  }
  friend EndoElement operator+(EndoElement a, const EndoElement& b) {
    a += b;
    return a;
  }
  friend EndoElement operator-(EndoElement a, const EndoElement& b) {
    a -= b;
    return a;
  }
  friend EndoElement operator*(const Scalar& c, EndoElement a) {
    std::map<std::uint32_t, Scalar> scaled;
    for (const auto& [m, t] : a.terms_) {
      Scalar s = c * t;
      if (!s.is_zero()) scaled.emplace(m, std::move(s));
    }
    a.terms_ = std::move(scaled);
    return a;
  }

  // x_D * x_E = alpha^{|D `intersect` E|} x_{D `xor` E}.
  friend EndoElement operator*(const EndoElement& a, const EndoElement& b) {
    a.require_same(b);
    EndoElement out(a.matching_);
    const Scalar alpha = Scalar::alpha();
    for (const auto& [da, ca] : a.terms_)
      for (const auto& [db, cb] : b.terms_)
        out.accumulate(da ^ db,
                       ca * cb * alpha.pow(std::popcount(da & db)));
    return out;
  }

  bool operator==(const EndoElement& o) const {
    return matching_ == o.matching_ && terms_ == o.terms_;
  }
  bool operator!=(const EndoElement& o) const { return !(*this == o); }

  std::string render() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [mask, coeff] : terms_) {
      auto [neg, abs] = coeff.render_pretty_signed();
      s += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
      first = false;
      if (mask == 0 || abs != "1") s += abs;
      if (mask != 0) {
        if (abs != "1") s += " * ";
        s += "x{";
        bool first_arc = true;
        for (int a = 0; a < matching_.arc_count(); ++a)
          if ((mask >> a) & 1u) {
            if (!first_arc) s += ",";
            first_arc = false;
            const auto& [i, j] = matching_.arcs()[a];
            s += std::to_string(i) + "-" + std::to_string(j);
          }
        s += "}";
      }
    }
    return s;
  }

 private:
  void require_same(const EndoElement& o) const {
    if (matching_ != o.matching_)
      throw ArcMismatch("endomorphisms live on different matchings");
  }

  PlanarMatching matching_;
  std::map<std::uint32_t, Scalar> terms_;
};

namespace detail {
inline void require_arc(const PlanarMatching& m, int arc) {
  if (arc < 0 || arc >= m.arc_count())
    throw ArcMismatch("arc index out of range");
}
}  // namespace detail

// join(b,c) = 1/2 (id + (1/alpha) x_b x_c), disjoin(b,c) = 1/2 (id - ...).
inline EndoElement join(const PlanarMatching& m, int b, int c) {
  detail::require_arc(m, b);
  detail::require_arc(m, c);
  if (b == c) throw ArcMismatch("join requires two distinct arcs");
  EndoElement e(m);
  e.accumulate(0u, Scalar(Rational(1, 2)));
  e.accumulate((1u << b) | (1u << c),
               Scalar(Rational(1, 2)) * Scalar::alpha().inv());
  return e;
}

inline EndoElement disjoin(const PlanarMatching& m, int b, int c) {
  detail::require_arc(m, b);
  detail::require_arc(m, c);
  if (b == c) throw ArcMismatch("disjoin requires two distinct arcs");
  EndoElement e(m);
  e.accumulate(0u, Scalar(Rational(1, 2)));
  e.accumulate((1u << b) | (1u << c),
               Scalar(Rational(-1, 2)) * Scalar::alpha().inv());
  return e;
}

inline Rational pow_2(int k) {
  Rational r = 1;
  for (int i = 0; i < k; ++i) r *= 2;
  return r;
}

// e_P = (1/2^{n-1}) sum_{D even} (-1)^{|D `intersect` B|} alpha^{-|D|/2} x_D.
inline EndoElement partition_idempotent(const ArcPartition& p) {
  const int n = p.matching().arc_count();
  EndoElement e(p.matching());
  if (n == 0) {
    e.accumulate(0u, Scalar(1));
    return e;
  }
  const std::uint32_t b_mask = ~p.c_mask() & ((1u << n) - 1u);
  const Scalar lead = Scalar(Rational(1) / pow_2(n - 1));
  const Scalar alpha_inv = Scalar::alpha().inv();
  for (std::uint32_t d = 0; d < (1u << n); ++d) {
    const int size = std::popcount(d);
    if (size % 2 != 0) continue;
    Scalar coeff = lead * alpha_inv.pow(size / 2);
    if (std::popcount(d & b_mask) % 2 != 0) coeff = -coeff;
    e.accumulate(d, coeff);
  }
  return e;
}

inline EndoElement dot(const EndoElement& e, int arc) {
  detail::require_arc(e.matching(), arc);
  return EndoElement::dotted(e.matching(), 1u << arc) * e;
}

// Boundary partition sequence of P: bit i-1 records the block (B=0, C=1) of
// the arc through boundary point i; bit 0 is always 0.
using BitSequence = std::vector<std::uint8_t>;

inline BitSequence boundary_sequence(const ArcPartition& p) {
  BitSequence bits(p.matching().points());
  for (int q = 1; q <= p.matching().points(); ++q)
    bits[q - 1] = p.in_c(p.matching().arc_at(q)) ? 1 : 0;
  return bits;
}

inline std::string bits_to_string(const BitSequence& bits) {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s += b ? '1' : '0';
  return s;
}

inline BitSequence bits_from_string(const std::string& s) {
  BitSequence bits;
  bits.reserve(s.size());
  for (char ch : s) {
    if (ch != '0' && ch != '1')
      throw std::invalid_argument("bit string may contain only 0 and 1");
    bits.push_back(ch == '1');
  }
  return bits;
}

namespace detail {
// Match equal adjacent bits with a stack scan, which realizes the iterated
// removal of the leftmost adjacent equal pair. Returns the matched pairs
// (1-based) or throws if a reduced alternating remainder survives.
inline std::vector<std::pair<int, int>> reduce_boundary(const BitSequence& b) {
  std::vector<std::pair<int, int>> arcs;
  std::vector<int> stack;
  for (int pos = 1; pos <= static_cast<int>(b.size()); ++pos) {
    if (!stack.empty() && b[stack.back() - 1] == b[pos - 1]) {
      arcs.emplace_back(stack.back(), pos);
      stack.pop_back();
    } else {
      stack.push_back(pos);
    }
  }
  if (!stack.empty())
    throw UnrealizableSequence(
        "sequence is not realizable by a planar matching");
  return arcs;
}

inline BitSequence add_alternating(const BitSequence& v) {
  BitSequence out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = v[i] ^ static_cast<std::uint8_t>(i % 2);
  return out;
}
}  // namespace detail

// Walk sequence of a boundary partition sequence: w = b + s for the
// alternating sequence s = (0,1,0,1,...).
inline BitSequence walk_of(const BitSequence& b) {
  if (b.size() % 2 != 0)
    throw UnrealizableSequence("boundary sequence must have even length");
  if (!b.empty() && b[0] != 0)
    throw UnrealizableSequence("boundary sequence must start with 0");
  detail::reduce_boundary(b);
  return detail::add_alternating(b);
}

// Reconstruct a representative arc partition from a returning walk in W+,
// via b = w + s and leftmost-innermost pair removal; pairs of equal bits
// (0,0) land in B and (1,1) in C.
inline ArcPartition matching_of_walk(const BitSequence& w) {
  if (w.size() % 2 != 0)
    throw NonReturningWalk("walk sequence must have even length");
  const auto ones = static_cast<std::size_t>(
      std::count(w.begin(), w.end(), static_cast<std::uint8_t>(1)));
  if (2 * ones != w.size())
    throw NonReturningWalk("walk must take equally many steps each way");
  if (!w.empty() && w[0] != 0)
    throw NonReturningWalk("walk must start with the step encoded by 0");
  const BitSequence b = detail::add_alternating(w);
  const auto arcs = detail::reduce_boundary(b);
  std::uint32_t c_mask = 0;
  PlanarMatching m(static_cast<int>(w.size() / 2), arcs);
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    // Recover the arc's index after PlanarMatching sorted its arc list.
    if (b[arcs[a].first - 1]) c_mask |= 1u << m.arc_at(arcs[a].first);
  }
  return ArcPartition(std::move(m), c_mask);
}

// All walk sequences in W+_{2n}, lexicographically ascending.
inline std::vector<BitSequence> enumerate_classes(int n) {
  if (n < 1) throw NonReturningWalk("enumerate_classes requires n >= 1");
  std::vector<BitSequence> out;
  BitSequence w(2 * n);
  const auto rec = [&](auto&& self, int pos, int ones) -> void {
    if (pos == 2 * n) {
      if (ones == n) out.push_back(w);
      return;
    }
    const int remaining = 2 * n - pos;
    if (ones + remaining < n) return;
    for (std::uint8_t bit = 0; bit <= 1; ++bit) {
      if (pos == 0 && bit == 1) continue;
      if (bit == 1 && ones == n) continue;
      w[pos] = bit;
      self(self, pos + 1, ones + bit);
    }
  };
  rec(rec, 0, 0);
  return out;
}

// The idempotent as an element of dTL_alpha(0, 2n): each x_D term becomes
// the matching with exponent-1 decorations on the arcs of D.
inline DiagramSum to_diagram_sum(const EndoElement& e) {
  const AlgebraPtr A = builtin_alpha();
  DiagramSum out(A, 0, e.matching().points());
  for (const auto& [mask, coeff] : e.terms()) {
    std::vector<std::pair<Diagram::Arc, std::uint8_t>> arcs;
    arcs.reserve(e.matching().arcs().size());
    for (int a = 0; a < e.matching().arc_count(); ++a)
      arcs.push_back({e.matching().arcs()[a],
                      static_cast<std::uint8_t>((mask >> a) & 1u)});
    out.accumulate(Diagram(0, e.matching().points(), arcs), coeff);
  }
  return out;
}

struct IdempotentBatteryReport {
  int partitions = 0;
  bool orthogonality = true;
  bool completeness = true;
  bool primitivity = true;
  bool ok() const { return orthogonality && completeness && primitivity; }
};

// Checks, over all <=2-block partitions P of arcs(M): pairwise e_P e_Q = 0,
// sum_P e_P = id, and that End(e_P) is spanned by {e_P, dot(e_P)} via the
// closed form x_D e_P = (-1)^{|D n C|} alpha^{floor(|D|/2)} (e_P or dot e_P).
inline IdempotentBatteryReport idempotent_battery(const PlanarMatching& m) {
  IdempotentBatteryReport report;
  const auto parts = partitions_le2(m);
  report.partitions = static_cast<int>(parts.size());
  std::vector<EndoElement> es;
  es.reserve(parts.size());
  for (const auto& p : parts) es.push_back(partition_idempotent(p));

  EndoElement sum(m);
  for (const auto& e : es) sum += e;
  report.completeness = (sum == EndoElement::identity(m));

  for (std::size_t i = 0; i < es.size(); ++i)
    for (std::size_t j = 0; j < es.size(); ++j)
      if (i != j && !(es[i] * es[j]).is_zero()) report.orthogonality = false;

  const int n = m.arc_count();
  const Scalar alpha = Scalar::alpha();
  for (std::size_t i = 0; i < es.size(); ++i) {
    const EndoElement dotted = n > 0 ? dot(es[i], 0) : es[i];
    if (n > 0 && dotted == es[i]) report.primitivity = false;
    for (std::uint32_t d = 0; d < (n < 32 ? (1u << n) : 1u); ++d) {
      const int size = std::popcount(d);
      Scalar coeff = alpha.pow(size / 2);
      if (std::popcount(d & parts[i].c_mask()) % 2 != 0) coeff = -coeff;
      const EndoElement expected =
          coeff * (size % 2 == 0 ? es[i] : dotted);
      if (EndoElement::dotted(m, d) * es[i] != expected)
        report.primitivity = false;
    }
  }
  return report;
}

}  // namespace frobskein
