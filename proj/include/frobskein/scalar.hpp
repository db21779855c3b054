#pragma once
// Exact scalar arithmetic: arbitrary-precision rationals and the univariate
// rational-function field Q(a).  Canonical form everywhere: rationals are
// reduced with positive denominator (cpp_rational guarantees this), rational
// functions are gcd-reduced with monic denominator.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace frobskein {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct ScalarParseError : std::runtime_error {
  explicit ScalarParseError(const std::string& msg)
      : std::runtime_error("scalar parse error: " + msg) {}
};

/// Dense univariate polynomial over Q in the formal variable `a`.
/// Normalized: no trailing zero coefficients; the zero polynomial is empty.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rational c) { coeffs_.push_back(std::move(c)); trim(); }
  explicit Poly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// Monomial c * a^k (k >= 0).
  static Poly monomial(Rational c, std::size_t k) {
    std::vector<Rational> v(k + 1);
    v[k] = std::move(c);
    return Poly(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is -1 by convention.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Rational& operator[](std::size_t i) const {
    static const Rational kZero{0};
    return i < coeffs_.size() ? coeffs_[i] : kZero;
  }
  const Rational& leading() const { return coeffs_.back(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// True iff the polynomial is c * a^k for a single k.
  bool is_monomial() const {
    return !coeffs_.empty() &&
           std::count_if(coeffs_.begin(), coeffs_.end(),
                         [](const Rational& c) { return c != 0; }) == 1;
  }

  friend Poly operator+(const Poly& p, const Poly& q) {
    std::vector<Rational> v(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = p[i] + q[i];
    return Poly(std::move(v));
  }
  friend Poly operator-(const Poly& p, const Poly& q) {
    std::vector<Rational> v(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = p[i] - q[i];
    return Poly(std::move(v));
  }
  friend Poly operator*(const Poly& p, const Poly& q) {
    if (p.is_zero() || q.is_zero()) return Poly();
    std::vector<Rational> v(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < q.coeffs_.size(); ++j)
        v[i + j] += p.coeffs_[i] * q.coeffs_[j];
    return Poly(std::move(v));
  }
  Poly operator-() const {
    std::vector<Rational> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = -coeffs_[i];
    return Poly(std::move(v));
  }
  friend bool operator==(const Poly& p, const Poly& q) { return p.coeffs_ == q.coeffs_; }

  /// Polynomial division: returns (quotient, remainder) with deg r < deg q.
  static std::pair<Poly, Poly> divmod(const Poly& p, const Poly& q) {
    if (q.is_zero()) throw std::domain_error("Poly: division by zero");
    std::vector<Rational> rem = p.coeffs_;
    std::vector<Rational> quo;
    const int dq = q.degree();
    while (static_cast<int>(rem.size()) - 1 >= dq) {
      while (!rem.empty() && rem.back() == 0) rem.pop_back();
      const int dr = static_cast<int>(rem.size()) - 1;
      if (dr < dq) break;
      Rational c = rem.back() / q.leading();
      const std::size_t shift = static_cast<std::size_t>(dr - dq);
      if (quo.size() < shift + 1) quo.resize(shift + 1);
      quo[shift] = c;
      for (int i = 0; i <= dq; ++i)
        rem[shift + static_cast<std::size_t>(i)] -= c * q[static_cast<std::size_t>(i)];
      rem.pop_back();
    }
    return {Poly(std::move(quo)), Poly(std::move(rem))};
  }

  /// Monic gcd via the Euclidean algorithm; gcd(0,0) = 0.
  static Poly gcd(Poly p, Poly q) {
    while (!q.is_zero()) {
      Poly r = divmod(p, q).second;
      p = std::move(q);
      q = std::move(r);
    }
    if (!p.is_zero()) p = p.scaled(Rational(1) / p.leading());
    return p;
  }

  Poly scaled(const Rational& c) const {
    if (c == 0) return Poly();
    std::vector<Rational> v(coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = coeffs_[i] * c;
    return Poly(std::move(v));
  }

  /// Largest k with a^k dividing the polynomial (0 for the zero polynomial).
  std::size_t low_order() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      if (coeffs_[i] != 0) return i;
    return 0;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<Rational> coeffs_;
};

/// Element of the field Q(a), kept in canonical form: numerator and
/// denominator coprime, denominator monic, zero represented as 0/1.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Rational(1)) {}
  RatFunc(int v) : RatFunc(Rational(v)) {}                // NOLINT(runtime/explicit)
  RatFunc(long v) : RatFunc(Rational(v)) {}               // NOLINT(runtime/explicit)
  RatFunc(Rational v) : num_(Poly(std::move(v))), den_(Rational(1)) {}  // NOLINT
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

  /// The generator a (or c * a^k via the two-argument form).
  static RatFunc alpha() { return RatFunc(Poly::monomial(1, 1), Poly(Rational(1))); }
  static RatFunc laurent(Rational c, long k) {
    if (k >= 0)
      return RatFunc(Poly::monomial(std::move(c), static_cast<std::size_t>(k)),
                     Poly(Rational(1)));
    return RatFunc(Poly(std::move(c)), Poly::monomial(1, static_cast<std::size_t>(-k)));
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_ == Poly(Rational(1)) && den_ == Poly(Rational(1)); }

  friend RatFunc operator+(const RatFunc& f, const RatFunc& g) {
    return RatFunc(f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_);
  }
  friend RatFunc operator-(const RatFunc& f, const RatFunc& g) {
    return RatFunc(f.num_ * g.den_ - g.num_ * f.den_, f.den_ * g.den_);
  }
  friend RatFunc operator*(const RatFunc& f, const RatFunc& g) {
    return RatFunc(f.num_ * g.num_, f.den_ * g.den_);
  }
  friend RatFunc operator/(const RatFunc& f, const RatFunc& g) {
    if (g.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return RatFunc(f.num_ * g.den_, f.den_ * g.num_);
  }
  RatFunc operator-() const {
    RatFunc r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }
  RatFunc& operator+=(const RatFunc& g) { return *this = *this + g; }
  RatFunc& operator-=(const RatFunc& g) { return *this = *this - g; }
  RatFunc& operator*=(const RatFunc& g) { return *this = *this * g; }
  RatFunc& operator/=(const RatFunc& g) { return *this = *this / g; }
  friend bool operator==(const RatFunc& f, const RatFunc& g) {
    return f.num_ == g.num_ && f.den_ == g.den_;
  }

  RatFunc inv() const {
    if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
    return RatFunc(den_, num_);
  }

  RatFunc pow(long e) const {
    if (e < 0) return inv().pow(-e);
    RatFunc r(1), b = *this;
    for (; e > 0; e >>= 1) {
      if (e & 1) r *= b;
      b *= b;
    }
    return r;
  }

  /// Laurent unit test: nonzero c * a^k with c in Q, k in Z.
  bool is_laurent_unit() const {
    return !num_.is_zero() && num_.is_monomial() && den_.is_monomial();
  }
  /// (c, k) such that *this == c * a^k; nullopt if not a Laurent unit.
  std::optional<std::pair<Rational, long>> laurent_parts() const {
    if (!is_laurent_unit()) return std::nullopt;
    return std::make_pair(num_.leading(),
                          static_cast<long>(num_.degree()) - den_.degree());
  }

  std::string render() const;
  std::string render_pretty() const;
  /// (negative?, rendering of the absolute value) in the pretty display form.
  std::pair<bool, std::string> render_pretty_signed() const;
  static RatFunc parse(const std::string& text);

 private:
  void canonicalize() {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    if (num_.is_zero()) {
      den_ = Poly(Rational(1));
      return;
    }
    Poly g = Poly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = Poly::divmod(num_, g).first;
      den_ = Poly::divmod(den_, g).first;
    }
    const Rational lc = den_.leading();
    if (lc != 1) {
      den_ = den_.scaled(Rational(1) / lc);
      num_ = num_.scaled(Rational(1) / lc);
    }
  }

  Poly num_, den_;
};

enum class UnitMode { kLaurent, kField };

/// Unit test in the requested sense: Laurent units are c*a^k; every nonzero
/// element is a field unit.
inline bool is_unit(const RatFunc& s, UnitMode mode) {
  return mode == UnitMode::kLaurent ? s.is_laurent_unit() : !s.is_zero();
}

namespace detail {

inline std::string render_rational(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) s += "/" + denominator(r).str();
  return s;
}

// One grammar term: `coeff` or `coeff*a^e`.
inline std::string render_term(const Rational& c, long e) {
  std::string s = render_rational(c);
  if (e != 0) s += "*a^" + std::to_string(e);
  return s;
}

// Laurent polynomial sum in the text grammar, terms by ascending exponent.
// `shift` subtracts a fixed power of a from every exponent.
inline std::string render_poly_expr(const Poly& p, long shift = 0) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int i = 0; i <= p.degree(); ++i) {
    const Rational& c = p[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    if (out.empty()) {
      out = render_term(c, i - shift);
    } else {
      out += (c < 0) ? " - " : " + ";
      out += render_term(abs(c), i - shift);
    }
  }
  return out;
}

}  // namespace detail

/// Canonical text form.  Grammar:
///   term := coeff ('*' 'a' '^' int)? ;  expr := term (('+'|'-') term)*
/// Elements whose denominator is a power of a are rendered as a single expr
/// with (possibly negative) exponents, e.g. "3/4*a^-2 + 1"; everything else
/// as "(<expr>)/(<expr>)".
inline std::string RatFunc::render() const {
  if (is_zero()) return "0";
  if (den_.is_monomial()) {  // denominator is a^k (monic)
    return detail::render_poly_expr(num_, den_.degree());
  }
  return "(" + detail::render_poly_expr(num_) + ")/(" +
         detail::render_poly_expr(den_) + ")";
}

namespace detail {

// Display form of an integer-coefficient polynomial: highest degree first,
// `2*a`, `a^2`, `-a` style pieces.
inline std::string pretty_poly(const Poly& p) {
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational ac = abs(c);
    std::string piece;
    if (i == 0) {
      piece = render_rational(ac);
    } else {
      std::string pow = (i == 1) ? "a" : "a^" + std::to_string(i);
      piece = (ac == 1) ? pow : render_rational(ac) + "*" + pow;
    }
    if (out.empty())
      out = (c < 0 ? "-" : "") + piece;
    else
      out += (c < 0 ? " - " : " + ") + piece;
  }
  return out.empty() ? "0" : out;
}

inline bool needs_parens(const std::string& s) {
  return s.find_first_of("*+- ") != std::string::npos;
}

}  // namespace detail

/// Human-oriented display form with integer-cleared fraction, e.g. "1/(2*a)"
/// for the canonical (1/2)/a.  Used by the CLI tensor printer.
inline std::pair<bool, std::string> RatFunc::render_pretty_signed() const {
  if (is_zero()) return {false, "0"};
  // Clear rational denominators: scale num and den to integer coefficients
  // with coprime contents, den with positive leading coefficient.
  Int num_lcm = 1, den_lcm = 1;
  for (const Rational& c : num_.coeffs()) num_lcm = lcm(num_lcm, denominator(c));
  for (const Rational& c : den_.coeffs()) den_lcm = lcm(den_lcm, denominator(c));
  Poly n = num_.scaled(Rational(num_lcm) * Rational(den_lcm));
  Poly d = den_.scaled(Rational(num_lcm) * Rational(den_lcm));
  Int ng = 0, dg = 0;
  for (const Rational& c : n.coeffs()) ng = gcd(ng, numerator(c));
  for (const Rational& c : d.coeffs()) dg = gcd(dg, numerator(c));
  Int g = gcd(ng, dg);
  if (g > 1) {
    n = n.scaled(Rational(1, g));
    d = d.scaled(Rational(1, g));
  }
  const bool neg = n.leading() < 0;
  if (neg) n = -n;
  if (d == Poly(Rational(1))) return {neg, detail::pretty_poly(n)};
  std::string ns = detail::pretty_poly(n);
  std::string ds = detail::pretty_poly(d);
  if (detail::needs_parens(ns)) ns = "(" + ns + ")";
  if (detail::needs_parens(ds)) ds = "(" + ds + ")";
  return {neg, ns + "/" + ds};
}

inline std::string RatFunc::render_pretty() const {
  auto [neg, s] = render_pretty_signed();
  return neg ? "-" + s : s;
}

namespace detail {

class ScalarParser {
 public:
  explicit ScalarParser(const std::string& text) : s_(text) {}

  RatFunc parse() {
    skip_ws();
    RatFunc r;
    if (peek() == '(') {
      // '(' expr ')' '/' '(' expr ')'
      expect('(');
      RatFunc num = parse_expr();
      expect(')');
      skip_ws();
      expect('/');
      skip_ws();
      expect('(');
      RatFunc den = parse_expr();
      expect(')');
      if (den.is_zero()) throw ScalarParseError("zero denominator");
      r = num / den;
    } else {
      r = parse_expr();
    }
    skip_ws();
    if (pos_ != s_.size()) throw ScalarParseError("trailing input at '" + rest() + "'");
    return r;
  }

 private:
  RatFunc parse_expr() {
    RatFunc acc = parse_term();
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') return acc;
      ++pos_;
      RatFunc t = parse_term();
      acc = (c == '+') ? acc + t : acc - t;
    }
  }

  RatFunc parse_term() {
    skip_ws();
    Rational c = parse_coeff();
    skip_ws();
    long e = 0;
    if (peek() == '*') {
      ++pos_;
      skip_ws();
      expect('a');
      expect('^');
      e = static_cast<long>(parse_int());
    }
    return RatFunc::laurent(std::move(c), e);
  }

  Rational parse_coeff() {
    Int n = parse_int();
    if (peek() == '/') {
      ++pos_;
      Int d = parse_digits();
      if (d == 0) throw ScalarParseError("zero denominator");
      return Rational(n, d);
    }
    return Rational(n);
  }

  Int parse_int() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    Int v = parse_digits();
    return neg ? Int(-v) : v;
  }

  Int parse_digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw ScalarParseError("expected number at '" + rest(start) + "'");
    return Int(s_.substr(start, pos_ - start));
  }

  void expect(char c) {
    if (peek() != c)
      throw ScalarParseError(std::string("expected '") + c + "' at '" + rest() + "'");
    ++pos_;
  }
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  std::string rest(std::size_t from = std::string::npos) const {
    return s_.substr(from == std::string::npos ? pos_ : from);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline RatFunc RatFunc::parse(const std::string& text) {
  return detail::ScalarParser(text).parse();
}

}  // namespace frobskein
