#include <catch2/catch_amalgamated.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "frobskein/solidtorus.hpp"

using namespace frobskein;

namespace {

Scalar S(long num, long den = 1) { return Scalar(Rational(num, den)); }
Scalar al() { return Scalar::alpha(); }

SkeinElement cup_skein(const AlgebraPtr& A, std::uint8_t e) {
  return SkeinElement(DiagramSum::single(A, Diagram::cup(e)));
}

Scalar tensor_coeff(const TensorElement& t, const std::vector<std::uint8_t>& e) {
  auto it = t.terms().find(e);
  return it == t.terms().end() ? Scalar(0) : it->second;
}

BitSequence walk(const std::string& s) { return bits_from_string(s); }

}  // namespace

TEST_CASE("meridional pairing on cups and the class basis", "[solidtorus]") {
  const AlgebraPtr A = builtin_alpha();
  const SkeinElement udcup = cup_skein(A, 0);
  const SkeinElement dcup = cup_skein(A, 1);

  SECTION("decorated cup pins") {
    CHECK(pairing(udcup, udcup) == S(2));
    CHECK(pairing(dcup, dcup) == S(2) * al());
    CHECK(pairing(udcup, dcup) == S(0));
    CHECK(pairing(dcup, udcup) == S(0));
  }

  SECTION("class basis is orthogonal with norms 2 and 2 alpha") {
    for (int n = 1; n <= 3; ++n) {
      const auto basis = class_basis(n);
      std::vector<SkeinElement> v;
      for (const auto& cls : basis) v.push_back(skein_of_class(cls));
      for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) {
          const Scalar p = pairing(v[i], v[j]);
          if (i != j) {
            CHECK(p == S(0));
          } else {
            CHECK(p == (basis[i].dotted ? S(2) * al() : S(2)));
          }
        }
    }
  }

  SECTION("off-diagonal pin for distinct walk classes") {
    const SkeinElement e1 = skein_of_class({walk("0011"), false});
    const SkeinElement e2 = skein_of_class({walk("0101"), false});
    CHECK(pairing(e1, e2) == S(0));
  }

  SECTION("symmetry and bilinearity") {
    const SkeinElement a = skein_of_class({walk("0011"), false});
    const SkeinElement b = skein_of_class({walk("0110"), true});
    const SkeinElement combo = S(3) * a + S(5) * b;
    CHECK(pairing(combo, b) == S(5) * pairing(b, b));
    CHECK(pairing(a, combo) == S(3) * pairing(a, a));
    CHECK(pairing(a, b) == pairing(b, a));
  }

  SECTION("size mismatch") {
    const SkeinElement two = skein_of_class({walk("0101"), false});
    CHECK_THROWS_AS(pairing(udcup, two), SizeMismatch);
  }

  SECTION("skein elements must live in dTL(0, 2n)") {
    CHECK_THROWS_AS(SkeinElement(DiagramSum::identity(A, 1)), SizeMismatch);
  }
}

TEST_CASE("gram matrices and perfection", "[solidtorus]") {
  SECTION("alpha n=1 is diag(2, 2 alpha) on labeled classes") {
    const GramMatrix g = gram_matrix(1);
    REQUIRE(g.labels == std::vector<std::string>{"e[01]", "ė[01]"});
    CHECK(g.entries[0][0] == S(2));
    CHECK(g.entries[1][1] == S(2) * al());
    CHECK(g.entries[0][1] == S(0));
    CHECK(g.entries[1][0] == S(0));
    CHECK(g.det == S(4) * al());
    CHECK(g.perfect);
  }

  SECTION("alpha n=2 is diag(2,2,2, 2a,2a,2a) in class order") {
    const GramMatrix g = gram_matrix(2);
    REQUIRE(g.labels.size() == 6);
    CHECK(g.labels[0] == "e[0011]");
    CHECK(g.labels[3] == "ė[0011]");
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) {
        if (i != j) {
          CHECK(g.entries[i][j] == S(0));
        } else {
          CHECK(g.entries[i][i] == (i < 3 ? S(2) : S(2) * al()));
        }
      }
    CHECK(g.det == S(64) * al().pow(3));
  }

  SECTION("determinant is a Laurent unit for n <= 3") {
    for (int n = 1; n <= 3; ++n) {
      const GramMatrix g = gram_matrix(n);
      CHECK(g.perfect);
      CHECK(is_unit(g.det, UnitMode::kLaurent));
    }
  }

  SECTION("bar_natan pairing degenerates") {
    const GramMatrix g = gram_matrix(1, builtin_bar_natan());
    CHECK(g.entries[0][0] == S(2));
    CHECK(g.entries[0][1] == S(0));
    CHECK(g.entries[1][0] == S(0));
    CHECK(g.entries[1][1] == S(0));
    CHECK(g.det == S(0));
    CHECK_FALSE(g.perfect);
    CHECK_THROWS_MATCHES(
        copairing(1, builtin_bar_natan()), SingularPairing,
        Catch::Matchers::Message(
            "pairing singular: algebra not strongly separable"));
  }

  SECTION("beta(3) pairing is perfect") {
    const GramMatrix g = gram_matrix(1, builtin_beta(3));
    REQUIRE(g.entries.size() == 3);
    CHECK(g.entries[0][0] == S(3));
    CHECK(g.entries[1][2] == S(3) * al());
    CHECK(g.entries[2][1] == S(3) * al());
    CHECK(g.entries[1][1] == S(0));
    CHECK(g.entries[2][2] == S(0));
    CHECK(g.det == S(-27) * al().pow(2));
    CHECK(g.perfect);
  }

  SECTION("trivial algebra pairing is perfect") {
    const GramMatrix g = gram_matrix(1, builtin_trivial(S(2)));
    REQUIRE(g.entries.size() == 1);
    CHECK(g.det == S(1));
    CHECK(g.perfect);
  }

  SECTION("general-algebra gram is restricted to n=1") {
    CHECK_THROWS_AS(gram_matrix(2, builtin_bar_natan()), SizeMismatch);
  }
}

TEST_CASE("cap values", "[solidtorus]") {
  const AlgebraPtr A = builtin_alpha();

  SECTION("decorated cup pins") {
    CHECK(cap_value(cup_skein(A, 0)) == S(0));
    CHECK(cap_value(cup_skein(A, 1)) == S(1));
  }

  SECTION("n=2 class with both arcs in B") {
    const ArcPartition p = matching_of_walk(walk("0101"));
    REQUIRE(p.c_mask() == 0u);
    const SkeinElement e = skein_of_class({walk("0101"), false});
    CHECK(cap_value(e) == (S(2) * al()).inv());
  }

  SECTION("odd arc count kills undotted caps") {
    for (const auto& w : enumerate_classes(3))
      CHECK(cap_value(skein_of_class({w, false})) == S(0));
  }

  SECTION("closed formula on all classes n <= 4") {
    for (int n = 1; n <= 4; ++n) {
      for (const auto& w : enumerate_classes(n)) {
        const ArcPartition p = matching_of_walk(w);
        const int c = std::popcount(p.c_mask());
        const int b = n - c;
        const Scalar cap_e = cap_value(skein_of_class({w, false}));
        const Scalar cap_de = cap_value(skein_of_class({w, true}));
        if (n % 2 == 0) {
          Scalar expect = Scalar(Rational(1) / pow_2(n - 1)) *
                          al().inv().pow(n / 2);
          if (b % 2 != 0) expect = -expect;
          CHECK(cap_e == expect);
          CHECK(cap_de == S(0));
        } else {
          Scalar expect = Scalar(Rational(1) / pow_2(n - 1)) *
                          al().inv().pow((n - 1) / 2);
          if (c % 2 != 0) expect = -expect;
          CHECK(cap_e == S(0));
          CHECK(cap_de == expect);
        }
      }
    }
  }

  SECTION("linearity") {
    const SkeinElement a = cup_skein(A, 0);
    const SkeinElement b = cup_skein(A, 1);
    CHECK(cap_value(S(3) * a + S(7) * b) == S(7));
  }
}

TEST_CASE("kirby color by three routes", "[solidtorus]") {
  SECTION("omega_2 pins") {
    const KirbyColor w = kirby_copair(1);
    CHECK(w.n == 1);
    CHECK(w.tensor.render() == "1/2 + 1/(2*a) * x⊗x");
    CHECK(tensor_coeff(w.tensor, {0, 0}) == S(1, 2));
    CHECK(tensor_coeff(w.tensor, {1, 1}) == (S(2) * al()).inv());
    CHECK(tensor_coeff(w.tensor, {0, 1}) == S(0));
    REQUIRE(w.dtl.has_value());
    CHECK(embed_tensor(*w.dtl) == w.tensor);
  }

  SECTION("omega_4 coefficient pins") {
    const KirbyColor w = kirby_closed_form(2);
    CHECK(tensor_coeff(w.tensor, {0, 0, 0, 0}) == S(6, 16));
    CHECK(tensor_coeff(w.tensor, {1, 1, 1, 1}) == S(6, 16) * al().inv().pow(2));
    CHECK(tensor_coeff(w.tensor, {1, 1, 0, 0}) == S(2, 16) * al().inv());
    CHECK(tensor_coeff(w.tensor, {0, 0, 1, 1}) == S(2, 16) * al().inv());
    CHECK(tensor_coeff(w.tensor, {0, 1, 0, 1}) == S(-2, 16) * al().inv());
    CHECK(tensor_coeff(w.tensor, {1, 0, 1, 0}) == S(-2, 16) * al().inv());
    CHECK(tensor_coeff(w.tensor, {1, 0, 0, 1}) == S(2, 16) * al().inv());
    CHECK(tensor_coeff(w.tensor, {0, 1, 1, 0}) == S(2, 16) * al().inv());
  }

  SECTION("n=0 is the empty skein with coefficient 1") {
    for (const KirbyColor& w :
         {kirby_copair(0), kirby_closed_form(0), kirby_symmetrizer(0)}) {
      CHECK(w.n == 0);
      REQUIRE(w.tensor.terms().size() == 1);
      CHECK(tensor_coeff(w.tensor, {}) == S(1));
    }
  }

  SECTION("three-route agreement for n <= 3") {
    for (int n = 0; n <= 3; ++n) {
      const KirbyColor a = kirby_copair(n);
      const KirbyColor b = kirby_closed_form(n);
      const KirbyColor c = kirby_symmetrizer(n);
      CHECK(a.tensor == b.tensor);
      CHECK(a.tensor == c.tensor);
      REQUIRE(a.dtl.has_value());
      REQUIRE(c.dtl.has_value());
      CHECK(embed_tensor(*a.dtl) == a.tensor);
      CHECK(embed_tensor(*c.dtl) == c.tensor);
      CHECK_FALSE(b.dtl.has_value());
    }
  }

  SECTION("no odd-weight terms and stratified coefficient symmetry") {
    for (int n = 1; n <= 3; ++n) {
      const KirbyColor w = kirby_closed_form(n);
      for (const auto& [e, c] : w.tensor.terms()) {
        int weight = 0;
        for (auto b : e) weight += b;
        REQUIRE(weight % 2 == 0);
        const int k = weight / 2;
        const Scalar mag = Scalar(super_catalan(n - k, k) / pow_2(2 * n)) *
                           al().inv().pow(k);
        CHECK((c == mag || c == -mag));
      }
    }
  }
}

TEST_CASE("super Catalan numbers and von Szily's identity", "[solidtorus]") {
  CHECK(super_catalan(0, 0) == 1);
  CHECK(super_catalan(1, 0) == 2);
  CHECK(super_catalan(0, 1) == 2);
  CHECK(super_catalan(1, 1) == 2);
  CHECK(super_catalan(2, 0) == 6);
  CHECK(super_catalan(0, 2) == 6);
  CHECK(super_catalan(3, 2) == 12);
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b) {
      CHECK(von_szily_check(a, b));
      CHECK(super_catalan(a, b) == super_catalan(b, a));
      CHECK(boost::multiprecision::denominator(super_catalan(a, b)) == 1);
    }
}

TEST_CASE("annulus capping and the t recursion", "[solidtorus]") {
  const AlgebraPtr A = builtin_alpha();
  const AlgebraElement one = A->basis(0);
  const AlgebraElement x = A->basis(1);

  SECTION("undotted caps annihilate, x-caps descend, at every cyclic position") {
    for (int n = 1; n <= 2; ++n) {
      const KirbyColor w = kirby_copair(n);
      const KirbyColor target = kirby_copair(n - 1);
      for (int pos = 1; pos <= 2 * n; ++pos) {
        CHECK(annulus_cap(w, pos, one).tensor.is_zero());
        const KirbyColor capped = annulus_cap(w, pos, x);
        CHECK(capped.n == n - 1);
        CHECK(capped.tensor == target.tensor);
        CHECK_FALSE(capped.dtl.has_value());
      }
    }
  }

  SECTION("t_{2n} = 2n alpha / (2n-1) from the symmetrized cups") {
    for (int n = 1; n <= 3; ++n) {
      DiagramSum cups = DiagramSum::single(A, Diagram::cup(1));
      for (int i = 1; i < n; ++i)
        cups = tensor(cups, DiagramSum::single(A, Diagram::cup(1)));
      const DiagramSum sym_cups = compose(symmetrizer(2 * n, A), cups);
      const DiagramSum cap_right =
          n == 1 ? DiagramSum::single(A, Diagram::cap(1))
                 : tensor(DiagramSum::identity(A, 2 * n - 2),
                          DiagramSum::single(A, Diagram::cap(1)));
      const DiagramSum capped = compose(cap_right, sym_cups);
      const Scalar t = Scalar(Rational(2 * n, 2 * n - 1)) * al();
      DiagramSum expect(A, 0, 2 * n - 2);
      if (n == 1) {
        expect = t * DiagramSum::single(A, Diagram::empty());
      } else {
        DiagramSum lower = DiagramSum::single(A, Diagram::cup(1));
        for (int i = 2; i < n; ++i)
          lower = tensor(lower, DiagramSum::single(A, Diagram::cup(1)));
        expect = t * compose(symmetrizer(2 * n - 2, A), lower);
      }
      CHECK(embed_tensor(capped) == embed_tensor(expect));
    }
  }

  SECTION("capping errors") {
    const KirbyColor w0 = kirby_copair(0);
    CHECK_THROWS_AS(annulus_cap(w0, 1, x), SizeMismatch);
    const KirbyColor w1 = kirby_copair(1);
    CHECK_THROWS_AS(annulus_cap(w1, 0, x), IndexOutOfRange);
    CHECK_THROWS_AS(annulus_cap(w1, 3, x), IndexOutOfRange);
  }
}

TEST_CASE("copairing and the zig-zag identity", "[solidtorus]") {
  SECTION("copairing terms carry weights 1/2 and 1/(2 alpha)") {
    for (int n = 1; n <= 2; ++n) {
      const auto terms = copairing(n);
      REQUIRE(terms.size() == 2 * enumerate_classes(n).size());
      for (const auto& term : terms) {
        CHECK(term.left == term.right);
        CHECK((term.coeff == S(1, 2) || term.coeff == (S(2) * al()).inv()));
      }
    }
  }

  SECTION("zig-zag: (pairing ⊗ id) ∘ (id ⊗ copairing) = id on the class basis") {
    for (int n = 1; n <= 2; ++n) {
      const auto terms = copairing(n);
      for (const auto& cls : class_basis(n)) {
        const SkeinElement v = skein_of_class(cls);
        TensorElement out(builtin_alpha(), 2 * static_cast<std::size_t>(n));
        for (const auto& term : terms) {
          const Scalar c = term.coeff * pairing(v, term.left);
          if (c.is_zero()) continue;
          for (const auto& [e, w] : term.right.embedding().terms())
            out.accumulate(e, c * w);
        }
        CHECK(out == v.embedding());
      }
    }
  }
}

TEST_CASE("skein module rank", "[solidtorus]") {
  CHECK(skein_module_rank(0) == 1);
  CHECK(skein_module_rank(2) == 2);
  CHECK(skein_module_rank(4) == 6);
  CHECK(skein_module_rank(6) == 20);
  CHECK(skein_module_rank(8) == 70);
  for (int m = 1; m <= 9; m += 2) CHECK(skein_module_rank(m) == 0);
  CHECK_THROWS_AS(skein_module_rank(-2), SizeMismatch);
  for (int n = 1; n <= 4; ++n)
    CHECK(Rational(static_cast<long>(class_basis(n).size())) ==
          skein_module_rank(2 * n));
}
