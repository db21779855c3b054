#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "frobskein/serialize.hpp"
#include "frobskein/surfaces.hpp"

using namespace frobskein;

namespace {

Scalar S(long num, long den = 1) { return Scalar(Rational(num, den)); }

TensorElement unit_inputs(const AlgebraPtr& A, int count) {
  TensorElement t = TensorElement::scalar(A, Scalar(1));
  for (int i = 0; i < count; ++i)
    t = outer(t, TensorElement::from_element(A->unit()));
  return t;
}

}  // namespace

TEST_CASE("surface components validate their invariants", "[surfaces]") {
  const AlgebraPtr A = builtin_alpha();
  const AlgebraElement one = A->unit();

  SECTION("genus values for standard components") {
    CHECK(SurfaceComponent(0, 0, true, one).genus() == 1);   // torus
    CHECK(SurfaceComponent(2, 0, true, one).genus() == 0);   // sphere
    CHECK(SurfaceComponent(1, 1, true, one).genus() == 0);   // disk
    CHECK(SurfaceComponent(0, 2, true, one).genus() == 0);   // annulus
    CHECK(SurfaceComponent(-2, 0, true, one).genus() == 2);  // genus 2
    CHECK(SurfaceComponent(0, 0, false, one).genus() == 1);  // Klein bottle
  }

  SECTION("orientable components need chi <= 2 and chi + boundary even") {
    CHECK_THROWS_AS(SurfaceComponent(3, 1, true, one), std::invalid_argument);
    CHECK_THROWS_AS(SurfaceComponent(1, 0, true, one), std::invalid_argument);
    CHECK_THROWS_AS(SurfaceComponent(2, 1, true, one), std::invalid_argument);
  }

  SECTION("negative counts and negative genus are rejected") {
    CHECK_THROWS_AS(SurfaceComponent(0, -1, true, one), std::invalid_argument);
    CHECK_THROWS_AS(SurfaceComponent(0, 0, true, one, -1),
                    std::invalid_argument);
    CHECK_THROWS_AS(SurfaceComponent(0, 4, true, one), std::invalid_argument);
    CHECK_THROWS_AS(SurfaceComponent(2, 2, true, one), std::invalid_argument);
  }

  SECTION("type beta components construct but have no genus") {
    const SurfaceComponent mobius(0, 1, false, one);
    CHECK(mobius.type_beta());
    CHECK_THROWS_AS(mobius.genus(), TypeBetaComponent);
    const SurfaceComponent rp2(1, 0, false, one);
    CHECK(rp2.type_beta());
    CHECK_FALSE(SurfaceComponent(0, 0, false, one).type_beta());
  }
}

TEST_CASE("eval_surface on closed and bounded components", "[surfaces]") {
  const AlgebraPtr A = builtin_alpha();
  const AlgebraElement one = A->unit();
  const AlgebraElement x = A->basis(1);

  SECTION("pinned single components") {
    CHECK(eval_surface(SurfacePresentation(
              A, {SurfaceComponent(0, 0, true, one)})) ==
          TensorElement::scalar(A, S(2)));
    CHECK(eval_surface(SurfacePresentation(
              A, {SurfaceComponent(2, 0, true, x)})) ==
          TensorElement::scalar(A, S(1)));
    CHECK(eval_surface(SurfacePresentation(
              A, {SurfaceComponent(2, 0, true, one)})) ==
          TensorElement::scalar(A, S(0)));
    CHECK(eval_surface(SurfacePresentation(
              A, {SurfaceComponent(0, 2, true, x)})) == A->comul(x));
    CHECK(eval_surface(SurfacePresentation(
              A, {SurfaceComponent(0, 2, true, one)})) == A->comul(one));
    CHECK(eval_surface(SurfacePresentation(
              A, {SurfaceComponent(1, 1, true, x)})) ==
          TensorElement::from_element(x));
  }

  SECTION("closed components evaluate to counit(H^g * label)") {
    for (const AlgebraPtr& B :
         {builtin_alpha(), builtin_bar_natan(), builtin_beta(3)}) {
      const AlgebraElement H = handle_element(B);
      for (int g = 0; g <= 3; ++g)
        for (std::size_t i = 0; i < B->rank(); ++i) {
          const AlgebraElement label = B->basis(i);
          const SurfacePresentation pres(
              B, {SurfaceComponent(2 - 2 * g, 0, true, label)});
          CHECK(eval_surface(pres) ==
                TensorElement::scalar(
                    B, B->counit(H.pow(static_cast<std::size_t>(g)) * label)));
        }
    }
  }

  SECTION("type gamma components use the same genus formula") {
    CHECK(eval_surface(SurfacePresentation(
              A, {SurfaceComponent(0, 0, false, one)})) ==
          TensorElement::scalar(A, S(2)));
  }

  SECTION("components multiply into disjoint slots") {
    const SurfacePresentation two(
        A, {SurfaceComponent(0, 0, true, one), SurfaceComponent(2, 0, true, x)});
    CHECK(eval_surface(two) == TensorElement::scalar(A, S(2)));
    const SurfacePresentation disks(
        A, {SurfaceComponent(1, 1, true, x), SurfaceComponent(1, 1, true, one)});
    CHECK(eval_surface(disks) == outer(TensorElement::from_element(x),
                                       TensorElement::from_element(one)));
  }

  SECTION("type beta components are rejected at evaluation") {
    const SurfacePresentation bad(A, {SurfaceComponent(0, 1, false, one)});
    CHECK_THROWS_AS(eval_surface(bad), TypeBetaComponent);
  }

  SECTION("punctured presentations are rejected") {
    const SurfacePresentation punct(A, {SurfaceComponent(0, 0, true, one, 1)});
    CHECK_THROWS_AS(eval_surface(punct), SlotMismatch);
  }
}

TEST_CASE("eval_punctured folds inputs with multiplication", "[surfaces]") {
  const AlgebraPtr A = builtin_alpha();
  const AlgebraElement one = A->unit();
  const AlgebraElement x = A->basis(1);

  SECTION("pinned examples") {
    const SurfacePresentation ptorus(A,
                                     {SurfaceComponent(0, 0, true, one, 1)});
    CHECK(eval_punctured(ptorus, TensorElement::from_element(x)) ==
          TensorElement::scalar(A, S(0)));
    CHECK(eval_punctured(ptorus, TensorElement::from_element(one)) ==
          TensorElement::scalar(A, S(2)));
    const SurfacePresentation sphere2(A,
                                      {SurfaceComponent(2, 0, true, one, 2)});
    CHECK(eval_punctured(sphere2, outer(TensorElement::from_element(x),
                                        TensorElement::from_element(one))) ==
          TensorElement::scalar(A, S(1)));
  }

  SECTION("linear in the inputs") {
    const SurfacePresentation ptorus(A,
                                     {SurfaceComponent(0, 0, true, one, 1)});
    const TensorElement in =
        S(3) * TensorElement::from_element(x) + TensorElement::from_element(one);
    CHECK(eval_punctured(ptorus, in) ==
          S(3) * eval_punctured(ptorus, TensorElement::from_element(x)) +
              eval_punctured(ptorus, TensorElement::from_element(one)));
  }

  SECTION("all-unit inputs reduce to eval_surface") {
    const std::vector<SurfacePresentation> family = {
        SurfacePresentation(A, {SurfaceComponent(0, 0, true, one, 2)}),
        SurfacePresentation(A, {SurfaceComponent(2, 0, true, x, 1)}),
        SurfacePresentation(A, {SurfaceComponent(0, 2, true, x, 1),
                                SurfaceComponent(1, 1, true, one, 2)}),
        SurfacePresentation(A, {SurfaceComponent(-2, 0, true, x, 3)}),
    };
    for (const auto& S_ : family)
      CHECK(eval_punctured(S_, unit_inputs(A, S_.total_punctures())) ==
            eval_surface(S_.stripped()));
  }

  SECTION("input slot count must match") {
    const SurfacePresentation ptorus(A,
                                     {SurfaceComponent(0, 0, true, one, 1)});
    CHECK_THROWS_AS(eval_punctured(ptorus, unit_inputs(A, 2)), SlotMismatch);
    CHECK_THROWS_AS(
        eval_punctured(ptorus, TensorElement::scalar(A, Scalar(1))),
        SlotMismatch);
  }
}

TEST_CASE("slot maps scatter boundary circles and punctures", "[surfaces]") {
  const AlgebraPtr A = builtin_alpha();
  const AlgebraElement one = A->unit();
  const AlgebraElement x = A->basis(1);
  const std::vector<SurfaceComponent> disks = {
      SurfaceComponent(1, 1, true, x), SurfaceComponent(1, 1, true, one)};

  SECTION("boundary permutation") {
    const SurfacePresentation seq(A, disks);
    const SurfacePresentation swapped(A, disks,
                                      SurfacePresentation::SlotMap{{2}, {1}});
    CHECK(eval_surface(seq) == outer(TensorElement::from_element(x),
                                     TensorElement::from_element(one)));
    CHECK(eval_surface(swapped) == outer(TensorElement::from_element(one),
                                         TensorElement::from_element(x)));
  }

  SECTION("puncture permutation") {
    const std::vector<SurfaceComponent> spheres = {
        SurfaceComponent(2, 0, true, one, 1), SurfaceComponent(0, 0, true, one, 1)};
    const TensorElement in =
        outer(TensorElement::from_element(x), TensorElement::from_element(one));
    const SurfacePresentation seq(A, spheres);
    const SurfacePresentation swapped(A, spheres, std::nullopt,
                                      SurfacePresentation::SlotMap{{2}, {1}});
    // Sequential: sphere eats x (ε(x)=1), torus eats 1 (ε(H)=2).
    CHECK(eval_punctured(seq, in) == TensorElement::scalar(A, S(2)));
    // Swapped: sphere eats 1 (ε(1)=0).
    CHECK(eval_punctured(swapped, in) == TensorElement::scalar(A, S(0)));
  }

  SECTION("bijection violations") {
    using Map = SurfacePresentation::SlotMap;
    CHECK_THROWS_AS(SurfacePresentation(A, disks, Map{{1}, {1}}), SlotMismatch);
    CHECK_THROWS_AS(SurfacePresentation(A, disks, Map{{0}, {1}}), SlotMismatch);
    CHECK_THROWS_AS(SurfacePresentation(A, disks, Map{{1}, {3}}), SlotMismatch);
    CHECK_THROWS_AS(SurfacePresentation(A, disks, Map{{1, 2}, {}}),
                    SlotMismatch);
    CHECK_THROWS_AS(SurfacePresentation(A, disks, Map{{1}}), SlotMismatch);
  }
}

TEST_CASE("skein relations hold under evaluation", "[surfaces]") {
  for (const AlgebraPtr& A :
       {builtin_alpha(), builtin_bar_natan(), builtin_beta(3)}) {
    const AlgebraElement one = A->unit();
    const TensorElement delta1 = A->comul(one);

    SECTION("annulus evaluates to the comultiplication: " + A->name()) {
      for (std::size_t i = 0; i < A->rank(); ++i)
        CHECK(eval_surface(SurfacePresentation(
                  A, {SurfaceComponent(0, 2, true, A->basis(i))})) ==
              A->comul(A->basis(i)));
    }

    SECTION("sphere components contribute the counit: " + A->name()) {
      for (std::size_t i = 0; i < A->rank(); ++i)
        CHECK(eval_surface(SurfacePresentation(
                  A, {SurfaceComponent(2, 0, true, A->basis(i))})) ==
              TensorElement::scalar(A, A->counit(A->basis(i))));
    }

    SECTION("neck-cutting a torus into a twice-punctured sphere: " +
            A->name()) {
      for (std::size_t i = 0; i < A->rank(); ++i) {
        const SurfacePresentation torus(
            A, {SurfaceComponent(0, 0, true, A->basis(i))});
        const SurfacePresentation sphere2(
            A, {SurfaceComponent(2, 0, true, A->basis(i), 2)});
        TensorElement cut = TensorElement::scalar(A, Scalar(0));
        for (const auto& [e, c] : delta1.terms())
          cut = cut + c * eval_punctured(
                              sphere2,
                              outer(TensorElement::from_element(A->basis(e[0])),
                                    TensorElement::from_element(A->basis(e[1]))));
        CHECK(eval_surface(torus) == cut);
      }
    }

    SECTION("the two neck-cuttings of a twice-punctured torus agree: " +
            A->name()) {
      const SurfacePresentation torus2(A,
                                       {SurfaceComponent(0, 0, true, one, 2)});
      const SurfacePresentation sphere4(A,
                                        {SurfaceComponent(2, 0, true, one, 4)});
      for (std::size_t i = 0; i < A->rank(); ++i)
        for (std::size_t j = 0; j < A->rank(); ++j) {
          const TensorElement ab =
              outer(TensorElement::from_element(A->basis(i)),
                    TensorElement::from_element(A->basis(j)));
          TensorElement cut = TensorElement::scalar(A, Scalar(0));
          for (const auto& [e, c] : delta1.terms())
            cut = cut +
                  c * eval_punctured(
                          sphere4,
                          outer(outer(ab, TensorElement::from_element(
                                              A->basis(e[0]))),
                                TensorElement::from_element(A->basis(e[1]))));
          CHECK(eval_punctured(torus2, ab) == cut);
        }
    }
  }
}

TEST_CASE("skein_eval supports the listed ambient shapes", "[surfaces]") {
  const AlgebraPtr A = builtin_alpha();
  const AlgebraElement one = A->unit();
  const AlgebraElement x = A->basis(1);

  SECTION("B3 disk configurations pass labels through") {
    const SurfacePresentation disks(
        A,
        {SurfaceComponent(1, 1, true, x), SurfaceComponent(1, 1, true, one)});
    const TensorElement expect = outer(TensorElement::from_element(x),
                                       TensorElement::from_element(one));
    CHECK(skein_eval("B3", disks) == expect);
    CHECK(skein_eval("ball", disks) == expect);
  }

  SECTION("S3 empty surface evaluates to 1") {
    const SurfacePresentation empty(A);
    const TensorElement out = skein_eval("S3", empty);
    CHECK(out.slots() == 0);
    CHECK(out == TensorElement::scalar(A, S(1)));
  }

  SECTION("S1xS2 essential sphere labeled x evaluates to 1") {
    const SurfacePresentation sphere(A, {SurfaceComponent(2, 0, true, x)});
    CHECK(skein_eval("S1xS2", sphere) == TensorElement::scalar(A, S(1)));
  }

  SECTION("solid torus accepts bounded surfaces") {
    const SurfacePresentation disk(A, {SurfaceComponent(1, 1, true, x)});
    CHECK(skein_eval("solid_torus", disk) ==
          TensorElement::from_element(x));
  }

  SECTION("closed shapes reject bounded surfaces") {
    const SurfacePresentation disk(A, {SurfaceComponent(1, 1, true, x)});
    CHECK_THROWS_AS(skein_eval("S3", disk), SlotMismatch);
    CHECK_THROWS_AS(skein_eval("S1xS2", disk), SlotMismatch);
  }

  SECTION("unknown shapes are rejected") {
    const SurfacePresentation empty(A);
    CHECK_THROWS_AS(skein_eval("T3", empty), UnsupportedShape);
    CHECK_THROWS_AS(skein_eval("", empty), UnsupportedShape);
  }
}

TEST_CASE("algebra element parsing", "[surfaces]") {
  const AlgebraPtr A = builtin_alpha();

  SECTION("pinned forms") {
    CHECK(parse_element(A, "x") == A->basis(1));
    CHECK(parse_element(A, "1") == A->unit());
    CHECK(parse_element(A, "0").is_zero());
    CHECK(parse_element(A, "2*x + 1") ==
          S(2) * A->basis(1) + A->unit());
    CHECK(parse_element(A, "1/2*x") == S(1, 2) * A->basis(1));
    CHECK(parse_element(A, "x - x").is_zero());
    CHECK(parse_element(A, "-x") == S(-1) * A->basis(1));
    // x^2 reduces in k[x]/(x^2 - alpha).
    CHECK(parse_element(A, "x^2") == Scalar::alpha() * A->unit());
    CHECK(parse_element(A, "1*a^1*x") == Scalar::alpha() * A->basis(1));
  }

  SECTION("round trip through render") {
    for (const AlgebraPtr& B :
         {builtin_alpha(), builtin_bar_natan(), builtin_beta(3),
          builtin_trivial(S(2))}) {
      std::vector<AlgebraElement> elements = {B->unit(),
                                              S(0) * B->unit()};
      for (std::size_t i = 0; i < B->rank(); ++i) {
        elements.push_back(B->basis(i));
        elements.push_back(S(-3, 7) * B->basis(i) + Scalar::alpha() * B->unit());
      }
      for (const auto& e : elements)
        CHECK(parse_element(B, e.render()) == e);
    }
  }

  SECTION("errors") {
    CHECK_THROWS_AS(parse_element(A, ""), std::invalid_argument);
    CHECK_THROWS_AS(parse_element(A, "   "), std::invalid_argument);
    CHECK_THROWS_AS(parse_element(A, "x +"), std::invalid_argument);
    CHECK_THROWS_AS(parse_element(builtin_trivial(S(2)), "x"),
                    std::invalid_argument);
  }
}

TEST_CASE("surface JSON round trips", "[surfaces]") {
  const AlgebraPtr A = builtin_alpha();
  const AlgebraElement one = A->unit();
  const AlgebraElement x = A->basis(1);

  SECTION("schema keys and round trip") {
    const SurfacePresentation pres(
        A,
        {SurfaceComponent(0, 2, true, x, 1), SurfaceComponent(2, 0, true, one, 1)});
    const Json j = surface_to_json(pres);
    REQUIRE(j.contains("components"));
    const Json& c0 = j.at("components").at(0);
    CHECK(c0.at("chi") == 0);
    CHECK(c0.at("boundary") == 2);
    CHECK(c0.at("orientable") == true);
    CHECK(c0.at("punctures") == 1);
    const SurfacePresentation back = surface_from_json(j);
    REQUIRE(back.components().size() == 2);
    CHECK(back.boundary_slots() == pres.boundary_slots());
    CHECK(back.puncture_slots() == pres.puncture_slots());
    const TensorElement in =
        outer(TensorElement::from_element(x), TensorElement::from_element(one));
    CHECK(eval_punctured(back, in) == eval_punctured(pres, in));
  }

  SECTION("parses the documented literal schema") {
    const Json j = Json::parse(
        R"({"components":[{"chi":0,"boundary":2,"orientable":true,"label":"x","punctures":1}]})");
    const SurfacePresentation pres = surface_from_json(j);
    REQUIRE(pres.components().size() == 1);
    CHECK(pres.components()[0].label() == x);
    CHECK(pres.total_boundary() == 2);
    CHECK(pres.total_punctures() == 1);
    CHECK(eval_punctured(pres, TensorElement::from_element(x)) ==
          A->comul(x * x));
  }

  SECTION("tensor and diagram sum round trips") {
    const TensorElement t = kirby_closed_form(2).tensor;
    CHECK(tensor_from_json(tensor_to_json(t)) == t);
    const DiagramSum d = *kirby_copair(2).dtl;
    const DiagramSum d2 = diagram_sum_from_json(diagram_sum_to_json(d));
    CHECK(embed_tensor(d2) == embed_tensor(d));
    CHECK(d2.terms().size() == d.terms().size());
  }

  SECTION("kirby JSON is stratified by even weight") {
    const KirbyColor w = kirby_copair(2);
    const Json j = kirby_to_json(w);
    REQUIRE(j.at("strata").size() == 3);
    for (const auto& stratum : j.at("strata"))
      CHECK(stratum.at("weight").get<int>() % 2 == 0);
    REQUIRE(j.contains("dtl"));
    const KirbyColor back = kirby_from_json(j);
    CHECK(back.tensor == w.tensor);
    REQUIRE(back.dtl.has_value());
    CHECK(embed_tensor(*back.dtl) == w.tensor);
    // The closed form carries no dTL presentation.
    CHECK_FALSE(kirby_from_json(kirby_to_json(kirby_closed_form(2)))
                    .dtl.has_value());
  }

  SECTION("algebra serialization with parameters") {
    CHECK(same_algebra(*algebra_from_json(algebra_to_json(builtin_beta(3))),
                       *builtin_beta(3)));
    CHECK(same_algebra(
        *algebra_from_json(algebra_to_json(builtin_trivial(S(2)))),
        *builtin_trivial(S(2))));
    CHECK(same_algebra(*algebra_from_json(Json("alpha")), *builtin_alpha()));
  }
}
