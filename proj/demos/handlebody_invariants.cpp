// Demo: evaluating closed and punctured surfaces, the worked 2-handlebody
// invariant tables, sphere-skein normal forms, and the rank-one handle data.

#include <iostream>
#include <numeric>
#include <vector>

#include "frobskein/invariants.hpp"
#include "frobskein/surfaces.hpp"

using namespace frobskein;

int main() {
  const AlgebraPtr A = builtin_alpha();

  std::cout << "closed surface evaluations over alpha\n";
  std::cout << "-------------------------------------\n";
  for (int genus = 0; genus <= 3; ++genus) {
    const SurfacePresentation S(
        A, {SurfaceComponent(2 - 2 * genus, 0, true, A->unit())});
    std::cout << "  genus " << genus << ": " << eval_surface(S).render()
              << "\n";
  }

  std::cout << "\nS^2 x B^2: parallel belt spheres against the Kirby color\n";
  std::cout << "--------------------------------------------------------\n";
  for (int k = 0; k <= 3; ++k) {
    std::vector<SurfaceComponent> comps(
        static_cast<std::size_t>(2 * k),
        SurfaceComponent(2, 0, true, A->unit(), 1));
    std::vector<int> circle(static_cast<std::size_t>(2 * k));
    std::iota(circle.begin(), circle.end(), 1);
    const DecoratedSkeinInBoundary skein(
        SurfacePresentation(A, std::move(comps)),
        k == 0 ? std::vector<std::vector<int>>{}
               : std::vector<std::vector<int>>{circle});
    std::cout << "  " << 2 * k << " spheres: "
              << handlebody_invariant(skein, Scalar(1), 2).render() << "\n";
  }

  std::cout << "\nworked generator tables\n";
  std::cout << "-----------------------\n";
  std::cout << "  S^2 x B^2:  S^2 -> "
            << invariant_S2xB2(gen_S(2), Scalar(1)).render() << ", S^4 -> "
            << invariant_S2xB2(gen_S(4), Scalar(1)).render() << "\n";
  std::cout << "  B^3 x S^1:  D -> " << invariant_B3xS1(gen_D()).render()
            << ", S -> " << invariant_B3xS1(gen_S(1)).render() << "\n";
  std::cout << "  T^2 x B^2:  T^2 -> " << invariant_T2xB2(gen_T(2), 1).render()
            << ", T^4 -> " << invariant_T2xB2(gen_T(4), 1).render()
            << "  (r = 1)\n";

  std::cout << "\nsphere skein normal forms (DS -> -SD, DD -> 1 - a SS)\n";
  std::cout << "-----------------------------------------------------\n";
  for (const std::string word : {"DS", "DD", "DDS", "SDSD"}) {
    std::cout << "  " << word << " ->";
    for (const auto& [w, c] : sphere_skein_normal_form(word))
      std::cout << "  (" << c.render() << ") " << (w.empty() ? "1" : w);
    std::cout << "\n";
  }

  std::cout << "\nrank-one handle data at u = 2\n";
  std::cout << "-----------------------------\n";
  const RankOneHandleData t = rank_one_tables(Scalar(2));
  std::cout << "  p4 = " << t.p4.render() << ", c4 = " << t.c4.render()
            << ", m4 = " << t.m4.render() << "\n";
  std::cout << "  invariant of a homology order h: ";
  for (long h : {1, 2, 4})
    std::cout << "h=" << h << " -> " << Scalar(rank_one_dw(h)).render() << "  ";
  std::cout << "\n";
  return 0;
}
