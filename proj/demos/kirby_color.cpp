// Demo: the 2-handle Kirby color omega_{2n} computed three independent ways,
// its stratified coefficients, and the annulus-capping ladder back down to
// the empty skein.

#include <iostream>

#include "frobskein/solidtorus.hpp"

using namespace frobskein;

int main() {
  const AlgebraPtr A = builtin_alpha();

  std::cout << "omega_{2n} by three routes\n";
  std::cout << "--------------------------\n";
  for (int n = 1; n <= 3; ++n) {
    const KirbyColor by_copair = kirby_copair(n);
    const KirbyColor by_closed = kirby_closed_form(n);
    const KirbyColor by_symmetrizer = kirby_symmetrizer(n);
    const bool agree = by_copair.tensor == by_closed.tensor &&
                       by_copair.tensor == by_symmetrizer.tensor;
    std::cout << "n = " << n << "  (routes agree: " << (agree ? "yes" : "no")
              << ")\n";
    std::cout << "  tensor: " << by_copair.tensor.render() << "\n";
  }

  std::cout << "\ncup-basis presentation of omega_4\n";
  std::cout << "---------------------------------\n";
  std::cout << kirby_copair(2).dtl->render() << "\n";

  std::cout << "\nannulus capping ladder\n";
  std::cout << "----------------------\n";
  KirbyColor w = kirby_closed_form(3);
  for (int n = 3; n >= 1; --n) {
    const KirbyColor zero = annulus_cap(w, 1, A->unit());
    std::cout << "undotted cap on omega_" << 2 * n << ": "
              << (zero.tensor.is_zero() ? "0" : zero.tensor.render()) << "\n";
    w = annulus_cap(w, 1, A->basis(1));
    std::cout << "x-cap on omega_" << 2 * n << " -> omega_" << 2 * (n - 1)
              << ": " << w.tensor.render() << "\n";
  }

  std::cout << "\nmeridional Gram matrix at n = 2\n";
  std::cout << "-------------------------------\n";
  const GramMatrix g = gram_matrix(2);
  for (std::size_t i = 0; i < g.labels.size(); ++i)
    std::cout << "  <" << g.labels[i] << ", " << g.labels[i]
              << "> = " << g.entries[i][i].render() << "\n";
  std::cout << "  det = " << g.det.render()
            << ", perfect: " << (g.perfect ? "yes" : "no") << "\n";

  std::cout << "\nwhy Bar-Natan admits no Kirby color\n";
  std::cout << "-----------------------------------\n";
  try {
    copairing(1, builtin_bar_natan());
  } catch (const SingularPairing& e) {
    std::cout << "  " << e.what() << "\n";
  }
  return 0;
}
