// Walks through the pipeline on the three-node network with five arrow types:
// completion, multipliers, multiplicities, and one predicted spectrum.

#include <iostream>

#include "netmult/netmult.hpp"

int main() {
  using namespace netmult;

  const Network net = make_network(3, {{"A", {1, 2, 3}},
                                       {"B", {1, 3, 2}},
                                       {"C", {1, 1, 1}},
                                       {"D", {3, 3, 3}},
                                       {"E", {2, 2, 2}}});

  const Completion comp = completion(net);
  std::cout << "monoid of " << comp.monoid.size() << " elements\n";

  const MultiplierSet ms = multipliers(comp.monoid);
  for (std::size_t l = 0; l < ms.count(); ++l) {
    std::cout << "multiplier " << l + 1 << " (size " << ms.blocks[l].size << "), character:";
    for (std::size_t s = 0; s < ms.monoid.size(); ++s)
      std::cout << ' ' << ms.monoid.names[s] << '=' << ms.blocks[l].character[s].real();
    std::cout << '\n';
  }

  const Network fund = fundamental_network(comp.monoid);
  for (const Network* n : {&net, &fund}) {
    std::cout << n->node_count << "-node network multiplicities:";
    for (auto m : multiplicities(*n, ms)) std::cout << ' ' << m;
    std::cout << '\n';
  }

  const Coefficients c = Coefficients::scalar({{"A", 2.0}, {"B", 3.0}, {"C", 5.0}, {"D", 7.0}, {"E", 11.0}});
  std::cout << "predicted spectrum:";
  for (Complex z : predicted_spectrum(net, ms, c)) std::cout << ' ' << z.real();
  std::cout << "\ndense eigenvalues: ";
  for (Complex z : dense_spectrum(build_admissible(net, c).matrix)) std::cout << ' ' << z.real();
  std::cout << '\n';
}
