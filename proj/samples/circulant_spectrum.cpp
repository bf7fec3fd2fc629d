// Eigenvalues of a block-circulant matrix from its DFT multipliers, compared
// with a dense eigensolve.

#include <cstdlib>
#include <iostream>

#include "netmult/netmult.hpp"

int main(int argc, char** argv) {
  using namespace netmult;
  const std::size_t n = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 6;
  const Eigen::Index m = argc > 2 ? std::strtol(argv[2], nullptr, 10) : 2;
  if (n == 0 || m <= 0) {
    std::cerr << "usage: circulant_spectrum [nodes] [block_dim]\n";
    return 2;
  }

  const Network ring = circulant_network(n);
  const MultiplierSet ms = circulant_multipliers(n);
  Rng rng(2024);
  const Coefficients c = Coefficients::random(ms.monoid.names, m, rng);

  const auto predicted = predicted_spectrum(ring, ms, c);
  const auto dense = dense_spectrum(build_admissible(ring, c).matrix);
  const MatchResult match = match_spectra(predicted, dense, 1e-9);

  std::cout << n << " nodes, " << m << "x" << m << " blocks: " << predicted.size() << " eigenvalues from " << ms.count()
            << " scalar multipliers\n";
  std::cout << "max distance to dense eigensolve: " << match.max_distance << (match.pass ? " (match)" : " (MISMATCH)")
            << "\n";
  return match.pass ? 0 : 1;
}
