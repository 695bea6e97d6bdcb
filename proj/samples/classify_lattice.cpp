// Builds L(4), factorizes it through its row spread and by random search,
// and prints both certificates.

#include <iostream>

#include "srgec/srgec.hpp"

int main() {
  const srgec::Graph g = srgec::lattice(4);
  std::cout << "params " << srgec::recognize_srg(g)->str() << "\n\n";

  const auto constructive = srgec::classify(g, {}, srgec::row_spread(4));
  std::cout << srgec::write_certificate(*constructive.certificate) << '\n';

  srgec::SearchConfig cfg;
  cfg.seed = 42;
  const auto searched = srgec::classify(g, cfg);
  std::cout << srgec::write_certificate(*searched.certificate);
  return 0;
}
