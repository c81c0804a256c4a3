// Walks through the ABCCBA extraction at k = 2 on [3]^8.
//
// The base colouring looks only at the subsequence of 1's and 2's, so the
// induced colouring is constant and every 8-set is homogeneous. z_1 and z_3
// share a colour while z_2 differs, which forces (i, j) = (1, 3).
#include <iostream>

#include "blocksets/blocksets.hpp"

using namespace blocksets;

int main() {
  const std::size_t k = 2, n = 2 * k + 4;
  const Word z1 = z_word(1, k), z2 = z_word(2, k), z3 = z_word(3, k);

  auto theta = TableColouring::tabulate(n, 3, 2, [&](const Word& w) -> ColourId {
    std::vector<Symbol> sub;
    for (Symbol s : w.symbols())
      if (s != 3) sub.push_back(s);
    if (sub.size() == z2.size() && Word::encode(sub, 2) == z2) return 1;
    return 0;
  });
  const Colouring base = theta.as_colouring();

  std::cout << "chi family for k=" << k << ": " << chi_words(k).size() << " words\n";
  std::cout << "z-words: " << z1.to_string() << " " << z2.to_string() << " " << z3.to_string() << "\n";

  InducedColouring induced(base, k);
  auto s = homogeneous_subset_search(n, 2 * k + 2, 2 * k + 4, induced_subset_colouring(induced, n));
  if (!s) {
    std::cout << "no homogeneous set\n";
    return 1;
  }
  std::cout << "homogeneous set:";
  for (auto m : s->members) std::cout << ' ' << m;
  std::cout << "\n";

  const auto ex = theorem3_extract(base, k, *s);
  std::cout << "z_" << ex.i << " and z_" << ex.j << " share colour " << ex.colour << "\n";
  std::cout << "blocks " << blocks_to_text(ex.placement.blocks()) << ", reference " << ex.placement.reference_string()
            << ", pattern " << pattern_of(ex.placement) << "\n";
  for (const Word& w : blockset_points(ex.placement, Template::parse("123")))
    std::cout << "  " << w.to_string() << "  colour " << theta.at(w) << "\n";
  return 0;
}
