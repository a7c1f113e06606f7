// Shortest characteristic vectors of a few unimodular lattices.
#include <iostream>

#include "unimod/unimod.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> ids = {"Z5", "E8", "D12+", "A15+"};
  if (argc > 1) ids.assign(argv + 1, argv + argc);
  for (const auto& id : ids) {
    const auto l = unimod::catalog(id);
    const auto r = unimod::min_characteristic(l);
    std::cout << id << ": n=" << l.rank() << " min=" << r.min_norm << " count=" << r.count_at_min;
    if (!r.witnesses.empty()) {
      std::cout << " e.g. (";
      for (std::size_t i = 0; i < r.witnesses[0].size(); ++i) std::cout << (i ? " " : "") << r.witnesses[0].coords[i];
      std::cout << ")";
    }
    std::cout << "\n";
  }
}
