// Theta series of E8 through norm 10; coefficients are 240 * sigma_3(m).
#include <iostream>

#include "unimod/unimod.hpp"

int main() {
  const auto e8 = unimod::catalog("E8");
  const auto s = unimod::theta_of(e8, 10);
  std::cout << s.to_string() << "\n";
  for (std::int64_t m = 0; m <= 10; m += 2) std::cout << "r(" << m << ") = " << s.coefficient(4 * m) << "\n";
}
