// theta_L(-1/t) against (t/i)^{n/2} theta_L(t) for Z^3 at a few points.
#include <iostream>

#include "unimod/unimod.hpp"

int main() {
  const auto l = unimod::catalog("Z3");
  unimod::ThetaEvaluator ev(l);
  for (const auto& t : unimod::default_points()) {
    const auto r = unimod::check_relation(ev, unimod::Relation::PoissonS, t, 1e-10);
    std::cout.precision(15);
    std::cout << "t=" << t.x << "+" << t.y << "i  lhs=" << r.lhs << "  rhs=" << r.rhs << "  residual=" << r.residual
              << (r.pass ? "  ok" : "  FAIL") << "\n";
  }
}
