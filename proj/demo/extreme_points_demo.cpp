// Builds a member of the negative-coefficient class, splits it over the
// extreme points and checks the grid minimum of Re E against beta.

#include <iostream>

#include "hmclass/hmclass.hpp"

int main() {
  using namespace hmclass;

  const ClassParams p{0.25, 0.75, 0.5, 0.3};
  const NegativeCoefficientForm f({{2, 0.05}, {4, 0.01}}, {{1, 0.2}, {3, 0.02}});

  const MembershipReport report = is_member_negative_class(f, p);
  std::cout << "deficiency " << report.deficiency << " -> " << to_string(report.verdict) << "\n";

  const WeightDecomposition w = decompose(f, p);
  std::cout << "t1 = " << w.t1 << "\n";
  for (const auto& [n, t] : w.t) std::cout << "t_" << n << " = " << t << "\n";
  for (const auto& [n, s] : w.s) std::cout << "s_" << n << " = " << s << "\n";

  const GridMinimum m = min_real_E(f.to_harmonic(), p, standard_grid());
  std::cout << "min Re E on the standard grid: " << m.value << " (beta = " << p.beta() << ")\n";
  return 0;
}
