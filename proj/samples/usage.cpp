// Small tour of the library: one value from each module.
#include <iostream>

#include "glr/generalized.hpp"
#include "glr/hive.hpp"
#include "glr/horn.hpp"
#include "glr/lr.hpp"
#include "glr/quiver.hpp"

int main() {
  using namespace glr;
  std::cout << "c^{(2,1)}_{(1),(1,1)} = " << lr_coefficient(Partition{1}, Partition{1, 1}, Partition{2, 1}) << "\n";

  const std::vector<IntSequence> lam(6, IntSequence{1, 0});
  std::cout << "f((1,0)^6) = " << f_sun(lam, 2) << "\n";
  std::cout << "sun hives = " << count_sun_hives(lam, 2, 6) << "\n";

  const SunQuiver q(2, 3);
  std::cout << "dim SI = " << dim_si_sun(q, weight_sigma1(q, lam)) << "\n";
  std::cout << "LP feasible = " << positivity(lam, 2, 6) << "\n";

  const auto T = generate_T(2, 6, HornVariant::EqualOne);
  std::cout << "|T(2,6)| = " << T.size() << "\n";
  for (std::size_t k = 1; k < 4; ++k) std::cout << "  " << HornInequality{T[k]}.str() << "\n";

  std::cout << "stretched f: ";
  for (auto v : stretched_table(ChainProblem{ChainKind::FSun, 2, lam}, 4)) std::cout << v << " ";
  std::cout << "\n";
}
