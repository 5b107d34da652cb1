// Builds B3+, prints the chart of O_{e1+e3}(1), samples a point of the orbit,
// recovers a group word for it and checks the orbit dimension.

#include "coadj/coadj.hpp"

#include <iostream>

int main() {
  using namespace coadj;
  const auto sys = positive_roots(RootKind::B, 3);
  const Root alpha = Root::sum(1, 3);
  const auto chart = orbit_chart(sys, alpha);

  std::cout << sys.name() << ", alpha = " << to_string(alpha) << "\n";
  for (const auto& line : render_chart_text(chart)) std::cout << "  " << line << "\n";

  auto [f, w] = random_orbit_point(sys, alpha, 1, kDefaultSeed);
  std::cout << "sample: " << to_json(f).dump() << "\n";
  std::cout << "in chart: " << std::boolalpha << contains(chart, f) << "\n";

  const auto back = construct_group_word(chart, f);
  std::cout << "recovered word of length " << back.size() << " reproduces the sample: "
            << (coadjoint_apply(back, Functional::dual_basis(sys, alpha)) == f) << "\n";
  std::cout << "orbit dimension " << orbit_dimension(f) << " = |S(alpha)| = " << chart.data().singular.size() << "\n";
}
