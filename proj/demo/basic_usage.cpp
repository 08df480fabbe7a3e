// Small tour of the library: span arithmetic, operator algebra, windowed
// homology, and the classification verdict for a couple of weight systems.

#include <cstdio>

#include "wpd/classify.hpp"
#include "wpd/graded.hpp"
#include "wpd/io.hpp"
#include "wpd/semigroup.hpp"

int main() {
  using namespace wpd;

  WeightSystem w({2, 3});
  std::printf("weights %s, frobenius %ld\n", w.str().c_str(), frobenius(w));

  auto E = euler_field<Rat>(w);
  auto x0 = WeylElement<Rat>::variable(2, 0);
  std::printf("[E, x0] = %s\n", to_string(commutator(E, x0)).c_str());

  Window win = Window::default_for(w);
  KoszulReport rep = koszul_homology_window(w, TwistParameter::rational(0), win);
  std::printf("koszul homology total at twist 0: %ld\n", rep.homology_total);
  for (const auto &d : rep.degrees)
    for (const auto &wit : d.witnesses)
      std::printf("  degree %ld witness (%s, %s)\n", d.degree,
                  wit[0].c_str(), wit[1].c_str());

  for (const char *tw : {"0", "1", "generic"}) {
    Classification c = classify(w, TwistParameter::parse(tw));
    std::printf("twist %s: exactness %s, kernel %s, stack %s\n", tw,
                str(c.exactness), str(c.kernel), str(c.stack_equivalence));
  }
  return 0;
}
