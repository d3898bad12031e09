#include "gupsu2/random_family.hpp"

#include <vector>

namespace gupsu2 {

AlgebraicFunction RandomFamily::function(double s, double beta, int degree) {
  std::vector<double> c(static_cast<std::size_t>(degree) + 1);
  for (double& x : c) x = uniform(-1.0, 1.0);
  // Keep the requested degree: leading magnitude in [0.1, 1].
  c.back() = (uniform(0.0, 1.0) < 0.5 ? -1.0 : 1.0) * uniform(0.1, 1.0);
  return {std::move(c), s, beta};
}

ModeState RandomFamily::mode_state(double base, std::initializer_list<int> offsets) {
  const double s_value = s();
  const double b = beta();
  ModeState st(base);
  for (int k : offsets) st.accumulate(k, function(s_value, b));
  return st;
}

SequenceState RandomFamily::sequence_state(double base, std::initializer_list<int> offsets) {
  const double s_value = s();
  const double b = beta();
  SequenceState st(base);
  for (int k : offsets) st.accumulate(k, function(s_value, b));
  return st;
}

}  // namespace gupsu2
