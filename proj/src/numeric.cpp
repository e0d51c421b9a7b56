#include "brach/numeric.hpp"

#include "brach/errors.hpp"

namespace brach {

double nonuniform_derivative(const std::vector<double>& x, const std::vector<double>& f,
                             std::size_t i) {
  const std::size_t n = x.size();
  if (n < 3 || i == 0 || i >= n)
    throw ArgumentError("nonuniform_derivative: need 3+ nodes and 1 <= i <= n-1");
  // difference form: constants are annihilated exactly, no 1/h-amplified
  // cancellation on strongly graded meshes
  if (i + 1 < n) {
    const double hm = x[i] - x[i - 1];
    const double hp = x[i + 1] - x[i];
    return hm / (hp * (hm + hp)) * (f[i + 1] - f[i]) -
           hp / (hm * (hm + hp)) * (f[i - 1] - f[i]);
  }
  // one-sided at the last node
  const double h1 = x[i - 1] - x[i - 2];
  const double h2 = x[i] - x[i - 1];
  return h2 / (h1 * (h1 + h2)) * (f[i - 2] - f[i]) -
         (h1 + h2) / (h1 * h2) * (f[i - 1] - f[i]);
}

}  // namespace brach
