#include "ps2gd/sampling.hpp"

#include <algorithm>
#include <unordered_set>

#include "ps2gd/errors.hpp"

namespace ps2gd {

std::vector<std::size_t> sample_minibatch(RandomSource& rng, std::size_t n,
                                          std::size_t b) {
  if (b == 0 || b > n) {
    throw argument_error("sample_minibatch: need 1 <= b <= n, got b=" +
                         std::to_string(b) + ", n=" + std::to_string(n));
  }
  std::unordered_set<std::size_t> picked;
  picked.reserve(b * 2);
  for (std::size_t j = n - b; j < n; ++j) {
    const std::size_t t = rng.next_below(j + 1);
    picked.insert(picked.count(t) ? j : t);
  }
  std::vector<std::size_t> out(picked.begin(), picked.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t sample_inner_length(RandomSource& rng, std::size_t max_steps) {
  if (max_steps == 0) {
    throw argument_error("sample_inner_length: max_steps must be positive");
  }
  return 1 + rng.next_below(max_steps);
}

}  // namespace ps2gd
