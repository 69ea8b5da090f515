#ifndef PS2GD_SAMPLING_HPP
#define PS2GD_SAMPLING_HPP

#include <cstddef>
#include <vector>

#include "ps2gd/random_source.hpp"

namespace ps2gd {

/// Uniform random b-subset of {0,...,n-1} without replacement (Floyd's
/// algorithm: every subset equally likely, O(b) expected draws). Returned
/// sorted ascending so downstream reductions have a fixed order.
std::vector<std::size_t> sample_minibatch(RandomSource& rng, std::size_t n,
                                          std::size_t b);

/// Uniform integer in {1,...,max_steps}: the inner-loop length of one epoch.
std::size_t sample_inner_length(RandomSource& rng, std::size_t max_steps);

}  // namespace ps2gd

#endif  // PS2GD_SAMPLING_HPP
