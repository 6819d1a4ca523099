#pragma once

#include <random>

#include "eventdecor/spacetime.hpp"

namespace eventdecor::testing {

/// Ground/satellite layouts with heights up to max_height and the beamsplitter,
/// mirror and source placed between ground and 1 km.
class LayoutGenerator {
 public:
  explicit LayoutGenerator(std::uint64_t seed, double max_height = 2e7)
      : rng_(seed), max_height_(max_height) {}

  GroundSatelliteLayout next() {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    GroundSatelliteLayout l;
    l.mirror_height = 1e3 * unit(rng_);
    l.pbs_height = 1e3 * unit(rng_);
    l.source_height = std::max(l.mirror_height, l.pbs_height) + 1e3 * unit(rng_);
    l.ground_height = l.mirror_height + 1e3 * unit(rng_);
    l.satellite_height = l.pbs_height + max_height_ * unit(rng_);
    l.t_i = 1e7 * (2.0 * unit(rng_) - 1.0);
    l.offset = 1e-2 * unit(rng_);
    return l;
  }

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng_);
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
  double max_height_;
};

}  // namespace eventdecor::testing
