#pragma once

#include "reachcorr/sampling.hpp"

namespace reachcorr {

/// Monte Carlo point estimate with a plug-in standard error.
struct EstimateCI {
  double mean = 0.0;
  double std_error = 0.0;
  long long samples = 0;
  Seed seed;
};

}  // namespace reachcorr
