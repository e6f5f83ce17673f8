#pragma once

#include "counit/report.hpp"

namespace counit {

// Commands: gb, verify-hopf, resolution, exactness, homology, ext, poincare,
// bialgebra-cohomology, cogroupoid, transport, oracle.
Report run_command(const std::string& cmd, const RunConfig& config,
                   const std::string& cache_dir);

}  // namespace counit
