#pragma once

#include <cstddef>
#include <vector>

#include "mwi/lattice.hpp"

namespace mwi {

// Carrier-free field values on a uniform z grid at fixed t, evaluated in
// batch through the runtime-selected sincos backend. `sum` is the exact
// two-exponential value, `factored` the closed form; the observed deviation
// must stay below the analytic dropped-term bound.
struct GridEval {
    std::vector<double> z;
    std::vector<cplx> sum;
    std::vector<cplx> factored;
    double max_abs_deviation = 0.0;
    double dropped_term_bound = 0.0;
};

GridEval doppler_grid(const LaserPair& lp, double v, double t, double z_lo, double z_hi,
                      std::size_t n);
GridEval raman_grid(const RamanPair& rp, double v, double c, double t, double z_lo,
                    double z_hi, std::size_t n);

}  // namespace mwi
