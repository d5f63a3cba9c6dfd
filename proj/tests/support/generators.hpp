#pragma once

#include <cmath>
#include <random>

#include "heyland/errors.hpp"
#include "heyland/testdata.hpp"

namespace heyland::testing {

/// Random valid machine data: currents and voltages log-uniform over two
/// decades, phi_sc < phi0. Draws yielding a degenerate construction are redrawn.
class MachineGenerator {
public:
    explicit MachineGenerator(std::uint64_t seed) : rng_(seed) {}

    MachineTestData next() {
        for (;;) {
            MachineTestData d;
            d.i0 = log_uniform(0.5, 50.0);
            d.isc = log_uniform(1.0, 100.0);
            d.v_rated = log_uniform(100.0, 10000.0);
            d.v_sc = d.v_rated * log_uniform(0.01, 1.0);
            const double phi0 = uniform(30.0, 89.0);
            d.phi0 = Angle::degrees(phi0);
            d.phi_sc = Angle::degrees(uniform(5.0, phi0 - 1.0));
            d.p_rated_kw = log_uniform(0.1, 10.0);
            d.phases = uniform(0.0, 1.0) < 0.8 ? 3 : 1;
            d.rotor_cu_fraction = uniform(0.2, 0.8);
            try {
                validate(d);
                refer_to_rated(d);
            } catch (const Error&) {
                continue;
            }
            return d;
        }
    }

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }
    std::mt19937_64& rng() { return rng_; }

private:
    std::mt19937_64 rng_;
};

} // namespace heyland::testing
