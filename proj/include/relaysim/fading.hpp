#pragma once

#include "relaysim/parent.hpp"
#include "relaysim/rng.hpp"

#include <span>
#include <string>

namespace relaysim {

enum class FadingKind { rayleigh, rician, lognormal };

// unit-mean channel power law. rician takes the line-of-sight K-factor,
// lognormal the shadowing spread in dB.
struct FadingLaw {
    FadingKind kind = FadingKind::rayleigh;
    double param = 0.0;

    static FadingLaw make_rayleigh();
    static FadingLaw make_rician(double k_factor);
    static FadingLaw make_lognormal(double sigma_db);

    // uniforms consumed per generated power (1 rayleigh, 2 otherwise);
    // fills always advance the stream by whole blocks
    int uniforms_per_draw() const;
    void sample_powers(std::span<double> out, UniformStream& stream) const;
    ParentDistribution parent() const;
    std::string name() const;
};

} // namespace relaysim
