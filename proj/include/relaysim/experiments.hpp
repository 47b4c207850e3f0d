#pragma once

#include "relaysim/analytic.hpp"
#include "relaysim/config.hpp"
#include "relaysim/montecarlo.hpp"

#include <span>
#include <string>
#include <vector>

namespace relaysim {

struct Fig2Row {
    long K = 0;
    Estimate empirical;
    double exact = 0.0; // finite-K quadrature oracle
    DirectWinsBreakdown asymptotic;
};

struct Fig4Row {
    long users = 0; // U = V
    Estimate orthogonal;
    Estimate simultaneous;
    double orthogonal_asymptotic = 0.0;
    double simultaneous_asymptotic = 0.0;
};

std::vector<Fig2Row> run_fig2(const ExperimentConfig& cfg);
std::vector<Fig4Row> run_fig4(const ExperimentConfig& cfg);

// stable schemas; %.12g fields, LF endings
std::string fig2_csv(std::span<const Fig2Row> rows);
std::string fig4_csv(std::span<const Fig4Row> rows);

std::string constants_report(const FadingLaw& law, double snr, long M);
// config echo plus light-tail diagnostics for the configured laws
std::string validate_report(const ExperimentConfig& cfg);

void write_text_file(const std::string& path, const std::string& text);

} // namespace relaysim
