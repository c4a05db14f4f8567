#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cicalc {

// Exact finite-difference fit of an eventually-polynomial integer sequence.
// Slides the window start forward until either the window is identically
// zero (degree -infinity) or some polynomial interpolates it exactly with at
// least one confirming point (window length >= degree + 2).
struct FitResult {
    bool ok = false;
    bool neg_inf = false;
    int degree = -1;       // meaningful when ok && !neg_inf
    int window_start = 0;  // index into the sequence where the fit begins
    std::string flag;      // reason when !ok
};

FitResult fit_poly_degree(const std::vector<int64_t>& values, int burn_in);

struct InconclusiveFit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace cicalc
