#include "cicalc/fitting.hpp"

#include <stdexcept>

namespace cicalc {

FitResult fit_poly_degree(const std::vector<int64_t>& values, int burn_in) {
    FitResult out;
    const int n = int(values.size());
    if (burn_in < 0) burn_in = 0;
    for (int start = burn_in; start < n; ++start) {
        std::vector<int64_t> w(values.begin() + start, values.end());
        bool all_zero = true;
        for (int64_t v : w)
            if (v != 0) { all_zero = false; break; }
        if (all_zero) {
            out.ok = true;
            out.neg_inf = true;
            out.window_start = start;
            return out;
        }
        // successive difference rows; degree e fits exactly iff row e+1 is
        // identically zero with at least one entry to confirm
        std::vector<int64_t> row = w;
        for (int e = 0; int(row.size()) >= 2; ++e) {
            std::vector<int64_t> next;
            for (size_t i = 0; i + 1 < row.size(); ++i) next.push_back(row[i + 1] - row[i]);
            bool zero = true;
            for (int64_t v : next)
                if (v != 0) { zero = false; break; }
            if (zero && !next.empty()) {
                out.ok = true;
                out.degree = e;
                out.window_start = start;
                return out;
            }
            row = std::move(next);
        }
    }
    out.flag = "window too short for an exact fit";
    return out;
}

}  // namespace cicalc
