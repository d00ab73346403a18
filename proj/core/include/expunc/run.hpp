#pragma once

#include <utility>
#include <vector>

#include "expunc/errors.hpp"
#include "expunc/model.hpp"

namespace expunc {

struct RunResult {
    std::vector<std::pair<int, Scalar>> transcript;
    int queries = 0;
    int opt = 0;
    ErrorReport errors;
    Scalar ratio{1};
    // Spanning tree phase 2: how often the charge partner had to be queried.
    int otherwise_queries = 0;
};

RunResult capture(const QueryState& st);

// Fills opt (offline optimum), the error report and the ratio.
void evaluate(RunResult& r, const Instance& inst, const Values& pred, const Values& real);

// queries / opt, with 0/0 reported as 1.
Scalar competitive_ratio(int queries, int opt);

}  // namespace expunc
