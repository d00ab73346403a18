#include "expunc/run.hpp"

#include "expunc/verifier.hpp"

namespace expunc {

RunResult capture(const QueryState& st) {
    RunResult r;
    r.transcript = st.transcript();
    r.queries = st.queries();
    return r;
}

Scalar competitive_ratio(int queries, int opt) {
    if (opt == 0) return queries == 0 ? Scalar(1) : Scalar(queries);
    return Scalar(queries) / Scalar(opt);
}

void evaluate(RunResult& r, const Instance& inst, const Values& pred, const Values& real) {
    r.opt = static_cast<int>(offline_optimum(inst, real).size());
    r.errors = error_report(inst, pred, real);
    r.ratio = competitive_ratio(r.queries, r.opt);
}

}  // namespace expunc
