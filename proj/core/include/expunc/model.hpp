#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "expunc/scalar.hpp"

namespace expunc {

// Thrown when a caller breaks an operation's precondition (bad id, double query, ...).
class ContractViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

// Thrown when an algorithm detects that one of its own invariants failed.
class InvariantViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class Interval {
public:
    Interval() = default;
    static Interval open(Scalar lo, Scalar hi);
    static Interval point(Scalar w);

    bool is_trivial() const { return trivial_; }
    bool is_open() const { return !trivial_; }
    const Scalar& lower() const { return lo_; }
    const Scalar& upper() const { return hi_; }
    const Scalar& value() const;

    // Strict membership for open intervals, equality for trivial ones.
    bool contains(const Scalar& x) const;

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.trivial_ == b.trivial_ && a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }

private:
    bool trivial_ = true;
    Scalar lo_{0};
    Scalar hi_{0};
};

// Two open intervals intersect when max(L) < min(U); an open interval meets a
// trivial one when it contains the point. Two trivial intervals never intersect.
bool intersects(const Interval& a, const Interval& b);

// True when `inner` is a subset of `outer` (as point sets).
bool subset_of(const Interval& inner, const Interval& outer);

enum class Problem { Minimum, Sorting, Mst };

const char* problem_tag(Problem p);

struct Instance {
    Problem problem = Problem::Minimum;
    std::vector<Interval> intervals;
    std::vector<std::vector<int>> sets;     // minimum and sorting
    int vertices = 0;                       // mst
    std::vector<std::pair<int, int>> ends;  // mst, one entry per edge

    int size() const { return static_cast<int>(intervals.size()); }
    bool is_graph() const { return problem == Problem::Mst; }

    // Throws ContractViolation on dangling ids, self loops, disconnected graphs,
    // or (for minimum/sorting) empty sets.
    void validate() const;
};

using Values = std::vector<Scalar>;

// Checks w_i in I_i for every element; `what` names the vector in the message.
void check_values(const Instance& inst, const Values& values, const char* what);

// Deterministic order used to pick the leftmost element: lower limit first,
// then trivial before open, then smallest id.
bool leftmost_before(const std::vector<Interval>& eff, int a, int b);

int leftmost(const std::vector<Interval>& eff, const std::vector<int>& set);

class QueryState {
public:
    QueryState(const Instance& inst, Values realization);

    const Instance& instance() const { return *inst_; }
    int size() const { return static_cast<int>(eff_.size()); }

    const std::vector<Interval>& effective() const { return eff_; }
    const Interval& effective_interval(int i) const;

    // Open in the original input and not queried yet.
    bool unqueried(int i) const;
    bool revealed(int i) const;

    Scalar query(int i);

    const std::vector<std::pair<int, Scalar>>& transcript() const { return transcript_; }
    int queries() const { return static_cast<int>(transcript_.size()); }
    std::vector<int> queried_ids() const;

private:
    void check_id(int i) const;

    const Instance* inst_;
    Values real_;
    std::vector<Interval> eff_;
    std::vector<char> revealed_;
    std::vector<std::pair<int, Scalar>> transcript_;
};

// Effective intervals after revealing `ids` to the values in `values`.
std::vector<Interval> reveal(std::vector<Interval> eff, const std::vector<int>& ids, const Values& values);

}  // namespace expunc
