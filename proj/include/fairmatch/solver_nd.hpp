#pragma once

#include "fairmatch/result.hpp"

// Neighborhood-diversity solver: drop isolated vertices and K2 components,
// contract V-side twin classes into single vertices carrying the summed
// threshold, solve the small quotient, and expand the quotient matching back
// by per-class quotient/remainder splitting.

namespace fairmatch {

struct PreprocessResult {
    Instance reduced;
    std::vector<int> u_orig;  // reduced u index -> original u index
    std::vector<int> v_orig;
    Matching forced;          // K2 pairs, in original indices
    bool early_no = false;
};

PreprocessResult preprocess(const Instance& inst);

struct QuotientInstance {
    Instance inner;  // U unchanged, one v per twin class, thresholds summed
    // Class members as reduced-instance v indices, ordered by descending
    // threshold (ties by index); classes ordered by smallest member.
    std::vector<std::vector<int>> class_members;
};

// Requires a preprocessed instance (no isolated vertices).
QuotientInstance build_quotient(const Instance& reduced);

// Splits per-color class totals among class members with thresholds
// member_thresholds (class order): totals decompose as sum_threshold * q + r
// with the remainder filled greedily along the member order.  With an
// all-zero threshold class, totals are equal across colors and go to the
// first member.  Exposed for direct testing of the arithmetic.
std::vector<std::vector<int>> split_class_loads(const std::vector<int>& member_thresholds,
                                                const std::vector<int>& totals);

// Expands a fair quotient matching to the reduced instance; throws
// std::invalid_argument if mq is not left-perfect and fair on q.inner.
Matching expand_matching(const QuotientInstance& q, const Instance& reduced,
                         const Matching& mq);

SolveResult solve_nd(const Instance& inst);

}  // namespace fairmatch
