#pragma once

#include <optional>

#include "fairmatch/instance.hpp"

namespace fairmatch {

enum class Answer { Yes, No, BudgetExceeded };

struct SolveResult {
    Answer answer = Answer::No;
    std::optional<Matching> witness;   // present iff answer == Yes
    long long nodes_explored = 0;      // meaningful for the backtracking oracle

    bool yes() const { return answer == Answer::Yes; }
};

}  // namespace fairmatch
