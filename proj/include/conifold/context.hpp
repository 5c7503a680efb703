#pragma once

#include "conifold/errors.hpp"

#include <string>

namespace conifold {

/**
 * The variable alphabet shared by all characters in one computation:
 * three base-torus variables t1, t2, t3 followed by r framing variables
 * w1, ..., wr.  The context is a value type; two contexts agree exactly
 * when their ranks agree.
 */
class VariableContext {
public:
    explicit VariableContext(int rank) : rank_(rank) {
        if (rank < 1)
            throw InvalidArgument("VariableContext: rank must be >= 1");
    }

    int rank() const { return rank_; }

    /// Total variable count (3 + rank).
    int size() const { return 3 + rank_; }

    /// "t1".."t3" for indices 0..2, "w1".. for the rest.
    std::string variable_name(int index) const {
        if (index < 0 || index >= size())
            throw InvalidArgument("VariableContext: variable index out of range");
        if (index < 3)
            return "t" + std::to_string(index + 1);
        return "w" + std::to_string(index - 2);
    }

    friend bool operator==(const VariableContext&, const VariableContext&) = default;

private:
    int rank_;
};

} // namespace conifold
