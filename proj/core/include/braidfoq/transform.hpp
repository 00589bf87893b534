#pragma once

#include <optional>
#include <string>
#include <vector>

#include "braidfoq/graded.hpp"

namespace braidfoq {

/// omega'_ij = zeta^(-s d_j + s(s-1)/2) omega_ij, degrees d_i - s, homogeneity d - 2s.
/// The constant phase makes shift(s) shift(t) = shift(s + t).
OmegaData degree_shift(const OmegaData& data, int s);

struct CoverResult {
    OmegaData data;
    std::optional<std::string> warning;
};

/// Degrees and d doubled, zeta replaced by its principal fourth root.
/// Exact data moves to Q(zeta_4N) (Q(zeta_8N) when zeta = -zeta_N^a with N odd).
CoverResult double_cover(const OmegaData& data);

struct ReductionStep {
    enum class Kind { Shift, Cover };
    Kind kind;
    int s = 0;

    friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

enum class ParityConstraint { None, KMinusLEven };

struct ReductionTrace {
    std::vector<ReductionStep> steps;
    ParityConstraint parity = ParityConstraint::None;
    OmegaData final_data;
    Scalar c;
};

/// Even d: shift(d/2). Odd d: cover, then shift(d). Requires valid input.
ReductionTrace reduce_to_degree_zero(const OmegaData& data);

std::string to_string(const ReductionStep& step);
std::string to_string(ParityConstraint p);

}  // namespace braidfoq
