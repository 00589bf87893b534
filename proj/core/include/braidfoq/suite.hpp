#pragma once

#include <cstdint>
#include <string>

#include "braidfoq/json_io.hpp"
#include "braidfoq/verify.hpp"

namespace braidfoq {

struct SuiteConfig {
    std::uint64_t seed = 42;
    unsigned workers = 1;
    int bound = 3;
    std::size_t row_cap = MembershipOptions::kDefaultRowCap;
};

constexpr int kSuiteCriteria = 9;

std::string criterion_name(int id);

/// One entry {"id", "name", "passed", "cases", "failures", "expected_failures", "details"}.
/// Depends only on the seed, bound and row cap.
json run_criterion(int id, const SuiteConfig& cfg);

/// All criteria plus {"seed", "bound", "passed"}.
json run_suite(const SuiteConfig& cfg);

/// Exact equality of two scalars from possibly different cyclotomic fields.
bool same_value(const Scalar& a, const Scalar& b);

/// conj(O'_{a,d-a}) O'_{d-a,a} = zeta^(s d) c zeta^((d-2s) a) for every old degree a,
/// where O' is the shifted omega read on the original degree labels.
bool shift_constant_holds(const OmegaData& data, int s);

}  // namespace braidfoq
