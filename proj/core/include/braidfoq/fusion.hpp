#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "braidfoq/graded.hpp"
#include "braidfoq/json_io.hpp"
#include "braidfoq/transform.hpp"

namespace braidfoq {

enum class Parity { Even, Odd };

Parity parse_parity(const std::string& text);
std::string to_string(Parity p);

struct FusionContext {
    int n = 2;
    Parity parity = Parity::Even;
};

struct IrrepLabel {
    int k = 0;
    int l = 0;

    std::string to_string() const;
    friend auto operator<=>(const IrrepLabel&, const IrrepLabel&) = default;
};

/// Multiset of labels with multiplicities.
using FusionDecomposition = std::map<IrrepLabel, int>;

bool label_valid(const IrrepLabel& a, const FusionContext& ctx);

/// r(a,b) x r(m,k) = sum over j = |a-m|, |a-m|+2, ..., a+m of r(j, b+k).
FusionDecomposition fuse(const IrrepLabel& a, const IrrepLabel& b, const FusionContext& ctx);
/// Extends fuse bilinearly.
FusionDecomposition fuse(const FusionDecomposition& x, const FusionDecomposition& y, const FusionContext& ctx);

IrrepLabel conj_label(const IrrepLabel& a);

/// dim r(0) = 1, dim r(1) = n, dim r(k+1) = n dim r(k) - dim r(k-1). Memoized.
mpz_class dim(const IrrepLabel& a, const FusionContext& ctx);
mpz_class total_dim(const FusionDecomposition& x, const FusionContext& ctx);

struct RingViolation {
    std::string check;
    std::vector<IrrepLabel> witness;
};

struct RingReport {
    FusionContext ctx;
    int bound = 0;
    std::size_t labels = 0;
    std::size_t cases = 0;
    std::vector<RingViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Exhaustive ring axioms over labels with k <= bound and |l| <= bound.
RingReport ring_checks(const FusionContext& ctx, int bound);

struct QParameter {
    double q = 0;
    /// Tr(F^* F) / |c| on the reduced instance.
    Scalar tau;
    Scalar trace;
    Scalar sign_source;
    ReductionTrace reduction;
};

/// Reduces to d = 0, then |q| + 1/|q| = tau and sign(q) = -sign(c).
QParameter q_parameter(const OmegaData& data);
/// The root in (0, 1] of x + 1/x = tau, signed.
double q_from_tau(long double tau, int sign);

json to_json(const FusionDecomposition& x);
json to_json(const RingReport& rep);
json to_json(const QParameter& q);

}  // namespace braidfoq
