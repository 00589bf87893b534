#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "braidfoq/graded.hpp"

namespace braidfoq {

/// Seeded generator with a platform-independent bounded draw.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, n).
    std::uint64_t below(std::uint64_t n);
    /// Uniform in [lo, hi].
    int range(int lo, int hi);
    bool coin() { return below(2) == 1; }
    template <class T>
    const T& pick(const std::vector<T>& v) {
        return v.at(static_cast<std::size_t>(below(v.size())));
    }

private:
    std::mt19937_64 engine_;
};

struct SampleOptions {
    std::vector<int> dims{2, 3, 4, 6};
    int max_order = 24;
    int max_abs_d = 3;
    /// Coefficients of random entries lie in [-coeff, coeff].
    int coeff = 2;
};

/// zeta_8^6, degrees (0,1), d = 1, omega_12 = zeta_8^7, omega_21 = 1.
OmegaData odd_instance();
/// zeta_8, degrees (0,2), d = 2, omega_12 = zeta_8^6, omega_21 = 1.
OmegaData even_instance();
/// zeta = 1, degrees (0,0), omega = I.
OmegaData identity_instance();

/// Small random combination of powers of the field generator.
Scalar random_scalar(Rng& rng, const FieldSpec& f, int coeff = 2);
ScalarMatrix random_invertible(Rng& rng, const FieldSpec& f, std::size_t m, int coeff = 2);

/// Symmetric degree pattern with the given n and d, or nullopt if none exists.
std::optional<std::vector<int>> random_degrees(Rng& rng, std::size_t n, int d);

/// A random instance satisfying the block condition, built through solve_omega.
OmegaData random_valid_instance(Rng& rng, const SampleOptions& opts = {});

/// Random invertible matrix supported on d_i + d_j = d (usually invalid).
ScalarMatrix random_homogeneous(Rng& rng, const GradedSpace& space, int d, int coeff = 2);

/// Multiplies the k-th nonzero entry (row-major) of omega by zeta.
OmegaData mutate_entry(const OmegaData& data, std::size_t k);
std::size_t nonzero_count(const ScalarMatrix& m);

}  // namespace braidfoq
