#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "braidfoq/matrix.hpp"
#include "braidfoq/scalar.hpp"

namespace braidfoq {

/// A graded vector space with sorted integer degrees and the phase zeta.
class GradedSpace {
public:
    GradedSpace(std::vector<int> degrees, Scalar zeta);

    std::size_t n() const noexcept { return degrees_.size(); }
    const std::vector<int>& degrees() const noexcept { return degrees_; }
    int degree(std::size_t i) const { return degrees_.at(i); }
    const Scalar& zeta() const noexcept { return zeta_; }
    const FieldSpec& field() const { return zeta_.field(); }
    /// zeta^k, cached.
    Scalar zeta_pow(long k) const { return powers_->pow(k); }
    const PowerTable& powers() const { return *powers_; }

    std::vector<int> distinct_degrees() const;
    std::vector<std::size_t> indices_of(int degree) const;
    std::size_t multiplicity(int degree) const;
    /// diag(zeta^(e * d_i)).
    ScalarMatrix pi(long e) const;

    GradedSpace embed(const FieldSpec& target) const;

    friend bool operator==(const GradedSpace& a, const GradedSpace& b);

private:
    std::vector<int> degrees_;
    Scalar zeta_;
    std::shared_ptr<const PowerTable> powers_;
};

/// The triple (V, pi, omega) with omega homogeneous of degree d.
class OmegaData {
public:
    OmegaData(GradedSpace space, ScalarMatrix omega, int d);

    const GradedSpace& space() const noexcept { return space_; }
    const ScalarMatrix& omega() const noexcept { return omega_; }
    int d() const noexcept { return d_; }
    std::size_t n() const noexcept { return space_.n(); }
    const FieldSpec& field() const { return space_.field(); }

    /// Block Omega_{a,b}: rows of degree a, columns of degree b.
    std::optional<ScalarMatrix> block(int a, int b) const;
    OmegaData embed(const FieldSpec& target) const;

    friend bool operator==(const OmegaData& a, const OmegaData& b);

private:
    GradedSpace space_;
    ScalarMatrix omega_;
    int d_;
};

struct BlockResidual {
    int degree;
    ScalarMatrix residual;
    bool zero;
};

struct ValidationReport {
    bool holds = false;
    std::optional<Scalar> c;
    std::vector<BlockResidual> block_residuals;
    bool invertible = false;
    bool phase_consistency = false;
    std::string reason;
};

ValidationReport validate(const OmegaData& data);

struct SolveResult {
    OmegaData data;
    Scalar c;
    bool c_chosen;
};

/// Completes Omega from the blocks Omega_{i,d-i} with i < d/2. A block at d/2,
/// if given, is used as a gauge A for the middle solution sqrt(r) A conj(A)^-1.
SolveResult solve_omega(const GradedSpace& space, int d, const std::map<int, ScalarMatrix>& free_blocks,
                        const std::optional<Scalar>& c = std::nullopt);

/// A c with conj(c)/c = zeta^(d^2); for even d it makes c zeta^(d^2/2) = 1.
Scalar default_c(const GradedSpace& space, int d);

ScalarMatrix omega_tilde(const OmegaData& data);
ScalarMatrix f_matrix(const OmegaData& data);

Scalar triviality_lhs(const OmegaData& data, std::size_t i, std::size_t j, std::size_t k, std::size_t l);

/// All n^4 left-hand sides; entry ((i*n + j)*n + k)*n + l.
std::vector<Scalar> triviality_table(const OmegaData& data);

/// The first tuple (i,j,k,l) whose value differs from delta_jl delta_ik.
std::optional<std::array<std::size_t, 4>> triviality_violation(const OmegaData& data);

struct IrreducibilityResult {
    bool irreducible;
    std::optional<Scalar> c;
};

IrreducibilityResult irreducibility_test(const GradedSpace& space, const ScalarMatrix& omega, int d);

}  // namespace braidfoq
