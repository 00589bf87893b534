#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "braidfoq/scalar.hpp"

namespace braidfoq {

/// Dense row-major matrix over one FieldSpec.
class ScalarMatrix {
public:
    ScalarMatrix(const FieldSpec& field, std::size_t rows, std::size_t cols);
    /// Rows must be non-empty, rectangular and share one field.
    static ScalarMatrix from_rows(const std::vector<std::vector<Scalar>>& rows);
    static ScalarMatrix identity(const FieldSpec& field, std::size_t n);
    static ScalarMatrix diagonal(const std::vector<Scalar>& diag);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool square() const noexcept { return rows_ == cols_; }
    const FieldSpec& field() const noexcept { return field_; }

    const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    /// Assigns an entry after checking its field.
    void set(std::size_t i, std::size_t j, const Scalar& v);

    ScalarMatrix operator*(const ScalarMatrix& o) const;
    ScalarMatrix operator+(const ScalarMatrix& o) const;
    ScalarMatrix operator-(const ScalarMatrix& o) const;
    ScalarMatrix scaled(const Scalar& s) const;

    ScalarMatrix conj() const;
    ScalarMatrix transpose() const;
    ScalarMatrix adjoint() const;
    /// Throws SingularMatrix carrying the rank found.
    ScalarMatrix inverse() const;
    std::size_t rank() const;
    Scalar trace() const;
    bool is_zero() const;
    /// The lambda with A = lambda * I, if any.
    std::optional<Scalar> scalar_multiple() const;
    ScalarMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
    ScalarMatrix embed(const FieldSpec& target) const;

    friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b);
    friend bool operator!=(const ScalarMatrix& a, const ScalarMatrix& b) { return !(a == b); }

private:
    FieldSpec field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Scalar> data_;
};

}  // namespace braidfoq
