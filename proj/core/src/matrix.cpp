#include "braidfoq/matrix.hpp"

#include <string>

#include "braidfoq/error.hpp"

namespace braidfoq {

namespace {

// Gauss-Jordan on `a` (and `b` alongside, if given). Returns the rank.
std::size_t eliminate(ScalarMatrix& a, ScalarMatrix* b) {
    std::size_t rank = 0;
    for (std::size_t c = 0; c < a.cols() && rank < a.rows(); ++c) {
        std::size_t p = rank;
        while (p < a.rows() && a(p, c).is_zero()) ++p;
        if (p == a.rows()) continue;
        if (p != rank) {
            for (std::size_t k = 0; k < a.cols(); ++k) std::swap(a(p, k), a(rank, k));
            if (b)
                for (std::size_t k = 0; k < b->cols(); ++k) std::swap((*b)(p, k), (*b)(rank, k));
        }
        const Scalar inv = a(rank, c).inverse();
        for (std::size_t k = 0; k < a.cols(); ++k) a(rank, k) *= inv;
        if (b)
            for (std::size_t k = 0; k < b->cols(); ++k) (*b)(rank, k) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == rank || a(r, c).is_zero()) continue;
            const Scalar f = a(r, c);
            for (std::size_t k = 0; k < a.cols(); ++k)
                if (!a(rank, k).is_zero()) a(r, k) -= f * a(rank, k);
            if (b)
                for (std::size_t k = 0; k < b->cols(); ++k)
                    if (!(*b)(rank, k).is_zero()) (*b)(r, k) -= f * (*b)(rank, k);
        }
        ++rank;
    }
    return rank;
}

}  // namespace

ScalarMatrix::ScalarMatrix(const FieldSpec& field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, Scalar::zero(field)) {
    if (rows == 0 || cols == 0) throw ShapeError("matrix dimensions must be positive");
}

ScalarMatrix ScalarMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows) {
    if (rows.empty() || rows[0].empty()) throw ShapeError("empty matrix");
    ScalarMatrix m(rows[0][0].field(), rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.cols_) throw ShapeError("ragged matrix rows");
        for (std::size_t j = 0; j < m.cols_; ++j) m.set(i, j, rows[i][j]);
    }
    return m;
}

ScalarMatrix ScalarMatrix::identity(const FieldSpec& field, std::size_t n) {
    ScalarMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
    return m;
}

ScalarMatrix ScalarMatrix::diagonal(const std::vector<Scalar>& diag) {
    if (diag.empty()) throw ShapeError("empty diagonal");
    ScalarMatrix m(diag[0].field(), diag.size(), diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m.set(i, i, diag[i]);
    return m;
}

void ScalarMatrix::set(std::size_t i, std::size_t j, const Scalar& v) {
    if (i >= rows_ || j >= cols_) throw ShapeError("matrix index out of range");
    if (v.field() != field_) throw FieldMismatch("matrix entry field mismatch");
    data_[i * cols_ + j] = v;
}

ScalarMatrix ScalarMatrix::operator*(const ScalarMatrix& o) const {
    if (cols_ != o.rows_)
        throw ShapeError("cannot multiply " + std::to_string(rows_) + "x" + std::to_string(cols_) + " by " +
                         std::to_string(o.rows_) + "x" + std::to_string(o.cols_));
    if (field_ != o.field_) throw FieldMismatch("matrix field mismatch");
    ScalarMatrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                if (!o(k, j).is_zero()) r(i, j) += a * o(k, j);
        }
    return r;
}

ScalarMatrix ScalarMatrix::operator+(const ScalarMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix sum shape mismatch");
    ScalarMatrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] += o.data_[k];
    return r;
}

ScalarMatrix ScalarMatrix::operator-(const ScalarMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw ShapeError("matrix difference shape mismatch");
    ScalarMatrix r = *this;
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] -= o.data_[k];
    return r;
}

ScalarMatrix ScalarMatrix::scaled(const Scalar& s) const {
    ScalarMatrix r = *this;
    for (auto& v : r.data_) v *= s;
    return r;
}

ScalarMatrix ScalarMatrix::conj() const {
    ScalarMatrix r = *this;
    for (auto& v : r.data_) v = v.conj();
    return r;
}

ScalarMatrix ScalarMatrix::transpose() const {
    ScalarMatrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
}

ScalarMatrix ScalarMatrix::adjoint() const { return conj().transpose(); }

ScalarMatrix ScalarMatrix::inverse() const {
    if (!square()) throw ShapeError("inverse of a non-square matrix");
    ScalarMatrix a = *this;
    ScalarMatrix b = identity(field_, rows_);
    const std::size_t rk = eliminate(a, &b);
    if (rk != rows_) throw SingularMatrix(rk);
    return b;
}

std::size_t ScalarMatrix::rank() const {
    ScalarMatrix a = *this;
    return eliminate(a, nullptr);
}

Scalar ScalarMatrix::trace() const {
    if (!square()) throw ShapeError("trace of a non-square matrix");
    Scalar t = Scalar::zero(field_);
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
}

bool ScalarMatrix::is_zero() const {
    for (const auto& v : data_)
        if (!v.is_zero()) return false;
    return true;
}

std::optional<Scalar> ScalarMatrix::scalar_multiple() const {
    if (!square()) return std::nullopt;
    const Scalar lambda = (*this)(0, 0);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            const Scalar& v = (*this)(i, j);
            if (i == j ? v != lambda : !v.is_zero()) return std::nullopt;
        }
    return lambda;
}

ScalarMatrix ScalarMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
    ScalarMatrix r(field_, rows.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < cols.size(); ++j) r(i, j) = (*this)(rows[i], cols[j]);
    return r;
}

ScalarMatrix ScalarMatrix::embed(const FieldSpec& target) const {
    ScalarMatrix r(target, rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = data_[k].embed(target);
    return r;
}

bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t k = 0; k < a.data_.size(); ++k)
        if (a.data_[k] != b.data_[k]) return false;
    return true;
}

}  // namespace braidfoq
