#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace braidfoq {

/// The cyclotomic field Q(zeta_N), stored as Q[x] / Phi_N(x).
class CyclotomicField {
public:
    static constexpr int kMaxOrder = 1 << 16;

    explicit CyclotomicField(int order);

    int order() const noexcept { return order_; }
    int degree() const noexcept { return degree_; }
    /// Coefficients of Phi_N, lowest degree first; the leading 1 is included.
    const std::vector<mpz_class>& phi() const noexcept { return phi_; }

    /// Reduces `poly` modulo Phi_N and resizes it to degree().
    void reduce(std::vector<mpq_class>& poly) const;

private:
    int order_;
    int degree_;
    std::vector<mpz_class> phi_;
};

class FieldSpec {
public:
    static constexpr double kDefaultTolerance = 1e-10;

    static FieldSpec exact(int order);
    static FieldSpec approx(double tolerance = kDefaultTolerance);
    /// Accepts "cyclo:N" or "float:tol".
    static FieldSpec parse(const std::string& text);

    bool is_exact() const noexcept { return static_cast<bool>(field_); }
    int order() const;
    double tolerance() const noexcept { return tol_; }
    const CyclotomicField& cyclo() const;

    std::string to_string() const;

    friend bool operator==(const FieldSpec& a, const FieldSpec& b);
    friend bool operator!=(const FieldSpec& a, const FieldSpec& b) { return !(a == b); }

private:
    FieldSpec() = default;
    std::shared_ptr<const CyclotomicField> field_;
    double tol_ = kDefaultTolerance;
};

/// An element of Q(zeta_N) or a tolerance-compared complex double.
class Scalar {
public:
    /// Placeholder without a field; any arithmetic on it throws.
    Scalar() = default;

    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar from_int(const FieldSpec& f, long v);
    static Scalar from_rational(const FieldSpec& f, const mpq_class& q);
    static Scalar from_complex(const FieldSpec& f, std::complex<double> z);
    /// exp(2 pi i k / m). Exact fields require m | N.
    static Scalar root_of_unity(const FieldSpec& f, int m, long k);
    /// zeta_N^k for the field's own generator.
    static Scalar zeta(const FieldSpec& f, long k);
    /// Exact only: an element from its coefficient vector in the power basis.
    static Scalar from_coeffs(const FieldSpec& f, std::vector<mpq_class> coeffs);

    bool valid() const noexcept { return valid_; }
    const FieldSpec& field() const;
    bool is_exact() const { return field().is_exact(); }
    /// Power-basis coefficients (exact mode).
    const std::vector<mpq_class>& coeffs() const;
    std::complex<double> approx_value() const;

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    Scalar operator-() const;

    Scalar conj() const;
    Scalar inverse() const;
    Scalar pow(long k) const;
    /// Image under zeta_N -> zeta_M^(M/N).
    Scalar embed(const FieldSpec& target) const;
    Scalar to_approx(double tolerance = FieldSpec::kDefaultTolerance) const;

    bool is_zero() const;
    bool is_one() const;
    bool is_real() const;
    /// Sign of a real scalar: -1, 0 or 1. Throws if not real.
    int real_sign() const;
    std::optional<mpq_class> as_rational() const;
    /// If this is +-zeta_N^k in exact mode, the exponent k of zeta_{2N}.
    std::optional<long> root_exponent_2n() const;
    std::complex<long double> to_complex() const;
    std::string to_string() const;

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

private:
    void require_same(const Scalar& o) const;

    bool valid_ = false;
    FieldSpec field_ = FieldSpec::approx();
    std::vector<mpq_class> c_;
    std::complex<double> z_{};
};

/// Cached integer powers of a unit-modulus scalar.
class PowerTable {
public:
    PowerTable() = default;
    explicit PowerTable(const Scalar& base);

    const Scalar& base() const { return base_; }
    /// Multiplicative order, or 0 if the base is not a root of unity.
    long order() const noexcept { return order_; }
    Scalar pow(long k) const;

private:
    Scalar base_;
    long order_ = 0;
    std::vector<Scalar> cycle_;
};

std::string rational_to_string(const mpq_class& q);
mpq_class rational_from_string(const std::string& s);

}  // namespace braidfoq
