#include "braidfoq/graded.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "braidfoq/error.hpp"

namespace braidfoq {

namespace {

std::optional<Scalar> exact_sqrt(const Scalar& r) {
    if (!r.is_exact()) {
        const double v = r.approx_value().real();
        if (v < 0) return std::nullopt;
        return Scalar::from_complex(r.field(), {std::sqrt(v), 0.0});
    }
    auto q = r.as_rational();
    if (!q || sgn(*q) < 0) return std::nullopt;
    const mpz_class num = q->get_num();
    const mpz_class den = q->get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) return std::nullopt;
    return Scalar::from_rational(r.field(), mpq_class(mpz_class(sqrt(num)), mpz_class(sqrt(den))));
}

// Antisymmetric J with conj(J) J = -I, in 2x2 blocks.
ScalarMatrix standard_j(const FieldSpec& f, std::size_t m) {
    ScalarMatrix j(f, m, m);
    for (std::size_t k = 0; k + 1 < m; k += 2) {
        j(k, k + 1) = Scalar::one(f);
        j(k + 1, k) = -Scalar::one(f);
    }
    return j;
}

long idx4(std::size_t n, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    return static_cast<long>(((i * n + j) * n + k) * n + l);
}

}  // namespace

// ---------------------------------------------------------------- GradedSpace

GradedSpace::GradedSpace(std::vector<int> degrees, Scalar zeta) : degrees_(std::move(degrees)), zeta_(std::move(zeta)) {
    if (degrees_.empty()) throw InvalidData("graded space needs at least one degree");
    if (!std::is_sorted(degrees_.begin(), degrees_.end())) throw InvalidData("degrees must be sorted ascending");
    if (!(zeta_ * zeta_.conj()).is_one()) throw InvalidData("zeta must have modulus one: " + zeta_.to_string());
    powers_ = std::make_shared<const PowerTable>(zeta_);
    if (zeta_.is_exact() && powers_->order() == 0)
        throw InvalidData("exact mode needs zeta to be a root of unity: " + zeta_.to_string());
}

std::vector<int> GradedSpace::distinct_degrees() const {
    std::vector<int> out;
    for (int d : degrees_)
        if (out.empty() || out.back() != d) out.push_back(d);
    return out;
}

std::vector<std::size_t> GradedSpace::indices_of(int degree) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < degrees_.size(); ++i)
        if (degrees_[i] == degree) out.push_back(i);
    return out;
}

std::size_t GradedSpace::multiplicity(int degree) const {
    return static_cast<std::size_t>(std::count(degrees_.begin(), degrees_.end(), degree));
}

ScalarMatrix GradedSpace::pi(long e) const {
    std::vector<Scalar> diag;
    for (int d : degrees_) diag.push_back(zeta_pow(e * d));
    return ScalarMatrix::diagonal(diag);
}

GradedSpace GradedSpace::embed(const FieldSpec& target) const { return {degrees_, zeta_.embed(target)}; }

bool operator==(const GradedSpace& a, const GradedSpace& b) {
    return a.degrees_ == b.degrees_ && a.field() == b.field() && a.zeta_ == b.zeta_;
}

// ---------------------------------------------------------------- OmegaData

OmegaData::OmegaData(GradedSpace space, ScalarMatrix omega, int d)
    : space_(std::move(space)), omega_(std::move(omega)), d_(d) {
    if (!omega_.square()) throw ShapeError("omega must be square");
    if (omega_.rows() != space_.n()) throw ShapeError("omega size does not match the graded space");
    if (omega_.field() != space_.field()) throw FieldMismatch("omega and zeta live in different fields");
    for (std::size_t i = 0; i < space_.n(); ++i)
        for (std::size_t j = 0; j < space_.n(); ++j)
            if (space_.degree(i) + space_.degree(j) != d_ && !omega_(i, j).is_zero())
                throw InvalidData("omega is not homogeneous of degree " + std::to_string(d_) + ": entry (" +
                                  std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
}

std::optional<ScalarMatrix> OmegaData::block(int a, int b) const {
    const auto rows = space_.indices_of(a);
    const auto cols = space_.indices_of(b);
    if (rows.empty() || cols.empty()) return std::nullopt;
    return omega_.submatrix(rows, cols);
}

OmegaData OmegaData::embed(const FieldSpec& target) const {
    return {space_.embed(target), omega_.embed(target), d_};
}

bool operator==(const OmegaData& a, const OmegaData& b) {
    return a.d_ == b.d_ && a.space_ == b.space_ && a.omega_ == b.omega_;
}

// ---------------------------------------------------------------- validate

ValidationReport validate(const OmegaData& data) {
    ValidationReport rep;
    const auto& sp = data.space();
    const int d = data.d();
    if (data.omega().is_zero()) {
        rep.reason = "singular";
        return rep;
    }

    rep.invertible = true;
    const auto degrees = sp.distinct_degrees();
    for (int a : degrees) {
        const auto rows = sp.indices_of(a);
        const auto cols = sp.indices_of(d - a);
        if (rows.size() != cols.size() || data.omega().submatrix(rows, cols).rank() != rows.size()) {
            rep.invertible = false;
            break;
        }
    }
    if (!rep.invertible) {
        rep.reason = "not invertible";
        return rep;
    }

    bool residuals_zero = true;
    for (int a : degrees) {
        const ScalarMatrix product = data.block(a, d - a)->conj() * *data.block(d - a, a);
        if (!rep.c) rep.c = product(0, 0) * sp.zeta_pow(-static_cast<long>(d) * a);
        const ScalarMatrix target = ScalarMatrix::identity(sp.field(), product.rows()).scaled(*rep.c * sp.zeta_pow(static_cast<long>(d) * a));
        ScalarMatrix residual = product - target;
        const bool zero = residual.is_zero();
        residuals_zero = residuals_zero && zero;
        rep.block_residuals.push_back({a, std::move(residual), zero});
    }

    const Scalar& c = *rep.c;
    rep.phase_consistency = !c.is_zero() && c.conj() == c * sp.zeta_pow(static_cast<long>(d) * d);
    rep.holds = residuals_zero && rep.phase_consistency;
    if (!residuals_zero) {
        for (const auto& br : rep.block_residuals)
            if (!br.zero) {
                rep.reason = "block residual nonzero at degree " + std::to_string(br.degree);
                break;
            }
    } else if (!rep.phase_consistency) {
        rep.reason = "phase inconsistent";
    }
    return rep;
}

// ---------------------------------------------------------------- solve

Scalar default_c(const GradedSpace& space, int d) {
    const long dd = static_cast<long>(d) * d;
    if (d % 2 == 0) return space.zeta_pow(-dd / 2);
    const Scalar one = Scalar::one(space.field());
    Scalar c = one + space.zeta_pow(-dd);
    if (!c.is_zero()) return c;
    // zeta^(d^2) = -1: c must be purely imaginary.
    const FieldSpec& f = space.field();
    if (!f.is_exact()) return Scalar::from_complex(f, {0.0, 1.0});
    if (f.order() < 3) throw Infeasible("no purely imaginary c exists in " + f.to_string());
    return Scalar::zeta(f, 1) - Scalar::zeta(f, -1);
}

SolveResult solve_omega(const GradedSpace& space, int d, const std::map<int, ScalarMatrix>& free_blocks,
                        const std::optional<Scalar>& c_in) {
    const FieldSpec& f = space.field();
    const long dd = static_cast<long>(d) * d;
    const auto degrees = space.distinct_degrees();
    for (int a : degrees)
        if (space.multiplicity(a) != space.multiplicity(d - a))
            throw Infeasible("occupied degrees are not symmetric about d/2 (degree " + std::to_string(a) + ")");

    Scalar c = c_in ? *c_in : default_c(space, d);
    if (c.field() != f) throw FieldMismatch("c and zeta live in different fields");
    if (c.is_zero()) throw Infeasible("c must be nonzero");
    if (c.conj() != c * space.zeta_pow(dd))
        throw Infeasible("c violates conj(c)/c = zeta^(d^2): " + c.to_string());

    for (const auto& [a, blk] : free_blocks) {
        if (2 * a > d) throw InvalidData("free block for determined degree " + std::to_string(a));
        if (space.multiplicity(a) == 0) throw InvalidData("free block for unoccupied degree " + std::to_string(a));
    }

    ScalarMatrix omega(f, space.n(), space.n());
    auto place = [&](int a, const ScalarMatrix& blk) {
        const auto rows = space.indices_of(a);
        const auto cols = space.indices_of(d - a);
        if (blk.rows() != rows.size() || blk.cols() != cols.size())
            throw ShapeError("block for degree " + std::to_string(a) + " has the wrong shape");
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < cols.size(); ++j) omega.set(rows[i], cols[j], blk(i, j));
    };

    for (int a : degrees) {
        if (2 * a >= d) continue;
        auto it = free_blocks.find(a);
        if (it == free_blocks.end()) throw InvalidData("missing free block for degree " + std::to_string(a));
        const ScalarMatrix& blk = it->second;
        if (!blk.square()) throw ShapeError("free block for degree " + std::to_string(a) + " is not square");
        place(a, blk);
        ScalarMatrix inv = blk.conj().inverse();
        place(d - a, inv.scaled(c * space.zeta_pow(static_cast<long>(d) * a)));
    }

    if (d % 2 == 0 && space.multiplicity(d / 2) > 0) {
        const int mid = d / 2;
        const std::size_t m = space.multiplicity(mid);
        const Scalar r = c * space.zeta_pow(dd / 2);
        if (!r.is_real()) throw Infeasible("middle block constant is not real: " + r.to_string());
        ScalarMatrix gauge = ScalarMatrix::identity(f, m);
        if (auto it = free_blocks.find(mid); it != free_blocks.end()) gauge = it->second;
        const ScalarMatrix gauge_tail = gauge.conj().inverse();
        const int sign = r.real_sign();
        ScalarMatrix core = ScalarMatrix::identity(f, m);
        Scalar mag = r;
        if (sign < 0) {
            if (m % 2 == 1)
                throw Infeasible("middle block: r = " + r.to_string() + " < 0 with odd dimension " + std::to_string(m));
            core = standard_j(f, m);
            mag = -r;
        }
        auto root = exact_sqrt(mag);
        if (!root) throw Infeasible("middle block: |r| = " + mag.to_string() + " is not a rational square");
        place(mid, (gauge * core * gauge_tail).scaled(*root));
    }

    return {OmegaData(space, omega, d), c, !c_in.has_value()};
}

// ---------------------------------------------------------------- triviality

ScalarMatrix omega_tilde(const OmegaData& data) {
    const auto& sp = data.space();
    ScalarMatrix t = data.omega();
    for (std::size_t i = 0; i < data.n(); ++i)
        for (std::size_t j = 0; j < data.n(); ++j)
            if (!t(i, j).is_zero()) t(i, j) *= sp.zeta_pow(static_cast<long>(sp.degree(i)) * sp.degree(j));
    return t;
}

ScalarMatrix f_matrix(const OmegaData& data) {
    const auto& sp = data.space();
    const std::size_t n = data.n();
    ScalarMatrix f(sp.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            f(i, j) = data.omega()(j, i) * sp.zeta_pow(static_cast<long>(data.d()) * sp.degree(j));
    return f;
}

namespace {

// The left-hand side factors as A(i,j,l) * B(i,j,k).
struct TrivialityFactors {
    std::size_t n;
    std::vector<Scalar> a;  // (i*n + j)*n + l
    std::vector<Scalar> b;  // (i*n + j)*n + k
};

TrivialityFactors triviality_factors(const OmegaData& data) {
    const auto& sp = data.space();
    const std::size_t n = data.n();
    const ScalarMatrix& w = data.omega();
    const ScalarMatrix winv = omega_tilde(data).inverse();
    const ScalarMatrix wbar = w.conj();
    const ScalarMatrix winv_bar = winv.conj();
    const Scalar zero = Scalar::zero(sp.field());

    // Partial sums over indices of one degree e: p[e](j,l) and q[e](i,k).
    std::map<int, std::vector<Scalar>> p, q;
    for (std::size_t s = 0; s < n; ++s) {
        auto& ps = p.try_emplace(sp.degree(s), n * n, zero).first->second;
        auto& qs = q.try_emplace(sp.degree(s), n * n, zero).first->second;
        for (std::size_t a = 0; a < n; ++a)
            for (std::size_t b = 0; b < n; ++b) {
                if (!winv(a, s).is_zero() && !winv_bar(s, b).is_zero()) ps[a * n + b] += winv_bar(s, b) * winv(a, s);
                if (!wbar(a, s).is_zero() && !w(s, b).is_zero()) qs[a * n + b] += wbar(a, s) * w(s, b);
            }
    }
    auto combine = [&](const std::map<int, std::vector<Scalar>>& parts, long sign, int degree) {
        std::vector<Scalar> out(n * n, zero);
        for (const auto& [e, m] : parts) {
            const Scalar phase = sp.zeta_pow(sign * e * degree);
            for (std::size_t k = 0; k < n * n; ++k)
                if (!m[k].is_zero()) out[k] += phase * m[k];
        }
        return out;
    };
    std::map<int, std::vector<Scalar>> a_by_degree, b_by_degree;
    for (int e : sp.degrees()) {
        if (!a_by_degree.contains(e)) a_by_degree.emplace(e, combine(p, -1, e));
        if (!b_by_degree.contains(e)) b_by_degree.emplace(e, combine(q, 1, e));
    }

    TrivialityFactors tf{n, {}, {}};
    tf.a.reserve(n * n * n);
    tf.b.reserve(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const auto& ai = a_by_degree.at(sp.degree(i));
            const auto& bj = b_by_degree.at(sp.degree(j));
            for (std::size_t l = 0; l < n; ++l) tf.a.push_back(ai[j * n + l]);
            for (std::size_t k = 0; k < n; ++k) tf.b.push_back(bj[i * n + k]);
        }
    return tf;
}

}  // namespace

Scalar triviality_lhs(const OmegaData& data, std::size_t i, std::size_t j, std::size_t k, std::size_t l) {
    const std::size_t n = data.n();
    if (i >= n || j >= n || k >= n || l >= n) throw ShapeError("triviality index out of range");
    const auto tf = triviality_factors(data);
    return tf.a[(i * n + j) * n + l] * tf.b[(i * n + j) * n + k];
}

std::vector<Scalar> triviality_table(const OmegaData& data) {
    const auto tf = triviality_factors(data);
    const std::size_t n = tf.n;
    std::vector<Scalar> out(n * n * n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    out[idx4(n, i, j, k, l)] = tf.a[(i * n + j) * n + l] * tf.b[(i * n + j) * n + k];
    return out;
}

std::optional<std::array<std::size_t, 4>> triviality_violation(const OmegaData& data) {
    const auto tf = triviality_factors(data);
    const std::size_t n = tf.n;
    const Scalar one = Scalar::one(data.field());
    // A product over a field vanishes iff a factor does.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l) {
                    const Scalar& a = tf.a[(i * n + j) * n + l];
                    const Scalar& b = tf.b[(i * n + j) * n + k];
                    const bool violated = (j == l && i == k) ? a * b != one : !a.is_zero() && !b.is_zero();
                    if (violated) return std::array<std::size_t, 4>{i, j, k, l};
                }
    return std::nullopt;
}

// ---------------------------------------------------------------- irreducibility

IrreducibilityResult irreducibility_test(const GradedSpace& space, const ScalarMatrix& omega, int d) {
    const OmegaData data(space, omega, d);
    const std::size_t rk = omega.rank();
    if (rk != omega.rows()) throw SingularMatrix(rk);
    const ScalarMatrix m = omega.conj() * omega * space.pi(-static_cast<long>(d));
    auto lambda = m.scalar_multiple();
    return {lambda.has_value(), lambda};
}

}  // namespace braidfoq
