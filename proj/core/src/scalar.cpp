#include "braidfoq/scalar.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "braidfoq/error.hpp"

namespace braidfoq {

namespace {

int mobius(int m) {
    int result = 1;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            m /= p;
            if (m % p == 0) return 0;
            result = -result;
        }
    }
    if (m > 1) result = -result;
    return result;
}

// p *= (x^d - 1)
void mul_xd_minus_1(std::vector<mpz_class>& p, int d) {
    std::vector<mpz_class> r(p.size() + d);
    for (std::size_t i = 0; i < p.size(); ++i) {
        r[i + d] += p[i];
        r[i] -= p[i];
    }
    p.swap(r);
}

// p /= (x^d - 1), exact.
void div_xd_minus_1(std::vector<mpz_class>& p, int d) {
    const std::size_t deg = p.size() - 1;
    std::vector<mpz_class> q(deg + 1 - d);
    for (std::size_t k = deg; k >= static_cast<std::size_t>(d); --k) {
        const mpz_class c = p[k];
        q[k - d] = c;
        p[k - d] += c;
        p[k] = 0;
        if (k == static_cast<std::size_t>(d)) break;
    }
    for (const auto& r : p)
        if (r != 0) throw Error("cyclotomic polynomial: inexact division");
    p.swap(q);
}

std::vector<mpq_class> monomial(const CyclotomicField& f, long e) {
    const long n = f.order();
    e %= n;
    if (e < 0) e += n;
    std::vector<mpq_class> poly(static_cast<std::size_t>(e) + 1);
    poly[e] = 1;
    f.reduce(poly);
    return poly;
}

long mod(long a, long m) {
    long r = a % m;
    return r < 0 ? r + m : r;
}

}  // namespace

// ---------------------------------------------------------------- field

CyclotomicField::CyclotomicField(int order) : order_(order) {
    if (order < 1 || order > kMaxOrder)
        throw InvalidData("cyclotomic order out of range: " + std::to_string(order));
    std::vector<mpz_class> num{1};
    std::vector<int> den;
    for (int d = 1; d <= order; ++d) {
        if (order % d != 0) continue;
        const int mu = mobius(order / d);
        if (mu == 1) mul_xd_minus_1(num, d);
        if (mu == -1) den.push_back(d);
    }
    for (int d : den) div_xd_minus_1(num, d);
    phi_ = std::move(num);
    degree_ = static_cast<int>(phi_.size()) - 1;
}

void CyclotomicField::reduce(std::vector<mpq_class>& poly) const {
    const std::size_t deg = static_cast<std::size_t>(degree_);
    if (poly.size() > deg) {
        for (std::size_t k = poly.size() - 1; k >= deg; --k) {
            if (sgn(poly[k]) != 0) {
                const mpq_class c = poly[k];
                const std::size_t base = k - deg;
                for (std::size_t i = 0; i < deg; ++i)
                    if (phi_[i] != 0) poly[base + i] -= c * phi_[i];
                poly[k] = 0;
            }
            if (k == deg) break;
        }
    }
    poly.resize(deg);
}

FieldSpec FieldSpec::exact(int order) {
    FieldSpec f;
    f.field_ = std::make_shared<const CyclotomicField>(order);
    f.tol_ = 0.0;
    return f;
}

FieldSpec FieldSpec::approx(double tolerance) {
    if (!(tolerance > 0.0)) throw InvalidData("approx tolerance must be positive");
    FieldSpec f;
    f.tol_ = tolerance;
    return f;
}

FieldSpec FieldSpec::parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("field spec must be cyclo:N or float:tol: " + text);
    const std::string kind = text.substr(0, colon);
    const std::string arg = text.substr(colon + 1);
    try {
        std::size_t used = 0;
        if (kind == "cyclo") {
            const int n = std::stoi(arg, &used);
            if (used != arg.size()) throw ParseError("bad order");
            return exact(n);
        }
        if (kind == "float") {
            const double tol = std::stod(arg, &used);
            if (used != arg.size()) throw ParseError("bad tolerance");
            return approx(tol);
        }
    } catch (const std::logic_error&) {
        throw ParseError("bad field spec: " + text);
    }
    throw ParseError("unknown field kind: " + kind);
}

int FieldSpec::order() const {
    if (!field_) throw FieldMismatch("approx field has no cyclotomic order");
    return field_->order();
}

const CyclotomicField& FieldSpec::cyclo() const {
    if (!field_) throw FieldMismatch("approx field has no cyclotomic structure");
    return *field_;
}

std::string FieldSpec::to_string() const {
    if (field_) return "cyclo:" + std::to_string(field_->order());
    std::ostringstream os;
    os << "float:" << tol_;
    return os.str();
}

bool operator==(const FieldSpec& a, const FieldSpec& b) {
    if (a.is_exact() != b.is_exact()) return false;
    if (a.is_exact()) return a.field_->order() == b.field_->order();
    return true;
}

// ---------------------------------------------------------------- scalar

Scalar Scalar::zero(const FieldSpec& f) {
    Scalar s;
    s.valid_ = true;
    s.field_ = f;
    if (f.is_exact()) s.c_.assign(f.cyclo().degree(), mpq_class(0));
    return s;
}

Scalar Scalar::one(const FieldSpec& f) { return from_int(f, 1); }

Scalar Scalar::from_int(const FieldSpec& f, long v) { return from_rational(f, mpq_class(v)); }

Scalar Scalar::from_rational(const FieldSpec& f, const mpq_class& q) {
    Scalar s = zero(f);
    if (f.is_exact())
        s.c_[0] = q;
    else
        s.z_ = {q.get_d(), 0.0};
    return s;
}

Scalar Scalar::from_complex(const FieldSpec& f, std::complex<double> z) {
    if (f.is_exact()) throw FieldMismatch("complex literal requires an approx field");
    Scalar s = zero(f);
    s.z_ = z;
    return s;
}

Scalar Scalar::root_of_unity(const FieldSpec& f, int m, long k) {
    if (m < 1) throw InvalidData("root of unity order must be positive");
    if (!f.is_exact()) {
        const long r = mod(k, m);
        const long double angle = 2.0L * std::numbers::pi_v<long double> * r / m;
        return from_complex(f, {static_cast<double>(std::cos(angle)), static_cast<double>(std::sin(angle))});
    }
    const int n = f.order();
    if (n % m != 0)
        throw FieldMismatch("zeta_" + std::to_string(m) + " is not in Q(zeta_" + std::to_string(n) + ")");
    Scalar s = zero(f);
    s.c_ = monomial(f.cyclo(), mod(k, m) * (n / m));
    return s;
}

Scalar Scalar::zeta(const FieldSpec& f, long k) {
    if (!f.is_exact()) throw FieldMismatch("zeta(k) needs an exact field");
    return root_of_unity(f, f.order(), k);
}

Scalar Scalar::from_coeffs(const FieldSpec& f, std::vector<mpq_class> coeffs) {
    if (!f.is_exact()) throw FieldMismatch("coefficient vectors need an exact field");
    Scalar s = zero(f);
    f.cyclo().reduce(coeffs);
    s.c_ = std::move(coeffs);
    return s;
}

const FieldSpec& Scalar::field() const {
    if (!valid_) throw Error("use of an uninitialised scalar");
    return field_;
}

const std::vector<mpq_class>& Scalar::coeffs() const {
    if (!is_exact()) throw FieldMismatch("approx scalar has no coefficient vector");
    return c_;
}

std::complex<double> Scalar::approx_value() const {
    if (!valid_) throw Error("use of an uninitialised scalar");
    if (field_.is_exact()) {
        const auto z = to_complex();
        return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
    }
    return z_;
}

void Scalar::require_same(const Scalar& o) const {
    if (!valid_ || !o.valid_) throw Error("use of an uninitialised scalar");
    if (field_ != o.field_)
        throw FieldMismatch("field mismatch: " + field_.to_string() + " vs " + o.field_.to_string());
}

Scalar& Scalar::operator+=(const Scalar& o) {
    require_same(o);
    if (field_.is_exact())
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    else
        z_ += o.z_;
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    require_same(o);
    if (field_.is_exact())
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    else
        z_ -= o.z_;
    return *this;
}

namespace {

// Integer numerators over the lcm of the denominators.
std::vector<mpz_class> integer_numerators(const std::vector<mpq_class>& c, mpz_class& den) {
    den = 1;
    for (const auto& v : c)
        if (sgn(v) != 0) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
    std::vector<mpz_class> out(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        if (sgn(c[i]) != 0) out[i] = c[i].get_num() * (den / c[i].get_den());
    return out;
}

}  // namespace

Scalar& Scalar::operator*=(const Scalar& o) {
    require_same(o);
    if (!field_.is_exact()) {
        z_ *= o.z_;
        return *this;
    }
    const std::size_t deg = c_.size();
    if (deg == 1) {
        c_[0] *= o.c_[0];
        return *this;
    }
    mpz_class da, db;
    const std::vector<mpz_class> a = integer_numerators(c_, da);
    const std::vector<mpz_class> b = integer_numerators(o.c_, db);
    std::vector<mpz_class> prod(2 * deg - 1);
    for (std::size_t i = 0; i < deg; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; j < deg; ++j)
            if (sgn(b[j]) != 0) mpz_addmul(prod[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    const auto& phi = field_.cyclo().phi();
    for (std::size_t k = prod.size() - 1; k >= deg; --k) {
        if (sgn(prod[k]) != 0) {
            const mpz_class c = prod[k];
            for (std::size_t i = 0; i < deg; ++i)
                if (sgn(phi[i]) != 0) mpz_submul(prod[k - deg + i].get_mpz_t(), c.get_mpz_t(), phi[i].get_mpz_t());
        }
        if (k == deg) break;
    }
    const mpz_class den = da * db;
    for (std::size_t i = 0; i < deg; ++i) {
        c_[i] = mpq_class(prod[i], den);
        c_[i].canonicalize();
    }
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::operator-() const {
    Scalar r = *this;
    if (field_.is_exact())
        for (auto& c : r.c_) c = -c;
    else
        r.z_ = -r.z_;
    return r;
}

Scalar Scalar::conj() const {
    field();
    Scalar r = *this;
    if (!field_.is_exact()) {
        r.z_ = std::conj(z_);
        return r;
    }
    const int n = field_.order();
    if (n <= 2) return r;
    std::vector<mpq_class> poly(n);
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) poly[(n - static_cast<int>(i)) % n] += c_[i];
    field_.cyclo().reduce(poly);
    r.c_.swap(poly);
    return r;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Scalar r = *this;
    if (!field_.is_exact()) {
        r.z_ = 1.0 / z_;
        return r;
    }
    const auto& f = field_.cyclo();
    const std::size_t deg = c_.size();
    if (deg == 1) {
        r.c_[0] = 1 / c_[0];
        return r;
    }
    // Solve M v = e0 where column j of M is a * x^j, fraction-free on integer numerators.
    mpz_class den;
    std::vector<mpz_class> col = integer_numerators(c_, den);
    const auto& phi = f.phi();
    std::vector<std::vector<mpz_class>> m(deg, std::vector<mpz_class>(deg + 1));
    for (std::size_t j = 0; j < deg; ++j) {
        for (std::size_t i = 0; i < deg; ++i) m[i][j] = col[i];
        const mpz_class top = col[deg - 1];
        for (std::size_t i = deg - 1; i > 0; --i) col[i] = col[i - 1] - top * phi[i];
        col[0] = -top * phi[0];
    }
    m[0][deg] = 1;
    mpz_class prev = 1;
    for (std::size_t c = 0; c < deg; ++c) {
        std::size_t p = c;
        while (p < deg && sgn(m[p][c]) == 0) ++p;
        if (p == deg) throw DivisionByZero();
        std::swap(m[p], m[c]);
        for (std::size_t rr = c + 1; rr < deg; ++rr) {
            for (std::size_t k = c + 1; k <= deg; ++k) {
                m[rr][k] = m[rr][k] * m[c][c] - m[rr][c] * m[c][k];
                mpz_divexact(m[rr][k].get_mpz_t(), m[rr][k].get_mpz_t(), prev.get_mpz_t());
            }
            m[rr][c] = 0;
        }
        prev = m[c][c];
    }
    for (std::size_t i = deg; i-- > 0;) {
        mpq_class acc(m[i][deg]);
        for (std::size_t k = i + 1; k < deg; ++k)
            if (sgn(m[i][k]) != 0) acc -= mpq_class(m[i][k]) * r.c_[k];
        r.c_[i] = acc / mpq_class(m[i][i]);
    }
    for (auto& v : r.c_) v *= den;
    return r;
}

Scalar Scalar::pow(long k) const {
    field();
    if (k < 0) return inverse().pow(-k);
    Scalar result = one(field_);
    Scalar base = *this;
    while (k > 0) {
        if (k & 1) result *= base;
        k >>= 1;
        if (k) base *= base;
    }
    return result;
}

Scalar Scalar::embed(const FieldSpec& target) const {
    field();
    if (!target.is_exact()) return to_approx(target.tolerance());
    if (!field_.is_exact()) throw FieldMismatch("cannot embed an approx scalar into an exact field");
    const int n = field_.order();
    const int m = target.order();
    if (m % n != 0)
        throw FieldMismatch("cannot embed Q(zeta_" + std::to_string(n) + ") into Q(zeta_" + std::to_string(m) + ")");
    const int step = m / n;
    std::vector<mpq_class> poly(static_cast<std::size_t>(c_.size() - 1) * step + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) poly[i * step] = c_[i];
    Scalar r = zero(target);
    target.cyclo().reduce(poly);
    r.c_.swap(poly);
    return r;
}

Scalar Scalar::to_approx(double tolerance) const {
    return from_complex(FieldSpec::approx(tolerance), approx_value());
}

bool Scalar::is_zero() const {
    field();
    if (field_.is_exact()) {
        for (const auto& c : c_)
            if (sgn(c) != 0) return false;
        return true;
    }
    return std::abs(z_) <= field_.tolerance();
}

bool Scalar::is_one() const { return *this == one(field()); }

bool Scalar::is_real() const {
    field();
    if (field_.is_exact()) return *this == conj();
    return std::abs(z_.imag()) <= field_.tolerance();
}

int Scalar::real_sign() const {
    if (!is_real()) throw InvalidData("sign of a non-real scalar: " + to_string());
    if (is_zero()) return 0;
    if (auto q = as_rational()) return sgn(*q);
    const long double re = to_complex().real();
    return re > 0 ? 1 : -1;
}

std::optional<mpq_class> Scalar::as_rational() const {
    field();
    if (!field_.is_exact()) return std::nullopt;
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return std::nullopt;
    return c_[0];
}

std::optional<long> Scalar::root_exponent_2n() const {
    field();
    if (!field_.is_exact()) return std::nullopt;
    const auto z = to_complex();
    if (std::abs(std::abs(z) - 1.0L) > 1e-6L) return std::nullopt;
    const long n = field_.order();
    const long two_n = 2 * n;
    long double arg = std::arg(z);
    if (arg < 0) arg += 2.0L * std::numbers::pi_v<long double>;
    long k = std::lround(arg * two_n / (2.0L * std::numbers::pi_v<long double>));
    k = mod(k, two_n);
    Scalar candidate = zero(field_);
    if (k % 2 == 0) {
        candidate.c_ = monomial(field_.cyclo(), k / 2);
    } else {
        if (n % 2 == 0) return std::nullopt;
        candidate.c_ = monomial(field_.cyclo(), mod((k + n) / 2, n));
        candidate = -candidate;
    }
    if (candidate == *this) return k;
    return std::nullopt;
}

std::complex<long double> Scalar::to_complex() const {
    field();
    if (!field_.is_exact()) return {z_.real(), z_.imag()};
    const long double n = field_.order();
    std::complex<long double> acc{0.0L, 0.0L};
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        const long double angle = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(i) / n;
        const long double v = static_cast<long double>(c_[i].get_d());
        acc += std::complex<long double>(v * std::cos(angle), v * std::sin(angle));
    }
    return acc;
}

std::string Scalar::to_string() const {
    field();
    std::ostringstream os;
    if (!field_.is_exact()) {
        os.precision(17);
        os << z_.real();
        if (z_.imag() >= 0) os << '+';
        os << z_.imag() << 'i';
        return os.str();
    }
    if (auto q = as_rational()) return rational_to_string(*q);
    const long n = field_.order();
    const std::string gen = "ζ" + std::to_string(n);
    auto power = [&](long k) { return k == 1 ? gen : gen + "^" + std::to_string(k); };
    if (auto k = root_exponent_2n()) {
        if (*k % 2 == 0) return power(*k / 2);
        return "-" + power(mod((*k + n) / 2, n));
    }
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (sgn(c_[i]) == 0) continue;
        mpq_class c = c_[i];
        if (!first) {
            os << (sgn(c) < 0 ? " - " : " + ");
            c = abs(c);
        }
        if (i == 0) {
            os << rational_to_string(c);
        } else if (c == 1) {
            os << power(static_cast<long>(i));
        } else if (c == -1) {
            os << "-" << power(static_cast<long>(i));
        } else {
            os << rational_to_string(c) << "*" << power(static_cast<long>(i));
        }
        first = false;
    }
    return os.str();
}

bool operator==(const Scalar& a, const Scalar& b) {
    a.require_same(b);
    if (a.field_.is_exact()) return a.c_ == b.c_;
    return std::abs(a.z_ - b.z_) <= a.field_.tolerance();
}

// ---------------------------------------------------------------- powers

PowerTable::PowerTable(const Scalar& base) : base_(base) {
    if (!base.is_exact()) return;
    if (auto k = base.root_exponent_2n()) {
        const long two_n = 2L * base.field().order();
        order_ = two_n / std::gcd(*k, two_n);
        cycle_.reserve(order_);
        Scalar acc = Scalar::one(base.field());
        for (long i = 0; i < order_; ++i) {
            cycle_.push_back(acc);
            acc *= base;
        }
    }
}

Scalar PowerTable::pow(long k) const {
    if (order_ > 0) return cycle_[mod(k, order_)];
    if (!base_.is_exact()) {
        const auto z = base_.approx_value();
        const double r = std::pow(std::abs(z), static_cast<double>(k));
        return Scalar::from_complex(base_.field(), std::polar(r, std::arg(z) * static_cast<double>(k)));
    }
    return base_.pow(k);
}

std::string rational_to_string(const mpq_class& q) { return q.get_str(10); }

mpq_class rational_from_string(const std::string& s) {
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0) throw ParseError("bad rational: '" + s + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator: '" + s + "'");
    q.canonicalize();
    return q;
}

}  // namespace braidfoq
