#include <doctest.h>

#include <random>

#include "braidfoq/error.hpp"
#include "braidfoq/json_io.hpp"
#include "braidfoq/matrix.hpp"
#include "braidfoq/sampling.hpp"
#include "oracles.hpp"

using namespace braidfoq;

namespace {
const FieldSpec Q8 = FieldSpec::exact(8);
Scalar z8(long k) { return Scalar::zeta(Q8, k); }
}  // namespace

TEST_CASE("root of unity arithmetic reduces canonically") {
    CHECK(z8(1) * z8(7) == Scalar::one(Q8));
    CHECK(z8(4) == Scalar::from_int(Q8, -1));
    CHECK(z8(4).coeffs() == Scalar::from_int(Q8, -1).coeffs());
    CHECK(z8(3).conj() == z8(5));
    CHECK(z8(2) * z8(2) == Scalar::from_int(Q8, -1));
    CHECK(z8(-1) == z8(7));
}

TEST_CASE("cyclotomic polynomials have the right degree") {
    for (int n : {1, 2, 3, 4, 5, 6, 8, 12, 15, 24, 30, 105}) {
        const FieldSpec f = FieldSpec::exact(n);
        int phi = 0;
        for (int k = 1; k <= n; ++k) phi += std::gcd(k, n) == 1;
        CHECK(f.cyclo().degree() == static_cast<std::size_t>(phi));
        CHECK(oracle::close(oracle::evaluate(Scalar::zeta(f, 1).coeffs(), n), oracle::root(n, 1)));
    }
}

TEST_CASE("embedding scales exponents") {
    const FieldSpec q32 = FieldSpec::exact(32);
    CHECK(z8(1).embed(q32) == Scalar::zeta(q32, 4));
    CHECK(Scalar::one(Q8).embed(FieldSpec::exact(40)) == Scalar::one(FieldSpec::exact(40)));
    CHECK(Scalar::from_int(FieldSpec::exact(2), -1).embed(Q8) == z8(4));
    CHECK_THROWS_AS(z8(1).embed(FieldSpec::exact(12)), FieldMismatch);
}

TEST_CASE("exact equality agrees with numerical evaluation") {
    std::mt19937_64 gen(2024);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(gen() % 30);
        const FieldSpec f = FieldSpec::exact(n);
        Scalar a = Scalar::zero(f);
        oracle::cplx expected = 0;
        for (int t = 0; t < 4; ++t) {
            const long c = static_cast<long>(gen() % 7) - 3;
            const long k = static_cast<long>(gen() % 60) - 30;
            a += Scalar::from_int(f, c) * Scalar::zeta(f, k);
            expected += static_cast<long double>(c) * oracle::root(n, k);
        }
        const Scalar b = a * Scalar::zeta(f, 3) - Scalar::zeta(f, 3) * a;
        CHECK(oracle::close(oracle::evaluate(a.coeffs(), n), expected, 1e-9L));
        CHECK(a.is_zero() == (std::abs(expected) < 1e-9L));
        CHECK(b.is_zero());
        if (!a.is_zero()) {
            CHECK(a * a.inverse() == Scalar::one(f));
            CHECK(oracle::close(oracle::evaluate(a.inverse().coeffs(), n), 1.0L / expected, 1e-8L));
        }
    }
}

TEST_CASE("conjugation is an involutive automorphism") {
    Rng rng(5);
    for (int n : {3, 5, 8, 12, 24}) {
        const FieldSpec f = FieldSpec::exact(n);
        for (int t = 0; t < 20; ++t) {
            const Scalar a = random_scalar(rng, f, 3), b = random_scalar(rng, f, 3);
            CHECK(a.conj().conj() == a);
            CHECK((a * b).conj() == a.conj() * b.conj());
            CHECK(oracle::close(oracle::evaluate(a.conj().coeffs(), n), std::conj(oracle::evaluate(a.coeffs(), n)), 1e-9L));
            const Scalar z = Scalar::zeta(f, static_cast<long>(rng.below(static_cast<std::uint64_t>(n))));
            CHECK(z * z.conj() == Scalar::one(f));
        }
    }
}

TEST_CASE("errors are explicit") {
    CHECK_THROWS_AS(Scalar::zero(Q8).inverse(), DivisionByZero);
    CHECK_THROWS_AS(z8(1) / Scalar::zero(Q8), DivisionByZero);
    CHECK_THROWS_AS(z8(1) + Scalar::one(FieldSpec::exact(4)), FieldMismatch);
    CHECK_THROWS_AS(FieldSpec::exact(0), InvalidData);
    CHECK_THROWS_AS(FieldSpec::exact((1 << 16) + 1), InvalidData);
    CHECK_THROWS_AS(FieldSpec::parse("cyclo:x"), ParseError);
}

TEST_CASE("approx mode compares with tolerance") {
    const FieldSpec f = FieldSpec::approx(1e-10);
    const Scalar a = Scalar::from_complex(f, {0.5, 0.25});
    CHECK(a == Scalar::from_complex(f, {0.5 + 1e-12, 0.25}));
    CHECK_FALSE(a == Scalar::from_complex(f, {0.5 + 1e-6, 0.25}));
    CHECK(a * a.inverse() == Scalar::one(f));
    CHECK(z8(3).to_approx() == Scalar::from_complex(f, {-std::sqrt(0.5), std::sqrt(0.5)}));
}

TEST_CASE("text and json forms round trip") {
    for (const char* text : {"ζ8", "ζ8^3", "-1", "1/2", "1 + 2*ζ8^3", "i", "3/4*ζ8^5 - ζ8"}) {
        const Scalar s = parse_scalar(text, Q8);
        CHECK(parse_scalar(s.to_string(), Q8) == s);
        CHECK(scalar_from_json(to_json(s), Q8) == s);
    }
    CHECK(parse_scalar("i", Q8) == z8(2));
    CHECK(parse_scalar("zeta8^6", Q8) == z8(6));
    CHECK(parse_scalar("0.25", Q8) == Scalar::from_rational(Q8, mpq_class(1, 4)));
    const json j = to_json(z8(1));
    CHECK(j.at("kind") == "cyclo");
    CHECK(j.at("order") == 8);
    CHECK_THROWS_AS(parse_scalar("ζ8^", Q8), ParseError);
    CHECK_THROWS_AS(parse_scalar("1/0", Q8), ParseError);
}

TEST_CASE("small matrix inverse") {
    const ScalarMatrix a = ScalarMatrix::from_rows({{Scalar::zero(Q8), z8(7)}, {Scalar::one(Q8), Scalar::zero(Q8)}});
    const ScalarMatrix want = ScalarMatrix::from_rows({{Scalar::zero(Q8), Scalar::one(Q8)}, {z8(1), Scalar::zero(Q8)}});
    CHECK(a.inverse() == want);
    CHECK(a * want == ScalarMatrix::identity(Q8, 2));
    CHECK(ScalarMatrix::identity(Q8, 2) * a == a);
    const auto lambda = ScalarMatrix::diagonal({Scalar::from_int(Q8, -1), Scalar::from_int(Q8, -1)}).scalar_multiple();
    REQUIRE(lambda);
    CHECK(*lambda == Scalar::from_int(Q8, -1));
    CHECK_FALSE(a.scalar_multiple());
}

TEST_CASE("random matrix inverses round trip") {
    Rng rng(99);
    for (int t = 0; t < 200; ++t) {
        const int orders[] = {1, 3, 4, 8, 12};
        const FieldSpec f = FieldSpec::exact(orders[t % 5]);
        const std::size_t n = 1 + rng.below(6);
        const ScalarMatrix a = random_invertible(rng, f, n, 2);
        const ScalarMatrix b = a.inverse();
        CHECK(a * b == ScalarMatrix::identity(f, n));
        CHECK(b * a == ScalarMatrix::identity(f, n));
    }
}

TEST_CASE("singular matrices report their rank") {
    ScalarMatrix m(Q8, 3, 3);
    m.set(0, 0, z8(1));
    m.set(1, 1, z8(2));
    m.set(2, 0, z8(3));
    try {
        (void)m.inverse();
        FAIL("expected SingularMatrix");
    } catch (const SingularMatrix& e) {
        CHECK(e.rank() == 2);
    }
    CHECK_THROWS_AS(ScalarMatrix(Q8, 2, 3).inverse(), ShapeError);
}
