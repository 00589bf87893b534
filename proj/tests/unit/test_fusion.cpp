#include <doctest.h>

#include <thread>

#include "braidfoq/error.hpp"
#include "braidfoq/fusion.hpp"
#include "braidfoq/sampling.hpp"
#include "braidfoq/transform.hpp"
#include "oracles.hpp"

using namespace braidfoq;

namespace {

const FusionContext even2{2, Parity::Even};

FusionDecomposition ds(std::initializer_list<IrrepLabel> xs) {
    FusionDecomposition out;
    for (const auto& x : xs) out[x] += 1;
    return out;
}

// F = [[0, |q|], [-sign q, 0]] at degree zero, entered through omega = F^T.
OmegaData q_instance(const mpq_class& q) {
    const FieldSpec f = FieldSpec::exact(1);
    ScalarMatrix omega(f, 2, 2);
    omega.set(1, 0, Scalar::from_rational(f, abs(q)));
    omega.set(0, 1, Scalar::from_int(f, q < 0 ? 1 : -1));
    return {GradedSpace({0, 0}, Scalar::one(f)), omega, 0};
}

}  // namespace

TEST_CASE("ladder decompositions") {
    CHECK(fuse(IrrepLabel{1, 0}, IrrepLabel{1, 0}, even2) == ds({{2, 0}, {0, 0}}));
    CHECK(fuse(IrrepLabel{2, 3}, IrrepLabel{1, -1}, even2) == ds({{3, 2}, {1, 2}}));
    for (int k = 0; k < 4; ++k)
        for (int l = -2; l <= 2; ++l) CHECK(fuse(IrrepLabel{0, 5}, IrrepLabel{k, l}, even2) == ds({{k, l + 5}}));
}

TEST_CASE("conjugation") {
    CHECK(conj_label({3, 2}) == IrrepLabel{3, -2});
    CHECK(conj_label({4, 0}) == IrrepLabel{4, 0});
    CHECK(conj_label(conj_label({2, -7})) == IrrepLabel{2, -7});
}

TEST_CASE("dimensions follow the recursion") {
    const auto d2 = oracle::ladder_dims(2, 10), d3 = oracle::ladder_dims(3, 10);
    for (int k = 0; k <= 10; ++k) {
        CHECK(dim(IrrepLabel{k, 1}, even2) == static_cast<long>(d2[k]));
        CHECK(dim(IrrepLabel{k, -3}, FusionContext{3, Parity::Even}) == static_cast<long>(d3[k]));
    }
    CHECK(dim(IrrepLabel{2, 0}, even2) == 3);
    CHECK(dim(IrrepLabel{3, 0}, FusionContext{3, Parity::Even}) == 21);
    // r1 x r1 = r2 + r0 by direct count.
    CHECK(dim(IrrepLabel{1, 0}, even2) * dim(IrrepLabel{1, 0}, even2) == total_dim(ds({{2, 0}, {0, 0}}), even2));
}

TEST_CASE("dimension memo is safe under concurrent use") {
    std::vector<std::thread> pool;
    std::vector<mpz_class> got(8);
    for (int t = 0; t < 8; ++t)
        pool.emplace_back([t, &got] { got[t] = dim(IrrepLabel{40 + t, 0}, FusionContext{7, Parity::Even}); });
    for (auto& th : pool) th.join();
    for (int t = 0; t < 8; ++t) CHECK(got[t] == dim(IrrepLabel{40 + t, 0}, FusionContext{7, Parity::Even}));
}

TEST_CASE("odd parity restricts labels") {
    const FusionContext odd{2, Parity::Odd};
    CHECK_THROWS_AS(fuse(IrrepLabel{1, 0}, IrrepLabel{0, 0}, odd), InvalidData);
    for (const auto& [x, m] : fuse(IrrepLabel{1, 1}, IrrepLabel{2, 0}, odd)) CHECK(label_valid(x, odd));
    CHECK_THROWS_AS(fuse(IrrepLabel{-1, 1}, IrrepLabel{0, 0}, even2), InvalidData);
}

TEST_CASE("ring axioms hold exhaustively") {
    for (int n : {2, 3})
        for (Parity p : {Parity::Even, Parity::Odd}) {
            const RingReport rep = ring_checks({n, p}, 4);
            CHECK(rep.ok());
            CHECK(rep.labels > 0);
        }
}

TEST_CASE("q parameter recovers the reference family") {
    for (const mpq_class& q : {mpq_class(-1), mpq_class(-1, 2), mpq_class(3, 10), mpq_class(1), mpq_class(7, 9), mpq_class(-1, 5)}) {
        const QParameter r = q_parameter(q_instance(q));
        CHECK(std::abs(r.q - q.get_d()) < 1e-12);
        const mpq_class tau = abs(q) + 1 / abs(q);
        CHECK(*r.tau.as_rational() == tau);
    }
}

TEST_CASE("q parameter of named instances") {
    CHECK(q_parameter(identity_instance()).q == -1.0);
    const QParameter e = q_parameter(even_instance());
    CHECK(e.q == 1.0);
    CHECK(e.sign_source == Scalar::from_int(FieldSpec::exact(8), -1));
}

TEST_CASE("q parameter is invariant under shifts and covers") {
    Rng rng(71);
    for (int t = 0; t < 10; ++t) {
        const OmegaData x = random_valid_instance(rng, {{2, 4}, 12, 3, 2});
        const QParameter a = q_parameter(x);
        const QParameter b = q_parameter(degree_shift(x, rng.range(-2, 2)));
        CHECK(std::abs(a.q - b.q) < 1e-12);
        CHECK(std::abs(a.q) <= 1.0);
        CHECK(a.q != 0.0);
    }
}

TEST_CASE("tau below two is rejected") {
    CHECK_THROWS_AS(q_from_tau(1.5L, 1), Error);
    CHECK(q_from_tau(2.0L, -1) == -1.0);
}

TEST_CASE("decomposition json lists the top rung first") {
    const json j = to_json(fuse(IrrepLabel{1, 0}, IrrepLabel{1, 0}, even2));
    CHECK(j.at("summands").size() == 2);
    CHECK(j.at("summands")[0].at("k") == 2);
    CHECK(j.at("summands")[1].at("k") == 0);
    CHECK(j.at("summands")[0].at("mult") == 1);
}
