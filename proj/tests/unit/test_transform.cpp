#include <doctest.h>

#include "braidfoq/error.hpp"
#include "braidfoq/sampling.hpp"
#include "braidfoq/suite.hpp"
#include "braidfoq/transform.hpp"

using namespace braidfoq;

namespace {
const FieldSpec Q8 = FieldSpec::exact(8);
Scalar z8(long k) { return Scalar::zeta(Q8, k); }

long sum_sq_modulus_num(const OmegaData& x) {
    long double acc = 0;
    for (std::size_t i = 0; i < x.n(); ++i)
        for (std::size_t j = 0; j < x.n(); ++j) acc += std::norm(x.omega()(i, j).to_complex());
    return std::lround(acc * 1e6L);
}
}  // namespace

TEST_CASE("shift by one on the even instance") {
    const OmegaData y = degree_shift(even_instance(), 1);
    CHECK(y.space().degrees() == std::vector<int>{-1, 1});
    CHECK(y.d() == 0);
    CHECK(y.omega()(0, 1) == Scalar::from_int(Q8, -1));
    CHECK(y.omega()(1, 0) == Scalar::one(Q8));
    const auto rep = validate(y);
    REQUIRE(rep.holds);
    CHECK(*rep.c == Scalar::from_int(Q8, -1));
    CHECK(*rep.c == z8(2) * z8(2));
}

TEST_CASE("shifts compose additively and differ from the bare formula by a constant phase") {
    Rng rng(12);
    for (int t = 0; t < 25; ++t) {
        const OmegaData x = random_valid_instance(rng);
        const int s = rng.range(-4, 4), u = rng.range(-4, 4);
        CHECK(degree_shift(x, 0) == x);
        CHECK(degree_shift(degree_shift(x, s), -s) == x);
        CHECK(degree_shift(degree_shift(x, s), u) == degree_shift(x, s + u));
        const OmegaData y = degree_shift(x, s);
        const Scalar& zeta = x.space().zeta();
        for (std::size_t i = 0; i < x.n(); ++i)
            for (std::size_t j = 0; j < x.n(); ++j) {
                const Scalar bare = zeta.pow(-static_cast<long>(s) * x.space().degree(j)) * x.omega()(i, j);
                CHECK(y.omega()(i, j) == bare * zeta.pow(static_cast<long>(s) * (s - 1) / 2));
            }
        CHECK(sum_sq_modulus_num(x) == sum_sq_modulus_num(y));
    }
}

TEST_CASE("shift transforms the block constant") {
    Rng rng(13);
    for (int t = 0; t < 25; ++t) {
        const OmegaData x = random_valid_instance(rng);
        const int s = rng.range(-3, 3);
        const Scalar c = *validate(x).c;
        const auto rep = validate(degree_shift(x, s));
        REQUIRE(rep.holds);
        const Scalar& zeta = x.space().zeta();
        // Read on the new degree labels the constant picks up zeta^(s d') as well.
        CHECK(*rep.c == zeta.pow(static_cast<long>(s) * x.d()) * zeta.pow(static_cast<long>(s) * (x.d() - 2 * s)) * c);
        CHECK(shift_constant_holds(x, s));
    }
}

TEST_CASE("double cover of the odd instance") {
    const CoverResult r = double_cover(odd_instance());
    CHECK_FALSE(r.warning);
    const FieldSpec q32 = FieldSpec::exact(32);
    CHECK(r.data.field() == q32);
    CHECK(r.data.space().degrees() == std::vector<int>{0, 2});
    CHECK(r.data.d() == 2);
    CHECK(r.data.space().zeta() == Scalar::zeta(q32, 6));
    CHECK(r.data.space().zeta().pow(4) == z8(6).embed(q32));
    CHECK(r.data.omega() == odd_instance().omega().embed(q32));
    CHECK(validate(r.data).holds);
}

TEST_CASE("double cover with an odd order and negative zeta") {
    const FieldSpec q3 = FieldSpec::exact(3);
    const Scalar zeta = -Scalar::zeta(q3, 1);
    const GradedSpace sp({0, 1}, zeta);
    std::map<int, ScalarMatrix> blocks{{0, ScalarMatrix::identity(q3, 1)}};
    const OmegaData x = solve_omega(sp, 1, blocks).data;
    const CoverResult r = double_cover(x);
    CHECK(r.data.field().order() % 8 == 0);
    CHECK(r.data.space().zeta().pow(4) == zeta.embed(r.data.field()));
    CHECK(validate(r.data).holds);
}

TEST_CASE("cover of the identity instance only extends the field") {
    const CoverResult r = double_cover(identity_instance());
    CHECK(r.data.space().degrees() == std::vector<int>{0, 0});
    CHECK(r.data.d() == 0);
    CHECK(validate(r.data).holds);
}

TEST_CASE("approx cover warns") {
    const OmegaData x = odd_instance().embed(FieldSpec::approx());
    const CoverResult r = double_cover(x);
    CHECK(r.warning);
    CHECK(validate(r.data).holds);
}

TEST_CASE("reduction routes") {
    const ReductionTrace odd = reduce_to_degree_zero(odd_instance());
    REQUIRE(odd.steps.size() == 2);
    CHECK(odd.steps[0].kind == ReductionStep::Kind::Cover);
    CHECK(odd.steps[1] == ReductionStep{ReductionStep::Kind::Shift, 1});
    CHECK(odd.parity == ParityConstraint::KMinusLEven);
    CHECK(odd.final_data.space().degrees() == std::vector<int>{-1, 1});
    CHECK(odd.final_data.d() == 0);

    const ReductionTrace even = reduce_to_degree_zero(even_instance());
    CHECK(even.steps == std::vector<ReductionStep>{{ReductionStep::Kind::Shift, 1}});
    CHECK(even.c == Scalar::from_int(Q8, -1));
    CHECK(even.parity == ParityConstraint::None);

    const ReductionTrace id = reduce_to_degree_zero(identity_instance());
    CHECK(id.steps.empty());
    CHECK(to_string(id.parity) == "none");
}

TEST_CASE("reduction lands on real c and is idempotent") {
    Rng rng(31);
    for (int t = 0; t < 30; ++t) {
        const OmegaData x = random_valid_instance(rng);
        const ReductionTrace r = reduce_to_degree_zero(x);
        CHECK(r.final_data.d() == 0);
        CHECK(r.c.is_real());
        CHECK(validate(r.final_data).holds);
        CHECK((r.parity == ParityConstraint::KMinusLEven) == (x.d() % 2 != 0));
        CHECK(reduce_to_degree_zero(r.final_data).steps.empty());
    }
}

TEST_CASE("reduction rejects invalid input") {
    ScalarMatrix m(Q8, 2, 2);
    m.set(0, 1, z8(1));
    m.set(1, 0, Scalar::one(Q8));
    CHECK_THROWS_AS(reduce_to_degree_zero(OmegaData(GradedSpace({0, 1}, z8(6)), m, 1)), InvalidData);
}
