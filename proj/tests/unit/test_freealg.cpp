#include <doctest.h>

#include "braidfoq/error.hpp"
#include "braidfoq/freealg.hpp"
#include "braidfoq/presentation.hpp"
#include "braidfoq/sampling.hpp"

using namespace braidfoq;

namespace {

const FieldSpec Q8 = FieldSpec::exact(8);
Scalar z8(long k) { return Scalar::zeta(Q8, k); }

int sym_degree(const Symbol& s, const GradedSpace& sp) {
    const int d = sp.degree(static_cast<std::size_t>(s.j)) - sp.degree(static_cast<std::size_t>(s.i));
    return s.kind == SymKind::U || s.kind == SymKind::X ? d : -d;
}

// Rewrites by swapping a randomly chosen adjacent (Z, letter) pair until none is left.
NormalWord random_strategy(RawWord w, const GradedSpace& sp, Rng& rng) {
    Scalar phase = Scalar::one(sp.field());
    for (;;) {
        for (std::size_t k = 0; k + 1 < w.size();) {
            if (w[k].kind == SymKind::Z && w[k + 1].kind == SymKind::Z) {
                w[k].power += w[k + 1].power;
                w.erase(w.begin() + static_cast<long>(k) + 1);
            } else {
                ++k;
            }
        }
        std::vector<std::size_t> spots;
        for (std::size_t k = 0; k + 1 < w.size(); ++k)
            if (w[k].kind == SymKind::Z && w[k + 1].kind != SymKind::Z) spots.push_back(k);
        if (spots.empty()) break;
        const std::size_t k = rng.pick(spots);
        phase *= sp.zeta().pow(-static_cast<long>(w[k].power) * sym_degree(w[k + 1], sp));
        std::swap(w[k], w[k + 1]);
    }
    Word out;
    for (const auto& s : w) {
        if (s.kind == SymKind::Z)
            out.zexp += s.power;
        else
            out.letters.push_back({static_cast<LetterKind>(s.kind), static_cast<std::uint8_t>(s.i), static_cast<std::uint8_t>(s.j)});
    }
    return {out, phase};
}

RawWord random_raw(Rng& rng, std::size_t n) {
    RawWord w;
    const int len = rng.range(0, 6);
    for (int k = 0; k < len; ++k) {
        const int kind = rng.range(0, 2);
        const int i = static_cast<int>(rng.below(n)), j = static_cast<int>(rng.below(n));
        if (kind == 0) w.push_back(Symbol::u(i, j));
        if (kind == 1) w.push_back(Symbol::ustar(i, j));
        if (kind == 2) w.push_back(Symbol::z(rng.range(-2, 2)));
    }
    return w;
}

Element random_element(Rng& rng, const GradedSpace& sp) {
    RawElement r;
    const int terms = rng.range(1, 3);
    for (int t = 0; t < terms; ++t) r.add(random_scalar(rng, sp.field(), 2), random_raw(rng, sp.n()));
    return Element::from_raw(r, sp);
}

Element gen(const GradedSpace& sp, RawWord w) {
    RawElement r;
    r.add(Scalar::one(sp.field()), std::move(w));
    return Element::from_raw(r, sp);
}

}  // namespace

TEST_CASE("symbols parse and print") {
    CHECK(Symbol::parse("U(1,2)") == Symbol::u(0, 1));
    CHECK(Symbol::parse("U*(2,1)") == Symbol::ustar(1, 0));
    CHECK(Symbol::parse("X*(1,1)") == Symbol::xstar(0, 0));
    CHECK(Symbol::parse("Z^-3") == Symbol::z(-3));
    CHECK(Symbol::parse("Z") == Symbol::z(1));
    CHECK(Symbol::u(0, 1).to_string() == "U(1,2)");
    CHECK_THROWS_AS(Symbol::parse("V(1,2)"), ParseError);
    CHECK_THROWS_AS(Symbol::parse("U(1)"), ParseError);
}

TEST_CASE("z moves right with the commutation phase") {
    const GradedSpace sp = odd_instance().space();
    const NormalWord a = normal_form({Symbol::z(), Symbol::u(0, 1)}, sp);
    CHECK(a.word.zexp == 1);
    CHECK(a.word.letters.size() == 1);
    CHECK(a.phase == z8(2));
    const NormalWord b = normal_form({Symbol::z(), Symbol::z(-1), Symbol::u(0, 0)}, sp);
    CHECK(b.word.zexp == 0);
    CHECK(b.phase.is_one());
    const NormalWord c = normal_form({Symbol::z(), Symbol::ustar(0, 1)}, sp);
    CHECK(c.phase == z8(6));
    CHECK(c.word.zexp == 1);
}

TEST_CASE("normal form is independent of the rewriting order") {
    Rng rng(101);
    for (int t = 0; t < 1000; ++t) {
        const OmegaData& x = t % 2 ? odd_instance() : even_instance();
        const RawWord w = random_raw(rng, 2);
        const NormalWord a = normal_form(w, x.space());
        const NormalWord b = random_strategy(w, x.space(), rng);
        CHECK(a.word == b.word);
        CHECK(a.phase == b.phase);
    }
}

TEST_CASE("multiplication is associative and adjoint anti-multiplicative") {
    Rng rng(55);
    Rng inst(56);
    for (int t = 0; t < 60; ++t) {
        const GradedSpace sp = t % 3 == 0 ? odd_instance().space() : random_valid_instance(inst, {{2, 3}, 12, 2, 2}).space();
        const Element a = random_element(rng, sp), b = random_element(rng, sp), c = random_element(rng, sp);
        CHECK((a * b) * c == a * (b * c));
        CHECK((a * b).adjoint() == b.adjoint() * a.adjoint());
        CHECK(a.adjoint().adjoint() == a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("adjoint of a letter") {
    const GradedSpace sp = odd_instance().space();
    CHECK(gen(sp, {Symbol::u(0, 0)}).adjoint() == gen(sp, {Symbol::ustar(0, 0)}));
    CHECK(gen(sp, {Symbol::z()}).adjoint() == gen(sp, {Symbol::z(-1)}));
}

TEST_CASE("counit") {
    const GradedSpace sp = odd_instance().space();
    CHECK(counit(gen(sp, {Symbol::u(0, 0), Symbol::z(3), Symbol::ustar(1, 1)})).is_one());
    CHECK(counit(gen(sp, {Symbol::u(0, 1)})).is_zero());
}

TEST_CASE("comultiplication of the bosonisation") {
    const Presentation p = bosonisation_presentation(odd_instance());
    const Comultiplier delta = comultiplier(p);
    const GradedSpace& sp = p.context;
    const Scalar one = Scalar::one(sp.field());

    Tensor zz(sp, 2);
    zz.add_term({Word{{}, 1}, Word{{}, 1}}, one);
    CHECK(delta.apply(Word{{}, 1}) == zz);

    Tensor unit(sp, 2);
    unit.add_term({Word{}, Word{}}, one);
    CHECK(delta.apply(Word{}) == unit);

    const Letter u11{LetterKind::U, 0, 0}, u12{LetterKind::U, 0, 1}, u22{LetterKind::U, 1, 1};
    Tensor want(sp, 2);
    want.add_term({Word{{u11}, 0}, Word{{u12}, 0}}, one);
    // z^1 u_22 in normal form is u_22 z, degree zero so no phase.
    want.add_term({Word{{u12}, 0}, Word{{u22}, 1}}, one);
    CHECK(delta.apply(Word{{u12}, 0}) == want);

    Tensor zzz(sp, 3);
    zzz.add_term({Word{{}, 1}, Word{{}, 1}, Word{{}, 1}}, one);
    CHECK(delta.expand_leg(zz, 0) == zzz);
    CHECK(delta.expand_leg(zz, 1) == zzz);
}

TEST_CASE("comultiplication is multiplicative") {
    Rng rng(77);
    const Presentation p = bosonisation_presentation(odd_instance());
    const Comultiplier delta = comultiplier(p);
    for (int t = 0; t < 40; ++t) {
        const Element a = random_element(rng, p.context), b = random_element(rng, p.context);
        CHECK(delta.apply(a * b) == delta.apply(a) * delta.apply(b));
        CHECK(delta.apply(a.adjoint()) == delta.apply(a).adjoint());
    }
}

TEST_CASE("three-leg expansion of u_11 has four terms") {
    const Presentation p = bosonisation_presentation(odd_instance());
    const Comultiplier delta = comultiplier(p);
    const Tensor once = delta.apply(Word{{Letter{LetterKind::U, 0, 0}}, 0});
    const Tensor left = delta.expand_leg(once, 0);
    CHECK(left == delta.expand_leg(once, 1));
    CHECK(left.terms().size() == 4);
}

TEST_CASE("mixing spaces is refused") {
    const Element a = gen(odd_instance().space(), {Symbol::u(0, 0)});
    const Element b = gen(even_instance().space(), {Symbol::u(0, 0)});
    CHECK_THROWS_AS(a + b, Error);
}
