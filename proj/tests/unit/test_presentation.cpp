#include <doctest.h>

#include <algorithm>

#include "braidfoq/error.hpp"
#include "braidfoq/presentation.hpp"
#include "braidfoq/sampling.hpp"
#include "braidfoq/transform.hpp"

using namespace braidfoq;

namespace {

const FieldSpec Q8 = FieldSpec::exact(8);
Scalar z8(long k) { return Scalar::zeta(Q8, k); }

const Relation& find(const Presentation& p, const std::string& label) {
    auto it = std::find_if(p.relations.begin(), p.relations.end(), [&](const Relation& r) { return r.label == label; });
    REQUIRE(it != p.relations.end());
    return *it;
}

RawElement raw(std::initializer_list<std::pair<Scalar, RawWord>> terms) {
    RawElement r;
    for (const auto& [c, w] : terms) r.add(c, w);
    return r;
}

}  // namespace

TEST_CASE("relation counts") {
    Rng rng(1);
    for (int t = 0; t < 5; ++t) {
        const OmegaData x = random_valid_instance(rng, {{2, 3}, 12, 2, 2});
        const std::size_t n = x.n();
        CHECK(braided_presentation(x).relations.size() == 3 * n * n);
        CHECK(bosonisation_presentation(x).relations.size() == 3 * n * n + 2 + n * n);
        CHECK(aof_presentation(f_matrix(reduce_to_degree_zero(x).final_data)).relations.size() == 3 * n * n);
    }
}

TEST_CASE("braided relations of small instances") {
    const Presentation id = braided_presentation(identity_instance());
    const FieldSpec q1 = FieldSpec::exact(1);
    CHECK(find(id, "invariance(1,1)").expr ==
          raw({{Scalar::one(q1), {Symbol::u(0, 0)}}, {Scalar::from_int(q1, -1), {Symbol::ustar(0, 0)}}}));

    const Presentation odd = braided_presentation(odd_instance());
    CHECK(find(odd, "isometry(1,2)").expr == raw({{Scalar::one(Q8), {Symbol::ustar(0, 0), Symbol::u(0, 1)}},
                                                  {Scalar::one(Q8), {Symbol::ustar(1, 0), Symbol::u(1, 1)}}}));
}

TEST_CASE("every relation is homogeneous") {
    Rng rng(2);
    for (int t = 0; t < 8; ++t) {
        const OmegaData x = random_valid_instance(rng, {{2, 3, 4}, 12, 3, 2});
        for (const Presentation& p : {braided_presentation(x), bosonisation_presentation(x), t_form_presentation(x)})
            for (const auto& r : p.relations) CHECK(relation_homogeneous(r, p.context));
    }
}

TEST_CASE("bosonisation commutation phase") {
    const Presentation p = bosonisation_presentation(odd_instance());
    CHECK(find(p, "commute(1,2)").expr ==
          raw({{Scalar::one(Q8), {Symbol::z(), Symbol::u(0, 1)}}, {-z8(2), {Symbol::u(0, 1), Symbol::z()}}}));
    CHECK(relation_element(p, 3 * 4 + 2).is_zero());
}

TEST_CASE("t-form invariance carries z to the power d") {
    const Presentation p = t_form_presentation(odd_instance());
    const Element r = relation_element(p, static_cast<std::size_t>(
        std::find_if(p.relations.begin(), p.relations.end(), [](const Relation& x) { return x.label == "invariance(1,1)"; }) -
        p.relations.begin()));
    bool has_z = false;
    for (const auto& [w, c] : r.terms()) has_z = has_z || w.zexp == 1;
    CHECK(has_z);
}

TEST_CASE("t-form at d = 0 matches A_o(F)") {
    Rng rng(4);
    for (int t = 0; t < 6; ++t) {
        const OmegaData x = reduce_to_degree_zero(random_valid_instance(rng, {{2, 3}, 12, 2, 2})).final_data;
        const Presentation tf = t_form_presentation(x);
        const Presentation ao = aof_presentation(f_matrix(x));
        for (const auto& r : ao.relations) CHECK(r.expr == find(tf, r.label).expr);
    }
}

TEST_CASE("substituting t = z^d u turns t-form relations into bosonisation consequences") {
    const OmegaData x = odd_instance();
    const Presentation tf = t_form_presentation(x);
    const Presentation bo = bosonisation_presentation(x);
    std::map<Symbol, RawElement> assign;
    const Scalar one = Scalar::one(Q8);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) assign[Symbol::x(i, j)] = raw({{one, {Symbol::z(x.space().degree(i)), Symbol::u(i, j)}}});
    assign[Symbol::z()] = raw({{one, {Symbol::z()}}});
    for (const auto& r : tf.relations) {
        if (r.label.rfind("invariance", 0) != 0) continue;
        const Element img = substitute(r.expr, assign, bo.context);
        const std::string transposed = "invariance(" + r.label.substr(13, 1) + "," + r.label.substr(11, 1) + ")";
        const Element target = Element::from_raw(find(bo, transposed).expr, bo.context);
        bool proportional = false;
        for (int k = -3; k <= 3 && !proportional; ++k)
            for (int e = 0; e < 8 && !proportional; ++e)
                proportional = img == target.scaled(z8(e)) * Element::monomial(bo.context, Word{{}, k}, one) ||
                               img == Element::monomial(bo.context, Word{{}, k}, one) * target.scaled(z8(e));
        CHECK_MESSAGE(proportional, r.label);
    }
}

TEST_CASE("A_o(F) relations for small F") {
    const FieldSpec q1 = FieldSpec::exact(1);
    const Presentation id = aof_presentation(ScalarMatrix::identity(q1, 2));
    CHECK(find(id, "invariance(1,1)").expr ==
          raw({{Scalar::one(q1), {Symbol::x(0, 0)}}, {Scalar::from_int(q1, -1), {Symbol::xstar(0, 0)}}}));
    const ScalarMatrix j = ScalarMatrix::from_rows({{Scalar::zero(q1), Scalar::one(q1)}, {Scalar::from_int(q1, -1), Scalar::zero(q1)}});
    const Presentation pj = aof_presentation(j);
    // sum_k F_k2 X(1,k) - sum_k F_1k X*(k,2) = X(1,1) - X*(2,2)
    CHECK(find(pj, "invariance(1,2)").expr ==
          raw({{Scalar::one(q1), {Symbol::x(0, 0)}}, {Scalar::from_int(q1, -1), {Symbol::xstar(1, 1)}}}));
    CHECK_THROWS_AS(aof_presentation(ScalarMatrix(q1, 2, 2)), SingularMatrix);
}

TEST_CASE("projection morphisms") {
    Rng rng(6);
    std::vector<OmegaData> xs{identity_instance(), odd_instance(), even_instance()};
    for (int t = 0; t < 5; ++t) xs.push_back(random_valid_instance(rng, {{2, 3}, 12, 3, 2}));
    for (const auto& x : xs) {
        const MorphismCheck m = check_projections(x);
        CHECK_MESSAGE(m.ok(), (m.failures.empty() ? std::string() : m.failures.front()));
    }
    const Projections pr = projection_morphisms(odd_instance());
    const GradedSpace circle = circle_presentation(odd_instance().space()).context;
    const Element u12 = substitute(raw({{Scalar::one(Q8), {Symbol::u(0, 1)}}}), pr.pi.assignment, circle);
    const Element u11 = substitute(raw({{Scalar::one(Q8), {Symbol::u(0, 0)}}}), pr.pi.assignment, circle);
    CHECK(u12.is_zero());
    CHECK(u11 == Element::constant(circle, Scalar::one(Q8)));
}

TEST_CASE("serialization round trip is byte identical") {
    Rng rng(9);
    std::vector<Presentation> ps{bosonisation_presentation(odd_instance()), braided_presentation(even_instance()),
                                 t_form_presentation(odd_instance()), aof_presentation(f_matrix(identity_instance()))};
    ps.push_back(bosonisation_presentation(random_valid_instance(rng, {{3}, 12, 2, 2})));
    for (const auto& p : ps) {
        const std::string once = serialize_string(p);
        const Presentation q = deserialize(json::parse(once));
        CHECK(serialize_string(q) == once);
        CHECK(q.relations.size() == p.relations.size());
        CHECK(q.name == p.name);
    }
}

TEST_CASE("deserialize rejects unknown generators") {
    json j = serialize(bosonisation_presentation(odd_instance()));
    j["relations"][0]["terms"][0]["word"][0] = "Y(1,1)";
    CHECK_THROWS_AS(deserialize(j), ParseError);
    json k = serialize(bosonisation_presentation(odd_instance()));
    k["name"] = "mystery";
    CHECK_THROWS_AS(deserialize(k), ParseError);
}
