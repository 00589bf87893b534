#include "braidfoq/suite.hpp"

#include <numeric>

#include "braidfoq/error.hpp"
#include "braidfoq/fusion.hpp"
#include "braidfoq/presentation.hpp"
#include "braidfoq/sampling.hpp"
#include "braidfoq/transform.hpp"

namespace braidfoq {

std::string criterion_name(int id) {
    switch (id) {
        case 1: return "triviality_equals_validity";
        case 2: return "irreducibility_criterion";
        case 3: return "transform_coherence";
        case 4: return "coassociativity";
        case 5: return "well_definedness";
        case 6: return "intertwiner_identity";
        case 7: return "fusion_ring";
        case 8: return "q_parameter";
        case 9: return "determinism";
    }
    throw InvalidData("no criterion " + std::to_string(id));
}

bool same_value(const Scalar& a, const Scalar& b) {
    if (a.is_exact() && b.is_exact()) {
        const FieldSpec f = FieldSpec::exact(std::lcm(a.field().order(), b.field().order()));
        return a.embed(f) == b.embed(f);
    }
    return std::abs(a.to_complex() - b.to_complex()) < 1e-12L;
}

bool shift_constant_holds(const OmegaData& data, int s) {
    const auto rep = validate(data);
    if (!rep.holds) return false;
    const OmegaData shifted = degree_shift(data, s);
    const GradedSpace& sp = data.space();
    const int d = data.d();
    const Scalar target = sp.zeta_pow(static_cast<long>(s) * d) * *rep.c;
    for (int a : sp.distinct_degrees()) {
        const auto rows = sp.indices_of(a);
        const auto cols = sp.indices_of(d - a);
        if (cols.empty()) return false;
        const ScalarMatrix top = shifted.omega().submatrix(rows, cols);
        const ScalarMatrix bottom = shifted.omega().submatrix(cols, rows);
        const ScalarMatrix lhs = top.conj() * bottom;
        const Scalar expected = target * sp.zeta_pow(static_cast<long>(d - 2 * s) * a);
        if (!(lhs == ScalarMatrix::identity(sp.field(), rows.size()).scaled(expected))) return false;
    }
    return true;
}

namespace {

struct Entry {
    int id;
    bool passed = true;
    std::size_t cases = 0;
    json failures = json::array();
    json expected = json::array();
    json details = json::object();

    void fail(json witness) {
        passed = false;
        failures.push_back(std::move(witness));
    }
    json finish() const {
        return json{{"id", id},
                    {"name", criterion_name(id)},
                    {"passed", passed},
                    {"cases", cases},
                    {"failures", failures},
                    {"expected_failures", expected},
                    {"details", details}};
    }
};

std::uint64_t sub_seed(std::uint64_t seed, int id) { return seed * 0x9E3779B97F4A7C15ULL + static_cast<std::uint64_t>(id); }

std::vector<std::pair<std::string, OmegaData>> named_instances() {
    return {{"identity", identity_instance()}, {"odd", odd_instance()}, {"even", even_instance()}};
}

json c1(const SuiteConfig& cfg) {
    Entry e{1};
    Rng rng(sub_seed(cfg.seed, 1));
    std::size_t mutated = 0;
    for (int t = 0; t < 50; ++t) {
        const OmegaData x = random_valid_instance(rng);
        ++e.cases;
        if (auto v = triviality_violation(x)) e.fail({{"instance", t}, {"tuple", *v}, {"omega", to_json(x)}});
        const OmegaData y = mutate_entry(x, static_cast<std::size_t>(rng.below(nonzero_count(x.omega()))));
        if (validate(y).holds) continue;
        ++mutated;
        if (auto v = triviality_violation(y))
            e.expected.push_back({{"instance", t}, {"tuple", *v}});
        else
            e.fail({{"instance", t}, {"mutation", "identity still holds"}});
    }
    e.details["mutations_breaking_validity"] = mutated;
    return e.finish();
}

json c2(const SuiteConfig& cfg) {
    Entry e{2};
    Rng rng(sub_seed(cfg.seed, 2));
    std::size_t valid = 0;
    for (int t = 0; t < 100; ++t) {
        const OmegaData x = random_valid_instance(rng, {{2, 3, 4}, 24, 3, 2});
        const ScalarMatrix m = t % 2 == 0 ? x.omega() : random_homogeneous(rng, x.space(), x.d());
        const bool holds = validate(OmegaData(x.space(), m, x.d())).holds;
        const bool irreducible = irreducibility_test(x.space(), m, x.d()).irreducible;
        ++e.cases;
        if (holds) ++valid;
        if (holds != irreducible) e.fail({{"case", t}, {"validate", holds}, {"irreducible", irreducible}});
    }
    e.details["valid"] = valid;
    e.details["invalid"] = e.cases - valid;
    return e.finish();
}

json c3(const SuiteConfig& cfg) {
    Entry e{3};
    Rng rng(sub_seed(cfg.seed, 3));
    for (int t = 0; t < 50; ++t) {
        const OmegaData x = random_valid_instance(rng);
        const int s = rng.range(-3, 3);
        ++e.cases;
        if (!(degree_shift(degree_shift(x, s), -s) == x)) e.fail({{"instance", t}, {"check", "round trip"}, {"s", s}});
        if (!shift_constant_holds(x, s)) e.fail({{"instance", t}, {"check", "shift constant"}, {"s", s}});
        const ReductionTrace r = reduce_to_degree_zero(x);
        if (r.final_data.d() != 0 || !r.c.is_real()) e.fail({{"instance", t}, {"check", "reduction"}});
    }
    const ReductionTrace odd = reduce_to_degree_zero(odd_instance());
    const std::vector<ReductionStep> route{{ReductionStep::Kind::Cover, 0}, {ReductionStep::Kind::Shift, 1}};
    ++e.cases;
    if (odd.steps != route || odd.parity != ParityConstraint::KMinusLEven) e.fail({{"instance", "odd"}, {"trace", to_json(odd)}});
    e.details["odd_route"] = to_json(odd)["steps"];
    return e.finish();
}

json c4(const SuiteConfig& cfg) {
    Entry e{4};
    Rng rng(sub_seed(cfg.seed, 4));
    auto instances = named_instances();
    for (int t = 0; t < 10; ++t) instances.emplace_back("random" + std::to_string(t), random_valid_instance(rng, {{2, 3, 4}, 24, 3, 2}));
    for (const auto& [name, x] : instances) {
        for (const Presentation& p : {braided_presentation(x), bosonisation_presentation(x)}) {
            ++e.cases;
            const auto rep = coassociativity_report(p);
            if (!rep.ok) e.fail({{"instance", name}, {"presentation", p.name}, {"generators", rep.failures}});
        }
    }
    const Presentation boson = bosonisation_presentation(odd_instance());
    const Comultiplier delta = comultiplier(boson);
    const GradedSpace& sp = boson.context;
    const Word z{{}, 1};
    Tensor zzz(sp, 3);
    zzz.add_term({z, z, z}, Scalar::one(sp.field()));
    ++e.cases;
    if (!(delta.expand_leg(delta.apply(z), 0) == zzz)) e.fail({{"check", "z expansion"}});
    return e.finish();
}

json c5(const SuiteConfig& cfg) {
    Entry e{5};
    const Presentation p = bosonisation_presentation(odd_instance());
    const WellDefinednessReport rep = well_definedness_check(p, {cfg.bound, cfg.row_cap, cfg.workers});
    for (const auto& entry : rep.entries) {
        ++e.cases;
        if (entry.certificate.verdict != Verdict::InIdeal || !entry.replay_ok)
            e.fail({{"relation", entry.label}, {"verdict", to_string(entry.certificate.verdict)}, {"replay", entry.replay_ok}});
    }
    e.details = to_json(rep);
    e.details.erase("entries");
    return e.finish();
}

json c6(const SuiteConfig&) {
    Entry e{6};
    for (const auto& [name, x] : named_instances()) {
        ++e.cases;
        if (!intertwiner_check(x)) e.fail({{"instance", name}, {"check", "identity"}});
        const ScalarMatrix f = f_matrix(x);
        for (std::size_t i = 0; i < x.n(); ++i)
            for (std::size_t j = 0; j < x.n(); ++j) {
                ScalarMatrix g = f;
                g.set(i, j, f(i, j) + Scalar::one(x.field()));
                ++e.cases;
                if (intertwiner_check(x, g))
                    e.fail({{"instance", name}, {"mutated", {i + 1, j + 1}}});
                else
                    e.expected.push_back({{"instance", name}, {"mutated", {i + 1, j + 1}}});
            }
    }
    return e.finish();
}

json c7(const SuiteConfig&) {
    Entry e{7};
    const FusionContext even{2, Parity::Even};
    const std::vector<std::tuple<IrrepLabel, IrrepLabel, FusionDecomposition>> ladders{
        {{1, 0}, {1, 0}, {{{2, 0}, 1}, {{0, 0}, 1}}},
        {{2, 3}, {1, -1}, {{{3, 2}, 1}, {{1, 2}, 1}}},
        {{0, 5}, {2, 1}, {{{2, 6}, 1}}},
    };
    for (const auto& [a, b, want] : ladders) {
        ++e.cases;
        if (fuse(a, b, even) != want) e.fail({{"fuse", {a.to_string(), b.to_string()}}});
    }
    json rings = json::array();
    for (int n : {2, 3})
        for (Parity par : {Parity::Even, Parity::Odd}) {
            const RingReport rep = ring_checks({n, par}, 5);
            e.cases += rep.cases;
            if (!rep.ok()) e.fail(to_json(rep));
            rings.push_back({{"n", n}, {"parity", to_string(par)}, {"labels", rep.labels}, {"ok", rep.ok()}});
        }
    e.details["rings"] = rings;
    return e.finish();
}

OmegaData q_family_instance(const mpq_class& q) {
    const FieldSpec f = FieldSpec::exact(1);
    ScalarMatrix omega(f, 2, 2);
    omega.set(1, 0, Scalar::from_rational(f, abs(q)));
    omega.set(0, 1, Scalar::from_int(f, q < 0 ? 1 : -1));
    return OmegaData(GradedSpace({0, 0}, Scalar::one(f)), omega, 0);
}

json c8(const SuiteConfig&) {
    Entry e{8};
    const std::vector<mpq_class> family{-1, mpq_class(-1, 2), mpq_class(3, 10), 1};
    for (const auto& q : family) {
        ++e.cases;
        const double got = q_parameter(q_family_instance(q)).q;
        if (std::abs(got - q.get_d()) >= 1e-12) e.fail({{"q", q.get_str()}, {"got", got}});
    }
    for (const auto& [name, x, want] : std::vector<std::tuple<std::string, OmegaData, double>>{
             {"identity", identity_instance(), -1.0}, {"even", even_instance(), 1.0}}) {
        ++e.cases;
        const double got = q_parameter(x).q;
        if (got != want) e.fail({{"instance", name}, {"got", got}});
    }
    for (const auto& [name, x] : std::vector<std::pair<std::string, OmegaData>>{{"odd", odd_instance()}, {"even", even_instance()}}) {
        ++e.cases;
        const QParameter a = q_parameter(x);
        const QParameter b = q_parameter(degree_shift(x, -1));
        e.details[name] = {{"q", a.q}, {"tau", a.tau.to_string()}};
        if (!same_value(a.tau, b.tau) || a.q != b.q)
            e.fail({{"instance", name}, {"route_a", a.tau.to_string()}, {"route_b", b.tau.to_string()}});
    }
    return e.finish();
}

json c9(const SuiteConfig& cfg) {
    Entry e{9};
    Rng a(sub_seed(cfg.seed, 9)), b(sub_seed(cfg.seed, 9));
    for (int t = 0; t < 10; ++t) {
        ++e.cases;
        const std::string x = to_json(random_valid_instance(a)).dump();
        const std::string y = to_json(random_valid_instance(b)).dump();
        if (x != y) e.fail({{"draw", t}});
    }
    return e.finish();
}

}  // namespace

json run_criterion(int id, const SuiteConfig& cfg) {
    switch (id) {
        case 1: return c1(cfg);
        case 2: return c2(cfg);
        case 3: return c3(cfg);
        case 4: return c4(cfg);
        case 5: return c5(cfg);
        case 6: return c6(cfg);
        case 7: return c7(cfg);
        case 8: return c8(cfg);
        case 9: return c9(cfg);
    }
    throw InvalidData("no criterion " + std::to_string(id));
}

json run_suite(const SuiteConfig& cfg) {
    json criteria = json::array();
    bool passed = true;
    for (int id = 1; id <= kSuiteCriteria; ++id) {
        json entry;
        try {
            entry = run_criterion(id, cfg);
        } catch (const std::exception& ex) {
            entry = {{"id", id}, {"name", criterion_name(id)}, {"passed", false}, {"error", ex.what()}};
        }
        passed = passed && entry.value("passed", false);
        criteria.push_back(std::move(entry));
    }
    return json{{"seed", cfg.seed}, {"bound", cfg.bound}, {"row_cap", cfg.row_cap}, {"criteria", criteria}, {"passed", passed}};
}

}  // namespace braidfoq
