#include "braidfoq/presentation.hpp"

#include <algorithm>
#include <cstdlib>

#include "braidfoq/error.hpp"

namespace braidfoq {

namespace {

std::string pair_label(const std::string& family, std::size_t a, std::size_t b) {
    return family + "(" + std::to_string(a + 1) + "," + std::to_string(b + 1) + ")";
}

int I(std::size_t k) { return static_cast<int>(k); }

void require_valid(const OmegaData& data) {
    const auto rep = validate(data);
    if (!rep.holds) throw InvalidData("presentation needs valid data: " + rep.reason);
}

// Sum_k A(k,i) B(k,j) - delta_ij and Sum_k A(i,k) B(j,k) - delta_ij for letter makers A, B.
template <class Row, class Col>
void unitarity(Presentation& p, std::size_t n, const std::string& family, Row first, Col second) {
    const FieldSpec& f = p.context.field();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            RawElement e;
            for (std::size_t k = 0; k < n; ++k) e.add(Scalar::one(f), {first(i, j, k), second(i, j, k)});
            if (i == j) e.add(-Scalar::one(f), {});
            p.relations.push_back({pair_label(family, i, j), std::move(e)});
        }
}

void add_z_relations(Presentation& p, bool t_letters) {
    const FieldSpec& f = p.context.field();
    const std::size_t n = p.context.n();
    RawElement a, b;
    a.add(Scalar::one(f), {Symbol::z(1), Symbol::z(-1)});
    a.add(-Scalar::one(f), {});
    b.add(Scalar::one(f), {Symbol::z(-1), Symbol::z(1)});
    b.add(-Scalar::one(f), {});
    p.relations.push_back({"z_unitary(1)", std::move(a)});
    p.relations.push_back({"z_unitary(2)", std::move(b)});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Symbol g = t_letters ? Symbol::x(I(i), I(j)) : Symbol::u(I(i), I(j));
            RawElement e;
            e.add(Scalar::one(f), {Symbol::z(1), g});
            e.add(-p.context.zeta_pow(p.context.degree(i) - p.context.degree(j)), {g, Symbol::z(1)});
            p.relations.push_back({pair_label("commute", i, j), std::move(e)});
        }
    p.generators.push_back({Symbol::z(1), 0});
    p.comult[Symbol::z(1)] = RawTensor{{Scalar::one(f), {{Symbol::z(1)}, {Symbol::z(1)}}}};
}

RawWord z_then(int power, Symbol s) {
    if (power == 0) return {s};
    return {Symbol::z(power), s};
}

Tensor outer(const Element& a, const Element& b) {
    Tensor t(a.space(), 2);
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) t.add_term({wa, wb}, ca * cb);
    return t;
}

}  // namespace

int symbol_grading(const Symbol& s, const GradedSpace& space) {
    if (s.kind == SymKind::U) return space.degree(s.j) - space.degree(s.i);
    if (s.kind == SymKind::Ustar) return space.degree(s.i) - space.degree(s.j);
    return 0;
}

bool relation_homogeneous(const Relation& r, const GradedSpace& space) {
    bool first = true;
    int deg = 0;
    for (const auto& t : r.expr.terms()) {
        int g = 0;
        for (const auto& s : t.word) g += symbol_grading(s, space);
        if (!first && g != deg) return false;
        deg = g;
        first = false;
    }
    return true;
}

// ---------------------------------------------------------------- builders

Presentation braided_presentation(const OmegaData& data) {
    require_valid(data);
    const auto& sp = data.space();
    const std::size_t n = data.n();
    const int d = data.d();
    const FieldSpec& f = sp.field();
    Presentation p{"braided", sp, {}, {}, {}, data, std::nullopt};

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Symbol g = Symbol::u(I(i), I(j));
            p.generators.push_back({g, symbol_grading(g, sp)});
        }

    unitarity(p, n, "isometry", [](std::size_t i, std::size_t, std::size_t k) { return Symbol::ustar(I(k), I(i)); },
              [](std::size_t, std::size_t j, std::size_t k) { return Symbol::u(I(k), I(j)); });
    unitarity(p, n, "coisometry", [](std::size_t i, std::size_t, std::size_t k) { return Symbol::u(I(i), I(k)); },
              [](std::size_t, std::size_t j, std::size_t k) { return Symbol::ustar(I(j), I(k)); });

    const ScalarMatrix& w = data.omega();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const long dj = sp.degree(j);
            const Scalar left = sp.zeta_pow(dj * sp.degree(i));
            const Scalar right = sp.zeta_pow(dj * (d - dj));
            RawElement e;
            for (std::size_t k = 0; k < n; ++k) {
                if (!w(i, k).is_zero()) e.add(left * w(i, k), {Symbol::u(I(j), I(k))});
                if (!w(k, j).is_zero()) e.add(-(right * w(k, j)), {Symbol::ustar(I(k), I(i))});
            }
            p.relations.push_back({pair_label("invariance", i, j), std::move(e)});
        }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            RawTensor t;
            for (std::size_t j = 0; j < n; ++j)
                t.push_back({Scalar::one(f), {{Symbol::u(I(i), I(j))}, {Symbol::u(I(j), I(k))}}});
            p.comult[Symbol::u(I(i), I(k))] = std::move(t);
        }
    return p;
}

Presentation bosonisation_presentation(const OmegaData& data) {
    Presentation p = braided_presentation(data);
    p.name = "boson";
    const auto& sp = p.context;
    const std::size_t n = sp.n();
    const FieldSpec& f = sp.field();
    add_z_relations(p, false);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            RawTensor t;
            for (std::size_t l = 0; l < n; ++l)
                t.push_back({Scalar::one(f),
                             {{Symbol::u(I(i), I(l))}, z_then(sp.degree(l) - sp.degree(i), Symbol::u(I(l), I(k)))}});
            p.comult[Symbol::u(I(i), I(k))] = std::move(t);
        }
    return p;
}

Presentation t_form_presentation(const OmegaData& data) {
    require_valid(data);
    const auto& sp = data.space();
    const std::size_t n = data.n();
    const long d = data.d();
    const FieldSpec& f = sp.field();
    Presentation p{"tform", sp, {}, {}, {}, data, f_matrix(data)};

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p.generators.push_back({Symbol::x(I(i), I(j)), 0});

    unitarity(p, n, "isometry", [](std::size_t i, std::size_t, std::size_t k) { return Symbol::xstar(I(k), I(i)); },
              [](std::size_t, std::size_t j, std::size_t k) { return Symbol::x(I(k), I(j)); });
    unitarity(p, n, "coisometry", [](std::size_t i, std::size_t, std::size_t k) { return Symbol::x(I(i), I(k)); },
              [](std::size_t, std::size_t j, std::size_t k) { return Symbol::xstar(I(j), I(k)); });

    // Entry (j,i) of t F - z^d F conj(t).
    const ScalarMatrix& w = data.omega();
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            RawElement e;
            for (std::size_t k = 0; k < n; ++k) {
                if (!w(i, k).is_zero()) e.add(sp.zeta_pow(d * sp.degree(i)) * w(i, k), {Symbol::x(I(j), I(k))});
                if (!w(k, j).is_zero()) {
                    RawWord rw = d == 0 ? RawWord{Symbol::xstar(I(k), I(i))}
                                        : RawWord{Symbol::z(static_cast<int>(d)), Symbol::xstar(I(k), I(i))};
                    e.add(-(sp.zeta_pow(d * sp.degree(k)) * w(k, j)), std::move(rw));
                }
            }
            p.relations.push_back({pair_label("invariance", j, i), std::move(e)});
        }

    add_z_relations(p, true);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            RawTensor t;
            for (std::size_t m = 0; m < n; ++m)
                t.push_back({Scalar::one(f), {{Symbol::x(I(i), I(m))}, {Symbol::x(I(m), I(k))}}});
            p.comult[Symbol::x(I(i), I(k))] = std::move(t);
        }
    return p;
}

Presentation aof_presentation(const ScalarMatrix& fm) {
    if (!fm.square()) throw ShapeError("F must be square");
    const std::size_t rk = fm.rank();
    if (rk != fm.rows()) throw SingularMatrix(rk);
    const std::size_t n = fm.rows();
    const FieldSpec& f = fm.field();
    GradedSpace space(std::vector<int>(n, 0), Scalar::one(f));
    Presentation p{"aof", space, {}, {}, {}, std::nullopt, fm};

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) p.generators.push_back({Symbol::x(I(i), I(j)), 0});

    unitarity(p, n, "isometry", [](std::size_t i, std::size_t, std::size_t k) { return Symbol::xstar(I(k), I(i)); },
              [](std::size_t, std::size_t j, std::size_t k) { return Symbol::x(I(k), I(j)); });
    unitarity(p, n, "coisometry", [](std::size_t i, std::size_t, std::size_t k) { return Symbol::x(I(i), I(k)); },
              [](std::size_t, std::size_t j, std::size_t k) { return Symbol::xstar(I(j), I(k)); });

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            RawElement e;
            for (std::size_t k = 0; k < n; ++k) {
                e.add(fm(k, j), {Symbol::x(I(i), I(k))});
                e.add(-fm(i, k), {Symbol::xstar(I(k), I(j))});
            }
            p.relations.push_back({pair_label("invariance", i, j), std::move(e)});
        }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            RawTensor t;
            for (std::size_t m = 0; m < n; ++m)
                t.push_back({Scalar::one(f), {{Symbol::x(I(i), I(m))}, {Symbol::x(I(m), I(k))}}});
            p.comult[Symbol::x(I(i), I(k))] = std::move(t);
        }
    return p;
}

Presentation circle_presentation(const GradedSpace& space) {
    const FieldSpec& f = space.field();
    Presentation p{"circle", space, {{Symbol::z(1), 0}}, {}, {}, std::nullopt, std::nullopt};
    RawElement a, b;
    a.add(Scalar::one(f), {Symbol::z(1), Symbol::z(-1)});
    a.add(-Scalar::one(f), {});
    b.add(Scalar::one(f), {Symbol::z(-1), Symbol::z(1)});
    b.add(-Scalar::one(f), {});
    p.relations.push_back({"z_unitary(1)", std::move(a)});
    p.relations.push_back({"z_unitary(2)", std::move(b)});
    p.comult[Symbol::z(1)] = RawTensor{{Scalar::one(f), {{Symbol::z(1)}, {Symbol::z(1)}}}};
    return p;
}

// ---------------------------------------------------------------- use

Element relation_element(const Presentation& p, std::size_t index) {
    return Element::from_raw(p.relations.at(index).expr, p.context);
}

Comultiplier comultiplier(const Presentation& p) {
    std::map<Letter, Tensor> letters;
    std::optional<Tensor> z_image;
    for (const auto& [sym, raw] : p.comult) {
        Tensor t = Tensor::from_raw(raw, p.context, 2);
        if (sym.kind == SymKind::Z) {
            if (sym.power != 1) throw InvalidData("comultiplication must be given on Z itself");
            z_image = std::move(t);
            continue;
        }
        letters.emplace(Letter{static_cast<LetterKind>(sym.kind), static_cast<std::uint8_t>(sym.i), static_cast<std::uint8_t>(sym.j)},
                        std::move(t));
    }
    return Comultiplier(p.context, letters, z_image);
}

Element substitute(const RawElement& raw, const std::map<Symbol, RawElement>& assignment, const GradedSpace& target) {
    const FieldSpec& f = target.field();
    auto image = [&](const Symbol& s) -> Element {
        if (s.kind == SymKind::Z) {
            auto it = assignment.find(Symbol::z(1));
            if (it == assignment.end()) throw Error("morphism does not assign Z");
            Element base = Element::from_raw(it->second, target);
            if (s.power < 0) base = base.adjoint();
            Element acc = Element::constant(target, Scalar::one(f));
            for (int k = 0; k < std::abs(s.power); ++k) acc = acc * base;
            return acc;
        }
        if (auto it = assignment.find(s); it != assignment.end()) return Element::from_raw(it->second, target);
        const bool starred = s.kind == SymKind::Ustar || s.kind == SymKind::Xstar;
        if (starred) {
            const Symbol plain{s.kind == SymKind::Ustar ? SymKind::U : SymKind::X, s.i, s.j, 0};
            if (auto it = assignment.find(plain); it != assignment.end())
                return Element::from_raw(it->second, target).adjoint();
        }
        throw Error("morphism does not assign " + s.to_string());
    };
    Element out(target);
    for (const auto& t : raw.terms()) {
        Element acc = Element::constant(target, t.coeff);
        for (const auto& s : t.word) acc = acc * image(s);
        out += acc;
    }
    return out;
}

Projections projection_morphisms(const OmegaData& data) {
    const FieldSpec& f = data.field();
    RawElement z;
    z.add(Scalar::one(f), {Symbol::z(1)});
    MorphismSpec iota{"circle", "boson", {{Symbol::z(1), z}}};
    MorphismSpec pi{"boson", "circle", {{Symbol::z(1), z}}};
    for (std::size_t i = 0; i < data.n(); ++i)
        for (std::size_t j = 0; j < data.n(); ++j) {
            RawElement e;
            if (i == j) e.add(Scalar::one(f), {});
            pi.assignment[Symbol::u(I(i), I(j))] = e;
        }
    return {iota, pi};
}

MorphismCheck check_projections(const OmegaData& data) {
    MorphismCheck out;
    const Presentation boson = bosonisation_presentation(data);
    const Presentation circle = circle_presentation(data.space());
    const auto [iota, pi] = projection_morphisms(data);
    const GradedSpace& sp = data.space();

    auto check_morphism = [&](const MorphismSpec& m, const Presentation& src, const Presentation& dst) {
        for (const auto& r : src.relations) {
            const Element img = substitute(r.expr, m.assignment, sp);
            if (!img.is_zero()) {
                out.relations_ok = false;
                out.failures.push_back(m.source + "->" + m.target + ": relation " + r.label + " maps to " + img.to_string());
            }
        }
        const Comultiplier dst_delta = comultiplier(dst);
        for (const auto& [sym, raw] : src.comult) {
            Tensor lhs(sp, 2);
            for (const auto& term : raw) {
                RawElement a, b;
                a.add(Scalar::one(sp.field()), term.legs[0]);
                b.add(Scalar::one(sp.field()), term.legs[1]);
                lhs += outer(substitute(a, m.assignment, sp), substitute(b, m.assignment, sp)).scaled(term.coeff);
            }
            RawElement g;
            g.add(Scalar::one(sp.field()), {sym});
            const Tensor rhs = dst_delta.apply(substitute(g, m.assignment, sp));
            if (!(lhs == rhs)) {
                out.comult_ok = false;
                out.failures.push_back(m.source + "->" + m.target + ": comultiplication of " + sym.to_string());
            }
        }
    };
    check_morphism(pi, boson, circle);
    check_morphism(iota, circle, boson);

    RawElement z;
    z.add(Scalar::one(sp.field()), {Symbol::z(1)});
    const Element through = substitute(substitute(z, iota.assignment, sp).raw(), pi.assignment, sp);
    if (!(through == Element::from_raw(z, sp))) {
        out.composite_identity = false;
        out.failures.push_back("pi(iota(Z)) != Z");
    }
    return out;
}

// ---------------------------------------------------------------- json

namespace {

json word_json(const RawWord& w) {
    json a = json::array();
    for (const auto& s : w) a.push_back(s.to_string());
    return a;
}

RawWord word_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("word must be an array of generator strings");
    RawWord w;
    for (const auto& s : j) w.push_back(Symbol::parse(s.get<std::string>()));
    return w;
}

}  // namespace

json raw_element_json(const RawElement& e) {
    json terms = json::array();
    for (const auto& t : e.terms()) terms.push_back({{"coeff", to_json(t.coeff)}, {"word", word_json(t.word)}});
    return terms;
}

RawElement raw_element_from_json(const json& j, const FieldSpec& field) {
    if (!j.is_array()) throw ParseError("term list must be an array");
    RawElement e;
    for (const auto& t : j) e.add(scalar_from_json(t.at("coeff"), field), word_from_json(t.at("word")));
    return e;
}

json serialize(const Presentation& p) {
    json gens = json::array();
    for (const auto& g : p.generators) gens.push_back({{"sym", g.sym.to_string()}, {"grading", g.grading}});
    json rels = json::array();
    for (const auto& r : p.relations) rels.push_back({{"label", r.label}, {"terms", raw_element_json(r.expr)}});
    json comult = json::object();
    for (const auto& [sym, raw] : p.comult) {
        json terms = json::array();
        for (const auto& t : raw) {
            json legs = json::array();
            for (const auto& l : t.legs) legs.push_back(word_json(l));
            terms.push_back({{"coeff", to_json(t.coeff)}, {"legs", legs}});
        }
        comult[sym.to_string()] = terms;
    }
    json out{{"name", p.name},
             {"context",
              {{"field", p.context.field().to_string()},
               {"degrees", p.context.degrees()},
               {"zeta", to_json(p.context.zeta())}}},
             {"generators", gens},
             {"relations", rels},
             {"comult", comult}};
    if (p.meta) out["meta"] = to_json(*p.meta);
    if (p.f) out["F"] = to_json(*p.f);
    return out;
}

std::string serialize_string(const Presentation& p) { return serialize(p).dump(2); }

Presentation deserialize(const json& j) {
    try {
        static const std::vector<std::string> kinds{"braided", "boson", "tform", "aof", "circle"};
        const std::string name = j.at("name").get<std::string>();
        if (std::find(kinds.begin(), kinds.end(), name) == kinds.end())
            throw ParseError("unknown presentation kind: " + name);
        const json& ctx = j.at("context");
        const FieldSpec field = FieldSpec::parse(ctx.at("field").get<std::string>());
        GradedSpace space(ctx.at("degrees").get<std::vector<int>>(), scalar_from_json(ctx.at("zeta"), field));
        Presentation p{name, space, {}, {}, {}, std::nullopt, std::nullopt};
        for (const auto& g : j.at("generators")) {
            const Symbol s = Symbol::parse(g.at("sym").get<std::string>());
            if (s.kind == SymKind::U || s.kind == SymKind::X || s.kind == SymKind::Ustar || s.kind == SymKind::Xstar)
                if (static_cast<std::size_t>(std::max(s.i, s.j)) >= space.n())
                    throw ParseError("generator index out of range: " + s.to_string());
            p.generators.push_back({s, g.at("grading").get<int>()});
        }
        for (const auto& r : j.at("relations"))
            p.relations.push_back({r.at("label").get<std::string>(), raw_element_from_json(r.at("terms"), field)});
        for (const auto& [key, terms] : j.at("comult").items()) {
            RawTensor t;
            for (const auto& term : terms) {
                RawTensorTerm tt{scalar_from_json(term.at("coeff"), field), {}};
                for (const auto& leg : term.at("legs")) tt.legs.push_back(word_from_json(leg));
                t.push_back(std::move(tt));
            }
            p.comult[Symbol::parse(key)] = std::move(t);
        }
        if (j.contains("meta")) p.meta = omega_from_json(j.at("meta"));
        if (j.contains("F")) p.f = matrix_from_json(j.at("F"), field);
        return p;
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed presentation: ") + e.what());
    }
}

}  // namespace braidfoq
