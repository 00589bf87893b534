#include "braidfoq/verify.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <thread>

#include "braidfoq/error.hpp"

namespace braidfoq {

// ---------------------------------------------------------------- coassociativity

CoassociativityReport coassociativity_report(const Presentation& p) {
    CoassociativityReport rep;
    const Comultiplier delta = comultiplier(p);
    for (const auto& g : p.generators) {
        std::vector<RawWord> words{{g.sym}};
        if (g.sym.kind == SymKind::U) words.push_back({Symbol::ustar(g.sym.i, g.sym.j)});
        if (g.sym.kind == SymKind::X) words.push_back({Symbol::xstar(g.sym.i, g.sym.j)});
        if (g.sym.kind == SymKind::Z) words.push_back({Symbol::z(-1)});
        for (const auto& rw : words) {
            const auto nw = normal_form(rw, p.context);
            const Tensor once = delta.apply(nw.word);
            const Tensor left = delta.expand_leg(once, 0);
            const Tensor right = delta.expand_leg(once, 1);
            if (!(left == right)) {
                rep.ok = false;
                rep.failures.push_back(nw.word.to_string());
            }
        }
    }
    return rep;
}

bool coassociativity_check(const Presentation& p) { return coassociativity_report(p).ok; }

// ---------------------------------------------------------------- membership

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::InIdeal: return "in_ideal";
        case Verdict::UndecidedAtBound: return "undecided_at_bound";
        case Verdict::NonzeroConstantObstruction: return "nonzero_constant_obstruction";
    }
    return "?";
}

namespace {

template <class K>
using Sparse = std::vector<std::pair<K, Scalar>>;

// a -= c * b, both sorted by key.
template <class K>
void axpy(Sparse<K>& a, const Scalar& c, const Sparse<K>& b) {
    Sparse<K> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(std::move(a[i++]));
        } else if (i == a.size() || b[j].first < a[i].first) {
            out.emplace_back(b[j].first, -(c * b[j].second));
            ++j;
        } else {
            Scalar v = a[i].second - c * b[j].second;
            if (!v.is_zero()) out.emplace_back(a[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    a.swap(out);
}

struct ColumnLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.zexp != b.zexp) return a.zexp < b.zexp;
        if (a.length() != b.length()) return a.length() > b.length();
        return a.letters < b.letters;
    }
};

struct Gen {
    std::size_t relation;
    bool adjoint;
    int twist;
    Element elem;
};

struct RowSpec {
    std::size_t gen;
    Word left;
    Word right;
};

struct Pivot {
    Sparse<int> row;
    Sparse<std::size_t> hist;
};

Element z_power(const GradedSpace& space, int t) {
    return Element::monomial(space, Word{{}, t}, Scalar::one(space.field()));
}

Element twisted(const Element& g, int t) {
    if (t == 0) return g;
    return z_power(g.space(), t) * g * z_power(g.space(), -t);
}

Element monic(const Element& e) {
    const Scalar lead = e.terms().begin()->second;
    return e.scaled(lead.inverse());
}

std::vector<Letter> alphabet(const Presentation& p) {
    std::set<Letter> out;
    for (const auto& g : p.generators) {
        if (g.sym.kind == SymKind::Z) continue;
        const Letter l{static_cast<LetterKind>(g.sym.kind), static_cast<std::uint8_t>(g.sym.i), static_cast<std::uint8_t>(g.sym.j)};
        out.insert(l);
        out.insert(l.star());
    }
    return {out.begin(), out.end()};
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

}  // namespace

struct TruncatedIdeal::Impl {
    GradedSpace space;
    MembershipOptions opts;
    bool capped = false;
    bool counit_obstructs = true;
    std::vector<Gen> gens;
    std::vector<RowSpec> specs;
    std::map<Word, int, ColumnLess> col_index;
    std::vector<Word> columns;
    std::vector<int> pivot_of_col;
    std::vector<Pivot> pivots;
    std::size_t components = 0;

    explicit Impl(const Presentation& p, MembershipOptions o) : space(p.context), opts(o) {
        if (opts.bound < 0) throw InvalidData("degree bound must be nonnegative");
        collect_generators(p);
        if (!build_rows(alphabet(p))) return;
        eliminate_all();
    }

    void collect_generators(const Presentation& p) {
        const int bound = opts.bound;
        std::vector<Element> seen;
        auto add = [&](std::size_t r, bool adj, int t, Element e) {
            if (e.is_zero()) return;
            Element m = monic(e);
            for (const auto& s : seen)
                if (s == m) return;
            seen.push_back(std::move(m));
            gens.push_back({r, adj, t, std::move(e)});
        };
        for (std::size_t r = 0; r < p.relations.size(); ++r) {
            const Element e = relation_element(p, r);
            if (e.is_zero()) continue;
            int maxz = 0;
            for (const auto& [w, c] : e.terms()) maxz = std::max(maxz, std::abs(w.zexp));
            if (maxz > 0 && maxz >= bound)
                throw InvalidData("degree bound " + std::to_string(bound) + " must exceed the z-degree " +
                                  std::to_string(maxz) + " of relation " + p.relations[r].label);
            if (!counit(e).is_zero()) counit_obstructs = false;
            for (bool adj : {false, true}) {
                const Element base = adj ? e.adjoint() : e;
                if (base.homogeneous()) {
                    add(r, adj, 0, base);
                } else {
                    for (int t = -bound; t <= bound; ++t) add(r, adj, t, twisted(base, t));
                }
            }
        }
    }

    bool build_rows(const std::vector<Letter>& letters) {
        const int bound = opts.bound;
        std::vector<std::vector<Word>> words_by_len(static_cast<std::size_t>(bound) + 1);
        words_by_len[0].push_back(Word{});
        for (int len = 1; len <= bound; ++len)
            for (const auto& w : words_by_len[len - 1])
                for (const auto& l : letters) {
                    Word x = w;
                    x.letters.push_back(l);
                    words_by_len[len].push_back(std::move(x));
                }

        std::vector<Element> rows;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            const Element& ge = gens[g].elem;
            const int glen = static_cast<int>(ge.max_length());
            for (int la = 0; la + glen <= bound; ++la)
                for (int lb = 0; la + lb + glen <= bound; ++lb)
                    for (const auto& a : words_by_len[la])
                        for (const auto& b : words_by_len[lb]) {
                            const Element base = Element::monomial(space, a, Scalar::one(space.field())) * ge *
                                                 Element::monomial(space, b, Scalar::one(space.field()));
                            if (base.is_zero()) continue;
                            for (int t = -bound; t <= bound; ++t) {
                                bool inside = true;
                                for (const auto& [w, c] : base.terms())
                                    if (std::abs(w.zexp + t) > bound) inside = false;
                                if (!inside) continue;
                                if (rows.size() >= opts.row_cap) {
                                    capped = true;
                                    specs.clear();
                                    return false;
                                }
                                rows.push_back(base * z_power(space, t));
                                specs.push_back({g, a, Word{b.letters, t}});
                            }
                        }
        }

        for (const auto& r : rows)
            for (const auto& [w, c] : r.terms()) col_index.emplace(w, 0);
        int idx = 0;
        for (auto& [w, i] : col_index) {
            i = idx++;
            columns.push_back(w);
        }
        sparse_rows.reserve(rows.size());
        for (const auto& r : rows) {
            Sparse<int> s;
            for (const auto& [w, c] : r.terms()) s.emplace_back(col_index.at(w), c);
            std::sort(s.begin(), s.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            sparse_rows.push_back(std::move(s));
        }
        return true;
    }

    std::vector<Sparse<int>> sparse_rows;

    void eliminate_all() {
        const std::size_t ncols = columns.size();
        std::vector<std::size_t> parent(ncols);
        std::iota(parent.begin(), parent.end(), 0);
        for (const auto& r : sparse_rows)
            for (std::size_t k = 1; k < r.size(); ++k) {
                const std::size_t a = find_root(parent, r[0].first), b = find_root(parent, r[k].first);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        std::map<std::size_t, std::size_t> comp_of_root;
        std::vector<std::vector<std::size_t>> comp_rows;
        for (std::size_t i = 0; i < sparse_rows.size(); ++i) {
            if (sparse_rows[i].empty()) continue;
            const std::size_t root = find_root(parent, sparse_rows[i][0].first);
            auto [it, fresh] = comp_of_root.emplace(root, comp_rows.size());
            if (fresh) comp_rows.emplace_back();
            comp_rows[it->second].push_back(i);
        }
        components = comp_rows.size();

        std::vector<std::vector<Pivot>> results(comp_rows.size());
        std::atomic<std::size_t> next{0};
        auto work = [&] {
            for (std::size_t c = next++; c < comp_rows.size(); c = next++) results[c] = eliminate(comp_rows[c]);
        };
        const unsigned nworkers = std::max(1u, std::min<unsigned>(opts.workers, static_cast<unsigned>(comp_rows.size())));
        if (nworkers <= 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            for (unsigned w = 0; w < nworkers; ++w) pool.emplace_back(work);
            for (auto& t : pool) t.join();
        }

        pivot_of_col.assign(ncols, -1);
        for (auto& res : results)
            for (auto& pv : res) {
                pivot_of_col[pv.row.front().first] = static_cast<int>(pivots.size());
                pivots.push_back(std::move(pv));
            }
        sparse_rows.clear();
        sparse_rows.shrink_to_fit();
    }

    std::vector<Pivot> eliminate(const std::vector<std::size_t>& rows) const {
        std::vector<Pivot> out;
        std::map<int, std::size_t> at;
        for (std::size_t r : rows) {
            Pivot cur{sparse_rows[r], {{r, Scalar::one(space.field())}}};
            while (!cur.row.empty()) {
                auto it = at.find(cur.row.front().first);
                if (it == at.end()) break;
                const Scalar c = cur.row.front().second;
                axpy(cur.row, c, out[it->second].row);
                axpy(cur.hist, c, out[it->second].hist);
            }
            if (cur.row.empty()) continue;
            const Scalar inv = cur.row.front().second.inverse();
            for (auto& [k, v] : cur.row) v *= inv;
            for (auto& [k, v] : cur.hist) v *= inv;
            at.emplace(cur.row.front().first, out.size());
            out.push_back(std::move(cur));
        }
        return out;
    }

    TruncatedIdeal::Reduction reduce(const Element& x) const {
        Element residual(space);
        std::map<int, Scalar> work;
        for (const auto& [w, c] : x.terms()) {
            auto it = col_index.find(w);
            if (it == col_index.end())
                residual.add_term(w, c);
            else
                work.emplace(it->second, c);
        }
        std::map<std::size_t, Scalar> comb;
        while (!work.empty()) {
            auto first = work.begin();
            const int col = first->first;
            const Scalar v = first->second;
            work.erase(first);
            const int pv = pivot_of_col.empty() ? -1 : pivot_of_col[col];
            if (pv < 0) {
                residual.add_term(columns[col], v);
                continue;
            }
            const Pivot& p = pivots[pv];
            for (std::size_t k = 1; k < p.row.size(); ++k) {
                const auto& [cc, cv] = p.row[k];
                auto [it, fresh] = work.try_emplace(cc, -(v * cv));
                if (!fresh) {
                    it->second -= v * cv;
                    if (it->second.is_zero()) work.erase(it);
                }
            }
            for (const auto& [r, hv] : p.hist) {
                auto [it, fresh] = comb.try_emplace(r, v * hv);
                if (!fresh) {
                    it->second += v * hv;
                    if (it->second.is_zero()) comb.erase(it);
                }
            }
        }
        TruncatedIdeal::Reduction out{std::move(residual), {}};
        for (const auto& [r, c] : comb) {
            const RowSpec& s = specs[r];
            const Gen& g = gens[s.gen];
            out.combination.push_back({0, s.left, g.relation, g.adjoint, g.twist, s.right, Word{}, c});
        }
        return out;
    }
};

TruncatedIdeal::TruncatedIdeal(const Presentation& p, MembershipOptions opts) : impl_(std::make_unique<Impl>(p, opts)) {}
TruncatedIdeal::~TruncatedIdeal() = default;
TruncatedIdeal::TruncatedIdeal(TruncatedIdeal&&) noexcept = default;
TruncatedIdeal& TruncatedIdeal::operator=(TruncatedIdeal&&) noexcept = default;

const MembershipOptions& TruncatedIdeal::options() const noexcept { return impl_->opts; }
bool TruncatedIdeal::capped() const noexcept { return impl_->capped; }
std::size_t TruncatedIdeal::row_count() const noexcept { return impl_->specs.size(); }
std::size_t TruncatedIdeal::rank() const noexcept { return impl_->pivots.size(); }
std::size_t TruncatedIdeal::component_count() const noexcept { return impl_->components; }
bool TruncatedIdeal::counit_obstructs() const noexcept { return impl_->counit_obstructs; }
TruncatedIdeal::Reduction TruncatedIdeal::reduce(const Element& x) const { return impl_->reduce(x); }

Element certificate_term(const Presentation& p, const CertificateEntry& e) {
    Element g = relation_element(p, e.relation);
    if (e.adjoint) g = g.adjoint();
    const Scalar one = Scalar::one(p.context.field());
    return (Element::monomial(p.context, e.left, one) * twisted(g, e.twist) * Element::monomial(p.context, e.right, one))
        .scaled(e.coeff);
}

namespace {

Verdict failure_verdict(bool obstructs, const Scalar& eps) {
    return obstructs && !eps.is_zero() ? Verdict::NonzeroConstantObstruction : Verdict::UndecidedAtBound;
}

Scalar tensor_counit(const Tensor& t) {
    Scalar acc = Scalar::zero(t.space().field());
    for (const auto& [ws, c] : t.terms()) {
        bool nonzero = true;
        for (const auto& w : ws)
            if (counit(w, c.field()).is_zero()) nonzero = false;
        if (nonzero) acc += c;
    }
    return acc;
}

std::size_t max_abs_zexp(const Tensor& t) {
    std::size_t m = 0;
    for (const auto& [ws, c] : t.terms())
        for (const auto& w : ws) m = std::max<std::size_t>(m, static_cast<std::size_t>(std::abs(w.zexp)));
    return m;
}

}  // namespace

MembershipCertificate ideal_membership(const Element& target, const TruncatedIdeal& ideal) {
    MembershipCertificate cert;
    cert.bound = ideal.options().bound;
    if (target.is_zero()) {
        cert.verdict = Verdict::InIdeal;
        return cert;
    }
    const Scalar eps = counit(target);
    if (ideal.capped()) {
        cert.verdict = Verdict::UndecidedAtBound;
        cert.note = "row cap reached";
        return cert;
    }
    if (static_cast<int>(target.max_length()) > cert.bound) {
        cert.verdict = failure_verdict(ideal.counit_obstructs(), eps);
        cert.note = "target degree exceeds the bound";
        return cert;
    }
    auto red = ideal.reduce(target);
    if (red.residual.is_zero()) {
        cert.verdict = Verdict::InIdeal;
        cert.combination = std::move(red.combination);
        return cert;
    }
    cert.verdict = failure_verdict(ideal.counit_obstructs(), eps);
    cert.note = "nonzero residual: " + red.residual.to_string();
    return cert;
}

MembershipCertificate ideal_membership(const Tensor& target, const TruncatedIdeal& ideal) {
    if (target.legs() != 2) throw InvalidData("tensor membership needs two legs");
    MembershipCertificate cert;
    cert.bound = ideal.options().bound;
    if (target.is_zero()) {
        cert.verdict = Verdict::InIdeal;
        return cert;
    }
    const Scalar eps = tensor_counit(target);
    if (ideal.capped()) {
        cert.verdict = Verdict::UndecidedAtBound;
        cert.note = "row cap reached";
        return cert;
    }
    if (static_cast<int>(target.max_leg_length()) > cert.bound ||
        static_cast<int>(max_abs_zexp(target)) > cert.bound) {
        cert.verdict = failure_verdict(ideal.counit_obstructs(), eps);
        cert.note = "target degree exceeds the bound";
        return cert;
    }
    const GradedSpace& sp = target.space();

    // T = (1-P) (x) 1 T + P (x) (1-P) T + (P (x) P) T.
    std::map<Word, Element> by_second;
    for (const auto& [ws, c] : target.terms()) by_second.try_emplace(ws[1], sp).first->second.add_term(ws[0], c);
    std::map<Word, Element> by_first;
    for (auto& [y, x] : by_second) {
        auto red = ideal.reduce(x);
        for (auto& e : red.combination) {
            e.leg = 1;
            e.other = y;
            cert.combination.push_back(std::move(e));
        }
        for (const auto& [w, c] : red.residual.terms()) by_first.try_emplace(w, sp).first->second.add_term(y, c);
    }
    Tensor residual(sp, 2);
    for (auto& [w, y] : by_first) {
        auto red = ideal.reduce(y);
        for (auto& e : red.combination) {
            e.leg = 2;
            e.other = w;
            cert.combination.push_back(std::move(e));
        }
        for (const auto& [v, c] : red.residual.terms()) residual.add_term({w, v}, c);
    }
    if (residual.is_zero()) {
        cert.verdict = Verdict::InIdeal;
        return cert;
    }
    cert.combination.clear();
    cert.verdict = failure_verdict(ideal.counit_obstructs(), eps);
    cert.note = "nonzero residual: " + residual.to_string();
    return cert;
}

MembershipCertificate ideal_membership(const Element& target, const Presentation& p, MembershipOptions opts) {
    return ideal_membership(target, TruncatedIdeal(p, opts));
}

MembershipCertificate ideal_membership(const Tensor& target, const Presentation& p, MembershipOptions opts) {
    return ideal_membership(target, TruncatedIdeal(p, opts));
}

bool replay(const MembershipCertificate& cert, const Element& target, const Presentation& p) {
    if (cert.verdict != Verdict::InIdeal) return false;
    Element acc(p.context);
    for (const auto& e : cert.combination) {
        if (e.leg != 0) return false;
        acc += certificate_term(p, e);
    }
    return acc == target;
}

bool replay(const MembershipCertificate& cert, const Tensor& target, const Presentation& p) {
    if (cert.verdict != Verdict::InIdeal) return false;
    Tensor acc(p.context, 2);
    for (const auto& e : cert.combination) {
        if (e.leg != 1 && e.leg != 2) return false;
        const Element term = certificate_term(p, e);
        for (const auto& [w, c] : term.terms())
            acc.add_term(e.leg == 1 ? std::vector<Word>{w, e.other} : std::vector<Word>{e.other, w}, c);
    }
    return acc == target;
}

bool WellDefinednessReport::all_in_ideal() const {
    return std::all_of(entries.begin(), entries.end(),
                       [](const auto& e) { return e.certificate.verdict == Verdict::InIdeal && e.replay_ok; });
}

bool WellDefinednessReport::any_undecided() const {
    return std::any_of(entries.begin(), entries.end(),
                       [](const auto& e) { return e.certificate.verdict == Verdict::UndecidedAtBound; });
}

WellDefinednessReport well_definedness_check(const Presentation& p, MembershipOptions opts) {
    if (p.name != "boson" && p.name != "tform" && p.name != "aof")
        throw InvalidData("well-definedness needs a bosonisation, t-form or A_o(F) presentation, got " + p.name);
    WellDefinednessReport rep;
    rep.bound = opts.bound;
    const TruncatedIdeal ideal(p, opts);
    rep.ideal_rows = ideal.row_count();
    rep.ideal_rank = ideal.rank();
    const Comultiplier delta = comultiplier(p);
    for (std::size_t r = 0; r < p.relations.size(); ++r) {
        const Tensor target = delta.apply(relation_element(p, r));
        WellDefinednessEntry e{p.relations[r].label, ideal_membership(target, ideal), false};
        e.replay_ok = e.certificate.verdict == Verdict::InIdeal && replay(e.certificate, target, p);
        rep.entries.push_back(std::move(e));
    }
    return rep;
}

// ---------------------------------------------------------------- intertwiner

bool intertwiner_check(const OmegaData& data, const std::optional<ScalarMatrix>& f_in) {
    const Presentation p = t_form_presentation(data);
    const ScalarMatrix f = f_in ? *f_in : f_matrix(data);
    const std::size_t n = data.n();
    if (f.rows() != n || f.cols() != n) throw ShapeError("F has the wrong size");
    const GradedSpace& sp = p.context;
    const Scalar one = Scalar::one(sp.field());
    auto t = [&](std::size_t a, std::size_t b) {
        return Element::from_raw([&] { RawElement r; r.add(one, {Symbol::x(static_cast<int>(a), static_cast<int>(b))}); return r; }(), sp);
    };
    auto tbar = [&](std::size_t a, std::size_t b) { return t(a, b).adjoint(); };
    const Element zd = Element::monomial(sp, Word{{}, data.d()}, one);

    std::map<std::string, std::size_t> by_label;
    for (std::size_t r = 0; r < p.relations.size(); ++r) by_label[p.relations[r].label] = r;

    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            Element tf(sp), ftbar(sp);
            for (std::size_t k = 0; k < n; ++k) {
                tf += t(j, k).scaled(f(k, i));
                ftbar += tbar(k, i).scaled(f(j, k));
            }
            const Element entry = tf - zd * ftbar;
            const std::string label = "invariance(" + std::to_string(j + 1) + "," + std::to_string(i + 1) + ")";
            if (!(entry == relation_element(p, by_label.at(label)))) return false;
        }
    return true;
}

// ---------------------------------------------------------------- json

json to_json(const Word& w) {
    json a = json::array();
    for (const auto& s : w.raw()) a.push_back(s.to_string());
    return a;
}

json to_json(const MembershipCertificate& cert) {
    json comb = json::array();
    for (const auto& e : cert.combination)
        comb.push_back({{"leg", e.leg},
                        {"left", to_json(e.left)},
                        {"relation", e.relation},
                        {"adjoint", e.adjoint},
                        {"twist", e.twist},
                        {"right", to_json(e.right)},
                        {"other", to_json(e.other)},
                        {"coeff", to_json(e.coeff)}});
    return json{{"verdict", to_string(cert.verdict)}, {"bound", cert.bound}, {"note", cert.note}, {"combination", comb}};
}

json to_json(const WellDefinednessReport& rep) {
    json entries = json::array();
    for (const auto& e : rep.entries)
        entries.push_back({{"label", e.label},
                           {"verdict", to_string(e.certificate.verdict)},
                           {"terms", e.certificate.combination.size()},
                           {"replay_ok", e.replay_ok},
                           {"note", e.certificate.note}});
    return json{{"bound", rep.bound},
                {"ideal_rows", rep.ideal_rows},
                {"ideal_rank", rep.ideal_rank},
                {"all_in_ideal", rep.all_in_ideal()},
                {"entries", entries}};
}

}  // namespace braidfoq
