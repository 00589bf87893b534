#include "braidfoq/fusion.hpp"

#include <cmath>
#include <cstdlib>
#include <mutex>
#include <shared_mutex>

#include "braidfoq/error.hpp"

namespace braidfoq {

Parity parse_parity(const std::string& text) {
    if (text == "even" || text == "even_d") return Parity::Even;
    if (text == "odd" || text == "odd_d") return Parity::Odd;
    throw ParseError("parity must be even or odd, got '" + text + "'");
}

std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

std::string IrrepLabel::to_string() const { return "(" + std::to_string(k) + "," + std::to_string(l) + ")"; }

bool label_valid(const IrrepLabel& a, const FusionContext& ctx) {
    if (a.k < 0) return false;
    return ctx.parity == Parity::Even || (a.k - a.l) % 2 == 0;
}

namespace {

void require_valid(const IrrepLabel& a, const FusionContext& ctx) {
    if (ctx.n < 2) throw InvalidData("fusion context needs n >= 2");
    if (!label_valid(a, ctx)) throw InvalidData("label " + a.to_string() + " is not valid in the " + to_string(ctx.parity) + " context");
}

}  // namespace

FusionDecomposition fuse(const IrrepLabel& a, const IrrepLabel& b, const FusionContext& ctx) {
    require_valid(a, ctx);
    require_valid(b, ctx);
    FusionDecomposition out;
    for (int j = std::abs(a.k - b.k); j <= a.k + b.k; j += 2) out[{j, a.l + b.l}] += 1;
    return out;
}

FusionDecomposition fuse(const FusionDecomposition& x, const FusionDecomposition& y, const FusionContext& ctx) {
    FusionDecomposition out;
    for (const auto& [a, ma] : x)
        for (const auto& [b, mb] : y)
            for (const auto& [c, mc] : fuse(a, b, ctx)) out[c] += ma * mb * mc;
    return out;
}

IrrepLabel conj_label(const IrrepLabel& a) { return {a.k, -a.l}; }

namespace {

struct DimMemo {
    std::shared_mutex mutex;
    std::map<int, std::vector<mpz_class>> table;
};

DimMemo& dim_memo() {
    static DimMemo memo;
    return memo;
}

}  // namespace

mpz_class dim(const IrrepLabel& a, const FusionContext& ctx) {
    require_valid(a, ctx);
    DimMemo& memo = dim_memo();
    const auto k = static_cast<std::size_t>(a.k);
    {
        std::shared_lock lock(memo.mutex);
        auto it = memo.table.find(ctx.n);
        if (it != memo.table.end() && it->second.size() > k) return it->second[k];
    }
    std::unique_lock lock(memo.mutex);
    auto& row = memo.table[ctx.n];
    if (row.empty()) {
        row.emplace_back(1);
        row.emplace_back(ctx.n);
    }
    while (row.size() <= k) row.push_back(ctx.n * row[row.size() - 1] - row[row.size() - 2]);
    return row[k];
}

mpz_class total_dim(const FusionDecomposition& x, const FusionContext& ctx) {
    mpz_class total = 0;
    for (const auto& [a, m] : x) total += m * dim(a, ctx);
    return total;
}

RingReport ring_checks(const FusionContext& ctx, int bound) {
    if (bound < 0) throw InvalidData("bound must be nonnegative");
    RingReport rep;
    rep.ctx = ctx;
    rep.bound = bound;
    std::vector<IrrepLabel> labels;
    for (int k = 0; k <= bound; ++k)
        for (int l = -bound; l <= bound; ++l)
            if (label_valid({k, l}, ctx)) labels.push_back({k, l});
    rep.labels = labels.size();

    auto fail = [&](const char* check, std::vector<IrrepLabel> w) { rep.violations.push_back({check, std::move(w)}); };
    const IrrepLabel unit{0, 0};

    std::map<std::pair<IrrepLabel, IrrepLabel>, FusionDecomposition> pair_cache;
    for (const auto& a : labels)
        for (const auto& b : labels) pair_cache.emplace(std::pair{a, b}, fuse(a, b, ctx));

    for (const auto& a : labels) {
        ++rep.cases;
        if (fuse(unit, a, ctx) != FusionDecomposition{{a, 1}} || fuse(a, unit, ctx) != FusionDecomposition{{a, 1}})
            fail("unit", {a});
        if (conj_label(conj_label(a)) != a || !label_valid(conj_label(a), ctx)) fail("conjugation involution", {a});
        for (const auto& b : labels) {
            ++rep.cases;
            const auto& ab = pair_cache.at({a, b});
            if (ab != pair_cache.at({b, a})) fail("commutativity", {a, b});
            if (fuse(conj_label(a), conj_label(b), ctx) != [&] {
                    FusionDecomposition c;
                    for (const auto& [x, m] : ab) c[conj_label(x)] += m;
                    return c;
                }())
                fail("conjugation", {a, b});
            if (dim(a, ctx) * dim(b, ctx) != total_dim(ab, ctx)) fail("dimension", {a, b});
            int prev = -1;
            for (const auto& [x, m] : ab) {
                if (m != 1 || x.l != a.l + b.l || (prev >= 0 && x.k != prev + 2)) fail("ladder", {a, b, x});
                if (!label_valid(x, ctx)) fail("parity closure", {a, b, x});
                prev = x.k;
            }
            for (const auto& c : labels) {
                ++rep.cases;
                FusionDecomposition left;
                for (const auto& [x, m] : ab)
                    for (const auto& [y, my] : fuse(x, c, ctx)) left[y] += m * my;
                FusionDecomposition right;
                for (const auto& [x, m] : pair_cache.at({b, c}))
                    for (const auto& [y, my] : fuse(a, x, ctx)) right[y] += m * my;
                if (left != right) fail("associativity", {a, b, c});
            }
        }
    }
    return rep;
}

double q_from_tau(long double tau, int sign) {
    if (tau < 2.0L - 1e-12L) throw Error("trace invariant below 2");
    const long double disc = tau * tau - 4.0L;
    const long double abs_q = 2.0L / (tau + std::sqrt(std::max(disc, 0.0L)));
    return static_cast<double>(sign < 0 ? -abs_q : abs_q);
}

QParameter q_parameter(const OmegaData& data) {
    ReductionTrace red = reduce_to_degree_zero(data);
    const ScalarMatrix f = f_matrix(red.final_data);
    const Scalar trace = (f.adjoint() * f).trace();
    const int sign_c = red.c.real_sign();
    if (sign_c == 0) throw Error("c vanishes after reduction");
    const Scalar abs_c = sign_c > 0 ? red.c : -red.c;
    const Scalar tau = trace / abs_c;
    const long double t = tau.to_complex().real();
    QParameter out{q_from_tau(t, -sign_c), tau, trace, red.c, std::move(red)};
    return out;
}

json to_json(const FusionDecomposition& x) {
    json summands = json::array();
    for (auto it = x.rbegin(); it != x.rend(); ++it)
        summands.push_back({{"k", it->first.k}, {"l", it->first.l}, {"mult", it->second}});
    return json{{"summands", summands}};
}

json to_json(const RingReport& rep) {
    json v = json::array();
    for (const auto& x : rep.violations) {
        json w = json::array();
        for (const auto& a : x.witness) w.push_back({a.k, a.l});
        v.push_back({{"check", x.check}, {"witness", w}});
    }
    return json{{"n", rep.ctx.n},
                {"parity", to_string(rep.ctx.parity)},
                {"bound", rep.bound},
                {"labels", rep.labels},
                {"cases", rep.cases},
                {"ok", rep.ok()},
                {"violations", v}};
}

json to_json(const QParameter& q) {
    return json{{"q", q.q},
                {"tau", q.tau.to_string()},
                {"tau_exact", to_json(q.tau)},
                {"trace", to_json(q.trace)},
                {"sign_source", q.sign_source.to_string()},
                {"reduction", to_json(q.reduction)}};
}

}  // namespace braidfoq
