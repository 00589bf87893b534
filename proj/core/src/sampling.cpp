#include "braidfoq/sampling.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "braidfoq/error.hpp"

namespace braidfoq {

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw InvalidData("empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return x % n;
}

int Rng::range(int lo, int hi) { return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }

namespace {

OmegaData two_by_two(const FieldSpec& f, const Scalar& zeta, std::vector<int> degrees, int d, const Scalar& w12,
                     const Scalar& w21) {
    ScalarMatrix omega(f, 2, 2);
    omega.set(0, 1, w12);
    omega.set(1, 0, w21);
    return OmegaData(GradedSpace(std::move(degrees), zeta), omega, d);
}

}  // namespace

OmegaData odd_instance() {
    const FieldSpec f = FieldSpec::exact(8);
    return two_by_two(f, Scalar::zeta(f, 6), {0, 1}, 1, Scalar::zeta(f, 7), Scalar::one(f));
}

OmegaData even_instance() {
    const FieldSpec f = FieldSpec::exact(8);
    return two_by_two(f, Scalar::zeta(f, 1), {0, 2}, 2, Scalar::zeta(f, 6), Scalar::one(f));
}

OmegaData identity_instance() {
    const FieldSpec f = FieldSpec::exact(1);
    return OmegaData(GradedSpace({0, 0}, Scalar::one(f)), ScalarMatrix::identity(f, 2), 0);
}

Scalar random_scalar(Rng& rng, const FieldSpec& f, int coeff) {
    Scalar s = Scalar::zero(f);
    const int terms = rng.range(1, 2);
    const long order = f.is_exact() ? f.order() : 12;
    for (int t = 0; t < terms; ++t) {
        const int c = rng.range(-coeff, coeff);
        if (c == 0) continue;
        const long k = static_cast<long>(rng.below(static_cast<std::uint64_t>(order)));
        s += Scalar::from_int(f, c) *
             (f.is_exact() ? Scalar::zeta(f, k) : Scalar::root_of_unity(f, static_cast<int>(order), k));
    }
    return s;
}

ScalarMatrix random_invertible(Rng& rng, const FieldSpec& f, std::size_t m, int coeff) {
    for (;;) {
        ScalarMatrix a(f, m, m);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) a.set(i, j, random_scalar(rng, f, coeff));
        if (a.rank() == m) return a;
    }
}

std::optional<std::vector<int>> random_degrees(Rng& rng, std::size_t n, int d) {
    const bool even = d % 2 == 0;
    std::vector<std::size_t> middle_choices;
    for (std::size_t m = 0; m <= n; ++m)
        if ((n - m) % 2 == 0 && (even || m == 0)) middle_choices.push_back(m);
    if (middle_choices.empty()) return std::nullopt;
    const std::size_t mid = rng.pick(middle_choices);
    std::size_t pairs = (n - mid) / 2;

    // Slots i < d/2, paired with d - i.
    const int top = even ? d / 2 - 1 : (d - 1) / 2;
    std::vector<int> slots;
    for (int i = top; i > top - 4; --i) slots.push_back(i);
    for (std::size_t k = slots.size(); k > 1; --k) std::swap(slots[k - 1], slots[rng.below(k)]);

    std::vector<int> degrees(mid, d / 2);
    std::size_t slot = 0;
    while (pairs > 0) {
        const std::size_t take = slot + 1 == slots.size() ? pairs : 1 + rng.below(pairs);
        for (std::size_t t = 0; t < take; ++t) {
            degrees.push_back(slots[slot]);
            degrees.push_back(d - slots[slot]);
        }
        pairs -= take;
        ++slot;
    }
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

OmegaData random_valid_instance(Rng& rng, const SampleOptions& opts) {
    for (;;) {
        const std::size_t n = static_cast<std::size_t>(rng.pick(opts.dims));
        const int d = rng.range(-opts.max_abs_d, opts.max_abs_d);
        auto degrees = random_degrees(rng, n, d);
        if (!degrees) continue;
        const int order = rng.range(1, opts.max_order);
        const FieldSpec f = FieldSpec::exact(order);
        const GradedSpace space(*degrees, Scalar::zeta(f, static_cast<long>(rng.below(static_cast<std::uint64_t>(order)))));

        std::map<int, ScalarMatrix> blocks;
        for (int a : space.distinct_degrees())
            if (2 * a <= d) blocks.emplace(a, random_invertible(rng, f, space.multiplicity(a), opts.coeff));

        const mpq_class scales[] = {1, 2, mpq_class(1, 2), 3};
        mpq_class s = scales[rng.below(4)];
        mpq_class lambda = d % 2 == 0 ? mpq_class(s * s) : s;
        const std::size_t mid = d % 2 == 0 ? space.multiplicity(d / 2) : 0;
        if (rng.coin() && mid % 2 == 0) lambda = -lambda;
        try {
            const Scalar c = default_c(space, d) * Scalar::from_rational(f, lambda);
            return solve_omega(space, d, blocks, c).data;
        } catch (const Infeasible&) {
            continue;
        }
    }
}

ScalarMatrix random_homogeneous(Rng& rng, const GradedSpace& space, int d, int coeff) {
    const std::size_t n = space.n();
    for (;;) {
        ScalarMatrix m(space.field(), n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (space.degree(i) + space.degree(j) == d) m.set(i, j, random_scalar(rng, space.field(), coeff));
        if (m.rank() == n) return m;
    }
}

std::size_t nonzero_count(const ScalarMatrix& m) {
    std::size_t count = 0;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero()) ++count;
    return count;
}

OmegaData mutate_entry(const OmegaData& data, std::size_t k) {
    ScalarMatrix omega = data.omega();
    std::size_t seen = 0;
    for (std::size_t i = 0; i < omega.rows(); ++i)
        for (std::size_t j = 0; j < omega.cols(); ++j) {
            if (omega(i, j).is_zero()) continue;
            if (seen++ == k) {
                omega.set(i, j, omega(i, j) * data.space().zeta());
                return OmegaData(data.space(), omega, data.d());
            }
        }
    throw InvalidData("omega has fewer than " + std::to_string(k + 1) + " nonzero entries");
}

}  // namespace braidfoq
