#include "braidfoq/transform.hpp"

#include <cmath>
#include <numbers>

#include "braidfoq/error.hpp"

namespace braidfoq {

OmegaData degree_shift(const OmegaData& data, int s) {
    const auto& sp = data.space();
    std::vector<int> degrees = sp.degrees();
    for (int& d : degrees) d -= s;
    ScalarMatrix omega = data.omega();
    for (std::size_t i = 0; i < data.n(); ++i)
        for (std::size_t j = 0; j < data.n(); ++j)
            if (!omega(i, j).is_zero())
                omega(i, j) *= sp.zeta_pow(-static_cast<long>(s) * sp.degree(j) + static_cast<long>(s) * (s - 1) / 2);
    return {GradedSpace(std::move(degrees), sp.zeta()), std::move(omega), data.d() - 2 * s};
}

CoverResult double_cover(const OmegaData& data) {
    const auto& sp = data.space();
    std::vector<int> degrees = sp.degrees();
    for (int& d : degrees) d *= 2;
    const Scalar& zeta = sp.zeta();

    if (!zeta.is_exact()) {
        const auto z = zeta.approx_value();
        double theta = std::arg(z);
        if (theta < 0) theta += 2.0 * std::numbers::pi;
        const Scalar root = Scalar::from_complex(zeta.field(), std::polar(1.0, theta / 4.0));
        return {OmegaData(GradedSpace(std::move(degrees), root), data.omega(), 2 * data.d()),
                "approx mode: principal fourth root of zeta taken numerically"};
    }

    const int n = zeta.field().order();
    const auto k = zeta.root_exponent_2n();
    if (!k) throw InvalidData("double cover needs zeta to be a root of unity");
    FieldSpec target = FieldSpec::exact(*k % 2 == 0 ? 4 * n : 8 * n);
    const Scalar root = *k % 2 == 0 ? Scalar::zeta(target, *k / 2) : Scalar::zeta(target, *k);
    return {OmegaData(GradedSpace(std::move(degrees), root), data.omega().embed(target), 2 * data.d()), std::nullopt};
}

ReductionTrace reduce_to_degree_zero(const OmegaData& data) {
    const auto rep = validate(data);
    if (!rep.holds) throw InvalidData("reduction needs valid data: " + rep.reason);

    std::vector<ReductionStep> steps;
    ParityConstraint parity = ParityConstraint::None;
    OmegaData cur = data;
    if (data.d() % 2 != 0) {
        parity = ParityConstraint::KMinusLEven;
        cur = double_cover(cur).data;
        steps.push_back({ReductionStep::Kind::Cover, 0});
    }
    if (cur.d() != 0) {
        const int s = cur.d() / 2;
        cur = degree_shift(cur, s);
        steps.push_back({ReductionStep::Kind::Shift, s});
    }

    const auto fin = validate(cur);
    if (!fin.holds) throw Error("reduction produced invalid data: " + fin.reason);
    if (!fin.c->is_real()) throw Error("reduced c is not real: " + fin.c->to_string());
    return {std::move(steps), parity, std::move(cur), *fin.c};
}

std::string to_string(const ReductionStep& step) {
    if (step.kind == ReductionStep::Kind::Cover) return "cover";
    return "shift(" + std::to_string(step.s) + ")";
}

std::string to_string(ParityConstraint p) { return p == ParityConstraint::None ? "none" : "k_minus_l_even"; }

}  // namespace braidfoq
