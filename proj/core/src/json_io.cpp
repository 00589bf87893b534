#include "braidfoq/json_io.hpp"

#include <cctype>

#include "braidfoq/error.hpp"

namespace braidfoq {

namespace {

const std::string kZetaUtf8 = "\xCE\xB6";

mpq_class parse_decimal(const std::string& s) {
    const auto dot = s.find('.');
    if (dot == std::string::npos) return rational_from_string(s);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    if (digits.empty() || digits == "-") throw ParseError("bad number: '" + s + "'");
    mpz_class den = 1;
    for (std::size_t k = dot + 1; k < s.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(s[k]))) throw ParseError("bad number: '" + s + "'");
        den *= 10;
    }
    mpq_class q(mpz_class(digits, 10), den);
    q.canonicalize();
    return q;
}

Scalar parse_coefficient(const std::string& s, const FieldSpec& field) {
    if (s.empty()) return Scalar::one(field);
    if (!field.is_exact() && (s.find('e') != std::string::npos || s.find('E') != std::string::npos)) {
        try {
            std::size_t used = 0;
            const double v = std::stod(s, &used);
            if (used == s.size()) return Scalar::from_complex(field, {v, 0.0});
        } catch (const std::logic_error&) {
        }
        throw ParseError("bad number: '" + s + "'");
    }
    return Scalar::from_rational(field, parse_decimal(s));
}

// Splits at top-level + and - (not inside exponents or number exponents).
std::vector<std::string> split_terms(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (std::size_t k = 0; k < s.size(); ++k) {
        const char ch = s[k];
        const bool sign = ch == '+' || ch == '-';
        const char prev = k ? s[k - 1] : '\0';
        const bool exponent_sign = prev == '^' || ((prev == 'e' || prev == 'E') && k >= 2 && std::isdigit(static_cast<unsigned char>(s[k - 2])));
        if (sign && !cur.empty() && !exponent_sign && prev != '*' && prev != '/') {
            out.push_back(cur);
            cur.clear();
        }
        cur += ch;
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

Scalar parse_term(std::string t, const FieldSpec& field) {
    bool negative = false;
    while (!t.empty() && (t[0] == '+' || t[0] == '-')) {
        negative ^= (t[0] == '-');
        t.erase(0, 1);
    }
    if (t.empty()) throw ParseError("empty term");

    std::size_t atom = std::string::npos;
    std::size_t prefix = 0;
    for (const std::string& p : {kZetaUtf8, std::string("zeta"), std::string("z")}) {
        auto pos = t.find(p);
        if (pos != std::string::npos && (atom == std::string::npos || pos < atom)) {
            atom = pos;
            prefix = p.size();
        }
    }
    Scalar value = Scalar::one(field);
    std::string coeff = t;
    if (atom != std::string::npos) {
        coeff = t.substr(0, atom);
        std::string rest = t.substr(atom + prefix);
        std::size_t k = 0;
        while (k < rest.size() && std::isdigit(static_cast<unsigned char>(rest[k]))) ++k;
        if (k == 0) throw ParseError("root of unity needs an order: '" + t + "'");
        const int order = std::stoi(rest.substr(0, k));
        long power = 1;
        if (k < rest.size()) {
            if (rest[k] != '^') throw ParseError("unexpected text after root of unity: '" + t + "'");
            try {
                std::size_t used = 0;
                power = std::stol(rest.substr(k + 1), &used);
                if (used != rest.size() - k - 1) throw ParseError("bad exponent");
            } catch (const std::logic_error&) {
                throw ParseError("bad exponent in '" + t + "'");
            }
        }
        value = Scalar::root_of_unity(field, order, power);
    } else if (!t.empty() && t.back() == 'i') {
        coeff = t.substr(0, t.size() - 1);
        value = Scalar::root_of_unity(field, 4, 1);
    }
    if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
    Scalar c = parse_coefficient(coeff, field) * value;
    return negative ? -c : c;
}

}  // namespace

Scalar parse_scalar(const std::string& text, const FieldSpec& field) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw ParseError("empty scalar");
    Scalar acc = Scalar::zero(field);
    try {
        for (const auto& t : split_terms(s)) acc += parse_term(t, field);
    } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()) + " (in scalar '" + text + "')");
    }
    return acc;
}

json to_json(const Scalar& s) {
    if (!s.is_exact()) {
        const auto z = s.approx_value();
        return json{{"kind", "float"}, {"re", z.real()}, {"im", z.imag()}};
    }
    json coeffs = json::array();
    for (const auto& c : s.coeffs()) coeffs.push_back({c.get_num().get_str(), c.get_den().get_str()});
    return json{{"kind", "cyclo"}, {"order", s.field().order()}, {"coeffs", coeffs}};
}

Scalar scalar_from_json(const json& j, const FieldSpec& field) {
    try {
        if (j.is_string()) return parse_scalar(j.get<std::string>(), field);
        if (j.is_number_integer()) return Scalar::from_int(field, j.get<long>());
        if (j.is_number()) {
            if (field.is_exact()) throw ParseError("floating literal in an exact field");
            return Scalar::from_complex(field, {j.get<double>(), 0.0});
        }
        if (!j.is_object()) throw ParseError("scalar must be an object, string or number");
        const std::string kind = j.at("kind").get<std::string>();
        if (kind == "float") {
            const Scalar s = Scalar::from_complex(FieldSpec::approx(), {j.at("re").get<double>(), j.at("im").get<double>()});
            if (field.is_exact()) throw FieldMismatch("float scalar in an exact field");
            return Scalar::from_complex(field, s.approx_value());
        }
        if (kind != "cyclo") throw ParseError("unknown scalar kind: " + kind);
        const int order = j.at("order").get<int>();
        const FieldSpec own = order == (field.is_exact() ? field.order() : -1) ? field : FieldSpec::exact(order);
        std::vector<mpq_class> coeffs;
        for (const auto& c : j.at("coeffs")) {
            if (!c.is_array() || c.size() != 2) throw ParseError("coefficient must be a [num, den] pair");
            mpz_class num(c[0].get<std::string>(), 10), den(c[1].get<std::string>(), 10);
            if (den == 0) throw ParseError("zero denominator");
            mpq_class q(num, den);
            q.canonicalize();
            coeffs.push_back(q);
        }
        return Scalar::from_coeffs(own, std::move(coeffs)).embed(field);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed scalar: ") + e.what());
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed integer in scalar: " + j.dump());
    }
}

json to_json(const ScalarMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
        rows.push_back(row);
    }
    return rows;
}

ScalarMatrix matrix_from_json(const json& j, const FieldSpec& field) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix must be a non-empty array of rows");
    std::vector<std::vector<Scalar>> rows;
    for (const auto& r : j) {
        if (!r.is_array()) throw ParseError("matrix row must be an array");
        std::vector<Scalar> row;
        for (const auto& v : r) row.push_back(scalar_from_json(v, field));
        rows.push_back(std::move(row));
    }
    return ScalarMatrix::from_rows(rows);
}

json to_json(const OmegaData& data) {
    return json{{"n", data.n()},
                {"degrees", data.space().degrees()},
                {"zeta", to_json(data.space().zeta())},
                {"d", data.d()},
                {"field", data.field().to_string()},
                {"omega", to_json(data.omega())}};
}

OmegaData omega_from_json(const json& j) {
    try {
        const FieldSpec field = FieldSpec::parse(j.at("field").get<std::string>());
        const auto degrees = j.at("degrees").get<std::vector<int>>();
        if (j.contains("n") && j.at("n").get<std::size_t>() != degrees.size())
            throw ParseError("n does not match the number of degrees");
        const Scalar zeta = scalar_from_json(j.at("zeta"), field);
        return {GradedSpace(degrees, zeta), matrix_from_json(j.at("omega"), field), j.at("d").get<int>()};
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed omega data: ") + e.what());
    }
}

json to_json(const ValidationReport& rep) {
    json residuals = json::array();
    for (const auto& br : rep.block_residuals)
        residuals.push_back({{"degree", br.degree}, {"zero", br.zero}, {"residual", to_json(br.residual)}});
    json out{{"holds", rep.holds},
             {"invertible", rep.invertible},
             {"phase_consistency", rep.phase_consistency},
             {"block_residuals", residuals},
             {"reason", rep.reason}};
    out["c"] = rep.c ? json(rep.c->to_string()) : json(nullptr);
    if (rep.c) out["c_exact"] = to_json(*rep.c);
    return out;
}

json to_json(const ReductionTrace& trace) {
    json steps = json::array();
    for (const auto& s : trace.steps) steps.push_back(to_string(s));
    return json{{"steps", steps},
                {"parity_constraint", to_string(trace.parity)},
                {"final", to_json(trace.final_data)},
                {"c", trace.c.to_string()}};
}

}  // namespace braidfoq
