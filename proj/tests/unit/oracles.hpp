#pragma once

// Reference computations kept independent of the library's algorithms.

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using cplx = std::complex<long double>;

inline cplx root(int n, long k) {
    const long double t = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(k) / n;
    return {std::cos(t), std::sin(t)};
}

/// Evaluates a power-basis coefficient vector at exp(2 pi i / n).
inline cplx evaluate(const std::vector<mpq_class>& coeffs, int n) {
    cplx acc = 0;
    for (std::size_t k = 0; k < coeffs.size(); ++k) acc += static_cast<long double>(coeffs[k].get_d()) * root(n, static_cast<long>(k));
    return acc;
}

inline bool close(cplx a, cplx b, long double tol = 1e-12L) { return std::abs(a - b) < tol; }

/// Chebyshev-type recursion by direct tensor-square counting: dim r_k for SU(2)-like rings.
inline std::vector<long long> ladder_dims(long long n, int kmax) {
    std::vector<long long> d{1, n};
    for (int k = 2; k <= kmax; ++k) d.push_back(n * d[k - 1] - d[k - 2]);
    return d;
}

}  // namespace oracle
