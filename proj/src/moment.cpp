// SPDX-License-Identifier: Apache-2.0
#include "trispec/moment.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "trispec/errors.hpp"

namespace trispec {

namespace {

double dot(const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
    return s;
}

double norm2(const std::vector<double>& x) {
    return std::sqrt(dot(x, x));
}

} // namespace

JacobiMatrix measure_to_jacobi(const DiscreteMeasure& m, Anchor anchor) {
    if (anchor == Anchor::Last)
        return reverse_jacobi(measure_to_jacobi(m, Anchor::First));

    const auto& x = m.nodes();
    const auto& w = m.weights();
    const std::size_t size = m.size();
    const double spread = x.back() - x.front();
    const double breakdown = 1e-12 * spread;

    std::vector<double> b(size), a(size > 0 ? size - 1 : 0);
    std::vector<std::vector<double>> basis;
    basis.reserve(size);

    std::vector<double> v(size);
    for (std::size_t i = 0; i < size; ++i) v[i] = std::sqrt(w[i]);
    double nv = norm2(v);
    for (double& t : v) t /= nv;
    basis.push_back(v);

    std::vector<double> u(size);
    for (std::size_t k = 0; k < size; ++k) {
        const auto& vk = basis[k];
        for (std::size_t i = 0; i < size; ++i) u[i] = x[i] * vk[i];
        b[k] = dot(vk, u);
        for (std::size_t i = 0; i < size; ++i) u[i] -= b[k] * vk[i];
        if (k > 0)
            for (std::size_t i = 0; i < size; ++i) u[i] -= a[k - 1] * basis[k - 1][i];

        if (k + 1 == size) break;

        // Full reorthogonalization, two classical Gram-Schmidt passes.
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& vj : basis) {
                double c = dot(vj, u);
                for (std::size_t i = 0; i < size; ++i) u[i] -= c * vj[i];
            }
        }

        a[k] = norm2(u);
        if (!(a[k] > breakdown))
            throw BreakdownError("measure_to_jacobi: recurrence norm " + std::to_string(a[k]) +
                                 " below breakdown threshold at step " + std::to_string(k + 1));
        std::vector<double> vnext(size);
        for (std::size_t i = 0; i < size; ++i) vnext[i] = u[i] / a[k];
        basis.push_back(std::move(vnext));
    }

    return JacobiMatrix(std::move(b), std::move(a));
}

JacobiMatrix reverse_jacobi(const JacobiMatrix& J) {
    std::vector<double> b(J.diag().rbegin(), J.diag().rend());
    std::vector<double> a(J.offdiag().rbegin(), J.offdiag().rend());
    return JacobiMatrix(std::move(b), std::move(a));
}

} // namespace trispec
