// SPDX-License-Identifier: Apache-2.0
#include "trispec/tridiag_eig.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>

#include "trispec/errors.hpp"

namespace trispec {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kSafMin = std::numeric_limits<double>::min();

// Pivot flush threshold; a^2 / pivmin <= 1/safmin stays finite.
double pivot_min(const JacobiMatrix& J) {
    double amax2 = 0.0;
    for (double v : J.offdiag()) amax2 = std::max(amax2, v * v);
    return kSafMin * std::max(1.0, amax2);
}

struct Bracket {
    double lo, hi;     // open interval guaranteed to contain all eigenvalues
    double radius;     // Gershgorin radius, the scale for tolerances
};

Bracket gershgorin_bracket(const JacobiMatrix& J) {
    const auto& b = J.diag();
    const auto& a = J.offdiag();
    const std::size_t n = J.size();
    double lo = b[0], hi = b[0];
    for (std::size_t i = 0; i < n; ++i) {
        double r = 0.0;
        if (i > 0) r += std::abs(a[i - 1]);
        if (i + 1 < n) r += std::abs(a[i]);
        lo = std::min(lo, b[i] - r);
        hi = std::max(hi, b[i] + r);
    }
    double radius = std::max(std::abs(lo), std::abs(hi));
    if (radius == 0.0) radius = 1.0;    // 1x1 zero matrix
    // Widen so the endpoints are strictly outside the spectrum.
    double pad = 2.0 * kEps * radius + kSafMin;
    return {lo - pad, hi + pad, radius};
}

// Gaussian elimination with partial pivoting on (J - shift), then solve.
// Pivoting introduces a second superdiagonal. Back substitution rescales
// on the fly so growth from a near-singular shift cannot overflow; the
// returned vector is the solution up to an irrelevant positive factor.
void solve_shifted(const JacobiMatrix& J, double shift, std::vector<double>& x,
                   double pivmin) {
    const auto& b = J.diag();
    const auto& a = J.offdiag();
    const std::size_t n = J.size();
    std::vector<double> u0(n), u1(n, 0.0), u2(n, 0.0), mult(n, 0.0);
    std::vector<bool> swapped(n, false);

    u0[0] = b[0] - shift;
    if (n > 1) u1[0] = a[0];
    for (std::size_t i = 0; i + 1 < n; ++i) {
        double sub = a[i];                       // entry below the pivot
        double d_next = b[i + 1] - shift;
        double e_next = (i + 2 < n) ? a[i + 1] : 0.0;
        if (std::abs(u0[i]) >= std::abs(sub)) {
            double piv = u0[i];
            if (std::abs(piv) < pivmin) piv = (piv < 0.0) ? -pivmin : pivmin;
            double m = sub / piv;
            mult[i] = m;
            u0[i] = piv;
            u0[i + 1] = d_next - m * u1[i];
            u1[i + 1] = e_next - m * u2[i];
        } else {
            // Swap rows i and i+1.
            swapped[i] = true;
            double m = u0[i] / sub;
            mult[i] = m;
            u0[i] = sub;
            double t1 = u1[i], t2 = u2[i];
            u1[i] = d_next;
            u2[i] = e_next;
            u0[i + 1] = t1 - m * d_next;
            u1[i + 1] = t2 - m * e_next;
        }
    }
    if (std::abs(u0[n - 1]) < pivmin)
        u0[n - 1] = (u0[n - 1] < 0.0) ? -pivmin : pivmin;

    // Forward substitution of the permuted lower factor.
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (swapped[i]) std::swap(x[i], x[i + 1]);
        x[i + 1] -= mult[i] * x[i];
    }
    // Back substitution with overflow guard.
    const double big = 1e270;
    for (std::size_t k = n; k-- > 0;) {
        double t = x[k];
        if (k + 1 < n) t -= u1[k] * x[k + 1];
        if (k + 2 < n) t -= u2[k] * x[k + 2];
        double xi = t / u0[k];
        if (std::abs(xi) > big) {
            const double scale = 1.0 / std::abs(xi);
            for (std::size_t j = k + 1; j < n; ++j) x[j] *= scale;
            for (std::size_t j = 0; j < k; ++j) x[j] *= scale;
            xi = (xi < 0.0) ? -1.0 : 1.0;
        }
        x[k] = xi;
    }
}

// Overflow-safe Euclidean norm.
double safe_norm(const std::vector<double>& x) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    if (m == 0.0 || !std::isfinite(m)) return m;
    double s = 0.0;
    for (double v : x) {
        double t = v / m;
        s += t * t;
    }
    return m * std::sqrt(s);
}

// Deterministic start vectors for inverse iteration (SplitMix64 bits).
double unit_uniform(std::uint64_t& state) {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    z = z ^ (z >> 31);
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

} // namespace

int sturm_count(const JacobiMatrix& J, double x) {
    const auto& b = J.diag();
    const auto& a = J.offdiag();
    const std::size_t n = J.size();
    const double pivmin = pivot_min(J);
    int count = 0;
    double d = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        d = (b[i] - x) - (i > 0 ? a[i - 1] * a[i - 1] / d : 0.0);
        if (d == 0.0)
            d = pivmin;
        else if (std::abs(d) < pivmin)
            d = (d < 0.0) ? -pivmin : pivmin;
        if (d < 0.0) ++count;
    }
    return count;
}

std::vector<double> eigenvalues(const JacobiMatrix& J, double tol) {
    if (!(tol > 0.0))
        throw std::invalid_argument("eigenvalues: tol must be positive");
    const std::size_t n = J.size();
    const Bracket g = gershgorin_bracket(J);

    // Bisect all the way to machine resolution regardless of tol (which
    // then only caps the guarantee). Eigenvalue differences feed residue
    // products downstream whose accuracy floor is exactly the accuracy
    // achieved here; stopping early at, say, 1e-13 * radius is what turns
    // nearly-coincident submatrix eigenvalues into garbage residues.
    // The absolute floor keeps eigenvalues near zero from being bisected
    // down to denormal widths the Sturm count cannot meaningfully resolve.
    const double floor_width = 1e-3 * kEps * g.radius;
    std::vector<double> lam(n);
    double seed_lo = g.lo;
    for (std::size_t k = 0; k < n; ++k) {
        double lo = seed_lo, hi = g.hi;
        // Invariant: count(lo) <= k < count(hi); shrink onto the k-th
        // eigenvalue (0-based), i.e. the infimum of {x : count(x) >= k+1}.
        while (hi - lo > 2.0 * kEps * std::max(std::abs(lo), std::abs(hi)) + floor_width) {
            double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;   // interval is a few ulps wide
            if (sturm_count(J, mid) >= static_cast<int>(k) + 1)
                hi = mid;
            else
                lo = mid;
        }
        lam[k] = 0.5 * (lo + hi);
        seed_lo = lo;                            // next eigenvalue is >= this
        if (k > 0 && lam[k] < lam[k - 1]) lam[k] = lam[k - 1];
    }
    return lam;
}

DiscreteMeasure spectral_measure(const JacobiMatrix& J, Anchor anchor, double tol) {
    const std::size_t n = J.size();
    const Bracket g = gershgorin_bracket(J);
    const double abstol = tol * g.radius;
    const double pivmin = pivot_min(J);

    std::vector<double> lam = eigenvalues(J, tol);
    for (std::size_t i = 1; i < n; ++i) {
        if (lam[i] - lam[i - 1] <= abstol)
            throw DegenerateError("spectral_measure: nodes " + std::to_string(i - 1) + " and " +
                                  std::to_string(i) + " coincide within tolerance");
    }

    // Vectors whose eigenvalues are this close get one reorthogonalization
    // pass; beyond that separation, cross-contamination is harmless.
    const double cluster_tol = std::max(10.0 * abstol, 1e-7 * g.radius);
    const std::size_t anchor_idx = (anchor == Anchor::First) ? 0 : n - 1;

    std::vector<std::vector<double>> vecs;
    vecs.reserve(n);
    std::vector<double> weights(n);

    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t rng =
            (0x5deece66dULL * (i + 1) + 0xb) ^ (static_cast<std::uint64_t>(n) << 32);
        std::vector<double> x(n);
        for (double& v : x) v = unit_uniform(rng) - 0.5;
        double nrm = safe_norm(x);
        for (double& v : x) v /= nrm;

        for (int iter = 0; iter < 3; ++iter) {
            solve_shifted(J, lam[i], x, pivmin);
            nrm = safe_norm(x);
            if (!(nrm > 0.0) || !std::isfinite(nrm)) {
                // Restart from a fresh deterministic vector.
                for (double& v : x) v = unit_uniform(rng) - 0.5;
                nrm = safe_norm(x);
            }
            for (double& v : x) v /= nrm;
        }

        // One pass against earlier vectors of the same cluster.
        for (std::size_t j = 0; j < i; ++j) {
            if (lam[i] - lam[j] > cluster_tol) continue;
            double dot = 0.0;
            for (std::size_t k = 0; k < n; ++k) dot += vecs[j][k] * x[k];
            for (std::size_t k = 0; k < n; ++k) x[k] -= dot * vecs[j][k];
        }
        nrm = safe_norm(x);
        if (!(nrm > 0.0) || !std::isfinite(nrm))
            throw DegenerateError("spectral_measure: inverse iteration collapsed at node " +
                                  std::to_string(i));
        for (double& v : x) v /= nrm;

        double w = x[anchor_idx] * x[anchor_idx];
        if (w < 1e-300)
            throw DegenerateError("spectral_measure: anchor weight underflow at node " +
                                  std::to_string(i));
        weights[i] = w;
        vecs.push_back(std::move(x));
    }

    return DiscreteMeasure(std::move(lam), std::move(weights));
}

} // namespace trispec
