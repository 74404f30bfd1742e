#include "tridiag.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <limits>

namespace relalt::detail {
namespace {

constexpr long double kEps = std::numeric_limits<long double>::epsilon();

// Count of eigenvalues strictly below x, via the Sturm pivot recurrence on
// the LDL^T of (T - xI). The pivmin guard keeps the recurrence from
// dividing by a denormal, same idea as LAPACK's dstebz.
int count_below(const std::vector<long double>& d, const std::vector<long double>& e2,
                long double x, long double pivmin) {
    long double q = d[0] - x;
    if (std::fabs(q) < pivmin) q = -pivmin;
    int count = q < 0 ? 1 : 0;
    for (std::size_t i = 1; i < d.size(); ++i) {
        q = d[i] - x - e2[i - 1] / q;
        if (std::fabs(q) < pivmin) q = -pivmin;
        if (q < 0) ++count;
    }
    return count;
}

// Bisect for the eigenvalue with ascending index `idx` (0-based) inside
// [lo, hi], which must bracket the whole spectrum.
long double bisect_eigenvalue(const std::vector<long double>& d,
                              const std::vector<long double>& e2, int idx,
                              long double lo, long double hi, long double pivmin) {
    for (int it = 0; it < 400; ++it) {
        const long double mid = 0.5L * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // interval exhausted
        if (count_below(d, e2, mid, pivmin) > idx)
            hi = mid;
        else
            lo = mid;
        const long double width = hi - lo;
        if (width <= 2.0L * kEps * std::max(std::fabs(lo), std::fabs(hi)) + 2.0L * pivmin)
            break;
    }
    return 0.5L * (lo + hi);
}

// LU factorization of (T - sigma I) with partial pivoting, gttrf-style.
// Bands: dl holds the multipliers, dd the diagonal of U, du/du2 the two
// superdiagonals, swapped[i] records a row interchange at step i.
struct TridiagLU {
    std::vector<long double> dl, dd, du, du2;
    std::vector<char> swapped;
};

TridiagLU factor_shifted(const std::vector<long double>& d,
                         const std::vector<long double>& e, long double sigma,
                         long double pivmin) {
    const std::size_t n = d.size();
    TridiagLU lu;
    lu.dd.resize(n);
    lu.dl.assign(n > 1 ? n - 1 : 0, 0.0L);
    lu.du.assign(n > 1 ? n - 1 : 0, 0.0L);
    lu.du2.assign(n > 2 ? n - 2 : 0, 0.0L);
    lu.swapped.assign(n > 1 ? n - 1 : 0, 0);
    for (std::size_t i = 0; i < n; ++i) lu.dd[i] = d[i] - sigma;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        lu.dl[i] = e[i];
        lu.du[i] = e[i];
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::fabs(lu.dd[i]) >= std::fabs(lu.dl[i])) {
            if (std::fabs(lu.dd[i]) < pivmin)
                lu.dd[i] = lu.dd[i] < 0 ? -pivmin : pivmin;
            const long double fact = lu.dl[i] / lu.dd[i];
            lu.dl[i] = fact;
            lu.dd[i + 1] -= fact * lu.du[i];
        } else {
            const long double fact = lu.dd[i] / lu.dl[i];
            lu.dd[i] = lu.dl[i];
            lu.dl[i] = fact;
            const long double tmp = lu.du[i];
            lu.du[i] = lu.dd[i + 1];
            lu.dd[i + 1] = tmp - fact * lu.dd[i + 1];
            if (i + 2 < n) {
                lu.du2[i] = lu.du[i + 1];
                lu.du[i + 1] = -fact * lu.du[i + 1];
            }
            lu.swapped[i] = 1;
        }
    }
    if (std::fabs(lu.dd[n - 1]) < pivmin)
        lu.dd[n - 1] = lu.dd[n - 1] < 0 ? -pivmin : pivmin;
    return lu;
}

void solve_in_place(const TridiagLU& lu, std::vector<long double>& b) {
    const std::size_t n = lu.dd.size();
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (lu.swapped[i]) std::swap(b[i], b[i + 1]);
        b[i + 1] -= lu.dl[i] * b[i];
    }
    b[n - 1] /= lu.dd[n - 1];
    if (n > 1) b[n - 2] = (b[n - 2] - lu.du[n - 2] * b[n - 1]) / lu.dd[n - 2];
    for (std::size_t k = n; k-- > 2;) {
        const std::size_t i = k - 2;
        b[i] = (b[i] - lu.du[i] * b[i + 1] - lu.du2[i] * b[i + 2]) / lu.dd[i];
    }
}

long double norm2(const std::vector<long double>& v) {
    long double s = 0.0L;
    for (long double x : v) s += x * x;
    return std::sqrt(s);
}

// y = T x for the banded matrix.
void apply_tridiag(const std::vector<long double>& d, const std::vector<long double>& e,
                   const std::vector<long double>& x, std::vector<long double>& y) {
    const std::size_t n = d.size();
    for (std::size_t i = 0; i < n; ++i) {
        long double s = d[i] * x[i];
        if (i > 0) s += e[i - 1] * x[i - 1];
        if (i + 1 < n) s += e[i] * x[i + 1];
        y[i] = s;
    }
}

// Deterministic start vector in [-0.5, 0.5): splitmix-style generator keyed
// off the mode index, so repeated runs give identical output.
void fill_start_vector(std::vector<long double>& v, std::uint64_t key) {
    std::uint64_t state = key * 0x9E3779B97F4A7C15ull + 0x2545F4914F6CDD1Dull;
    for (auto& x : v) {
        state += 0x9E3779B97F4A7C15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        z ^= z >> 31;
        x = static_cast<long double>(z >> 11) /
                static_cast<long double>(1ull << 53) -
            0.5L;
    }
}

}  // namespace

TridiagEigen largest_eigenpairs(const std::vector<long double>& d,
                                const std::vector<long double>& e,
                                std::size_t count) {
    const std::size_t n = d.size();
    assert(e.size() + 1 == n);
    assert(count >= 1 && count <= n);

    std::vector<long double> e2(e.size());
    long double max_e2 = 1.0L;
    for (std::size_t i = 0; i < e.size(); ++i) {
        e2[i] = e[i] * e[i];
        max_e2 = std::max(max_e2, e2[i]);
    }
    const long double pivmin = std::numeric_limits<long double>::min() * max_e2;

    // Gershgorin bounds, widened a touch so the bracket is strict.
    long double lo = d[0], hi = d[0];
    for (std::size_t i = 0; i < n; ++i) {
        long double r = 0.0L;
        if (i > 0) r += std::fabs(e[i - 1]);
        if (i + 1 < n) r += std::fabs(e[i]);
        lo = std::min(lo, d[i] - r);
        hi = std::max(hi, d[i] + r);
    }
    const long double span = std::max(hi - lo, 1.0L);
    lo -= kEps * span + 2.0L * pivmin;
    hi += kEps * span + 2.0L * pivmin;
    const long double anorm = std::max(std::fabs(lo), std::fabs(hi));

    TridiagEigen out;
    out.values.reserve(count);
    out.vectors.reserve(count);

    // Vectors whose eigenvalues sit closer than this are treated as one
    // cluster and kept mutually orthogonal (same 1e-3 * ||T|| rule of thumb
    // as LAPACK's dstein).
    const long double cluster_tol = 1.0e-3L * anorm;
    const long double shift_sep = 10.0L * kEps * anorm + 10.0L * pivmin;

    std::vector<long double> v(n), y(n), ty(n);
    long double last_sigma = 0.0L;

    for (std::size_t j = 0; j < count; ++j) {
        const int idx = static_cast<int>(n - 1 - j);  // ascending index
        long double sigma = bisect_eigenvalue(d, e2, idx, lo, hi, pivmin);
        // Coincident shifts make the factored solve useless for picking a
        // second direction; nudge each duplicate below the previous one.
        if (j > 0 && sigma > last_sigma - shift_sep) sigma = last_sigma - shift_sep;
        last_sigma = sigma;

        const TridiagLU lu = factor_shifted(d, e, sigma, pivmin);

        fill_start_vector(v, j + 1);
        long double nv = norm2(v);
        for (auto& x : v) x /= nv;

        long double best_resid = std::numeric_limits<long double>::infinity();
        std::vector<long double> best = v;
        int sweeps = 0;
        for (int it = 0; it < 12; ++it) {
            ++sweeps;
            y = v;
            solve_in_place(lu, y);
            // Orthogonalize inside the cluster (twice: classic MGS refresh).
            for (int pass = 0; pass < 2; ++pass) {
                for (std::size_t p = 0; p < j; ++p) {
                    if (std::fabs(out.values[p] - sigma) > cluster_tol) continue;
                    long double dot = 0.0L;
                    for (std::size_t i = 0; i < n; ++i) dot += y[i] * out.vectors[p][i];
                    for (std::size_t i = 0; i < n; ++i) y[i] -= dot * out.vectors[p][i];
                }
            }
            const long double ny = norm2(y);
            if (!(ny > 0.0L) || !std::isfinite(ny)) {
                fill_start_vector(v, (j + 1) * 7919 + it);
                const long double nr = norm2(v);
                for (auto& x : v) x /= nr;
                continue;
            }
            for (std::size_t i = 0; i < n; ++i) v[i] = y[i] / ny;

            apply_tridiag(d, e, v, ty);
            long double rq = 0.0L;
            for (std::size_t i = 0; i < n; ++i) rq += v[i] * ty[i];
            long double rr = 0.0L;
            for (std::size_t i = 0; i < n; ++i) {
                const long double ri = ty[i] - rq * v[i];
                rr += ri * ri;
            }
            rr = std::sqrt(rr);
            if (rr < best_resid) {
                best_resid = rr;
                best = v;
            }
            if (rr <= 32.0L * kEps * anorm && it >= 1) break;
        }

        // Final eigenvalue from the Rayleigh quotient of the settled vector.
        apply_tridiag(d, e, best, ty);
        long double rq = 0.0L, vv = 0.0L;
        for (std::size_t i = 0; i < n; ++i) {
            rq += best[i] * ty[i];
            vv += best[i] * best[i];
        }
        rq /= vv;

        out.values.push_back(rq);
        out.vectors.push_back(std::move(best));
        out.iterations += sweeps;
        out.max_residual = std::max(out.max_residual, best_resid);
    }
    return out;
}

}  // namespace relalt::detail
