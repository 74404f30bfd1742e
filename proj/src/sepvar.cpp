#include "relalt/sepvar.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>

#include "relalt/errors.hpp"
#include "relalt/numeric.hpp"
#include "tridiag.hpp"

namespace relalt {

namespace {

using LDVector = std::vector<long double>;

// Residual bound per the eigenpair contract: ||D h - lambda h|| <= tol |lambda|.
constexpr double kEigenResidualTol = 1e-10;

LDVector apply_ld(const SeparatingOperator& op, const LDVector& x) {
    const std::size_t n = x.size();
    LDVector y(n);
    if (op.tridiagonal()) {
        const auto& d = op.diagonal();
        const auto& e = op.off_diagonal();
        for (std::size_t i = 0; i < n; ++i) {
            long double s = static_cast<long double>(d[i]) * x[i];
            if (i > 0) s += static_cast<long double>(e[i - 1]) * x[i - 1];
            if (i + 1 < n) s += static_cast<long double>(e[i]) * x[i + 1];
            y[i] = s;
        }
    } else {
        const auto& a = op.dense();
        for (std::size_t i = 0; i < n; ++i) {
            long double s = 0.0L;
            for (std::size_t j = 0; j < n; ++j)
                s += static_cast<long double>(a[i * n + j]) * x[j];
            y[i] = s;
        }
    }
    return y;
}

LDVector promote(std::span<const double> x) {
    return LDVector(x.begin(), x.end());
}

long double norm2_ld(const LDVector& v) {
    long double s = 0.0L;
    for (long double x : v) s += x * x;
    return std::sqrt(s);
}

void check_mode_size(const SeparatingOperator& op, const SeparatedSolution& sol) {
    if (static_cast<int>(sol.mode.size()) != op.size())
        throw InvalidInput("mode length does not match operator size");
}

}  // namespace

const char* to_string(OperatorKind k) {
    switch (k) {
        case OperatorKind::laplacian: return "laplacian";
        case OperatorKind::schrodinger_with_potential: return "schrodinger";
        case OperatorKind::custom_matrix: return "custom";
    }
    return "?";
}

Grid1D::Grid1D(double length, int points) : length(length), points(points) {
    if (!(length > 0.0) || !std::isfinite(length))
        throw InvalidInput("grid length must be positive and finite", "invalid-grid");
    if (points < 3)
        throw InvalidInput("grid needs at least 3 interior points", "invalid-grid");
}

SeparatingOperator SeparatingOperator::laplacian(const Grid1D& grid, double k_const) {
    if (k_const == 0.0 || !std::isfinite(k_const))
        throw InvalidInput("k_const must be nonzero and finite", "invalid-k");
    SeparatingOperator op;
    op.kind_ = OperatorKind::laplacian;
    op.k_ = k_const;
    op.n_ = grid.points;
    op.grid_ = grid;
    const double h = grid.spacing();
    op.diag_.assign(grid.points, -2.0 / (h * h));
    op.off_.assign(grid.points - 1, 1.0 / (h * h));
    return op;
}

SeparatingOperator SeparatingOperator::schrodinger(const Grid1D& grid,
                                                   std::vector<double> potential_nodes,
                                                   double k_const) {
    if (static_cast<int>(potential_nodes.size()) != grid.points)
        throw InvalidInput("potential table must cover every interior node",
                           "missing-potential");
    for (double p : potential_nodes)
        if (!std::isfinite(p))
            throw InvalidInput("potential values must be finite", "missing-potential");
    SeparatingOperator op = laplacian(grid, k_const);
    op.kind_ = OperatorKind::schrodinger_with_potential;
    for (int i = 0; i < grid.points; ++i) op.diag_[i] -= potential_nodes[i];
    return op;
}

SeparatingOperator SeparatingOperator::schrodinger(
    const Grid1D& grid, const std::function<double(double)>& potential, double k_const) {
    if (!potential)
        throw InvalidInput("potential function required", "missing-potential");
    std::vector<double> nodes(grid.points);
    for (int i = 0; i < grid.points; ++i) nodes[i] = potential(grid.node(i));
    return schrodinger(grid, std::move(nodes), k_const);
}

SeparatingOperator SeparatingOperator::custom(std::vector<double> dense, int n,
                                              double k_const) {
    if (k_const == 0.0 || !std::isfinite(k_const))
        throw InvalidInput("k_const must be nonzero and finite", "invalid-k");
    if (n < 1 || dense.size() != static_cast<std::size_t>(n) * n)
        throw InvalidInput("custom matrix must be square n x n", "invalid-matrix");
    for (double a : dense)
        if (!std::isfinite(a))
            throw InvalidInput("matrix entries must be finite", "invalid-matrix");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dense[static_cast<std::size_t>(i) * n + j] !=
                dense[static_cast<std::size_t>(j) * n + i])
                throw InvalidInput("custom matrix must be exactly symmetric",
                                   "asymmetric-matrix");
    SeparatingOperator op;
    op.kind_ = OperatorKind::custom_matrix;
    op.k_ = k_const;
    op.n_ = n;
    op.dense_ = std::move(dense);
    return op;
}

double SeparatingOperator::entry(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_)
        throw InvalidInput("matrix index out of range");
    if (kind_ == OperatorKind::custom_matrix)
        return dense_[static_cast<std::size_t>(i) * n_ + j];
    if (i == j) return diag_[i];
    if (i - j == 1 || j - i == 1) return off_[std::min(i, j)];
    return 0.0;
}

std::vector<double> SeparatingOperator::apply(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != n_)
        throw InvalidInput("vector length does not match operator size");
    const LDVector y = apply_ld(*this, promote(x));
    std::vector<double> out(y.size());
    for (std::size_t i = 0; i < y.size(); ++i) out[i] = static_cast<double>(y[i]);
    return out;
}

const std::vector<double>& SeparatingOperator::diagonal() const {
    if (kind_ == OperatorKind::custom_matrix)
        throw InvalidInput("custom matrices expose dense storage only");
    return diag_;
}

const std::vector<double>& SeparatingOperator::off_diagonal() const {
    if (kind_ == OperatorKind::custom_matrix)
        throw InvalidInput("custom matrices expose dense storage only");
    return off_;
}

const std::vector<double>& SeparatingOperator::dense() const {
    if (kind_ != OperatorKind::custom_matrix)
        throw InvalidInput("stencil kinds expose band storage only");
    return dense_;
}

SeparatingOperator discretize(OperatorKind kind, const Grid1D& grid,
                              const std::optional<std::vector<double>>& potential,
                              double k_const) {
    switch (kind) {
        case OperatorKind::laplacian:
            return SeparatingOperator::laplacian(grid, k_const);
        case OperatorKind::schrodinger_with_potential:
            if (!potential)
                throw InvalidInput("schrodinger kind needs a potential",
                                   "missing-potential");
            return SeparatingOperator::schrodinger(grid, *potential, k_const);
        case OperatorKind::custom_matrix:
            break;
    }
    throw InvalidInput("custom matrices are built from explicit entries, not a grid");
}

std::vector<SeparatedSolution> eigenmodes(const SeparatingOperator& op, int count) {
    const int n = op.size();
    if (count < 1 || count > n)
        throw InvalidInput("mode count must lie in [1, operator size]");

    std::vector<LDVector> vectors;
    int iterations = 0;
    if (op.tridiagonal()) {
        LDVector d(op.diagonal().begin(), op.diagonal().end());
        LDVector e(op.off_diagonal().begin(), op.off_diagonal().end());
        auto eig = detail::largest_eigenpairs(d, e, static_cast<std::size_t>(count));
        vectors = std::move(eig.vectors);
        iterations = eig.iterations;
    } else {
        using LDMatrix = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
        LDMatrix a(n, n);
        const auto& dense = op.dense();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                a(i, j) = static_cast<long double>(dense[static_cast<std::size_t>(i) * n + j]);
        Eigen::SelfAdjointEigenSolver<LDMatrix> solver(a);
        if (solver.info() != Eigen::Success)
            throw ConvergenceError("dense eigensolver did not converge", 0, 0,
                                   std::numeric_limits<double>::infinity(), 0.0);
        // Eigen sorts ascending; take the top `count` in descending order.
        for (int j = 0; j < count; ++j) {
            LDVector v(n);
            for (int i = 0; i < n; ++i) v[i] = solver.eigenvectors()(i, n - 1 - j);
            vectors.push_back(std::move(v));
        }
        iterations = 1;
    }

    std::vector<SeparatedSolution> out;
    out.reserve(count);
    for (int j = 0; j < count; ++j) {
        LDVector& w = vectors[j];
        const long double nw = norm2_ld(w);
        if (!(nw > 0.0L))
            throw ConvergenceError("eigenvector collapsed to zero", j, iterations, 0.0,
                                   0.0);
        for (auto& x : w) x /= nw;

        // Round to double, fix the sign convention, then renormalize so the
        // stored mode is unit length as a double vector.
        std::vector<double> mode(w.size());
        for (std::size_t i = 0; i < w.size(); ++i) mode[i] = static_cast<double>(w[i]);
        for (double x : mode) {
            if (x == 0.0) continue;
            if (x < 0.0)
                for (auto& y : mode) y = -y;
            break;
        }
        long double s = 0.0L;
        for (double x : mode) s += static_cast<long double>(x) * x;
        s = std::sqrt(s);
        for (auto& x : mode) x = static_cast<double>(x / s);

        // Definitive eigenvalue: Rayleigh quotient of the rounded mode.
        LDVector md = promote(mode);
        LDVector dm = apply_ld(op, md);
        long double num = 0.0L, den = 0.0L;
        for (std::size_t i = 0; i < md.size(); ++i) {
            num += md[i] * dm[i];
            den += md[i] * md[i];
        }
        const double lambda = static_cast<double>(num / den);

        long double rr = 0.0L;
        for (std::size_t i = 0; i < md.size(); ++i) {
            const long double ri = dm[i] - static_cast<long double>(lambda) * md[i];
            rr += ri * ri;
        }
        const double residual = static_cast<double>(std::sqrt(rr));
        const double bound = kEigenResidualTol * std::fabs(lambda);
        if (residual > bound)
            throw ConvergenceError(
                "mode " + std::to_string(j) + " residual " + format_double(residual) +
                    " exceeds " + format_double(bound) + " after " +
                    std::to_string(iterations) + " iterations",
                j, iterations, residual, bound);

        out.push_back(SeparatedSolution{lambda, op.k_const(), std::move(mode), Frame::s});
    }
    return out;
}

double separation_constant(const SeparatingOperator& op, const SeparatedSolution& sol) {
    check_mode_size(op, sol);
    bool all_zero = true;
    for (double x : sol.mode)
        if (x != 0.0) { all_zero = false; break; }
    if (all_zero) throw InvalidInput("mode vector is zero", "zero-mode");

    const LDVector h = promote(sol.mode);
    const LDVector dh = apply_ld(op, h);
    long double num = 0.0L, den = 0.0L;
    for (std::size_t i = 0; i < h.size(); ++i) {
        num += h[i] * dh[i];
        den += h[i] * h[i];
    }
    return static_cast<double>(num / den);
}

double eigen_residual(const SeparatingOperator& op, const SeparatedSolution& sol) {
    check_mode_size(op, sol);
    const LDVector h = promote(sol.mode);
    const LDVector dh = apply_ld(op, h);
    long double rr = 0.0L;
    for (std::size_t i = 0; i < h.size(); ++i) {
        const long double ri = dh[i] - static_cast<long double>(sol.sep_constant) * h[i];
        rr += ri * ri;
    }
    return static_cast<double>(std::sqrt(rr));
}

double temporal_factor(double sep_constant, double k_const, double t) {
    if (k_const == 0.0 || !std::isfinite(k_const))
        throw InvalidInput("k_const must be nonzero and finite", "invalid-k");
    return std::exp(sep_constant / k_const * t);
}

FrameScalingRecord verify_frame_scaling(const SeparatedSolution& sol_s,
                                        const AlterationFactor& f, int mode_index,
                                        double tol_scaling, double tol_fd) {
    if (sol_s.frame != Frame::s)
        throw FrameMismatchError("frame scaling starts from an s-frame solution");

    const double lambda_s = sol_s.sep_constant;
    const double k = sol_s.k_const;
    const double gamma = f.gamma();

    // f(t^s) = exp(a_s t^s); substituting t^s = gamma t^m gives
    // F(t^m) = exp(a_s gamma t^m), so the m-frame eigenvalue is read off
    // the exponent: lambda_m = k (a_s gamma).
    const double a_s = lambda_s / k;
    const double a_m = a_s * gamma;
    const double lambda_m = k * a_m;

    const double expected = gamma * lambda_s;
    const double abs_err = std::fabs(lambda_m - expected);
    const double rel_err = lambda_s == 0.0 ? (abs_err == 0.0 ? 0.0 : std::numeric_limits<double>::infinity())
                                           : abs_err / std::fabs(lambda_s);

    // Independent re-extraction: central differences of F at three times
    // spread over a unit of the decay scale.
    const double scale = a_m == 0.0 ? 1.0 : 1.0 / std::fabs(a_m);
    const double delta = 1e-5 * scale;
    const double samples[3] = {0.25 * scale, 0.5 * scale, 0.75 * scale};
    double fd_sum = 0.0;
    double fd_rel_err = 0.0;
    for (double t : samples) {
        const double fp = std::exp(a_m * (t + delta));
        const double fm = std::exp(a_m * (t - delta));
        const double f0 = std::exp(a_m * t);
        const double fd = k * ((fp - fm) / (2.0 * delta * f0));
        fd_sum += fd;
        const double err = std::fabs(fd - lambda_m);
        const double rel = lambda_m == 0.0
                               ? (err == 0.0 ? 0.0 : std::numeric_limits<double>::infinity())
                               : err / std::fabs(lambda_m);
        fd_rel_err = std::max(fd_rel_err, rel);
    }

    FrameScalingRecord rec;
    rec.mode_index = mode_index;
    rec.lambda_s = lambda_s;
    rec.gamma = gamma;
    rec.lambda_m = lambda_m;
    rec.abs_err = abs_err;
    rec.rel_err = rel_err;
    rec.fd_lambda_m = fd_sum / 3.0;
    rec.fd_rel_err = fd_rel_err;
    const bool scaling_ok = lambda_s == 0.0 ? abs_err == 0.0
                                            : abs_err <= tol_scaling * std::fabs(lambda_s);
    rec.pass = scaling_ok && fd_rel_err <= tol_fd;
    return rec;
}

double residual_operator_equation(const SeparatingOperator& op,
                                  const SeparatedSolution& sol,
                                  std::span<const double> times) {
    if (times.empty()) return 0.0;
    check_mode_size(op, sol);

    const LDVector h = promote(sol.mode);
    const LDVector dh = apply_ld(op, h);
    const long double hnorm = norm2_ld(h);
    if (!(hnorm > 0.0L)) throw InvalidInput("mode vector is zero", "zero-mode");

    const long double lambda = sol.sep_constant;
    const long double k = sol.k_const;
    const long double a = lambda / k;

    long double worst = 0.0L;
    for (double t : times) {
        long double ft = std::exp(a * static_cast<long double>(t));
        if (!std::isfinite(ft) || ft == 0.0L) ft = 1.0L;  // common factor, scale-free
        const long double dft = a * ft;
        long double rr = 0.0L;
        for (std::size_t i = 0; i < h.size(); ++i) {
            const long double ri = dh[i] * ft - k * h[i] * dft;
            rr += ri * ri;
        }
        worst = std::max(worst, std::sqrt(rr) / (std::fabs(ft) * hnorm));
    }
    return static_cast<double>(worst);
}

}  // namespace relalt
