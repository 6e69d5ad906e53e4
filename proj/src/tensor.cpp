#include "bergelin/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bergelin {

namespace {

void check_dimension(const LinearHypergraph& h, const std::vector<double>& x) {
    if (static_cast<int>(x.size()) != h.vertex_count())
        throw Error(ErrorCode::DimensionMismatch,
                    "vector has " + std::to_string(x.size()) + " entries, hypergraph has " +
                        std::to_string(h.vertex_count()) + " vertices");
}

// Scatter the contraction of edges [begin, end) into y.
void accumulate_edges(const LinearHypergraph& h, const std::vector<double>& x, size_t begin,
                      size_t end, std::vector<double>& y) {
    const size_t r = static_cast<size_t>(h.uniformity());
    std::vector<double> prefix(r + 1), suffix(r + 1);
    for (size_t idx = begin; idx < end; ++idx) {
        const Edge& e = h.edge(static_cast<EdgeId>(idx));
        prefix[0] = 1.0;
        for (size_t i = 0; i < r; ++i) prefix[i + 1] = prefix[i] * x[static_cast<size_t>(e[i])];
        suffix[r] = 1.0;
        for (size_t i = r; i-- > 0;) suffix[i] = suffix[i + 1] * x[static_cast<size_t>(e[i])];
        for (size_t i = 0; i < r; ++i)
            y[static_cast<size_t>(e[i])] += prefix[i] * suffix[i + 1];
    }
}

constexpr size_t kChunkGrid = 64;  // fixed so the reduction order never depends on thread count

}  // namespace

std::vector<double> apply_adjacency_serial(const LinearHypergraph& h,
                                           const std::vector<double>& x) {
    check_dimension(h, x);
    std::vector<double> y(x.size(), 0.0);
    accumulate_edges(h, x, 0, static_cast<size_t>(h.edge_count()), y);
    return y;
}

std::vector<double> apply_adjacency(const LinearHypergraph& h, const std::vector<double>& x) {
    check_dimension(h, x);
    const size_t m = static_cast<size_t>(h.edge_count());
    const size_t chunks = std::max<size_t>(1, std::min(kChunkGrid, m));
    if (chunks == 1) return apply_adjacency_serial(h, x);

    std::vector<std::vector<double>> partial(chunks, std::vector<double>(x.size(), 0.0));
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (size_t c = 0; c < chunks; ++c) {
        const size_t begin = c * m / chunks;
        const size_t end = (c + 1) * m / chunks;
        accumulate_edges(h, x, begin, end, partial[c]);
    }

    std::vector<double> y(x.size(), 0.0);
    for (size_t c = 0; c < chunks; ++c)
        for (size_t i = 0; i < y.size(); ++i) y[i] += partial[c][i];
    return y;
}

NoConvergence::NoConvergence(double lower_, double upper_, long iterations_)
    : Error(ErrorCode::NoConvergence,
            "bracket [" + std::to_string(lower_) + ", " + std::to_string(upper_) + "] after " +
                std::to_string(iterations_) + " iterations"),
      lower(lower_),
      upper(upper_),
      iterations(iterations_) {}

namespace {

void normalize_r(std::vector<double>& x, int r) {
    double sum = 0.0;
    for (double v : x) sum += std::pow(v, r);
    const double scale = std::pow(sum, -1.0 / r);
    for (double& v : x) v *= scale;
}

}  // namespace

PerronResult spectral_radius(const LinearHypergraph& h, const PowerOptions& opts) {
    if (opts.tol <= 0.0) throw Error(ErrorCode::InvalidParams, "tol must be positive");
    if (!h.is_connected())
        throw Error(ErrorCode::NotConnected, "spectral radius is defined per connected hypergraph");

    const int n = h.vertex_count();
    const int r = h.uniformity();
    const double sigma = opts.shift;
    auto contract = [&](const std::vector<double>& x) {
        return opts.parallel ? apply_adjacency(h, x) : apply_adjacency_serial(h, x);
    };

    PerronResult res;
    res.x.assign(static_cast<size_t>(n), std::pow(static_cast<double>(n), -1.0 / r));

    double lo = 0.0, hi = 0.0;
    for (long iter = 1; iter <= opts.max_iter; ++iter) {
        std::vector<double> y = contract(res.x);
        lo = std::numeric_limits<double>::infinity();
        hi = -std::numeric_limits<double>::infinity();
        for (size_t i = 0; i < y.size(); ++i) {
            const double xp = std::pow(res.x[i], r - 1);
            y[i] += sigma * xp;
            const double ratio = y[i] / xp;
            lo = std::min(lo, ratio);
            hi = std::max(hi, ratio);
        }
        res.iterations = iter;
        if (hi - lo < opts.tol) {
            res.converged = true;
            break;
        }
        for (size_t i = 0; i < y.size(); ++i) res.x[i] = std::pow(y[i], 1.0 / (r - 1));
        normalize_r(res.x, r);
    }

    if (!res.converged) throw NoConvergence(lo - sigma, hi - sigma, res.iterations);

    res.lower = lo - sigma;
    res.upper = hi - sigma;
    res.rho = std::sqrt(lo * hi) - sigma;

    std::vector<double> ax = contract(res.x);
    double residual = 0.0;
    for (size_t i = 0; i < ax.size(); ++i)
        residual = std::max(residual, std::abs(ax[i] - res.rho * std::pow(res.x[i], r - 1)));
    res.residual = residual;
    return res;
}

EigenpairCheck verify_eigenpair(const LinearHypergraph& h, double rho,
                                const std::vector<double>& x, double tol) {
    check_dimension(h, x);
    const int r = h.uniformity();
    std::vector<double> ax = apply_adjacency(h, x);
    EigenpairCheck out;
    for (size_t i = 0; i < ax.size(); ++i)
        out.residual = std::max(out.residual, std::abs(ax[i] - rho * std::pow(x[i], r - 1)));
    out.within_tol = out.residual <= tol;
    return out;
}

ReducedSystem reduced_system_rho_F(int n, int r) {
    if (r < 2 || n < r) throw Error(ErrorCode::InvalidParams, "need n >= r >= 2");
    long long block = 1;
    for (int i = 0; i < r; ++i) block *= r - 1;
    if ((n - r) % block != 0)
        throw Error(ErrorCode::DivisibilityViolated,
                    "(r-1)^r does not divide n-r = " + std::to_string(n - r));

    // At scale x1 = 1 the system collapses to a scalar equation in rho:
    //   rho = rho^{-(r-2)/2} + (n-r)/(r-1) * (2/rho)^{r-1},
    // whose left-minus-right is strictly increasing on rho > 0.
    const double c = static_cast<double>(n - r) / (r - 1);
    auto excess = [&](double rho) {
        return rho - std::pow(rho, -0.5 * (r - 2)) - c * std::pow(2.0 / rho, r - 1);
    };

    double lo = 1e-9, hi = 2.0;
    while (excess(hi) < 0.0) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (excess(mid) < 0.0 ? lo : hi) = mid;
    }

    ReducedSystem out;
    out.rho = 0.5 * (lo + hi);
    out.x1 = 1.0;
    out.x2 = std::pow(out.rho, -0.5);
    out.x3 = 2.0 / out.rho;

    const double norm_r = 2.0 * std::pow(out.x1, r) + (r - 2) * std::pow(out.x2, r) +
                          (n - r) * std::pow(out.x3, r);
    const double scale = std::pow(norm_r, -1.0 / r);
    out.x1 *= scale;
    out.x2 *= scale;
    out.x3 *= scale;
    return out;
}

}  // namespace bergelin
