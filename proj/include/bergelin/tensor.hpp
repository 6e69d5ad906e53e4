#pragma once

#include <vector>

#include "bergelin/bounds.hpp"
#include "bergelin/hypergraph.hpp"

namespace bergelin {

/// y_i = sum over edges e containing i of the product of x_j, j in e \ {i}.
/// This is the adjacency-tensor contraction A x^{r-1}; the 1/(r-1)! entry
/// weight cancels against the (r-1)! index permutations, so the tensor is
/// never materialized. Products use per-edge prefix/suffix arrays, no
/// division. Throws DimensionMismatch.
///
/// apply_adjacency shards the edge list over a fixed chunk grid (OpenMP)
/// and reduces the per-chunk partials in chunk order, so its output is
/// identical for any thread count; apply_adjacency_serial is the plain
/// single-stream reference kept for testing and benchmarking.
std::vector<double> apply_adjacency(const LinearHypergraph& h, const std::vector<double>& x);
std::vector<double> apply_adjacency_serial(const LinearHypergraph& h,
                                           const std::vector<double>& x);

struct PowerOptions {
    double tol = 1e-10;
    long max_iter = 100000;
    double shift = 1.0;    // positive diagonal shift; keeps the iteration primitive
    bool parallel = true;  // route contractions through the OpenMP kernel
};

struct PerronResult {
    double rho = 0.0;
    std::vector<double> x;  // positive, ||x||_r = 1
    double residual = 0.0;  // max-norm of A x^{r-1} - rho x^{[r-1]}
    long iterations = 0;
    bool converged = false;
    double lower = 0.0;  // final Collatz-Wielandt bracket (shift removed)
    double upper = 0.0;
};

class NoConvergence : public Error {
public:
    NoConvergence(double lower, double upper, long iterations);
    double lower, upper;
    long iterations;
};

/// Spectral radius of the adjacency tensor of a connected linear r-graph by
/// shifted power iteration: x <- (A x^{r-1} + shift x^{[r-1]})^{[1/(r-1)]},
/// renormalized to ||x||_r = 1, with the Collatz-Wielandt ratio bracket
/// tracked each step. Converged when the bracket gap drops below tol; the
/// returned rho is the geometric mean of the final bounds minus the shift.
/// Throws NotConnected and NoConvergence (carrying the best bracket).
PerronResult spectral_radius(const LinearHypergraph& h, const PowerOptions& opts = {});

struct EigenpairCheck {
    double residual = 0.0;
    bool within_tol = false;
};

/// max_i |(A x^{r-1})_i - rho x_i^{r-1}| against tol. x must be positive.
EigenpairCheck verify_eigenpair(const LinearHypergraph& h, double rho,
                                const std::vector<double>& x, double tol);

/// Solves the three-unknown symmetric eigensystem of the two-apex
/// construction F (apex weight x1, leaf weight x2, lattice weight x3) by
/// scalar bisection, independently of closed_form_rho_F. The returned
/// weights are normalized so the expanded n-vector has r-norm 1.
struct ReducedSystem {
    double rho = 0.0;
    double x1 = 0.0, x2 = 0.0, x3 = 0.0;
};

ReducedSystem reduced_system_rho_F(int n, int r);

}  // namespace bergelin
