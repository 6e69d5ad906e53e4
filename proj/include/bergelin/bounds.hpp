#pragma once

#include <optional>

#include "bergelin/rational.hpp"

namespace bergelin {

/// The degree-weighted affine form
///   f(n,r,t,x,y) = (t(r-1) + (r-2)(n-r)/(2(r-1)) + (n-r)/(r-1)^2) x
///                + y/(r-1)
///                - (t + r-2 + (r-2)(n-r-2)/(2(r-1)) - (r-2)(r-3)(n-r)/(2(r-1)^2)),
/// evaluated exactly. Requires n >= r >= 2 and t >= 3.
Rat eval_f(int n, int r, int t, const Rat& x, const Rat& y);

/// Coefficients of the average-degree quadratic d^2 - g1 d - g2 <= 0
/// satisfied by Berge-K_{3,t}-free linear r-graphs.
Rat eval_g1(int n, int r, int t);
Rat eval_g2(int n, int r, int t);

struct TuranBound {
    Rat g1;
    Rat g2;
    double degree_bound;    // positive root of the quadratic, or the degree cap
    double edge_bound;      // n * degree_bound / r, capped by the packing bound
    bool quadratic_vacuous; // discriminant < 0; degree cap used instead
};

/// Edge-count bound for Berge-K_{3,t}-free linear r-graphs at finite n:
/// the exact positive root of the quadratic, with the absolute linear
/// packing cap n(n-1)/(r(r-1)) applied on top.
TuranBound turan_upper_bound(int n, int r, int t);

/// sqrt(f) at x = y = (n-1)/(r-1). Throws NegativeF when f < 0 there
/// (the bound is inapplicable at such small n).
double spectral_upper_bound(int n, int r, int t);

/// Closed-form spectral radius of the two-apex construction:
///   2^(-2/r) (sqrt(1 + (n-r) 2^(r+1)/(r-1)) + 1)^(2/r).
/// Requires (r-1)^r | n-r. Doubles as the spectral lower bound.
double closed_form_rho_F(int n, int r);
double spectral_lower_bound(int n, int r);

/// Spectral bound for K_{s,t}-minor-free graphs (r = 2 reference):
///   (s+t-3 + sqrt((s+t-3)^2 + 4(s-1)(n-s+1) - 4(s-2)(t-1))) / 2.
/// Only asserted as an equality witness on the explicit join graph;
/// the general statement assumes large n, which the report flags.
double tait_bound(int n, int s, int t);

struct BoundReport {
    int n = 0, r = 0, t = 0;
    Rat f_at_cap;      // f at x = y = (n-1)/(r-1)
    Rat g1;
    Rat g2;
    double turan_degree_bound = 0.0;
    double turan_edge_bound = 0.0;
    std::optional<double> spectral_upper;  // absent when f < 0
    std::optional<double> spectral_lower;  // absent when (r-1)^r does not divide n-r
    std::optional<double> tait;            // r = 2 reference at s = 3, absent when t does not divide n-2
    bool large_n_assumed = false;          // the r = 2 reference bound assumes large n
};

BoundReport bound_report(int n, int r, int t);

}  // namespace bergelin
