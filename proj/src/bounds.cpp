#include "bergelin/bounds.hpp"

#include <cmath>
#include <string>

#include "bergelin/errors.hpp"

namespace bergelin {

namespace {

void check_params(int n, int r, int t, int min_r) {
    if (r < min_r || n < r || t < 3)
        throw Error(ErrorCode::InvalidParams,
                    "need n >= r >= " + std::to_string(min_r) + " and t >= 3, got n=" +
                        std::to_string(n) + " r=" + std::to_string(r) + " t=" + std::to_string(t));
}

// positive power of a long long that fits the small exponents used here
long long ipow(long long base, int exp) {
    long long out = 1;
    for (int i = 0; i < exp; ++i) out *= base;
    return out;
}

}  // namespace

Rat eval_g1(int n, int r, int t) {
    check_params(n, r, t, 2);
    const long long rm1 = r - 1;
    return Rat(t) * rm1 + Rat(static_cast<long long>(r - 2) * (n - r), 2 * rm1) +
           Rat(n - r, rm1 * rm1);
}

Rat eval_g2(int n, int r, int t) {
    check_params(n, r, t, 2);
    const long long rm1 = r - 1;
    return Rat(static_cast<long long>(r - 2) * (r - 3) * (n - r) + 2LL * (n - 1), 2 * rm1 * rm1) -
           Rat(t + r - 2) - Rat(static_cast<long long>(r - 2) * (n - r - 2), 2 * rm1);
}

Rat eval_f(int n, int r, int t, const Rat& x, const Rat& y) {
    check_params(n, r, t, 2);
    const long long rm1 = r - 1;
    const Rat coeff_x = eval_g1(n, r, t);
    const Rat constant = Rat(t + r - 2) + Rat(static_cast<long long>(r - 2) * (n - r - 2), 2 * rm1) -
                         Rat(static_cast<long long>(r - 2) * (r - 3) * (n - r), 2 * rm1 * rm1);
    return coeff_x * x + y / rm1 - constant;
}

TuranBound turan_upper_bound(int n, int r, int t) {
    check_params(n, r, t, 3);
    TuranBound out;
    out.g1 = eval_g1(n, r, t);
    out.g2 = eval_g2(n, r, t);

    const double degree_cap = static_cast<double>(n - 1) / (r - 1);
    const double g1d = to_double(out.g1);
    const double g2d = to_double(out.g2);
    const double disc = g1d * g1d + 4.0 * g2d;
    if (disc < 0.0) {
        out.quadratic_vacuous = true;
        out.degree_bound = degree_cap;
    } else {
        out.quadratic_vacuous = false;
        out.degree_bound = (g1d + std::sqrt(disc)) / 2.0;
    }

    const double packing_cap =
        static_cast<double>(n) * (n - 1) / (static_cast<double>(r) * (r - 1));
    out.edge_bound = std::min(static_cast<double>(n) * out.degree_bound / r, packing_cap);
    return out;
}

double spectral_upper_bound(int n, int r, int t) {
    check_params(n, r, t, 3);
    const Rat cap(n - 1, r - 1);
    const Rat f = eval_f(n, r, t, cap, cap);
    if (f < Rat(0))
        throw Error(ErrorCode::NegativeF,
                    "f(" + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(t) +
                        ",(n-1)/(r-1),(n-1)/(r-1)) = " + to_string(f) + " < 0");
    return std::sqrt(to_double(f));
}

double closed_form_rho_F(int n, int r) {
    if (r < 2 || n < r) throw Error(ErrorCode::InvalidParams, "need n >= r >= 2");
    const long long block = ipow(r - 1, r);
    if ((n - r) % block != 0)
        throw Error(ErrorCode::DivisibilityViolated,
                    "(r-1)^r = " + std::to_string(block) + " does not divide n-r = " +
                        std::to_string(n - r));
    const double inner = 1.0 + static_cast<double>(n - r) * std::pow(2.0, r + 1) / (r - 1);
    return std::pow(2.0, -2.0 / r) * std::pow(std::sqrt(inner) + 1.0, 2.0 / r);
}

double spectral_lower_bound(int n, int r) { return closed_form_rho_F(n, r); }

double tait_bound(int n, int s, int t) {
    if (s < 2 || t < s || n < s)
        throw Error(ErrorCode::InvalidParams, "need 2 <= s <= t and n >= s");
    const double a = s + t - 3;
    const double disc = a * a + 4.0 * (s - 1) * (n - s + 1) - 4.0 * (s - 2) * (t - 1);
    return 0.5 * (a + std::sqrt(disc));
}

BoundReport bound_report(int n, int r, int t) {
    check_params(n, r, t, 2);
    BoundReport rep;
    rep.n = n;
    rep.r = r;
    rep.t = t;
    rep.g1 = eval_g1(n, r, t);
    rep.g2 = eval_g2(n, r, t);
    const Rat cap(n - 1, r - 1);
    rep.f_at_cap = eval_f(n, r, t, cap, cap);

    if (r >= 3) {
        TuranBound tb = turan_upper_bound(n, r, t);
        rep.turan_degree_bound = tb.degree_bound;
        rep.turan_edge_bound = tb.edge_bound;
        if (rep.f_at_cap >= Rat(0)) rep.spectral_upper = spectral_upper_bound(n, r, t);
    }
    if (t > r && (n - r) % ipow(r - 1, r) == 0) rep.spectral_lower = spectral_lower_bound(n, r);
    if ((n - 2) % t == 0) {
        rep.tait = tait_bound(n, 3, t);
        rep.large_n_assumed = true;
    }
    return rep;
}

}  // namespace bergelin
