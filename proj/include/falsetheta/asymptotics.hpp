#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "falsetheta/int_series.hpp"

namespace falsetheta {

/// Generalized pentagonal exponents m(3m-1)/2, m = 1,-1,2,-2,..., ascending,
/// with the sign each exponent carries in (q;q)_inf (period-4 pattern
/// -,-,+,+) and in Psi(-q^2,q) (period-8 pattern -,-,+,-,+,+,-,+).
struct PentagonalTable {
    std::vector<std::int64_t> exponents;
    std::vector<int> signs_pent;
    std::vector<int> signs_false;
};

/// Table of all pentagonal exponents <= limit.
PentagonalTable pentagonal_table(std::int64_t limit);

/// c_2(0..N) by the infinite recurrence
///   c_2(n) = c_2(n-1) + c_2(n-2) - c_2(n-5) + c_2(n-7) - c_2(n-12) - ...
/// with lag signs -signs_false; lags beyond n contribute nothing, so the
/// recurrence is evaluated without truncation error.
std::vector<mpz_class> c2_by_recurrence(std::int64_t N);

/// A finite linear recurrence s(n) = sum sign * s(n - lag).
struct RecurrenceSpec {
    std::vector<std::pair<std::int64_t, int>> terms;  // (lag, sign), lags ascending

    std::int64_t degree() const;  // max lag
};

/// The degree-7 upper-bound recurrence (lags 1,2,5,7) and the degree-26
/// lower-bound recurrence (lags 1,2,5,7,12,15,22,26) for c_2.
RecurrenceSpec upper_recurrence();
RecurrenceSpec lower_recurrence();

/// x^d - sum sign*x^{d-lag} as a polynomial (coefficient of x^i at index i).
IntSeries char_poly(const RecurrenceSpec& rec);

/// Runs the recurrence with the given initial segment (first degree()
/// values) out to index N.
std::vector<mpz_class> run_recurrence(const RecurrenceSpec& rec,
                                      std::span<const mpz_class> initial, std::int64_t N);

/// (a, b) with a from the degree-7 and b from the degree-26 recurrence,
/// both seeded with c_2's initial segment, so b(n) <= c_2(n) <= a(n).
std::pair<std::vector<mpz_class>, std::vector<mpz_class>> bounding_sequences(std::int64_t N);

/// Largest real root of the polynomial inside [lo, hi]: the rightmost
/// sign change is located on a fine grid, then bisected to within tol.
/// Rejects polynomials with no sign change anywhere on the grid.
double largest_real_root(const IntSeries& poly, double lo, double hi, double tol = 1e-9);

double eval_poly(const IntSeries& poly, double x);

/// min and max of seq(n+1)/seq(n), n in [n0, n1), as exact rationals.
struct RatioInterval {
    mpq_class lo;
    mpq_class hi;

    double lo_double() const;  // rounded outward
    double hi_double() const;
};

RatioInterval growth_ratio(std::span<const mpz_class> seq, std::int64_t n0, std::int64_t n1);

/// Coefficients of 1/(1 - sum_g q^g) over pentagonal g: compositions into
/// pentagonal parts.
std::vector<mpz_class> pentagonal_compositions(std::int64_t N);

}  // namespace falsetheta
