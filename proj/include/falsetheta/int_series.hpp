#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace falsetheta {

/// Dense truncated power series with exact arbitrary-precision integer
/// coefficients.  A series is exact on exponents 0..trunc() inclusive.
/// Every binary operation narrows to the smaller truncation, so no
/// coefficient is ever reported that is not certified exact.
///
/// Values are immutable once built by the free operations below; the
/// set()/add() mutators exist for construction code.  Instances may be
/// shared read-only across threads.
class IntSeries {
public:
    /// Zero series exact through q^trunc.
    explicit IntSeries(std::int64_t trunc);

    static IntSeries one(std::int64_t trunc);

    std::int64_t trunc() const noexcept { return trunc_; }

    /// Coefficient of q^n.  Rejects n outside 0..trunc(): coefficients
    /// beyond the truncation are not certified and are never invented.
    const mpz_class& coeff(std::int64_t n) const;

    void set(std::int64_t n, mpz_class v);
    void add(std::int64_t n, const mpz_class& v);

    bool is_zero() const;

    /// Exponents with nonzero coefficient, ascending.
    std::vector<std::int64_t> support() const;

    std::span<const mpz_class> coeffs() const noexcept { return coeffs_; }

    friend bool operator==(const IntSeries&, const IntSeries&) = default;

private:
    std::int64_t trunc_;
    std::vector<mpz_class> coeffs_;
};

/// Builds a series from (exponent, coefficient) pairs; duplicate exponents
/// are summed, exponents above trunc are dropped.  Negative exponents are
/// rejected (no Laurent series).
IntSeries make_series(std::span<const std::pair<std::int64_t, mpz_class>> pairs,
                      std::int64_t trunc);
IntSeries make_series(std::initializer_list<std::pair<std::int64_t, mpz_class>> pairs,
                      std::int64_t trunc);

IntSeries add(const IntSeries& a, const IntSeries& b);
IntSeries sub(const IntSeries& a, const IntSeries& b);
IntSeries negate(const IntSeries& s);

/// Exact Cauchy product truncated at min(a.trunc(), b.trunc()).
IntSeries mul(const IntSeries& a, const IntSeries& b);

/// s * (1 + c q^e), same truncation.  O(trunc) and the workhorse behind
/// Pochhammer products.
IntSeries mul_binomial(const IntSeries& s, const mpz_class& c, std::int64_t e);

/// Exact division by (1 + c q^e), e >= 1: d(x) = s(x) - c d(x-e).
IntSeries divide_binomial(const IntSeries& s, const mpz_class& c, std::int64_t e);

/// Narrows to a smaller truncation (always certified).
IntSeries restrict_trunc(const IntSeries& s, std::int64_t trunc);

/// Pads with zeros up to a larger truncation.  Only meaningful when s is
/// an exact polynomial (e.g. a Gaussian binomial), which is exact at every
/// truncation; general series are not.
IntSeries extend_polynomial(const IntSeries& s, std::int64_t trunc);

/// e-fold product by binary exponentiation; power(s, 0) = 1.
IntSeries power(const IntSeries& s, std::int64_t e);

/// Multiplicative inverse: mul(s, reciprocal(s)) == 1 through trunc.
/// Requires constant coefficient +1 or -1 so the coefficient recurrence
/// r(n) = -s(0)^{-1} sum_{k>=1} s(k) r(n-k) stays integral.
IntSeries reciprocal(const IntSeries& s);

/// q -> q^k.  The result keeps the input truncation: coefficient of q^{kn}
/// is s(n) for kn <= trunc, all other positions zero (certified, since a
/// position not divisible by k cannot receive mass).
IntSeries substitute_qk(const IntSeries& s, std::int64_t k);

/// q -> q^k with an explicit output truncation; rejected when out_trunc
/// would need coefficients of s beyond its truncation.
IntSeries substitute_qk(const IntSeries& s, std::int64_t k, std::int64_t out_trunc);

/// Coefficient of q^n of the result is s(An + B); result truncation is
/// floor((s.trunc - B)/A).
IntSeries extract_progression(const IntSeries& s, std::int64_t A, std::int64_t B);

/// q^k * s, truncation preserved (top k coefficients fall off).
IntSeries shift_up(const IntSeries& s, std::int64_t k);

IntSeries scale(const IntSeries& s, const mpz_class& c);

struct CongruenceResult {
    bool congruent = false;
    std::optional<std::int64_t> first_mismatch;
};

/// Coefficientwise comparison mod m on exponents 0..upto.  Rejects upto
/// beyond either truncation rather than comparing uncertified positions.
/// Negative coefficients reduce by floored division, so -1 == 1 (mod 2).
CongruenceResult congruent(const IntSeries& a, const IntSeries& b,
                           const mpz_class& m, std::int64_t upto);

/// Exact comparison on 0..upto (same truncation contract as congruent).
CongruenceResult equal_upto(const IntSeries& a, const IntSeries& b, std::int64_t upto);

std::ostream& operator<<(std::ostream& os, const IntSeries& s);

/// "1 - q - q^2 + q^5 + ..." rendering, at most max_terms nonzero terms.
std::string to_string(const IntSeries& s, std::size_t max_terms = 24);

}  // namespace falsetheta
