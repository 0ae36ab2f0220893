#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "falsetheta/int_series.hpp"

namespace falsetheta {

enum class ThetaKind { theta, false_theta };

/// Symbolic descriptor of f(sign_a q^a, sign_b q^b) or
/// Psi(sign_a q^a, sign_b q^b).  Only monomial arguments +-q^e are
/// supported; a + b > 0 keeps the bilateral sum a valid formal series.
struct ThetaSpec {
    ThetaKind kind = ThetaKind::theta;
    int sign_a = 1;
    std::int64_t exp_a = 0;
    int sign_b = 1;
    std::int64_t exp_b = 0;

    friend bool operator==(const ThetaSpec&, const ThetaSpec&) = default;
};

void validate(const ThetaSpec& spec);

/// theta:  f(a,b) = sum_{n in Z} a^{C(n+1,2)} b^{C(n,2)}.
/// The forward (n >= 0) and backward (n <= -1) directions terminate
/// independently: past n = 1 resp. n = -1 the exponent is strictly
/// increasing in |n|, so each direction stops at its first exponent
/// beyond trunc.
IntSeries theta_f(const ThetaSpec& spec, std::int64_t trunc);

/// false theta:  same summand, backward terms subtracted.
IntSeries false_theta_psi(const ThetaSpec& spec, std::int64_t trunc);

/// Dispatch on spec.kind.
IntSeries expand(const ThetaSpec& spec, std::int64_t trunc);

/// sign * q^exp
struct SignedPower {
    int sign = 1;
    std::int64_t exp = 0;
};

/// (a; b)_n = prod_{i<n} (1 - a b^i) for monomial a, b; n_factors empty
/// means the infinite product, truncated once factor exponents pass trunc.
/// This is the one place JTP sign bookkeeping lives: a step with negative
/// sign alternates the sign of successive factors.
IntSeries pochhammer(SignedPower base, SignedPower step,
                     std::optional<std::int64_t> n_factors, std::int64_t trunc);

/// (sign q^j; q^k)_n with positive step, the surface most call sites use.
IntSeries pochhammer(int base_sign, std::int64_t base_exp, std::int64_t step,
                     std::optional<std::int64_t> n_factors, std::int64_t trunc);

/// Jacobi triple product expansion f(a,b) = (-a;ab) (-b;ab) (ab;ab).
IntSeries jtp_product(const ThetaSpec& spec, std::int64_t trunc);

/// One factor f_k^e of an eta-product, f_k = (q^k; q^k)_inf.
struct EtaFactor {
    std::int64_t k = 1;
    std::int64_t e = 1;
    friend bool operator==(const EtaFactor&, const EtaFactor&) = default;
};

/// q^s * prod f_k^{e_k}; negative exponents use the exact reciprocal.
struct EtaProductSpec {
    std::int64_t prefactor_exp = 0;
    std::vector<EtaFactor> factors;
    friend bool operator==(const EtaProductSpec&, const EtaProductSpec&) = default;
};

IntSeries eta_product(const EtaProductSpec& spec, std::int64_t trunc);

/// q-binomial coefficient [n k]_q as a polynomial of degree k(n-k),
/// computed by the q-Pascal recurrence (exact, no division).  Zero
/// polynomial for k < 0 or k > n.
IntSeries gaussian_binomial(std::int64_t n, std::int64_t k);

/// 1/(q;q)_inf = sum p(n) q^n.
IntSeries partition_gf(std::int64_t trunc);

struct ParseError : std::invalid_argument {
    ParseError(std::size_t position, const std::string& message)
        : std::invalid_argument("parse error at position " + std::to_string(position) +
                                ": " + message),
          pos(position) {}
    std::size_t pos;
};

/// "psi(-q^5,q)", "f(q^5,q)", "psi(-q^2,-q)", arguments also "1"/"-1"
/// for exponent zero.
ThetaSpec parse_theta_spec(std::string_view text);

/// "q^1 * f1^2 * f10^6", "f3^3 * f1^-1", "f5".
EtaProductSpec parse_eta_product(std::string_view text);

std::string to_string(const ThetaSpec& spec);
std::string to_string(const EtaProductSpec& spec);

}  // namespace falsetheta
