#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "falsetheta/int_series.hpp"
#include "falsetheta/mod_series.hpp"
#include "falsetheta/theta.hpp"

namespace falsetheta {

/// Symbolic result of the false theta dissection
///   LHS = even_part + odd_sign * q^odd_prefactor_exp * odd_part.
/// Kept symbolic (specs, not series) so the split can be iterated the way
/// the congruence proofs chain dissections.
struct Dissection {
    ThetaSpec even_part;
    ThetaSpec odd_part;
    int odd_sign = 1;
    std::int64_t odd_prefactor_exp = 0;
    /// True when the input exponents are both odd, in which case the first
    /// term has purely even support and the prefactored term purely odd.
    bool even_odd_split = false;

    friend bool operator==(const Dissection&, const Dissection&) = default;
};

/// Dissects Psi(s_a q^a, s_b q^b), a != b.  With eps = s_a * s_b:
///
///   a > b:  Psi(eps q^{3a+b}, eps q^{a+3b})
///             - s_b * q^b * Psi(eps q^{3a+5b}, eps q^{a-b})
///   b > a:  Psi(eps q^{3a+b}, eps q^{a+3b})
///             + s_a * q^a * Psi(eps q^{5a+3b}, eps q^{b-a})
///
/// The inner signs are all eps (positive when the argument signs match,
/// negative when they mismatch); the sign between the terms is the
/// opposite of the second argument's sign when a > b and equal to the
/// first argument's sign when b > a.  a == b is rejected: the a-b
/// exponent would degenerate to a constant argument.
Dissection dissect_false_theta(const ThetaSpec& spec);

struct IdentityReport {
    std::string identity_id;
    std::int64_t trunc = 0;
    std::optional<std::uint64_t> modulus;  // nullopt = exact comparison
    bool verified = false;
    std::optional<std::int64_t> first_mismatch;
    double elapsed_seconds = 0.0;
    std::vector<std::string> warnings;  // discrepancy ids, see known_discrepancies()
    std::string detail;
};

/// Expands both sides of the dissection and compares exactly; when the
/// split is an even/odd dissection the support purity of both parts is
/// checked as well.
IdentityReport verify_dissection(const ThetaSpec& spec, std::int64_t trunc);

/// Coefficients c_t(n) of 1/Psi(-q^t, q).
IntSeries c_t_series(std::int64_t t, std::int64_t trunc);
ModSeries c_t_series_mod(std::int64_t t, std::int64_t trunc, std::uint64_t modulus);

/// sum_{n in Z} q^{alpha n^2 + beta n}, terms with exponent in [0, trunc];
/// alpha > 0.  Coefficients count the lattice multiplicity.
IntSeries bilateral_quadratic_series(std::int64_t alpha, std::int64_t beta,
                                     std::int64_t trunc);

struct RegistryEntry {
    std::string id;
    std::string summary;
    std::int64_t default_trunc = 0;
    std::optional<std::uint64_t> modulus;  // comparison modulus, nullopt = exact
};

/// Named identities and congruences this suite can verify, in a fixed order.
const std::vector<RegistryEntry>& identity_registry();

/// Runs one registry entry.  trunc defaults to the entry's listed value;
/// modulus_override reruns the comparison at a different modulus (useful
/// for negative probes: most entries fail at a modulus they were never
/// claimed for).
IdentityReport verify_registry_identity(std::string_view id,
                                        std::optional<std::int64_t> trunc = {},
                                        std::optional<std::uint64_t> modulus_override = {});

/// Verifies 1/(U+V) against the telescoped factorization
///   (U+V) (U-V) (U^2+V^2) (U^4+V^4) ... = U^{2^L} - V^{2^L}
/// where U + V is the dissection of the given false theta spec, i.e.
/// reciprocal(Psi) * (U^{2^L} - V^{2^L}) == (U-V) * prod_{i=1}^{L-1} (U^{2^i}+V^{2^i}),
/// exactly or mod m.  levels = L >= 1; levels = 1 is the difference of
/// squares.
IdentityReport telescoped_inverse_check(const ThetaSpec& spec, int levels,
                                        std::optional<std::uint64_t> modulus,
                                        std::int64_t trunc);

/// A discrepancy between a stated identity and its verified content,
/// surfaced as a structured warning rather than silently repaired.
struct DiscrepancyNote {
    std::string id;
    std::string description;
};

/// The ledger of statement discrepancies this suite detects and flags:
///   thm1_c2_label   progressions stated for c_2 but verified for c_5
///   thm3_q_factor   first dissection display missing the factor q
///   rank_zero_sign  rank-0 remark's Psi(-q^2,-q) vs the section's Psi(-q^2,q)
///   rlnpsi_scale    stated sum equals Psi(q^3,q) only after q -> q^4
const std::vector<DiscrepancyNote>& known_discrepancies();

}  // namespace falsetheta
