#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "falsetheta/mod_series.hpp"

namespace falsetheta {

/// A congruence claim coeff(An+B) == 0 (mod modulus) checked for every
/// index An+B <= verified_upto.  The scanner certifies "holds up to N",
/// never a proof.
struct Progression {
    std::int64_t A = 1;
    std::int64_t B = 0;
    std::uint64_t modulus = 2;
    std::int64_t verified_upto = 0;

    friend bool operator==(const Progression&, const Progression&) = default;
};

/// All (A, B) with A <= A_max whose coefficients vanish mod the series
/// modulus, each backed by at least min_hits checked indices.  Refinements
/// of an already-reported progression (A' | A, B compatible) are omitted;
/// output sorted by (A, B).  Rejects a series too short to give every
/// candidate min_hits checks, and rejects an identically zero series.
std::vector<Progression> scan_progressions(const ModSeries& series, std::int64_t A_max,
                                           std::int64_t min_hits = 50);

/// The quadratic form n -> alpha n^2 + beta n.
struct QuadFormSpec {
    std::int64_t alpha = 1;
    std::int64_t beta = 0;
};

struct ResidueAnalysis {
    std::uint64_t modulus = 2;
    std::vector<std::uint64_t> attained;
    std::vector<std::uint64_t> avoided;
    /// For odd prime modulus with gcd(alpha, p) = 1 the attained set was
    /// cross-checked against the completed-square criterion: j attained
    /// iff 4*alpha*j + beta^2 is a square mod p.
    bool square_criterion_used = false;
};

/// Residues attained by the form mod m (direct enumeration over a full
/// period) and the avoided complement.  For odd prime m coprime to alpha
/// the quadratic-residue criterion is computed as well and must agree.
ResidueAnalysis quadform_residue_analysis(const QuadFormSpec& form, std::uint64_t modulus);

/// Progressions implied by non-representability: when survivors inside the
/// outer progression (A0, B0) are indexed by the form, every residue j the
/// form avoids mod m yields the progression (A0*m, A0*j + B0).  Each is
/// re-verified against the supplied coefficient series before being
/// reported.
std::vector<Progression> representability_progressions(const QuadFormSpec& form,
                                                       std::pair<std::int64_t, std::int64_t> outer,
                                                       std::span<const std::uint64_t> moduli,
                                                       const ModSeries& series);

struct ConjectureEntry {
    std::int64_t t = 0;
    std::int64_t A = 0;
    std::int64_t B = 0;
    std::uint64_t modulus = 2;
    bool holds = false;
    std::optional<std::int64_t> first_counterexample;  // raw index An+B
    std::int64_t indices_checked = 0;
};

/// Results are bound-checks only, hence the fixed label.
struct ConjectureReport {
    std::string id;
    std::int64_t trunc = 0;
    bool all_pass = false;
    std::vector<ConjectureEntry> entries;
    std::string evidence = "empirical";
};

/// Tabulated congruence conjectures:
///   c9_c13_c17_mod2 : c9 36n+14, 196n+{54,166,194}; c13 32n+23, 64n+63,
///                     72n+{15,21,39,69}; c17 128n+80       (all mod 2)
///   c5_mod4_mod8    : mod 8 32n+31, 128n+123, 512n+491;
///                     mod 4 64n+19, 256n+75, 196n+7j+5 for
///                     j in {2,6,10,14,15,19,22,26,27}
/// Requires trunc >= 10 * the largest A in the table.
ConjectureReport check_conjecture(std::string_view id, std::int64_t trunc);

/// Ids accepted by check_conjecture.
std::vector<std::string> conjecture_ids();

}  // namespace falsetheta
