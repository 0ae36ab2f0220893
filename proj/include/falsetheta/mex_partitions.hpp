#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "falsetheta/identities.hpp"
#include "falsetheta/int_series.hpp"

namespace falsetheta {

/// A partition: weakly decreasing positive parts summing to n.
struct Partition {
    std::vector<std::int64_t> parts;
    std::int64_t n = 0;

    /// Validates descending order, positive parts, and the recorded sum.
    static Partition of(std::vector<std::int64_t> parts);

    std::int64_t mex() const;
    /// Largest part minus number of parts; the empty partition has rank 0.
    std::int64_t rank() const;

    friend bool operator==(const Partition&, const Partition&) = default;
};

/// Calls visit for every partition of n (parts descending).  The empty
/// partition is visited for n = 0.  Desk scale: n <= ~70.
void for_each_partition(std::int64_t n,
                        const std::function<void(std::span<const std::int64_t>)>& visit);

/// Materialized partition list; enumeration order, desk scale only.
std::vector<Partition> collect_partitions(std::int64_t n);

/// Least positive integer absent from the parts.
std::int64_t mex_of(std::span<const std::int64_t> parts);

/// M_k(n): partitions of n whose mex is exactly k and which have more
/// parts larger than k than parts smaller than k.  Exhaustive enumeration.
std::int64_t mex_count_oracle(std::int64_t k, std::int64_t n);

/// Generating function sum_{n>=k} q^{C(k,2)+(k+1)n} / (q;q)_n * [n-1, k-1]_q.
IntSeries mex_gf(std::int64_t k, std::int64_t trunc);

/// The k-th truncation (2k terms) of the pentagonal recurrence,
///   k=1: p(n) - p(n-1);  k=2: p(n) - p(n-1) - p(n-2) + p(n-5);  ...
/// with p(<0) = 0.  Equals (-1)^{k-1} M_k(n) for n >= 1.
mpz_class truncated_pentagonal_diff(std::int64_t k, std::int64_t n,
                                    std::span<const mpz_class> p_table);

/// Verifies both displayed forms of
///   Psi(-q^2,q) = (q;q)_inf (1 - 2(M_2 - M_4 + M_6 - M_8 + ...))
/// exactly to trunc: once through mex_gf, once through the explicit
/// double sum.
IdentityReport verify_tpn_theorem(std::int64_t trunc);

/// Rank-0 partitions of n (largest part minus number of parts equal to
/// zero); the empty partition counts as rank 0.
std::int64_t rank_zero_count(std::int64_t n);

/// Compares (Psi(-q^2,-q) - 1)/(q;q)_inf against the rank-0 count from
/// enumeration, resolves the sign-variant ambiguity by testing
/// Psi(-q^2,q) as well, and checks the corollary that the number of
/// partitions with nonzero rank is even.  trunc <= 64 (enumeration).
IdentityReport rank_zero_check(std::int64_t trunc);

/// Search for violations of M_2(n) >= M_4(n) using the truncated
/// pentagonal differences (a four-term window of the p table).
struct MexInequalityScan {
    std::int64_t searched_upto = 0;
    std::optional<std::int64_t> first_violation;
    mpz_class violation_difference;  // M_2 - M_4 at the witness
};

MexInequalityScan scan_m2_m4_inequality(std::int64_t n_max);

}  // namespace falsetheta
