#include "falsetheta/mex_partitions.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "falsetheta/theta.hpp"

namespace falsetheta {

namespace {

class Timer {
public:
    double seconds() const {
        return std::chrono::duration<double>(clock::now() - start_).count();
    }

private:
    using clock = std::chrono::steady_clock;
    clock::time_point start_ = clock::now();
};

void enumerate(std::int64_t remaining, std::int64_t max_part, std::vector<std::int64_t>& buf,
               const std::function<void(std::span<const std::int64_t>)>& visit) {
    if (remaining == 0) {
        visit(buf);
        return;
    }
    for (std::int64_t p = std::min(remaining, max_part); p >= 1; --p) {
        buf.push_back(p);
        enumerate(remaining - p, p, buf, visit);
        buf.pop_back();
    }
}

std::int64_t binom2(std::int64_t x) { return x * (x - 1) / 2; }

// generalized pentagonal numbers 1, 2, 5, 7, 12, 15, ... with the Euler
// identity sign pattern -,-,+,+ per consecutive pair
std::pair<std::int64_t, int> pentagonal_term(std::int64_t j) {
    const std::int64_t m = j / 2 + 1;
    const std::int64_t g = (j % 2 == 0) ? m * (3 * m - 1) / 2 : m * (3 * m + 1) / 2;
    const int sign = ((j / 2) % 2 == 0) ? -1 : 1;
    return {g, sign};
}

}  // namespace

Partition Partition::of(std::vector<std::int64_t> parts) {
    Partition p;
    std::int64_t sum = 0;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 1) throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts[i] > parts[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        sum += parts[i];
    }
    p.parts = std::move(parts);
    p.n = sum;
    return p;
}

std::int64_t Partition::mex() const { return mex_of(parts); }

std::int64_t Partition::rank() const {
    return parts.empty() ? 0 : parts.front() - static_cast<std::int64_t>(parts.size());
}

void for_each_partition(std::int64_t n,
                        const std::function<void(std::span<const std::int64_t>)>& visit) {
    if (n < 0) throw std::invalid_argument("for_each_partition: n must be >= 0");
    std::vector<std::int64_t> buf;
    enumerate(n, n == 0 ? 1 : n, buf, visit);
}

std::vector<Partition> collect_partitions(std::int64_t n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](std::span<const std::int64_t> parts) {
        out.push_back(Partition::of({parts.begin(), parts.end()}));
    });
    return out;
}

std::int64_t mex_of(std::span<const std::int64_t> parts) {
    // parts are descending; walk the distinct values upward
    std::int64_t expect = 1;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        if (*it == expect) {
            ++expect;
        } else if (*it > expect) {
            break;
        }
    }
    return expect;
}

std::int64_t mex_count_oracle(std::int64_t k, std::int64_t n) {
    if (k < 1) throw std::invalid_argument("mex_count_oracle: k must be >= 1");
    std::int64_t count = 0;
    for_each_partition(n, [&](std::span<const std::int64_t> parts) {
        if (mex_of(parts) != k) return;
        std::int64_t larger = 0, smaller = 0;
        for (std::int64_t p : parts) {
            if (p > k)
                ++larger;
            else if (p < k)
                ++smaller;
        }
        if (larger > smaller) ++count;
    });
    return count;
}

IntSeries mex_gf(std::int64_t k, std::int64_t trunc) {
    if (k < 1) throw std::invalid_argument("mex_gf: k must be >= 1");
    IntSeries out(trunc);
    std::int64_t n = k;
    if (binom2(k) + (k + 1) * n > trunc) return out;
    // rolling 1/(q;q)_n, divided by one more factor per step
    IntSeries recip_poch = reciprocal(pochhammer(1, 1, 1, n, trunc));
    while (true) {
        const std::int64_t base = binom2(k) + (k + 1) * n;
        if (base > trunc) break;
        const IntSeries g = extend_polynomial(gaussian_binomial(n - 1, k - 1), trunc);
        out = add(out, shift_up(mul(recip_poch, g), base));
        ++n;
        recip_poch = divide_binomial(recip_poch, -1, n);
    }
    return out;
}

mpz_class truncated_pentagonal_diff(std::int64_t k, std::int64_t n,
                                    std::span<const mpz_class> p_table) {
    if (k < 1) throw std::invalid_argument("truncated_pentagonal_diff: k must be >= 1");
    if (n < 0 || static_cast<std::size_t>(n) >= p_table.size())
        throw std::invalid_argument("truncated_pentagonal_diff: p_table does not cover n");
    mpz_class out = p_table[static_cast<std::size_t>(n)];
    for (std::int64_t j = 0; j < 2 * k - 1; ++j) {
        const auto [lag, sign] = pentagonal_term(j);
        if (lag > n) break;
        if (sign > 0)
            out += p_table[static_cast<std::size_t>(n - lag)];
        else
            out -= p_table[static_cast<std::size_t>(n - lag)];
    }
    return out;
}

IdentityReport verify_tpn_theorem(std::int64_t trunc) {
    Timer timer;
    IdentityReport report;
    report.identity_id = "tpn_theorem";
    report.trunc = trunc;
    report.verified = true;
    const IntSeries lhs =
        false_theta_psi(ThetaSpec{ThetaKind::false_theta, -1, 2, 1, 1}, trunc);
    const IntSeries f1 = pochhammer(1, 1, 1, std::nullopt, trunc);

    // form 1: M_{2j} through mex_gf
    IntSeries inner = IntSeries::one(trunc);
    for (std::int64_t j = 1; binom2(2 * j) + (2 * j + 1) * 2 * j <= trunc; ++j) {
        const IntSeries m2j = mex_gf(2 * j, trunc);
        inner = add(inner, scale(m2j, j % 2 == 1 ? -2 : 2));
    }
    const auto r1 = equal_upto(lhs, mul(f1, inner), trunc);

    // form 2: the explicit double sum, assembled without the M_k layer
    IntSeries inner2 = IntSeries::one(trunc);
    for (std::int64_t j = 1; binom2(2 * j) + (2 * j + 1) * 2 * j <= trunc; ++j) {
        const mpz_class c = j % 2 == 1 ? -2 : 2;
        for (std::int64_t n = 2 * j;; ++n) {
            const std::int64_t base = binom2(2 * j) + (2 * j + 1) * n;
            if (base > trunc) break;
            const IntSeries term =
                mul(reciprocal(pochhammer(1, 1, 1, n, trunc)),
                    extend_polynomial(gaussian_binomial(n - 1, 2 * j - 1), trunc));
            inner2 = add(inner2, scale(shift_up(term, base), c));
        }
    }
    const auto r2 = equal_upto(lhs, mul(f1, inner2), trunc);

    report.verified = r1.congruent && r2.congruent;
    if (!r1.congruent)
        report.first_mismatch = r1.first_mismatch;
    else if (!r2.congruent)
        report.first_mismatch = r2.first_mismatch;
    std::ostringstream detail;
    detail << "psi(-q^2,q) vs (q;q)_inf (1 - 2(M_2 - M_4 + ...)): mex_gf form "
           << (r1.congruent ? "ok" : "FAIL") << ", double-sum form "
           << (r2.congruent ? "ok" : "FAIL");
    report.detail = detail.str();
    report.elapsed_seconds = timer.seconds();
    return report;
}

std::int64_t rank_zero_count(std::int64_t n) {
    if (n == 0) return 1;  // the empty partition has rank 0
    std::int64_t count = 0;
    for_each_partition(n, [&](std::span<const std::int64_t> parts) {
        if (parts.front() == static_cast<std::int64_t>(parts.size())) ++count;
    });
    return count;
}

IdentityReport rank_zero_check(std::int64_t trunc) {
    if (trunc > 64)
        throw std::invalid_argument("rank_zero_check: enumeration oracle is desk-scale, "
                                    "trunc must be <= 64");
    Timer timer;
    IdentityReport report;
    report.identity_id = "rank_zero";
    report.trunc = trunc;
    report.verified = true;
    const IntSeries f1_recip = partition_gf(trunc);
    const auto shifted = [&](const ThetaSpec& spec) {
        IntSeries s = false_theta_psi(spec, trunc);
        s.add(0, -1);
        return mul(s, f1_recip);
    };
    const IntSeries printed = shifted(ThetaSpec{ThetaKind::false_theta, -1, 2, -1, 1});
    const IntSeries variant = shifted(ThetaSpec{ThetaKind::false_theta, -1, 2, 1, 1});

    std::optional<std::int64_t> printed_bad, variant_bad, parity_bad;
    if (printed.coeff(0) != 0) printed_bad = 0;
    for (std::int64_t n = 1; n <= trunc; ++n) {
        const mpz_class counted = mpz_class(static_cast<long>(rank_zero_count(n)));
        if (!printed_bad && printed.coeff(n) != counted) printed_bad = n;
        if (!variant_bad && variant.coeff(n) != counted) variant_bad = n;
        // conjugation negates the rank, so the nonzero-rank count is even
        mpz_class nonzero_rank = f1_recip.coeff(n) - counted;
        if (!parity_bad && mpz_odd_p(nonzero_rank.get_mpz_t())) parity_bad = n;
    }
    report.verified = !printed_bad && !parity_bad;
    report.first_mismatch = printed_bad ? printed_bad : parity_bad;
    std::ostringstream detail;
    detail << "(psi(-q^2,-q)-1)/(q;q)_inf " << (printed_bad ? "MISMATCHES" : "matches")
           << " the rank-0 count; variant psi(-q^2,q) ";
    if (variant_bad)
        detail << "mismatches first at exponent " << *variant_bad;
    else
        detail << "also matches";
    detail << "; nonzero-rank parity " << (parity_bad ? "ODD" : "even");
    report.detail = detail.str();
    report.warnings.push_back("rank_zero_sign");
    report.elapsed_seconds = timer.seconds();
    return report;
}

MexInequalityScan scan_m2_m4_inequality(std::int64_t n_max) {
    MexInequalityScan scan;
    scan.searched_upto = n_max;
    const IntSeries p = partition_gf(n_max);
    // M_2 - M_4 = T_4 - T_2, the four pentagonal terms with lags 7,12,15,22
    for (std::int64_t n = 1; n <= n_max; ++n) {
        mpz_class diff = truncated_pentagonal_diff(4, n, p.coeffs()) -
                         truncated_pentagonal_diff(2, n, p.coeffs());
        if (diff < 0) {
            scan.first_violation = n;
            scan.violation_difference = std::move(diff);
            break;
        }
    }
    return scan;
}

}  // namespace falsetheta
