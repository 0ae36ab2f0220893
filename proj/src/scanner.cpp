#include "falsetheta/scanner.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "falsetheta/identities.hpp"
#include "falsetheta/parallel.hpp"

namespace falsetheta {

namespace {

/// last index of the progression within trunc, or nullopt on a nonzero hit
std::optional<std::int64_t> progression_all_zero(const ModSeries& s, std::int64_t A,
                                                 std::int64_t B) {
    std::int64_t last = -1;
    for (std::int64_t i = B; i <= s.trunc(); i += A) {
        if (s.coeff(i) != 0) return std::nullopt;
        last = i;
    }
    return last;
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

std::vector<Progression> scan_progressions(const ModSeries& series, std::int64_t A_max,
                                           std::int64_t min_hits) {
    if (A_max < 1) throw std::invalid_argument("scan_progressions: A_max must be >= 1");
    if (min_hits < 1) throw std::invalid_argument("scan_progressions: min_hits must be >= 1");
    // worst candidate is (A_max, A_max-1); every candidate must see min_hits indices
    const std::int64_t required = min_hits * A_max - 1;
    if (series.trunc() < required)
        throw std::invalid_argument(
            "scan_progressions: series truncation " + std::to_string(series.trunc()) +
            " too small for A_max=" + std::to_string(A_max) + " with min_hits=" +
            std::to_string(min_hits) + "; need at least " + std::to_string(required));
    if (series.is_zero())
        throw std::invalid_argument("scan_progressions: series is identically zero mod " +
                                    std::to_string(series.modulus()) +
                                    "; every progression would qualify");

    // candidates per A in parallel, then a sequential refinement-dedup pass
    std::vector<std::vector<Progression>> per_A(static_cast<std::size_t>(A_max));
    parallel_for_index(A_max, [&](std::int64_t idx) {
        const std::int64_t A = idx + 1;
        for (std::int64_t B = 0; B < A; ++B) {
            const auto last = progression_all_zero(series, A, B);
            if (!last) continue;
            per_A[static_cast<std::size_t>(idx)].push_back(
                Progression{A, B, series.modulus(), *last});
        }
    });

    std::vector<Progression> out;
    for (const auto& bucket : per_A) {
        for (const auto& p : bucket) {
            const bool refined = std::any_of(out.begin(), out.end(), [&](const Progression& q) {
                return p.A % q.A == 0 && p.B % q.A == q.B;
            });
            if (!refined) out.push_back(p);
        }
    }
    return out;
}

ResidueAnalysis quadform_residue_analysis(const QuadFormSpec& form, std::uint64_t modulus) {
    if (form.alpha == 0) throw std::invalid_argument("quadform_residue_analysis: alpha must be nonzero");
    if (modulus < 2 || modulus > 1000000)
        throw std::invalid_argument("quadform_residue_analysis: modulus must be in [2, 1e6]");
    const std::uint64_t m = modulus;
    // reduce the form once; all later products then stay below m^2 <= 1e12
    const auto residue = [m](std::int64_t v) {
        const std::int64_t r = v % static_cast<std::int64_t>(m);
        return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(m) : r);
    };
    const std::uint64_t alpha = residue(form.alpha);
    const std::uint64_t beta = residue(form.beta);

    ResidueAnalysis out;
    out.modulus = modulus;
    std::vector<bool> hit(modulus, false);
    for (std::uint64_t n = 0; n < m; ++n)
        hit[(alpha * (n * n % m) + beta * n) % m] = true;
    for (std::uint64_t j = 0; j < modulus; ++j)
        (hit[j] ? out.attained : out.avoided).push_back(j);

    if (m % 2 == 1 && is_prime(m) && alpha != 0) {
        // completed square: alpha n^2 + beta n == j iff (2 alpha n + beta)^2
        // == 4 alpha j + beta^2, so j is attained iff that value is a
        // square mod p
        std::vector<bool> is_square(m, false);
        for (std::uint64_t x = 0; x < m; ++x) is_square[x * x % m] = true;
        for (std::uint64_t j = 0; j < m; ++j) {
            const std::uint64_t val = (4 * alpha % m * j + beta * beta) % m;
            if (is_square[val] != hit[j])
                throw std::logic_error("quadform_residue_analysis: completed-square criterion "
                                       "disagrees with enumeration");
        }
        out.square_criterion_used = true;
    }
    return out;
}

std::vector<Progression> representability_progressions(const QuadFormSpec& form,
                                                       std::pair<std::int64_t, std::int64_t> outer,
                                                       std::span<const std::uint64_t> moduli,
                                                       const ModSeries& series) {
    const auto [A0, B0] = outer;
    if (A0 < 1 || B0 < 0 || B0 >= A0)
        throw std::invalid_argument("representability_progressions: bad outer progression");
    std::vector<Progression> out;
    for (const std::uint64_t m : moduli) {
        const ResidueAnalysis analysis = quadform_residue_analysis(form, m);
        for (const std::uint64_t j : analysis.avoided) {
            const std::int64_t A = A0 * static_cast<std::int64_t>(m);
            const std::int64_t B = A0 * static_cast<std::int64_t>(j) + B0;
            const auto last = progression_all_zero(series, A, B);
            if (last)
                out.push_back(Progression{A, B, series.modulus(), *last});
        }
    }
    std::sort(out.begin(), out.end(), [](const Progression& a, const Progression& b) {
        return std::tie(a.A, a.B) < std::tie(b.A, b.B);
    });
    return out;
}

std::vector<std::string> conjecture_ids() {
    return {"c9_c13_c17_mod2", "c5_mod4_mod8"};
}

ConjectureReport check_conjecture(std::string_view id, std::int64_t trunc) {
    struct Row {
        std::int64_t t;
        std::uint64_t modulus;
        std::int64_t A;
        std::int64_t B;
    };
    std::vector<Row> rows;
    if (id == "c9_c13_c17_mod2") {
        for (std::int64_t B : {54, 166, 194}) rows.push_back({9, 2, 196, B});
        rows.push_back({9, 2, 36, 14});
        rows.push_back({13, 2, 32, 23});
        rows.push_back({13, 2, 64, 63});
        for (std::int64_t B : {15, 21, 39, 69}) rows.push_back({13, 2, 72, B});
        rows.push_back({17, 2, 128, 80});
    } else if (id == "c5_mod4_mod8") {
        rows.push_back({5, 8, 32, 31});
        rows.push_back({5, 8, 128, 123});
        rows.push_back({5, 8, 512, 491});
        rows.push_back({5, 4, 64, 19});
        rows.push_back({5, 4, 256, 75});
        for (std::int64_t j : {2, 6, 10, 14, 15, 19, 22, 26, 27})
            rows.push_back({5, 4, 196, 7 * j + 5});
    } else {
        throw std::invalid_argument("check_conjecture: unknown id '" + std::string(id) + "'");
    }

    std::int64_t max_A = 0;
    for (const auto& r : rows) max_A = std::max(max_A, r.A);
    if (trunc < 10 * max_A)
        throw std::invalid_argument("check_conjecture: trunc must be >= 10 * largest A = " +
                                    std::to_string(10 * max_A));

    ConjectureReport report;
    report.id = std::string(id);
    report.trunc = trunc;
    report.all_pass = true;

    // one series per (t, modulus)
    std::vector<std::pair<std::pair<std::int64_t, std::uint64_t>, ModSeries>> cache;
    const auto series_for = [&](std::int64_t t, std::uint64_t m) -> const ModSeries& {
        for (const auto& [key, s] : cache)
            if (key == std::make_pair(t, m)) return s;
        cache.emplace_back(std::make_pair(t, m), c_t_series_mod(t, trunc, m));
        return cache.back().second;
    };

    for (const auto& r : rows) {
        const ModSeries& s = series_for(r.t, r.modulus);
        ConjectureEntry e{r.t, r.A, r.B, r.modulus, true, std::nullopt, 0};
        for (std::int64_t i = r.B; i <= trunc; i += r.A) {
            ++e.indices_checked;
            if (s.coeff(i) != 0) {
                e.holds = false;
                e.first_counterexample = i;
                break;
            }
        }
        if (!e.holds) report.all_pass = false;
        report.entries.push_back(e);
    }
    std::sort(report.entries.begin(), report.entries.end(),
              [](const ConjectureEntry& a, const ConjectureEntry& b) {
                  return std::tie(a.t, a.modulus, a.A, a.B) <
                         std::tie(b.t, b.modulus, b.A, b.B);
              });
    return report;
}

}  // namespace falsetheta
