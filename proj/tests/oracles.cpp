#include "oracles.hpp"

#include <cmath>
#include <functional>

namespace falsetheta::test {

std::vector<mpz_class> euler_p_table(std::int64_t N) {
    std::vector<mpz_class> p(static_cast<std::size_t>(N) + 1);
    p[0] = 1;
    for (std::int64_t n = 1; n <= N; ++n) {
        mpz_class acc = 0;
        for (std::int64_t k = 1;; ++k) {
            const std::int64_t g1 = k * (3 * k - 1) / 2;
            const std::int64_t g2 = k * (3 * k + 1) / 2;
            if (g1 > n) break;
            if (k % 2 == 1) {
                acc += p[static_cast<std::size_t>(n - g1)];
                if (g2 <= n) acc += p[static_cast<std::size_t>(n - g2)];
            } else {
                acc -= p[static_cast<std::size_t>(n - g1)];
                if (g2 <= n) acc -= p[static_cast<std::size_t>(n - g2)];
            }
        }
        p[static_cast<std::size_t>(n)] = acc;
    }
    return p;
}

IntSeries brute_theta(int sa, std::int64_t ea, int sb, std::int64_t eb, std::int64_t trunc,
                      bool false_theta) {
    IntSeries out(trunc);
    const std::int64_t L =
        static_cast<std::int64_t>(std::sqrt(4.0 * static_cast<double>(trunc + 1) /
                                            static_cast<double>(ea + eb))) + 4;
    for (std::int64_t n = -L; n <= L; ++n) {
        const std::int64_t t1 = n * (n + 1) / 2;  // C(n+1,2)
        const std::int64_t t2 = n * (n - 1) / 2;  // C(n,2)
        const std::int64_t e = ea * t1 + eb * t2;
        if (e < 0 || e > trunc) continue;
        int sign = 1;
        if (sa == -1 && (t1 % 2 != 0)) sign = -sign;
        if (sb == -1 && (t2 % 2 != 0)) sign = -sign;
        if (false_theta && n < 0) sign = -sign;
        out.add(e, sign);
    }
    return out;
}

IntSeries gaussian_box_oracle(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return IntSeries(0);
    const std::int64_t w = k * (n - k);
    IntSeries out(w);
    // partitions with at most k parts, each part <= n-k
    std::function<void(std::int64_t, std::int64_t, std::int64_t)> rec =
        [&](std::int64_t rows_left, std::int64_t max_part, std::int64_t total) {
            out.add(total, 1);
            if (rows_left == 0) return;
            for (std::int64_t p = 1; p <= max_part; ++p) rec(rows_left - 1, p, total + p);
        };
    rec(k, n - k, 0);
    return out;
}

namespace {

std::int64_t composition_rec(std::int64_t n, const std::vector<std::int64_t>& parts) {
    if (n == 0) return 1;
    std::int64_t total = 0;
    for (const std::int64_t g : parts) {
        if (g > n) break;
        total += composition_rec(n - g, parts);
    }
    return total;
}

}  // namespace

std::int64_t composition_count_oracle(std::int64_t n) {
    std::vector<std::int64_t> parts;
    for (std::int64_t m = 1;; ++m) {
        const std::int64_t g1 = m * (3 * m - 1) / 2;
        const std::int64_t g2 = m * (3 * m + 1) / 2;
        if (g1 > n) break;
        parts.push_back(g1);
        if (g2 <= n) parts.push_back(g2);
    }
    std::sort(parts.begin(), parts.end());
    return composition_rec(n, parts);
}

namespace {

bool is_3core(const std::vector<std::int64_t>& parts) {
    if (parts.empty()) return true;
    std::vector<std::int64_t> conj(static_cast<std::size_t>(parts[0]), 0);
    for (const std::int64_t p : parts)
        for (std::int64_t j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (std::int64_t j = 0; j < parts[i]; ++j) {
            const std::int64_t hook = parts[i] - (j + 1) +
                                      conj[static_cast<std::size_t>(j)] -
                                      static_cast<std::int64_t>(i + 1) + 1;
            if (hook % 3 == 0) return false;
        }
    return true;
}

void partitions_rec(std::int64_t remaining, std::int64_t max_part,
                    std::vector<std::int64_t>& buf,
                    const std::function<void(const std::vector<std::int64_t>&)>& visit) {
    if (remaining == 0) {
        visit(buf);
        return;
    }
    for (std::int64_t p = std::min(remaining, max_part); p >= 1; --p) {
        buf.push_back(p);
        partitions_rec(remaining - p, p, buf, visit);
        buf.pop_back();
    }
}

}  // namespace

std::int64_t three_core_count(std::int64_t n) {
    std::int64_t count = 0;
    std::vector<std::int64_t> buf;
    partitions_rec(n, n == 0 ? 1 : n, buf,
                   [&](const std::vector<std::int64_t>& parts) {
                       if (is_3core(parts)) ++count;
                   });
    return count;
}

IntSeries random_series(std::mt19937_64& rng, std::int64_t trunc, int lo, int hi) {
    std::uniform_int_distribution<int> coeff(lo, hi);
    IntSeries s(trunc);
    for (std::int64_t n = 0; n <= trunc; ++n) s.set(n, coeff(rng));
    return s;
}

ThetaSpec random_theta_spec(std::mt19937_64& rng, std::int64_t max_exp, ThetaKind kind) {
    std::uniform_int_distribution<int> sign(0, 1);
    std::uniform_int_distribution<std::int64_t> exp(0, max_exp);
    ThetaSpec spec;
    spec.kind = kind;
    do {
        spec.sign_a = sign(rng) ? 1 : -1;
        spec.sign_b = sign(rng) ? 1 : -1;
        spec.exp_a = exp(rng);
        spec.exp_b = exp(rng);
    } while (spec.exp_a + spec.exp_b == 0);
    return spec;
}

}  // namespace falsetheta::test
