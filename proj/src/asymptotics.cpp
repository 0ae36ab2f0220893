#include "falsetheta/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace falsetheta {

PentagonalTable pentagonal_table(std::int64_t limit) {
    PentagonalTable t;
    // pattern periods over the sequence of exponents, not over n
    static constexpr int kPent[4] = {-1, -1, 1, 1};
    static constexpr int kFalse[8] = {-1, -1, 1, -1, 1, 1, -1, 1};
    std::size_t idx = 0;
    for (std::int64_t m = 1;; ++m) {
        const std::int64_t g1 = m * (3 * m - 1) / 2;
        const std::int64_t g2 = m * (3 * m + 1) / 2;
        if (g1 > limit) break;
        t.exponents.push_back(g1);
        t.signs_pent.push_back(kPent[idx % 4]);
        t.signs_false.push_back(kFalse[idx % 8]);
        ++idx;
        if (g2 > limit) break;
        t.exponents.push_back(g2);
        t.signs_pent.push_back(kPent[idx % 4]);
        t.signs_false.push_back(kFalse[idx % 8]);
        ++idx;
    }
    return t;
}

std::vector<mpz_class> c2_by_recurrence(std::int64_t N) {
    if (N < 0) throw std::invalid_argument("c2_by_recurrence: N must be >= 0");
    const PentagonalTable t = pentagonal_table(N);
    std::vector<mpz_class> c(static_cast<std::size_t>(N) + 1);
    c[0] = 1;
    for (std::int64_t n = 1; n <= N; ++n) {
        mpz_class acc = 0;
        for (std::size_t i = 0; i < t.exponents.size(); ++i) {
            const std::int64_t g = t.exponents[i];
            if (g > n) break;
            // recurrence signs are the negated series signs
            if (t.signs_false[i] < 0)
                acc += c[static_cast<std::size_t>(n - g)];
            else
                acc -= c[static_cast<std::size_t>(n - g)];
        }
        c[static_cast<std::size_t>(n)] = std::move(acc);
    }
    return c;
}

std::int64_t RecurrenceSpec::degree() const {
    std::int64_t d = 0;
    for (const auto& [lag, sign] : terms) d = std::max(d, lag);
    return d;
}

namespace {

void validate(const RecurrenceSpec& rec) {
    std::int64_t prev = 0;
    for (const auto& [lag, sign] : rec.terms) {
        if (lag <= prev)
            throw std::invalid_argument("RecurrenceSpec: lags must be strictly increasing");
        if (sign != 1 && sign != -1)
            throw std::invalid_argument("RecurrenceSpec: signs must be +-1");
        prev = lag;
    }
    if (rec.terms.empty()) throw std::invalid_argument("RecurrenceSpec: empty recurrence");
}

}  // namespace

RecurrenceSpec upper_recurrence() {
    return RecurrenceSpec{{{1, 1}, {2, 1}, {5, -1}, {7, 1}}};
}

RecurrenceSpec lower_recurrence() {
    return RecurrenceSpec{{{1, 1}, {2, 1}, {5, -1}, {7, 1}, {12, -1}, {15, -1}, {22, 1}, {26, -1}}};
}

IntSeries char_poly(const RecurrenceSpec& rec) {
    validate(rec);
    const std::int64_t d = rec.degree();
    IntSeries p(d);
    p.set(d, 1);
    for (const auto& [lag, sign] : rec.terms) p.add(d - lag, mpz_class(-sign));
    return p;
}

std::vector<mpz_class> run_recurrence(const RecurrenceSpec& rec,
                                      std::span<const mpz_class> initial, std::int64_t N) {
    validate(rec);
    const std::int64_t d = rec.degree();
    if (static_cast<std::int64_t>(initial.size()) < d)
        throw std::invalid_argument("run_recurrence: initial segment shorter than the degree");
    std::vector<mpz_class> s(initial.begin(), initial.begin() + d);
    s.reserve(static_cast<std::size_t>(std::max(N + 1, d)));
    for (std::int64_t n = d; n <= N; ++n) {
        mpz_class acc = 0;
        for (const auto& [lag, sign] : rec.terms) {
            if (sign > 0)
                acc += s[static_cast<std::size_t>(n - lag)];
            else
                acc -= s[static_cast<std::size_t>(n - lag)];
        }
        s.push_back(std::move(acc));
    }
    if (N + 1 < static_cast<std::int64_t>(s.size())) s.resize(static_cast<std::size_t>(N) + 1);
    return s;
}

std::pair<std::vector<mpz_class>, std::vector<mpz_class>> bounding_sequences(std::int64_t N) {
    if (N < 26) throw std::invalid_argument("bounding_sequences: need N >= 26");
    const std::vector<mpz_class> c2 = c2_by_recurrence(N);
    return {run_recurrence(upper_recurrence(), c2, N),
            run_recurrence(lower_recurrence(), c2, N)};
}

double eval_poly(const IntSeries& poly, double x) {
    double acc = 0.0;
    for (std::int64_t i = poly.trunc(); i >= 0; --i)
        acc = acc * x + poly.coeff(i).get_d();
    return acc;
}

double largest_real_root(const IntSeries& poly, double lo, double hi, double tol) {
    if (!(tol > 0)) throw std::invalid_argument("largest_real_root: tol must be > 0");
    if (!(lo < hi)) throw std::invalid_argument("largest_real_root: need lo < hi");
    // locate the rightmost sign change on a fine grid, then bisect; a
    // bracket at the interval endpoints alone is not enough because the
    // degree-26 polynomial is positive at both 1 and 2
    constexpr int kGrid = 4096;
    double a = 0, b = 0, fa = 0;
    bool found = false;
    double xr = hi, fr = eval_poly(poly, hi);
    for (int i = kGrid - 1; i >= 0; --i) {
        const double xl = lo + (hi - lo) * i / kGrid;
        const double fl = eval_poly(poly, xl);
        if (fr == 0.0) return xr;
        if (fl == 0.0) return xl;
        if (fl * fr < 0) {
            a = xl;
            b = xr;
            fa = fl;
            found = true;
            break;
        }
        xr = xl;
        fr = fl;
    }
    if (!found)
        throw std::invalid_argument("largest_real_root: no sign change inside the interval");
    while (b - a > tol) {
        const double mid = 0.5 * (a + b);
        const double fm = eval_poly(poly, mid);
        if (fm == 0.0) return mid;
        if (fa * fm < 0) {
            b = mid;
        } else {
            a = mid;
            fa = fm;
        }
    }
    return 0.5 * (a + b);
}

double RatioInterval::lo_double() const {
    return std::nextafter(lo.get_d(), -1.0 / 0.0);
}

double RatioInterval::hi_double() const {
    return std::nextafter(std::nextafter(hi.get_d(), 1.0 / 0.0), 1.0 / 0.0);
}

RatioInterval growth_ratio(std::span<const mpz_class> seq, std::int64_t n0, std::int64_t n1) {
    if (n0 >= n1) throw std::invalid_argument("growth_ratio: empty window");
    if (n1 >= static_cast<std::int64_t>(seq.size()))
        throw std::invalid_argument("growth_ratio: window exceeds the sequence");
    RatioInterval out;
    bool first = true;
    for (std::int64_t n = n0; n < n1; ++n) {
        const mpz_class& den = seq[static_cast<std::size_t>(n)];
        const mpz_class& num = seq[static_cast<std::size_t>(n + 1)];
        if (den <= 0 || num <= 0)
            throw std::invalid_argument("growth_ratio: sequence must be positive on the window");
        mpq_class r(num, den);
        r.canonicalize();
        if (first || r < out.lo) out.lo = r;
        if (first || r > out.hi) out.hi = r;
        first = false;
    }
    return out;
}

std::vector<mpz_class> pentagonal_compositions(std::int64_t N) {
    if (N < 0) throw std::invalid_argument("pentagonal_compositions: N must be >= 0");
    const PentagonalTable t = pentagonal_table(N);
    std::vector<mpz_class> c(static_cast<std::size_t>(N) + 1);
    c[0] = 1;
    for (std::int64_t n = 1; n <= N; ++n) {
        mpz_class acc = 0;
        for (std::int64_t g : t.exponents) {
            if (g > n) break;
            acc += c[static_cast<std::size_t>(n - g)];
        }
        c[static_cast<std::size_t>(n)] = std::move(acc);
    }
    return c;
}

}  // namespace falsetheta
