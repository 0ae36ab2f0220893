#include "falsetheta/int_series.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace falsetheta {

namespace {

std::int64_t common_trunc(const IntSeries& a, const IntSeries& b) {
    return std::min(a.trunc(), b.trunc());
}

}  // namespace

IntSeries::IntSeries(std::int64_t trunc) : trunc_(trunc) {
    if (trunc < 0) throw std::invalid_argument("IntSeries: trunc must be >= 0");
    coeffs_.resize(static_cast<std::size_t>(trunc) + 1);
}

IntSeries IntSeries::one(std::int64_t trunc) {
    IntSeries s(trunc);
    s.coeffs_[0] = 1;
    return s;
}

const mpz_class& IntSeries::coeff(std::int64_t n) const {
    if (n < 0 || n > trunc_)
        throw std::out_of_range("IntSeries::coeff: exponent " + std::to_string(n) +
                                " outside certified range 0.." + std::to_string(trunc_));
    return coeffs_[static_cast<std::size_t>(n)];
}

void IntSeries::set(std::int64_t n, mpz_class v) {
    if (n < 0 || n > trunc_) throw std::out_of_range("IntSeries::set: exponent out of range");
    coeffs_[static_cast<std::size_t>(n)] = std::move(v);
}

void IntSeries::add(std::int64_t n, const mpz_class& v) {
    if (n < 0 || n > trunc_) throw std::out_of_range("IntSeries::add: exponent out of range");
    coeffs_[static_cast<std::size_t>(n)] += v;
}

bool IntSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const mpz_class& c) { return c == 0; });
}

std::vector<std::int64_t> IntSeries::support() const {
    std::vector<std::int64_t> out;
    for (std::int64_t n = 0; n <= trunc_; ++n)
        if (coeffs_[static_cast<std::size_t>(n)] != 0) out.push_back(n);
    return out;
}

IntSeries make_series(std::span<const std::pair<std::int64_t, mpz_class>> pairs,
                      std::int64_t trunc) {
    IntSeries s(trunc);
    for (const auto& [e, c] : pairs) {
        if (e < 0)
            throw std::invalid_argument("make_series: negative exponent " + std::to_string(e));
        if (e <= trunc) s.add(e, c);
    }
    return s;
}

IntSeries make_series(std::initializer_list<std::pair<std::int64_t, mpz_class>> pairs,
                      std::int64_t trunc) {
    return make_series(std::span<const std::pair<std::int64_t, mpz_class>>(pairs.begin(), pairs.size()),
                       trunc);
}

IntSeries add(const IntSeries& a, const IntSeries& b) {
    IntSeries out(common_trunc(a, b));
    for (std::int64_t n = 0; n <= out.trunc(); ++n)
        out.set(n, a.coeff(n) + b.coeff(n));
    return out;
}

IntSeries sub(const IntSeries& a, const IntSeries& b) {
    IntSeries out(common_trunc(a, b));
    for (std::int64_t n = 0; n <= out.trunc(); ++n)
        out.set(n, a.coeff(n) - b.coeff(n));
    return out;
}

IntSeries negate(const IntSeries& s) {
    IntSeries out(s.trunc());
    for (std::int64_t n = 0; n <= s.trunc(); ++n) out.set(n, -s.coeff(n));
    return out;
}

IntSeries mul(const IntSeries& a, const IntSeries& b) {
    const std::int64_t t = common_trunc(a, b);
    IntSeries out(t);
    // addmul into the result; skipping zero coefficients matters because
    // theta-type factors are quadratically sparse.
    std::vector<mpz_class> acc(static_cast<std::size_t>(t) + 1);
    for (std::int64_t i = 0; i <= t; ++i) {
        const mpz_class& ai = a.coeff(i);
        if (ai == 0) continue;
        const std::int64_t jmax = t - i;
        for (std::int64_t j = 0; j <= jmax; ++j) {
            const mpz_class& bj = b.coeff(j);
            if (bj == 0) continue;
            mpz_addmul(acc[static_cast<std::size_t>(i + j)].get_mpz_t(),
                       ai.get_mpz_t(), bj.get_mpz_t());
        }
    }
    for (std::int64_t n = 0; n <= t; ++n) out.set(n, std::move(acc[static_cast<std::size_t>(n)]));
    return out;
}

IntSeries mul_binomial(const IntSeries& s, const mpz_class& c, std::int64_t e) {
    if (e < 0) throw std::invalid_argument("mul_binomial: negative exponent");
    IntSeries out = s;
    if (c == 0 || e > s.trunc()) return out;
    for (std::int64_t n = s.trunc(); n >= e; --n) {
        mpz_class v = out.coeff(n) + c * s.coeff(n - e);
        out.set(n, std::move(v));
    }
    return out;
}

IntSeries divide_binomial(const IntSeries& s, const mpz_class& c, std::int64_t e) {
    if (e < 1) throw std::invalid_argument("divide_binomial: exponent must be >= 1");
    IntSeries d = s;
    for (std::int64_t x = e; x <= s.trunc(); ++x) {
        mpz_class v = d.coeff(x) - c * d.coeff(x - e);
        d.set(x, std::move(v));
    }
    return d;
}

IntSeries restrict_trunc(const IntSeries& s, std::int64_t trunc) {
    if (trunc > s.trunc()) throw std::invalid_argument("restrict_trunc: cannot grow");
    IntSeries out(trunc);
    for (std::int64_t n = 0; n <= trunc; ++n) out.set(n, s.coeff(n));
    return out;
}

IntSeries extend_polynomial(const IntSeries& s, std::int64_t trunc) {
    if (trunc < s.trunc()) return restrict_trunc(s, trunc);
    IntSeries out(trunc);
    for (std::int64_t n = 0; n <= s.trunc(); ++n) out.set(n, s.coeff(n));
    return out;
}

IntSeries power(const IntSeries& s, std::int64_t e) {
    if (e < 0) throw std::invalid_argument("power: negative exponent");
    IntSeries result = IntSeries::one(s.trunc());
    IntSeries base = s;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return result;
}

IntSeries reciprocal(const IntSeries& s) {
    const mpz_class& s0 = s.coeff(0);
    if (s0 != 1 && s0 != -1)
        throw std::invalid_argument(
            "reciprocal: constant coefficient must be +1 or -1, got " + s0.get_str());
    const std::int64_t t = s.trunc();
    // Gather the nonzero tail once; the reciprocal recurrence then costs
    // O(trunc * nnz) which is what makes theta denominators cheap.
    std::vector<std::pair<std::int64_t, const mpz_class*>> tail;
    for (std::int64_t k = 1; k <= t; ++k)
        if (s.coeff(k) != 0) tail.emplace_back(k, &s.coeff(k));

    IntSeries r(t);
    r.set(0, s0);
    mpz_class acc;
    for (std::int64_t n = 1; n <= t; ++n) {
        acc = 0;
        for (const auto& [k, sk] : tail) {
            if (k > n) break;
            mpz_addmul(acc.get_mpz_t(), sk->get_mpz_t(), r.coeff(n - k).get_mpz_t());
        }
        r.set(n, s0 == 1 ? mpz_class(-acc) : acc);
    }
    return r;
}

IntSeries substitute_qk(const IntSeries& s, std::int64_t k) {
    return substitute_qk(s, k, s.trunc());
}

IntSeries substitute_qk(const IntSeries& s, std::int64_t k, std::int64_t out_trunc) {
    if (k < 1) throw std::invalid_argument("substitute_qk: k must be >= 1");
    if (out_trunc / k > s.trunc())
        throw std::invalid_argument("substitute_qk: output truncation needs source beyond its trunc");
    IntSeries out(out_trunc);
    for (std::int64_t n = 0; n * k <= out_trunc; ++n) out.set(n * k, s.coeff(n));
    return out;
}

IntSeries extract_progression(const IntSeries& s, std::int64_t A, std::int64_t B) {
    if (A < 1) throw std::invalid_argument("extract_progression: A must be >= 1");
    if (B < 0 || B >= A) throw std::invalid_argument("extract_progression: need 0 <= B < A");
    if (B > s.trunc())
        throw std::invalid_argument("extract_progression: B exceeds series truncation");
    IntSeries out((s.trunc() - B) / A);
    for (std::int64_t n = 0; n <= out.trunc(); ++n) out.set(n, s.coeff(A * n + B));
    return out;
}

IntSeries shift_up(const IntSeries& s, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("shift_up: negative shift");
    IntSeries out(s.trunc());
    for (std::int64_t n = k; n <= s.trunc(); ++n) out.set(n, s.coeff(n - k));
    return out;
}

IntSeries scale(const IntSeries& s, const mpz_class& c) {
    IntSeries out(s.trunc());
    for (std::int64_t n = 0; n <= s.trunc(); ++n) out.set(n, c * s.coeff(n));
    return out;
}

CongruenceResult congruent(const IntSeries& a, const IntSeries& b,
                           const mpz_class& m, std::int64_t upto) {
    if (m < 2) throw std::invalid_argument("congruent: modulus must be >= 2");
    if (upto > a.trunc() || upto > b.trunc())
        throw std::invalid_argument("congruent: upto exceeds a truncation; refusing to compare "
                                    "uncertified coefficients");
    mpz_class d;
    for (std::int64_t n = 0; n <= upto; ++n) {
        d = a.coeff(n) - b.coeff(n);
        if (mpz_divisible_p(d.get_mpz_t(), m.get_mpz_t()) == 0)
            return {false, n};
    }
    return {true, std::nullopt};
}

CongruenceResult equal_upto(const IntSeries& a, const IntSeries& b, std::int64_t upto) {
    if (upto > a.trunc() || upto > b.trunc())
        throw std::invalid_argument("equal_upto: upto exceeds a truncation");
    for (std::int64_t n = 0; n <= upto; ++n)
        if (a.coeff(n) != b.coeff(n)) return {false, n};
    return {true, std::nullopt};
}

std::string to_string(const IntSeries& s, std::size_t max_terms) {
    std::ostringstream os;
    std::size_t printed = 0;
    for (std::int64_t n = 0; n <= s.trunc(); ++n) {
        const mpz_class& c = s.coeff(n);
        if (c == 0) continue;
        if (printed == max_terms) {
            os << " + ...";
            break;
        }
        mpz_class a = abs(c);
        if (printed == 0) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1 || n == 0) os << a.get_str();
        if (n >= 1) {
            if (a != 1) os << "*";
            os << "q";
            if (n > 1) os << "^" << n;
        }
        ++printed;
    }
    if (printed == 0) os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntSeries& s) {
    return os << to_string(s);
}

}  // namespace falsetheta
