#include "falsetheta/mod_series.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

namespace falsetheta {

namespace {

constexpr std::uint64_t kModulusCap = 1ull << 63;

void check_modulus(std::uint64_t m) {
    if (m < 2 || m >= kModulusCap)
        throw std::invalid_argument("ModSeries: modulus must satisfy 2 <= m < 2^63");
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

void check_same_modulus(const ModSeries& a, const ModSeries& b) {
    if (a.modulus() != b.modulus())
        throw std::invalid_argument("ModSeries: mismatched moduli " +
                                    std::to_string(a.modulus()) + " vs " +
                                    std::to_string(b.modulus()));
}

}  // namespace

ModSeries::ModSeries(std::int64_t trunc, std::uint64_t modulus)
    : trunc_(trunc), modulus_(modulus) {
    if (trunc < 0) throw std::invalid_argument("ModSeries: trunc must be >= 0");
    check_modulus(modulus);
    coeffs_.resize(static_cast<std::size_t>(trunc) + 1, 0);
}

ModSeries ModSeries::one(std::int64_t trunc, std::uint64_t modulus) {
    ModSeries s(trunc, modulus);
    s.coeffs_[0] = 1;
    return s;
}

std::uint64_t ModSeries::coeff(std::int64_t n) const {
    if (n < 0 || n > trunc_)
        throw std::out_of_range("ModSeries::coeff: exponent outside certified range");
    return coeffs_[static_cast<std::size_t>(n)];
}

void ModSeries::set(std::int64_t n, std::uint64_t r) {
    if (n < 0 || n > trunc_) throw std::out_of_range("ModSeries::set: exponent out of range");
    if (r >= modulus_) throw std::invalid_argument("ModSeries::set: residue not reduced");
    coeffs_[static_cast<std::size_t>(n)] = r;
}

bool ModSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](std::uint64_t c) { return c == 0; });
}

ModSeries reduce_mod(const IntSeries& s, std::uint64_t m) {
    check_modulus(m);
    ModSeries out(s.trunc(), m);
    const mpz_class mm = mpz_class(static_cast<unsigned long>(m));
    mpz_class r;
    for (std::int64_t n = 0; n <= s.trunc(); ++n) {
        mpz_fdiv_r(r.get_mpz_t(), s.coeff(n).get_mpz_t(), mm.get_mpz_t());
        out.set(n, mpz_get_ui(r.get_mpz_t()));
    }
    return out;
}

std::optional<std::uint64_t> mod_inverse(std::uint64_t a, std::uint64_t m) {
    // extended Euclid over signed 128-bit to dodge overflow near 2^63
    __int128 t = 0, newt = 1;
    __int128 r = m, newr = a % m;
    while (newr != 0) {
        __int128 q = r / newr;
        t = std::exchange(newt, t - q * newt);
        r = std::exchange(newr, r - q * newr);
    }
    if (r != 1) return std::nullopt;
    if (t < 0) t += m;
    return static_cast<std::uint64_t>(t);
}

ModSeries add(const ModSeries& a, const ModSeries& b) {
    check_same_modulus(a, b);
    const std::uint64_t m = a.modulus();
    ModSeries out(std::min(a.trunc(), b.trunc()), m);
    for (std::int64_t n = 0; n <= out.trunc(); ++n) {
        std::uint64_t v = a.coeff(n) + b.coeff(n);
        out.set(n, v >= m ? v - m : v);
    }
    return out;
}

ModSeries sub(const ModSeries& a, const ModSeries& b) {
    check_same_modulus(a, b);
    const std::uint64_t m = a.modulus();
    ModSeries out(std::min(a.trunc(), b.trunc()), m);
    for (std::int64_t n = 0; n <= out.trunc(); ++n) {
        std::uint64_t av = a.coeff(n), bv = b.coeff(n);
        out.set(n, av >= bv ? av - bv : av + m - bv);
    }
    return out;
}

ModSeries mul(const ModSeries& a, const ModSeries& b) {
    check_same_modulus(a, b);
    const std::uint64_t m = a.modulus();
    const std::int64_t t = std::min(a.trunc(), b.trunc());
    ModSeries out(t, m);
    const auto av = a.coeffs();
    const auto bv = b.coeffs();
    if (m - 1 <= std::numeric_limits<std::uint32_t>::max()) {
        // products fit in 64 bits; reduce in batches instead of per term
        // (batch leaves room for the residue carried over a reduction)
        const std::uint64_t maxprod = (m - 1) * (m - 1);
        const std::uint64_t batch =
            (std::numeric_limits<std::uint64_t>::max() - (m - 1)) / maxprod;
        for (std::int64_t n = 0; n <= t; ++n) {
            std::uint64_t acc = 0, cnt = 0;
            for (std::int64_t k = 0; k <= n; ++k) {
                acc += av[static_cast<std::size_t>(k)] * bv[static_cast<std::size_t>(n - k)];
                if (++cnt == batch) {
                    acc %= m;
                    cnt = 0;
                }
            }
            out.set(n, acc % m);
        }
    } else {
        for (std::int64_t n = 0; n <= t; ++n) {
            std::uint64_t acc = 0;
            for (std::int64_t k = 0; k <= n; ++k) {
                acc += mulmod(av[static_cast<std::size_t>(k)], bv[static_cast<std::size_t>(n - k)], m);
                if (acc >= m) acc -= m;
            }
            out.set(n, acc);
        }
    }
    return out;
}

ModSeries power(const ModSeries& s, std::int64_t e) {
    if (e < 0) throw std::invalid_argument("power: negative exponent");
    ModSeries result = ModSeries::one(s.trunc(), s.modulus());
    ModSeries base = s;
    while (e > 0) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (e > 0) base = mul(base, base);
    }
    return result;
}

ModSeries reciprocal(const ModSeries& s) {
    const std::uint64_t m = s.modulus();
    const auto inv0 = mod_inverse(s.coeff(0), m);
    if (!inv0)
        throw std::invalid_argument("reciprocal: constant coefficient " +
                                    std::to_string(s.coeff(0)) + " not invertible mod " +
                                    std::to_string(m));
    const std::int64_t t = s.trunc();
    std::vector<std::pair<std::int64_t, std::uint64_t>> tail;
    for (std::int64_t k = 1; k <= t; ++k)
        if (s.coeff(k) != 0) tail.emplace_back(k, s.coeff(k));

    ModSeries r(t, m);
    r.set(0, *inv0);
    const auto rv = r.coeffs();
    for (std::int64_t n = 1; n <= t; ++n) {
        std::uint64_t acc = 0;
        for (const auto& [k, sk] : tail) {
            if (k > n) break;
            acc += mulmod(sk, rv[static_cast<std::size_t>(n - k)], m);
            if (acc >= m) acc -= m;
        }
        acc = mulmod(acc, *inv0, m);
        r.set(n, acc == 0 ? 0 : m - acc);
    }
    return r;
}

ModSeries substitute_qk(const ModSeries& s, std::int64_t k) {
    if (k < 1) throw std::invalid_argument("substitute_qk: k must be >= 1");
    ModSeries out(s.trunc(), s.modulus());
    for (std::int64_t n = 0; n * k <= s.trunc(); ++n) out.set(n * k, s.coeff(n));
    return out;
}

ModSeries extract_progression(const ModSeries& s, std::int64_t A, std::int64_t B) {
    if (A < 1) throw std::invalid_argument("extract_progression: A must be >= 1");
    if (B < 0 || B >= A) throw std::invalid_argument("extract_progression: need 0 <= B < A");
    if (B > s.trunc())
        throw std::invalid_argument("extract_progression: B exceeds series truncation");
    ModSeries out((s.trunc() - B) / A, s.modulus());
    for (std::int64_t n = 0; n <= out.trunc(); ++n) out.set(n, s.coeff(A * n + B));
    return out;
}

ModSeries shift_up(const ModSeries& s, std::int64_t k) {
    if (k < 0) throw std::invalid_argument("shift_up: negative shift");
    ModSeries out(s.trunc(), s.modulus());
    for (std::int64_t n = k; n <= s.trunc(); ++n) out.set(n, s.coeff(n - k));
    return out;
}

namespace {

void check_divides(std::uint64_t m, std::uint64_t series_modulus) {
    if (series_modulus % m != 0)
        throw std::invalid_argument(
            "congruent: comparison modulus " + std::to_string(m) +
            " does not divide the series modulus " + std::to_string(series_modulus) +
            "; residues mod m are not certified");
}

std::uint64_t residue_of(const IntSeries& s, std::int64_t n, const mpz_class& mm) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), s.coeff(n).get_mpz_t(), mm.get_mpz_t());
    return mpz_get_ui(r.get_mpz_t());
}

}  // namespace

CongruenceResult congruent(const ModSeries& a, const ModSeries& b,
                           std::uint64_t m, std::int64_t upto) {
    check_modulus(m);
    check_divides(m, a.modulus());
    check_divides(m, b.modulus());
    if (upto > a.trunc() || upto > b.trunc())
        throw std::invalid_argument("congruent: upto exceeds a truncation");
    for (std::int64_t n = 0; n <= upto; ++n)
        if (a.coeff(n) % m != b.coeff(n) % m) return {false, n};
    return {true, std::nullopt};
}

CongruenceResult congruent(const IntSeries& a, const ModSeries& b,
                           std::uint64_t m, std::int64_t upto) {
    check_modulus(m);
    check_divides(m, b.modulus());
    if (upto > a.trunc() || upto > b.trunc())
        throw std::invalid_argument("congruent: upto exceeds a truncation");
    const mpz_class mm = mpz_class(static_cast<unsigned long>(m));
    for (std::int64_t n = 0; n <= upto; ++n)
        if (residue_of(a, n, mm) != b.coeff(n) % m) return {false, n};
    return {true, std::nullopt};
}

CongruenceResult congruent(const ModSeries& a, const IntSeries& b,
                           std::uint64_t m, std::int64_t upto) {
    auto r = congruent(b, a, m, upto);
    return r;
}

}  // namespace falsetheta
