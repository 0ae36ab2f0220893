#include "falsetheta/theta.hpp"

#include <stdexcept>

namespace falsetheta {

namespace {

// C(x,2) = x(x-1)/2, valid as a polynomial for any integer x.
std::int64_t binom2(std::int64_t x) { return x * (x - 1) / 2; }

int sign_pow(int s, std::int64_t e) { return (s == -1 && (e & 1)) ? -1 : 1; }

}  // namespace

void validate(const ThetaSpec& spec) {
    if (spec.sign_a != 1 && spec.sign_a != -1)
        throw std::invalid_argument("ThetaSpec: sign_a must be +-1");
    if (spec.sign_b != 1 && spec.sign_b != -1)
        throw std::invalid_argument("ThetaSpec: sign_b must be +-1");
    if (spec.exp_a < 0 || spec.exp_b < 0)
        throw std::invalid_argument("ThetaSpec: exponents must be non-negative");
    if (spec.exp_a + spec.exp_b <= 0)
        throw std::invalid_argument("ThetaSpec: need a + b > 0, the bilateral sum "
                                    "diverges as a formal series otherwise");
}

namespace {

IntSeries bilateral_sum(const ThetaSpec& spec, std::int64_t trunc, bool subtract_backward) {
    validate(spec);
    const std::int64_t ea = spec.exp_a, eb = spec.exp_b;
    IntSeries out(trunc);
    // forward direction: exponent nondecreasing from n=0, strictly
    // increasing from n=1, so the first overflow past n>=1 ends it
    for (std::int64_t n = 0;; ++n) {
        const std::int64_t e = ea * binom2(n + 1) + eb * binom2(n);
        if (e > trunc) {
            if (n >= 1) break;
            continue;
        }
        const int sg = sign_pow(spec.sign_a, binom2(n + 1)) * sign_pow(spec.sign_b, binom2(n));
        out.add(e, sg);
    }
    // backward direction, n = -m: exponent ea*C(m,2) + eb*C(m+1,2),
    // strictly increasing in m
    for (std::int64_t m = 1;; ++m) {
        const std::int64_t e = ea * binom2(m) + eb * binom2(m + 1);
        if (e > trunc) break;
        int sg = sign_pow(spec.sign_a, binom2(m)) * sign_pow(spec.sign_b, binom2(m + 1));
        if (subtract_backward) sg = -sg;
        out.add(e, sg);
    }
    return out;
}

}  // namespace

IntSeries theta_f(const ThetaSpec& spec, std::int64_t trunc) {
    if (spec.kind != ThetaKind::theta)
        throw std::invalid_argument("theta_f: spec kind must be theta");
    return bilateral_sum(spec, trunc, false);
}

IntSeries false_theta_psi(const ThetaSpec& spec, std::int64_t trunc) {
    if (spec.kind != ThetaKind::false_theta)
        throw std::invalid_argument("false_theta_psi: spec kind must be false_theta");
    return bilateral_sum(spec, trunc, true);
}

IntSeries expand(const ThetaSpec& spec, std::int64_t trunc) {
    return spec.kind == ThetaKind::theta ? theta_f(spec, trunc)
                                         : false_theta_psi(spec, trunc);
}

IntSeries pochhammer(SignedPower base, SignedPower step,
                     std::optional<std::int64_t> n_factors, std::int64_t trunc) {
    if (base.exp < 0 || step.exp < 0)
        throw std::invalid_argument("pochhammer: negative exponent");
    if (!n_factors && step.exp < 1)
        throw std::invalid_argument("pochhammer: infinite product needs step exponent >= 1");
    if (n_factors && *n_factors < 0)
        throw std::invalid_argument("pochhammer: negative factor count");

    // in-place product of (1 - base * step^i)
    std::vector<mpz_class> acc(static_cast<std::size_t>(trunc) + 1);
    acc[0] = 1;
    int sg = base.sign;
    for (std::int64_t i = 0;; ++i) {
        if (n_factors && i >= *n_factors) break;
        const std::int64_t e = base.exp + i * step.exp;
        if (!n_factors && e > trunc) break;
        if (e <= trunc) {
            // multiply by (1 - sg q^e): walk down so each source is pre-update
            if (e == 0) {
                // constant factor (1 - sg)
                const int c = 1 - sg;
                for (auto& v : acc) v *= c;
            } else {
                for (std::int64_t x = trunc; x >= e; --x) {
                    if (sg == 1)
                        acc[static_cast<std::size_t>(x)] -= acc[static_cast<std::size_t>(x - e)];
                    else
                        acc[static_cast<std::size_t>(x)] += acc[static_cast<std::size_t>(x - e)];
                }
            }
        }
        sg *= step.sign;
    }
    IntSeries out(trunc);
    for (std::int64_t n = 0; n <= trunc; ++n) out.set(n, std::move(acc[static_cast<std::size_t>(n)]));
    return out;
}

IntSeries pochhammer(int base_sign, std::int64_t base_exp, std::int64_t step,
                     std::optional<std::int64_t> n_factors, std::int64_t trunc) {
    return pochhammer(SignedPower{base_sign, base_exp}, SignedPower{1, step}, n_factors, trunc);
}

IntSeries jtp_product(const ThetaSpec& spec, std::int64_t trunc) {
    if (spec.kind != ThetaKind::theta)
        throw std::invalid_argument("jtp_product: triple product applies to theta specs");
    validate(spec);
    const SignedPower minus_a{-spec.sign_a, spec.exp_a};
    const SignedPower minus_b{-spec.sign_b, spec.exp_b};
    const SignedPower ab{spec.sign_a * spec.sign_b, spec.exp_a + spec.exp_b};
    IntSeries out = pochhammer(minus_a, ab, std::nullopt, trunc);
    out = mul(out, pochhammer(minus_b, ab, std::nullopt, trunc));
    out = mul(out, pochhammer(ab, ab, std::nullopt, trunc));
    return out;
}

namespace {

void validate(const EtaProductSpec& spec) {
    if (spec.prefactor_exp < 0)
        throw std::invalid_argument("EtaProductSpec: prefactor exponent must be >= 0");
    for (std::size_t i = 0; i < spec.factors.size(); ++i) {
        if (spec.factors[i].k < 1)
            throw std::invalid_argument("EtaProductSpec: factor index must be positive");
        if (spec.factors[i].e == 0)
            throw std::invalid_argument("EtaProductSpec: factor exponent must be nonzero");
        for (std::size_t j = 0; j < i; ++j)
            if (spec.factors[j].k == spec.factors[i].k)
                throw std::invalid_argument("EtaProductSpec: duplicate factor f_" +
                                            std::to_string(spec.factors[i].k));
    }
}

}  // namespace

IntSeries eta_product(const EtaProductSpec& spec, std::int64_t trunc) {
    validate(spec);
    IntSeries out = IntSeries::one(trunc);
    for (const auto& [k, e] : spec.factors) {
        IntSeries fk = pochhammer(1, k, k, std::nullopt, trunc);
        if (e < 0) fk = reciprocal(fk);
        out = mul(out, power(fk, e < 0 ? -e : e));
    }
    if (spec.prefactor_exp > 0) out = shift_up(out, spec.prefactor_exp);
    return out;
}

IntSeries gaussian_binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw std::invalid_argument("gaussian_binomial: n must be >= 0");
    if (k < 0 || k > n) return IntSeries(0);  // zero polynomial
    const std::int64_t deg = k * (n - k);
    if (deg == 0) return IntSeries::one(0);
    // q-Pascal: [i j] = [i-1 j-1] + q^j [i-1 j], row by row
    using Poly = std::vector<mpz_class>;
    std::vector<Poly> row(static_cast<std::size_t>(k) + 1);
    row[0] = {1};
    for (std::int64_t i = 1; i <= n; ++i) {
        const std::int64_t jhi = std::min(i, k);
        for (std::int64_t j = jhi; j >= 1; --j) {
            Poly next = (j <= i - 1) ? row[static_cast<std::size_t>(j)] : Poly{};
            // shift by q^j
            if (!next.empty()) {
                next.insert(next.begin(), static_cast<std::size_t>(j), mpz_class(0));
            }
            const Poly& left = row[static_cast<std::size_t>(j - 1)];
            if (next.size() < left.size()) next.resize(left.size());
            for (std::size_t x = 0; x < left.size(); ++x) next[x] += left[x];
            row[static_cast<std::size_t>(j)] = std::move(next);
        }
    }
    IntSeries out(deg);
    const Poly& p = row[static_cast<std::size_t>(k)];
    for (std::size_t x = 0; x < p.size(); ++x)
        out.set(static_cast<std::int64_t>(x), p[x]);
    return out;
}

IntSeries partition_gf(std::int64_t trunc) {
    return reciprocal(pochhammer(1, 1, 1, std::nullopt, trunc));
}

}  // namespace falsetheta
