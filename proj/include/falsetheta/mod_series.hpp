#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "falsetheta/int_series.hpp"

namespace falsetheta {

/// Dense truncated power series over Z/m, 2 <= m < 2^63.  Residues are
/// stored in [0, m); reduction from integers uses floored division so
/// negative coefficients land in the canonical range.  Congruence scans at
/// truncation 1e4..1e5 run here instead of dragging big integers around.
class ModSeries {
public:
    ModSeries(std::int64_t trunc, std::uint64_t modulus);

    static ModSeries one(std::int64_t trunc, std::uint64_t modulus);

    std::int64_t trunc() const noexcept { return trunc_; }
    std::uint64_t modulus() const noexcept { return modulus_; }

    std::uint64_t coeff(std::int64_t n) const;
    void set(std::int64_t n, std::uint64_t r);

    std::span<const std::uint64_t> coeffs() const noexcept { return coeffs_; }

    bool is_zero() const;

    friend bool operator==(const ModSeries&, const ModSeries&) = default;

private:
    std::int64_t trunc_;
    std::uint64_t modulus_;
    std::vector<std::uint64_t> coeffs_;
};

/// Coefficientwise reduction into [0, m).
ModSeries reduce_mod(const IntSeries& s, std::uint64_t m);

std::optional<std::uint64_t> mod_inverse(std::uint64_t a, std::uint64_t m);

ModSeries add(const ModSeries& a, const ModSeries& b);
ModSeries sub(const ModSeries& a, const ModSeries& b);
ModSeries mul(const ModSeries& a, const ModSeries& b);
ModSeries power(const ModSeries& s, std::int64_t e);

/// Requires the constant coefficient to be invertible mod m.
ModSeries reciprocal(const ModSeries& s);

ModSeries substitute_qk(const ModSeries& s, std::int64_t k);
ModSeries extract_progression(const ModSeries& s, std::int64_t A, std::int64_t B);
ModSeries shift_up(const ModSeries& s, std::int64_t k);

/// Comparisons mod m across the two representations.  A ModSeries operand
/// only certifies residues mod its own modulus, so m must divide it.
CongruenceResult congruent(const ModSeries& a, const ModSeries& b,
                           std::uint64_t m, std::int64_t upto);
CongruenceResult congruent(const IntSeries& a, const ModSeries& b,
                           std::uint64_t m, std::int64_t upto);
CongruenceResult congruent(const ModSeries& a, const IntSeries& b,
                           std::uint64_t m, std::int64_t upto);

}  // namespace falsetheta
