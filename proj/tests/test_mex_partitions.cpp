#include <doctest.h>

#include "falsetheta/mex_partitions.hpp"
#include "falsetheta/theta.hpp"
#include "oracles.hpp"

using namespace falsetheta;

TEST_CASE("partition enumeration counts match the Euler recurrence") {
    const auto p = falsetheta::test::euler_p_table(40);
    for (std::int64_t n = 0; n <= 40; ++n) {
        std::int64_t count = 0;
        for_each_partition(n, [&](std::span<const std::int64_t>) { ++count; });
        CHECK(count == p[static_cast<std::size_t>(n)]);
    }
    // the empty partition is visited exactly once
    std::int64_t zero_count = 0;
    for_each_partition(0, [&](std::span<const std::int64_t> parts) {
        CHECK(parts.empty());
        ++zero_count;
    });
    CHECK(zero_count == 1);
}

TEST_CASE("Partition type validates its invariants") {
    const Partition p = Partition::of({4, 3, 1});
    CHECK(p.n == 8);
    CHECK(p.mex() == 2);
    CHECK(p.rank() == 1);
    CHECK(Partition::of({}).rank() == 0);
    CHECK(Partition::of({}).mex() == 1);
    CHECK(Partition::of({2, 2}).rank() == 0);
    CHECK_THROWS_AS(Partition::of({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition::of({2, 0}), std::invalid_argument);

    const auto all5 = collect_partitions(5);
    CHECK(all5.size() == 7);
    CHECK(all5.front() == Partition::of({5}));
    CHECK(all5.back() == Partition::of({1, 1, 1, 1, 1}));
    std::int64_t rank0 = 0;
    for (const auto& part : all5)
        if (part.rank() == 0) ++rank0;
    CHECK(rank0 == rank_zero_count(5));
}

TEST_CASE("mex_of") {
    const std::vector<std::int64_t> a = {3, 2, 2, 1};
    CHECK(mex_of(a) == 4);
    const std::vector<std::int64_t> b = {2, 2};
    CHECK(mex_of(b) == 1);
    const std::vector<std::int64_t> c = {4, 3, 1};
    CHECK(mex_of(c) == 2);
    CHECK(mex_of(std::vector<std::int64_t>{}) == 1);
}

TEST_CASE("mex_count_oracle pinned values") {
    CHECK(mex_count_oracle(1, 5) == 2);   // 5 and 3+2
    CHECK(mex_count_oracle(2, 8) == 1);   // 4+3+1
    CHECK(mex_count_oracle(2, 5) == 0);
    CHECK(mex_count_oracle(2, 7) == 1);   // 3+3+1
    // the k=2, n=5 count agrees with p(5)-p(4)-p(3)+p(0) = 0
    const auto p = falsetheta::test::euler_p_table(5);
    CHECK(p[5] - p[4] - p[3] + p[0] == 0);
}

TEST_CASE("mex_gf matches the enumeration oracle") {
    for (std::int64_t k = 1; k <= 6; ++k) {
        const IntSeries gf = mex_gf(k, 45);
        for (std::int64_t n = 0; n <= 45; ++n)
            CHECK(gf.coeff(n) == mex_count_oracle(k, n));
    }
}

TEST_CASE("mex_gf support starts at its minimal exponent") {
    for (std::int64_t k = 1; k <= 6; ++k) {
        const std::int64_t min_exp = k * (k - 1) / 2 + (k + 1) * k;
        const IntSeries gf = mex_gf(k, min_exp + 10);
        for (std::int64_t n = 0; n < min_exp; ++n) CHECK(gf.coeff(n) == 0);
        CHECK(gf.coeff(min_exp) == 1);
    }
}

TEST_CASE("truncated pentagonal differences") {
    const auto p_table = partition_gf(200);
    CHECK(truncated_pentagonal_diff(1, 5, p_table.coeffs()) == 2);
    CHECK(truncated_pentagonal_diff(2, 8, p_table.coeffs()) == -1);

    // enough terms makes it the full pentagonal identity, zero for n >= 1
    for (std::int64_t n = 1; n <= 200; ++n)
        CHECK(truncated_pentagonal_diff(40, n, p_table.coeffs()) == 0);
    CHECK(truncated_pentagonal_diff(40, 0, p_table.coeffs()) == 1);
}

TEST_CASE("pentagonal differences equal signed mex counts") {
    const auto p_table = partition_gf(45);
    for (std::int64_t k = 1; k <= 4; ++k)
        for (std::int64_t n = 1; n <= 45; ++n) {
            const mpz_class want =
                (k % 2 == 1 ? 1 : -1) *
                mpz_class(static_cast<long>(mex_count_oracle(k, n)));
            CHECK(truncated_pentagonal_diff(k, n, p_table.coeffs()) == want);
        }
}

TEST_CASE("tpn theorem verifies in both displayed forms") {
    const IdentityReport r = verify_tpn_theorem(200);
    CHECK(r.verified);
    CHECK_FALSE(r.first_mismatch.has_value());

    // below M_2's minimal exponent the statement degenerates to
    // psi(-q^2,q) == (q;q)_inf
    const IdentityReport small = verify_tpn_theorem(6);
    CHECK(small.verified);
    const IntSeries lhs = false_theta_psi(ThetaSpec{ThetaKind::false_theta, -1, 2, 1, 1}, 6);
    CHECK(lhs == pochhammer(1, 1, 1, std::nullopt, 6));
}

TEST_CASE("a perturbed mex sign breaks the identity with a small witness") {
    const std::int64_t trunc = 60;
    const IntSeries lhs =
        false_theta_psi(ThetaSpec{ThetaKind::false_theta, -1, 2, 1, 1}, trunc);
    const IntSeries f1 = pochhammer(1, 1, 1, std::nullopt, trunc);
    IntSeries inner = IntSeries::one(trunc);
    inner = add(inner, scale(mex_gf(2, trunc), 2));   // sign flipped on M_2
    inner = add(inner, scale(mex_gf(4, trunc), 2));
    const auto r = equal_upto(lhs, mul(f1, inner), trunc);
    CHECK_FALSE(r.congruent);
    CHECK(*r.first_mismatch == 7);  // M_2's first coefficient
}

TEST_CASE("rank-zero counts") {
    const long expect[] = {1, 1, 0, 1, 1, 1, 1, 3, 2, 4, 4, 6, 7};
    for (std::int64_t n = 0; n <= 12; ++n) CHECK(rank_zero_count(n) == expect[n]);
}

TEST_CASE("rank_zero_check resolves the sign variant") {
    const IdentityReport r = rank_zero_check(25);
    CHECK(r.verified);
    CHECK(r.detail.find("matches the rank-0 count") != std::string::npos);
    CHECK(r.detail.find("mismatches first at exponent 1") != std::string::npos);
    CHECK(r.detail.find("parity even") != std::string::npos);
    CHECK(r.warnings == std::vector<std::string>{"rank_zero_sign"});
    CHECK_THROWS_AS(rank_zero_check(100), std::invalid_argument);
}

TEST_CASE("rank-zero parity corollary at desk scale") {
    const IntSeries p = partition_gf(60);
    for (std::int64_t n = 0; n <= 60; ++n) {
        mpz_class nonzero_rank = p.coeff(n) - rank_zero_count(n);
        CHECK(nonzero_rank % 2 == 0);
    }
}

TEST_CASE("M_2 >= M_4 shows no counterexample in the strict desk range") {
    const MexInequalityScan scan = scan_m2_m4_inequality(60);
    CHECK_FALSE(scan.first_violation.has_value());
}

TEST_CASE("the first M_2 < M_4 violation sits at n = 1101") {
    const MexInequalityScan scan = scan_m2_m4_inequality(1200);
    REQUIRE(scan.first_violation.has_value());
    CHECK(*scan.first_violation == 1101);
    CHECK(scan.violation_difference == mpz_class("-5761115805496986543154328929"));
}

TEST_CASE("(q;q)_inf / psi(-q^2,q) has nonnegative coefficients") {
    const std::int64_t trunc = 2000;
    const IntSeries quotient =
        mul(pochhammer(1, 1, 1, std::nullopt, trunc),
            reciprocal(false_theta_psi(ThetaSpec{ThetaKind::false_theta, -1, 2, 1, 1},
                                       trunc)));
    for (std::int64_t n = 0; n <= trunc; ++n) {
        CHECK(quotient.coeff(n) >= 0);
        // zero exactly below M_2's first exponent, positive from there on
        if (n >= 1 && n <= 6)
            CHECK(quotient.coeff(n) == 0);
        else if (n >= 7)
            CHECK(quotient.coeff(n) > 0);
    }
}
