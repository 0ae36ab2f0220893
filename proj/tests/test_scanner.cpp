#include <doctest.h>

#include <algorithm>

#include "falsetheta/identities.hpp"
#include "falsetheta/scanner.hpp"

using namespace falsetheta;

namespace {

bool covered_by(const std::vector<Progression>& found, std::int64_t A, std::int64_t B) {
    return std::any_of(found.begin(), found.end(), [&](const Progression& p) {
        return A % p.A == 0 && B % p.A == p.B;
    });
}

bool holds_directly(const ModSeries& s, std::int64_t A, std::int64_t B) {
    for (std::int64_t i = B; i <= s.trunc(); i += A)
        if (s.coeff(i) != 0) return false;
    return true;
}

}  // namespace

TEST_CASE("scan of c_5 mod 2") {
    const ModSeries c5 = c_t_series_mod(5, 10000, 2);
    const auto found = scan_progressions(c5, 16);
    const std::vector<std::pair<std::int64_t, std::int64_t>> expected = {
        {8, 5}, {8, 7}, {10, 5}, {10, 9}, {14, 7}, {14, 9}, {14, 13}, {16, 9}};
    REQUIRE(found.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(found[i].A == expected[i].first);
        CHECK(found[i].B == expected[i].second);
        CHECK(found[i].modulus == 2);
    }

    const auto found10 = scan_progressions(c5, 10);
    REQUIRE(found10.size() == 4);
    CHECK(found10[2] == Progression{10, 5, 2, 9995});
    CHECK(found10[3] == Progression{10, 9, 2, 9999});
}

TEST_CASE("scan soundness: every reported progression re-verifies") {
    const ModSeries c5 = c_t_series_mod(5, 10000, 2);
    for (const auto& p : scan_progressions(c5, 16)) {
        CHECK(holds_directly(c5, p.A, p.B));
        CHECK(p.verified_upto <= c5.trunc());
        CHECK((p.verified_upto - p.B) % p.A == 0);
    }
}

TEST_CASE("scan guards") {
    const ModSeries c5 = c_t_series_mod(5, 200, 2);
    CHECK_THROWS_WITH_AS(scan_progressions(c5, 16), doctest::Contains("need at least"),
                         std::invalid_argument);

    ModSeries zero(10000, 2);
    CHECK_THROWS_AS(scan_progressions(zero, 4), std::invalid_argument);
}

TEST_CASE("quadform residue analysis") {
    const ResidueAnalysis mod5 = quadform_residue_analysis(QuadFormSpec{3, -2}, 5);
    CHECK(mod5.attained == std::vector<std::uint64_t>{0, 1, 3});
    CHECK(mod5.avoided == std::vector<std::uint64_t>{2, 4});
    CHECK(mod5.square_criterion_used);

    const ResidueAnalysis mod4 = quadform_residue_analysis(QuadFormSpec{3, -2}, 4);
    CHECK(mod4.attained == std::vector<std::uint64_t>{0, 1});
    CHECK(mod4.avoided == std::vector<std::uint64_t>{2, 3});
    CHECK_FALSE(mod4.square_criterion_used);

    const ResidueAnalysis mod7 = quadform_residue_analysis(QuadFormSpec{10, -4}, 7);
    CHECK(mod7.avoided == std::vector<std::uint64_t>{2, 3, 5});

    // alpha divisible by p falls back to plain enumeration
    const ResidueAnalysis degenerate = quadform_residue_analysis(QuadFormSpec{7, 1}, 7);
    CHECK_FALSE(degenerate.square_criterion_used);
    CHECK(degenerate.attained.size() == 7);  // n -> n is a bijection mod 7

    CHECK_THROWS_AS(quadform_residue_analysis(QuadFormSpec{0, 1}, 5), std::invalid_argument);
}

TEST_CASE("completed-square criterion agrees with enumeration across forms") {
    for (const std::uint64_t p : {5ull, 7ull, 11ull, 13ull, 17ull})
        for (std::int64_t alpha = 1; alpha <= 6; ++alpha)
            for (std::int64_t beta = -3; beta <= 3; ++beta) {
                if (alpha % static_cast<std::int64_t>(p) == 0) continue;
                // quadform_residue_analysis cross-checks internally and
                // throws on disagreement
                const auto r = quadform_residue_analysis(QuadFormSpec{alpha, beta}, p);
                CHECK(r.square_criterion_used);
                CHECK(r.attained.size() + r.avoided.size() == p);
                // a quadratic image hits (p+1)/2 residues
                CHECK(r.attained.size() == (p + 1) / 2);
            }
}

TEST_CASE("representability progressions reproduce the c_9 lists") {
    const ModSeries c9 = c_t_series_mod(9, 10000, 2);
    const QuadFormSpec form{10, -4};

    const std::uint64_t m2[] = {2};
    const auto r2 = representability_progressions(form, {8, 4}, m2, c9);
    REQUIRE(r2.size() == 1);
    CHECK(r2[0].A == 16);
    CHECK(r2[0].B == 12);

    const std::uint64_t m3[] = {3};
    const auto r3 = representability_progressions(form, {8, 4}, m3, c9);
    REQUIRE(r3.size() == 1);
    CHECK(r3[0].A == 24);
    CHECK(r3[0].B == 12);

    const std::uint64_t m7[] = {7};
    const auto r7 = representability_progressions(form, {8, 4}, m7, c9);
    REQUIRE(r7.size() == 3);
    CHECK(r7[0] == Progression{56, 20, 2, r7[0].verified_upto});
    CHECK(r7[1] == Progression{56, 28, 2, r7[1].verified_upto});
    CHECK(r7[2] == Progression{56, 44, 2, r7[2].verified_upto});

    const std::uint64_t all[] = {2, 3, 7};
    CHECK(representability_progressions(form, {8, 4}, all, c9).size() == 5);
}

TEST_CASE("quadratic-residue progressions appear in the c_5 scan") {
    const ModSeries c5 = c_t_series_mod(5, 20000, 2);
    const auto found = scan_progressions(c5, 26);
    for (const std::uint64_t p : {5ull, 7ull, 11ull, 13ull}) {
        const auto analysis = quadform_residue_analysis(QuadFormSpec{3, -2}, p);
        for (const std::uint64_t j : analysis.avoided) {
            const std::int64_t A = 2 * static_cast<std::int64_t>(p);
            const std::int64_t B = 2 * static_cast<std::int64_t>(j) + 1;
            CHECK_MESSAGE(covered_by(found, A, B), "missing (", A, ",", B, ")");
            CHECK(holds_directly(c5, A, B));
        }
    }
}

TEST_CASE("no progressions mod 3, 5, 7 for c_5 and c_9 at desk scale") {
    for (const std::int64_t t : {5, 9})
        for (const std::uint64_t m : {3ull, 5ull, 7ull}) {
            const ModSeries s = c_t_series_mod(t, 10000, m);
            CHECK(scan_progressions(s, 24).empty());
        }
}

TEST_CASE("t == 3 (mod 4) indices show no progressions at this bound") {
    // absence-at-bound only; nothing is claimed beyond the scanned range
    for (const std::int64_t t : {3, 7}) {
        const ModSeries s = c_t_series_mod(t, 10000, 2);
        CHECK(scan_progressions(s, 24).empty());
    }
}

TEST_CASE("conjecture tables hold at desk scale") {
    for (const auto& id : conjecture_ids()) {
        const ConjectureReport r = check_conjecture(id, 10000);
        CHECK(r.evidence == "empirical");
        CHECK_MESSAGE(r.all_pass, "conjecture table ", r.id);
        for (const auto& e : r.entries) {
            CHECK(e.holds);
            CHECK(e.indices_checked >= 10);
        }
    }
    CHECK(check_conjecture("c9_c13_c17_mod2", 10000).entries.size() == 11);
    CHECK(check_conjecture("c5_mod4_mod8", 10000).entries.size() == 14);
}

TEST_CASE("a perturbed table entry fails with a witness") {
    // (32,30) mod 8 is not a congruence of c_5; the direct walk finds a
    // nonzero coefficient quickly
    const ModSeries c5 = c_t_series_mod(5, 2000, 8);
    std::optional<std::int64_t> witness;
    for (std::int64_t i = 30; i <= c5.trunc(); i += 32)
        if (c5.coeff(i) != 0) {
            witness = i;
            break;
        }
    REQUIRE(witness.has_value());
    CHECK(*witness == 30);
}

TEST_CASE("conjecture checker guards") {
    CHECK_THROWS_AS(check_conjecture("bogus", 10000), std::invalid_argument);
    CHECK_THROWS_AS(check_conjecture("c5_mod4_mod8", 1000), std::invalid_argument);
}
