#include "falsetheta/acceptance.hpp"

#include <chrono>
#include <cmath>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "falsetheta/asymptotics.hpp"
#include "falsetheta/identities.hpp"
#include "falsetheta/mex_partitions.hpp"
#include "falsetheta/scanner.hpp"
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

struct Check {
    bool ok = true;
    std::ostringstream log;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            log << "  FAILED: " << what << "\n";
        }
    }
};

CriterionResult criterion_1() {
    Timer timer;
    Check c;
    const IdentityReport r = verify_registry_identity("thm1_main", 20000);
    c.require(r.verified, "c_5(2n+1) chain or progressions at trunc 20000: " + r.detail);
    const double elapsed = timer.seconds();
    c.require(elapsed < 30.0, "runtime " + std::to_string(elapsed) + "s exceeds the 30s target");
    return {1, "c_5(2n+1) mod 2 identity and progressions (10,5),(10,9),(8,5), trunc 2e4",
            c.ok, c.log.str() + r.detail, elapsed};
}

CriterionResult criterion_2() {
    Timer timer;
    Check c;
    const IdentityReport r = verify_registry_identity("thm2_main", 20000);
    c.require(r.verified, "c_5(32n+31) != 0 mod 4: " + r.detail);
    return {2, "c_5(32n+31) == 0 (mod 4) for all 32n+31 <= 2e4, zero tolerance", c.ok,
            r.detail, timer.seconds()};
}

CriterionResult criterion_3() {
    Timer timer;
    Check c;
    const IdentityReport main = verify_registry_identity("thm3_main", 2000);
    c.require(main.verified, "c_9(8n+4) vs psi(-q^14,-q^6): " + main.detail);
    const IdentityReport eta = verify_registry_identity("thm3_eta", 2000);
    c.require(eta.verified, "eta identity: " + eta.detail);

    const ModSeries c9 = c_t_series_mod(9, 16004, 2);
    const std::vector<std::uint64_t> moduli = {2, 3, 7};
    const auto progs =
        representability_progressions(QuadFormSpec{10, -4}, {8, 4}, moduli, c9);
    const std::vector<std::pair<std::int64_t, std::int64_t>> expected = {
        {16, 12}, {24, 12}, {56, 20}, {56, 28}, {56, 44}};
    c.require(progs.size() == expected.size(),
              "representability progression count " + std::to_string(progs.size()));
    for (std::size_t i = 0; i < expected.size() && i < progs.size(); ++i)
        c.require(progs[i].A == expected[i].first && progs[i].B == expected[i].second,
                  "progression " + std::to_string(i) + " mismatch");
    c.log << "  " << main.detail << "; eta identity to 2000; progressions (16,12) (24,12) "
          << "(56,20) (56,28) (56,44) re-derived and re-verified\n";
    return {3, "c_9(8n+4) congruence to n=2000, eta identity to 2000, five progressions",
            c.ok, c.log.str(), timer.seconds()};
}

CriterionResult criterion_4() {
    Timer timer;
    Check c;
    int cases = 0;
    for (int sa : {1, -1})
        for (int sb : {1, -1})
            for (std::int64_t a = 0; a <= 15; ++a)
                for (std::int64_t b = 0; b <= 15; ++b) {
                    if (a == b || a + b == 0) continue;
                    const ThetaSpec spec{ThetaKind::false_theta, sa, a, sb, b};
                    const IdentityReport r = verify_dissection(spec, 400);
                    ++cases;
                    if (!r.verified)
                        c.require(false, "dissection failed for " + to_string(spec));
                }
    c.log << "  " << cases << " dissections verified exactly at trunc 400\n";
    return {4, "dissection lemma for all a != b <= 15, four sign pairs, trunc 400, "
               "even/odd flag checked",
            c.ok, c.log.str(), timer.seconds()};
}

CriterionResult criterion_5() {
    Timer timer;
    Check c;
    const double r7 = largest_real_root(char_poly(upper_recurrence()), 1.0, 2.0, 1e-9);
    const double r26 = largest_real_root(char_poly(lower_recurrence()), 1.0, 2.0, 1e-9);
    c.require(std::abs(r7 - 1.54522) <= 1e-4, "degree-7 root " + std::to_string(r7));
    c.require(std::abs(r26 - 1.53623) <= 1e-4, "degree-26 root " + std::to_string(r26));

    const std::vector<mpz_class> c2 = c2_by_recurrence(2000);
    const auto [a_seq, b_seq] = bounding_sequences(2000);
    for (std::int64_t n = 0; n <= 2000; ++n) {
        if (!(b_seq[static_cast<std::size_t>(n)] <= c2[static_cast<std::size_t>(n)] &&
              c2[static_cast<std::size_t>(n)] <= a_seq[static_cast<std::size_t>(n)])) {
            c.require(false, "sandwich fails at n=" + std::to_string(n));
            break;
        }
    }

    const RatioInterval ratio = growth_ratio(c2, 500, 1000);
    const mpq_class lo_bound(153623, 100000), hi_bound(154522, 100000);
    c.require(ratio.lo > lo_bound && ratio.hi < hi_bound,
              "ratio interval [" + std::to_string(ratio.lo_double()) + ", " +
                  std::to_string(ratio.hi_double()) + "] not inside (1.53623, 1.54522)");
    const double elapsed = timer.seconds();
    c.require(elapsed < 60.0, "runtime " + std::to_string(elapsed) + "s exceeds the 60s target");
    std::ostringstream detail;
    detail.precision(9);
    detail << "roots " << r7 << " / " << r26 << "; ratio [" << ratio.lo_double() << ", "
           << ratio.hi_double() << "]";
    return {5, "growth: roots to 1e-4, exact sandwich to n=2000, ratio window inside "
               "(1.53623, 1.54522)",
            c.ok, c.log.str() + detail.str(), elapsed};
}

CriterionResult criterion_6() {
    Timer timer;
    Check c;
    const IdentityReport tpn = verify_registry_identity("tpn_theorem", 200);
    c.require(tpn.verified, "tpn both forms: " + tpn.detail);

    std::vector<IntSeries> gfs;
    for (std::int64_t k = 1; k <= 6; ++k) gfs.push_back(mex_gf(k, 60));
    for (std::int64_t k = 1; k <= 6; ++k)
        for (std::int64_t n = 0; n <= 60; ++n) {
            if (gfs[static_cast<std::size_t>(k - 1)].coeff(n) != mex_count_oracle(k, n)) {
                c.require(false, "mex_gf vs oracle at k=" + std::to_string(k) +
                                     ", n=" + std::to_string(n));
                break;
            }
        }

    const IntSeries p = partition_gf(60);
    for (std::int64_t k = 1; k <= 4; ++k)
        for (std::int64_t n = 1; n <= 60; ++n) {
            const mpz_class want =
                (k % 2 == 1 ? 1 : -1) * mpz_class(static_cast<long>(mex_count_oracle(k, n)));
            if (truncated_pentagonal_diff(k, n, p.coeffs()) != want) {
                c.require(false, "pentagonal diff vs (-1)^{k-1} M_k at k=" + std::to_string(k) +
                                     ", n=" + std::to_string(n));
                break;
            }
        }
    return {6, "truncated pentagonal theorem both forms to 200; M_k oracle k<=6, n<=60; "
               "diffs match +-M_k k<=4",
            c.ok, c.log.str() + tpn.detail, timer.seconds()};
}

CriterionResult criterion_7() {
    Timer timer;
    Check c;
    const IdentityReport cube = verify_registry_identity("cubeeq", 2000);
    c.require(cube.verified, "cubeeq: " + cube.detail);
    const IdentityReport ff = verify_registry_identity("f1f5", 2000);
    c.require(ff.verified, "f1f5: " + ff.detail);

    // Frobenius: s^{p^k} == s(q^p)^{p^{k-1}} mod p^k on 100 seeded series
    std::mt19937_64 rng(20240517);
    std::uniform_int_distribution<int> coeff(-9, 9);
    const std::int64_t t = 64;
    for (int trial = 0; trial < 100 && c.ok; ++trial) {
        IntSeries s(t);
        for (std::int64_t n = 0; n <= t; ++n) s.set(n, coeff(rng));
        for (const int p : {2, 3, 5})
            for (const int k : {1, 2}) {
                const std::int64_t pk = k == 1 ? p : p * p;
                const IntSeries lhs = power(s, pk);
                const IntSeries rhs = power(substitute_qk(s, p), pk / p);
                const auto r = congruent(lhs, rhs, pk, t);
                if (!r.congruent)
                    c.require(false, "Frobenius fails at trial " + std::to_string(trial) +
                                         ", p=" + std::to_string(p) + ", k=" + std::to_string(k));
            }
    }

    int jtp_cases = 0;
    for (int sa : {1, -1})
        for (int sb : {1, -1})
            for (std::int64_t a = 0; a <= 12; ++a)
                for (std::int64_t b = 0; b <= 12; ++b) {
                    if (a + b == 0) continue;
                    const ThetaSpec spec{ThetaKind::theta, sa, a, sb, b};
                    if (theta_f(spec, 300) != jtp_product(spec, 300)) {
                        c.require(false, "JTP mismatch for " + to_string(spec));
                    }
                    ++jtp_cases;
                }
    c.log << "  Frobenius on 100 series, JTP on " << jtp_cases << " specs at trunc 300\n";
    return {7, "cubeeq exact+mod2 and f1f5 to 2000; Frobenius suite on 100 series; JTP grid",
            c.ok, c.log.str(), timer.seconds()};
}

CriterionResult criterion_8() {
    Timer timer;
    Check c;
    const IdentityReport r = verify_registry_identity("rlnpsi", 300);
    c.require(r.verified, "rlnpsi: " + r.detail);
    c.require(!r.warnings.empty() && r.warnings.front() == "rlnpsi_scale",
              "scale warning missing");
    return {8, "Lost-Notebook sum verified exactly to trunc 300 (q -> q^4 scale flagged)",
            c.ok, r.detail, timer.seconds()};
}

CriterionResult criterion_9() {
    Timer timer;
    Check c;
    for (const auto& id : conjecture_ids()) {
        const ConjectureReport r = check_conjecture(id, 20000);
        c.require(r.evidence == "empirical", "report must be labeled empirical");
        c.require(r.all_pass, "conjecture table " + r.id + " has a counterexample");
    }

    const IntSeries c3 = c_t_series(3, 1000);
    const RatioInterval r3 = growth_ratio(std::span<const mpz_class>(c3.coeffs()), 500, 1000);
    c.require(r3.lo > mpq_class(135, 100) && r3.hi < mpq_class(139, 100),
              "c_3 ratio outside 1.37 +- 0.02");

    const std::vector<mpz_class> comp = pentagonal_compositions(1000);
    const RatioInterval rc = growth_ratio(comp, 500, 1000);
    c.require(rc.lo > mpq_class(1618, 1000) && rc.hi < mpq_class(2, 1),
              "composition ratio outside (1.618, 2)");
    std::ostringstream detail;
    detail << "conjecture tables empirical-pass at 2e4; c_3 ratio [" << r3.lo_double() << ", "
           << r3.hi_double() << "]; composition ratio [" << rc.lo_double() << ", "
           << rc.hi_double() << "]";
    return {9, "conjecture tables at 2e4 (empirical), c_3 ratio 1.37+-0.02, composition "
               "ratio in (1.618, 2)",
            c.ok, c.log.str() + detail.str(), timer.seconds()};
}

CriterionResult criterion_10() {
    Timer timer;
    Check c;
    std::set<std::string> seen;
    for (const auto& report : {verify_registry_identity("thm1_main", 2000),
                               verify_registry_identity("thm3_main", 200),
                               verify_registry_identity("rank_zero", 40)})
        seen.insert(report.warnings.begin(), report.warnings.end());

    std::set<std::string> ledger;
    for (const auto& note : known_discrepancies()) ledger.insert(note.id);

    for (const std::string id : {"thm1_c2_label", "thm3_q_factor", "rank_zero_sign"}) {
        c.require(seen.count(id) == 1, "warning " + id + " not emitted by its verification");
        c.require(ledger.count(id) == 1, "warning " + id + " missing from the ledger");
    }
    std::ostringstream detail;
    detail << "structured warnings:";
    for (const auto& id : seen) detail << " " << id;
    return {10, "the three statement discrepancies are emitted as structured warnings", c.ok,
            c.log.str() + detail.str(), timer.seconds()};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::ostream* progress) {
    using Criterion = CriterionResult (*)();
    static constexpr Criterion criteria[] = {
        criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
        criterion_6, criterion_7, criterion_8, criterion_9, criterion_10,
    };
    std::vector<CriterionResult> results;
    for (const auto& criterion : criteria) {
        results.push_back(criterion());
        if (progress) {
            const auto& r = results.back();
            *progress << (r.passed ? "[PASS] " : "[FAIL] ") << "criterion " << r.number << ": "
                      << r.title << " (" << r.elapsed_seconds << "s)" << std::endl;
        }
    }
    return results;
}

int print_scoreboard(std::span<const CriterionResult> results, std::ostream& os) {
    int failures = 0;
    for (const auto& r : results) {
        os << (r.passed ? "[PASS] " : "[FAIL] ") << "criterion " << r.number << ": " << r.title
           << "\n";
        std::string detail = r.detail;
        while (!detail.empty() && (detail.back() == '\n' || detail.back() == ' '))
            detail.pop_back();
        if (!detail.empty()) os << "       " << detail << "\n";
        if (!r.passed) ++failures;
    }
    os << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria FAILED")
       << "\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace falsetheta
