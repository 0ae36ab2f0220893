// Command-line front end: expansion, identity verification, congruence
// scanning, growth analysis, M_k tabulation.  JSON is the canonical
// machine format; every number printed here is re-derivable through the
// library calls the command wraps.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "falsetheta/acceptance.hpp"
#include "falsetheta/asymptotics.hpp"
#include "falsetheta/identities.hpp"
#include "falsetheta/mex_partitions.hpp"
#include "falsetheta/parallel.hpp"
#include "falsetheta/scanner.hpp"
#include "falsetheta/series_io.hpp"
#include "falsetheta/theta.hpp"

namespace {

using falsetheta::IdentityReport;
using nlohmann::json;

enum class Format { text, json_fmt, csv };

struct OutputOptions {
    std::string format = "text";
    bool json_flag = false;
    std::string out_path;

    Format format_or_throw(bool csv_allowed) const {
        const std::string f = json_flag ? "json" : format;
        if (f == "text") return Format::text;
        if (f == "json") return Format::json_fmt;
        if (f == "csv") {
            if (!csv_allowed)
                throw CLI::ValidationError("--output csv is only available for coefficient tables");
            return Format::csv;
        }
        throw CLI::ValidationError("unknown output format '" + f + "'");
    }
};

void add_output_options(CLI::App* cmd, OutputOptions& opts, bool csv_allowed) {
    cmd->add_option("--output", opts.format,
                    csv_allowed ? "text, json or csv" : "text or json")
        ->default_val("text");
    cmd->add_flag("--json", opts.json_flag, "shorthand for --output json");
    cmd->add_option("--out", opts.out_path, "write the report to a file instead of stdout");
}

void emit(const OutputOptions& opts, const std::string& payload) {
    if (opts.out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(opts.out_path, std::ios::binary);
    if (!out) throw CLI::ValidationError("cannot open output file " + opts.out_path);
    out << payload;
}

json report_to_json(const IdentityReport& r) {
    json j;
    j["identity"] = r.identity_id;
    j["trunc"] = r.trunc;
    if (r.modulus)
        j["modulus"] = *r.modulus;
    else
        j["modulus"] = "exact";
    j["status"] = r.verified ? "verified" : "failed";
    if (r.first_mismatch)
        j["first_mismatch"] = *r.first_mismatch;
    else
        j["first_mismatch"] = nullptr;
    j["warnings"] = r.warnings;
    j["detail"] = r.detail;
    return j;
}

std::string report_to_text(const IdentityReport& r) {
    std::ostringstream os;
    os << (r.verified ? "verified" : "FAILED") << "  " << r.identity_id << "  trunc=" << r.trunc
       << "  modulus=" << (r.modulus ? std::to_string(*r.modulus) : std::string("exact"));
    if (r.first_mismatch) os << "  first_mismatch=" << *r.first_mismatch;
    os << "\n  " << r.detail << "\n";
    for (const auto& w : r.warnings) os << "  warning: " << w << "\n";
    return os.str();
}

int run_expand(const std::string& spec_text, std::int64_t trunc,
               std::optional<std::uint64_t> modulus, const OutputOptions& opts) {
    if (trunc < 0) throw CLI::ValidationError("--trunc must be >= 0");
    std::string trimmed = spec_text;
    trimmed.erase(0, trimmed.find_first_not_of(" \t"));

    falsetheta::IntSeries series(0);
    std::string canonical;
    if (trimmed.rfind('@', 0) == 0) {
        // "@path" imports a series in the interchange format
        const std::string path = trimmed.substr(1);
        std::ifstream in(path);
        if (!in) throw CLI::ValidationError("cannot open series file " + path);
        falsetheta::IntSeries imported = falsetheta::read_series(in);
        if (trunc > imported.trunc())
            throw CLI::ValidationError("--trunc exceeds the imported truncation " +
                                       std::to_string(imported.trunc()));
        series = falsetheta::restrict_trunc(imported, trunc);
        canonical = trimmed;
    } else if (trimmed.rfind("psi", 0) == 0 || trimmed.rfind("f(", 0) == 0) {
        const auto spec = falsetheta::parse_theta_spec(spec_text);
        series = falsetheta::expand(spec, trunc);
        canonical = falsetheta::to_string(spec);
    } else {
        const auto spec = falsetheta::parse_eta_product(spec_text);
        series = falsetheta::eta_product(spec, trunc);
        canonical = falsetheta::to_string(spec);
    }

    std::optional<falsetheta::ModSeries> reduced;
    if (modulus) reduced = falsetheta::reduce_mod(series, *modulus);

    std::ostringstream payload;
    switch (opts.format_or_throw(true)) {
        case Format::text:
            if (reduced)
                falsetheta::write_series(payload, *reduced);
            else
                falsetheta::write_series(payload, series);
            break;
        case Format::csv:
            payload << "exponent,coefficient\n";
            for (std::int64_t n = 0; n <= trunc; ++n) {
                if (reduced) {
                    if (reduced->coeff(n) != 0) payload << n << "," << reduced->coeff(n) << "\n";
                } else if (series.coeff(n) != 0) {
                    payload << n << "," << series.coeff(n).get_str() << "\n";
                }
            }
            break;
        case Format::json_fmt: {
            json j;
            j["command"] = "expand";
            j["spec"] = canonical;
            j["trunc"] = trunc;
            if (modulus)
                j["modulus"] = *modulus;
            else
                j["modulus"] = nullptr;
            json coeffs = json::array();
            for (std::int64_t n = 0; n <= trunc; ++n) {
                if (reduced) {
                    if (reduced->coeff(n) != 0)
                        coeffs.push_back({n, std::to_string(reduced->coeff(n))});
                } else if (series.coeff(n) != 0) {
                    coeffs.push_back({n, series.coeff(n).get_str()});
                }
            }
            j["coeffs"] = std::move(coeffs);
            payload << j.dump() << "\n";
            break;
        }
    }
    emit(opts, payload.str());
    return 0;
}

int run_verify(const std::string& id, std::optional<std::int64_t> trunc,
               std::optional<std::uint64_t> modulus, const OutputOptions& opts) {
    std::vector<IdentityReport> reports;
    if (id == "all") {
        if (trunc)
            throw CLI::ValidationError("--trunc cannot be combined with 'all'; entries run at "
                                       "their listed truncations");
        const auto& registry = falsetheta::identity_registry();
        reports.resize(registry.size());
        falsetheta::parallel_for_index(static_cast<std::int64_t>(registry.size()),
                                       [&](std::int64_t i) {
                                           reports[static_cast<std::size_t>(i)] =
                                               falsetheta::verify_registry_identity(
                                                   registry[static_cast<std::size_t>(i)].id,
                                                   std::nullopt, modulus);
                                       });
    } else {
        reports.push_back(falsetheta::verify_registry_identity(id, trunc, modulus));
    }

    bool all_ok = true;
    for (const auto& r : reports) all_ok = all_ok && r.verified;

    std::ostringstream payload;
    if (opts.format_or_throw(false) == Format::json_fmt) {
        if (reports.size() == 1) {
            payload << report_to_json(reports.front()).dump() << "\n";
        } else {
            json j;
            j["all_verified"] = all_ok;
            json arr = json::array();
            for (const auto& r : reports) arr.push_back(report_to_json(r));
            j["reports"] = std::move(arr);
            payload << j.dump() << "\n";
        }
    } else {
        for (const auto& r : reports) payload << report_to_text(r);
    }
    emit(opts, payload.str());
    return all_ok ? 0 : 1;
}

int run_scan(std::int64_t t, std::uint64_t modulus, std::int64_t amax, std::int64_t trunc,
             std::int64_t min_hits, const OutputOptions& opts) {
    const auto series = falsetheta::c_t_series_mod(t, trunc, modulus);
    const auto progressions = falsetheta::scan_progressions(series, amax, min_hits);

    std::ostringstream payload;
    if (opts.format_or_throw(false) == Format::json_fmt) {
        json arr = json::array();
        for (const auto& p : progressions) {
            json j;
            j["A"] = p.A;
            j["B"] = p.B;
            j["mod"] = p.modulus;
            j["verified_upto"] = p.verified_upto;
            arr.push_back(std::move(j));
        }
        payload << arr.dump() << "\n";
    } else {
        payload << "progressions of c_" << t << " mod " << modulus << ", A <= " << amax
                << ", trunc " << trunc << ":\n";
        for (const auto& p : progressions)
            payload << "  (" << p.A << "n+" << p.B << ") == 0, verified to " << p.verified_upto
                    << "\n";
    }
    emit(opts, payload.str());
    return 0;
}

int run_asymptotics(std::int64_t t, std::int64_t n, const OutputOptions& opts) {
    if (n < 60) throw CLI::ValidationError("--n must be at least 60");
    const std::int64_t w0 = std::min<std::int64_t>(500, n / 2);
    const std::int64_t w1 = std::min<std::int64_t>(1000, n);

    json j;
    j["t"] = t;
    j["n"] = n;
    std::ostringstream text;
    if (t == 2) {
        const auto c2 = falsetheta::c2_by_recurrence(n);
        const auto ratio = falsetheta::growth_ratio(c2, w0, w1);
        const double r7 =
            falsetheta::largest_real_root(falsetheta::char_poly(falsetheta::upper_recurrence()),
                                          1.0, 2.0, 1e-9);
        const double r26 =
            falsetheta::largest_real_root(falsetheta::char_poly(falsetheta::lower_recurrence()),
                                          1.0, 2.0, 1e-9);
        const auto [a_seq, b_seq] = falsetheta::bounding_sequences(n);
        bool sandwich = true;
        for (std::int64_t i = 0; i <= n && sandwich; ++i)
            sandwich = b_seq[static_cast<std::size_t>(i)] <= c2[static_cast<std::size_t>(i)] &&
                       c2[static_cast<std::size_t>(i)] <= a_seq[static_cast<std::size_t>(i)];
        j["ratio_lo"] = ratio.lo_double();
        j["ratio_hi"] = ratio.hi_double();
        j["root_deg7"] = r7;
        j["root_deg26"] = r26;
        j["sandwich_ok"] = sandwich;
        text << "c_2 growth on window (" << w0 << "," << w1 << "): [" << ratio.lo_double()
             << ", " << ratio.hi_double() << "]\nroots: " << r7 << " (degree 7), " << r26
             << " (degree 26)\nsandwich b(n) <= c_2(n) <= a(n): "
             << (sandwich ? "holds" : "FAILS") << "\n";
    } else {
        const auto ct = falsetheta::c_t_series(t, n);
        const auto ratio =
            falsetheta::growth_ratio(std::span<const mpz_class>(ct.coeffs()), w0, w1);
        j["ratio_lo"] = ratio.lo_double();
        j["ratio_hi"] = ratio.hi_double();
        j["root_deg7"] = nullptr;
        j["root_deg26"] = nullptr;
        j["sandwich_ok"] = nullptr;
        text << "c_" << t << " growth on window (" << w0 << "," << w1 << "): ["
             << ratio.lo_double() << ", " << ratio.hi_double() << "]\n";
    }

    std::ostringstream payload;
    if (opts.format_or_throw(false) == Format::json_fmt)
        payload << j.dump() << "\n";
    else
        payload << text.str();
    emit(opts, payload.str());
    return 0;
}

int run_mex(std::int64_t k, std::int64_t n, const OutputOptions& opts) {
    if (k < 1) throw CLI::ValidationError("--k must be >= 1");
    if (n < 0) throw CLI::ValidationError("--n must be >= 0");
    const auto gf = falsetheta::mex_gf(k, n);
    const auto p = falsetheta::partition_gf(n);
    const bool oracle_feasible = n <= 60;

    struct Row {
        std::int64_t n;
        std::string gf;
        std::optional<std::int64_t> oracle;
        std::string diff;
    };
    std::vector<Row> rows;
    for (std::int64_t i = 0; i <= n; ++i) {
        Row row{i, gf.coeff(i).get_str(), std::nullopt,
                falsetheta::truncated_pentagonal_diff(k, i, p.coeffs()).get_str()};
        if (oracle_feasible) row.oracle = falsetheta::mex_count_oracle(k, i);
        rows.push_back(std::move(row));
    }

    std::ostringstream payload;
    switch (opts.format_or_throw(true)) {
        case Format::json_fmt: {
            json j;
            j["k"] = k;
            json arr = json::array();
            for (const auto& r : rows) {
                json row;
                row["n"] = r.n;
                row["gf_coeff"] = r.gf;
                if (r.oracle)
                    row["oracle_count"] = *r.oracle;
                else
                    row["oracle_count"] = nullptr;
                row["diff_sum"] = r.diff;
                arr.push_back(std::move(row));
            }
            j["rows"] = std::move(arr);
            payload << j.dump() << "\n";
            break;
        }
        case Format::csv:
            payload << "n,gf_coeff,oracle_count,diff_sum\n";
            for (const auto& r : rows)
                payload << r.n << "," << r.gf << ","
                        << (r.oracle ? std::to_string(*r.oracle) : std::string()) << "," << r.diff
                        << "\n";
            break;
        case Format::text:
            payload << "M_" << k << " tabulation (gf, oracle, truncated pentagonal sum)\n";
            for (const auto& r : rows)
                payload << "  n=" << r.n << "  gf=" << r.gf << "  oracle="
                        << (r.oracle ? std::to_string(*r.oracle) : std::string("-"))
                        << "  diff=" << r.diff << "\n";
            break;
    }
    emit(opts, payload.str());
    return 0;
}

int run_conjectures(const std::string& id, std::int64_t trunc, const OutputOptions& opts) {
    std::vector<std::string> ids =
        id.empty() ? falsetheta::conjecture_ids() : std::vector<std::string>{id};
    bool all_pass = true;
    json arr = json::array();
    std::ostringstream text;
    for (const auto& cid : ids) {
        const auto report = falsetheta::check_conjecture(cid, trunc);
        all_pass = all_pass && report.all_pass;
        json j;
        j["id"] = report.id;
        j["trunc"] = report.trunc;
        j["evidence"] = report.evidence;
        j["all_pass"] = report.all_pass;
        json entries = json::array();
        for (const auto& e : report.entries) {
            json je;
            je["t"] = e.t;
            je["mod"] = e.modulus;
            je["A"] = e.A;
            je["B"] = e.B;
            je["holds"] = e.holds;
            if (e.first_counterexample)
                je["first_counterexample"] = *e.first_counterexample;
            else
                je["first_counterexample"] = nullptr;
            je["indices_checked"] = e.indices_checked;
            entries.push_back(std::move(je));
        }
        j["entries"] = std::move(entries);
        arr.push_back(std::move(j));

        text << report.id << " (" << report.evidence << ", trunc " << report.trunc
             << "): " << (report.all_pass ? "all hold" : "COUNTEREXAMPLE FOUND") << "\n";
        for (const auto& e : report.entries) {
            text << "  c_" << e.t << "(" << e.A << "n+" << e.B << ") mod " << e.modulus << ": "
                 << (e.holds ? "holds" : "fails") << " (" << e.indices_checked << " checked";
            if (e.first_counterexample) text << ", counterexample at " << *e.first_counterexample;
            text << ")\n";
        }
    }

    std::ostringstream payload;
    if (opts.format_or_throw(false) == Format::json_fmt)
        payload << arr.dump() << "\n";
    else
        payload << text.str();
    emit(opts, payload.str());
    return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact truncated q-series engine for false theta reciprocals"};
    app.require_subcommand(0, 1);

    bool seed_acceptance = false;
    app.add_flag("--seed-acceptance", seed_acceptance,
                 "run the full release-criteria suite and print a scoreboard");

    // expand
    std::string expand_spec;
    std::int64_t expand_trunc = 0;
    std::optional<std::uint64_t> expand_mod;
    OutputOptions expand_out;
    auto* expand = app.add_subcommand("expand", "expand a theta/eta spec to a series");
    expand->add_option("spec", expand_spec, "e.g. \"psi(-q^2,q)\" or \"q^1 * f1^2\"")->required();
    expand->add_option("--trunc", expand_trunc, "truncation order")->required();
    expand->add_option("--mod", expand_mod, "reduce coefficients mod m");
    add_output_options(expand, expand_out, true);

    // verify
    std::string verify_id;
    std::optional<std::int64_t> verify_trunc;
    std::optional<std::uint64_t> verify_mod;
    OutputOptions verify_out;
    auto* verify = app.add_subcommand("verify", "verify a registry identity (or 'all')");
    verify->add_option("identity", verify_id, "registry id, or 'all'")->required();
    verify->add_option("--trunc", verify_trunc, "truncation (default: the entry's listed value)");
    verify->add_option("--mod", verify_mod, "override the comparison modulus");
    add_output_options(verify, verify_out, false);

    // scan
    std::int64_t scan_t = 5, scan_amax = 64, scan_trunc = 20000, scan_min_hits = 50;
    std::uint64_t scan_mod = 2;
    OutputOptions scan_out;
    auto* scan = app.add_subcommand("scan", "mine progressions c_t(An+B) == 0 (mod m)");
    scan->add_option("--t", scan_t, "index t of 1/psi(-q^t,q)")->required();
    scan->add_option("--mod", scan_mod, "congruence modulus")->required();
    scan->add_option("--amax", scan_amax, "largest stride A")->required();
    scan->add_option("--trunc", scan_trunc, "series truncation")->required();
    scan->add_option("--min-hits", scan_min_hits, "minimum confirmed indices per progression");
    add_output_options(scan, scan_out, false);

    // asymptotics
    std::int64_t asym_t = 2, asym_n = 2000;
    OutputOptions asym_out;
    auto* asym = app.add_subcommand("asymptotics", "growth ratios and bounding roots");
    asym->add_option("--t", asym_t, "index t")->required();
    asym->add_option("--n", asym_n, "sequence length");
    add_output_options(asym, asym_out, false);

    // mex
    std::int64_t mex_k = 1, mex_n = 60;
    OutputOptions mex_out;
    auto* mex = app.add_subcommand("mex", "M_k tabulation: gf vs oracle vs pentagonal diffs");
    mex->add_option("--k", mex_k, "mex value k")->required();
    mex->add_option("--n", mex_n, "table upper bound");
    add_output_options(mex, mex_out, true);

    // conjectures
    std::string conj_id;
    std::int64_t conj_trunc = 20000;
    OutputOptions conj_out;
    auto* conj = app.add_subcommand("conjectures", "check the tabulated congruence conjectures");
    conj->add_option("id", conj_id, "c9_c13_c17_mod2 or c5_mod4_mod8 (default: both)");
    conj->add_option("--trunc", conj_trunc, "series truncation");
    add_output_options(conj, conj_out, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help exits clean, usage errors exit 2
    }

    try {
        if (seed_acceptance) {
            const auto results = falsetheta::run_acceptance(&std::cerr);
            return falsetheta::print_scoreboard(results, std::cout);
        }
        if (expand->parsed())
            return run_expand(expand_spec, expand_trunc, expand_mod, expand_out);
        if (verify->parsed()) return run_verify(verify_id, verify_trunc, verify_mod, verify_out);
        if (scan->parsed())
            return run_scan(scan_t, scan_mod, scan_amax, scan_trunc, scan_min_hits, scan_out);
        if (asym->parsed()) return run_asymptotics(asym_t, asym_n, asym_out);
        if (mex->parsed()) return run_mex(mex_k, mex_n, mex_out);
        if (conj->parsed()) return run_conjectures(conj_id, conj_trunc, conj_out);
        std::cerr << app.help();
        return 2;
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
