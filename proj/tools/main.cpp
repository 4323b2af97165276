// Command-line front end: eta, closure, sweep, verify, sample.
//
// Exit codes: 0 success, 1 invalid arguments, 2 undecided comparison or
// threshold proximity, 3 verification failure, 4 incomplete enumeration.

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "sigma/closure.hpp"
#include "sigma/oracle.hpp"
#include "sigma/report_json.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadArgs = 1;
constexpr int kExitUndecided = 2;
constexpr int kExitVerifyFail = 3;
constexpr int kExitIncomplete = 4;

mpfr_prec_t default_prec_bits() {
    if (const char* env = std::getenv("SIGMA_PREC_BITS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 53) return static_cast<mpfr_prec_t>(v);
        throw sigma::InvalidArgument("SIGMA_PREC_BITS must be an integer >= 53");
    }
    return 128;
}

// A non-negative decimal number as an exact scaled integer: mant / 10^scale.
struct Dec {
    long long mant = 0;
    int scale = 0;
};

Dec parse_dec(const std::string& s) {
    Dec d;
    bool seen_digit = false, seen_dot = false;
    for (char c : s) {
        if (c == '.') {
            if (seen_dot) throw sigma::InvalidArgument("bad decimal: " + s);
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            if (d.mant > (1LL << 56)) throw sigma::InvalidArgument("decimal too long: " + s);
            d.mant = d.mant * 10 + (c - '0');
            if (seen_dot) ++d.scale;
            seen_digit = true;
        } else {
            throw sigma::InvalidArgument("bad decimal: " + s);
        }
    }
    if (!seen_digit) throw sigma::InvalidArgument("bad decimal: " + s);
    return d;
}

Dec rescale(Dec d, int scale) {
    while (d.scale < scale) { d.mant *= 10; ++d.scale; }
    return d;
}

std::string dec_to_string(long long mant, int scale) {
    std::string digits = std::to_string(mant);
    if (scale == 0) return digits;
    if (static_cast<int>(digits.size()) <= scale)
        digits.insert(0, scale + 1 - digits.size(), '0');
    digits.insert(digits.size() - scale, ".");
    return digits;
}

struct SweepRow {
    std::string r;
    std::size_t count_mighty = 0;
    long components_min = 0, components_max = 0;
    long lower_bound = 0, product_bound = 0;
    bool enumeration_complete = false;
};

std::vector<SweepRow> run_sweep(const std::string& from, const std::string& to,
                                const std::string& step, int parallel,
                                const sigma::Precision& prec,
                                std::optional<std::uint64_t> scan_cap) {
    Dec df = parse_dec(from), dt = parse_dec(to), ds = parse_dec(step);
    int scale = std::max({df.scale, dt.scale, ds.scale});
    df = rescale(df, scale);
    dt = rescale(dt, scale);
    ds = rescale(ds, scale);
    if (ds.mant <= 0) throw sigma::InvalidArgument("step must be positive");

    std::vector<std::string> grid;
    for (long long m = df.mant; m <= dt.mant; m += ds.mant)
        grid.push_back(dec_to_string(m, scale));

    std::vector<SweepRow> rows(grid.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr first_error;
    std::mutex error_mu;

    auto worker = [&] {
        sigma::Context ctx;
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= grid.size() || failed.load()) break;
            try {
                sigma::Enclosure r = sigma::Enclosure::from_decimal(grid[i], prec.bits);
                sigma::ClosureReport rep = sigma::closure_report(ctx, r, prec, scan_cap);
                rows[i] = SweepRow{grid[i],
                                   rep.summary.count,
                                   rep.components_min,
                                   rep.components_max,
                                   rep.lower_bound,
                                   rep.product_bound,
                                   rep.summary.enumeration_complete};
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mu);
                if (!first_error) first_error = std::current_exception();
                failed.store(true);
            }
        }
    };

    int n_threads = std::max(1, parallel);
    std::vector<std::thread> pool;
    for (int t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (first_error) std::rethrow_exception(first_error);
    return rows;
}

void print_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
    out << "r,count_mighty,components_min,components_max,lower_bound,product_bound,"
           "enumeration_complete\n";
    for (const SweepRow& row : rows)
        out << row.r << ',' << row.count_mighty << ',' << row.components_min << ','
            << row.components_max << ',' << row.lower_bound << ',' << row.product_bound << ','
            << (row.enumeration_complete ? "true" : "false") << '\n';
}

bool row_straddles_four(const SweepRow& row) {
    return row.components_min <= 4 && 4 <= row.components_max;
}

void print_closure_text(const sigma::ClosureReport& rep, std::ostream& out) {
    out << "r = [" << rep.r.lo_str() << ", " << rep.r.hi_str() << "]\n";
    out << "mighty primes (" << rep.summary.count << "):";
    for (auto p : rep.summary.mighty_primes) out << ' ' << p;
    out << (rep.summary.enumeration_complete ? "  [complete]" : "  [incomplete]") << '\n';
    out << "components: " << rep.components_min;
    if (rep.components_max != rep.components_min) out << ".." << rep.components_max;
    out << "  (theorem bounds " << rep.lower_bound << ".." << rep.product_bound << ")\n";
    out << "intervals:\n";
    for (const auto& iv : rep.intervals.intervals)
        out << "  [" << iv.a.lo_str() << ", " << iv.b.hi_str() << "]  a=" << iv.a_expr.to_string()
            << "  b=" << iv.b_expr.to_string() << '\n';
    out << "gaps:\n";
    for (const auto& [lo, hi] : rep.gaps)
        out << "  (" << lo.hi_str() << ", " << hi.lo_str() << ")\n";
}

// ---- verify checks; each returns pass/fail and prints one report line ----

bool check_sweep_based(const std::string& check, const std::string& from,
                       const std::string& to, const std::string& step, int parallel,
                       const sigma::Precision& prec, std::optional<std::uint64_t> scan_cap) {
    auto rows = run_sweep(from, to, step, parallel, prec, scan_cap);
    bool pass = true;
    for (const SweepRow& row : rows) {
        bool row_ok;
        if (check == "no-four")
            row_ok = !row_straddles_four(row);
        else // bounds
            row_ok = row.lower_bound <= row.components_min &&
                     row.components_min <= row.components_max &&
                     row.components_max <= row.product_bound;
        if (!row_ok) {
            std::cout << "  offending row: r = " << row.r << ", components "
                      << row.components_min << ".." << row.components_max << ", bounds "
                      << row.lower_bound << ".." << row.product_bound << '\n';
            pass = false;
        }
    }
    std::cout << "check " << check << " (" << rows.size() << " rows): "
              << (pass ? "PASS" : "FAIL") << '\n';
    return pass;
}

bool check_oracle(const std::string& r_str, std::uint64_t n_max,
                  const sigma::Precision& prec) {
    sigma::Context ctx;
    sigma::Enclosure r = sigma::Enclosure::from_decimal(r_str, prec.bits);
    sigma::ClosureReport rep = sigma::closure_report(ctx, r, prec);
    sigma::ContainmentCheck cc = sigma::containment_check(ctx, rep, n_max);

    bool pass = cc.outside_intervals == 0 && cc.inside_gap == 0;
    if (!pass)
        std::cout << "  containment: " << cc.outside_intervals << " outside, " << cc.inside_gap
                  << " in gaps, first offender n = " << cc.first_offender << '\n';

    // Every certified gap must show up empirically: some detected gap between
    // consecutive sampled values must cover the certified gap's core.
    auto sample = sigma::oracle::sample_values(r.mid_d(), n_max);
    double min_gap_width = 1.0;
    for (const auto& [lo, hi] : rep.gaps)
        min_gap_width = std::min(min_gap_width, hi.lo_d() - lo.hi_d());
    auto egaps = sigma::oracle::empirical_gaps(sample, 0.25 * min_gap_width);
    for (const auto& [lo, hi] : rep.gaps) {
        bool matched = false;
        for (const auto& [elo, ehi] : egaps)
            if (elo <= lo.hi_d() && ehi >= hi.lo_d()) { matched = true; break; }
        if (!matched) {
            std::cout << "  certified gap (" << lo.hi_str() << ", " << hi.lo_str()
                      << ") has no empirical counterpart\n";
            pass = false;
        }
    }
    std::cout << "check oracle (r = " << r_str << ", n <= " << n_max
              << ", checked " << cc.checked << "): " << (pass ? "PASS" : "FAIL") << '\n';
    return pass;
}

bool check_sandwich(int cases, unsigned seed, const sigma::Precision& prec_in) {
    // The inequalities hold with a margin of order S2, far above the
    // enclosure width even at a reduced truncation bound, and a smaller
    // bound keeps the 200-case suite fast. Rigor is unaffected.
    sigma::Precision prec(prec_in.bits, std::min(prec_in.trunc, 10000L));
    sigma::Context ctx;
    std::mt19937 rng(seed);
    std::uniform_int_distribution<std::size_t> m_dist(1, 20);
    std::uniform_real_distribution<double> r_dist(1.5, 4.0);
    sigma::Enclosure one = sigma::Enclosure::exact(1, prec.bits);
    sigma::Enclosure two = sigma::Enclosure::exact(2, prec.bits);
    int violations = 0;
    for (int i = 0; i < cases; ++i) {
        std::size_t m = m_dist(rng);
        double rd = r_dist(rng);
        sigma::Enclosure r = sigma::Enclosure::from_doubles(rd, rd, prec.bits);
        sigma::Enclosure s1 = sigma::tail_sum(ctx, m, r, prec);
        sigma::Enclosure u = sigma::tail_product(ctx, m, r, prec);
        sigma::Enclosure mid = one - one / u; // 1 - prod_{t>m}(1 - p_t^{-r})
        sigma::Enclosure lhs = s1 - s1 * s1 / two;
        if (sigma::compare(lhs, mid) == sigma::CertOrder::Greater ||
            sigma::compare(mid, s1) == sigma::CertOrder::Greater) {
            std::cout << "  violation at m = " << m << ", r = " << rd << '\n';
            ++violations;
        }
    }
    bool pass = violations == 0;
    std::cout << "check sandwich (" << cases << " cases): " << (pass ? "PASS" : "FAIL") << '\n';
    return pass;
}

bool check_mainlower(const std::string& r_str, const sigma::Precision& prec) {
    sigma::Context ctx;
    sigma::Enclosure r = sigma::Enclosure::from_decimal(r_str, prec.bits);
    bool pass = true;
    for (std::uint64_t p : ctx.table.primes()) {
        if (sigma::compare(sigma::Enclosure::exact_ui(p, prec.bits), r) !=
            sigma::CertOrder::Less)
            break;
        auto v = sigma::is_mighty(ctx, p, r, prec);
        if (v.verdict != sigma::Mightiness::Mighty) {
            std::cout << "  prime " << p << " < r not certified mighty\n";
            pass = false;
        }
    }
    std::cout << "check mainlower (r = " << r_str << "): " << (pass ? "PASS" : "FAIL") << '\n';
    return pass;
}

bool check_threenotf(std::uint64_t p_max, const sigma::Precision& prec) {
    sigma::Context ctx;
    ctx.ensure_bound(p_max);
    sigma::Enclosure three = sigma::Enclosure::exact(3, prec.bits);
    bool pass = true;
    std::uint64_t checked = 0;
    for (std::uint64_t p : ctx.table.primes()) {
        if (p < 29) continue;
        if (p > p_max) break;
        ++checked;
        auto v = sigma::is_mighty(ctx, p, three, prec);
        if (v.verdict != sigma::Mightiness::NotMighty) {
            std::cout << "  prime " << p << " not certified non-mighty at r = 3\n";
            pass = false;
        }
    }
    std::cout << "check threenotf (" << checked << " primes in [29, " << p_max
              << "]): " << (pass ? "PASS" : "FAIL") << '\n';
    return pass;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certified closure of the sigma_{-r} value set"};
    app.require_subcommand(1);

    long prec_bits = 0; // 0 = use default/env
    std::string r_str, format = "json";
    std::string from = "1.90", to = "3.00", step = "0.01";
    double tol = 1e-6;
    int parallel = 1;
    std::uint64_t n_max = 100000, p_max = 10000;
    std::optional<std::uint64_t> scan_cap;
    std::uint64_t scan_cap_raw = 0;
    std::string check;
    int cases = 200;
    unsigned seed = 20240817;

    auto add_prec = [&](CLI::App* sub) {
        sub->add_option("--prec-bits", prec_bits, "endpoint precision in bits (default 128)");
    };

    CLI::App* cmd_eta = app.add_subcommand("eta", "certified enclosure of the constant eta");
    cmd_eta->add_option("--tol", tol, "enclosure width tolerance")->default_val(1e-6);
    add_prec(cmd_eta);

    CLI::App* cmd_closure = app.add_subcommand("closure", "closure decomposition at one r");
    cmd_closure->add_option("--r", r_str, "exponent r as a decimal string")->required();
    cmd_closure->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));
    cmd_closure->add_option("--scan-cap", scan_cap_raw, "prime scan cap override");
    add_prec(cmd_closure);

    CLI::App* cmd_sweep = app.add_subcommand("sweep", "closure sweep over a decimal grid");
    cmd_sweep->add_option("--from", from, "first grid point (decimal)")->required();
    cmd_sweep->add_option("--to", to, "last grid point (decimal)")->required();
    cmd_sweep->add_option("--step", step, "grid step (decimal)")->required();
    cmd_sweep->add_option("--parallel", parallel, "worker threads")->default_val(1);
    cmd_sweep->add_option("--scan-cap", scan_cap_raw, "prime scan cap override");
    add_prec(cmd_sweep);

    CLI::App* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify->add_option("--check", check, "no-four|bounds|oracle|sandwich|mainlower|threenotf")
        ->required()
        ->check(CLI::IsMember({"no-four", "bounds", "oracle", "sandwich", "mainlower",
                               "threenotf"}));
    cmd_verify->add_option("--r", r_str, "exponent r (oracle, mainlower)");
    cmd_verify->add_option("--nmax", n_max, "oracle sample size")->default_val(100000);
    cmd_verify->add_option("--pmax", p_max, "largest prime checked (threenotf)")
        ->default_val(10000);
    cmd_verify->add_option("--from", from, "sweep start (no-four, bounds)");
    cmd_verify->add_option("--to", to, "sweep end (no-four, bounds)");
    cmd_verify->add_option("--step", step, "sweep step (no-four, bounds)");
    cmd_verify->add_option("--parallel", parallel, "worker threads")->default_val(1);
    cmd_verify->add_option("--cases", cases, "random cases (sandwich)")->default_val(200);
    cmd_verify->add_option("--seed", seed, "rng seed (sandwich)");
    add_prec(cmd_verify);

    CLI::App* cmd_sample = app.add_subcommand("sample", "brute-force sigma sample as CSV");
    double r_double = 2.0;
    cmd_sample->add_option("--r", r_double, "exponent r")->required();
    cmd_sample->add_option("--nmax", n_max, "sample 1..nmax")->default_val(100000);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadArgs;
    }

    try {
        sigma::Precision prec(prec_bits > 0 ? static_cast<mpfr_prec_t>(prec_bits)
                                            : default_prec_bits(),
                              100000);
        if (scan_cap_raw > 0) scan_cap = scan_cap_raw;

        if (cmd_eta->parsed()) {
            sigma::Context ctx;
            sigma::Enclosure e = sigma::eta(ctx, tol, prec);
            std::cout << sigma::to_json(e).dump(2) << '\n';
            return kExitOk;
        }

        if (cmd_closure->parsed()) {
            sigma::Context ctx;
            sigma::Enclosure r = sigma::Enclosure::from_decimal(r_str, prec.bits);
            sigma::ClosureReport rep = sigma::closure_report(ctx, r, prec, scan_cap);
            if (format == "json")
                std::cout << sigma::to_json(rep).dump(2) << '\n';
            else
                print_closure_text(rep, std::cout);
            return kExitOk;
        }

        if (cmd_sweep->parsed()) {
            auto rows = run_sweep(from, to, step, parallel, prec, scan_cap);
            print_sweep_csv(rows, std::cout);
            for (const SweepRow& row : rows)
                if (row_straddles_four(row)) return kExitVerifyFail;
            return kExitOk;
        }

        if (cmd_verify->parsed()) {
            bool pass;
            if (check == "no-four" || check == "bounds")
                pass = check_sweep_based(check, from, to, step, parallel, prec, scan_cap);
            else if (check == "oracle")
                pass = check_oracle(r_str.empty() ? "2.0" : r_str, n_max, prec);
            else if (check == "sandwich")
                pass = check_sandwich(cases, seed, prec);
            else if (check == "mainlower")
                pass = check_mainlower(r_str.empty() ? "3.5" : r_str, prec);
            else
                pass = check_threenotf(p_max, prec);
            return pass ? kExitOk : kExitVerifyFail;
        }

        if (cmd_sample->parsed()) {
            auto sample = sigma::oracle::sample_values(r_double, n_max);
            sigma::oracle::write_csv(sample, std::cout);
            return kExitOk;
        }

        return kExitBadArgs;
    } catch (const sigma::ThresholdProximity& e) {
        std::cerr << "undecided: " << e.what() << '\n';
        return kExitUndecided;
    } catch (const sigma::UndecidedSign& e) {
        std::cerr << "undecided: " << e.what() << '\n';
        return kExitUndecided;
    } catch (const sigma::IncompleteEnumeration& e) {
        std::cerr << "incomplete enumeration: " << e.what() << '\n';
        return kExitIncomplete;
    } catch (const sigma::InternalError& e) {
        std::cerr << "internal consistency failure: " << e.what() << '\n';
        return kExitVerifyFail;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitBadArgs;
    }
}
