#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ferrers/bijection.hpp"
#include "ferrers/diagnostics.hpp"
#include "ferrers/explore.hpp"
#include "ferrers/genfun.hpp"
#include "ferrers/json_io.hpp"
#include "ferrers/qstruct.hpp"
#include "ferrers/shape.hpp"
#include "ferrers/verify.hpp"
#include "ferrers/version.hpp"

namespace {

using namespace ferrers;

// Exit codes: 0 success / no counterexample; 1 a verified claim failed
// (implementation bug); 2 usage error; 3 counterexample found by a scan.
constexpr int kOk = 0;
constexpr int kClaimFailed = 1;
constexpr int kUsage = 2;
constexpr int kCounterexample = 3;

struct ResolvedShape {
    Shape shape;
    std::string kind;  // "shifted" | "straight"
};

ResolvedShape resolve_shape(const std::string& text, const std::string& kind_flag) {
    if (text.find(':') != std::string::npos) {
        const Shape shape = make_family(parse_family(text));
        const std::string kind =
            std::holds_alternative<StrictShape>(shape) ? "shifted" : "straight";
        if (kind_flag != "auto" && kind_flag != kind)
            throw std::invalid_argument("family '" + text + "' expands to a " + kind +
                                        " shape; --kind " + kind_flag + " conflicts");
        return {shape, kind};
    }
    const std::vector<int> parts = parse_part_list(text);
    const std::string kind = (kind_flag == "auto") ? "shifted" : kind_flag;
    if (kind == "shifted") return {StrictShape(parts), kind};
    return {StraightShape(parts), kind};
}

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    return os.str();
}

void print_poly_report(const std::string& name, const std::string& kind, const IntPoly& poly,
                       bool as_json) {
    const SeqDiagnostics d = diagnose(poly);
    if (as_json) {
        nlohmann::json j;
        j["shape"] = name;
        j["kind"] = kind;
        j["poly"] = poly_to_json(poly);
        j["degree"] = poly.degree();
        j["value_at_q1"] = dec_string(poly.value_at_one());
        j["diagnostics"] = diagnostics_to_json(d);
        std::cout << j.dump(2) << "\n";
        return;
    }
    std::cout << "shape: " << name << "  kind: " << kind << "\n";
    std::cout << "coeffs: " << poly.coeff_list() << "\n";
    std::cout << "degree: " << poly.degree() << "  value at q=1: " << poly.value_at_one() << "\n";
    std::cout << "unimodal: " << (d.unimodal ? "yes" : "no") << "  peak_count: " << d.peak_count
              << "  peak_degrees: " << join_ints(d.peak_degrees) << "\n";
    std::cout << "symmetric: " << (d.symmetric ? "yes" : "no")
              << "  flawless: " << (d.flawless ? "yes" : "no")
              << "  log_concave: " << (d.log_concave ? "yes" : "no") << "\n";
    if (d.first_dip)
        std::cout << "first_dip: " << *d.first_dip << "\n";
    else
        std::cout << "first_dip: none\n";
}

int print_verdicts(const std::vector<ClaimVerdict>& verdicts, bool as_json) {
    bool all_hold = true;
    if (as_json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const ClaimVerdict& v : verdicts) {
            arr.push_back(verdict_to_json(v));
            all_hold = all_hold && v.holds;
        }
        std::cout << (verdicts.size() == 1 ? arr[0] : arr).dump(2) << "\n";
    } else {
        for (const ClaimVerdict& v : verdicts) {
            all_hold = all_hold && v.holds;
            std::cout << "claim: " << v.claim_id << "  [" << v.parameter_range << "]  "
                      << (v.holds ? "HOLDS" : "FAILS") << "\n";
            for (const auto& [where, detail] : v.witnesses)
                std::cout << "  " << where << ": " << detail << "\n";
        }
    }
    return all_hold ? kOk : kClaimFailed;
}

int run_scan_command(const std::string& which, const ScanReport& report,
                     const std::string& out_path) {
    const std::string text = report_to_json_string(report);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write report to " + out_path);
        out << text;
        std::cout << "scan: " << which << "\n";
        std::cout << "cells: " << report.cells_done << "/" << report.cells_total
                  << (report.complete() ? "" : "  (incomplete)") << "\n";
        std::cout << "shapes tested: " << report.shapes_tested << "\n";
        std::cout << "counterexamples: " << report.counterexamples.size() << "\n";
        std::cout << "notable: " << report.notable.size() << "\n";
        std::cout << "report: " << out_path << "\n";
    }
    if (!report.counterexamples.empty()) {
        std::cerr << "scan '" << which << "' found " << report.counterexamples.size()
                  << " counterexample(s); first: " << report.counterexamples.front().shape << " "
                  << report.counterexamples.front().note << "\n";
        return kCounterexample;
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact rank-generating functions of partitions in shifted and straight "
                 "Ferrers shapes: computation, theorem verification, conjecture scans"};
    app.set_version_flag("--version", std::string("ferrers ") + kVersion);
    app.require_subcommand(1);

    // rgf
    auto* rgf_cmd = app.add_subcommand("rgf", "Rank-generating function of one shape");
    std::string rgf_shape;
    std::string rgf_kind = "auto";
    bool rgf_json = false;
    rgf_cmd->add_option("--shape", rgf_shape,
                        "comma list (\"9,7,5,3\") or family (\"arith:n=19,t=2,b=4\", "
                        "\"qanalog:a=10,b=4\", \"trunc:n=9,b=4\", \"staircase:b=5\", "
                        "\"rect:b=4,n=8\")")
        ->required();
    rgf_cmd->add_option("--kind", rgf_kind, "shifted|straight (default: family kind, else shifted)")
        ->check(CLI::IsMember({"auto", "shifted", "straight"}));
    rgf_cmd->add_flag("--json", rgf_json, "JSON output");

    // qbinom
    auto* qb_cmd = app.add_subcommand("qbinom", "Gaussian polynomial C(n,k)_q");
    int qb_n = 0, qb_k = 0;
    bool qb_json = false;
    qb_cmd->add_option("n", qb_n)->required();
    qb_cmd->add_option("k", qb_k)->required();
    qb_cmd->add_flag("--json", qb_json, "JSON output");

    // qanalog
    auto* qa_cmd = app.add_subcommand("qanalog", "The q-analog C(a,b)^q = F_<a-1,a-3,...>");
    int qa_a = 0, qa_b = 0;
    bool qa_json = false;
    qa_cmd->add_option("a", qa_a)->required();
    qa_cmd->add_option("b", qa_b)->required();
    qa_cmd->add_flag("--json", qa_json, "JSON output");

    // ftable
    auto* ft_cmd = app.add_subcommand("ftable", "Emit rows (a, c, f(a,c)) as CSV");
    int ft_amax = 40;
    std::string ft_csv;
    ft_cmd->add_option("--amax", ft_amax, "table bound (default 40)");
    ft_cmd->add_option("--csv", ft_csv, "output file (default: stdout)");

    // bijection
    auto* bi_cmd = app.add_subcommand("bijection", "Ballot-word bijection behind C(a,b)^q");
    int bi_a = 0, bi_b = 0, bi_show = 5;
    bool bi_verify = false;
    bi_cmd->add_option("--a", bi_a)->required();
    bi_cmd->add_option("--b", bi_b)->required();
    bi_cmd->add_option("--show", bi_show, "how many correspondences to print (default 5)");
    bi_cmd->add_flag("--verify", bi_verify, "round-trip every contained partition");

    // check
    auto* ck_cmd = app.add_subcommand("check", "Verify one theorem/lemma/identity");
    std::string ck_claim;
    int ck_nmax = 100, ck_tmax = 6, ck_amax = -1, ck_cmax = 80, ck_kmax = 30, ck_ttrunc = 60,
        ck_pmax = 25, ck_bound = 25;
    unsigned ck_jobs = 4;
    bool ck_json = false;
    ck_cmd->add_option("claim", ck_claim,
                       "eq4|uni|at|p1|decomp3|named|stanton-b3|fac-a|fac-b|fac-c|ohara|remark-coeff")
        ->required();
    ck_cmd->add_option("--nmax", ck_nmax, "n bound for eq4/uni, n budget for at (0 = 40t)");
    ck_cmd->add_option("--tmax", ck_tmax, "t bound for at (default 6)");
    ck_cmd->add_option("--amax", ck_amax, "a bound for fac-a/fac-b/fac-c/ohara");
    ck_cmd->add_option("--cmax", ck_cmax, "c bound for fac-a (default 80)");
    ck_cmd->add_option("--kmax", ck_kmax, "k bound for remark-coeff (default 30)");
    ck_cmd->add_option("--ttrunc", ck_ttrunc, "t truncation for remark-coeff (default 60)");
    ck_cmd->add_option("--pmax", ck_pmax, "p bound for p1/decomp3 (default 25)");
    ck_cmd->add_option("--bound", ck_bound, "largest part for stanton-b3 (default 25)");
    ck_cmd->add_option("--jobs", ck_jobs, "worker threads (default 4)");
    ck_cmd->add_flag("--json", ck_json, "JSON output");

    // scan
    auto* sc_cmd = app.add_subcommand("scan", "Conjecture scan with checkpoint/resume");
    std::string sc_which, sc_checkpoint, sc_out;
    int sc_budget = -1, sc_nmax = -1, sc_tmax = 8, sc_bmax = 7, sc_target_peaks = 3;
    long sc_every = 256, sc_stop = -1;
    unsigned sc_jobs = 4;
    sc_cmd->add_option("scan", sc_which, "centr|arith|flawless|peaks|truncated")->required();
    sc_cmd->add_option("--budget", sc_budget,
                       "primary bound: nmax (centr: 14), amax (arith: 40), size (flawless: 40), "
                       "nmax (peaks: 60, truncated: 40)");
    sc_cmd->add_option("--nmax", sc_nmax, "n bound for peaks/truncated (overrides --budget)");
    sc_cmd->add_option("--tmax", sc_tmax, "t bound for peaks (default 8)");
    sc_cmd->add_option("--target-peaks", sc_target_peaks,
                       "peak count that counts as a finding for peaks (default 3)");
    sc_cmd->add_option("--bmax", sc_bmax, "b bound for truncated (default 7)");
    sc_cmd->add_option("--jobs", sc_jobs, "worker threads (default 4)");
    sc_cmd->add_option("--checkpoint", sc_checkpoint,
                       "checkpoint file (default: $FERRERS_CHECKPOINT_DIR/<scan>.checkpoint.json "
                       "when that variable is set)");
    sc_cmd->add_option("--checkpoint-every", sc_every, "cells between checkpoints (default 256)");
    sc_cmd->add_option("--stop-after-cells", sc_stop,
                       "stop after this many new cells (interruption testing)");
    sc_cmd->add_option("--out", sc_out, "write the JSON report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (rgf_cmd->parsed()) {
            const ResolvedShape rs = resolve_shape(rgf_shape, rgf_kind);
            if (std::holds_alternative<StrictShape>(rs.shape)) {
                const StrictShape& s = std::get<StrictShape>(rs.shape);
                print_poly_report(s.to_string(), rs.kind, rgf_shifted(s), rgf_json);
            } else {
                const StraightShape& s = std::get<StraightShape>(rs.shape);
                print_poly_report(s.to_string(), rs.kind, rgf_straight(s), rgf_json);
            }
            return kOk;
        }

        if (qb_cmd->parsed()) {
            std::ostringstream name;
            name << "C(" << qb_n << "," << qb_k << ")_q";
            print_poly_report(name.str(), "qbinom", qbinom(qb_n, qb_k), qb_json);
            return kOk;
        }

        if (qa_cmd->parsed()) {
            std::ostringstream name;
            name << "C(" << qa_a << "," << qa_b << ")^q";
            print_poly_report(name.str(), "shifted", qanalog(qa_a, qa_b), qa_json);
            return kOk;
        }

        if (ft_cmd->parsed()) {
            const FTable table = build_ftable(ft_amax);
            std::ostream* os = &std::cout;
            std::ofstream file;
            if (!ft_csv.empty()) {
                file.open(ft_csv, std::ios::trunc);
                if (!file) throw std::runtime_error("cannot write " + ft_csv);
                os = &file;
            }
            *os << "a,c,f\n";
            for (int a = 0; a <= table.amax(); ++a)
                for (int c = 0; c <= 2 * a; ++c)
                    *os << a << ',' << c << ',' << table.f(a, c) << "\n";
            return kOk;
        }

        if (bi_cmd->parsed()) {
            const Int by_enum = count_ballot_words(bi_a, bi_b);
            const Int by_dp = count_ballot_words_dp(bi_a, bi_b);
            const Int by_binomial = binomial(bi_a, bi_b);
            const Int by_qanalog = qanalog(bi_a, bi_b).value_at_one();
            std::cout << "a=" << bi_a << " b=" << bi_b << "\n";
            std::cout << "ballot words (enumeration): " << by_enum << "\n";
            std::cout << "ballot words (DP): " << by_dp << "\n";
            std::cout << "binomial(a,b): " << by_binomial << "\n";
            std::cout << "C(a,b)^q coefficient sum: " << by_qanalog << "\n";

            const StrictShape outer =
                std::get<StrictShape>(make_family(ShapeFamily::qanalog(bi_a, bi_b)));
            long shown = 0, total = 0;
            bool round_trip_ok = true;
            std::string first_bad;
            for_each_contained(outer, [&](const std::vector<int>& mu_parts) {
                const StrictShape mu(mu_parts);
                const BinaryWord w = to_word(mu, bi_a);
                ++total;
                if (shown < bi_show) {
                    std::cout << "  " << mu.to_string() << " <-> " << w.to_string() << "\n";
                    ++shown;
                }
                if (bi_verify && (!w.is_ballot() || !(from_word(w) == mu))) {
                    round_trip_ok = false;
                    if (first_bad.empty()) first_bad = mu.to_string();
                }
            });
            if (bi_verify) {
                if (round_trip_ok && by_enum == by_dp && by_enum == by_binomial &&
                    by_qanalog == by_binomial && total == by_binomial) {
                    std::cout << "round-trip verified over " << total << " partitions: OK\n";
                } else {
                    std::cout << "VERIFICATION FAILED"
                              << (first_bad.empty() ? "" : " at " + first_bad) << "\n";
                    return kClaimFailed;
                }
            }
            return kOk;
        }

        if (ck_cmd->parsed()) {
            std::vector<ClaimVerdict> verdicts;
            if (ck_claim == "eq4") {
                verdicts.push_back(check_eq4(ck_nmax, ck_jobs));
            } else if (ck_claim == "uni") {
                verdicts.push_back(check_theorem_uni(ck_nmax, ck_jobs));
            } else if (ck_claim == "at") {
                const int budget = ck_cmd->count("--nmax") ? ck_nmax : 0;
                verdicts.push_back(check_theorem_at(ck_tmax, budget, ck_tmax, ck_jobs));
            } else if (ck_claim == "p1") {
                verdicts.push_back(check_lemma_p1(ck_pmax, ck_jobs));
            } else if (ck_claim == "decomp3") {
                verdicts.push_back(check_three_part_decomposition(ck_pmax, ck_jobs));
            } else if (ck_claim == "named") {
                verdicts = check_named_shapes();
            } else if (ck_claim == "stanton-b3") {
                verdicts.push_back(check_stanton_b3(ck_bound, ck_jobs));
            } else if (ck_claim == "fac-a") {
                verdicts.push_back(check_fac_a(ck_amax < 0 ? 40 : ck_amax, ck_cmax));
            } else if (ck_claim == "fac-b") {
                verdicts.push_back(check_fac_b(ck_amax < 0 ? 40 : ck_amax));
            } else if (ck_claim == "fac-c") {
                verdicts.push_back(check_fac_c(ck_amax < 0 ? 500 : ck_amax));
            } else if (ck_claim == "ohara") {
                verdicts.push_back(check_ohara_recursion(ck_amax < 0 ? 30 : ck_amax));
            } else if (ck_claim == "remark-coeff") {
                verdicts.push_back(check_remark_coeff_formula(ck_kmax, ck_ttrunc));
            } else {
                throw std::invalid_argument("unknown claim '" + ck_claim + "'");
            }
            return print_verdicts(verdicts, ck_json);
        }

        if (sc_cmd->parsed()) {
            ScanOptions opt;
            opt.jobs = sc_jobs;
            opt.checkpoint_every = sc_every;
            opt.stop_after_cells = sc_stop;
            if (!sc_checkpoint.empty()) {
                opt.checkpoint_path = sc_checkpoint;
            } else if (const char* dir = std::getenv("FERRERS_CHECKPOINT_DIR")) {
                opt.checkpoint_path = std::string(dir) + "/" + sc_which + ".checkpoint.json";
            }
            ScanReport report;
            if (sc_which == "centr") {
                report = scan_centr(sc_budget < 0 ? 14 : sc_budget, opt);
            } else if (sc_which == "arith") {
                report = scan_arith(sc_budget < 0 ? 40 : sc_budget, opt);
            } else if (sc_which == "flawless") {
                report = scan_flawless(sc_budget < 0 ? 40 : sc_budget, opt);
            } else if (sc_which == "peaks") {
                const int nmax = sc_nmax > 0 ? sc_nmax : (sc_budget > 0 ? sc_budget : 60);
                report = scan_peaks(nmax, sc_tmax, sc_target_peaks, opt);
            } else if (sc_which == "truncated") {
                const int nmax = sc_nmax > 0 ? sc_nmax : (sc_budget > 0 ? sc_budget : 40);
                report = scan_truncated_staircase(sc_bmax, nmax, opt);
            } else {
                throw std::invalid_argument("unknown scan '" + sc_which + "'");
            }
            return run_scan_command(sc_which, report, sc_out);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
