#include "ferrers/explore.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ferrers/genfun.hpp"
#include "ferrers/json_io.hpp"
#include "ferrers/parallel.hpp"
#include "ferrers/version.hpp"

namespace ferrers {

namespace {

struct CellOutcome {
    long shapes = 0;
    std::vector<CounterexampleEntry> counterexamples;
    std::vector<NotableEntry> notable;
    std::map<std::string, long> stat_max;  // folded as running maxima
};

CounterexampleEntry make_entry(const StrictShape& shape, const IntPoly& f,
                               const SeqDiagnostics& d, std::string note, int oracle_budget = 60) {
    CounterexampleEntry e;
    e.shape = shape.to_string();
    e.kind = "shifted";
    e.coeffs = f.coeff_strings();
    e.diagnostics = d;
    e.note = std::move(note);
    if (shape.total() <= oracle_budget) {
        if (oracle_rgf(shape) == f) {
            e.oracle_checked = true;
        } else {
            e.note += " [ORACLE MISMATCH: DP and enumeration disagree]";
        }
    }
    return e;
}

void write_file_atomic(const std::string& path, const std::string& content) {
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write checkpoint file " + tmp);
        out << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw std::runtime_error("cannot move checkpoint into place at " + path);
}

void write_checkpoint(const std::string& path, const ScanReport& report) {
    nlohmann::json j;
    j["checkpoint"] = true;
    j["version"] = kVersion;
    j["report"] = report_to_json(report);
    write_file_atomic(path, j.dump(2) + "\n");
}

bool load_checkpoint(const std::string& path, const std::string& conjecture,
                     const std::map<std::string, long>& bounds, long cells_total,
                     ScanReport& out) {
    std::ifstream in(path);
    if (!in) return false;
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw std::runtime_error("checkpoint " + path + " is not valid JSON: " + e.what());
    }
    if (!j.value("checkpoint", false))
        throw std::runtime_error("file " + path + " is not a scan checkpoint");
    if (j.value("version", "") != kVersion)
        throw std::runtime_error("checkpoint " + path + " was written by a different version");
    ScanReport saved = report_from_json(j.at("report"));
    if (saved.conjecture != conjecture || saved.bounds != bounds ||
        saved.cells_total != cells_total)
        throw std::runtime_error("checkpoint " + path + " does not match this scan's spec");
    out = std::move(saved);
    return true;
}

// Deterministic chunked runner: workers evaluate cells of one chunk in
// parallel, the single reducer folds outcomes in canonical cell order.
ScanReport run_cells(const std::string& conjecture, std::map<std::string, long> bounds,
                     long cells_total, const std::function<CellOutcome(long)>& eval,
                     const ScanOptions& options) {
    ScanReport report;
    report.conjecture = conjecture;
    report.bounds = std::move(bounds);
    report.cells_total = cells_total;

    if (!options.checkpoint_path.empty())
        load_checkpoint(options.checkpoint_path, conjecture, report.bounds, cells_total, report);

    const long chunk = std::max<long>(64, static_cast<long>(options.jobs) * 16);
    long since_checkpoint = 0;
    long processed_this_run = 0;

    while (report.cells_done < cells_total) {
        long end = std::min(cells_total, report.cells_done + chunk);
        if (options.stop_after_cells >= 0)
            end = std::min(end, report.cells_done + (options.stop_after_cells - processed_this_run));
        if (end <= report.cells_done) break;  // stop budget exhausted

        const long base = report.cells_done;
        std::vector<CellOutcome> slots(static_cast<size_t>(end - base));
        parallel_for(slots.size(), options.jobs,
                     [&](size_t i) { slots[i] = eval(base + static_cast<long>(i)); });

        for (CellOutcome& out : slots) {
            report.shapes_tested += out.shapes;
            for (auto& c : out.counterexamples) report.counterexamples.push_back(std::move(c));
            for (auto& n : out.notable) report.notable.push_back(std::move(n));
            for (const auto& [key, value] : out.stat_max) {
                auto it = report.stats.find(key);
                if (it == report.stats.end())
                    report.stats[key] = value;
                else
                    it->second = std::max(it->second, value);
            }
            ++report.cells_done;
        }
        since_checkpoint += end - base;
        processed_this_run += end - base;

        if (!options.checkpoint_path.empty() &&
            (since_checkpoint >= options.checkpoint_every || report.cells_done == cells_total)) {
            write_checkpoint(options.checkpoint_path, report);
            since_checkpoint = 0;
        }
        if (options.stop_after_cells >= 0 && processed_this_run >= options.stop_after_cells) {
            if (!options.checkpoint_path.empty() && since_checkpoint > 0)
                write_checkpoint(options.checkpoint_path, report);
            return report;
        }
    }
    return report;
}

}  // namespace

ScanReport scan_centr(int nmax, const ScanOptions& options) {
    if (nmax < 1) throw std::invalid_argument("scan_centr: nmax must be >= 1");
    auto eval = [](long cell) {
        const int n = static_cast<int>(cell) + 1;
        CellOutcome out;
        for (int a : {2 * n + 1, 2 * n}) {
            const StrictShape shape =
                std::get<StrictShape>(make_family(ShapeFamily::qanalog(a, n)));
            const IntPoly f = rgf_shifted(shape);
            const SeqDiagnostics d = diagnose(f);
            ++out.shapes;
            if (!d.unimodal)
                out.counterexamples.push_back(make_entry(
                    shape, f, d,
                    "C(" + std::to_string(a) + "," + std::to_string(n) + ")^q not unimodal"));
        }
        return out;
    };
    return run_cells("centr", {{"nmax", nmax}}, nmax, eval, options);
}

ScanReport scan_arith(int amax, const ScanOptions& options) {
    if (amax < 1) throw std::invalid_argument("scan_arith: amax must be >= 1");
    // Cells (a, t) in lex order; b = ceil(a/t) is the unique length putting
    // the last part in [1, t].
    std::vector<std::pair<int, int>> cells;
    for (int a = 1; a <= amax; ++a)
        for (int t = 1; t <= a; ++t) cells.push_back({a, t});
    auto eval = [cells](long cell) {
        const auto [a, t] = cells[static_cast<size_t>(cell)];
        const int b = (a + t - 1) / t;
        const StrictShape shape =
            std::get<StrictShape>(make_family(ShapeFamily::arithmetic(a, t, b)));
        CellOutcome out;
        out.shapes = 1;
        const IntPoly f = rgf_shifted(shape);
        const SeqDiagnostics d = diagnose(f);
        if (!d.unimodal)
            out.counterexamples.push_back(
                make_entry(shape, f, d,
                           "arithmetic family a=" + std::to_string(a) + " t=" + std::to_string(t) +
                               " b=" + std::to_string(b) + " not unimodal"));
        return out;
    };
    return run_cells("arith", {{"amax", amax}}, static_cast<long>(cells.size()), eval, options);
}

namespace {

void strict_partitions_rec(int remaining, int max_part, std::vector<int>& parts,
                           std::vector<std::vector<int>>& out) {
    out.push_back(parts);
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        parts.push_back(p);
        strict_partitions_rec(remaining - p, p - 1, parts, out);
        parts.pop_back();
    }
}

}  // namespace

ScanReport scan_flawless(int size_budget, const ScanOptions& options) {
    if (size_budget < 1) throw std::invalid_argument("scan_flawless: size_budget must be >= 1");
    // Every strict shape with size <= budget, children enumerated
    // largest-first so the order is deterministic.
    std::vector<std::vector<int>> cells;
    std::vector<int> parts;
    strict_partitions_rec(size_budget, size_budget, parts, cells);
    auto eval = [cells](long cell) {
        const StrictShape shape(cells[static_cast<size_t>(cell)]);
        CellOutcome out;
        out.shapes = 1;
        const IntPoly f = rgf_shifted(shape);
        if (shape.empty()) return out;  // F = 1, trivially flawless
        const SeqDiagnostics d = diagnose(f);
        if (!d.flawless)
            out.counterexamples.push_back(make_entry(shape, f, d, "F not flawless"));
        return out;
    };
    return run_cells("flawless", {{"size_budget", size_budget}},
                     static_cast<long>(cells.size()), eval, options);
}

ScanReport scan_peaks(int nmax, int tmax, int target_peaks, const ScanOptions& options) {
    if (nmax < 4 || tmax < 1) throw std::invalid_argument("scan_peaks: need nmax >= 4, tmax >= 1");
    if (target_peaks < 2) throw std::invalid_argument("scan_peaks: target_peaks must be >= 2");
    std::vector<std::pair<int, int>> cells;
    for (int t = 1; t <= tmax; ++t)
        for (int n = 3 * t + 1; n <= nmax; ++n) cells.push_back({t, n});
    auto eval = [cells, target_peaks](long cell) {
        const auto [t, n] = cells[static_cast<size_t>(cell)];
        const StrictShape shape({n, n - t, n - 2 * t, n - 3 * t});
        CellOutcome out;
        out.shapes = 1;
        const IntPoly f = rgf_shifted(shape);
        const SeqDiagnostics d = diagnose(f);
        out.stat_max["max_peak_count"] = d.peak_count;
        if (d.peak_count >= target_peaks)
            out.counterexamples.push_back(
                make_entry(shape, f, d, std::to_string(d.peak_count) + " peaks"));
        return out;
    };
    return run_cells("peaks", {{"nmax", nmax}, {"target_peaks", target_peaks}, {"tmax", tmax}},
                     static_cast<long>(cells.size()), eval, options);
}

ScanReport scan_truncated_staircase(int bmax, int nmax, const ScanOptions& options) {
    if (bmax < 1 || nmax < 1)
        throw std::invalid_argument("scan_truncated_staircase: bounds must be >= 1");
    std::vector<std::pair<int, int>> cells;
    for (int b = 1; b <= bmax; ++b)
        for (int n = b; n <= nmax; ++n) cells.push_back({b, n});
    auto eval = [cells](long cell) {
        const auto [b, n] = cells[static_cast<size_t>(cell)];
        const StrictShape shape =
            std::get<StrictShape>(make_family(ShapeFamily::truncated_staircase(n, b)));
        CellOutcome out;
        out.shapes = 1;
        const IntPoly f = rgf_shifted(shape);
        const SeqDiagnostics d = diagnose(f);
        if (!d.unimodal) {
            if (b == 6) {
                // b=6 is the one width where nonunimodal truncated
                // staircases are expected; record them without alarm.
                out.notable.push_back(
                    {"b=6 nonunimodal", shape.to_string() + " peaks=" +
                                            std::to_string(d.peak_count) + " first_dip=" +
                                            std::to_string(d.first_dip.value())});
            } else {
                out.counterexamples.push_back(make_entry(
                    shape, f, d, "truncated staircase b=" + std::to_string(b) + " not unimodal"));
            }
        }
        return out;
    };
    return run_cells("truncated_staircase", {{"bmax", bmax}, {"nmax", nmax}},
                     static_cast<long>(cells.size()), eval, options);
}

}  // namespace ferrers
