#pragma once

#include <map>
#include <string>
#include <vector>

#include "ferrers/diagnostics.hpp"

namespace ferrers {

/// Execution knobs for a scan. Only mathematical inputs (the bounds passed
/// to each scan function) shape the report; jobs, checkpointing and the
/// test-only stop_after_cells hook never change its content.
struct ScanOptions {
    unsigned jobs = 1;
    std::string checkpoint_path;   // empty = no checkpointing
    long checkpoint_every = 256;   // cells between checkpoint writes
    long stop_after_cells = -1;    // stop early after this many new cells (tests)
};

struct CounterexampleEntry {
    std::string shape;  // "<9,7,5,3>"
    std::string kind;   // "shifted" | "straight"
    std::vector<std::string> coeffs;
    SeqDiagnostics diagnostics;
    bool oracle_checked = false;  // re-verified against the enumeration oracle
    std::string note;
};

struct NotableEntry {
    std::string label;
    std::string detail;
};

/// Persisted verdict stream of one conjecture scan. Deterministic: identical
/// for any worker count and for any interrupt/resume history.
struct ScanReport {
    std::string conjecture;
    std::map<std::string, long> bounds;  // spec echo
    long shapes_tested = 0;
    long cells_done = 0;
    long cells_total = 0;
    std::vector<CounterexampleEntry> counterexamples;
    std::vector<NotableEntry> notable;
    std::map<std::string, long> stats;  // running maxima (e.g. max_peak_count)

    bool complete() const { return cells_done == cells_total; }
};

/// Unimodality of the central q-analogs C(2n+1,n)^q and C(2n,n)^q, n <= nmax.
ScanReport scan_centr(int nmax, const ScanOptions& options = {});

/// Unimodality over the arithmetic-progression family with last part in
/// [1, t] (equivalently t >= a/b), all a <= amax.
ScanReport scan_arith(int amax, const ScanOptions& options = {});

/// Flawlessness of F for every strict shape of size <= size_budget.
ScanReport scan_flawless(int size_budget, const ScanOptions& options = {});

/// Peak census over the 4-part family <n,n-t,n-2t,n-3t>, t <= tmax,
/// n <= nmax; shapes reaching target_peaks peaks (>= 3) are findings.
ScanReport scan_peaks(int nmax, int tmax, int target_peaks = 3,
                      const ScanOptions& options = {});

/// Unimodality map of truncated staircases <n,...,n-b+1>, b <= bmax,
/// n <= nmax. Known b=6 nonunimodal shapes land in notable; any other
/// nonunimodal shape is a counterexample-grade finding.
ScanReport scan_truncated_staircase(int bmax, int nmax, const ScanOptions& options = {});

}  // namespace ferrers
