// Acceptance suite: one pass/fail line per criterion, each timed against its
// stated wall-clock budget. Exit code = number of failed criteria.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "ferrers/bijection.hpp"
#include "ferrers/diagnostics.hpp"
#include "ferrers/explore.hpp"
#include "ferrers/genfun.hpp"
#include "ferrers/json_io.hpp"
#include "ferrers/parallel.hpp"
#include "ferrers/qstruct.hpp"
#include "ferrers/shape.hpp"
#include "ferrers/verify.hpp"
#include "test_util.hpp"

using namespace ferrers;

namespace {

int failures = 0;

void criterion(int number, const std::string& what, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
    std::string detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (elapsed > budget_seconds) {
        ok = false;
        detail += (detail.empty() ? "" : "; ") + std::string("exceeded time budget of ") +
                  std::to_string(budget_seconds) + "s";
    }
    std::printf("[%s] criterion %2d (%6.2fs/%g s) %s%s%s\n", ok ? "PASS" : "FAIL", number,
                elapsed, budget_seconds, what.c_str(), detail.empty() ? "" : " -- ",
                detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

bool poly_is(const IntPoly& p, const testutil::Coeffs& want, std::string& detail,
             const std::string& name) {
    if (p == testutil::poly_of(want)) return true;
    detail += name + " got " + p.coeff_list() + "; ";
    return false;
}

constexpr unsigned kJobs = 4;

}  // namespace

int main() {
    criterion(1, "golden rank-generating functions, exact coefficients", 1.0, [](std::string& detail) {
        bool ok = true;
        ok &= poly_is(rgf_shifted(StrictShape({4, 2, 1})), {1, 1, 1, 2, 2, 2, 2, 1}, detail,
                      "F_<4,2,1>");
        ok &= poly_is(qanalog(5, 2), {1, 1, 1, 2, 2, 2, 1}, detail, "C(5,2)^q");
        ok &= poly_is(qanalog(6, 2), {1, 1, 1, 2, 2, 3, 2, 2, 1}, detail, "C(6,2)^q");
        ok &= poly_is(qanalog(9, 4),
                      {1, 1, 1, 2, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 11, 11, 10, 7, 4, 1},
                      detail, "C(9,4)^q");
        const testutil::Coeffs c104 = {1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 9, 10, 12,
                                       13, 15, 16, 17, 16, 17, 15, 14, 11, 7, 4, 1};
        ok &= poly_is(qanalog(10, 4), c104, detail, "C(10,4)^q");
        const IntPoly p = qanalog(10, 4);
        ok &= p.coeff(16) == 17 && p.coeff(17) == 16 && p.coeff(18) == 17;
        return ok;
    });

    criterion(2, "staircase product F_<b..1> = prod (1+q^i), b <= 20", 1.0,
              [](std::string& detail) {
                  for (int b = 1; b <= 20; ++b) {
                      std::vector<int> items;
                      for (int i = 1; i <= b; ++i) items.push_back(i);
                      const auto shape =
                          std::get<StrictShape>(make_family(ShapeFamily::staircase(b)));
                      if (!(rgf_shifted(shape) == testutil::poly_of(testutil::subset_sums(items)))) {
                          detail = "b=" + std::to_string(b);
                          return false;
                      }
                  }
                  return true;
              });

    criterion(3, "decomposition F = 1 + q C(n+1,2)_q + q^6 C(n+1,4)_q, 4 <= n <= 100", 10.0, [](std::string& detail) {
        const ClaimVerdict v = check_eq4(100, kJobs);
        if (!v.holds && !v.witnesses.empty())
            detail = v.witnesses.front().first + " " + v.witnesses.front().second;
        return v.holds;
    });

    criterion(4, "truncated staircases <n,n-1,n-2,n-3>: unimodal, peak at 2n, asymmetric",
              10.0, [](std::string& detail) {
                  const ClaimVerdict v = check_theorem_uni(100, kJobs);
                  if (!v.holds && !v.witnesses.empty())
                      detail = v.witnesses.front().first + " " + v.witnesses.front().second;
                  return v.holds;
              });

    criterion(5, "four-part arithmetic families: thresholds, dips, deltas, floor(t/2) law",
              120.0, [](std::string& detail) {
                  const ClaimVerdict v = check_theorem_at(6, 0, 10, kJobs);
                  bool min9 = false;
                  for (const auto& [where, d] : v.witnesses)
                      if (where == "t=2" && d == "minimal nonunimodal n = 9") min9 = true;
                  if (!v.holds && !v.witnesses.empty())
                      detail = v.witnesses.front().first + " " + v.witnesses.front().second;
                  if (!min9) detail += "; minimal nonunimodal n for t=2 is not 9";
                  return v.holds && min9;
              });

    criterion(6, "f(a,c): series match to (40,80), zero set to 40, floor formula to 500",
              30.0, [](std::string& detail) {
                  const ClaimVerdict a = check_fac_a(40, 80);
                  const ClaimVerdict b = check_fac_b(40);
                  const ClaimVerdict c = check_fac_c(500);  // covers f(6k,0), k <= 83
                  for (const ClaimVerdict* v : {&a, &b, &c})
                      if (!v->holds && !v->witnesses.empty())
                          detail += v->claim_id + ": " + v->witnesses.front().second + "; ";
                  return a.holds && b.holds && c.holds;
              });

    criterion(7, "auxiliary identities to a,k <= 30 (failures reported verbatim, never patched)",
              30.0, [](std::string& detail) {
                  const ClaimVerdict ohara = check_ohara_recursion(30);
                  const ClaimVerdict remark = check_remark_coeff_formula(30, 60);
                  // A failing auxiliary identity is an acceptable outcome if and
                  // only if the discrepancy is carried verbatim in witnesses.
                  bool ok = true;
                  for (const ClaimVerdict* v : {&ohara, &remark}) {
                      if (v->holds) continue;
                      if (v->witnesses.empty()) {
                          detail += v->claim_id + ": failed without witnesses; ";
                          ok = false;
                      } else {
                          detail += v->claim_id + " discrepancy: " + v->witnesses.front().first +
                                    " " + v->witnesses.front().second + "; ";
                      }
                  }
                  return ok;
              });

    criterion(8, "ballot-word bijection: counts to a=24, round trips to a=18", 30.0,
              [](std::string& detail) {
                  std::vector<std::pair<int, int>> cells;
                  for (int a = 2; a <= 24; ++a)
                      for (int b = 1; 2 * b <= a; ++b) cells.push_back({a, b});
                  std::vector<char> ok(cells.size(), 1);
                  parallel_for(cells.size(), kJobs, [&](size_t i) {
                      const auto [a, b] = cells[i];
                      const Int expect = binomial(a, b);
                      if (qanalog(a, b).value_at_one() != expect) ok[i] = 0;
                      if (count_ballot_words(a, b) != expect) ok[i] = 0;
                      if (count_ballot_words_dp(a, b) != expect) ok[i] = 0;
                      if (a <= 18) {
                          const auto outer =
                              std::get<StrictShape>(make_family(ShapeFamily::qanalog(a, b)));
                          Int seen = 0;
                          for_each_contained(outer, [&](const std::vector<int>& mu_parts) {
                              const StrictShape mu(mu_parts);
                              const BinaryWord w = to_word(mu, a);
                              if (!w.is_ballot() || !(from_word(w) == mu)) ok[i] = 0;
                              ++seen;
                          });
                          if (seen != expect) ok[i] = 0;
                      }
                  });
                  for (size_t i = 0; i < cells.size(); ++i)
                      if (!ok[i]) {
                          detail = "a=" + std::to_string(cells[i].first) +
                                   " b=" + std::to_string(cells[i].second);
                          return false;
                      }
                  return true;
              });

    criterion(9, "three-part shapes: rise law, decompositions, unimodality to bound 25", 60.0,
              [](std::string& detail) {
                  const ClaimVerdict p1 = check_lemma_p1(25, kJobs);
                  const ClaimVerdict d3 = check_three_part_decomposition(25, kJobs);
                  const ClaimVerdict st = check_stanton_b3(25, kJobs);
                  for (const ClaimVerdict* v : {&p1, &d3, &st})
                      if (!v->holds && !v->witnesses.empty())
                          detail += v->claim_id + ": " + v->witnesses.front().first + "; ";
                  return p1.holds && d3.holds && st.holds;
              });

    criterion(10, "named shapes: nonunimodal set with exactly two peaks each", 10.0,
              [](std::string& detail) {
                  bool ok = true;
                  for (const ClaimVerdict& v : check_named_shapes()) {
                      if (!v.holds) {
                          ok = false;
                          detail += v.parameter_range + "; ";
                      }
                  }
                  return ok;
              });

    criterion(11, "oracle equivalence: DP vs enumeration (strict exhaustive, straight random)",
              60.0, [](std::string& detail) {
                  std::vector<std::vector<int>> shapes;
                  for (int mask = 0; mask < (1 << 12); ++mask) {
                      if (__builtin_popcount(static_cast<unsigned>(mask)) > 5) continue;
                      std::vector<int> parts;
                      for (int v = 12; v >= 1; --v)
                          if (mask & (1 << (v - 1))) parts.push_back(v);
                      shapes.push_back(std::move(parts));
                  }
                  std::vector<char> ok(shapes.size(), 1);
                  parallel_for(shapes.size(), kJobs, [&](size_t i) {
                      const StrictShape s(shapes[i]);
                      if (!(rgf_shifted(s) == oracle_rgf(s))) ok[i] = 0;
                  });
                  if (std::find(ok.begin(), ok.end(), 0) != ok.end()) {
                      detail = "strict shape mismatch";
                      return false;
                  }

                  // mt19937 output is bit-exact across implementations; the
                  // modulo mapping keeps the sampled shapes identical too.
                  std::mt19937 rng(12345);
                  std::vector<std::vector<int>> straight;
                  while (straight.size() < 500) {
                      const int len = 1 + static_cast<int>(rng() % 6);
                      std::vector<int> parts(static_cast<size_t>(len));
                      for (auto& p : parts) p = 1 + static_cast<int>(rng() % 10);
                      std::sort(parts.rbegin(), parts.rend());
                      int total = 0;
                      for (int p : parts) total += p;
                      if (total <= 30) straight.push_back(std::move(parts));
                  }
                  std::vector<char> ok2(straight.size(), 1);
                  parallel_for(straight.size(), kJobs, [&](size_t i) {
                      const StraightShape s(straight[i]);
                      if (!(rgf_straight(s) == oracle_rgf(s))) ok2[i] = 0;
                  });
                  if (std::find(ok2.begin(), ok2.end(), 0) != ok2.end()) {
                      detail = "straight shape mismatch";
                      return false;
                  }
                  return true;
              });

    criterion(12, "F symmetric exactly for staircases and single parts (largest part <= 15)",
              60.0, [](std::string& detail) {
                  std::vector<char> ok(1 << 15, 1);
                  parallel_for(static_cast<size_t>(1) << 15, kJobs, [&](size_t mask) {
                      std::vector<int> parts;
                      for (int v = 15; v >= 1; --v)
                          if (mask & (1u << (v - 1))) parts.push_back(v);
                      const StrictShape shape(parts);
                      const bool expected =
                          parts.size() <= 1 ||
                          parts.front() == static_cast<int>(parts.size());  // staircase
                      if (diagnose(rgf_shifted(shape)).symmetric != expected) ok[mask] = 0;
                  });
                  for (size_t mask = 0; mask < ok.size(); ++mask)
                      if (!ok[mask]) {
                          detail = "mask " + std::to_string(mask);
                          return false;
                      }
                  return true;
              });

    criterion(13, "conjecture scans: deterministic, resume-identical, no counterexamples",
              600.0, [](std::string& detail) {
                  const auto tmp = std::filesystem::temp_directory_path();
                  ScanOptions full;
                  full.jobs = kJobs;

                  struct Case {
                      std::string name;
                      std::function<ScanReport(const ScanOptions&)> run;
                  };
                  const std::vector<Case> cases = {
                      {"centr", [](const ScanOptions& o) { return scan_centr(14, o); }},
                      {"arith", [](const ScanOptions& o) { return scan_arith(40, o); }},
                      {"flawless", [](const ScanOptions& o) { return scan_flawless(40, o); }},
                      {"truncated",
                       [](const ScanOptions& o) { return scan_truncated_staircase(7, 40, o); }},
                  };
                  for (const Case& c : cases) {
                      const ScanReport direct = c.run(full);
                      if (!direct.complete()) {
                          detail += c.name + ": incomplete; ";
                          return false;
                      }
                      if (!direct.counterexamples.empty()) {
                          detail += c.name + ": counterexample " +
                                    direct.counterexamples.front().shape + "; ";
                          return false;
                      }
                      // Interrupt roughly mid-scan, then resume.
                      const std::string ckpt =
                          (tmp / ("ferrers_acceptance_" + c.name + ".checkpoint.json")).string();
                      std::filesystem::remove(ckpt);
                      ScanOptions interrupted = full;
                      interrupted.checkpoint_path = ckpt;
                      interrupted.checkpoint_every = 16;
                      interrupted.stop_after_cells = std::max<long>(1, direct.cells_total / 2);
                      const ScanReport partial = c.run(interrupted);
                      if (partial.complete()) {
                          detail += c.name + ": interruption did not interrupt; ";
                          return false;
                      }
                      ScanOptions resume = full;
                      resume.checkpoint_path = ckpt;
                      const ScanReport resumed = c.run(resume);
                      std::filesystem::remove(ckpt);
                      if (report_to_json_string(resumed) != report_to_json_string(direct)) {
                          detail += c.name + ": resume report differs; ";
                          return false;
                      }
                  }
                  return true;
              });

    if (failures == 0) {
        std::printf("all 13 acceptance criteria passed\n");
    } else {
        std::printf("%d acceptance criteria FAILED\n", failures);
    }
    return failures;
}
