// Copyright (c) 2026 the socf authors
// SPDX-License-Identifier: Apache-2.0
//
// Desk-scale acceptance checks for the library's headline guarantees.
//
// Each check prints exactly one PASS/FAIL line with its runtime; the
// process exits nonzero if any check fails.  The checks exercise, end to
// end: exact contracted expansions against reference data, agreement of
// independent digit routes on random sources, the Theta quality bound at
// every record, filter equality for small thresholds, bounded return
// times, closed-form and quadrature measures, seeded orbit statistics,
// and the three-in-a-row quality window.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "socf/analytics.hpp"
#include "socf/induction.hpp"
#include "socf/measure.hpp"
#include "socf/region.hpp"
#include "socf/rng.hpp"
#include "socf/surd.hpp"
#include "socf/tail_source.hpp"

#ifndef SOCF_TEST_DATA_DIR
#error "SOCF_TEST_DATA_DIR must point at the tests/data directory"
#endif

using namespace socf;

namespace {

int g_fails = 0;

struct Outcome {
  bool pass = false;
  std::string detail;
};

/// Run one check, timing it and folding exceptions into a failure.  A check
/// that passes but overruns its time budget (seconds; 0 disables) fails.
void run_check(int idx, const char* what, double budget,
               const std::function<Outcome()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                    .count();
  if (o.pass && budget > 0.0 && secs > budget) {
    o.pass = false;
    std::ostringstream ss;
    ss << "time budget exceeded: " << secs << " s > " << budget << " s";
    o.detail = ss.str();
  }
  if (o.pass) {
    std::printf("PASS  check %2d  %-62s %7.2f s\n", idx, what, secs);
  } else {
    std::printf("FAIL  check %2d  %-62s %7.2f s  [%s]\n", idx, what, secs,
                o.detail.c_str());
    ++g_fails;
  }
  std::fflush(stdout);
}

std::string pi_minus_3() {
  static const std::string cached = [] {
    std::ifstream in(std::string(SOCF_TEST_DATA_DIR) + "/pi_minus_3_500.txt");
    std::string line;
    std::getline(in, line);
    if (line.empty()) throw std::runtime_error("missing decimal fixture");
    return line;
  }();
  return cached;
}

struct ExpectedRecord {
  const char* alpha;
  const char* beta;
  const char* pq;  // "P/Q"
  std::size_t n;
  const char* cell;
};

// Contracted expansion of pi - 3 against the jump(2) window: records 0..11.
const ExpectedRecord kJump2Pi[] = {
    {"1/1", "0/1", "0/1", 0, "D0(7)"},
    {"1/1", "7/1", "1/7", 1, "D0(15)"},
    {"-1/1", "16/1", "16/113", 3, "D1(292)"},
    {"-1/3", "881/3", "14093/99532", 7, "D3(2)"},
    {"-3/1", "11/1", "51669/364913", 9, "D1(3)"},
    {"-1/1", "5/1", "244252/1725033", 11, "D1(14)"},
    {"1/1", "15/1", "3612111/25510582", 12, "D0(2)"},
    {"1/2", "5/2", "18549059/131002976", 15, "D2(2)"},
    {"2/1", "5/1", "48178703/340262731", 16, "D0(2)"},
    {"1/1", "2/1", "114906465/811528438", 17, "D0(2)"},
    {"1/1", "2/1", "277991633/1963319607", 18, "D0(2)"},
    {"-1/1", "3/1", "948881364/6701487259", 20, "D1(84)"},
};

// The same number against the optimal window: records 0..11.
const ExpectedRecord kHurwitzPi[] = {
    {"1/1", "0/1", "0/1", 0, "D1(7)"},
    {"1/1", "7/1", "1/7", 1, "D1(15)"},
    {"-1/1", "16/1", "16/113", 3, "D21(292)"},
    {"-1/1", "294/1", "4703/33215", 5, "D21(1)"},
    {"-1/1", "3/1", "14093/99532", 7, "D21(2)"},
    {"-1/1", "4/1", "51669/364913", 9, "D21(3)"},
    {"-1/1", "5/1", "244252/1725033", 11, "D21(14)"},
    {"1/1", "15/1", "3612111/25510582", 12, "D1(2)"},
    {"1/2", "5/2", "18549059/131002976", 15, "D3(2)"},
    {"2/1", "5/1", "48178703/340262731", 16, "D1(2)"},
    {"1/1", "2/1", "114906465/811528438", 17, "D1(2)"},
    {"1/1", "2/1", "277991633/1963319607", 18, "D1(2)"},
};

std::string pq_string(const Int& P, const Int& Q) {
  return P.get_str() + "/" + Q.get_str();
}

/// Stream 12 records of pi - 3 against r and compare every field with the
/// reference table.
Outcome check_pi_records(const Region& r, const ExpectedRecord (&want)[12]) {
  SocfStream stream(r, TailSource::from_decimal(pi_minus_3()));
  for (const ExpectedRecord& w : want) {
    SocfStream::Record rec = stream.next();
    bool ok = rec.alpha.to_string() == w.alpha &&
              rec.beta.to_string() == w.beta &&
              pq_string(rec.P, rec.Q) == w.pq && rec.n == w.n;
    if (!ok) {
      std::ostringstream ss;
      ss << "record " << rec.k << ": got alpha=" << rec.alpha.to_string()
         << " beta=" << rec.beta.to_string() << " P/Q="
         << pq_string(rec.P, rec.Q) << " n=" << rec.n << ", want " << w.alpha
         << " " << w.beta << " " << w.pq << " n=" << w.n;
      return {false, ss.str()};
    }
  }
  return {true, ""};
}

/// Cell itinerary of the 12 landings against the reference table.
Outcome check_pi_cells(const Region& r, const ExpectedRecord (&want)[12],
                       bool jump_labels) {
  SocfStream stream(r, TailSource::from_decimal(pi_minus_3()));
  for (const ExpectedRecord& w : want) {
    SocfStream::Record rec = stream.next();
    std::string label = jump_labels ? jump_cell_label(rec.step)
                                    : hurwitz_cell_label(rec.step);
    if (label != w.cell) {
      std::ostringstream ss;
      ss << "record " << rec.k << ": landed in " << label << ", want "
         << w.cell;
      return {false, ss.str()};
    }
  }
  return {true, ""};
}

struct WindowCase {
  Region region;
  SurdValue epsilon;
};

std::vector<WindowCase> window_cases() {
  std::vector<WindowCase> cases;
  cases.push_back({builtin_jump(2), SurdValue(BigFraction(1, 2))});
  cases.push_back({builtin_jump(3), SurdValue(BigFraction(1, 3))});
  cases.push_back({builtin_legendre(BigFraction(2, 5)),
                   SurdValue(BigFraction(2, 5))});
  cases.push_back({builtin_hurwitz(), SurdValue(0, 1, 5, 5)});  // 1/sqrt(5)
  return cases;
}

/// Expansion agreement on one random source: batch, stream, continuant
/// reference, and the matched plain convergents must coincide exactly.
Outcome check_one_expansion(const Region& r, std::uint64_t seed,
                            std::size_t K) {
  SocfResult batch = socf_digits(r, TailSource::random(seed), K);
  std::ostringstream where;
  where << r.label << " seed " << seed;

  SocfStream stream(r, TailSource::random(seed));
  SocfStream::Record r0 = stream.next();
  if (r0.beta != batch.beta0 || r0.alpha != batch.alpha0)
    return {false, where.str() + ": stream and batch disagree at record 0"};
  std::vector<std::size_t> hits{r0.n};
  for (std::size_t k = 1; k <= K; ++k) {
    SocfStream::Record rec = stream.next();
    if (rec.alpha != batch.digits[k - 1].alpha ||
        rec.beta != batch.digits[k - 1].beta) {
      std::ostringstream ss;
      ss << where.str() << ": stream and batch disagree at record " << k;
      return {false, ss.str()};
    }
    hits.push_back(rec.n);
  }

  SocfResult ref = socf_digits_oracle(TailSource::random(seed), hits, K);
  if (ref.beta0 != batch.beta0 || ref.alpha0 != batch.alpha0)
    return {false, where.str() + ": continuant reference disagrees at record 0"};
  for (std::size_t k = 0; k < K; ++k) {
    if (ref.digits[k].alpha != batch.digits[k].alpha ||
        ref.digits[k].beta != batch.digits[k].beta) {
      std::ostringstream ss;
      ss << where.str() << ": continuant reference disagrees at record "
         << k + 1;
      return {false, ss.str()};
    }
  }

  std::vector<GcfConvergent> gc =
      gcf_convergents(batch.beta0, batch.alpha0, batch.digits, K, hits);
  TailSource plain = TailSource::random(seed);
  std::vector<ConvergentPair> cs = convergents(plain, hits.back() + 1);
  for (std::size_t k = 0; k <= K; ++k) {
    bool ok;
    if (hits[k] == 0) {
      ok = gc[k].P == 0 && gc[k].Q == 1;
    } else {
      ok = gc[k].P == cs[hits[k] - 1].p && gc[k].Q == cs[hits[k] - 1].q;
    }
    if (!ok) {
      std::ostringstream ss;
      ss << where.str() << ": convergent " << k
         << " does not reduce to the plain convergent at n=" << hits[k];
      return {false, ss.str()};
    }
  }
  return {true, ""};
}

double rect_reference(double x1, double x2, double y1, double y2) {
  return std::log1p((x2 - x1) * (y2 - y1) / ((1.0 + x2 * y1) * (1.0 + x1 * y2))) /
         std::log(2.0);
}

Region rect_region(const BigFraction& x1, const BigFraction& x2,
                   const BigFraction& y1, const BigFraction& y2) {
  Cell cell;
  cell.emplace_back(SurdValue(-x1), SurdValue(1), SurdValue(0), SurdValue(0),
                    Rel::GE);
  cell.emplace_back(SurdValue(x2), SurdValue(-1), SurdValue(0), SurdValue(0),
                    Rel::GE);
  cell.emplace_back(SurdValue(-y1), SurdValue(0), SurdValue(1), SurdValue(0),
                    Rel::GE);
  cell.emplace_back(SurdValue(y2), SurdValue(0), SurdValue(-1), SurdValue(0),
                    Rel::GE);
  Region r;
  r.cells.push_back(std::move(cell));
  r.label = "rect";
  return r;
}

}  // namespace

int main() {
  std::printf("socf acceptance checks\n");

  run_check(1, "pi vs jump(2): 12 exact contracted records", 1.0, [] {
    return check_pi_records(builtin_jump(2), kJump2Pi);
  });

  run_check(2, "pi vs the optimal window: 12 exact contracted records", 1.0,
            [] { return check_pi_records(builtin_hurwitz(), kHurwitzPi); });

  run_check(3, "pi orbit itinerary: cell labels of 12 landings", 0.0, [] {
    Outcome a = check_pi_cells(builtin_jump(2), kJump2Pi, true);
    if (!a.pass) return a;
    return check_pi_cells(builtin_hurwitz(), kHurwitzPi, false);
  });

  run_check(4, "random sources: digit routes agree (100 seeds x 4 windows)",
            60.0, [] {
              for (const WindowCase& c : window_cases()) {
                for (std::uint64_t seed = 1; seed <= 100; ++seed) {
                  Outcome o = check_one_expansion(c.region, seed, 50);
                  if (!o.pass) return o;
                }
              }
              return Outcome{true, ""};
            });

  run_check(5, "random sources: Theta <= eps at all 50 records per orbit",
            0.0, [] {
              for (const WindowCase& c : window_cases()) {
                for (std::uint64_t seed = 1; seed <= 100; ++seed) {
                  SuperoptimalReport rep = verify_superoptimal(
                      TailSource::random(seed), c.region, c.epsilon, 2.0, 50);
                  if (!rep.theta_ok || !rep.seidel_ok) {
                    std::ostringstream ss;
                    ss << c.region.label << " seed " << seed << ": "
                       << rep.verdict;
                    return Outcome{false, ss.str()};
                  }
                }
              }
              return Outcome{true, ""};
            });

  run_check(6, "threshold filter equality (25 seeds x 3 thresholds)", 0.0,
            [] {
              const BigFraction thresholds[] = {
                  BigFraction(1, 2), BigFraction(2, 5), BigFraction(1, 4)};
              for (const BigFraction& eps0 : thresholds) {
                for (std::uint64_t seed = 1; seed <= 25; ++seed) {
                  LegendreReport rep =
                      legendre_exactness(TailSource::random(seed), eps0, 10);
                  if (!rep.equal) {
                    std::ostringstream ss;
                    ss << "eps0=" << eps0.to_string() << " seed " << seed
                       << ": index lists differ";
                    return Outcome{false, ss.str()};
                  }
                }
              }
              return Outcome{true, ""};
            });

  run_check(7, "return times <= 3 on the optimal window; D22 digit bound",
            0.0, [] {
              for (int a = 1; a <= 3; ++a) {
                if (hurwitz_d22_feasible(Int(a))) {
                  std::ostringstream ss;
                  ss << "D22 reported feasible for digit " << a;
                  return Outcome{false, ss.str()};
                }
              }
              if (!hurwitz_d22_feasible(Int(4)))
                return Outcome{false, "D22 reported infeasible for digit 4"};

              Region h = builtin_hurwitz();
              for (std::uint64_t seed = 1; seed <= 20; ++seed) {
                NEPoint z{TailSource::random(seed), BigFraction(0), 0};
                for (int i = 0; i < 5000; ++i) {
                  InducedStep s = induced_step(h, z);
                  if (s.j > 3) {
                    std::ostringstream ss;
                    ss << "seed " << seed << " step " << i
                       << ": return time " << s.j;
                    return Outcome{false, ss.str()};
                  }
                }
              }
              return Outcome{true, ""};
            });

  run_check(8, "invariant measure: closed forms and certified brackets", 0.0,
            [] {
              const double ln2 = std::log(2.0);
              struct Closed {
                Region r;
                double want;
              };
              const Closed closed[] = {
                  {builtin_jump(2), std::log(1.5) / ln2},
                  {builtin_jump(3), std::log(4.0 / 3.0) / ln2},
                  {builtin_legendre(BigFraction(1, 2)), 0.5 / ln2},
                  {builtin_legendre(BigFraction(2, 5)), 0.4 / ln2},
                  {builtin_legendre(BigFraction(1, 4)), 0.25 / ln2},
                  {builtin_hurwitz(), 1.0 / (std::sqrt(5.0) * ln2)},
              };
              for (const Closed& c : closed) {
                double got = measure(c.r).value;
                if (std::fabs(got - c.want) > 1e-9) {
                  std::ostringstream ss;
                  ss << c.r.label << ": measure " << got << ", want "
                     << c.want;
                  return Outcome{false, ss.str()};
                }
              }

              SplitMix64 rng(777);
              for (int i = 0; i < 20; ++i) {
                long a = static_cast<long>(rng.next() % 60);
                long b = a + 1 + static_cast<long>(rng.next() % (63 - a));
                long c = static_cast<long>(rng.next() % 60);
                long d = c + 1 + static_cast<long>(rng.next() % (63 - c));
                BigFraction x1(a, 64), x2(b, 64), y1(c, 64), y2(d, 64);
                Region r = rect_region(x1, x2, y1, y2);
                double ref = rect_reference(x1.to_double(), x2.to_double(),
                                            y1.to_double(), y2.to_double());
                double got = measure(r).value;
                DarbouxResult db = measure_darboux(r, 1e-4);
                bool ok = std::fabs(got - ref) <= 1e-9 &&
                          db.lower <= ref + 1e-12 && db.upper >= ref - 1e-12 &&
                          db.upper - db.lower <= 1e-4;
                if (!ok) {
                  std::ostringstream ss;
                  ss << "rectangle " << i << ": closed form " << ref
                     << ", measure " << got << ", bracket [" << db.lower
                     << ", " << db.upper << "]";
                  return Outcome{false, ss.str()};
                }
              }
              return Outcome{true, ""};
            });

  run_check(9, "seeded orbit statistics track measure and growth rate",
            300.0, [] {
              const double levy_omega =
                  M_PI * M_PI / (12.0 * std::log(2.0));  // plain growth rate
              for (const WindowCase& c : window_cases()) {
                ErgodicStats s = ergodic_stats(c.region, 50, 10000, 20260816);
                double mu = s.reference_measure;
                double levy_ref = levy_omega / mu;
                std::ostringstream ss;
                ss << c.region.label << ": freq " << s.empirical_frequency
                   << " vs measure " << mu << ", slope " << s.levy_q << " vs "
                   << levy_ref << ", rejected " << s.rejected;
                if (s.rejected != 0) return Outcome{false, ss.str()};
                if (std::fabs(s.empirical_frequency - mu) > 0.01 * mu)
                  return Outcome{false, ss.str()};
                if (std::fabs(s.levy_q - levy_ref) > 0.02 * levy_ref)
                  return Outcome{false, ss.str()};
              }
              return Outcome{true, ""};
            });

  run_check(10, "three-in-a-row quality windows on random and golden sources",
            0.0, [] {
              for (std::uint64_t seed = 1; seed <= 25; ++seed) {
                BorelReport rep =
                    borel_window_check(TailSource::random(seed), 50);
                if (!rep.every_window_ok) {
                  std::ostringstream ss;
                  ss << "seed " << seed << ": a window of three records "
                     << "misses the quality bound";
                  return Outcome{false, ss.str()};
                }
              }
              BorelReport g = borel_window_check(
                  TailSource::from_surd(SurdValue(-1, 1, 2, 5)), 50);
              if (!g.every_window_ok)
                return Outcome{false, "golden ratio: window check failed"};
              for (std::size_t n = 0; n < 50; ++n) {
                if (g.flags[n] != (n % 2 == 1)) {
                  std::ostringstream ss;
                  ss << "golden ratio: flag at index " << n
                     << " breaks the alternation";
                  return Outcome{false, ss.str()};
                }
              }
              return Outcome{true, ""};
            });

  std::printf("%d of 10 checks passed\n", 10 - g_fails);
  return g_fails == 0 ? 0 : 1;
}
