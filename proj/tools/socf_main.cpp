// Copyright (c) 2026 the socf authors
// SPDX-License-Identifier: Apache-2.0
//
// socf: command-line front end for contracted continued-fraction expansions.
//
// Subcommands: expand (plain RCF digits/convergents), socf (contracted
// expansion against a region), verify (superoptimal | legendre | borel),
// stats (seeded orbit statistics), measure (invariant measure of a region).
//
// Every run is a pure function of (arguments, environment variable SOCF_CAP,
// input bytes): numeric output is rendered with std::to_chars, so equal
// configurations produce byte-identical output.
//
// Exit codes:
//   0 success (and, for verify, property holds)
//   1 unexpected internal failure
//   2 bad input: parse errors, domain errors, rational expansion target,
//     mixed quadratic fields
//   3 precision exhausted: the digit source cannot certify further progress
//   4 membership undecidable within the refinement budget (boundary grazing)
//   5 the orbit never entered the region within the step cap
//   6 a verified property is violated (witness on stderr)

#include <charconv>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "socf/analytics.hpp"
#include "socf/errors.hpp"
#include "socf/induction.hpp"
#include "socf/measure.hpp"
#include "socf/region.hpp"
#include "socf/surd.hpp"
#include "socf/tail_source.hpp"

namespace {

using namespace socf;

// ---------------------------------------------------------------------------
// Rendering helpers.

/// Shortest round-trip decimal rendering of a double.
std::string fmt_double(double v) {
  char buf[40];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, static_cast<std::size_t>(p - buf));
}

std::string json_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

/// One GCF digit for the pretty display: integers bare, fractions in
/// parentheses, e.g. 7, (881/3), (-1/3).
std::string pretty_part(const BigFraction& v) {
  if (v.is_integer()) return v.num().get_str();
  return "(" + v.to_string() + ")";
}

const char* bool_str(bool b) { return b ? "true" : "false"; }

// ---------------------------------------------------------------------------
// Input plumbing shared by expand / socf / verify.

struct InputSpec {
  std::string surd;
  std::string decimal;
  std::string decimal_file;
  std::string digits;
  std::size_t guard = 0;

  void add_options(CLI::App* cmd) {
    auto* g = cmd->add_option_group("input", "expansion target x in (0,1)");
    g->add_option("--surd", surd,
                  "quadratic surd expression, e.g. \"sqrt(2)-1\"");
    g->add_option("--decimal", decimal,
                  "truncated decimal, e.g. 0.14159265358979");
    g->add_option("--decimal-file", decimal_file,
                  "file holding one truncated decimal");
    g->add_option("--digits", digits,
                  "comma-separated RCF digit list, e.g. 1,1,1");
    g->require_option(1);
    cmd->add_option("--guard", guard,
                    "decimal guard digits to discard (use >= 1 when the "
                    "input may be rounded rather than truncated)");
  }

  TailSource make() const {
    if (!surd.empty()) return TailSource::from_surd(parse_surd(surd));
    if (!decimal.empty()) return TailSource::from_decimal(decimal, guard);
    if (!decimal_file.empty()) {
      std::ifstream in(decimal_file);
      if (!in) throw ParseError("cannot open file: " + decimal_file);
      std::stringstream ss;
      ss << in.rdbuf();
      return TailSource::from_decimal(ss.str(), guard);
    }
    std::vector<Int> ds;
    std::string tok;
    for (char c : digits) {
      if (c == ',' || c == ' ') {
        if (!tok.empty()) ds.push_back(parse_int(tok));
        tok.clear();
      } else {
        tok.push_back(c);
      }
    }
    if (!tok.empty()) ds.push_back(parse_int(tok));
    if (ds.empty()) throw ParseError("empty digit list");
    return TailSource::from_digits(std::move(ds));
  }
};

enum class Format { Jsonl, Csv, Pretty };

Format parse_format(const std::string& f, bool csv_ok) {
  if (f == "jsonl") return Format::Jsonl;
  if (f == "csv") {
    if (!csv_ok)
      throw BadParameter("csv output applies to expand and socf only");
    return Format::Csv;
  }
  if (f == "pretty") return Format::Pretty;
  throw ParseError("unknown format: " + f);
}

// ---------------------------------------------------------------------------
// expand: plain RCF digits and convergents.

int run_expand(const InputSpec& in, std::size_t n, const std::string& format) {
  Format fmt = parse_format(format, /*csv_ok=*/true);
  TailSource src = in.make();
  std::vector<Int> ds;
  std::vector<ConvergentPair> cs;
  for (std::size_t i = 0; i < n; ++i) {
    ds.push_back(src.next_digit());
    cs.push_back(src.convergent());
  }
  switch (fmt) {
    case Format::Jsonl:
      for (std::size_t i = 0; i < n; ++i)
        std::printf("{\"n\":%zu,\"a\":\"%s\",\"p\":\"%s\",\"q\":\"%s\"}\n",
                    i + 1, ds[i].get_str().c_str(), cs[i].p.get_str().c_str(),
                    cs[i].q.get_str().c_str());
      break;
    case Format::Csv:
      std::printf("n,a,p,q\n");
      for (std::size_t i = 0; i < n; ++i)
        std::printf("%zu,%s,%s,%s\n", i + 1, ds[i].get_str().c_str(),
                    cs[i].p.get_str().c_str(), cs[i].q.get_str().c_str());
      break;
    case Format::Pretty: {
      std::string line = "digits";
      for (const Int& a : ds) line += " " + a.get_str();
      std::printf("%s\n", line.c_str());
      line = "convergents";
      for (const ConvergentPair& c : cs)
        line += " " + c.p.get_str() + "/" + c.q.get_str();
      std::printf("%s\n", line.c_str());
      break;
    }
  }
  return 0;
}

// ---------------------------------------------------------------------------
// socf: contracted expansion records k = 0..k_last.

int run_socf(const InputSpec& in, const std::string& region_text,
             std::size_t k_last, bool oracle, std::size_t cap,
             const std::string& format) {
  Format fmt = parse_format(format, /*csv_ok=*/true);
  Region region = builtin_region(region_text);
  TailSource src = in.make();
  TailSource src_copy = src;  // for --oracle
  SocfStream stream(region, std::move(src), cap);

  std::vector<SocfStream::Record> recs;
  std::vector<ThetaValue> thetas;
  for (std::size_t k = 0; k <= k_last; ++k) {
    recs.push_back(stream.next());
    thetas.push_back(stream.theta_now());
  }

  switch (fmt) {
    case Format::Jsonl:
      for (std::size_t k = 0; k < recs.size(); ++k) {
        const auto& r = recs[k];
        std::printf(
            "{\"k\":%zu,\"alpha\":\"%s\",\"beta\":\"%s\",\"j\":%zu,"
            "\"n\":%zu,\"P\":\"%s\",\"Q\":\"%s\",\"theta\":[%s,%s]}\n",
            r.k, r.alpha.to_string().c_str(), r.beta.to_string().c_str(),
            r.step.j, r.n, r.P.get_str().c_str(), r.Q.get_str().c_str(),
            fmt_double(thetas[k].lo.to_double()).c_str(),
            fmt_double(thetas[k].hi.to_double()).c_str());
      }
      break;
    case Format::Csv:
      std::printf("k,n,theta_lo,theta_hi,logQ_over_k\n");
      for (std::size_t k = 0; k < recs.size(); ++k) {
        const auto& r = recs[k];
        std::string slope =
            k == 0 ? ""
                   : fmt_double(log_int(r.Q) / static_cast<double>(r.k));
        std::printf("%zu,%zu,%s,%s,%s\n", r.k, r.n,
                    fmt_double(thetas[k].lo.to_double()).c_str(),
                    fmt_double(thetas[k].hi.to_double()).c_str(),
                    slope.c_str());
      }
      break;
    case Format::Pretty: {
      // x = [b0; a0/b1, a1/b2, ...]
      std::string line = "x = [" + pretty_part(recs[0].beta);
      for (std::size_t k = 1; k < recs.size(); ++k)
        line += std::string(k == 1 ? "; " : ", ") +
                pretty_part(recs[k - 1].alpha) + "/" +
                pretty_part(recs[k].beta);
      line += recs.size() > 1 ? ", ...]" : "; ...]";
      std::printf("%s\n", line.c_str());
      line = "P/Q:";
      for (const auto& r : recs)
        line += " " + r.P.get_str() + "/" + r.Q.get_str();
      std::printf("%s\n", line.c_str());
      line = "n(k):";
      for (const auto& r : recs) line += " " + std::to_string(r.n);
      std::printf("%s\n", line.c_str());
      break;
    }
  }

  if (oracle) {
    std::vector<std::size_t> hits;
    for (const auto& r : recs) hits.push_back(r.n);
    SocfResult ref = socf_digits_oracle(std::move(src_copy), hits, k_last);
    bool ok = ref.beta0 == recs[0].beta && ref.alpha0 == recs[0].alpha;
    std::size_t bad = 0;
    for (std::size_t k = 1; ok && k <= k_last; ++k) {
      const GcfDigit& d = ref.digits[k - 1];
      if (!(d.alpha == recs[k].alpha && d.beta == recs[k].beta)) {
        ok = false;
        bad = k;
      }
    }
    if (!ok) {
      std::fprintf(stderr,
                   "socf: oracle mismatch at record %zu: stream "
                   "(%s;%s) vs oracle (%s;%s)\n",
                   bad, recs[bad].alpha.to_string().c_str(),
                   recs[bad].beta.to_string().c_str(),
                   (bad == 0 ? ref.alpha0 : ref.digits[bad - 1].alpha)
                       .to_string()
                       .c_str(),
                   (bad == 0 ? ref.beta0 : ref.digits[bad - 1].beta)
                       .to_string()
                       .c_str());
      return 6;
    }
    std::fprintf(stderr, "socf: oracle agreement over %zu records\n",
                 k_last + 1);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// verify: superoptimal | legendre | borel.

int run_verify_superoptimal(const InputSpec& in, const std::string& region_text,
                            const std::string& eps_text, double slope,
                            std::size_t K, std::size_t cap,
                            const std::string& format) {
  Format fmt = parse_format(format, /*csv_ok=*/false);
  Region region = builtin_region(region_text);
  SurdValue eps = parse_surd(eps_text);
  if (slope <= 0.0) {
    MeasureResult m = measure(region);
    if (m.value > m.error) slope = 1.0 / m.value;
  }
  SuperoptimalReport rep =
      verify_superoptimal(in.make(), region, eps, slope, K, cap);
  if (fmt == Format::Jsonl) {
    std::string ratios;
    for (std::size_t i = 0; i < rep.speed_ratios.size(); ++i)
      ratios += (i ? "," : "") + fmt_double(rep.speed_ratios[i]);
    std::printf(
        "{\"type\":\"superoptimal\",\"region\":\"%s\",\"epsilon\":\"%s\","
        "\"records\":%zu,\"theta_max\":%s,\"theta_ok\":%s,\"seidel_ok\":%s,"
        "\"speed_ratios\":[%s],\"verdict\":\"%s\"}\n",
        json_escape(region.label).c_str(), rep.epsilon.to_string().c_str(),
        rep.K, fmt_double(rep.theta_max).c_str(), bool_str(rep.theta_ok),
        bool_str(rep.seidel_ok), ratios.c_str(),
        json_escape(rep.verdict).c_str());
  } else {
    std::printf("region:    %s\n", region.label.c_str());
    std::printf("epsilon:   %s\n", rep.epsilon.to_string().c_str());
    std::printf("records:   %zu\n", rep.K);
    std::printf("theta_max: %s\n", fmt_double(rep.theta_max).c_str());
    std::printf("%s\n", rep.verdict.c_str());
  }
  if (!(rep.theta_ok && rep.seidel_ok)) {
    std::fprintf(stderr, "socf: %s\n", rep.verdict.c_str());
    return 6;
  }
  return 0;
}

int run_verify_legendre(const InputSpec& in, const std::string& eps_text,
                        std::size_t K, std::size_t cap,
                        const std::string& format) {
  Format fmt = parse_format(format, /*csv_ok=*/false);
  BigFraction eps0 = BigFraction::from_string(eps_text);
  LegendreReport rep = legendre_exactness(in.make(), eps0, K, cap);
  auto list = [](const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i)
      s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  if (fmt == Format::Jsonl) {
    std::printf(
        "{\"type\":\"legendre\",\"eps0\":\"%s\",\"count\":%zu,"
        "\"socf_indices\":[%s],\"rcf_indices\":[%s],\"equal\":%s}\n",
        eps0.to_string().c_str(), K, list(rep.socf_indices).c_str(),
        list(rep.rcf_indices).c_str(), bool_str(rep.equal));
  } else {
    std::printf("eps0:         %s\n", eps0.to_string().c_str());
    std::printf("socf indices: %s\n", list(rep.socf_indices).c_str());
    std::printf("rcf indices:  %s\n", list(rep.rcf_indices).c_str());
    std::printf("equal:        %s\n", bool_str(rep.equal));
  }
  if (!rep.equal) {
    std::fprintf(stderr,
                 "socf: index lists differ: induced [%s] vs filtered [%s]\n",
                 list(rep.socf_indices).c_str(),
                 list(rep.rcf_indices).c_str());
    return 6;
  }
  return 0;
}

int run_verify_borel(const InputSpec& in, std::size_t N,
                     const std::string& format) {
  Format fmt = parse_format(format, /*csv_ok=*/false);
  BorelReport rep = borel_window_check(in.make(), N);
  std::string flags;
  for (std::size_t i = 0; i < rep.flags.size(); ++i)
    flags += (i ? "," : "") + std::string(rep.flags[i] ? "true" : "false");
  if (fmt == Format::Jsonl) {
    std::printf(
        "{\"type\":\"borel\",\"count\":%zu,\"flags\":[%s],"
        "\"every_window_ok\":%s}\n",
        N, flags.c_str(), bool_str(rep.every_window_ok));
  } else {
    std::string bits;
    for (bool b : rep.flags) bits += b ? '1' : '0';
    std::printf("theta < 1/sqrt(5) flags: %s\n", bits.c_str());
    std::printf("every 3-window ok:        %s\n",
                bool_str(rep.every_window_ok));
  }
  if (!rep.every_window_ok) {
    std::fprintf(stderr,
                 "socf: three consecutive convergents all have "
                 "theta >= 1/sqrt(5)\n");
    return 6;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// stats and measure.

int run_stats(const std::string& region_text, std::size_t samples,
              std::size_t len, std::uint64_t seed, const std::string& format) {
  Format fmt = parse_format(format, /*csv_ok=*/false);
  Region region = builtin_region(region_text);
  ErgodicStats st = ergodic_stats(region, samples, len, seed);
  if (fmt == Format::Jsonl) {
    std::printf(
        "{\"type\":\"stats\",\"region\":\"%s\",\"samples\":%zu,"
        "\"orbit_len\":%zu,\"seed\":%llu,\"frequency\":%s,"
        "\"frequency_err\":%s,\"measure\":%s,\"levy\":%s,\"levy_err\":%s,"
        "\"entropy\":%s,\"rejected\":%zu}\n",
        json_escape(region.label).c_str(), st.sample_count, st.orbit_length,
        static_cast<unsigned long long>(seed),
        fmt_double(st.empirical_frequency).c_str(),
        fmt_double(st.frequency_err).c_str(),
        fmt_double(st.reference_measure).c_str(),
        fmt_double(st.levy_q).c_str(), fmt_double(st.levy_err).c_str(),
        fmt_double(st.entropy).c_str(), st.rejected);
  } else {
    std::printf("region:     %s\n", region.label.c_str());
    std::printf("samples:    %zu x %zu steps (seed %llu, %zu rejected)\n",
                st.sample_count, st.orbit_length,
                static_cast<unsigned long long>(seed), st.rejected);
    std::printf("frequency:  %s +- %s (measure %s)\n",
                fmt_double(st.empirical_frequency).c_str(),
                fmt_double(st.frequency_err).c_str(),
                fmt_double(st.reference_measure).c_str());
    std::printf("levy slope: %s +- %s\n", fmt_double(st.levy_q).c_str(),
                fmt_double(st.levy_err).c_str());
    std::printf("entropy:    %s\n", fmt_double(st.entropy).c_str());
  }
  return 0;
}

int run_measure(const std::string& region_text, double tol,
                const std::string& format) {
  Format fmt = parse_format(format, /*csv_ok=*/false);
  Region region = builtin_region(region_text);
  MeasureResult m = measure(region, tol);
  if (fmt == Format::Jsonl) {
    std::printf(
        "{\"type\":\"measure\",\"region\":\"%s\",\"value\":%s,"
        "\"error\":%s,\"method\":\"%s\"}\n",
        json_escape(region.label).c_str(), fmt_double(m.value).c_str(),
        fmt_double(m.error).c_str(), json_escape(m.method).c_str());
  } else {
    std::printf("measure(%s) = %s +- %s [%s]\n", region.label.c_str(),
                fmt_double(m.value).c_str(), fmt_double(m.error).c_str(),
                m.method.c_str());
  }
  return 0;
}

// ---------------------------------------------------------------------------
// Error-to-exit-code mapping.

int dispatch(const std::function<int()>& body) {
  try {
    return body();
  } catch (const PrecisionExhausted& e) {
    std::fprintf(stderr, "socf: precision exhausted: %s\n", e.what());
    return 3;
  } catch (const SourceExhausted& e) {
    std::fprintf(stderr, "socf: source exhausted: %s\n", e.what());
    return 3;
  } catch (const UndecidableAtBudget& e) {
    std::fprintf(stderr, "socf: undecidable: %s\n", e.what());
    return 4;
  } catch (const NeverHitsWithinCap& e) {
    std::fprintf(stderr, "socf: %s\n", e.what());
    return 5;
  } catch (const ParseError& e) {
    std::fprintf(stderr, "socf: parse error: %s\n", e.what());
    return 2;
  } catch (const RationalInput& e) {
    std::fprintf(stderr, "socf: %s\n", e.what());
    return 2;
  } catch (const MixedRadicands& e) {
    std::fprintf(stderr, "socf: %s\n", e.what());
    return 2;
  } catch (const DomainError& e) {
    std::fprintf(stderr, "socf: %s\n", e.what());
    return 2;
  } catch (const Error& e) {
    std::fprintf(stderr, "socf: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "socf: %s\n", e.what());
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "socf: superoptimal continued fraction expansions via induced "
      "transformations of the Gauss map"};
  app.require_subcommand(1);
  int rc = 0;

  InputSpec in_expand, in_socf, in_vsup, in_vleg, in_vbor;
  std::string fmt_expand = "jsonl", fmt_socf = "jsonl", fmt_vsup = "jsonl";
  std::string fmt_vleg = "jsonl", fmt_vbor = "jsonl", fmt_stats = "jsonl";
  std::string fmt_measure = "jsonl";
  const std::string fmt_help = "output format: jsonl, csv, or pretty";

  // expand
  auto* cmd_expand = app.add_subcommand(
      "expand", "plain continued-fraction digits and convergents");
  std::size_t expand_n = 10;
  in_expand.add_options(cmd_expand);
  cmd_expand->add_option("-n,--count", expand_n, "digits to emit");
  cmd_expand->add_option("--format", fmt_expand, fmt_help);
  cmd_expand->callback([&] {
    rc = dispatch([&] { return run_expand(in_expand, expand_n, fmt_expand); });
  });

  // socf
  auto* cmd_socf = app.add_subcommand(
      "socf", "contracted expansion against a region window");
  std::string socf_region;
  std::size_t socf_k = 10, socf_cap = 10000;
  bool socf_oracle = false;
  in_socf.add_options(cmd_socf);
  cmd_socf->add_option("--region", socf_region, "region description")
      ->required();
  cmd_socf->add_option("-k,--last", socf_k, "last record index (emits 0..k)");
  cmd_socf->add_option("--cap", socf_cap, "Gauss-step cap per induced step")
      ->envname("SOCF_CAP");
  cmd_socf->add_flag("--oracle", socf_oracle,
                     "re-derive all digits from RCF digit blocks and compare");
  cmd_socf->add_option("--format", fmt_socf, fmt_help);
  cmd_socf->callback([&] {
    rc = dispatch([&] {
      return run_socf(in_socf, socf_region, socf_k, socf_oracle, socf_cap,
                      fmt_socf);
    });
  });

  // verify
  auto* cmd_verify =
      app.add_subcommand("verify", "check expansion properties exactly");
  cmd_verify->require_subcommand(1);

  auto* cmd_vsup = cmd_verify->add_subcommand(
      "superoptimal", "theta threshold and convergent-subsequence clauses");
  std::string vsup_region, vsup_eps;
  double vsup_slope = 0.0;
  std::size_t vsup_k = 10, vsup_cap = 10000;
  in_vsup.add_options(cmd_vsup);
  cmd_vsup->add_option("--region", vsup_region, "region description")
      ->required();
  cmd_vsup->add_option("--eps", vsup_eps,
                       "quality threshold (surd expression, e.g. "
                       "\"1/sqrt(5)\" or \"1/2\")")
      ->required();
  cmd_vsup->add_option("--slope", vsup_slope,
                       "expected n(k)/k slope (default: 1/measure)");
  cmd_vsup->add_option("-k,--records", vsup_k, "records to verify");
  cmd_vsup->add_option("--cap", vsup_cap, "Gauss-step cap per induced step")
      ->envname("SOCF_CAP");
  cmd_vsup->add_option("--format", fmt_vsup, fmt_help);
  cmd_vsup->callback([&] {
    rc = dispatch([&] {
      return run_verify_superoptimal(in_vsup, vsup_region, vsup_eps,
                                     vsup_slope, vsup_k, vsup_cap, fmt_vsup);
    });
  });

  auto* cmd_vleg = cmd_verify->add_subcommand(
      "legendre", "induced indices equal theta-filtered indices");
  std::string vleg_eps;
  std::size_t vleg_k = 10, vleg_cap = 10000;
  in_vleg.add_options(cmd_vleg);
  cmd_vleg->add_option("--eps", vleg_eps, "threshold eps0 in (0, 1/2]")
      ->required();
  cmd_vleg->add_option("-k,--records", vleg_k, "indices to compare");
  cmd_vleg->add_option("--cap", vleg_cap, "Gauss-step cap per induced step")
      ->envname("SOCF_CAP");
  cmd_vleg->add_option("--format", fmt_vleg, fmt_help);
  cmd_vleg->callback([&] {
    rc = dispatch([&] {
      return run_verify_legendre(in_vleg, vleg_eps, vleg_k, vleg_cap,
                                 fmt_vleg);
    });
  });

  auto* cmd_vbor = cmd_verify->add_subcommand(
      "borel", "one of any three consecutive theta beats 1/sqrt(5)");
  std::size_t vbor_n = 50;
  in_vbor.add_options(cmd_vbor);
  cmd_vbor->add_option("-n,--count", vbor_n, "convergents to check");
  cmd_vbor->add_option("--format", fmt_vbor, fmt_help);
  cmd_vbor->callback([&] {
    rc = dispatch(
        [&] { return run_verify_borel(in_vbor, vbor_n, fmt_vbor); });
  });

  // stats
  auto* cmd_stats = app.add_subcommand(
      "stats", "seeded random-orbit statistics against a region");
  std::string stats_region;
  std::size_t stats_samples = 10, stats_len = 2000;
  std::uint64_t stats_seed = 1;
  cmd_stats->add_option("--region", stats_region, "region description")
      ->required();
  cmd_stats->add_option("--samples", stats_samples, "independent orbits");
  cmd_stats->add_option("--len", stats_len, "Gauss steps per orbit");
  cmd_stats->add_option("--seed", stats_seed, "master seed");
  cmd_stats->add_option("--format", fmt_stats, fmt_help);
  cmd_stats->callback([&] {
    rc = dispatch([&] {
      return run_stats(stats_region, stats_samples, stats_len, stats_seed,
                       fmt_stats);
    });
  });

  // measure
  auto* cmd_measure =
      app.add_subcommand("measure", "invariant measure of a region");
  std::string measure_region;
  double measure_tol = 1e-9;
  cmd_measure->add_option("--region", measure_region, "region description")
      ->required();
  cmd_measure->add_option("--tol", measure_tol,
                          "bracket tolerance for the subdivision fallback");
  cmd_measure->add_option("--format", fmt_measure, fmt_help);
  cmd_measure->callback([&] {
    rc = dispatch(
        [&] { return run_measure(measure_region, measure_tol, fmt_measure); });
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "socf: %s\n", e.what());
    return 2;
  }
  return rc;
}
