// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "coarse/inertness.hpp"
#include "coarse/ops.hpp"
#include "coarse/partition.hpp"
#include "coarse/representative.hpp"
#include "coarse/stpetersburg.hpp"
#include "oracles.hpp"

using namespace coarse;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects the first few mismatches of one criterion.
struct Check {
  std::vector<std::string> failures;
  std::size_t count = 0;

  void expect(bool ok, const std::string& what) {
    ++count;
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok && failures.size() == 5) failures.push_back("...");
  }
  bool ok() const { return failures.empty(); }
};

CoarseContext fib_ctx() {
  return CoarseContext(Partition({Fibonacci{}, Domain::Integers}), RepPolicy::MedianLower);
}
CoarseContext example2() {
  return CoarseContext(
      Partition({ExplicitBounds{{Number(0), Number(3), Number(6), Number(17)}}, Domain::Integers}),
      RepPolicy::MedianLower);
}
CoarseContext eps_ctx(const Number& e, TieRule ties) {
  return CoarseContext(Partition({EpsilonGrowth{e}, Domain::Reals}), RepPolicy::MedianLower, ties);
}
std::string str(const Number& x) { return to_string(x); }

std::string describe_verdict(const InertVerdict& v) {
  if (const auto* a = std::get_if<InertAt>(&v)) {
    return "InertAt(N=" + std::to_string(a->step) + ", cell " + std::to_string(a->cell) +
           ", value " + str(a->value) + (a->certified ? ", certified)" : ", observed)");
  }
  return "NoVerdict(" + std::to_string(std::get<NoVerdict>(v).horizon) + ")";
}

// ---------------------------------------------------------------------------

Check ac1(std::string& note) {
  Check c;
  const auto p = fib_ctx().partition();
  const long lo[] = {0, 1, 2, 4, 7, 12};
  const long hi[] = {0, 1, 3, 6, 11, 19};
  const long rep[] = {0, 1, 2, 5, 9, 15};
  for (int i = 1; i <= 6; ++i) {
    const Cell cell = p.cell_at(i);
    c.expect(cell.lower == lo[i - 1] && cell.upper == hi[i - 1],
             "cell " + std::to_string(i) + " is " + describe(cell));
    c.expect(representative(cell, RepPolicy::MedianLower) == rep[i - 1],
             "rep of cell " + std::to_string(i));
  }
  note = "cells {0},{1},{2..3},{4..6},{7..11},{12..19}; reps 0,1,2,5,9,15";
  return c;
}

Check ac2(std::string& note) {
  Check c;
  const auto ctx = fib_ctx();
  const Number s = rep_add(ctx, Number(2), Number(5));
  const CellIndex g = cell_add(ctx, 4, 5);
  c.expect(s == 9, "2 (+) 5 = " + str(s));
  c.expect(g == 6, "G4 [+] G5 = G" + std::to_string(g));
  note = "2 (+) 5 = " + str(s) + ", G4 [+] G5 = G" + std::to_string(g);
  return c;
}

Check ac3(std::string& note) {
  Check c;
  const auto ctx = fib_ctx();
  const Number left = rep_add(ctx, rep_add(ctx, Number(3), Number(3)), Number(10));
  const Number right = rep_add(ctx, Number(3), rep_add(ctx, Number(3), Number(10)));
  const CellIndex gl = cell_add(ctx, cell_add(ctx, 3, 3), 5);
  const CellIndex gr = cell_add(ctx, 3, cell_add(ctx, 3, 5));
  c.expect(left == 15, "(3 (+) 3) (+) 10 = " + str(left));
  c.expect(right == 9, "3 (+) (3 (+) 10) = " + str(right));
  c.expect(gl == 6, "(G3 [+] G3) [+] G5 = G" + std::to_string(gl));
  c.expect(gr == 5, "G3 [+] (G3 [+] G5) = G" + std::to_string(gr));
  note = "values 15 vs 9, cells G" + std::to_string(gl) + " vs G" + std::to_string(gr);
  return c;
}

Check ac4(std::string& note) {
  Check c;
  const auto t0 = Clock::now();
  std::size_t cases = 0;
  for (std::uint64_t w : {1u, 3u, 5u, 7u, 9u}) {
    const CoarseContext ctx(Partition({FixedWidth{w}, Domain::Integers}), RepPolicy::MedianLower);
    for (CellIndex i = 1; i <= 40; ++i) {
      for (CellIndex j = 1; j <= 40; ++j) {
        const CellIndex ij = cell_add(ctx, i, j);
        c.expect(ij == i + j - 1, "w=" + std::to_string(w) + " G" + std::to_string(i) + " [+] G" +
                                      std::to_string(j) + " = G" + std::to_string(ij));
        for (CellIndex k = 1; k <= 40; ++k) {
          ++cases;
          const CellIndex l = cell_add(ctx, ij, k);
          const CellIndex r = cell_add(ctx, i, cell_add(ctx, j, k));
          c.expect(l == r, "w=" + std::to_string(w) + " not associative at (" + std::to_string(i) +
                               "," + std::to_string(j) + "," + std::to_string(k) + ")");
        }
      }
    }
  }
  const double secs = seconds_since(t0);
  c.expect(secs < 10.0, "runtime " + std::to_string(secs) + " s");
  std::ostringstream os;
  os << cases << " triples, " << c.failures.size() << " failures, " << secs << " s";
  note = os.str();
  return c;
}

Check ac5(std::string& note) {
  Check c;
  const CoarseContext ctx(Partition({FixedWidth{1}, Domain::Integers}), RepPolicy::MedianLower);
  const auto& p = ctx.partition();
  for (long x = 0; x <= 10000; ++x) {
    const Cell cell = p.cell_of(Number(x));
    c.expect(cell.is_singleton() && margin_pos(cell, RepPolicy::MedianLower) == 0 &&
                 margin_neg(cell, RepPolicy::MedianLower) == 0,
             "nonzero margin at " + std::to_string(x));
  }
  std::mt19937_64 rng(20240501);
  std::uniform_int_distribution<long> d(0, 10000);
  for (int k = 0; k < 1000; ++k) {
    const long x = d(rng), y = d(rng);
    c.expect(rep_add(ctx, Number(x), Number(y)) == x + y,
             std::to_string(x) + " (+) " + std::to_string(y));
    c.expect(!distorted(ctx, Number(x), Number(y)), "distorted at " + std::to_string(x));
  }
  note = "10001 cells with zero margins, 1000 random pairs exact";
  return c;
}

Check ac6(std::string& note) {
  Check c;
  const auto ctx = example2();
  const auto four = detect_inert_trace(coarse_fold(ctx, std::vector<Number>(10, Number(4))));
  const auto five = detect_inert_trace(coarse_fold(ctx, std::vector<Number>(10, Number(5))));
  c.expect(four == InertVerdict(InertAt{2, 3, Number(11), false}), describe_verdict(four));
  const auto* f = std::get_if<InertAt>(&five);
  c.expect(f && f->value == 11, describe_verdict(five));
  note = "const 4: " + describe_verdict(four) + "; const 5: " + describe_verdict(five);
  return c;
}

Check ac7(std::string& note) {
  Check c;
  std::vector<Number> eps = {Number(2), Number(3), Number(4), Number(5),
                             Number(10), Number(50), Number(99)};
  std::mt19937_64 rng(77);
  for (int k = 0; k < 200; ++k) eps.push_back(oracle::random_rational(rng, 2, 100, 1000));

  for (const auto& e : eps) {
    const std::string tag = "eps " + str(e);
    const CellIndex formula = floor(Number(e / 2)).get_ui() + 1;
    const Partition p({EpsilonGrowth{e}, Domain::Reals});
    const auto scan = first_absorbing_cell(p, RepPolicy::MedianLower, Number(1, 4), true);
    c.expect(scan && *scan == formula, tag + ": scan " + (scan ? std::to_string(*scan) : "none") +
                                           " vs formula " + std::to_string(formula));
    c.expect(oracle::epsilon_first_strict(e, Number(1, 4)) == formula, tag + ": oracle scan");

    const auto ctx = eps_ctx(e, TieRule::StrictMargin);
    const auto found = scan_stream(ctx, st_petersburg_increments(), 100000, Number(1, 2));
    const auto* at = std::get_if<InertAt>(&found.verdict);
    c.expect(at && at->certified && at->cell == formula,
             tag + ": early exit " + describe_verdict(found.verdict));
    if (!at) continue;
    Number s = found.trace.back().s;
    bool stayed = true;
    for (int k = 0; k < 1000; ++k) {
      s = rep_add(ctx, s, Number(1, 2));
      stayed = stayed && s == at->value && p.cell_of(s).index == at->cell;
    }
    c.expect(stayed, tag + ": continuation left the cell");
  }
  note = std::to_string(eps.size()) + " values of eps, scan = floor(eps/2)+1, early exit agrees, "
         "1000-step continuation stable";
  return c;
}

Check ac8(std::string& note) {
  Check c;
  const CoarseContext ctx(Partition({Singleton{Number(1, 2)}, Domain::Reals}),
                          RepPolicy::MedianLower);
  const auto found = scan_stream(ctx, constant(Number(1, 2)), 10000);
  c.expect(std::holds_alternative<NoVerdict>(found.verdict), describe_verdict(found.verdict));
  c.expect(std::get_if<NoVerdict>(&found.verdict) &&
               std::get<NoVerdict>(found.verdict).horizon == 10000,
           "horizon");
  // Ordinary addition oracle.
  Number s = 0;
  bool same = true;
  for (std::size_t n = 0; n < found.trace.size(); ++n) {
    s += Number(1, 2);
    same = same && found.trace[n].s == s;
  }
  c.expect(same, "partial sums differ from ordinary addition");
  c.expect(found.trace.back().s == 5000, "final sum " + str(found.trace.back().s));
  note = describe_verdict(found.verdict) + ", final sum " + str(found.trace.back().s);
  return c;
}

Check ac9(std::string& note) {
  Check c;
  const auto ctx = eps_ctx(Number(4), TieRule::Membership);
  const auto v = detect_inert_stream(ctx, harmonic(), 10000);
  c.expect(is_inert(v), describe_verdict(v));
  Number h = 0;
  for (long t = 1; t <= 10000; ++t) h += oracle::q(1, t);
  c.expect(h > 9, "H_10000 = " + to_decimal(h));
  note = describe_verdict(v) + "; exact H_10000 = " + to_decimal(h, 8);
  return c;
}

Check ac10(std::string& note) {
  Check c;
  const auto t0 = Clock::now();
  const Gamble g{30};
  const std::uint64_t trials = 1000000;
  const std::uint64_t seed = 7;
  const auto rounds = sample_rounds(g, trials, seed);

  std::vector<std::uint64_t> counts(g.depth + 1, 0);
  Integer total = 0;
  for (unsigned n : rounds) {
    ++counts[n];
    total += payoff(n);
  }
  std::ostringstream worst;
  double max_z = 0;
  for (unsigned n = 1; n <= 10; ++n) {
    const double p = std::ldexp(1.0, -static_cast<int>(n));
    const double expect = static_cast<double>(trials) * p;
    const double sigma = std::sqrt(static_cast<double>(trials) * p * (1 - p));
    const double z = (static_cast<double>(counts[n]) - expect) / sigma;
    max_z = std::max(max_z, std::abs(z));
    c.expect(std::abs(z) <= 3.0, "frequency of n=" + std::to_string(n) + " off by " +
                                     std::to_string(z) + " sigma");
  }
  const Number mean = Number(total) / Number(Integer(static_cast<unsigned long>(trials)));
  const Number target = Number(static_cast<unsigned long>(g.depth)) / 2;
  c.expect(abs(mean - target) <= 1,
           "mean " + to_decimal(mean) + " not within 1 of " + to_decimal(target));

  const auto again = sample_rounds(g, trials, seed);
  const auto bytes = [](const std::vector<unsigned>& v) {
    return std::string(reinterpret_cast<const char*>(v.data()), v.size() * sizeof(unsigned));
  };
  c.expect(bytes(again) == bytes(rounds), "re-run differs");
  const double secs = seconds_since(t0);
  c.expect(secs < 30.0, "runtime " + std::to_string(secs) + " s");

  std::ostringstream os;
  os << "max |z| " << max_z << " for n <= 10, mean " << to_decimal(mean) << " (target "
     << to_decimal(target) << ", exact truncated expectation " << to_decimal(truncated_expectation(g))
     << "), " << secs << " s";
  note = os.str();
  return c;
}

Check ac11(std::string& note) {
  Check c;
  const auto member = detect_inert_stream(eps_ctx(Number(10), TieRule::Membership),
                                          st_petersburg_increments(), 1000);
  c.expect(member == InertVerdict(InertAt{2, 1, Number(1, 4), false}),
           "membership fold: " + describe_verdict(member));
  const Partition p({EpsilonGrowth{Number(10)}, Domain::Reals});
  const auto scan = first_absorbing_cell(p, RepPolicy::MedianLower, Number(1, 4), true);
  c.expect(scan == CellIndex{6}, "strict scan " + (scan ? std::to_string(*scan) : "none"));
  const auto strict = detect_inert_stream(eps_ctx(Number(10), TieRule::StrictMargin),
                                          st_petersburg_increments(), 1000, Number(1, 2));
  c.expect(std::get_if<InertAt>(&strict) && std::get<InertAt>(strict).cell == 6,
           "strict fold: " + describe_verdict(strict));
  note = "membership " + describe_verdict(member) + "; strict scan cell " +
         (scan ? std::to_string(*scan) : "none");
  return c;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Check(std::string&)>>> criteria = {
      {"AC1  fibonacci partition golden", ac1},
      {"AC2  worked operator examples", ac2},
      {"AC3  non-associativity witness", ac3},
      {"AC4  odd-width associativity suite", ac4},
      {"AC5  singleton partition is exact", ac5},
      {"AC6  three-cell inertness example", ac6},
      {"AC7  st petersburg inert index", ac7},
      {"AC8  classical divergence", ac8},
      {"AC9  harmonic admission", ac9},
      {"AC10 monte carlo sanity", ac10},
      {"AC11 boundary tie regression", ac11},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    std::string note;
    Check c;
    try {
      c = fn(note);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    std::cout << (c.ok() ? "PASS " : "FAIL ") << name << " : " << note << '\n';
    for (const auto& f : c.failures) std::cout << "       " << f << '\n';
    if (!c.ok()) ++failed;
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
