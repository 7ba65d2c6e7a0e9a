// One line per acceptance criterion. Exit status is non-zero when any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>

#include "mainprob/experiment.hpp"
#include "mainprob/kepler.hpp"
#include "oracles.hpp"

using namespace mainprob;
using testing::rel;

namespace {

const GravityField kField{};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

struct Report {
  int passed = 0;
  int failed = 0;

  void line(int id, bool ok, const std::string& text) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << id << ". " << text << std::endl;
    (ok ? passed : failed)++;
  }
  void info(const std::string& text) { std::cout << "[INFO]    " << text << std::endl; }
};

bool within(double v, double lo, double hi) { return v >= lo && v <= hi; }

struct Timed {
  ExperimentResult result;
  double seconds = 0;
};

Timed run(const std::string& name, std::vector<TruncationSpec> specs) {
  ExperimentConfig c;
  c.case_name = name;
  c.elements = find_case(name)->elements();
  c.specs = std::move(specs);
  const auto t0 = std::chrono::steady_clock::now();
  Timed out{run_experiment(c), 0};
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return out;
}

const SpecResult& spec(const ExperimentResult& r, int S, int P) {
  for (const auto& s : r.specs) {
    if (s.spec.S == S && s.spec.P == P) return s;
  }
  throw UsageError("spec not in run");
}

// Every `stride`-th sample of the residual window of a run.
std::vector<CartesianState> window_samples(const ExperimentResult& r, std::size_t stride) {
  std::vector<CartesianState> out;
  std::size_t j = 0, k = 0;
  for (double t : r.residual_times) {
    while (r.reference.times[j] != t) ++j;
    if (k++ % stride == 0) out.push_back(r.reference.states[j]);
  }
  return out;
}

struct Integrals {
  std::array<double, 3> G_prime_spread{};  // S = 1..3
  std::array<double, 3> hamiltonian{};     // max |K - sum eps^m/m! K_0m| / |K_00|
  bool H_exact = true;
};

double spread(const std::vector<double>& v) {
  double m = 0;
  for (double x : v) m += x;
  m /= static_cast<double>(v.size());
  double out = 0;
  for (double x : v) out = std::max(out, std::abs(x - m) / std::abs(m));
  return out;
}

Integrals integrals_along(const std::vector<CartesianState>& samples) {
  Integrals out;
  for (int S = 1; S <= 3; ++S) {
    const TransformPlan to_prime{
        {Normalization::TotalAngularMomentum}, S, Direction::Inverse, InverseMethod::TruncatedSeries};
    const TransformPlan to_dprime = TransformPlan::full_inverse(S, InverseMethod::TruncatedSeries);
    std::vector<double> Gp;
    for (const CartesianState& x : samples) {
      const PolarNodalState osc = to_polar_nodal(x, kField);
      Gp.push_back(correct_state(osc, to_prime, kField).Theta);
      const PolarNodalState dp = correct_state(osc, to_dprime, kField);
      const DelaunayState d = to_delaunay(dp, kField, Stage::DoublePrime);
      const double p = d.G * d.G / kField.mu;
      const double eps = kField.J2 * kField.Re * kField.Re / (4 * p * p);
      const double K00 = eval_K_dnorm(0, d, kField);
      double K = K00, w = 1;
      for (int m = 1; m <= S; ++m) {
        w *= eps / m;
        K += w * eval_K_dnorm(m, d, kField);
      }
      const double residual = std::abs(main_problem_energy(x, kField) - K) / std::abs(K00);
      out.hamiltonian[S - 1] = std::max(out.hamiltonian[S - 1], residual);

      const PolarNodalState fixed = correct_state(osc, TransformPlan::full_inverse(S), kField);
      const PolarNodalState back = correct_state(dp, TransformPlan::full_direct(S), kField);
      const DelaunayState dd = correct_state(to_delaunay(osc, kField), TransformPlan::full_inverse(S), kField);
      out.H_exact = out.H_exact && dp.N == osc.N && fixed.N == osc.N && back.N == osc.N &&
                    dd.H == to_delaunay(osc, kField).H;
    }
    out.G_prime_spread[S - 1] = spread(Gp);
  }
  return out;
}

}  // namespace

int main() {
  Report report;
  const double J2 = kField.J2;
  std::cout << "acceptance report, J2 = " << J2 << std::endl;

  const Timed prisma = run("prisma", {{1, 1}, {2, 1}, {3, 2}});
  const Timed gto = run("gto", {{2, 1}});
  const Timed topex = run("topex", {{3, 2}});
  const double total = prisma.seconds + gto.seconds + topex.seconds;

  const SpecResult& p11 = spec(prisma.result, 1, 1);
  const SpecResult& p21 = spec(prisma.result, 2, 1);
  const SpecResult& p32 = spec(prisma.result, 3, 2);

  // 1
  report.line(1, within(p11.sma_amplitude * 1e3, 1, 10) && prisma.seconds < 120,
              fmt("PRISMA order-1 sma residual amplitude %.3g m (band [1, 10] m); PRISMA run "
                  "with oracle %.0f s (< 120 s)",
                  p11.sma_amplitude * 1e3, prisma.seconds));
  // 2
  report.line(2, within(p21.sma_amplitude * 1e6, 0.3, 10),
              fmt("PRISMA order-2 sma residual amplitude %.3g mm (band [0.3, 10] mm)",
                  p21.sma_amplitude * 1e6));
  // 3
  report.line(3, p32.sma_relative_amplitude < 1e-10,
              fmt("PRISMA order-3 relative sma residual %.3g (< 1e-10)", p32.sma_relative_amplitude));
  // 4
  {
    const bool ok = within(p11.rss_end, 3, 100) && within(p21.rss_end * 1e3, 10, 100) &&
                    p32.rss_start * 1e5 < 3 && within(p32.rss_end * 1e5, 3, 30) && total < 600;
    report.line(4, ok,
                fmt("PRISMA 30-day RSS: (1:1) end %.3g km [3, 100]; (2:1) end %.3g m [10, 100]; "
                    "(3:2) first revolution %.3g cm (< 3), end %.3g cm [3, 30]; all runs %.0f s (< 600 s)",
                    p11.rss_end, p21.rss_end * 1e3, p32.rss_start * 1e5, p32.rss_end * 1e5, total));
  }
  // 5
  {
    const SpecResult& g = spec(gto.result, 2, 1);
    const bool ok = within(g.rss_oscillation * 1e3, 10, 100) &&
                    within(g.drift_per_day * 1e3, 0.1, 2.5) && g.peak_offset >= 0 &&
                    g.peak_offset <= 0.05;
    report.line(5, ok,
                fmt("GTO (2:1): RSS oscillation %.3g m [10, 100]; trend %.3g m/day [0.1, 2.5]; "
                    "residual peaks within %.3g periods of perigee (<= 0.05)",
                    g.rss_oscillation * 1e3, g.drift_per_day * 1e3, g.peak_offset));
  }
  // 6
  {
    const double ratio = spec(topex.result, 3, 2).sma_relative_amplitude / p32.sma_relative_amplitude;
    report.line(6, within(ratio, 3, 30),
                fmt("TOPEX / PRISMA order-3 sma residual ratio %.3g [3, 30]", ratio));
  }
  // 7
  {
    testing::Gen gen(71);
    double fd = 0;
    for (int i = 0; i < 200; ++i) {
      const DelaunayState d = to_delaunay(gen.elements(1e-3, 0.8), kField);
      for (int S = 1; S <= 3; ++S) {
        for (double e : testing::rate_fd_errors(d.L, d.G, d.H, S, kField)) fd = std::max(fd, e);
      }
    }
    testing::Gen gen2(73);
    double classical = 0;
    for (int i = 0; i < 200; ++i) {
      const DelaunayState d = to_delaunay(gen2.elements(1e-6, 0.9), kField);
      for (double e : testing::classical_rate_errors(d.L, d.G, d.H, kField)) {
        classical = std::max(classical, e);
      }
    }
    report.line(7, fd <= 1e-8 && classical <= 1e-12,
                fmt("rates vs FD of the normalized Hamiltonian %.2g (<= 1e-8, 200 momenta, "
                    "orders 1-3); order 1 vs classical rates %.2g (<= 1e-12)",
                    fd, classical));
  }
  // 8 and 9 along the oracle trajectories
  {
    const Integrals a = integrals_along(window_samples(prisma.result, 4));
    const Integrals b = integrals_along(window_samples(gto.result, 4));
    bool ok8 = a.H_exact && b.H_exact;
    bool ok9 = true;
    std::string t8, t9;
    for (const auto* x : {&a, &b}) {
      const std::string name = x == &a ? "PRISMA" : "GTO";
      t8 += name + " G' spread";
      t9 += name + " residual";
      for (int S = 0; S < 3; ++S) {
        t8 += fmt(" %.2g", x->G_prime_spread[S]);
        t9 += fmt(" %.2g", x->hamiltonian[S]);
      }
      t8 += " ratios/J2";
      t9 += " ratios/J2";
      for (int S = 0; S < 2; ++S) {
        const double r8 = x->G_prime_spread[S + 1] / x->G_prime_spread[S] / J2;
        const double r9 = x->hamiltonian[S + 1] / x->hamiltonian[S] / J2;
        ok8 = ok8 && within(r8, 1e-2, 1e2);
        ok9 = ok9 && within(r9, 1.0 / 30, 30);
        t8 += fmt(" %.2g", r8);
        t9 += fmt(" %.2g", r9);
      }
      t8 += "; ";
      t9 += "; ";
    }
    report.line(8, ok8,
                t8 + fmt("ratios within [1e-2, 1e2]; H bit-exact: %s", a.H_exact && b.H_exact ? "yes" : "no"));
    report.line(9, ok9, t9 + "ratios within [1/30, 30]");
  }
  // 10
  {
    testing::Gen gen(2);
    double kepler = 0;
    for (int i = 0; i < 20000; ++i) {
      const double e = i % 4 == 0 ? gen.uniform(0.9, 0.99) : gen.uniform(0.0, 0.99);
      const double ell = gen.uniform(-kPi, kPi);
      const double E = solve_kepler(ell, e);
      kepler = std::max(kepler, std::abs(E - e * std::sin(E) - ell));
    }

    testing::Gen gen2(7);
    double charts = 0, limited = 0;
    for (int i = 0; i < 1000; ++i) {
      const KeplerianElements k = gen2.elements(1e-6, 0.9);
      for (Chart from : testing::kCharts) {
        const OrbitState x = convert(k, from, kField);
        for (Chart to : testing::kCharts) {
          const double err =
              testing::chart_error(x, convert(convert(x, to, kField), from, kField));
          if (testing::delaunay_limited(from, to, k.e)) {
            limited = std::max(limited, err);
          } else {
            charts = std::max(charts, err);
          }
        }
      }
    }

    testing::Gen gen3(13);
    double partials = 0;
    for (int i = 0; i < 1000; ++i) {
      testing::check_partials(to_delaunay(gen3.elements(1e-3, 0.9), kField), kField,
                              [&](const testing::PartialCheck& c) {
                                partials = std::max(partials, c.error);
                              });
    }

    testing::Gen gen4(47);
    double identity = 0;
    for (int S = 1; S <= 3; ++S) {
      for (int i = 0; i < 300; ++i) {
        const PolarNodalState x = to_polar_nodal(gen4.elements(1e-6, 0.8), kField);
        const PolarNodalState y = correct_state(x, TransformPlan::full_inverse(S), kField);
        identity = std::max(identity,
                            testing::pn_error(x, correct_state(y, TransformPlan::full_direct(S), kField)));
      }
    }

    double drift = 0;
    for (const Timed* t : {&prisma, &gto, &topex}) {
      drift = std::max({drift, t->result.reference.energy_drift, t->result.reference.N_drift});
    }

    bool trips = false;
    KeplerianElements critical = find_case("prisma")->elements();
    critical.inc = 63.4349 * kDeg;
    try {
      fit(critical, {3, 2}, kField);
    } catch (const ResonanceError&) {
      trips = true;
    }
    bool topex_ok = true;
    try {
      fit(find_case("topex")->elements(), {3, 2}, kField);
    } catch (const ResonanceError&) {
      topex_ok = false;
    }

    const bool ok = kepler <= 1e-14 && charts <= 1e-11 && partials <= 1e-6 && identity <= 1e-11 &&
                    drift <= 1e-12 && trips && topex_ok;
    report.line(10, ok,
                fmt("Kepler residual %.2g (<= 1e-14); chart round trips %.2g (<= 1e-11); "
                    "partials vs FD %.2g (<= 1e-6); direct(inverse) %.2g (<= 1e-11); "
                    "oracle drift %.2g (<= 1e-12); guard trips at 63.4349 deg: %s; TOPEX passes: %s",
                    kepler, charts, partials, identity, drift, trips ? "yes" : "no",
                    topex_ok ? "yes" : "no"));
    report.info(fmt("round trips entering the Delaunay chart from another chart at e < 1e-4 reach "
                    "%.2g: G = L sqrt(1 - e^2) holds e only to about 1e-16 / e, so 1e-11 is not "
                    "attainable there; all other routes and all e >= 1e-4 are covered above",
                    limited));
  }

  std::cout << report.passed << " passed, " << report.failed << " failed" << std::endl;
  return report.failed == 0 ? 0 : 1;
}
