// Compares the OpenMP kernels against their serial reference
// implementations: exhaustive chamber feasibility sweeps and finite-group
// homomorphism counting. Results must agree exactly; timings are printed.

#include <chrono>
#include <iostream>

#include "fcpi/arrangement.hpp"
#include "fcpi/fc_model.hpp"
#include "fcpi/homcount.hpp"
#include "fcpi/presentation.hpp"
#include "fcpi/quotient.hpp"
#include "fcpi/salvetti.hpp"
#include "fcpi/tietze.hpp"
#include "fcpi/verify.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(const std::string& name, double serial, double parallel, bool equal) {
  std::cout << name << ": serial " << serial << " s, parallel " << parallel << " s, speedup "
            << (parallel > 0 ? serial / parallel : 0.0) << "x, results "
            << (equal ? "equal" : "DIFFER") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  int n = 3;
  if (argc > 1) n = std::atoi(argv[1]);
  std::cout << "F_C dimension n = " << n << "\n";

  const auto arr = fcpi::build_fc_arrangement(n);
  {
    auto t0 = Clock::now();
    const auto serial = fcpi::enumerate_chambers_exhaustive_serial(arr);
    const double ts = seconds_since(t0);
    t0 = Clock::now();
    const auto parallel = fcpi::enumerate_chambers_exhaustive(arr);
    const double tp = seconds_since(t0);
    report("exhaustive chamber sweep (2^" + std::to_string(arr.size()) + " sign vectors)", ts,
           tp, serial == parallel);
  }

  {
    const auto q = fcpi::build_quotient(fcpi::build_salvetti_2_skeleton(arr));
    const auto sd = fcpi::spanning_cells(q);
    auto p = fcpi::presentation_from_complex(q, sd, fcpi::PresentationMode::SpanningComplex);
    if (n >= 3) p = fcpi::tietze_simplify(p).presentation;
    for (const auto& t : fcpi::default_battery()) {
      auto t0 = Clock::now();
      const long long cs = fcpi::count_homs_serial(p, t);
      const double ts = seconds_since(t0);
      t0 = Clock::now();
      const long long cp = fcpi::count_homs(p, t);
      const double tp = seconds_since(t0);
      report("hom count into " + t.name + " (" + std::to_string(p.generators.size()) +
                 " generators, count " + std::to_string(cs) + ")",
             ts, tp, cs == cp);
    }
  }
  return 0;
}
