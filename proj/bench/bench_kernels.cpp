// Compares the serial and OpenMP paths of the two parallel kernels:
// batched S-polynomial reduction inside Buchberger, and standard-monomial
// counting for Hilbert tables.  Usage: bench_kernels [repeats]

#include <chrono>
#include <iostream>

#include "netideal/hilbert.hpp"
#include "netideal/interpret.hpp"
#include "netideal/semantics.hpp"

using namespace netideal;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
      .count();
}

template <class F>
double time_best_of(int repeats, F body) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    body();
    best = std::min(best, ms_since(t0));
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  int repeats = argc > 1 ? std::atoi(argv[1]) : 3;
  const MonomialOrder ord = MonomialOrder::grevlex();

  // Groebner workload: the full homogeneous ideal of the Church numeral 2
  // cut against a promoted 0 (27 generators, 34 variables).
  ProofNet net = church(2, true);
  auto [ideal, reg] = net_ideal(net);

  GroebnerOptions serial;
  serial.parallel = false;
  GroebnerOptions parallel;
  parallel.parallel = true;

  std::size_t basis_serial = 0, basis_parallel = 0;
  double gb_s = time_best_of(
      repeats, [&] { basis_serial = reduced_groebner(ideal.gens(), ord, serial).size(); });
  double gb_p = time_best_of(
      repeats, [&] { basis_parallel = reduced_groebner(ideal.gens(), ord, parallel).size(); });
  if (basis_serial != basis_parallel) {
    std::cerr << "bench: serial and parallel bases disagree\n";
    return 1;
  }

  // Hilbert workload: product of three atom-pair blocks with one diagonal
  // and one Segre-style quadric; counting runs per multidegree.
  Ring hring({"a", "a'", "b", "b'", "c", "c'"});
  RingPtr hr = std::make_shared<Ring>(hring);
  auto v = [&](const std::string& n) { return PolyQ::variable(hr, hr->var_index(n)); };
  std::vector<PolyQ> hgens = {
      v("a").mul(v("b'"), ord).sub(v("a'").mul(v("b"), ord), ord),
      v("b").mul(v("c'"), ord).sub(v("b'").mul(v("c"), ord), ord),
  };
  HilbertOptions hs;
  hs.dmax = 40;
  hs.parallel = false;
  HilbertOptions hp = hs;
  hp.parallel = true;

  std::vector<long> table_serial, table_parallel;
  double hi_s = time_best_of(repeats, [&] {
    table_serial = hilbert_function(hgens, blocks_by_prime_pairing(hr), hs).values;
  });
  double hi_p = time_best_of(repeats, [&] {
    table_parallel = hilbert_function(hgens, blocks_by_prime_pairing(hr), hp).values;
  });
  if (table_serial != table_parallel) {
    std::cerr << "bench: serial and parallel Hilbert tables disagree\n";
    return 1;
  }

#ifdef NETIDEAL_HAVE_OPENMP
  const char* mode = "openmp";
#else
  const char* mode = "serial-only build";
#endif
  std::cout << "kernel\tserial_ms\tparallel_ms\tspeedup\t(" << mode << ")\n";
  std::cout << "spoly_batch\t" << gb_s << "\t" << gb_p << "\t" << (gb_s / gb_p) << "\n";
  std::cout << "hilbert_count\t" << hi_s << "\t" << hi_p << "\t" << (hi_s / hi_p) << "\n";
  return 0;
}
