// Compares the optimized kernels against the serial references:
//   - maximal-overlap pair enumeration vs the literal triple loop
//   - OpenMP corpus sweep vs the single-threaded loop
// Invoke with no arguments for the default sizes, or pass a max corpus
// length as the first argument.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "support/reference.hpp"
#include "turaev/enumerate.hpp"
#include "turaev/sweep.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace turaev;

namespace {

double seconds(const std::function<void()>& fn) {
  auto start = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       start)
      .count();
}

LinearWord sample_word(const Alphabet& ab, std::size_t len) {
  // A fixed aperiodic pattern, long enough to stress the enumerators.
  std::vector<Letter> letters;
  const std::string motif = "abaababaabab";
  while (letters.size() < len) {
    for (char c : motif) {
      if (letters.size() == len) break;
      letters.push_back(letter_from_char(c));
    }
  }
  LinearWord w{std::move(letters)};
  return cyclic_reduce(reduce_linear(w));
}

}  // namespace

int main(int argc, char** argv) {
  std::size_t max_len = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 8;
  Alphabet ab = Alphabet::from_order("abBA");

  std::printf("pair enumeration, optimized vs literal triple loop\n");
  std::printf("%8s %12s %12s %8s\n", "n", "optimized", "bruteforce",
              "pairs");
  for (std::size_t n : {16u, 32u, 64u, 128u}) {
    LinearWord w = sample_word(ab, n);
    std::size_t pairs = 0;
    double fast = seconds([&] {
      for (int k = 0; k < 50; ++k)
        pairs = enumerate_linked_pairs(w, ab).size();
    });
    double slow = seconds([&] {
      pairs = reference::enumerate_linked_pairs_bruteforce(w, ab).size();
    });
    std::printf("%8zu %10.4fms %10.4fms %8zu\n", w.length(),
                fast / 50 * 1e3, slow * 1e3, pairs);
  }

  std::printf("\nexhaustive verify sweep, serial vs OpenMP\n");
#ifdef _OPENMP
  int workers = omp_get_max_threads();
#else
  int workers = 1;
  std::printf("(built without OpenMP; both runs are serial)\n");
#endif
  SweepOptions opt;
  opt.max_len = max_len;
  opt.powers = {3, 4};

  opt.threads = 1;
  VerifySummary serial_result;
  double serial = seconds([&] { serial_result = exhaustive_verify(ab, opt); });

  opt.threads = 0;
  VerifySummary parallel_result;
  double parallel =
      seconds([&] { parallel_result = exhaustive_verify(ab, opt); });

  bool same = serial_result.words == parallel_result.words &&
              serial_result.linked_pairs == parallel_result.linked_pairs &&
              serial_result.violations.size() ==
                  parallel_result.violations.size();
  std::printf("max_len %zu: serial %.3fs, %d threads %.3fs, speedup %.2fx, "
              "results %s\n",
              max_len, serial, workers, parallel, serial / parallel,
              same ? "identical" : "DIFFER");
  return same ? 0 : 1;
}
