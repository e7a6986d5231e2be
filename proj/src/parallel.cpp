#include "highway/parallel.hpp"

#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace highway {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_threads(int threads) {
  if (threads < 1) return;
#ifdef _OPENMP
  omp_set_num_threads(threads);
#endif
}

void apply_thread_env() {
  if (const char* env = std::getenv("HIGHWAY_THREADS")) {
    try {
      set_threads(std::stoi(env));
    } catch (const std::exception&) {
      // unparsable value: keep the OpenMP default
    }
  }
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace highway
