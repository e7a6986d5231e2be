#pragma once

#include <cstdint>
#include <exception>

namespace highway {

/// Selects between the OpenMP kernel and its serial reference. Both produce
/// identical results; reductions are ordered so that thread count never
/// changes an answer.
enum class Execution { serial, parallel };

/// Threads OpenMP regions will use (1 when built without OpenMP).
int max_threads();
/// Sets the OpenMP thread count; values < 1 are ignored.
void set_threads(int threads);
/// Applies HIGHWAY_THREADS from the environment if set.
void apply_thread_env();

/// Deterministic per-stream seed: splitmix64 over (seed, stream).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Runs body(i) for i in [0, count), in parallel unless `exec` is serial.
/// An exception cannot leave an OpenMP region, so the one thrown at the
/// lowest index is carried out and rethrown here.
template <class Body>
void parallel_for(long long count, Execution exec, Body&& body) {
  std::exception_ptr error;
  long long error_index = count;
#pragma omp parallel for schedule(dynamic, 16) if (exec == Execution::parallel)
  for (long long i = 0; i < count; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(highway_parallel_for_error)
      if (i < error_index) {
        error_index = i;
        error = std::current_exception();
      }
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace highway
