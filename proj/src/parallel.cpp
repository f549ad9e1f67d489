#include "framelab/parallel.hpp"

#include <atomic>

namespace framelab::par {

namespace {
std::atomic<int> g_cap{0};
}

void set_thread_cap(int cap) { g_cap.store(cap < 0 ? 0 : cap); }

int thread_cap() { return g_cap.load(); }

int effective_threads() {
#if defined(_OPENMP)
  int cap = g_cap.load();
  // A cap above the hardware count is honoured: oversubscription is how the
  // parallel path gets exercised on small machines.
  return cap <= 0 ? omp_get_max_threads() : cap;
#else
  return 1;
#endif
}

bool serial_only() {
#if defined(_OPENMP)
  return effective_threads() <= 1;
#else
  return true;
#endif
}

}  // namespace framelab::par
