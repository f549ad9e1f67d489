#pragma once

#include <cstdint>

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace framelab::par {

// Process-wide cap on worker threads used by the parallel kernels.  0 means
// "use the OpenMP default".  The CLI sets this from --threads; tests pin it.
void set_thread_cap(int cap);
int thread_cap();

// Number of threads a kernel should actually launch.
int effective_threads();

// True when the cap (or the build) forces the serial reference path.
bool serial_only();

class ThreadCapGuard {
 public:
  explicit ThreadCapGuard(int cap) : saved_(thread_cap()) { set_thread_cap(cap); }
  ~ThreadCapGuard() { set_thread_cap(saved_); }

 private:
  int saved_;
};

}  // namespace framelab::par
