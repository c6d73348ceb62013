#include "thetakit/parallel.hpp"

#include <stdexcept>

namespace thetakit {

namespace {
std::atomic<unsigned> g_threads{1};
}

void set_thread_count(unsigned n) {
  if (n == 0) throw std::invalid_argument("thread count must be at least 1");
  g_threads = n;
}

unsigned thread_count() { return g_threads; }

bool& detail::in_parallel_region() {
  thread_local bool flag = false;
  return flag;
}

}  // namespace thetakit
