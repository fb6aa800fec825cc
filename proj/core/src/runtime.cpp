#include "blockpat/runtime.hpp"

#include <cstdlib>
#include <thread>

namespace blockpat {

int worker_count(int requested) {
  int workers = requested > 0
                    ? requested
                    : static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (const char* env = std::getenv("BP_THREADS")) {
    int cap = std::atoi(env);
    if (cap >= 1 && cap < workers) workers = cap;
  }
  return workers;
}

}  // namespace blockpat
