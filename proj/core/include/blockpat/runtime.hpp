#ifndef BLOCKPAT_RUNTIME_HPP
#define BLOCKPAT_RUNTIME_HPP

namespace blockpat {

// Worker threads to use: `requested` if positive, otherwise the hardware
// concurrency; either way capped by the BP_THREADS environment variable
// when it is set to a positive integer. Always at least 1.
int worker_count(int requested = 0);

}  // namespace blockpat

#endif  // BLOCKPAT_RUNTIME_HPP
