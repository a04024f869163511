#include "thyp/series.hpp"

#include <atomic>

namespace thyp {

namespace {
std::atomic<bool> use_parallel{true};
}

void set_parallel_series(bool on) { use_parallel = on; }
bool parallel_series() { return use_parallel; }

}  // namespace thyp
