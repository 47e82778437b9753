#include "lzeta/summation.hpp"

#include <atomic>

namespace lzeta {

namespace {
std::atomic<PrecisionMode> g_mode{PrecisionMode::standard};
std::atomic<int> g_workers{0};
} // namespace

void set_precision_mode(PrecisionMode mode) { g_mode.store(mode); }
PrecisionMode precision_mode() { return g_mode.load(); }

void set_worker_count(int n) { g_workers.store(n < 0 ? 0 : n); }
int worker_count() { return g_workers.load(); }

} // namespace lzeta
