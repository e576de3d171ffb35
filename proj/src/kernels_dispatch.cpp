#include "hpga/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace hpga::kernels {
namespace {

struct Selection {
  product_fn fn;
  const char* name;
};

Selection pick(const char* request) {
#if defined(__x86_64__) || defined(_M_X64)
  const bool have_avx2 = __builtin_cpu_supports("avx2");
#else
  const bool have_avx2 = false;
#endif
  if (request && std::strcmp(request, "scalar") == 0) return {product_scalar, "scalar"};
#if defined(__x86_64__) || defined(_M_X64)
  if (request && std::strcmp(request, "avx2") == 0 && have_avx2)
    return {product_avx2, "avx2"};
  if ((!request || std::strcmp(request, "auto") == 0) && have_avx2)
    return {product_avx2, "avx2"};
#endif
  return {product_scalar, "scalar"};
}

std::atomic<const Selection*> g_active{nullptr};

const Selection* select_once() {
  static Selection sel = pick(std::getenv("HPGA_KERNEL"));
  const Selection* expected = nullptr;
  g_active.compare_exchange_strong(expected, &sel);
  return g_active.load();
}

}  // namespace

bool avx2_available() noexcept {
#if defined(__x86_64__) || defined(_M_X64)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

product_fn active() noexcept {
  const Selection* s = g_active.load(std::memory_order_acquire);
  return s ? s->fn : select_once()->fn;
}

const char* active_name() noexcept {
  const Selection* s = g_active.load(std::memory_order_acquire);
  return s ? s->name : select_once()->name;
}

void force(const char* name) {
  static Selection forced;  // last explicit selection wins
  forced = pick(name);
  g_active.store(&forced, std::memory_order_release);
}

}  // namespace hpga::kernels
