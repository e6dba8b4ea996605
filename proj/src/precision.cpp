#include "amoeba/precision.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "amoeba/errors.hpp"

namespace amoeba {

namespace {
std::atomic<long> g_precision_bits{kDefaultPrecisionBits};
}

long precision_bits() { return g_precision_bits.load(std::memory_order_relaxed); }

void set_precision_bits(long bits) {
  if (bits < kMinPrecisionBits) bits = kMinPrecisionBits;
  g_precision_bits.store(bits, std::memory_order_relaxed);
}

long apply_precision_env() {
  if (const char* env = std::getenv("AMOEBA_PRECISION_BITS")) {
    try {
      set_precision_bits(std::stol(env));
    } catch (const std::exception&) {
      throw input_error("AMOEBA_PRECISION_BITS is not an integer: " + std::string(env));
    }
  }
  return precision_bits();
}

PrecisionGuard::PrecisionGuard(long bits) : saved_(precision_bits()) {
  set_precision_bits(bits);
}

PrecisionGuard::~PrecisionGuard() { set_precision_bits(saved_); }

}  // namespace amoeba
