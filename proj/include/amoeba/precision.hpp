#ifndef AMOEBA_PRECISION_HPP
#define AMOEBA_PRECISION_HPP

namespace amoeba {

inline constexpr long kMinPrecisionBits = 64;
inline constexpr long kDefaultPrecisionBits = 256;

// Current working precision in bits for all Real/Complex arithmetic.
// Global (atomic), read at every Real construction.
long precision_bits();

// Sets the working precision; values below kMinPrecisionBits are clamped up.
void set_precision_bits(long bits);

// Reads AMOEBA_PRECISION_BITS from the environment if set and applies it.
// Returns the precision in effect afterwards.
long apply_precision_env();

// RAII: set precision for a scope, restore on exit.
class PrecisionGuard {
 public:
  explicit PrecisionGuard(long bits);
  ~PrecisionGuard();
  PrecisionGuard(const PrecisionGuard&) = delete;
  PrecisionGuard& operator=(const PrecisionGuard&) = delete;

 private:
  long saved_;
};

}  // namespace amoeba

#endif
