#ifndef ARH1_RNG_HPP
#define ARH1_RNG_HPP

#include <cmath>
#include <cstdint>

namespace arh1 {

/// SplitMix64 finalizer; full-period mixing of a 64-bit counter.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Counter-based standard-normal stream.
///
/// Each stream is keyed by (master seed, replication, component), so
/// parallel and serial runs consume identical draw sequences.  Draws
/// are produced by Box-Muller from counter-indexed uniforms; no hidden
/// state beyond the counter, so the stream is trivially reproducible.
class NormalStream {
 public:
  NormalStream(std::uint64_t master_seed, std::uint64_t replication,
               std::uint64_t component)
      : key_(splitmix64(master_seed ^
                        splitmix64(0x7265706cULL + replication) ^
                        splitmix64(0x636f6d70ULL * (component + 1)))) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = uniform(counter_++);
    const double u2 = uniform(counter_++);
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * M_PI * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return r * std::cos(theta);
  }

 private:
  // uniform on (0,1]; never returns 0 so log() is safe
  double uniform(std::uint64_t c) const {
    const std::uint64_t bits = splitmix64(key_ + c);
    return (static_cast<double>(bits >> 11) + 1.0) * 0x1p-53;
  }

  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace arh1

#endif
