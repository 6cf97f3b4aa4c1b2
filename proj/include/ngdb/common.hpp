#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ngdb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define NGDB_DEFINE_ERROR(Name)                \
  class Name : public ::ngdb::Error {          \
   public:                                     \
    using ::ngdb::Error::Error;                \
  }

// kg-store
NGDB_DEFINE_ERROR(MissingFile);
NGDB_DEFINE_ERROR(MalformedLine);
NGDB_DEFINE_ERROR(IdOutOfRange);
NGDB_DEFINE_ERROR(UnsupportedPattern);
// query-model
NGDB_DEFINE_ERROR(ArityMismatch);
NGDB_DEFINE_ERROR(NotAUnionPattern);
// sampler
NGDB_DEFINE_ERROR(ExhaustedRetries);
NGDB_DEFINE_ERROR(NonFiniteLoss);
// tensor-arena
NGDB_DEFINE_ERROR(ZeroRefcount);
NGDB_DEFINE_ERROR(DoubleRelease);
NGDB_DEFINE_ERROR(IndexOutOfRange);
// kernels
NGDB_DEFINE_ERROR(ShapeMismatch);
NGDB_DEFINE_ERROR(ParamOutOfRange);
NGDB_DEFINE_ERROR(DomainError);
// scheduler
NGDB_DEFINE_ERROR(AllPoolsEmpty);
NGDB_DEFINE_ERROR(MissingKernel);
// trainer
NGDB_DEFINE_ERROR(NoNegativesAvailable);
NGDB_DEFINE_ERROR(NonFinite);
NGDB_DEFINE_ERROR(BadMagic);
NGDB_DEFINE_ERROR(CountMismatch);
NGDB_DEFINE_ERROR(TruncatedFile);
// evaluator
NGDB_DEFINE_ERROR(TargetFiltered);
NGDB_DEFINE_ERROR(BackboneMismatch);
// cli
NGDB_DEFINE_ERROR(ConfigError);
NGDB_DEFINE_ERROR(UnknownSubcommand);

#undef NGDB_DEFINE_ERROR

inline uint64_t splitmix64(uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic RNG with portable draw algorithms (std distributions are
// implementation-defined, which would break byte-for-byte reproducibility).
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {
    // Warm up so nearby seeds decorrelate.
    next();
    next();
  }

  uint64_t next() { return splitmix64(state_); }

  // Unbiased integer in [0, n) via Lemire's multiply-shift with rejection.
  uint64_t below(uint64_t n) {
    uint64_t x = next();
    __uint128_t m = static_cast<__uint128_t>(x) * n;
    auto lo = static_cast<uint64_t>(m);
    if (lo < n) {
      uint64_t threshold = (0ULL - n) % n;
      while (lo < threshold) {
        x = next();
        m = static_cast<__uint128_t>(x) * n;
        lo = static_cast<uint64_t>(m);
      }
    }
    return static_cast<uint64_t>(m >> 64);
  }

  double uniform() {  // [0, 1)
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 1e-300) u1 = uniform();
    double mag = std::sqrt(-2.0 * std::log(u1));
    spare_ = mag * std::sin(6.283185307179586 * u2);
    have_spare_ = true;
    return mag * std::cos(6.283185307179586 * u2);
  }

  // Forks an independent stream, e.g. one per producer worker or batch.
  Rng fork(uint64_t tag) const {
    uint64_t s = state_;
    s ^= 0x6a09e667f3bcc909ULL + tag * 0x9e3779b97f4a7c15ULL;
    return Rng(s);
  }

 private:
  uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

inline uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::string hex_u64(uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
  return std::string(buf);
}

}  // namespace ngdb
