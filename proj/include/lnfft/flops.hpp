#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>

namespace lnfft {

// Analytic operation accounting. Weights per operation:
//   real add 1, complex add 2, real mul 1, complex mul 6, complex exp 7,
//   size-N FFT or IFFT 5·N·log2(N) (real log2 for non-dyadic N).
//
// Conventions shared by every algorithm in the library:
//   - a real-by-complex product is charged as 2 real muls;
//   - a complex division is charged as 1 complex mul + 4 real muls + 1 real add;
//   - one gridding-kernel evaluation is charged as 1 complex exp;
//   - a real exponential (damping tables) is charged as 1 complex exp;
//   - a squared norm of a length-N complex vector is 2N real muls + 2N real adds;
//   - scalar bookkeeping (loop counters, single scalar divisions) is free.

enum class FlopOp { RealAdd, ComplexAdd, RealMul, ComplexMul, ComplexExp, Fft };

struct FlopEvent {
  FlopOp op;
  std::uint64_t count = 1;
  std::size_t fft_size = 0;  // only for FlopOp::Fft
};

struct FlopReport {
  std::uint64_t real_adds = 0;
  std::uint64_t complex_adds = 0;
  std::uint64_t real_muls = 0;
  std::uint64_t complex_muls = 0;
  std::uint64_t complex_exps = 0;
  std::map<std::size_t, std::uint64_t> fft_invocations;  // size -> count
  std::uint64_t total_flops = 0;

  friend bool operator==(const FlopReport&, const FlopReport&) = default;
};

/// Flops of one size-n FFT, rounded to the nearest integer.
std::uint64_t fft_flops(std::size_t n) noexcept;

FlopReport tally(std::span<const FlopEvent> events);

/// Per-call accumulator. Algorithms take an optional pointer to one; a null
/// pointer disables counting.
class FlopCounter {
 public:
  void add(FlopOp op, std::uint64_t count = 1) noexcept;
  void real_adds(std::uint64_t n) noexcept { add(FlopOp::RealAdd, n); }
  void complex_adds(std::uint64_t n) noexcept { add(FlopOp::ComplexAdd, n); }
  void real_muls(std::uint64_t n) noexcept { add(FlopOp::RealMul, n); }
  void complex_muls(std::uint64_t n) noexcept { add(FlopOp::ComplexMul, n); }
  void complex_exps(std::uint64_t n) noexcept { add(FlopOp::ComplexExp, n); }
  void real_scale(std::uint64_t n) noexcept { add(FlopOp::RealMul, 2 * n); }
  void complex_divs(std::uint64_t n) noexcept;
  void squared_norm(std::uint64_t n) noexcept;
  void fft(std::size_t n, std::uint64_t count = 1);

  void merge(const FlopCounter& other);
  FlopReport report() const;

 private:
  FlopReport acc_;
};

/// Counts into `c` when non-null.
template <typename F>
inline void count(FlopCounter* c, F&& f) {
  if (c) f(*c);
}

}  // namespace lnfft
