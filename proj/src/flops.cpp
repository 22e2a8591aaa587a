#include "lnfft/flops.hpp"

#include <cmath>

namespace lnfft {

std::uint64_t fft_flops(std::size_t n) noexcept {
  if (n <= 1) return 0;
  const double nd = static_cast<double>(n);
  return static_cast<std::uint64_t>(std::llround(5.0 * nd * std::log2(nd)));
}

namespace {

std::uint64_t total_of(const FlopReport& r) {
  std::uint64_t total = r.real_adds + 2 * r.complex_adds + r.real_muls + 6 * r.complex_muls +
                        7 * r.complex_exps;
  for (const auto& [size, n] : r.fft_invocations) total += n * fft_flops(size);
  return total;
}

}  // namespace

FlopReport tally(std::span<const FlopEvent> events) {
  FlopCounter c;
  for (const auto& e : events) {
    if (e.op == FlopOp::Fft)
      c.fft(e.fft_size, e.count);
    else
      c.add(e.op, e.count);
  }
  return c.report();
}

void FlopCounter::add(FlopOp op, std::uint64_t count) noexcept {
  switch (op) {
    case FlopOp::RealAdd: acc_.real_adds += count; break;
    case FlopOp::ComplexAdd: acc_.complex_adds += count; break;
    case FlopOp::RealMul: acc_.real_muls += count; break;
    case FlopOp::ComplexMul: acc_.complex_muls += count; break;
    case FlopOp::ComplexExp: acc_.complex_exps += count; break;
    case FlopOp::Fft: break;  // needs a size, see fft()
  }
}

void FlopCounter::complex_divs(std::uint64_t n) noexcept {
  acc_.complex_muls += n;
  acc_.real_muls += 4 * n;
  acc_.real_adds += n;
}

void FlopCounter::squared_norm(std::uint64_t n) noexcept {
  acc_.real_muls += 2 * n;
  acc_.real_adds += 2 * n;
}

void FlopCounter::fft(std::size_t n, std::uint64_t count) {
  if (count) acc_.fft_invocations[n] += count;
}

void FlopCounter::merge(const FlopCounter& other) {
  acc_.real_adds += other.acc_.real_adds;
  acc_.complex_adds += other.acc_.complex_adds;
  acc_.real_muls += other.acc_.real_muls;
  acc_.complex_muls += other.acc_.complex_muls;
  acc_.complex_exps += other.acc_.complex_exps;
  for (const auto& [size, n] : other.acc_.fft_invocations) acc_.fft_invocations[size] += n;
}

FlopReport FlopCounter::report() const {
  FlopReport r = acc_;
  r.total_flops = total_of(r);
  return r;
}

}  // namespace lnfft
