#include "lnfft/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>

#include "lnfft/error.hpp"

namespace lnfft {
namespace {

// FFTW planning is not thread-safe; execution of an existing plan on new
// arrays is. Plans are created once per (size, sign) and never destroyed.
class PlanCache {
 public:
  fftw_plan get(std::size_t n, int sign) {
    std::lock_guard lock(mutex_);
    auto key = std::make_pair(n, sign);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    auto* buf = fftw_alloc_complex(n);
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), buf, buf, sign,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    fftw_free(buf);
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<std::size_t, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

void execute(std::span<Complex> v, int sign) {
  if (v.empty()) throw Error(Errc::InvalidArgument, "transform of an empty vector");
  if (v.size() == 1) return;
  auto* data = reinterpret_cast<fftw_complex*>(v.data());
  fftw_execute_dft(cache().get(v.size(), sign), data, data);
}

}  // namespace

void dft_inplace(std::span<Complex> v) { execute(v, FFTW_FORWARD); }

void synthesize_inplace(std::span<Complex> v) { execute(v, FFTW_BACKWARD); }

CVector dft(std::span<const Complex> v, FlopCounter* flops) {
  CVector out(v.begin(), v.end());
  dft_inplace(out);
  count(flops, [&](FlopCounter& c) { c.fft(out.size()); });
  return out;
}

CVector synthesize(std::span<const Complex> V, FlopCounter* flops) {
  CVector out(V.begin(), V.end());
  synthesize_inplace(out);
  count(flops, [&](FlopCounter& c) { c.fft(out.size()); });
  return out;
}

CVector idft(std::span<const Complex> V, FlopCounter* flops) {
  CVector out = synthesize(V, flops);
  const double scale = 1.0 / static_cast<double>(out.size());
  for (auto& x : out) x *= scale;
  count(flops, [&](FlopCounter& c) { c.real_scale(out.size()); });
  return out;
}

CVector hadamard(std::span<const Complex> v, std::span<const Complex> w, FlopCounter* flops) {
  if (v.size() != w.size())
    throw Error(Errc::LengthMismatch, "hadamard of lengths " + std::to_string(v.size()) +
                                          " and " + std::to_string(w.size()));
  CVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i] * w[i];
  count(flops, [&](FlopCounter& c) { c.complex_muls(v.size()); });
  return out;
}

}  // namespace lnfft
