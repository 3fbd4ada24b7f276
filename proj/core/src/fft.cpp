#include "sbo/fft.hpp"

#include <fftw3.h>

#include <algorithm>
#include <map>
#include <tuple>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace sbo::fft {
namespace {

// FFTW planning is not thread-safe; execution on new arrays is. Plans are
// created once per (shape, direction) under a lock and reused by every
// caller through fftw_execute_dft. FFTW_ESTIMATE keeps the chosen algorithm
// (and therefore every rounding) independent of timing.
class Plan {
 public:
  Plan(std::size_t rows, std::size_t cols, int sign) {
    const std::size_t total = rows * cols;
    auto* in = fftw_alloc_complex(total);
    auto* out = fftw_alloc_complex(total);
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    if (rows == 1)
      plan_ = fftw_plan_dft_1d(static_cast<int>(cols), in, out, sign, flags);
    else
      plan_ = fftw_plan_dft_2d(static_cast<int>(rows), static_cast<int>(cols), in, out, sign, flags);
    fftw_free(in);
    fftw_free(out);
    if (plan_ == nullptr) throw std::runtime_error("FFTW planning failed");
  }
  Plan(const Plan&) = delete;
  Plan& operator=(const Plan&) = delete;
  ~Plan() { fftw_destroy_plan(plan_); }

  void execute(const cplx* in, cplx* out) const {
    // FFTW does not write to the input of an out-of-place complex transform.
    fftw_execute_dft(plan_, reinterpret_cast<fftw_complex*>(const_cast<cplx*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
  }

 private:
  fftw_plan plan_ = nullptr;
};

const Plan& plan_for(std::size_t rows, std::size_t cols, int sign) {
  static std::mutex mutex;
  static std::map<std::tuple<std::size_t, std::size_t, int>, std::unique_ptr<Plan>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{rows, cols, sign}];
  if (!slot) slot = std::make_unique<Plan>(rows, cols, sign);
  return *slot;
}

std::vector<cplx> run(std::span<const cplx> in, std::size_t rows, std::size_t cols, int sign) {
  if (in.size() != rows * cols) throw std::invalid_argument("fft: size mismatch");
  std::vector<cplx> out(in.size());
  plan_for(rows, cols, sign).execute(in.data(), out.data());
  return out;
}

}  // namespace

Spectrum forward(std::span<const cplx> values) {
  auto out = run(values, 1, values.size(), FFTW_FORWARD);
  const double scale = 1.0 / static_cast<double>(values.size());
  for (auto& c : out) c *= scale;
  return out;
}

std::vector<cplx> inverse(std::span<const cplx> coeffs) {
  return run(coeffs, 1, coeffs.size(), FFTW_BACKWARD);
}

std::vector<cplx> forward_2d(std::span<const cplx> values, std::size_t rows, std::size_t cols) {
  auto out = run(values, rows, cols, FFTW_FORWARD);
  const double scale = 1.0 / static_cast<double>(values.size());
  for (auto& c : out) c *= scale;
  return out;
}

std::vector<cplx> inverse_2d(std::span<const cplx> coeffs, std::size_t rows, std::size_t cols) {
  return run(coeffs, rows, cols, FFTW_BACKWARD);
}

Spectrum resize(std::span<const cplx> coeffs, std::size_t new_size) {
  const std::size_t n = coeffs.size();
  Spectrum out(new_size, cplx(0.0));
  if (new_size == n) {
    out.assign(coeffs.begin(), coeffs.end());
    return out;
  }
  const std::size_t m = std::min(n, new_size);
  // Modes 0 .. m/2-1 and -(m/2-1) .. -1 exist on both lattices.
  for (std::size_t k = 0; k < m / 2; ++k) out[k] = coeffs[k];
  for (std::size_t k = 1; k < m / 2; ++k) out[new_size - k] = coeffs[n - k];
  if (new_size > n) {
    // Split the source Nyquist mode evenly between +n/2 and -n/2.
    const cplx nyq = 0.5 * coeffs[n / 2];
    out[n / 2] += nyq;
    out[new_size - n / 2] += nyq;
  }
  return out;
}

}  // namespace sbo::fft
