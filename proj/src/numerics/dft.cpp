#include <fftw3.h>

#include <cmath>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "carand/numerics.hpp"

namespace carand::numerics {

namespace {

// The FFTW planner is not re-entrant; execution is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

struct FftwFree {
  void operator()(void* p) const { fftw_free(p); }
};

struct PlanDeleter {
  void operator()(fftw_plan p) const {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(p);
  }
};

using Plan = std::unique_ptr<std::remove_pointer_t<fftw_plan>, PlanDeleter>;

}  // namespace

std::vector<double> dft_magnitudes(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n < 2) throw std::invalid_argument("DFT needs at least 2 samples");

  std::unique_ptr<double, FftwFree> in(fftw_alloc_real(n));
  std::unique_ptr<fftw_complex, FftwFree> out(fftw_alloc_complex(n / 2 + 1));
  if (!in || !out) throw std::bad_alloc();

  Plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan.reset(fftw_plan_dft_r2c_1d(static_cast<int>(n), in.get(), out.get(), FFTW_ESTIMATE));
  }
  if (!plan) throw std::runtime_error("FFTW planning failed");

  std::copy(x.begin(), x.end(), in.get());
  fftw_execute(plan.get());

  std::vector<double> mags(n / 2);
  const fftw_complex* spectrum = out.get();
  for (std::size_t j = 0; j < mags.size(); ++j) mags[j] = std::hypot(spectrum[j][0], spectrum[j][1]);
  return mags;
}

}  // namespace carand::numerics
