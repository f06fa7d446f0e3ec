#include "dnls/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <utility>

namespace dnls::fft {

namespace {

// FFTW planning is not thread-safe; execution on new arrays is.
class PlanCache {
 public:
  ~PlanCache() {
    for (auto& [key, plan] : plans_) fftw_destroy_plan(plan);
  }

  fftw_plan get(int n, int sign) {
    std::lock_guard<std::mutex> lock(mutex_);
    auto key = std::make_pair(n, sign);
    if (auto it = plans_.find(key); it != plans_.end()) return it->second;
    std::vector<Complex> in(n), out(n);
    fftw_plan plan = fftw_plan_dft_1d(n, reinterpret_cast<fftw_complex*>(in.data()),
                                      reinterpret_cast<fftw_complex*>(out.data()), sign,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(key, plan);
    return plan;
  }

 private:
  std::mutex mutex_;
  std::map<std::pair<int, int>, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache instance;
  return instance;
}

std::vector<Complex> execute(std::span<const Complex> x, int sign) {
  const int n = static_cast<int>(x.size());
  std::vector<Complex> in(x.begin(), x.end());
  std::vector<Complex> out(n);
  if (n == 0) return out;
  fftw_plan plan = cache().get(n, sign);
  fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(in.data()),
                   reinterpret_cast<fftw_complex*>(out.data()));
  return out;
}

}  // namespace

std::vector<Complex> forward(std::span<const Complex> x) { return execute(x, FFTW_FORWARD); }

std::vector<Complex> backward(std::span<const Complex> x) { return execute(x, FFTW_BACKWARD); }

int good_size(int n) {
  if (n <= 1) return 1;
  for (int m = n;; ++m) {
    int k = m;
    for (int p : {2, 3, 5})
      while (k % p == 0) k /= p;
    if (k == 1) return m;
  }
}

}  // namespace dnls::fft
