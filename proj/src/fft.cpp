#include "weylscope/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>

namespace weylscope::fft {
namespace {

std::mutex plan_mutex;

// Plans are created once per shape and reused with fftw_execute_dft, which is thread safe.
fftw_plan plan_for(int n, int howmany, int stride, int dist, int sign) {
  using Key = std::tuple<int, int, int, int, int>;
  static std::map<Key, fftw_plan> cache;
  std::lock_guard<std::mutex> lock(plan_mutex);
  const Key key{n, howmany, stride, dist, sign};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  const std::size_t span = static_cast<std::size_t>(n - 1) * stride + static_cast<std::size_t>(howmany - 1) * dist + 1;
  fftw_complex* buf = fftw_alloc_complex(span);
  fftw_plan p = fftw_plan_many_dft(1, &n, howmany, buf, nullptr, stride, dist, buf, nullptr, stride, dist,
                                   sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD, FFTW_ESTIMATE | FFTW_UNALIGNED);
  fftw_free(buf);
  cache.emplace(key, p);
  return p;
}

void check(const std::vector<cd>& data, const std::vector<int>& dims) {
  std::size_t total = 1;
  for (int d : dims) {
    if (d <= 0) throw InputError("fft: non-positive dimension");
    total *= static_cast<std::size_t>(d);
  }
  if (total != data.size()) throw InputError("fft: data length does not match dims");
}

// Multiply by prod over axes of s(axis, index).
template <class F>
void apply_axis_signs(std::vector<cd>& data, const std::vector<int>& dims, F sign_of) {
  const std::size_t total = data.size();
  std::vector<int> idx(dims.size(), 0);
  for (std::size_t k = 0; k < total; ++k) {
    int s = 1;
    for (std::size_t a = 0; a < dims.size(); ++a) s *= sign_of(dims[a], idx[a]);
    if (s < 0) data[k] = -data[k];
    for (int a = static_cast<int>(dims.size()) - 1; a >= 0; --a) {
      if (++idx[a] < dims[a]) break;
      idx[a] = 0;
    }
  }
}

}  // namespace

void dft_axis(std::vector<cd>& data, const std::vector<int>& dims, int axis, int sign) {
  check(data, dims);
  if (axis < 0 || axis >= static_cast<int>(dims.size())) throw InputError("fft: bad axis");
  int outer = 1, inner = 1;
  for (int a = 0; a < axis; ++a) outer *= dims[a];
  for (int a = axis + 1; a < static_cast<int>(dims.size()); ++a) inner *= dims[a];
  const int n = dims[axis];
  fftw_plan p = plan_for(n, inner, inner, 1, sign);
  auto* base = reinterpret_cast<fftw_complex*>(data.data());
  for (int o = 0; o < outer; ++o) {
    fftw_complex* ptr = base + static_cast<std::size_t>(o) * n * inner;
    fftw_execute_dft(p, ptr, ptr);
  }
}

void dft(std::vector<cd>& data, const std::vector<int>& dims, int sign) {
  for (int a = 0; a < static_cast<int>(dims.size()); ++a) dft_axis(data, dims, a, sign);
}

void centered_forward(std::vector<cd>& data, const std::vector<int>& dims) {
  check(data, dims);
  apply_axis_signs(data, dims, [](int, int k) { return (k % 2) ? -1 : 1; });
  dft(data, dims, -1);
  apply_axis_signs(data, dims, [](int n, int m) { return ((m - n / 2) % 2) ? -1 : 1; });
}

void centered_inverse(std::vector<cd>& data, const std::vector<int>& dims) {
  check(data, dims);
  apply_axis_signs(data, dims, [](int n, int m) { return ((m - n / 2) % 2) ? -1 : 1; });
  dft(data, dims, +1);
  apply_axis_signs(data, dims, [](int, int k) { return (k % 2) ? -1 : 1; });
}

}  // namespace weylscope::fft
