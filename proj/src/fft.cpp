#include "modlab/fft.hpp"

#include <cmath>
#include <numbers>

namespace modlab {

void fft(std::vector<std::complex<double>>& a, bool inverse) {
  const size_t n = a.size();
  if (n < 2) return;
  for (size_t i = 1, j = 0; i < n; ++i) {
    size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (size_t len = 2; len <= n; len <<= 1) {
    const double ang =
        (inverse ? 2.0 : -2.0) * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> wl(std::cos(ang), std::sin(ang));
    for (size_t i = 0; i < n; i += len) {
      std::complex<double> w(1.0, 0.0);
      for (size_t k = 0; k < len / 2; ++k) {
        auto u = a[i + k];
        auto v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
        w *= wl;
      }
    }
  }
  if (inverse)
    for (auto& x : a) x /= static_cast<double>(n);
}

std::vector<std::complex<double>> fft_convolve(
    const std::vector<std::complex<double>>& a,
    const std::vector<std::complex<double>>& b) {
  if (a.empty() || b.empty()) return {};
  const size_t need = a.size() + b.size() - 1;
  size_t n = 1;
  while (n < need) n <<= 1;
  std::vector<std::complex<double>> fa(a), fb(b);
  fa.resize(n);
  fb.resize(n);
  fft(fa, false);
  fft(fb, false);
  for (size_t i = 0; i < n; ++i) fa[i] *= fb[i];
  fft(fa, true);
  fa.resize(need);
  return fa;
}

std::vector<std::complex<double>> czt(const std::vector<std::complex<double>>& x,
                                      double w, size_t K) {
  using cplx = std::complex<double>;
  const size_t n = x.size();
  if (n == 0 || K == 0) return std::vector<cplx>(K, cplx(0, 0));
  // e^{-iwjk} = e^{-iw j^2/2} e^{-iw k^2/2} e^{iw (k-j)^2/2}
  std::vector<cplx> a(n);
  for (size_t j = 0; j < n; ++j) {
    const double ph = -0.5 * w * static_cast<double>(j) * static_cast<double>(j);
    a[j] = x[j] * cplx(std::cos(ph), std::sin(ph));
  }
  // kernel index p = (k - j) + (n - 1) runs over 0..n+K-2
  std::vector<cplx> b(n + K - 1);
  for (size_t p = 0; p < b.size(); ++p) {
    const double l = static_cast<double>(p) - static_cast<double>(n - 1);
    const double ph = 0.5 * w * l * l;
    b[p] = cplx(std::cos(ph), std::sin(ph));
  }
  auto conv = fft_convolve(a, b);
  std::vector<cplx> out(K);
  for (size_t k = 0; k < K; ++k) {
    const double ph = -0.5 * w * static_cast<double>(k) * static_cast<double>(k);
    out[k] = conv[k + n - 1] * cplx(std::cos(ph), std::sin(ph));
  }
  return out;
}

}  // namespace modlab
