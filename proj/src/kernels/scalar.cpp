#include "pdslab/kernels.hpp"

namespace pdslab::kernels::scalar {

void translate_indices(const DigitPlanes& elems, std::span<const std::uint8_t> shift,
                       std::span<const std::uint32_t> place, std::span<std::uint32_t> out) {
  const std::size_t n = elems.size();
  const std::uint32_t p = elems.p();
  for (std::size_t j = 0; j < n; ++j) out[j] = 0;
  for (std::uint32_t i = 0; i < elems.dim(); ++i) {
    const std::uint8_t* d = elems.plane(i);
    const std::uint32_t s = shift[i];
    const std::uint32_t w = place[i];
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint32_t diff = d[j] >= s ? d[j] - s : d[j] + p - s;
      out[j] += diff * w;
    }
  }
}

void dot_mod_p(const DigitPlanes& elems, std::span<const std::uint8_t> coeff,
               std::span<const std::uint8_t> offset, std::span<std::uint8_t> out) {
  const std::size_t n = elems.size();
  const std::uint32_t p = elems.p();
  for (std::size_t j = 0; j < n; ++j) out[j] = offset.empty() ? 0 : offset[j];
  for (std::uint32_t i = 0; i < elems.dim(); ++i) {
    const std::uint32_t c = coeff[i];
    if (c == 0) continue;
    const std::uint8_t* d = elems.plane(i);
    for (std::size_t j = 0; j < n; ++j)
      out[j] = static_cast<std::uint8_t>((out[j] + c * d[j]) % p);
  }
}

}  // namespace pdslab::kernels::scalar
