#include <immintrin.h>

#include <algorithm>
#include <array>
#include <cstring>

#include "pdslab/kernels.hpp"

namespace pdslab::kernels::avx2 {

namespace {

// (d - s) mod p on 32 byte lanes; valid for p <= 127 and d, s < p.
inline __m256i sub_mod(__m256i d, __m256i s, __m256i pv) {
  const __m256i diff = _mm256_sub_epi8(d, s);
  return _mm256_min_epu8(diff, _mm256_add_epi8(diff, pv));
}

// a mod p for a < 2p.
inline __m256i reduce_once(__m256i a, __m256i pv) { return _mm256_min_epu8(a, _mm256_sub_epi8(a, pv)); }

}  // namespace

void translate_indices(const DigitPlanes& elems, std::span<const std::uint8_t> shift,
                       std::span<const std::uint32_t> place, std::span<std::uint32_t> out) {
  const std::size_t n = elems.size();
  const __m256i pv = _mm256_set1_epi8(static_cast<char>(elems.p()));
  alignas(32) std::array<std::uint32_t, kLaneBlock> tail{};

  for (std::size_t base = 0; base < n; base += kLaneBlock) {
    __m256i acc0 = _mm256_setzero_si256();
    __m256i acc1 = _mm256_setzero_si256();
    __m256i acc2 = _mm256_setzero_si256();
    __m256i acc3 = _mm256_setzero_si256();
    for (std::uint32_t i = 0; i < elems.dim(); ++i) {
      const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(elems.plane(i) + base));
      const __m256i r = sub_mod(d, _mm256_set1_epi8(static_cast<char>(shift[i])), pv);
      const __m256i w = _mm256_set1_epi32(static_cast<int>(place[i]));
      const __m128i lo = _mm256_castsi256_si128(r);
      const __m128i hi = _mm256_extracti128_si256(r, 1);
      acc0 = _mm256_add_epi32(acc0, _mm256_mullo_epi32(_mm256_cvtepu8_epi32(lo), w));
      acc1 = _mm256_add_epi32(acc1, _mm256_mullo_epi32(_mm256_cvtepu8_epi32(_mm_srli_si128(lo, 8)), w));
      acc2 = _mm256_add_epi32(acc2, _mm256_mullo_epi32(_mm256_cvtepu8_epi32(hi), w));
      acc3 = _mm256_add_epi32(acc3, _mm256_mullo_epi32(_mm256_cvtepu8_epi32(_mm_srli_si128(hi, 8)), w));
    }
    const bool full = base + kLaneBlock <= n;
    std::uint32_t* dst = full ? out.data() + base : tail.data();
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst), acc0);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + 8), acc1);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + 16), acc2);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + 24), acc3);
    if (!full) std::copy_n(tail.data(), n - base, out.data() + base);
  }
}

void dot_mod_p(const DigitPlanes& elems, std::span<const std::uint8_t> coeff,
               std::span<const std::uint8_t> offset, std::span<std::uint8_t> out) {
  const std::uint32_t p = elems.p();
  // Products are looked up with a 16-entry byte shuffle, so digits must be < 16.
  if (p > 16) {
    scalar::dot_mod_p(elems, coeff, offset, out);
    return;
  }
  const std::size_t n = elems.size();
  const __m256i pv = _mm256_set1_epi8(static_cast<char>(p));
  alignas(32) std::array<std::uint8_t, kLaneBlock> buf{};

  std::vector<std::array<std::uint8_t, 16>> luts;
  std::vector<std::uint32_t> active;
  for (std::uint32_t i = 0; i < elems.dim(); ++i) {
    if (coeff[i] == 0) continue;
    std::array<std::uint8_t, 16> t{};
    for (std::uint32_t d = 0; d < p; ++d) t[d] = static_cast<std::uint8_t>(coeff[i] * d % p);
    luts.push_back(t);
    active.push_back(i);
  }

  for (std::size_t base = 0; base < n; base += kLaneBlock) {
    const bool full = base + kLaneBlock <= n;
    __m256i acc;
    if (offset.empty()) {
      acc = _mm256_setzero_si256();
    } else if (full) {
      acc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(offset.data() + base));
    } else {
      buf.fill(0);
      std::memcpy(buf.data(), offset.data() + base, n - base);
      acc = _mm256_load_si256(reinterpret_cast<const __m256i*>(buf.data()));
    }
    for (std::size_t a = 0; a < active.size(); ++a) {
      const __m256i lut =
          _mm256_broadcastsi128_si256(_mm_loadu_si128(reinterpret_cast<const __m128i*>(luts[a].data())));
      const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(elems.plane(active[a]) + base));
      acc = reduce_once(_mm256_add_epi8(acc, _mm256_shuffle_epi8(lut, d)), pv);
    }
    if (full) {
      _mm256_storeu_si256(reinterpret_cast<__m256i*>(out.data() + base), acc);
    } else {
      _mm256_store_si256(reinterpret_cast<__m256i*>(buf.data()), acc);
      std::memcpy(out.data() + base, buf.data(), n - base);
    }
  }
}

}  // namespace pdslab::kernels::avx2
