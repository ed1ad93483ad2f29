#pragma once

// Data-parallel inner loops over elements of an elementary abelian p-group
// F_p^N. Elements are held as digit planes (structure of arrays): plane i
// holds coordinate i of every element, one byte per element, padded with
// zeros to a multiple of kLaneBlock.
//
// Every kernel has a scalar reference and, on x86-64, an AVX2 variant chosen
// at runtime. The two must agree bit-for-bit.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace pdslab::kernels {

inline constexpr std::size_t kLaneBlock = 32;
inline constexpr std::uint32_t kMaxDigitPrime = 127;

class DigitPlanes {
public:
  DigitPlanes() = default;
  DigitPlanes(std::uint32_t p, std::uint32_t dim, std::size_t count);

  std::uint32_t p() const { return p_; }
  std::uint32_t dim() const { return dim_; }
  std::size_t size() const { return count_; }
  std::size_t stride() const { return stride_; }

  std::uint8_t* plane(std::uint32_t i) { return data_.data() + i * stride_; }
  const std::uint8_t* plane(std::uint32_t i) const { return data_.data() + i * stride_; }

private:
  std::uint32_t p_ = 2;
  std::uint32_t dim_ = 0;
  std::size_t count_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint8_t> data_;
};

enum class Backend { Scalar, Avx2 };

std::string_view backend_name(Backend b);
bool backend_available(Backend b);
Backend active_backend();
// Throws InvalidArgument if the backend is not compiled in or the CPU lacks it.
void set_backend(Backend b);
Backend best_backend();

// out[j] = index of (elem_j - shift), where index = sum_i digit_i * place[i].
// shift has dim digits in [0, p); out has at least elems.size() entries.
void translate_indices(const DigitPlanes& elems, std::span<const std::uint8_t> shift,
                       std::span<const std::uint32_t> place, std::span<std::uint32_t> out);

// out[j] = (offset[j] + sum_i coeff[i] * digit_i(elem_j)) mod p.
// offset may be empty (treated as zero); entries must be < p.
void dot_mod_p(const DigitPlanes& elems, std::span<const std::uint8_t> coeff,
               std::span<const std::uint8_t> offset, std::span<std::uint8_t> out);

// Direct backend entry points, for equivalence tests and benchmarks.
namespace scalar {
void translate_indices(const DigitPlanes&, std::span<const std::uint8_t>, std::span<const std::uint32_t>,
                       std::span<std::uint32_t>);
void dot_mod_p(const DigitPlanes&, std::span<const std::uint8_t>, std::span<const std::uint8_t>,
               std::span<std::uint8_t>);
}  // namespace scalar

namespace avx2 {
void translate_indices(const DigitPlanes&, std::span<const std::uint8_t>, std::span<const std::uint32_t>,
                       std::span<std::uint32_t>);
void dot_mod_p(const DigitPlanes&, std::span<const std::uint8_t>, std::span<const std::uint8_t>,
               std::span<std::uint8_t>);
}  // namespace avx2

}  // namespace pdslab::kernels
