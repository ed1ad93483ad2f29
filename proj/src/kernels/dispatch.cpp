#include <algorithm>
#include <atomic>
#include <string>

#include "pdslab/error.hpp"
#include "pdslab/kernels.hpp"

namespace pdslab::kernels {

DigitPlanes::DigitPlanes(std::uint32_t p, std::uint32_t dim, std::size_t count)
    : p_(p), dim_(dim), count_(count) {
  if (p < 2 || p > kMaxDigitPrime)
    throw InvalidArgument("digit kernels support 2 <= p <= " + std::to_string(kMaxDigitPrime) +
                          ", got p = " + std::to_string(p));
  stride_ = (count + kLaneBlock - 1) / kLaneBlock * kLaneBlock;
  if (stride_ == 0) stride_ = kLaneBlock;
  data_.assign(static_cast<std::size_t>(dim) * stride_, 0);
}

#if !defined(PDSLAB_HAVE_AVX2)
namespace avx2 {
void translate_indices(const DigitPlanes&, std::span<const std::uint8_t>, std::span<const std::uint32_t>,
                       std::span<std::uint32_t>) {
  throw InvalidArgument("AVX2 backend not compiled in");
}
void dot_mod_p(const DigitPlanes&, std::span<const std::uint8_t>, std::span<const std::uint8_t>,
               std::span<std::uint8_t>) {
  throw InvalidArgument("AVX2 backend not compiled in");
}
}  // namespace avx2
#endif

namespace {

bool cpu_has_avx2() {
#if defined(PDSLAB_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{best_backend()};
  return backend;
}

void check_spans(const DigitPlanes& elems, std::size_t digits, std::size_t out) {
  if (digits < elems.dim()) throw InvalidArgument("digit vector shorter than group dimension");
  if (out < elems.size()) throw InvalidArgument("output span shorter than element count");
}

}  // namespace

std::string_view backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

bool backend_available(Backend b) { return b == Backend::Scalar || cpu_has_avx2(); }

Backend best_backend() { return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar; }

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (!backend_available(b))
    throw InvalidArgument("kernel backend '" + std::string(backend_name(b)) + "' is not available on this machine");
  current().store(b, std::memory_order_relaxed);
}

void translate_indices(const DigitPlanes& elems, std::span<const std::uint8_t> shift,
                       std::span<const std::uint32_t> place, std::span<std::uint32_t> out) {
  check_spans(elems, std::min(shift.size(), place.size()), out.size());
  if (active_backend() == Backend::Avx2) avx2::translate_indices(elems, shift, place, out);
  else scalar::translate_indices(elems, shift, place, out);
}

void dot_mod_p(const DigitPlanes& elems, std::span<const std::uint8_t> coeff,
               std::span<const std::uint8_t> offset, std::span<std::uint8_t> out) {
  check_spans(elems, coeff.size(), out.size());
  if (!offset.empty() && offset.size() < elems.size()) throw InvalidArgument("offset span too short");
  if (active_backend() == Backend::Avx2) avx2::dot_mod_p(elems, coeff, offset, out);
  else scalar::dot_mod_p(elems, coeff, offset, out);
}

}  // namespace pdslab::kernels
