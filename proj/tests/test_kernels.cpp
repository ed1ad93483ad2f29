#include <doctest.h>

#include <random>

#include "pdslab/error.hpp"
#include "pdslab/group.hpp"
#include "pdslab/kernels.hpp"
#include "pdslab/pds.hpp"

using namespace pdslab;
using namespace pdslab::kernels;

namespace {

struct Input {
  DigitPlanes planes;
  std::vector<std::vector<std::uint8_t>> elems;  // row-major copy for the reference
};

Input random_input(std::uint32_t p, std::uint32_t dim, std::size_t count, std::mt19937_64& rng) {
  Input in{DigitPlanes(p, dim, count), std::vector<std::vector<std::uint8_t>>(count, std::vector<std::uint8_t>(dim))};
  std::uniform_int_distribution<std::uint32_t> pick(0, p - 1);
  for (std::size_t j = 0; j < count; ++j)
    for (std::uint32_t i = 0; i < dim; ++i) {
      const auto d = static_cast<std::uint8_t>(pick(rng));
      in.planes.plane(i)[j] = d;
      in.elems[j][i] = d;
    }
  return in;
}

std::vector<std::uint8_t> random_digits(std::uint32_t p, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(0, p - 1);
  std::vector<std::uint8_t> v(n);
  for (auto& x : v) x = static_cast<std::uint8_t>(pick(rng));
  return v;
}

const std::vector<std::uint32_t> kPrimes = {2, 3, 5, 7, 11, 13, 17, 31, 127};
const std::vector<std::size_t> kCounts = {0, 1, 7, 31, 32, 33, 64, 100, 1000};

}  // namespace

TEST_SUITE("kernels") {
  TEST_CASE("scalar kernels match a row-major reference") {
    std::mt19937_64 rng(1);
    for (auto p : kPrimes)
      for (std::uint32_t dim : {1u, 3u, 4u})
        for (auto count : kCounts) {
          const auto in = random_input(p, dim, count, rng);
          const auto shift = random_digits(p, dim, rng), coeff = random_digits(p, dim, rng);
          const auto offset = random_digits(p, count, rng);
          std::vector<std::uint32_t> place(dim);
          for (std::uint32_t i = 0, w = 1; i < dim; ++i, w *= p) place[i] = w;
          std::vector<std::uint32_t> idx(count);
          std::vector<std::uint8_t> dot(count);
          scalar::translate_indices(in.planes, shift, place, idx);
          scalar::dot_mod_p(in.planes, coeff, offset, dot);
          for (std::size_t j = 0; j < count; ++j) {
            std::uint32_t e = 0, s = offset[j];
            for (std::uint32_t i = 0; i < dim; ++i) {
              e += (in.elems[j][i] + p - shift[i]) % p * place[i];
              s = (s + coeff[i] * in.elems[j][i]) % p;
            }
            CHECK(idx[j] == e);
            CHECK(dot[j] == s);
          }
        }
  }

  TEST_CASE("AVX2 kernels equal the scalar kernels bit for bit") {
    if (!backend_available(Backend::Avx2)) {
      MESSAGE("AVX2 not available; skipping equivalence");
      return;
    }
    std::mt19937_64 rng(2);
    for (auto p : kPrimes)
      for (std::uint32_t dim : {1u, 2u, 5u, 8u})
        for (auto count : kCounts) {
          const auto in = random_input(p, dim, count, rng);
          const auto shift = random_digits(p, dim, rng), coeff = random_digits(p, dim, rng);
          std::vector<std::uint32_t> place(dim);
          for (std::uint32_t i = 0; i < dim; ++i) place[i] = static_cast<std::uint32_t>(rng() % 100000);
          std::vector<std::uint32_t> a(count + 3, 7), b(count + 3, 7);
          scalar::translate_indices(in.planes, shift, place, a);
          avx2::translate_indices(in.planes, shift, place, b);
          CHECK(a == b);
          for (bool with_offset : {false, true}) {
            const auto offset = with_offset ? random_digits(p, count, rng) : std::vector<std::uint8_t>{};
            std::vector<std::uint8_t> x(count + 3, 9), y(count + 3, 9);
            scalar::dot_mod_p(in.planes, coeff, offset, x);
            avx2::dot_mod_p(in.planes, coeff, offset, y);
            CHECK(x == y);
          }
        }
  }

  TEST_CASE("certifiers give identical results under either backend") {
    const Backend saved = active_backend();
    std::vector<GroupSubset> sets = {construct_cyclotomic_pds(2, 3, 1, 1, FormKind::Elliptic, 0).set,
                                     construct_cyclotomic_pds(3, 4, 1, 1, FormKind::Hyperbolic, 1).set,
                                     random_perturbation(construct_affine_polar(FiniteField(5, 1), 2, FormKind::Elliptic).set, 3)};
    for (const auto& d : sets) {
      set_backend(Backend::Scalar);
      const auto bs = verify_pds_bruteforce(d);
      const auto cs = character_values(d);
      if (backend_available(Backend::Avx2)) {
        set_backend(Backend::Avx2);
        const auto ba = verify_pds_bruteforce(d);
        CHECK(ba.ok == bs.ok);
        CHECK(ba.params.same_parameters(bs.params));
        CHECK(ba.witness == bs.witness);
        CHECK(character_values(d) == cs);
      }
    }
    set_backend(saved);
  }

  TEST_CASE("backend selection") {
    CHECK(backend_available(Backend::Scalar));
    CHECK(backend_available(best_backend()));
    CHECK(backend_name(Backend::Scalar) == "scalar");
    CHECK(backend_name(Backend::Avx2) == "avx2");
    if (!backend_available(Backend::Avx2)) CHECK_THROWS_AS(set_backend(Backend::Avx2), InvalidArgument);
    CHECK_THROWS_AS(DigitPlanes(128, 1, 1), InvalidArgument);
  }
}
