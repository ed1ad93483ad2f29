#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "pdslab/error.hpp"
#include "pdslab/pds.hpp"
#include "support.hpp"

using namespace pdslab;

namespace {

PdsParams params(std::int64_t v, std::int64_t k, std::int64_t l, std::int64_t m) {
  PdsParams p;
  p.v = v;
  p.k = k;
  p.lambda = l;
  p.mu = m;
  return p;
}

GroupSubset clebsch() { return construct_cyclotomic_pds(2, 3, 1, 1, FormKind::Elliptic, 0).set; }

}  // namespace

TEST_SUITE("pds") {
  TEST_CASE("Latin type classification") {
    const auto a = classify_latin_type(params(16, 5, 0, 2));
    REQUIRE(a.has_value());
    CHECK(*a == LatinType{-1, 4, 1});
    CHECK(classify_latin_type(params(16, 6, 2, 2)) == LatinType{1, 4, 2});
    CHECK_FALSE(classify_latin_type(params(15, 8, 4, 4)).has_value());
    for (int eps : {1, -1})
      for (std::int64_t N = 2; N <= 12; ++N)
        for (std::int64_t R = 1; R < N; ++R) {
          const auto prm = latin_params(eps, N, R);
          CHECK(prm.counting_identity());
          CHECK(prm.srg_feasible());
        }
  }

  TEST_CASE("brute force: Clebsch parameters and the empty set") {
    const auto r = verify_pds_bruteforce(clebsch());
    REQUIRE(r.ok);
    CHECK(r.params.same_parameters(params(16, 5, 0, 2)));
    CHECK(r.params.latin == LatinType{-1, 4, 1});
    CHECK(oracle::pds_lambda_mu(clebsch()) == std::make_pair<std::int64_t, std::int64_t>(0, 2));

    const auto G = ElementaryAbelianGroup::vector_space(FiniteField(2, 2), 2);
    const auto e = verify_pds_bruteforce(GroupSubset(G, {}));
    CHECK(e.ok);
    CHECK(e.degenerate);
    CHECK(e.params.same_parameters(params(16, 0, 0, 0)));
  }

  TEST_CASE("brute force rejects random size-5 symmetric sets with a witness") {
    const auto G = ElementaryAbelianGroup::vector_space(FiniteField(2, 1), 4);
    std::mt19937_64 rng(17);
    int failures = 0, trials = 0;
    for (int it = 0; it < 40; ++it) {
      std::vector<std::uint32_t> pool(15);
      std::iota(pool.begin(), pool.end(), 1u);
      std::shuffle(pool.begin(), pool.end(), rng);
      const GroupSubset d(G, std::vector<std::uint32_t>(pool.begin(), pool.begin() + 5));
      const auto r = verify_pds_bruteforce(d);
      const bool is_pds = oracle::pds_lambda_mu(d).has_value();
      CHECK(r.ok == is_pds);
      ++trials;
      if (!r.ok) {
        ++failures;
        REQUIRE(r.witness.has_value());
        const auto counts = oracle::difference_counts(d);
        CHECK(counts[*r.witness] == r.witness_count);
        CHECK(r.witness_count != r.expected_count);
      }
    }
    CHECK(failures > trials / 2);
  }

  TEST_CASE("brute force set-shape failures") {
    const auto G = ElementaryAbelianGroup::vector_space(FiniteField(3, 1), 2);
    const auto r0 = verify_pds_bruteforce(GroupSubset(G, {0, 1, 2}));
    CHECK(r0.failure == PdsFailure::ContainsIdentity);
    const auto r1 = verify_pds_bruteforce(GroupSubset(G, {1}));
    CHECK(r1.failure == PdsFailure::Asymmetric);
    CHECK(r1.witness == 1u);
  }

  TEST_CASE("character certifier: stated parameters") {
    const auto c = verify_pds_characters(clebsch(), params(16, 5, 0, 2));
    CHECK(c.ok);
    CHECK(c.eigenvalues == std::vector<std::int64_t>{1, -3});
    const auto h = construct_cyclotomic_pds(2, 3, 1, 1, FormKind::Hyperbolic, 0);
    CHECK(h.predicted.same_parameters(params(16, 3, 2, 0)));
    const auto ch = verify_pds_characters(h.set, h.predicted);
    CHECK(ch.ok);
    CHECK(ch.eigenvalues == std::vector<std::int64_t>{3, -1});
    // Wrong but admissible parameters fail on a character.
    const auto wrong = verify_pds_characters(clebsch(), params(16, 6, 2, 2));
    CHECK_FALSE(wrong.ok);
    CHECK_THROWS_AS(verify_pds_characters(clebsch(), params(16, 5, 1, 2)), InvalidArgument);
    // (13, 6, 2, 3): Delta = (lambda - mu)^2 + 4 (k - mu) = 13 is not a square.
    CHECK_THROWS_AS(verify_pds_characters(clebsch(), params(13, 6, 2, 3)), InvalidArgument);
  }

  TEST_CASE("character values: principal value is |D| and kernel path equals the naive sum") {
    const auto d = construct_cyclotomic_pds(3, 4, 1, 1, FormKind::Elliptic, 1).set;
    const auto chi = character_values(d);
    CHECK(chi[0] == CycInt::integer(3, static_cast<std::int64_t>(d.size())));
    for (std::uint32_t b = 0; b < d.group->order(); b += 5) CHECK(chi[b] == oracle::character_sum(d, b));
  }

  TEST_CASE("affine polar and RT2 examples") {
    const FiniteField F3(3, 1), F5(5, 1), F4(2, 2);
    struct Case {
      Construction c;
      PdsParams expect;
    };
    std::vector<Case> cases = {
        {construct_affine_polar(F3, 1, FormKind::Hyperbolic), params(9, 2, 1, 0)},
        {construct_affine_polar(F3, 1, FormKind::Elliptic), params(9, 4, 1, 2)},
        {construct_affine_polar(F5, 1, FormKind::Elliptic), params(25, 12, 5, 6)},
        {construct_rt2(QuadraticForm::standard(F4, 1, FormKind::Hyperbolic)), params(16, 6, 2, 2)},
        {construct_rt2(QuadraticForm::standard(F3, 2, FormKind::Hyperbolic)), params(81, 32, 13, 12)},
        {construct_rt2(QuadraticForm::standard(F3, 2, FormKind::Elliptic)), params(81, 20, 1, 6)},
    };
    for (const auto& cs : cases) {
      CHECK(cs.c.predicted.same_parameters(cs.expect));
      const auto r = verify_pds_bruteforce(cs.c.set);
      REQUIRE(r.ok);
      CHECK(r.params.same_parameters(cs.expect));
    }
    const auto empty = construct_rt2(QuadraticForm::standard(F4, 1, FormKind::Elliptic));
    CHECK(empty.set.size() == 0);
    CHECK(verify_pds_bruteforce(empty.set).degenerate);
    CHECK_THROWS_AS(construct_affine_polar(F4, 1, FormKind::Hyperbolic), InvalidArgument);
  }

  TEST_CASE("cyclotomic construction: parameters, sizes, and the two character values") {
    for (auto [p, e, m] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>>{
             {2, 3, 1}, {3, 4, 1}, {2, 5, 1}, {5, 3, 1}, {3, 2, 1}, {2, 3, 2}}) {
      for (auto kind : {FormKind::Hyperbolic, FormKind::Elliptic}) {
        const CyclotomicSetup setup(p, e, 1, m, kind);
        const auto q = static_cast<std::int64_t>(setup.q());
        const auto f = static_cast<std::int64_t>(setup.f());
        const std::int64_t eps = setup.epsilon();
        const auto qm1 = static_cast<std::int64_t>(ipow(q, m - 1));
        const auto zero = setup.zero_set();
        CHECK(static_cast<std::int64_t>(zero.size()) == static_cast<std::int64_t>(ipow(q, 2 * m - 1)) + eps * qm1 * (q - 1));
        for (std::uint32_t i = 0; i < e; ++i) {
          const auto c = construct_cyclotomic_pds(p, e, 1, m, kind, i);
          const auto r = verify_pds_bruteforce(c.set);
          REQUIRE(r.ok);
          CHECK(r.params.same_parameters(c.predicted));
          const std::set<std::int64_t> allowed{eps * qm1 * (q - f), -eps * qm1 * f};
          const auto chi = character_values(c.set);
          for (std::uint32_t b = 1; b < chi.size(); ++b) {
            const auto v = chi[b].as_integer();
            REQUIRE(v.has_value());
            CHECK(allowed.count(*v) == 1);
          }
        }
      }
    }
    CHECK_THROWS_AS(construct_cyclotomic_pds(7, 3, 1, 1, FormKind::Hyperbolic, 0), InvalidArgument);
    CHECK_THROWS_AS(construct_cyclotomic_pds(2, 3, 1, 1, FormKind::Hyperbolic, 3), InvalidArgument);
  }

  TEST_CASE("scaling Q permutes the classes") {
    for (auto [p, e] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {3, 4}, {2, 5}}) {
      const CyclotomicSetup setup(p, e, 1, 1, FormKind::Elliptic);
      std::vector<GroupSubset> family;
      for (std::uint32_t i = 0; i < e; ++i) family.push_back(setup.class_set(i));
      for (std::uint32_t t = 0; t + 1 < setup.q(); ++t) {
        const FieldElem alpha = setup.field().exp_g(t);
        for (std::uint32_t i = 0; i < e; ++i) {
          const auto s = setup.scaled_class_set(alpha, i);
          const auto it = std::find_if(family.begin(), family.end(), [&](const GroupSubset& c) { return c.members == s.members; });
          CHECK(it != family.end());
          CHECK(static_cast<std::uint32_t>(it - family.begin()) == (i + e - t % e) % e);
        }
      }
    }
  }

  TEST_CASE("the two certifiers agree on perturbations") {
    std::vector<GroupSubset> seeds = {clebsch(), construct_cyclotomic_pds(3, 4, 1, 1, FormKind::Hyperbolic, 2).set,
                                      construct_affine_polar(FiniteField(5, 1), 1, FormKind::Elliptic).set};
    int agree = 0, failing = 0;
    for (const auto& d : seeds)
      for (std::uint64_t s = 0; s < 30; ++s) {
        const auto x = random_perturbation(d, s);
        CHECK_FALSE(x.asymmetry_witness().has_value());
        CHECK_FALSE(x.contains(0));
        const auto bf = verify_pds_bruteforce(x);
        const auto ch = verify_pds_characters(x);
        CHECK(bf.ok == ch.ok);
        if (bf.ok && ch.ok) CHECK(bf.params.same_parameters(ch.params));
        agree += bf.ok == ch.ok;
        failing += !bf.ok;
      }
    CHECK(agree == 90);
    CHECK(failing > 60);
  }

  TEST_CASE("swap perturbation keeps the size and breaks the Clebsch set") {
    for (std::uint64_t s = 0; s < 20; ++s) {
      const auto x = swap_perturbation(clebsch(), s);
      CHECK(x.size() == 5);
      CHECK_FALSE(verify_pds_bruteforce(x).ok);
    }
  }

  TEST_CASE("bent sets from quadratic forms") {
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 2}, {5, 2}}) {
      const FiniteField F(p, n);
      for (FieldElem scale : {F.one(), F.generator()}) {
        const auto b = construct_bent_pds(PAryFunction::trace_quadratic(F, scale));
        CHECK(b.certificate.all_pass());
        for (const auto* s : {&b.d0_minus, &b.d_r, &b.d_n}) {
          const auto r = verify_pds_bruteforce(*s);
          REQUIRE(r.ok);
          CHECK(oracle::pds_lambda_mu(*s).has_value());
          if (s->size() > 0) CHECK(r.params.latin.has_value());
        }
        // Character values of D_R are the predicted pair.
        const auto chi = character_values(b.d_r);
        for (std::uint32_t x = 1; x < chi.size(); ++x) {
          const auto v = chi[x].as_integer();
          REQUIRE(v.has_value());
          CHECK(std::count(b.certificate.predicted_eigenvalues.begin(), b.certificate.predicted_eigenvalues.end(), *v) == 1);
        }
      }
    }
    const FiniteField F27(3, 3);
    CHECK_THROWS_AS(construct_bent_pds(PAryFunction::trace_quadratic(F27, F27.one())), InvalidArgument);
  }

  TEST_CASE("Cayley graph exports") {
    const auto d = clebsch();
    const auto edges = cayley_edge_list(d);
    std::istringstream in(edges);
    std::uint32_t u, v;
    std::size_t count = 0;
    while (in >> u >> v) {
      CHECK(u < v);
      CHECK(d.contains(d.group->sub(v, u)));
      ++count;
    }
    CHECK(count == 16 * 5 / 2);
    const auto csv = cayley_adjacency_csv(d);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 16);
    CHECK(std::count(csv.begin(), csv.end(), '1') == 16 * 5);
  }
}
