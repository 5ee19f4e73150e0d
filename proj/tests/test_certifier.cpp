#include "doctest.h"

#include <random>

#include "mbasis/certifier.hpp"
#include "mbasis/errors.hpp"
#include "mbasis/io.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace mbasis;

namespace {

const FieldSpec kQ = FieldSpec::rational();
const FieldSpec kF2 = FieldSpec::prime(2);

Vector v(const FieldSpec& f, std::initializer_list<long> xs) {
  Vector out;
  for (long x : xs) out.push_back(f.from_int(x));
  return out;
}

BasisCandidate basis(const FieldSpec& f, std::vector<Vector> vs) {
  const std::size_t n = vs.size();
  return BasisCandidate::make(f, n, std::move(vs));
}

BasisCandidate delta_basis(const StructureAlgebra& a) {
  std::vector<Vector> vs;
  for (std::size_t i = 0; i < a.dim(); ++i) vs.push_back(unit_vector(a.field(), a.dim(), i));
  return BasisCandidate::make(a.field(), a.dim(), std::move(vs));
}

StructureAlgebra gf4() {
  const std::uint32_t mod[] = {1, 1, 1};
  return finite_field_extension(2, 2, mod);
}

std::vector<std::vector<std::uint64_t>> codes(const std::vector<BasisCandidate>& found) {
  std::vector<std::vector<std::uint64_t>> out;
  for (const auto& h : found) {
    std::vector<std::uint64_t> c;
    for (const auto& x : h.vectors()) c.push_back(encode(x));
    out.push_back(std::move(c));
  }
  return out;
}

} // namespace

TEST_CASE("BasisCandidate canonical form") {
  const auto h = basis(kF2, {v(kF2, {1, 1, 1}), v(kF2, {1, 0, 0}), v(kF2, {1, 1, 0})});
  CHECK(h.vectors() == std::vector<Vector>{v(kF2, {1, 0, 0}), v(kF2, {1, 1, 0}), v(kF2, {1, 1, 1})});
  // encoding order puts (0,1) = 2 after (1,0) = 1 even though it is lexicographically smaller
  const auto g = basis(kF2, {v(kF2, {0, 1}), v(kF2, {1, 0})});
  CHECK(g.vectors().front() == v(kF2, {1, 0}));
  const auto q = basis(kQ, {v(kQ, {1, 0}), v(kQ, {-1, 5})});
  CHECK(q.vectors().front() == v(kQ, {-1, 5}));

  CHECK_THROWS_AS(basis(kF2, {v(kF2, {1, 0}), v(kF2, {1, 0})}), InvalidInput);
  CHECK_THROWS_AS(basis(kF2, {v(kF2, {1, 0}), v(kF2, {0, 0})}), InvalidInput);
  CHECK_THROWS_AS(BasisCandidate::make(kF2, 3, {v(kF2, {1, 0})}), InvalidInput);
}

TEST_CASE("is_basis") {
  const auto p2 = product_algebra(2, kF2);
  CHECK(is_basis(p2, delta_basis(p2)));
  CHECK_FALSE(is_basis(p2, std::vector<Vector>{v(kF2, {1, 0}), v(kF2, {1, 0})}));
  CHECK(is_basis(p2, std::vector<Vector>{v(kF2, {1, 0}), v(kF2, {1, 1})}));
  CHECK_FALSE(is_basis(product_algebra(2, kQ), std::vector<Vector>{v(kQ, {1, 2}), v(kQ, {-2, -4})}));
  CHECK_THROWS_AS(is_basis(p2, std::vector<Vector>{v(kF2, {1, 0})}), InvalidInput);
}

TEST_CASE("is_closed_under_multiplication") {
  const auto p3 = product_algebra(3, kQ);
  const auto tri = known_product_basis(3, kQ);
  CHECK_FALSE(is_closed_under_multiplication(p3, tri));
  CHECK(multiply(p3, v(kQ, {1, 1, 0}), v(kQ, {1, 0, 0})) == v(kQ, {1, 0, 0}));

  const auto bad = is_closed_under_multiplication(gf4(), basis(kF2, {v(kF2, {1, 0}), v(kF2, {0, 1})}));
  REQUIRE(bad);
  CHECK(bad->left == v(kF2, {0, 1}));
  CHECK(bad->right == v(kF2, {0, 1}));
  CHECK(bad->product == v(kF2, {1, 1}));

  // a zero product is a violation
  const auto z = zero_algebra(2, kF2);
  const auto zero_bad = is_closed_under_multiplication(z, delta_basis(z));
  REQUIRE(zero_bad);
  CHECK(is_zero(zero_bad->product));

  // a scalar multiple of a basis vector is not enough
  const auto q2 = product_algebra(2, kQ);
  CHECK(is_closed_under_multiplication(q2, basis(kQ, {v(kQ, {2, 0}), v(kQ, {0, 1})})));

  for (std::size_t m = 1; m <= 3; ++m) {
    for (const auto& s : testing::all_semigroups(m)) {
      const auto a = semigroup_algebra(s, kQ);
      CHECK_FALSE(is_closed_under_multiplication(a, delta_basis(a)));
    }
  }
}

TEST_CASE("coefficient_sum_functional") {
  const auto c3 = semigroup_algebra(cyclic_group(3), kQ);
  CHECK(coefficient_sum_functional(c3, delta_basis(c3)) == v(kQ, {1, 1, 1}));

  // a = 1, a + b = 1
  const auto p2 = product_algebra(2, kF2);
  CHECK(coefficient_sum_functional(p2, basis(kF2, {v(kF2, {1, 0}), v(kF2, {1, 1})})) == v(kF2, {1, 0}));

  const auto m2 = matrix_algebra(2, kQ);
  CHECK(coefficient_sum_functional(m2, delta_basis(m2)) == v(kQ, {1, 1, 1, 1}));

  // f(h) = 1 for each basis vector, over Q with a non-trivial basis
  const auto h = basis(kQ, {v(kQ, {2, 1}), v(kQ, {1, 3})});
  const auto f = coefficient_sum_functional(product_algebra(2, kQ), h);
  for (const auto& x : h.vectors()) CHECK(dot(f, x) == kQ.one());
  CHECK(f[0].to_string() == "2/5");
  CHECK(f[1].to_string() == "1/5");
}

TEST_CASE("verify_multiplicative") {
  const auto p3 = product_algebra(3, kQ);
  CHECK(verify_multiplicative(p3, coefficient_sum_functional(p3, known_product_basis(3, kQ))));
  CHECK_FALSE(verify_multiplicative(product_algebra(2, kF2), v(kF2, {1, 1})));
  CHECK(verify_multiplicative(product_algebra(2, kF2), v(kF2, {0, 0})));
  CHECK_THROWS_AS(verify_multiplicative(p3, v(kQ, {1})), InvalidInput);
}

TEST_CASE("kernel_ideal_certificate") {
  const auto p2 = product_algebra(2, kF2);
  const auto c = kernel_ideal_certificate(p2, v(kF2, {1, 0}));
  CHECK(c.subspace == span(kF2, 2, std::vector<Vector>{v(kF2, {0, 1})}));
  CHECK(c.codim == 1);
  CHECK(c.left_closed);
  CHECK(c.right_closed);
  CHECK(c.origin == IdealOrigin::functional_kernel);

  const auto c2 = semigroup_algebra(cyclic_group(2), kQ);
  CHECK(kernel_ideal_certificate(c2, v(kQ, {1, 1})).subspace == span(kQ, 2, std::vector<Vector>{v(kQ, {1, -1})}));

  const auto one = product_algebra(1, kQ);
  const auto k1 = kernel_ideal_certificate(one, v(kQ, {1}));
  CHECK(k1.subspace.dim() == 0);
  CHECK(k1.codim == 1);

  CHECK_THROWS_AS(kernel_ideal_certificate(p2, v(kF2, {0, 0})), InvalidInput);
  CHECK_THROWS_AS(kernel_ideal_certificate(p2, v(kF2, {1, 1})), InvalidInput);
}

TEST_CASE("search_multiplicative_basis examples") {
  const auto p2 = product_algebra(2, kF2);
  const auto first = search_multiplicative_basis(p2);
  REQUIRE(first.size() == 1);
  CHECK(first[0].vectors() == std::vector<Vector>{v(kF2, {1, 0}), v(kF2, {1, 1})});

  SearchOptions all;
  all.find_all = true;
  const auto every = search_multiplicative_basis(p2, all);
  REQUIRE(every.size() == 2);
  CHECK(every[1].vectors() == std::vector<Vector>{v(kF2, {0, 1}), v(kF2, {1, 1})});

  CHECK(search_multiplicative_basis(gf4(), all).empty());
  CHECK(search_multiplicative_basis(matrix_algebra(2, kF2), all).empty());

  CHECK_THROWS_AS(search_multiplicative_basis(product_algebra(2, kQ)), Unsupported);
  SearchOptions tight;
  tight.element_limit = 2;
  CHECK_THROWS_AS(search_multiplicative_basis(p2, tight), LimitExceeded);
  tight.element_limit = 3;
  CHECK_NOTHROW(search_multiplicative_basis(p2, tight));
}

TEST_CASE("search reaches bases whose members sit below a forced product") {
  // delta_0 * delta_0 = delta_2 is forced right after choosing delta_0, so a
  // rule that only allows free choices above max(S) never reaches delta_1.
  const SemigroupTable s({"a", "b", "c"}, {{2, 1, 0}, {1, 1, 1}, {0, 1, 2}});
  const auto a = semigroup_algebra(s, kF2);
  SearchOptions all;
  all.find_all = true;
  const auto found = codes(search_multiplicative_basis(a, all));
  CHECK(found == std::vector<std::vector<std::uint64_t>>{{1, 2, 4}, {2, 4, 7}, {3, 4, 6}});
  CHECK(found == oracle::naive_closed_bases(oracle::IntAlgebra::from(a)));
  CHECK(search_multiplicative_basis(a).front() == delta_basis(a));
}

TEST_CASE("search agrees with the naive subset oracle") {
  SearchOptions all;
  all.find_all = true;
  for (const auto& [p, max_dim] : {std::pair{2u, 4u}, std::pair{3u, 2u}, std::pair{5u, 2u}}) {
    for (const auto& named : testing::builtin_corpus(p, max_dim)) {
      CAPTURE(named.name);
      const auto expected = oracle::naive_closed_bases(oracle::IntAlgebra::from(named.algebra));
      const auto got = codes(search_multiplicative_basis(named.algebra, all));
      CHECK(got == expected);
      const auto first = search_multiplicative_basis(named.algebra);
      if (expected.empty()) {
        CHECK(first.empty());
      } else {
        REQUIRE(first.size() == 1);
        CHECK(codes(first).front() == expected.front());
      }
    }
  }
  for (std::size_t m = 2; m <= 3; ++m) {
    for (const auto& s : testing::all_semigroups(m)) {
      const auto a = semigroup_algebra(s, kF2);
      CHECK(codes(search_multiplicative_basis(a, all)) == oracle::naive_closed_bases(oracle::IntAlgebra::from(a)));
    }
  }
}

TEST_CASE("search output does not depend on thread count") {
  SearchOptions one, many;
  one.find_all = many.find_all = true;
  many.threads = 8;
  for (const auto& named : testing::builtin_corpus(2, 4)) {
    CAPTURE(named.name);
    CHECK(codes(search_multiplicative_basis(named.algebra, one)) == codes(search_multiplicative_basis(named.algebra, many)));
    SearchOptions first_many;
    first_many.threads = 8;
    CHECK(codes(search_multiplicative_basis(named.algebra)) == codes(search_multiplicative_basis(named.algebra, first_many)));
  }
}

TEST_CASE("known_product_basis") {
  CHECK(known_product_basis(1, kQ).vectors() == std::vector<Vector>{v(kQ, {1})});
  CHECK(known_product_basis(3, kF2).vectors() ==
        std::vector<Vector>{v(kF2, {1, 0, 0}), v(kF2, {1, 1, 0}), v(kF2, {1, 1, 1})});
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& f : {kQ, kF2}) {
      const auto a = product_algebra(n, f);
      CHECK_FALSE(is_closed_under_multiplication(a, known_product_basis(n, f)));
    }
  }
}

TEST_CASE("certify examples") {
  const auto f4 = certify(gf4());
  CHECK(f4.verdict == Verdict::no_basis_no_codim1);
  CHECK(f4.codim1_report.complete);
  CHECK_FALSE(f4.basis);

  const auto z = certify(zero_algebra(2, kF2));
  CHECK(z.verdict == Verdict::no_basis_but_codim1);
  CHECK(z.codim1_report.ideals.size() == 3);

  const auto c2 = certify(semigroup_algebra(cyclic_group(2), kF2));
  CHECK(c2.verdict == Verdict::basis_found_ideal_certified);
  REQUIRE(c2.basis);
  CHECK(c2.basis->vectors() == std::vector<Vector>{v(kF2, {1, 0}), v(kF2, {0, 1})});
  CHECK(*c2.functional == v(kF2, {1, 1}));
  CHECK(c2.kernel->subspace == span(kF2, 2, std::vector<Vector>{v(kF2, {1, 1})}));
  CHECK(c2.kernel->codim == 1);

  const auto h = certify(quaternion_algebra(kQ));
  CHECK(h.verdict == Verdict::search_skipped);
  CHECK_FALSE(h.codim1_report.complete);
  CHECK(h.codim1_report.ideals.empty());

  CertifyOptions supplied;
  supplied.supplied_basis = known_product_basis(4, kQ);
  const auto p4 = certify(product_algebra(4, kQ), supplied);
  CHECK(p4.verdict == Verdict::basis_found_ideal_certified);
  CHECK(*p4.functional == v(kQ, {1, 0, 0, 0}));
  CHECK(p4.kernel->codim == 1);

  supplied.supplied_basis = basis(kF2, {v(kF2, {1, 0}), v(kF2, {0, 1})});
  CHECK_THROWS_AS(certify(gf4(), supplied), InvalidInput);
  CHECK(certify(gf4()).algebra_digest == algebra_digest(gf4()));
}

TEST_CASE("certify refuses non-associative input unless allowed") {
  std::vector<Vector> table{v(kF2, {1, 0}), v(kF2, {1, 0}), v(kF2, {0, 0}), v(kF2, {0, 1})};
  const StructureAlgebra bad(kF2, 2, table);
  CHECK_THROWS_AS(certify(bad), InvalidInput);
  CertifyOptions opts;
  opts.allow_nonassociative = true;
  const auto cert = certify(bad, opts);
  CHECK(cert.verdict != Verdict::inconsistent);
}

TEST_CASE("theorem and proof pipeline over the corpus") {
  SearchOptions all;
  all.find_all = true;
  for (const auto& [p, max_dim] : {std::pair{2u, 4u}, std::pair{3u, 3u}}) {
    for (const auto& named : testing::builtin_corpus(p, max_dim)) {
      CAPTURE(named.name);
      const auto& a = named.algebra;
      const auto found = search_multiplicative_basis(a, all);
      const auto report = enumerate_codim1_ideals(a);
      if (!found.empty()) {
        CHECK(report.complete);
        CHECK_FALSE(report.ideals.empty());
      }
      for (const auto& h : found) {
        for (const auto& x : h.vectors())
          for (const auto& y : h.vectors()) CHECK_FALSE(is_zero(multiply(a, x, y)));
        const auto f = coefficient_sum_functional(a, h);
        CHECK(verify_multiplicative(a, f));
        const auto cert = kernel_ideal_certificate(a, f);
        CHECK(cert.codim == 1);
        CHECK(is_ideal(a, cert.subspace).two_sided());
        if (a.dim() >= 2) {
          const auto diff = sub(h.vectors()[0], h.vectors()[1]);
          CHECK(dot(f, diff).is_zero());
          CHECK(member(cert.subspace, diff));
          CHECK(cert.subspace.dim() >= 1);
        }
      }
      CHECK(certify(a).verdict != Verdict::inconsistent);
    }
  }
}
