#include "doctest.h"
#include "gen.hpp"
#include "strathom/linalg/poly.hpp"
#include "strathom/linalg/rref.hpp"
#include "strathom/linalg/subspace.hpp"

using namespace strathom;
using namespace strathom::linalg;

namespace {
const Field Q = Field::rationals();
const Field F2 = Field::prime(2);
}  // namespace

TEST_CASE("scalars stay canonical") {
  const Scalar a(Q, mpq_class(mpz_class(6), mpz_class(-4)));
  CHECK(a.rational().get_num() == -3);
  CHECK(a.rational().get_den() == 2);
  const Field f7 = Field::prime(7);
  CHECK(Scalar(f7, -1L).residue() == 6);
  CHECK((Scalar(f7, 3L) * Scalar(f7, 5L)).residue() == 1);
  CHECK_THROWS_AS(Scalar(f7, 1L) + Scalar(Q, 1L), Error);
  CHECK_THROWS_AS(Scalar(f7, 0L).inverse(), Error);
  CHECK_THROWS_AS(Field::prime(6), Error);
  CHECK(Field::parse("Fp:5") == Field::prime(5));
  CHECK(Scalar::parse(Q, "-2/5") == Scalar(Q, mpq_class(-2, 5)));
}

TEST_CASE("rref of the identity") {
  const auto r = rref(Matrix::identity(Q, 2));
  CHECK(r.reduced == Matrix::identity(Q, 2));
  CHECK(r.pivot_columns == std::vector<std::size_t>{0, 1});
}

TEST_CASE("rref of dependent rows") {
  const auto m = Matrix::from_ints(Q, {{1, 2}, {2, 4}});
  const auto r = rref(m);
  CHECK(r.rank() == 1);
  CHECK(r.pivot_columns == std::vector<std::size_t>{0});
  CHECK(r.transform * m == r.reduced);
}

TEST_CASE("rank over F2") { CHECK(rank(Matrix::from_ints(F2, {{1, 1}, {1, 2}})) == 2); }

TEST_CASE("kernels and solving") {
  const auto k = kernel_basis(Matrix::from_ints(Q, {{1, 1}}));
  REQUIRE(k.cols() == 1);
  CHECK(k(0, 0) == -k(1, 0));
  CHECK(!k(0, 0).is_zero());

  const auto m = Matrix::from_ints(Q, {{1, 2}, {2, 4}});
  const auto k2 = kernel_basis(m);
  REQUIRE(k2.cols() == 1);
  CHECK(k2(0, 0) == Scalar(Q, -2L) * k2(1, 0));

  const auto b = Matrix::from_ints(Q, {{3}, {-7}});
  const auto x = solve_linear(Matrix::identity(Q, 2), b);
  REQUIRE(x);
  CHECK(*x == b);
  CHECK(!solve_linear(m, Matrix::from_ints(Q, {{1}, {0}})));
  CHECK_THROWS_AS(solve_linear(m, Matrix::from_ints(Q, {{1}})), Error);
}

TEST_CASE("rref properties on random matrices") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<std::size_t> dim(0, 7);
  for (int trial = 0; trial < 200; ++trial) {
    const Field f = gen::field(rng);
    const Matrix m = gen::matrix(rng, f, dim(rng), dim(rng));
    const auto r = rref(m);
    CHECK(r.transform * m == r.reduced);
    CHECK(rref(r.reduced).reduced == r.reduced);
    CHECK(rank(r.transform) == m.rows());
    const Matrix k = kernel_basis(m);
    CHECK(r.rank() + k.cols() == m.cols());
    CHECK((m * k).is_zero());
    const auto s = rref_serial(m);
    CHECK(s.reduced == r.reduced);
    CHECK(s.transform == r.transform);
  }
}

TEST_CASE("parallel and serial elimination agree above the threshold") {
  std::mt19937_64 rng(5);
  const Matrix m = gen::matrix(rng, Field::prime(101), 70, 80);
  const auto a = rref(m);
  const auto b = rref_serial(m);
  CHECK(a.reduced == b.reduced);
  CHECK(a.transform == b.transform);
}

TEST_CASE("subspace operations") {
  const Subspace u(Matrix::from_ints(Q, {{1, 0, 0}, {0, 1, 0}}));
  const Subspace v(Matrix::from_ints(Q, {{0, 1, 0}, {0, 0, 1}}));
  CHECK(u.intersect(v).dim() == 1);
  CHECK(u.sum(v).dim() == 3);
  CHECK(u.contains(Matrix::from_ints(Q, {{2, -1, 0}})));
  CHECK(!u.contains(Matrix::from_ints(Q, {{0, 0, 1}})));
  CHECK(u.complement_columns() == std::vector<std::size_t>{2});
  const auto c = u.coordinates(Matrix::from_ints(Q, {{2, 5, 0}}));
  REQUIRE(c);
  CHECK(*c * u.basis() == Matrix::from_ints(Q, {{2, 5, 0}}));
  const auto lk = left_kernel(Matrix::from_ints(Q, {{1, 1}, {1, 1}, {0, 1}}));
  CHECK(lk.rows() == 1);
  CHECK((lk * Matrix::from_ints(Q, {{1, 1}, {1, 1}, {0, 1}})).is_zero());
}

TEST_CASE("polynomial arithmetic and factoring") {
  const Poly t = Poly::x(Q);
  const Poly one = Poly::constant(Scalar::one(Q));
  const Poly p = (t - one) * (t - one) * (t + one) * (t * t + one);
  CHECK(squarefree_part(p) == ((t - one) * (t + one) * (t * t + one)));
  const auto roots = rational_roots(p);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0] == Scalar(Q, -1L));
  CHECK(roots[1] == Scalar(Q, 1L));
  const auto parts = coprime_factors(p);
  REQUIRE(parts.size() == 3);
  Poly prod = one;
  for (const auto& f : parts) prod = prod * f;
  CHECK(prod == p.monic());

  const Field f5 = Field::prime(5);
  const Poly u = Poly::x(f5);
  const Poly o = Poly::constant(Scalar::one(f5));
  // t^4 - 1 splits completely over F_5; t^2 + 2 is irreducible.
  const auto lin = factor_squarefree_fp(u * u * u * u - o);
  CHECK(lin.size() == 4);
  const Poly q = (u * u + o + o) * (u - o);
  CHECK(factor_squarefree_fp(q).size() == 2);
  CHECK(coprime_factors(q * (u - o)).size() == 2);

  const auto eg = ext_gcd(t * t - one, t - one - one);
  CHECK(eg.g == one);
  CHECK(eg.s * (t * t - one) + eg.t * (t - one - one) == one);
}

TEST_CASE("minimal polynomial of a matrix") {
  const auto m = Matrix::from_ints(Q, {{0, 1}, {0, 0}});
  const Poly mp = minimal_polynomial(m);
  CHECK(mp.degree() == 2);
  CHECK(evaluate(mp, m).is_zero());
  const auto d = Matrix::from_ints(Q, {{2, 0, 0}, {0, 2, 0}, {0, 0, 3}});
  CHECK(minimal_polynomial(d).degree() == 2);
}
