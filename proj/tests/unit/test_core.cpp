#include <doctest.h>

#include "fixtures.hpp"
#include "iips/core/json_io.hpp"
#include "iips/core/mp_inverse.hpp"
#include "iips/errors.hpp"
#include "iips/exact/linalg.hpp"
#include "instances.hpp"

using namespace iips;
using namespace iips::core;
using namespace iips::exact;
using namespace iips::testing;

namespace {

// Adjoint written from its definition, bypassing the cached weight inverse.
Matrix adjoint_oracle(const Matrix& a, const Matrix& m, const Matrix& n) {
  return inverse(n) * conj_transpose(a) * m;
}

// The four Penrose equations, checked without penrose_residuals.
bool penrose_oracle(const Matrix& a, const Matrix& x, const Weight& m, const Weight& n) {
  const Matrix ax = a * x, xa = x * a;
  return a * x * a == a && x * a * x == x && adjoint_oracle(ax, m.h(), m.h()) == ax &&
         adjoint_oracle(xa, n.h(), n.h()) == xa;
}

}  // namespace

TEST_CASE("weight_validate") {
  const Weight s = sig2();
  CHECK(s.h() == Matrix::diagonal({1, -1}));
  CHECK(s.h_inverse() == s.h());
  CHECK(Weight::validate(Matrix::identity(3)).h_inverse() == Matrix::identity(3));
  try {
    Weight::validate({{0, 1}, {0, 0}});
    FAIL("expected WeightError");
  } catch (const WeightError& e) {
    CHECK(e.kind() == WeightError::Kind::NotHermitian);
    CHECK(std::string(e.what()).find("NotHermitian") != std::string::npos);
  }
  try {
    Weight::validate({{1, 1}, {1, 1}});
    FAIL("expected WeightError");
  } catch (const WeightError& e) {
    CHECK(e.kind() == WeightError::Kind::Singular);
  }
  CHECK_THROWS_AS(Weight::validate(Matrix(2, 3)), WeightError);
  // Hermitian with complex off-diagonal entries.
  const Weight h = Weight::validate({{0, cplx(1, 2)}, {cplx(1, -2), 3}});
  CHECK(h.h() * h.h_inverse() == Matrix::identity(2));
}

TEST_CASE("adjoint examples") {
  CHECK(adjoint(ex1_b(), sig2(), sig2()) == Matrix{{0, 0}, {-1, 0}});
  CHECK(adjoint(ex2_a(), sig2(), sig2()) == Matrix{{1, 0}, {-2, 0}});
  CHECK(adjoint(ex1_a() * ex1_b(), sig2(), sig2()) == Matrix{{0, 0}, {-1, 1}});
  const Matrix x{{cplx(1, 2), 3, 0}, {frac(1, 2), cplx(0, -1), 4}};
  CHECK(adjoint(x, Weight::identity(2), Weight::identity(3)) == conj_transpose(x));
  CHECK_THROWS_AS(adjoint(x, sig2(), sig2()), DimensionError);
}

TEST_CASE("adjoint involution and anti-multiplicativity") {
  Rng rng(17);
  for (int k = 0; k < 200; ++k) {
    const auto kind = alternate_kind(static_cast<std::size_t>(k));
    const std::size_t m = random_dim(rng, 4), n = random_dim(rng, 4), l = random_dim(rng, 4);
    const Weight wm = hunter::random_weight(rng, m, kind);
    const Weight wn = hunter::random_weight(rng, n, kind);
    const Weight wl = hunter::random_weight(rng, l, kind);
    const Matrix a = hunter::random_mixed(rng, m, n, 2);
    const Matrix b = hunter::random_mixed(rng, n, l, 2);
    CHECK(adjoint(a, wm, wn) == adjoint_oracle(a, wm.h(), wn.h()));
    CHECK(adjoint(adjoint(a, wm, wn), wn, wm) == a);
    CHECK(adjoint(a * b, wm, wl) == adjoint(b, wn, wl) * adjoint(a, wm, wn));
  }
}

TEST_CASE("is_w_hermitian and is_range_hermitian") {
  Rng rng(19);
  for (int k = 0; k < 30; ++k) {
    const Weight w = hunter::random_weight(rng, random_dim(rng, 4), alternate_kind(static_cast<std::size_t>(k)));
    CHECK(is_w_hermitian(Matrix::identity(w.order()), w));
    CHECK(is_range_hermitian(Matrix::identity(w.order()), w));
  }
  CHECK_FALSE(is_w_hermitian({{0, 1}, {0, 0}}, Weight::identity(2)));
  CHECK_FALSE(is_range_hermitian({{0, 1}, {0, 0}}, Weight::identity(2)));
  CHECK(is_range_hermitian(ex1_a(), sig2()));
  CHECK_THROWS_AS(is_w_hermitian(Matrix(2, 3), sig2()), DimensionError);

  int seen = 0;
  while (seen < 50) {
    const auto wa = random_invertible_mp(rng, 4, 2, alternate_kind(static_cast<std::size_t>(seen)));
    const Matrix x = mp_dagger(wa.a, wa.m, wa.n);
    CHECK(is_w_hermitian(wa.a * x, wa.m));
    CHECK(is_w_hermitian(x * wa.a, wa.n));
    const Matrix gram = adjoint(wa.a, wa.m, wa.n) * wa.a;
    CHECK(exact::index(gram) == 1);
    ++seen;
  }
}

TEST_CASE("mp_exists examples") {
  const auto a = mp_exists(ex1_a(), sig2(), sig2());
  const auto b = mp_exists(ex1_b(), sig2(), sig2());
  const auto ab = mp_exists(ex1_a() * ex1_b(), sig2(), sig2());
  CHECK(a.exists);
  CHECK(b.exists);
  CHECK_FALSE(ab.exists);
  CHECK(ab.rank_a == 1);
  CHECK(ab.rank_astara == 0);
  CHECK_FALSE(a.inverse.has_value());
  CHECK_THROWS_AS(ab.value(), NotExistsError);

  Rng rng(23);
  for (int k = 0; k < 50; ++k) {
    const Matrix x = hunter::random_mixed(rng, random_dim(rng, 4), random_dim(rng, 4), 2);
    CHECK(mp_exists(x, Weight::identity(x.rows()), Weight::identity(x.cols())).exists);
  }
  CHECK_THROWS_AS(mp_exists(Matrix(3, 2), sig2(), sig2()), DimensionError);
}

TEST_CASE("mp_inverse examples") {
  CHECK(mp_dagger(ex2_a(), sig2(), sig2()) == frac(-1, 3) * Matrix{{1, 0}, {-2, 0}});
  CHECK(mp_dagger(ex2_b(), sig2(), sig2()) == frac(1, 3) * Matrix{{2, 0}, {-1, 0}});
  CHECK(mp_dagger(ex1_a(), sig2(), sig2()) == inverse(ex1_a()));
  const Matrix e11{{1, 0}, {0, 0}};
  const Matrix x = mp_dagger(e11, sig2(), sig2());
  CHECK(x == e11);
  CHECK(penrose_oracle(e11, x, sig2(), sig2()));
  CHECK(mp_dagger(Matrix::zero(2, 3), Weight::identity(2), Weight::identity(3)) == Matrix::zero(3, 2));

  const auto r = mp_inverse(ex1_a() * ex1_b(), sig2(), sig2());
  CHECK_FALSE(r.exists);
  CHECK_FALSE(r.inverse.has_value());
  CHECK_THROWS_AS(mp_dagger(ex1_a() * ex1_b(), sig2(), sig2()), NotExistsError);
  CHECK_THROWS_AS(mp_dagger(ex1_a() * ex1_b(), sig2(), sig2()), PreconditionError);
}

TEST_CASE("mp_inverse agrees with the existence criterion and the Penrose oracle") {
  Rng rng(29);
  int exists = 0, missing = 0;
  for (int k = 0; k < 400; ++k) {
    const auto kind = alternate_kind(static_cast<std::size_t>(k));
    const std::size_t m = random_dim(rng, 4), n = random_dim(rng, 4);
    const Matrix a = hunter::random_mixed(rng, m, n, 2);
    const Weight wm = hunter::random_weight(rng, m, kind);
    const Weight wn = hunter::random_weight(rng, n, kind);
    const auto e = mp_exists(a, wm, wn);
    const auto r = mp_inverse(a, wm, wn);
    CHECK(e.exists == r.exists);
    CHECK(r.exists == (r.rank_a == r.rank_aastar && r.rank_a == r.rank_astara));
    CHECK(r.rank_a == rank(a));
    CHECK(r.rank_aastar == rank(a * adjoint_oracle(a, wm.h(), wn.h())));
    if (r.exists) {
      ++exists;
      CHECK(penrose_oracle(a, *r.inverse, wm, wn));
      CHECK(penrose_residuals(a, *r.inverse, wm, wn).all());
    } else {
      ++missing;
    }
  }
  CHECK(exists > 50);
  CHECK(missing > 5);
}

TEST_CASE("Euclidean reduction") {
  Rng rng(31);
  for (int k = 0; k < 200; ++k) {
    const Matrix a = hunter::random_mixed(rng, random_dim(rng, 5), random_dim(rng, 5), 3);
    const auto r = mp_inverse(a, Weight::identity(a.rows()), Weight::identity(a.cols()));
    REQUIRE(r.exists);
    CHECK(*r.inverse == euclidean_pinv(a));
  }
}

TEST_CASE("penrose_residuals") {
  const Matrix a = ex2_a();
  const Matrix x = mp_dagger(a, sig2(), sig2());
  CHECK(penrose_residuals(a, x, sig2(), sig2()).all());
  CHECK(penrose_residuals(Matrix::identity(2), Matrix::identity(2), sig2(), sig2()).all());

  const Matrix ab = ex2_a() * ex2_b();
  const Matrix rev = mp_dagger(ex2_b(), sig2(), sig2()) * x;
  CHECK_FALSE(penrose_residuals(ab, rev, sig2(), sig2()).all());
  CHECK_THROWS_AS(penrose_residuals(a, Matrix(3, 2), sig2(), sig2()), DimensionError);
}

TEST_CASE("penrose_residuals flags the failing equation") {
  // X + (I - XA) Y keeps A X A = A but generically breaks the rest.
  Rng rng(37);
  int tested = 0;
  while (tested < 100) {
    const auto wa = random_invertible_mp(rng, 4, 2, alternate_kind(static_cast<std::size_t>(tested)));
    const Matrix x = mp_dagger(wa.a, wa.m, wa.n);
    const std::size_t n = wa.a.cols(), m = wa.a.rows();
    const Matrix y = hunter::random_matrix(rng, n, m, 1);
    const Matrix x1 = x + (Matrix::identity(n) - x * wa.a) * y;
    if (x1 == x) continue;
    const auto f = penrose_residuals(wa.a, x1, wa.m, wa.n);
    CHECK(f.axa_eq_a);
    CHECK_FALSE(f.all());
    CHECK(f.xax_eq_x == (x1 * wa.a * x1 == x1));
    // A perturbation of X that breaks the first equation.
    const Matrix x2 = x + Matrix::identity(n) * Matrix(n, m, std::vector<GaussianRational>(n * m, 1));
    const auto g = penrose_residuals(wa.a, x2, wa.m, wa.n);
    CHECK(g.axa_eq_a == (wa.a * x2 * wa.a == wa.a));
    ++tested;
  }
}

TEST_CASE("mp_property_report") {
  CHECK(mp_property_report(ex2_a(), sig2(), sig2()).all());
  CHECK(mp_property_report(ex1_a(), sig2(), sig2()).all());
  CHECK_THROWS_AS(mp_property_report(ex1_a() * ex1_b(), sig2(), sig2()), NotExistsError);
  Rng rng(41);
  for (int k = 0; k < 150; ++k) {
    const auto wa = random_invertible_mp(rng, 4, 2, alternate_kind(static_cast<std::size_t>(k)));
    const auto r = mp_property_report(wa.a, wa.m, wa.n);
    CHECK(r.adjoint_absorbs);
    CHECK(r.adjoint_dagger_commute);
    CHECK(r.gram_inverses);
    CHECK(r.closed_forms);
    CHECK(r.gram_projects);
    CHECK(r.gram_commutes);
  }
}

TEST_CASE("weights json") {
  const Json j = Json::parse(R"({"M": {"rows":2,"cols":2,"data":[["1","0"],["0","-1"]]},
                                  "N": {"rows":1,"cols":1,"data":[["2"]]}})");
  const WeightSet ws = weights_from_json(j);
  CHECK(ws.m == sig2());
  CHECK(ws.n.h_inverse() == Matrix{{frac(1, 2)}});
  CHECK_FALSE(ws.l.has_value());
  CHECK_THROWS_AS(ws.triple(), ParseError);

  const Json bad = Json::parse(R"({"M": {"rows":2,"cols":2,"data":[["0","1"],["0","0"]]},
                                    "N": {"rows":1,"cols":1,"data":[["2"]]}})");
  try {
    weights_from_json(bad);
    FAIL("expected WeightError");
  } catch (const WeightError& e) {
    const std::string msg = e.what();
    CHECK(msg.find("M") != std::string::npos);
    CHECK(msg.find("NotHermitian") != std::string::npos);
  }
  CHECK_THROWS_AS(weights_from_json(Json::parse(R"({"M": {"rows":1,"cols":1,"data":[["1"]]}})")), ParseError);

  const WeightSet back = weights_from_json(weights_to_json(sig2_triple()));
  CHECK(back.triple().l == sig2());
}

TEST_CASE("mp_result json") {
  const Json j = mp_result_to_json(mp_inverse(ex2_a(), sig2(), sig2()));
  CHECK(j["exists"] == true);
  CHECK(matrix_from_json(j["inverse"]) == frac(-1, 3) * Matrix{{1, 0}, {-2, 0}});
  const Json k = mp_result_to_json(mp_inverse(ex1_a() * ex1_b(), sig2(), sig2()));
  CHECK(k["exists"] == false);
  CHECK(k["rank_astara"] == 0);
}
