#include <doctest.h>

#include <algorithm>
#include <functional>
#include <sstream>

#include "fixtures.hpp"
#include "iips/errors.hpp"
#include "iips/exact/json_io.hpp"
#include "iips/exact/linalg.hpp"
#include "instances.hpp"

using namespace iips;
using namespace iips::exact;
using namespace iips::testing;

namespace {

// Determinant by cofactor expansion; independent of elimination.
GaussianRational det(const Matrix& a) {
  const std::size_t n = a.rows();
  if (n == 1) return a(0, 0);
  GaussianRational total;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j).is_zero()) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t c = 0, k = 0; c < n; ++c) {
        if (c != j) minor(r - 1, k++) = a(r, c);
      }
    }
    const GaussianRational term = a(0, j) * det(minor);
    if (j % 2 == 0) total += term; else total -= term;
  }
  return total;
}

// Rank as the order of the largest nonvanishing minor.
std::size_t rank_by_minors(const Matrix& a) {
  const std::size_t top = std::min(a.rows(), a.cols());
  for (std::size_t k = top; k >= 1; --k) {
    std::vector<bool> rsel(a.rows(), false), csel(a.cols(), false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
      do {
        Matrix sub(k, k);
        for (std::size_t r = 0, i = 0; r < a.rows(); ++r) {
          if (!rsel[r]) continue;
          for (std::size_t c = 0, j = 0; c < a.cols(); ++c) {
            if (csel[c]) sub(i, j++) = a(r, c);
          }
          ++i;
        }
        if (!det(sub).is_zero()) return k;
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

bool is_rref(const Matrix& r) {
  std::size_t last_pivot = 0;
  bool any = false, zero_seen = false;
  for (std::size_t i = 0; i < r.rows(); ++i) {
    std::size_t c = 0;
    while (c < r.cols() && r(i, c).is_zero()) ++c;
    if (c == r.cols()) { zero_seen = true; continue; }
    if (zero_seen) return false;
    if (any && c <= last_pivot) return false;
    if (!(r(i, c) == GaussianRational(1))) return false;
    for (std::size_t k = 0; k < r.rows(); ++k) {
      if (k != i && !r(k, c).is_zero()) return false;
    }
    last_pivot = c;
    any = true;
  }
  return true;
}

Matrix rand_mixed(Rng& rng, std::size_t max_dim, long bound) {
  const std::size_t r = random_dim(rng, max_dim), c = random_dim(rng, max_dim);
  return hunter::random_mixed(rng, r, c, bound);
}

}  // namespace

TEST_CASE("construction rejects empty matrices") {
  CHECK_THROWS_AS(Matrix(0, 2), DimensionError);
  CHECK_THROWS_AS(Matrix(2, 0), DimensionError);
  CHECK_THROWS_AS(Matrix(2, 2, std::vector<GaussianRational>(3)), DimensionError);
}

TEST_CASE("rational normal form") {
  Rational q;
  REQUIRE(parse_rational("6/-4", q) == false);
  REQUIRE(parse_rational("-6/4", q));
  CHECK(format_rational(q) == "-3/2");
  REQUIRE(parse_rational("0/7", q));
  CHECK(format_rational(q) == "0");
  CHECK(q.get_den() == 1);
  CHECK_FALSE(parse_rational("1/0", q));
  CHECK_FALSE(parse_rational("1.5", q));
  CHECK_FALSE(parse_rational("", q));
}

TEST_CASE("gaussian rational field laws") {
  const GaussianRational z = cplx(3, -4);
  CHECK(z.conj().conj() == z);
  CHECK(z.norm() == 25);
  CHECK(z * z.reciprocal() == GaussianRational(1));
  CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
  CHECK(GaussianRational().norm() == 0);
  CHECK_THROWS_AS(GaussianRational().reciprocal(), SingularError);
  CHECK((frac(1, 2) + frac(1, 3)) == frac(5, 6));
}

TEST_CASE("arith") {
  CHECK(ex1_a() * ex1_b() == Matrix{{0, 1}, {0, 1}});
  CHECK(ex2_a() * ex2_b() == Matrix{{2, 1}, {0, 0}});
  const Matrix x{{cplx(1, 1), 2}, {frac(1, 3), cplx(0, -1)}};
  CHECK(Matrix::identity(2) * x == x);
  CHECK(x + (-x) == Matrix::zero(2, 2));
  CHECK(frac(1, 2) * (x + x) == x);
  CHECK_THROWS_AS(Matrix(2, 3) * Matrix(2, 3), DimensionError);
  CHECK_THROWS_AS(Matrix(2, 3) + Matrix(3, 2), DimensionError);
}

TEST_CASE("conj_transpose") {
  CHECK(conj_transpose(Matrix{{0, 1}, {0, 0}}) == Matrix{{0, 0}, {1, 0}});
  CHECK(conj_transpose(Matrix{{GaussianRational::i(), 0}, {0, 0}}) == Matrix{{cplx(0, -1), 0}, {0, 0}});
  Rng rng(11);
  for (int k = 0; k < 50; ++k) {
    const Matrix x = rand_mixed(rng, 4, 3);
    CHECK(conj_transpose(conj_transpose(x)) == x);
  }
}

TEST_CASE("rref examples") {
  auto r = rref({{1, 2}, {0, 0}});
  CHECK(r.reduced == Matrix{{1, 2}, {0, 0}});
  CHECK(r.pivot_columns == std::vector<std::size_t>{0});
  CHECK(r.rank == 1);

  r = rref(Matrix::identity(3));
  CHECK(r.reduced == Matrix::identity(3));
  CHECK(r.pivot_columns == std::vector<std::size_t>{0, 1, 2});
  CHECK(r.rank == 3);

  r = rref({{2, 1}, {4, 2}});
  CHECK(r.reduced == Matrix{{1, frac(1, 2)}, {0, 0}});
  CHECK(r.pivot_columns == std::vector<std::size_t>{0});
  CHECK(r.rank == 1);
}

TEST_CASE("rank examples") {
  CHECK(rank({{0, 1}, {0, 1}}) == 1);
  CHECK(rank(Matrix::zero(2, 2)) == 0);
  const Matrix d = ex1_a() * ex1_b();
  // (AB)^[*] AB with M = N = diag(1, -1), written out by hand.
  const Matrix d_adj{{0, 0}, {-1, 1}};
  CHECK(d_adj * d == Matrix::zero(2, 2));
  CHECK(rank(d_adj * d) == 0);
}

TEST_CASE("rank agrees with the minor oracle and its invariants") {
  Rng rng(3);
  for (int k = 0; k < 200; ++k) {
    const Matrix a = rand_mixed(rng, 4, 2);
    const std::size_t r = rank(a);
    CHECK(r == rank_by_minors(a));
    CHECK(r == rref(a).rank);
    CHECK(r == rank(conj_transpose(a)));
    const Matrix red = rref(a).reduced;
    CHECK(is_rref(red));
    CHECK(rref(red).reduced == red);

    const Matrix b = hunter::random_mixed(rng, a.rows(), random_dim(rng, 4), 2);
    CHECK(rank(hstack(a, b)) <= rank(a) + rank(b));
    const Matrix c = hunter::random_mixed(rng, a.cols(), random_dim(rng, 4), 2);
    CHECK(rank(a * c) <= std::min(rank(a), rank(c)));
  }
}

TEST_CASE("inverse") {
  const Matrix s = Matrix::diagonal({1, -1});
  CHECK(inverse(s) == s);
  // Adjugate formula [[d, -b], [-c, a]] / det for [[1, 1], [1, 0]] (det -1).
  CHECK(inverse(ex1_a()) == Matrix{{0, 1}, {1, -1}});
  CHECK_THROWS_AS(inverse({{1, 2}, {2, 4}}), SingularError);
  CHECK_THROWS_AS(inverse(Matrix(2, 3)), DimensionError);

  Rng rng(5);
  int seen = 0;
  while (seen < 100) {
    const std::size_t n = random_dim(rng, 5);
    const Matrix a = hunter::random_matrix(rng, n, n, 3);
    if (det(a).is_zero() && n <= 4) {
      CHECK_THROWS_AS(inverse(a), SingularError);
      continue;
    }
    if (rank(a) < n) continue;
    const Matrix ai = inverse(a);
    CHECK(a * ai == Matrix::identity(n));
    CHECK(ai * a == Matrix::identity(n));
    CHECK(inverse(ai) == a);
    ++seen;
  }
}

TEST_CASE("full_rank_factorization") {
  auto fg = full_rank_factorization({{1, 2}, {0, 0}});
  CHECK(*fg.f == Matrix{{1}, {0}});
  CHECK(*fg.g == Matrix{{1, 2}});
  fg = full_rank_factorization(Matrix::identity(2));
  CHECK(*fg.f == Matrix::identity(2));
  CHECK(*fg.g == Matrix::identity(2));
  fg = full_rank_factorization({{2, 1}, {4, 2}});
  CHECK(*fg.f == Matrix{{2}, {4}});
  CHECK(*fg.g == Matrix{{1, frac(1, 2)}});
  fg = full_rank_factorization(Matrix::zero(2, 3));
  CHECK(fg.rank == 0);
  CHECK_FALSE(fg.f.has_value());

  Rng rng(8);
  for (int k = 0; k < 200; ++k) {
    const Matrix a = rand_mixed(rng, 5, 3);
    const auto h = full_rank_factorization(a);
    if (h.rank == 0) {
      CHECK(a.is_zero());
      continue;
    }
    CHECK(*h.f * *h.g == a);
    CHECK(rank(*h.f) == h.rank);
    CHECK(rank(*h.g) == h.rank);
    CHECK(h.f->cols() == h.rank);
    CHECK(h.g->rows() == h.rank);
    CHECK(h.rank == rank(a));
  }
}

TEST_CASE("euclidean_pinv") {
  CHECK(euclidean_pinv(Matrix::diagonal({2, 0})) == Matrix::diagonal({frac(1, 2), 0}));
  CHECK(euclidean_pinv(Matrix::identity(3)) == Matrix::identity(3));
  CHECK(euclidean_pinv({{1, 2}, {0, 0}}) == Matrix{{frac(1, 5), 0}, {frac(2, 5), 0}});
  CHECK(euclidean_pinv(Matrix::zero(2, 3)) == Matrix::zero(3, 2));

  Rng rng(13);
  for (int k = 0; k < 200; ++k) {
    const Matrix a = rand_mixed(rng, 5, 3);
    const Matrix x = euclidean_pinv(a);
    CHECK(a * x * a == a);
    CHECK(x * a * x == x);
    CHECK(conj_transpose(a * x) == a * x);
    CHECK(conj_transpose(x * a) == x * a);
  }
}

TEST_CASE("block_assemble") {
  const Matrix one = Matrix::identity(1), z = Matrix::zero(1, 1);
  CHECK(block_assemble({{one, z}, {z, one}}) == Matrix::identity(2));
  CHECK_THROWS_AS(block_assemble({{one, z}, {Matrix(2, 1), one}}), DimensionError);
  CHECK_THROWS_AS(hstack(Matrix(2, 1), Matrix(1, 1)), DimensionError);
  CHECK(vstack(Matrix{{1, 2}}, Matrix{{3, 4}}) == Matrix{{1, 2}, {3, 4}});

  const Matrix big = block_assemble({{ex2_a(), ex2_b()}, {ex2_b(), ex2_a()}});
  CHECK(big.rows() == 4);
  CHECK(big.cols() == 4);
  // Rows (1,2,2,1) and (2,1,1,2) are independent; the other two vanish.
  CHECK(rank(big) == 2);
  CHECK(rank(big) == rank_by_minors(big));
}

TEST_CASE("range_contains") {
  const Matrix x{{1, 2}, {cplx(0, 1), 3}};
  CHECK(range_contains(Matrix::identity(2), x));
  CHECK_FALSE(range_contains(Matrix::zero(2, 1), x));
  CHECK(range_contains(Matrix{{1}, {1}}, Matrix{{2}, {2}}));
  CHECK_THROWS_AS(range_contains(Matrix(2, 2), Matrix(3, 1)), DimensionError);

  // Oracle: Y Z = X is solvable iff rref([Y | X]) has no pivot among X's columns.
  Rng rng(21);
  int yes = 0, no = 0;
  for (int k = 0; k < 300; ++k) {
    const std::size_t rows = random_dim(rng, 4);
    const Matrix y = hunter::random_mixed(rng, rows, random_dim(rng, 3), 1);
    Matrix xx = hunter::random_mixed(rng, rows, random_dim(rng, 3), 1);
    if (rng.coin()) xx = y * hunter::random_matrix(rng, y.cols(), xx.cols(), 1);
    const auto aug = rref(hstack(y, xx));
    const bool solvable = std::none_of(aug.pivot_columns.begin(), aug.pivot_columns.end(),
                                       [&](std::size_t c) { return c >= y.cols(); });
    CHECK(range_contains(y, xx) == solvable);
    (solvable ? yes : no)++;
  }
  CHECK(yes > 20);
  CHECK(no > 20);
}

TEST_CASE("index") {
  CHECK(index(ex1_a()) == 1);
  CHECK(index({{0, 1}, {0, 0}}) == 2);
  CHECK(index(Matrix::zero(2, 2)) == 1);
  CHECK(index({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}}) == 3);
  CHECK_THROWS_AS(index(Matrix(2, 3)), DimensionError);
}

TEST_CASE("matrix json round trip") {
  const Matrix m{{frac(-3, 6), cplx(0, 2)}, {GaussianRational(Rational(1, 3), Rational(-5, 7)), 0}};
  const Json j = matrix_to_json(m);
  CHECK(j.dump() == R"({"rows":2,"cols":2,"data":[["-1/2",["0","2"]],[["1/3","-5/7"],"0"]]})");
  CHECK(matrix_from_json(j) == m);

  Rng rng(4);
  for (int k = 0; k < 50; ++k) {
    Matrix x = rand_mixed(rng, 4, 3);
    if (!x.is_zero()) x = euclidean_pinv(x);
    CHECK(matrix_from_json(Json::parse(matrix_to_json(x).dump())) == x);
  }
}

TEST_CASE("matrix json errors name the field") {
  auto message = [](const std::string& text) {
    try {
      matrix_from_json(Json::parse(text), "weights.M");
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message(R"({"rows":2,"cols":1,"data":[["1"],["x"]]})").find("weights.M.data[1][0]") != std::string::npos);
  CHECK(message(R"({"rows":2,"cols":1,"data":[["1"]]})").find("weights.M") != std::string::npos);
  CHECK(message(R"({"rows":0,"cols":1,"data":[]})").find("weights.M") != std::string::npos);
  CHECK(message(R"({"cols":1,"data":[["1"]]})").find("rows") != std::string::npos);
  CHECK(message(R"({"rows":1,"cols":1,"data":[[1]]})") != "no error");
}
