#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cremona/fields.hpp"
#include "cremona/linalg.hpp"

using namespace cremona;

namespace {

template <class Field>
std::vector<std::vector<typename Field::Element>> random_rows(const Field& f, std::mt19937& rng,
                                                              int rows, int cols, int spread) {
  std::uniform_int_distribution<int> dist(-spread, spread);
  std::vector<std::vector<typename Field::Element>> out;
  for (int r = 0; r < rows; ++r) {
    std::vector<typename Field::Element> row;
    for (int c = 0; c < cols; ++c) row.push_back(f.from_int(dist(rng)));
    out.push_back(std::move(row));
  }
  return out;
}

template <class Field>
void rref_canonicality(const Field& f, unsigned seed) {
  std::mt19937 rng(seed);
  for (int round = 0; round < 40; ++round) {
    const int cols = 5;
    auto rows = random_rows(f, rng, 3, cols, 3);
    const auto base = Subspace<Field>::span(f, cols, rows);
    // recombine: shuffle rows and add random multiples of other rows
    std::uniform_int_distribution<int> pick(0, 2), coef(-2, 2);
    for (int step = 0; step < 10; ++step) {
      const int i = pick(rng), j = pick(rng);
      if (i == j) continue;
      const auto c = f.from_int(coef(rng));
      for (int col = 0; col < cols; ++col)
        rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)] =
            f.add(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)],
                  f.mul(c, rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(col)]));
    }
    std::shuffle(rows.begin(), rows.end(), rng);
    CHECK(Subspace<Field>::span(f, cols, rows) == base);
  }
}

template <class Field>
void dimension_formula(const Field& f, unsigned seed) {
  std::mt19937 rng(seed);
  for (int round = 0; round < 60; ++round) {
    const int cols = 6;
    const auto u1 = Subspace<Field>::span(f, cols, random_rows(f, rng, 3, cols, 2));
    const auto u2 = Subspace<Field>::span(f, cols, random_rows(f, rng, 3, cols, 2));
    const auto meet = intersect(u1, u2);
    const auto join = sum(u1, u2);
    CHECK(u1.rank() + u2.rank() == join.rank() + meet.rank());
    CHECK(u1.contains(meet));
    CHECK(u2.contains(meet));
    CHECK(join.contains(u1));
  }
}

}  // namespace

TEST_CASE("reduced row echelon form") {
  const RationalField q;
  SECTION("identity and zero") {
    const auto id = Matrix<RationalField>::identity(q, 4);
    const auto e = reduced_row_echelon(id);
    CHECK(e.rank == 4);
    CHECK(e.matrix == id);
    const Matrix<RationalField> zero(q, 3, 3);
    const auto ez = reduced_row_echelon(zero);
    CHECK(ez.rank == 0);
    CHECK(ez.matrix == zero);
  }

  SECTION("rank drop over GF(2)") {
    const PrimeField f2(2);
    const auto m = Matrix<PrimeField>::from_rows(f2, 3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(reduced_row_echelon(m).rank == 2);
    // the same rows are independent over the rationals
    const auto mq = Matrix<RationalField>::from_rows(q, 3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(reduced_row_echelon(mq).rank == 3);
  }

  SECTION("canonicality under row recombination") {
    rref_canonicality(RationalField{}, 17);
    rref_canonicality(PrimeField{2}, 18);
    rref_canonicality(PrimeField{3}, 19);
  }
}

TEST_CASE("span and membership") {
  const RationalField q;
  SECTION("single vector is a projective point") {
    const auto u = Subspace<RationalField>::span(q, 4, {{0, 2, 0, 4}});
    CHECK(u.rank() == 1);
    CHECK(u.projective_dim() == 0);
    // canonical scaling: leading entry one
    CHECK(u.basis().at(0, 1) == BigRational(1));
    CHECK(u.basis().at(0, 3) == BigRational(2));
  }

  SECTION("unit vectors span everything, zero input spans nothing") {
    const auto full = Subspace<RationalField>::span(q, 3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(full.rank() == 3);
    const auto empty = Subspace<RationalField>::span(q, 3, {{0, 0, 0}});
    CHECK(empty.rank() == 0);
    CHECK(empty.projective_dim() == -1);
  }

  SECTION("pair sums over GF(2)") {
    const PrimeField f2(2);
    const auto u = Subspace<PrimeField>::span(f2, 3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    CHECK(u.rank() == 2);
  }

  SECTION("membership") {
    const auto u = Subspace<RationalField>::span(q, 3, {{1, 0, 0}, {0, 1, 0}});
    CHECK(u.contains({BigRational(3), BigRational(-2), BigRational(0)}));
    CHECK_FALSE(u.contains({BigRational(0), BigRational(0), BigRational(1)}));
    CHECK_THROWS_AS(u.contains({BigRational(1)}), ParameterError);
  }
}

TEST_CASE("intersection") {
  const RationalField q;
  const auto u = Subspace<RationalField>::span(q, 4, {{1, 0, 0, 0}, {0, 1, 1, 0}});
  CHECK(intersect(u, u) == u);

  SECTION("two planes in a 3-space meet in a line") {
    const auto h1 = Subspace<RationalField>::span(q, 3, {{1, 0, 0}, {0, 1, 0}});
    const auto h2 = Subspace<RationalField>::span(q, 3, {{0, 1, 0}, {0, 0, 1}});
    const auto line = intersect(h1, h2);
    CHECK(line.rank() == 2 - 1 + 1);  // codimensions add: 1 + 1 in rank terms
    CHECK(line.rank() == 2);
  }

  SECTION("dimension formula on random subspaces") {
    dimension_formula(RationalField{}, 5);
    dimension_formula(PrimeField{2}, 6);
    dimension_formula(PrimeField{3}, 7);
  }

  SECTION("ambient or modulus mismatch is rejected") {
    const auto a = Subspace<RationalField>::span(q, 3, {{1, 0, 0}});
    const auto b = Subspace<RationalField>::span(q, 4, {{1, 0, 0, 0}});
    CHECK_THROWS_AS(intersect(a, b), ParameterError);
    const auto c2 = Subspace<PrimeField>::span(PrimeField{2}, 3, {{1, 0, 0}});
    const auto c3 = Subspace<PrimeField>::span(PrimeField{3}, 3, {{1, 0, 0}});
    CHECK_THROWS_AS(intersect(c2, c3), ParameterError);
  }
}

TEST_CASE("all-ones-minus-identity determinant") {
  const RationalField q;
  CHECK(det_ones_minus_identity(2, q) == BigRational(-1));
  CHECK(det_ones_minus_identity(3, q) == BigRational(2));
  CHECK(det_ones_minus_identity(3, PrimeField{2}) == 0);  // 2 vanishes in characteristic 2
  for (int s = 1; s <= 8; ++s) {
    const BigRational expected = (s % 2 == 0) ? BigRational(-(s - 1)) : BigRational(s - 1);
    CHECK(det_ones_minus_identity(s, q) == expected);
    for (long long p : {2, 3, 5, 7}) CHECK_NOTHROW(det_ones_minus_identity(s, PrimeField{p}));
  }
}

TEST_CASE("prime field arithmetic") {
  const PrimeField f7(7);
  for (long long a = 1; a < 7; ++a) CHECK(f7.mul(a, f7.inv(a)) == 1);
  CHECK(f7.from_int(-3) == 4);
  CHECK(f7.neg(0) == 0);
  CHECK(f7.str(2) == "2 mod 7");
  CHECK_THROWS_AS(f7.inv(0), ParameterError);
  CHECK_THROWS_AS(PrimeField(6), ParameterError);
}

TEST_CASE("rational formatting and field specs") {
  const RationalField q;
  CHECK(q.str(q.div(q.from_int(3), q.from_int(2))) == "3/2");
  CHECK(q.str(q.from_int(5)) == "5");
  CHECK(FieldSpec::parse("q") == FieldSpec::rationals());
  CHECK(FieldSpec::parse("p:5") == FieldSpec::prime(5));
  CHECK(FieldSpec::parse("p:5").name() == "GF(5)");
  CHECK(FieldSpec::rationals().characteristic() == 0);
  CHECK_THROWS_AS(FieldSpec::parse("p:4"), ParameterError);
  CHECK_THROWS_AS(FieldSpec::parse("gf2"), ParameterError);
}

TEST_CASE("determinant") {
  const RationalField q;
  const auto m = Matrix<RationalField>::from_rows(q, 2, {{2, 1}, {1, 1}});
  CHECK(determinant(m) == BigRational(1));
  const auto sing = Matrix<RationalField>::from_rows(q, 2, {{1, 2}, {2, 4}});
  CHECK(determinant(sing) == BigRational(0));
  CHECK_THROWS_AS(determinant(Matrix<RationalField>(q, 2, 3)), ParameterError);
}
