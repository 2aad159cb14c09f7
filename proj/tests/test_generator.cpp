#include <random>
#include <sstream>

#include "bbt/codec.hpp"
#include "bbt/generator_matrix.hpp"
#include "doctest.h"
#include "oracles.hpp"

using bbt::Bits;

namespace {

const char* kG9[] = {
    "100000000", "110000000", "101000000", "100100000", "110110000",
    "100001000", "110001100", "101001010", "111101111",
};

Bits from_string(const char* s) { return bbt::parse_bits(s); }

}  // namespace

TEST_CASE("generator matrix matches the worked 9x9 instance") {
  const auto g = bbt::generator_matrix(9);
  REQUIRE(g.n == 9);
  for (int i = 0; i < 9; ++i) CHECK(g.rows[i] == from_string(kG9[i]));
}

TEST_CASE("generator matrix small instances") {
  CHECK(bbt::generator_matrix(1).rows == std::vector<Bits>{Bits{1}});

  const auto g6 = bbt::generator_matrix(6);
  const char* rows6[] = {"100000", "110000", "101000", "100100", "110110", "101101"};
  for (int i = 0; i < 6; ++i) CHECK(g6.rows[i] == from_string(rows6[i]));

  // cross-check against the worked encoding example
  CHECK(bbt::multiply_left(from_string("010011"), g6) == from_string("101011"));

  CHECK_THROWS_AS(bbt::generator_matrix(0), std::invalid_argument);
}

TEST_CASE("lower triangular with unit diagonal for 1..64") {
  for (int n = 1; n <= 64; ++n) {
    CAPTURE(n);
    const auto g = bbt::generator_matrix(n);
    for (int i = 0; i < n; ++i) {
      CHECK(g.rows[i][i] == 1);
      for (int j = i + 1; j < n; ++j) CHECK(g.rows[i][j] == 0);
    }
  }
}

TEST_CASE("powers of two reduce to the Kronecker power") {
  for (int n = 2; n <= 64; n *= 2) {
    CAPTURE(n);
    CHECK(bbt::generator_matrix(n).rows == oracle::kronecker_generator(n));
  }
}

TEST_CASE("encode agrees with the matrix and is linear") {
  std::mt19937_64 rng(7);
  std::vector<int> sizes;
  for (int n = 1; n <= 32; ++n) sizes.push_back(n);
  sizes.push_back(384);
  for (int n : sizes) {
    CAPTURE(n);
    const bbt::CodingTree tree(n);
    const auto g = bbt::generator_matrix(n);
    const int reps = n <= 32 ? 200 : 50;
    for (int t = 0; t < reps; ++t) {
      Bits w(n), w2(n);
      for (int i = 0; i < n; ++i) {
        w[i] = static_cast<std::uint8_t>(rng() & 1);
        w2[i] = static_cast<std::uint8_t>(rng() & 1);
      }
      const Bits c = bbt::encode_leaves(tree, w);
      CHECK(c == bbt::multiply_left(w, g));
      CHECK(bbt::encode_leaves(tree, bbt::xor_bits(w, w2)) ==
            bbt::xor_bits(c, bbt::encode_leaves(tree, w2)));
    }
  }
}

TEST_CASE("matrix text export") {
  std::ostringstream os;
  bbt::write_matrix(bbt::generator_matrix(3), os);
  CHECK(os.str() == "100\n110\n101\n");
}
