#ifndef BBT_GENERATOR_MATRIX_HPP
#define BBT_GENERATOR_MATRIX_HPP

#include <iosfwd>
#include <vector>

#include "bbt/bits.hpp"

namespace bbt {

// Lower-triangular invertible generator matrix of the length-n code:
// codeword = w * G for a leaf label vector w.
struct GeneratorMatrix {
  int n = 0;
  std::vector<Bits> rows;  // n rows of length n
};

GeneratorMatrix generator_matrix(int n);

Bits multiply_left(const Bits& w, const GeneratorMatrix& g);

// One row per line of '0'/'1' characters, row 0 first.
void write_matrix(const GeneratorMatrix& g, std::ostream& os);

}  // namespace bbt

#endif
