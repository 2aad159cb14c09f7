#include "bbt/generator_matrix.hpp"

#include <ostream>
#include <stdexcept>

namespace bbt {

GeneratorMatrix generator_matrix(int n) {
  if (n < 1) throw std::invalid_argument("generator_matrix: length must be >= 1");
  if (n == 1) return {1, {Bits{1}}};

  const int nl = (n + 1) / 2;
  const int nr = n / 2;
  GeneratorMatrix gl = generator_matrix(nl);
  GeneratorMatrix gr = generator_matrix(nr);

  GeneratorMatrix g;
  g.n = n;
  g.rows.assign(n, Bits(n, 0));
  for (int i = 0; i < nl; ++i)
    for (int j = 0; j < nl; ++j) g.rows[i][j] = gl.rows[i][j];
  // Bottom-left block is G_r extended by a zero column when n is odd.
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nr; ++j) {
      g.rows[nl + i][j] = gr.rows[i][j];
      g.rows[nl + i][nl + j] = gr.rows[i][j];
    }
  return g;
}

Bits multiply_left(const Bits& w, const GeneratorMatrix& g) {
  if (static_cast<int>(w.size()) != g.n)
    throw std::invalid_argument("multiply_left: dimension mismatch");
  Bits c(g.n, 0);
  for (int i = 0; i < g.n; ++i) {
    if (!w[i]) continue;
    for (int j = 0; j < g.n; ++j) c[j] ^= g.rows[i][j];
  }
  return c;
}

void write_matrix(const GeneratorMatrix& g, std::ostream& os) {
  for (const auto& row : g.rows) os << to_bit_string(row) << '\n';
}

}  // namespace bbt
