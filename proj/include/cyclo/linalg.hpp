// linalg.hpp - dense exact linear algebra over Q.
#pragma once

#include <cstddef>
#include <vector>

#include "cyclo/rational.hpp"

namespace cyclo {

using Row = std::vector<Rational>;
using Matrix = std::vector<Row>;

// In-place reduced row echelon form; zero rows are dropped. Returns the
// pivot columns.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

// Basis of {x : m x = 0}, x of length cols.
std::vector<Row> kernel(Matrix m, std::size_t cols);

// Echelon basis of the span of the given vectors.
std::vector<Row> span_basis(std::vector<Row> vectors);

}  // namespace cyclo
