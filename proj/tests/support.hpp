#pragma once

#include <random>
#include <string>

#include "symq/io.hpp"
#include "symq/matrix.hpp"

namespace symq::test {

inline std::string fixture_path(const std::string& name) { return std::string(SYMQ_FIXTURE_DIR) + "/" + name; }

inline QuiverDocument fixture(const std::string& name) {
  return parse_quiver_document(read_text_file(fixture_path(name)));
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

inline Matrix random_skew(std::mt19937_64& rng, std::size_t n, int lo = -5, int hi = 5) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = d(rng);
      m(j, i) = -m(i, j);
    }
  return m;
}

}  // namespace symq::test
