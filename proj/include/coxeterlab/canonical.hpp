#pragma once

#include <cstdint>
#include <vector>

namespace coxeterlab {

/// Symmetric n x n matrix of edge codes (0 = no edge), row-major.
struct CodeMatrix {
  int n = 0;
  std::vector<int> codes;

  CodeMatrix() = default;
  explicit CodeMatrix(int order) : n(order), codes(order * order, 0) {}

  int at(int i, int j) const { return codes[i * n + j]; }
  void set(int i, int j, int c) {
    codes[i * n + j] = c;
    codes[j * n + i] = c;
  }
  CodeMatrix restricted(const std::vector<int>& vertices) const;
};

/// Lexicographically largest encoding of the matrix over vertex orders that
/// respect the (refined) colour classes. Two matrices with colours get the
/// same result iff they are isomorphic by a colour-preserving bijection.
std::vector<int> canonical_codes(const CodeMatrix& m, const std::vector<int>& colors = {});

/// Structural positive-definiteness test for Coxeter code matrices: every
/// connected component on `mask` must be a tree from the elliptic table.
/// Codes: 0 absent, 1 bold, 2 dotted, m >= 3 finite label.
bool elliptic_codes(const CodeMatrix& m, std::uint32_t mask);

}  // namespace coxeterlab
