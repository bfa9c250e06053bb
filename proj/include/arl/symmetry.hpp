#pragma once

#include <array>
#include <cstdint>

namespace arl {

// Winning lines of the 3x3 grid in canonical order: rows top-to-bottom,
// columns left-to-right, main diagonal, anti-diagonal. Role order within a
// line is left-to-right / top-to-bottom / top-left corner first.
inline constexpr std::array<std::array<std::uint8_t, 3>, 8> kLines = {{
    {{0, 1, 2}},
    {{3, 4, 5}},
    {{6, 7, 8}},
    {{0, 3, 6}},
    {{1, 4, 7}},
    {{2, 5, 8}},
    {{0, 4, 8}},
    {{2, 4, 6}},
}};

inline constexpr int kNumLines = 8;
inline constexpr int kNumSymmetries = 8;

// Dihedral group of the grid: identity, three rotations, four reflections.
// kSymPerm[t][c] is the cell index that cell c moves to under symmetry t;
// t = 0 is the identity.
extern const std::array<std::array<std::uint8_t, 9>, kNumSymmetries> kSymPerm;

// Inverse permutations: kSymInv[t][kSymPerm[t][c]] == c.
extern const std::array<std::array<std::uint8_t, 9>, kNumSymmetries> kSymInv;

// Line l maps onto line kLineImage[t][l] under symmetry t.
extern const std::array<std::array<std::uint8_t, kNumLines>, kNumSymmetries>
    kLineImage;

// Role i of line l lands in role kRoleAlign[t][l][i] of the image line.
extern const std::array<
    std::array<std::array<std::uint8_t, 3>, kNumLines>, kNumSymmetries>
    kRoleAlign;

// Applies symmetry t to a 9-slot cell array: out[kSymPerm[t][c]] = in[c].
template <typename T>
std::array<T, 9> apply_symmetry(const std::array<T, 9>& cells, int t) {
  std::array<T, 9> out{};
  for (int c = 0; c < 9; ++c) out[kSymPerm[t][c]] = cells[c];
  return out;
}

}  // namespace arl
