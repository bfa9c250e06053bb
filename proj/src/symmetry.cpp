#include "arl/symmetry.hpp"

namespace arl {
namespace {

struct Tables {
  std::array<std::array<std::uint8_t, 9>, kNumSymmetries> perm{};
  std::array<std::array<std::uint8_t, 9>, kNumSymmetries> inv{};
  std::array<std::array<std::uint8_t, kNumLines>, kNumSymmetries> line_image{};
  std::array<std::array<std::array<std::uint8_t, 3>, kNumLines>,
             kNumSymmetries>
      role_align{};
};

Tables build_tables() {
  Tables t;
  for (int s = 0; s < kNumSymmetries; ++s) {
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        int rr = 0;
        int cc = 0;
        switch (s) {
          case 0: rr = r; cc = c; break;          // identity
          case 1: rr = c; cc = 2 - r; break;      // rotate 90 cw
          case 2: rr = 2 - r; cc = 2 - c; break;  // rotate 180
          case 3: rr = 2 - c; cc = r; break;      // rotate 270 cw
          case 4: rr = r; cc = 2 - c; break;      // mirror columns
          case 5: rr = 2 - r; cc = c; break;      // mirror rows
          case 6: rr = c; cc = r; break;          // transpose
          case 7: rr = 2 - c; cc = 2 - r; break;  // anti-transpose
        }
        t.perm[s][3 * r + c] = static_cast<std::uint8_t>(3 * rr + cc);
      }
    }
    for (int i = 0; i < 9; ++i) t.inv[s][t.perm[s][i]] = static_cast<std::uint8_t>(i);

    for (int l = 0; l < kNumLines; ++l) {
      std::array<std::uint8_t, 3> img = {t.perm[s][kLines[l][0]],
                                         t.perm[s][kLines[l][1]],
                                         t.perm[s][kLines[l][2]]};
      int target = -1;
      for (int l2 = 0; l2 < kNumLines && target < 0; ++l2) {
        bool same = true;
        for (int i = 0; i < 3 && same; ++i) {
          bool found = false;
          for (int j = 0; j < 3; ++j) found |= (kLines[l2][j] == img[i]);
          same = found;
        }
        if (same) target = l2;
      }
      t.line_image[s][l] = static_cast<std::uint8_t>(target);
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          if (kLines[target][j] == img[i]) {
            t.role_align[s][l][i] = static_cast<std::uint8_t>(j);
          }
        }
      }
    }
  }
  return t;
}

const Tables& tables() {
  static const Tables t = build_tables();
  return t;
}

}  // namespace

const std::array<std::array<std::uint8_t, 9>, kNumSymmetries> kSymPerm =
    tables().perm;
const std::array<std::array<std::uint8_t, 9>, kNumSymmetries> kSymInv =
    tables().inv;
const std::array<std::array<std::uint8_t, kNumLines>, kNumSymmetries>
    kLineImage = tables().line_image;
const std::array<std::array<std::array<std::uint8_t, 3>, kNumLines>,
                 kNumSymmetries>
    kRoleAlign = tables().role_align;

}  // namespace arl
