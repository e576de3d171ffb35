#pragma once
#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace hpga {

// The three hyperbolic Cayley-Klein algebras Cl(d,1), d = 1, 2, 3.
enum class Space : int { H1 = 1, H2 = 2, H3 = 3 };

const char* space_name(Space) noexcept;
bool space_from_name(const std::string&, Space& out) noexcept;

inline constexpr int kMaxBlades = 16;

// A paper-style spelling of one canonical basis blade, e.g. "e20" for
// -e02. The per-space display basis drives text serialization and the
// coordinate conventions of the geometric constructors.
struct DisplayBlade {
  const char* name;
  unsigned mask;
  double sign;  // display blade = sign * canonical blade
};

// Immutable signature descriptor for Cl(d,1): generators e0..ed with
// e0^2 = -1 and ei^2 = +1 (i >= 1). Basis blades are indexed by bitmask
// over the generators (bit g set <=> generator e_g present); the blade a
// mask denotes is the product of its generators in ascending index order.
struct Algebra {
  Space space;
  int dim;        // d
  int gens;       // d + 1
  int size;       // 1 << gens
  unsigned full;  // pseudoscalar mask
  double I_sq;    // +1 for d = 1, 2; -1 for d = 3

  // Bilinear product tables in xor layout: entry [i*size + k] is the sign
  // multiplying A[i]*B[i^k] into C[k]. gp entries are always +-1; wedge
  // zeroes overlapping factors; inner keeps grade |r-s| contributions only.
  alignas(32) std::array<double, 256> gp_x{};
  alignas(32) std::array<double, 256> wedge_x{};
  alignas(32) std::array<double, 256> inner_x{};

  std::array<double, kMaxBlades> rev_sign{};    // reverse: (-1)^{k(k-1)/2}
  std::array<double, kMaxBlades> metric_sq{};   // <e_S reverse(e_S)>_0
  std::array<double, kMaxBlades> j_sign{};      // J(e_S) = j_sign[S] e_comp(S)
  std::array<double, kMaxBlades> jinv_sign{};   // J^-1 counterpart
  std::array<double, kMaxBlades> dual_sign{};   // e_S I = dual_sign[S] e_comp(S)
  std::array<double, kMaxBlades> undual_sign{}; // e_S I^-1
  std::array<std::uint8_t, kMaxBlades> grade_of{};

  // All masks sorted by (grade, lexicographic generator order); fixes the
  // JSON coefficient ordering.
  std::vector<unsigned> canonical_order;
  // Paper-style basis in print order (grades ascending).
  std::vector<DisplayBlade> display;

  double gp_sign(unsigned i, unsigned j) const { return gp_x[i * size + (i ^ j)]; }
  int grade(unsigned mask) const { return grade_of[mask]; }
  unsigned comp(unsigned mask) const { return full ^ mask; }
  std::string blade_name(unsigned mask) const;  // canonical spelling, "1" for mask 0
};

const Algebra& algebra(Space);
const Algebra& algebra_for_dim(int d);

}  // namespace hpga
