#include "hpga/algebra.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>

namespace hpga {
namespace {

// Parity of the permutation that merges the generators of blade a past
// those of blade b (both ascending): generator g of a must hop over every
// generator of b below it.
int reorder_sign(unsigned a, unsigned b) {
  int swaps = 0;
  for (unsigned t = a >> 1; t != 0; t >>= 1) swaps += std::popcount(t & b);
  return (swaps & 1) ? -1 : 1;
}

// e0^2 = -1, ei^2 = +1. Shared generators of a and b contract.
double metric_contraction(unsigned common) {
  return (common & 1u) ? -1.0 : 1.0;
}

double blade_product_sign(unsigned a, unsigned b) {
  return reorder_sign(a, b) * metric_contraction(a & b);
}

std::vector<unsigned> make_canonical_order(int size) {
  std::vector<unsigned> order(size);
  for (int m = 0; m < size; ++m) order[m] = static_cast<unsigned>(m);
  std::sort(order.begin(), order.end(), [](unsigned a, unsigned b) {
    int ga = std::popcount(a), gb = std::popcount(b);
    if (ga != gb) return ga < gb;
    // Lexicographic on ascending generator lists: compare lowest set bits.
    while (a && b) {
      int la = std::countr_zero(a), lb = std::countr_zero(b);
      if (la != lb) return la < lb;
      a &= a - 1;
      b &= b - 1;
    }
    return false;
  });
  return order;
}

std::vector<DisplayBlade> make_display(Space s) {
  switch (s) {
    case Space::H1:
      return {{"1", 0, 1.0}, {"e0", 1, 1.0}, {"e1", 2, 1.0}, {"e01", 3, 1.0}};
    case Space::H2:
      return {{"1", 0, 1.0},
              {"e0", 1, 1.0},   {"e1", 2, 1.0},  {"e2", 4, 1.0},
              {"e12", 6, 1.0},  {"e20", 5, -1.0}, {"e01", 3, 1.0},
              {"e012", 7, 1.0}};
    case Space::H3:
      return {{"1", 0, 1.0},
              {"e0", 1, 1.0},    {"e1", 2, 1.0},    {"e2", 4, 1.0},   {"e3", 8, 1.0},
              {"e10", 3, -1.0},  {"e20", 5, -1.0},  {"e30", 9, -1.0},
              {"e23", 12, 1.0},  {"e31", 10, -1.0}, {"e12", 6, 1.0},
              {"e123", 14, 1.0}, {"e320", 13, -1.0}, {"e130", 11, 1.0}, {"e210", 7, -1.0},
              {"e0123", 15, 1.0}};
  }
  std::abort();
}

Algebra build(Space s) {
  Algebra a;
  a.space = s;
  a.dim = static_cast<int>(s);
  a.gens = a.dim + 1;
  a.size = 1 << a.gens;
  a.full = static_cast<unsigned>(a.size - 1);

  for (int m = 0; m < a.size; ++m) {
    int g = std::popcount(static_cast<unsigned>(m));
    a.grade_of[m] = static_cast<std::uint8_t>(g);
    a.rev_sign[m] = ((g * (g - 1) / 2) & 1) ? -1.0 : 1.0;
    a.metric_sq[m] = a.rev_sign[m] * blade_product_sign(m, m);
  }

  for (unsigned i = 0; i < static_cast<unsigned>(a.size); ++i) {
    for (unsigned k = 0; k < static_cast<unsigned>(a.size); ++k) {
      unsigned j = i ^ k;
      double s_gp = blade_product_sign(i, j);
      a.gp_x[i * a.size + k] = s_gp;
      a.wedge_x[i * a.size + k] = (i & j) ? 0.0 : s_gp;
      int gi = a.grade_of[i], gj = a.grade_of[j], gk = a.grade_of[k];
      a.inner_x[i * a.size + k] = (gk == std::abs(gi - gj)) ? s_gp : 0.0;
    }
  }

  a.I_sq = blade_product_sign(a.full, a.full);

  for (unsigned m = 0; m < static_cast<unsigned>(a.size); ++m) {
    unsigned c = a.comp(m);
    // Complement fixed by e_S ^ J(e_S) = I; disjoint factors, so the wedge
    // sign is the product sign.
    a.j_sign[m] = blade_product_sign(m, c);  // reorder only, no contraction
    a.dual_sign[m] = a.gp_sign(m, a.full);
    a.undual_sign[m] = a.dual_sign[m] * a.I_sq;
  }
  for (unsigned m = 0; m < static_cast<unsigned>(a.size); ++m)
    a.jinv_sign[m] = a.j_sign[a.comp(m)];

  a.canonical_order = make_canonical_order(a.size);
  a.display = make_display(s);
  return a;
}

}  // namespace

const char* space_name(Space s) noexcept {
  switch (s) {
    case Space::H1: return "H1";
    case Space::H2: return "H2";
    case Space::H3: return "H3";
  }
  return "?";
}

bool space_from_name(const std::string& name, Space& out) noexcept {
  if (name == "H1" || name == "h1") { out = Space::H1; return true; }
  if (name == "H2" || name == "h2") { out = Space::H2; return true; }
  if (name == "H3" || name == "h3") { out = Space::H3; return true; }
  return false;
}

std::string Algebra::blade_name(unsigned mask) const {
  if (mask == 0) return "1";
  std::string s = "e";
  for (int g = 0; g < gens; ++g)
    if (mask & (1u << g)) s += static_cast<char>('0' + g);
  return s;
}

const Algebra& algebra(Space s) {
  static const Algebra h1 = build(Space::H1);
  static const Algebra h2 = build(Space::H2);
  static const Algebra h3 = build(Space::H3);
  switch (s) {
    case Space::H1: return h1;
    case Space::H2: return h2;
    default: return h3;
  }
}

const Algebra& algebra_for_dim(int d) { return algebra(static_cast<Space>(d)); }

}  // namespace hpga
