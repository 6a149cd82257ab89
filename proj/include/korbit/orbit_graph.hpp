#pragma once

#include <map>
#include <string>
#include <vector>

#include "korbit/bruhat.hpp"
#include "korbit/perm.hpp"

namespace korbit {

/// Distinct vertices adjacent to `center`: nu = t center t != center for a
/// transposition t, plus (m even only) nu = t center whenever t commutes
/// with center. Neighbors are kept in lexicographic order.
struct NeighborSet {
  Involution center;
  std::vector<Involution> neighbors;

  bool contains(const Permutation& v) const;
};

NeighborSet neighbors(const Involution& mu);

/// Number of neighbors of v lying in I. Throws NotInInterval.
int degree_in(const Involution& v, const Interval& I);

/// Degree of the bottom vertex w0 in I_pi.
int w0_degree(const Involution& pi);

/// Degree within I_pi of every conjugate of w0 lying in I_pi.
std::map<Involution, int> conjugate_degrees(const Involution& pi);
std::map<Involution, int> conjugate_degrees(const Interval& I);

/// Per-vertex degrees for the whole interval.
std::map<Involution, int> vertex_degrees(const Interval& I);

inline constexpr std::size_t kMaxDotVertices = 5000;

/// DOT text of the interval graph. Throws TooLarge above kMaxDotVertices.
std::string export_dot(const Interval& I);

}  // namespace korbit
