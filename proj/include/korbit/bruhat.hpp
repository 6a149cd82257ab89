#pragma once

#include <cstdint>
#include <map>
#include <unordered_set>
#include <vector>

#include "korbit/perm.hpp"

namespace korbit {

/// Sorted prefixes of a permutation, concatenated: for i = 1..m the values
/// p(1..i) in increasing order. Two profiles compare in Bruhat order by a
/// single entrywise <= pass.
class PrefixProfile {
 public:
  explicit PrefixProfile(const Permutation& p);

  int size() const { return m_; }
  /// Entry j (1-based) of the sorted prefix of length i.
  int sorted_prefix_entry(int i, int j) const {
    return data_[static_cast<std::size_t>((i - 1) * i / 2 + (j - 1))];
  }
  /// True iff the owner of *this is <= the owner of `other` in Bruhat order.
  bool leq(const PrefixProfile& other) const;

 private:
  int m_ = 0;
  std::vector<std::uint8_t> data_;
};

/// u <= v in Bruhat order (sorted-prefix criterion). Throws SizeMismatch.
bool bruhat_leq(const Permutation& u, const Permutation& v);

/// floor(m^2 / 4), the rank of the identity and the dimension gap between
/// the open and closed orbits.
int max_rank(int m);

/// Dimension of O_pi minus that of the closed orbit O_{w0}.
int rank(const Involution& pi);

/// max_rank(m) - rank(pi).
int codim(const Involution& pi);

/// All involutions v with pi <= v in Bruhat order; equivalently the orbits
/// in the closure of O_pi. Members are stored in lexicographic order.
class Interval {
 public:
  Interval(Involution base, std::vector<Involution> members);

  const Involution& base() const { return base_; }
  int m() const { return base_.size(); }
  const std::vector<Involution>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool contains(const Permutation& v) const { return codes_.contains(v.code()); }
  bool contains_code(std::uint64_t code) const { return codes_.contains(code); }

  /// rank value -> number of members with that rank.
  std::map<int, int> rank_histogram() const;

 private:
  Involution base_;
  std::vector<Involution> members_;
  std::unordered_set<std::uint64_t> codes_;
};

/// Largest m for which intervals and sweeps are materialized.
inline constexpr int kMaxDeskM = 12;

/// Built by filtering the cached enumeration of I_m. Throws TooLarge for
/// m > kMaxDeskM.
Interval interval(const Involution& pi);

/// Cached lexicographic enumeration of I_m with precomputed profiles.
struct InvolutionTable {
  int m = 0;
  std::vector<Involution> involutions;
  std::vector<PrefixProfile> profiles;
};

/// Thread-safe; the table for each m is built once. Throws TooLarge.
const InvolutionTable& involution_table(int m);

}  // namespace korbit
