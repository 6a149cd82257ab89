#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace korbit {

/// A permutation of {1..m} in one-line notation. Positions and values are
/// 1-based at the interface; storage is a plain vector of values.
class Permutation {
 public:
  Permutation() = default;
  /// Throws MalformedInput unless `entries` is a bijection of {1..m}.
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int m);

  int size() const { return static_cast<int>(entries_.size()); }
  /// Value at 1-based position i.
  int operator()(int i) const { return entries_[static_cast<std::size_t>(i - 1)]; }
  std::span<const int> entries() const { return entries_; }

  Permutation inverse() const;
  bool is_involution() const;

  /// Compact key used for hashing; valid for m <= 15.
  std::uint64_t code() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) {
    return a.entries_ <=> b.entries_;
  }

 private:
  std::vector<int> entries_;
};

/// Self-inverse permutation; indexes an O(m)-orbit on the flag variety.
class Involution : public Permutation {
 public:
  Involution() = default;
  /// Throws MalformedInput if `p` is not self-inverse.
  explicit Involution(Permutation p);
  explicit Involution(std::vector<int> entries)
      : Involution(Permutation(std::move(entries))) {}

  static Involution identity(int m) { return Involution(Permutation::identity(m)); }
};

/// The swap of positions a < b in S_m.
struct Transposition {
  int a = 1;
  int b = 2;
  int m = 2;

  Transposition(int a, int b, int m);

  Permutation as_permutation() const;
  int apply(int i) const { return i == a ? b : (i == b ? a : i); }
};

/// All m(m-1)/2 transpositions of S_m, ordered by (a, b).
std::vector<Transposition> all_transpositions(int m);

/// Digit string ("21435", m <= 9) or comma separated ("10,2,...,1").
Permutation parse_perm(std::string_view text);
Involution parse_involution(std::string_view text);

/// Digit string for m <= 9, comma separated otherwise.
std::string format_perm(const Permutation& p);

Involution w0(int m);

/// (p o q)(i) = p(q(i)).
Permutation compose(const Permutation& p, const Permutation& q);

/// t mu t.
Involution conjugate(const Involution& mu, const Transposition& t);

std::vector<int> fixed_points(const Involution& pi);
std::vector<std::pair<int, int>> two_cycles(const Involution& pi);

/// Inserts a new fixed point at position pos (1 <= pos <= m+1), shifting
/// every index and value >= pos up by one.
Involution insert_fixed_point(const Involution& pi, int pos);

/// Inverse of insert_fixed_point: removes a fixed point at pos and
/// standardizes. Throws PositionOutOfRange if pos is not a fixed point.
Involution delete_fixed_point(const Involution& pi, int pos);

/// All involutions in S_m, lexicographic in one-line notation.
std::vector<Involution> enumerate_involutions(int m);

/// I(m) via I(m) = I(m-1) + (m-1) I(m-2).
std::uint64_t involution_count(int m);

/// Involutions with the cycle type of w0: floor(m/2) two-cycles.
std::vector<Involution> w0_class(int m);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const {
    return std::hash<std::uint64_t>{}(p.code());
  }
};

}  // namespace korbit
