#pragma once

#include <optional>
#include <string>
#include <vector>

#include "korbit/perm.hpp"

namespace korbit {

enum class PatternQualifier {
  None,
  /// Only occurrences of 2143 with an even number of fixed points of pi
  /// strictly between the two pairs.
  EvenFixedBetween,
};

struct PatternSpec {
  Involution pattern;
  PatternQualifier qualifier = PatternQualifier::None;

  static PatternSpec plain(std::string_view text);
  static PatternSpec qualified_2143();

  /// One-line notation, with a trailing "(even)" for qualified specs.
  std::string name() const;
};

/// One occurrence: a pi-invariant index set whose standardization is the
/// pattern. fixed_between is set for pattern 2143 only.
struct PatternHit {
  std::vector<int> indices;
  Involution induced;
  std::optional<int> fixed_between;

  friend bool operator==(const PatternHit&, const PatternHit&) = default;
};

/// Pattern of pi restricted to `indices` (sorted, pi-invariant), relabeled
/// to 1..r.
Involution standardize(const Involution& pi, const std::vector<int>& indices);

/// Every occurrence of p in pi, ordered lexicographically by index set.
std::vector<PatternHit> occurrences(const Involution& pi, const PatternSpec& p);
std::optional<PatternHit> first_occurrence(const Involution& pi, const PatternSpec& p);
bool contains(const Involution& pi, const PatternSpec& p);

/// The twenty-four patterns whose presence forces a rationally singular
/// orbit closure, in their customary order.
const std::vector<PatternSpec>& bad_patterns();

struct PatternCertificate {
  PatternSpec spec;
  PatternHit hit;
};

struct SingularityCertificate {
  bool singular = false;
  std::vector<PatternCertificate> certificates;
};

/// Pattern-based singularity test: some bad pattern or a qualified 2143.
SingularityCertificate theorem1_singular(const Involution& pi);

bool conjectured_rationally_smooth(const Involution& pi);
/// Avoids every bad pattern, 2143 with no qualifier, and 1324.
bool conjectured_smooth(const Involution& pi);

}  // namespace korbit
