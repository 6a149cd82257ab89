#include "korbit/patterns.hpp"

#include <algorithm>
#include <functional>

namespace korbit {

namespace {

bool is_2143(const Involution& p) {
  return p.size() == 4 && p(1) == 2 && p(2) == 1 && p(3) == 4 && p(4) == 3;
}

int count_fixed_between(const Involution& pi, int lo, int hi) {
  int count = 0;
  for (int k = lo + 1; k < hi; ++k) {
    if (pi(k) == k) ++count;
  }
  return count;
}

/// Calls `visit` on every candidate hit in lexicographic order of index
/// sets; stops early when visit returns false.
void search(const Involution& pi, const PatternSpec& spec,
            const std::function<bool(PatternHit&&)>& visit) {
  const Involution& pat = spec.pattern;
  const int r = pat.size();
  if (r > pi.size()) return;
  const auto pi_fixed = fixed_points(pi);
  const auto pi_cycles = two_cycles(pi);
  const int want_fixed = static_cast<int>(fixed_points(pat).size());
  const int want_cycles = (r - want_fixed) / 2;
  if (want_fixed > static_cast<int>(pi_fixed.size()) ||
      want_cycles > static_cast<int>(pi_cycles.size())) {
    return;
  }
  const bool track_between = is_2143(pat);

  std::vector<PatternHit> found;
  std::vector<int> chosen_fixed, chosen_cycles;
  std::vector<int> indices;
  indices.reserve(static_cast<std::size_t>(r));

  auto emit = [&]() {
    indices.clear();
    for (int f : chosen_fixed) indices.push_back(pi_fixed[f]);
    for (int c : chosen_cycles) {
      indices.push_back(pi_cycles[c].first);
      indices.push_back(pi_cycles[c].second);
    }
    std::sort(indices.begin(), indices.end());
    Involution induced = standardize(pi, indices);
    if (induced != pat) return;
    PatternHit hit{indices, std::move(induced), std::nullopt};
    if (track_between) {
      const int between = count_fixed_between(pi, indices[1], indices[2]);
      hit.fixed_between = between;
      if (spec.qualifier == PatternQualifier::EvenFixedBetween && between % 2 != 0) return;
    }
    found.push_back(std::move(hit));
  };

  // Choose cycles, then fixed points.
  std::function<void(int)> pick_fixed = [&](int start) {
    if (static_cast<int>(chosen_fixed.size()) == want_fixed) {
      emit();
      return;
    }
    for (int f = start; f < static_cast<int>(pi_fixed.size()); ++f) {
      chosen_fixed.push_back(f);
      pick_fixed(f + 1);
      chosen_fixed.pop_back();
    }
  };
  std::function<void(int)> pick_cycles = [&](int start) {
    if (static_cast<int>(chosen_cycles.size()) == want_cycles) {
      pick_fixed(0);
      return;
    }
    for (int c = start; c < static_cast<int>(pi_cycles.size()); ++c) {
      chosen_cycles.push_back(c);
      pick_cycles(c + 1);
      chosen_cycles.pop_back();
    }
  };
  pick_cycles(0);

  std::sort(found.begin(), found.end(),
            [](const PatternHit& a, const PatternHit& b) { return a.indices < b.indices; });
  for (auto& hit : found) {
    if (!visit(std::move(hit))) return;
  }
}

}  // namespace

PatternSpec PatternSpec::plain(std::string_view text) {
  return PatternSpec{parse_involution(text), PatternQualifier::None};
}

PatternSpec PatternSpec::qualified_2143() {
  return PatternSpec{parse_involution("2143"), PatternQualifier::EvenFixedBetween};
}

std::string PatternSpec::name() const {
  std::string s = format_perm(pattern);
  if (qualifier == PatternQualifier::EvenFixedBetween) s += "(even)";
  return s;
}

Involution standardize(const Involution& pi, const std::vector<int>& indices) {
  std::vector<int> e;
  e.reserve(indices.size());
  for (int i : indices) {
    const auto it = std::lower_bound(indices.begin(), indices.end(), pi(i));
    e.push_back(static_cast<int>(it - indices.begin()) + 1);
  }
  return Involution(std::move(e));
}

std::vector<PatternHit> occurrences(const Involution& pi, const PatternSpec& p) {
  std::vector<PatternHit> out;
  search(pi, p, [&](PatternHit&& h) {
    out.push_back(std::move(h));
    return true;
  });
  return out;
}

std::optional<PatternHit> first_occurrence(const Involution& pi, const PatternSpec& p) {
  std::optional<PatternHit> out;
  search(pi, p, [&](PatternHit&& h) {
    out = std::move(h);
    return false;
  });
  return out;
}

bool contains(const Involution& pi, const PatternSpec& p) {
  return first_occurrence(pi, p).has_value();
}

const std::vector<PatternSpec>& bad_patterns() {
  static const std::vector<PatternSpec> list = [] {
    const char* texts[] = {
        "14325",    "426153",   "154326",    "124356",    "153624",   "351426",
        "213654",   "321465",   "3614725",   "1324657",   "2137654",  "4321576",
        "5276143",  "5472163",  "2135467",   "1243576",   "1657324",  "4651327",
        "57681324", "65872143", "13247856",  "34125768",  "341258967", "749258163",
    };
    std::vector<PatternSpec> v;
    for (const char* t : texts) v.push_back(PatternSpec::plain(t));
    return v;
  }();
  return list;
}

SingularityCertificate theorem1_singular(const Involution& pi) {
  SingularityCertificate cert;
  auto check = [&](const PatternSpec& spec) {
    if (auto hit = first_occurrence(pi, spec)) {
      cert.certificates.push_back({spec, std::move(*hit)});
    }
  };
  for (const auto& spec : bad_patterns()) check(spec);
  check(PatternSpec::qualified_2143());
  cert.singular = !cert.certificates.empty();
  return cert;
}

bool conjectured_rationally_smooth(const Involution& pi) {
  return !theorem1_singular(pi).singular;
}

bool conjectured_smooth(const Involution& pi) {
  for (const auto& spec : bad_patterns()) {
    if (contains(pi, spec)) return false;
  }
  return !contains(pi, PatternSpec::plain("2143")) && !contains(pi, PatternSpec::plain("1324"));
}

}  // namespace korbit
