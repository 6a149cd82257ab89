#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "korbit/patterns.hpp"
#include "korbit/perm.hpp"

namespace korbit {

enum class Verdict { RationallySmooth, RationallySingular, NotApplicable };

const char* to_string(Verdict v);

struct ClassificationReport {
  Involution pi;
  int m = 0;
  int r = 0;
  int codim = 0;
  int w0_degree = 0;
  std::map<Involution, int> conjugate_degrees;
  std::vector<PatternCertificate> theorem1_certificates;
  /// Degree criterion at the bottom vertex; decided only for even m.
  Verdict verdict_even_m = Verdict::NotApplicable;
  /// Every w0-conjugate in the interval has degree r.
  bool brion_pass = false;
  /// First conjugate whose degree differs from r, if any.
  std::optional<Involution> brion_witness;
  bool conjectured_rationally_smooth = false;
  bool conjectured_smooth = false;

  bool pattern_singular() const { return !theorem1_certificates.empty(); }
  /// Degree-based singularity: the bottom-vertex verdict for even m, the
  /// all-conjugates test for odd m.
  bool degree_singular() const;
};

ClassificationReport classify(const Involution& pi);

/// Human-readable multi-line report.
std::string format_report_text(const ClassificationReport& rep);
/// One `key=value` line: perm m r codim deg_w0 verdict brion patterns,
/// followed by conj_rs and conj_smooth.
std::string format_report_record(const ClassificationReport& rep);

struct SweepReport {
  int m = 0;
  std::vector<ClassificationReport> rows;
  std::vector<Involution> degree_singular;
  /// Must be empty for even m.
  std::vector<Involution> pattern_singular_degree_smooth;
  /// Informational: the open sufficiency direction.
  std::vector<Involution> pattern_avoiding_degree_singular;
  /// Even m: bottom-vertex smooth yet some conjugate has the wrong degree.
  /// Must be empty.
  std::vector<Involution> smooth_but_brion_fail;
  unsigned threads = 1;
  double elapsed_ms = 0.0;

  /// False iff an even-m consistency violation was found.
  bool coherent() const;
};

/// Thread count from ORBIT_THREADS, else hardware concurrency.
unsigned default_thread_count();

/// Classifies every involution of S_m. Output is independent of `threads`
/// (0 means default_thread_count()). Throws TooLarge for m > kMaxDeskM.
SweepReport sweep(int m, unsigned threads = 0);

/// Table plus summary. Lines starting with '#' carry timing only.
std::string format_sweep_text(const SweepReport& rep);
std::string format_sweep_records(const SweepReport& rep);

struct PaperCheck {
  std::string item;     // "a".."f"
  std::string subject;  // involution or family under test
  bool pass = false;
  std::string detail;
};

struct PaperCheckResult {
  std::vector<PaperCheck> checks;
  bool all_pass() const;
};

/// Resulting size cap for the single-fixed-point insertion checks.
inline constexpr int kMaxInsertionM = 10;

/// Re-runs every computation used in the singularity case analysis for
/// the bad patterns, their fixed-point extensions and the 2143 family.
PaperCheckResult verify_paper_cases();

std::string format_paper_checks(const PaperCheckResult& res);

}  // namespace korbit
