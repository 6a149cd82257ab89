#include "korbit/smoothness.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <set>
#include <sstream>
#include <thread>

#include "korbit/bruhat.hpp"
#include "korbit/orbit_graph.hpp"

namespace korbit {

namespace {

std::string join_indices(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(v[k]);
  }
  return s + "}";
}

std::string join_perms(const std::vector<Involution>& v, std::size_t limit) {
  if (v.empty()) return "none";
  std::string s;
  for (std::size_t k = 0; k < v.size() && k < limit; ++k) {
    if (k) s += ' ';
    s += format_perm(v[k]);
  }
  if (v.size() > limit) s += " ... (" + std::to_string(v.size() - limit) + " more)";
  return s;
}

std::string pattern_names(const ClassificationReport& rep) {
  if (rep.theorem1_certificates.empty()) return "-";
  std::string s;
  for (const auto& c : rep.theorem1_certificates) {
    if (!s.empty()) s += ',';
    s += c.spec.name();
  }
  return s;
}

/// First conjugate in the interval whose degree exceeds r.
std::optional<std::pair<Involution, int>> excess_conjugate(const ClassificationReport& rep) {
  for (const auto& [c, d] : rep.conjugate_degrees) {
    if (d > rep.r) return std::make_pair(c, d);
  }
  return std::nullopt;
}

std::string degree_summary(const ClassificationReport& rep) {
  std::ostringstream os;
  os << "w0 degree=" << rep.w0_degree << " r=" << rep.r;
  if (auto ex = excess_conjugate(rep)) {
    os << "; conjugate " << format_perm(ex->first) << " has degree " << ex->second;
  }
  return os.str();
}

std::vector<Involution> single_insertions(const Involution& pi) {
  std::set<Involution> out;
  for (int pos = 1; pos <= pi.size() + 1; ++pos) out.insert(insert_fixed_point(pi, pos));
  return {out.begin(), out.end()};
}

/// 2143 with fixed points inserted into the five gaps around its entries;
/// gap 2 is the one strictly between the two pairs.
Involution pad_2143(const std::array<int, 5>& gaps) {
  std::vector<int> slots;  // 0 = fixed point, k = k-th letter of 2143
  for (int g = 0; g < 5; ++g) {
    for (int k = 0; k < gaps[g]; ++k) slots.push_back(0);
    if (g < 4) slots.push_back(g + 1);
  }
  const int m = static_cast<int>(slots.size());
  int pos_of[5] = {};
  for (int i = 0; i < m; ++i) {
    if (slots[i]) pos_of[slots[i]] = i + 1;
  }
  std::vector<int> e(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) e[i] = i + 1;
  auto swap_pair = [&](int a, int b) {
    e[pos_of[a] - 1] = pos_of[b];
    e[pos_of[b] - 1] = pos_of[a];
  };
  swap_pair(1, 2);
  swap_pair(3, 4);
  return Involution(std::move(e));
}

}  // namespace

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::RationallySmooth: return "RationallySmooth";
    case Verdict::RationallySingular: return "RationallySingular";
    case Verdict::NotApplicable: return "NotApplicable";
  }
  return "?";
}

bool ClassificationReport::degree_singular() const {
  if (m % 2 == 0) return verdict_even_m == Verdict::RationallySingular;
  return !brion_pass;
}

ClassificationReport classify(const Involution& pi) {
  ClassificationReport rep;
  rep.pi = pi;
  rep.m = pi.size();
  rep.r = rank(pi);
  rep.codim = max_rank(rep.m) - rep.r;
  const Interval I = interval(pi);
  rep.w0_degree = degree_in(w0(rep.m), I);
  rep.conjugate_degrees = conjugate_degrees(I);
  rep.brion_pass = true;
  for (const auto& [c, d] : rep.conjugate_degrees) {
    if (d != rep.r) {
      rep.brion_pass = false;
      rep.brion_witness = c;
      break;
    }
  }
  if (rep.m % 2 == 0) {
    rep.verdict_even_m =
        rep.w0_degree == rep.r ? Verdict::RationallySmooth : Verdict::RationallySingular;
  }
  auto cert = theorem1_singular(pi);
  rep.theorem1_certificates = std::move(cert.certificates);
  rep.conjectured_rationally_smooth = rep.theorem1_certificates.empty();
  rep.conjectured_smooth = conjectured_smooth(pi);
  return rep;
}

std::string format_report_text(const ClassificationReport& rep) {
  std::ostringstream os;
  os << "involution       " << format_perm(rep.pi) << "\n"
     << "m                " << rep.m << "\n"
     << "rank r           " << rep.r << "\n"
     << "codim            " << rep.codim << "\n"
     << "w0 degree        " << rep.w0_degree << "\n"
     << "verdict          " << to_string(rep.verdict_even_m);
  if (rep.m % 2 != 0) os << " (odd m)";
  os << "\n"
     << "brion            " << (rep.brion_pass ? "pass" : "fail");
  if (rep.brion_witness) {
    os << " (witness " << format_perm(*rep.brion_witness) << " has degree "
       << rep.conjugate_degrees.at(*rep.brion_witness) << ")";
  }
  os << "\n"
     << "conjugate degrees\n";
  for (const auto& [c, d] : rep.conjugate_degrees) {
    os << "  " << format_perm(c) << "  " << d << (d == rep.r ? "" : " *") << "\n";
  }
  os << "patterns         ";
  if (rep.theorem1_certificates.empty()) {
    os << "none\n";
  } else {
    os << "\n";
    for (const auto& c : rep.theorem1_certificates) {
      os << "  " << c.spec.name() << " at " << join_indices(c.hit.indices);
      if (c.hit.fixed_between) os << " fixed_between=" << *c.hit.fixed_between;
      os << "\n";
    }
  }
  os << "conjectured rationally smooth  " << (rep.conjectured_rationally_smooth ? "yes" : "no")
     << "\n"
     << "conjectured smooth             " << (rep.conjectured_smooth ? "yes" : "no") << "\n";
  return os.str();
}

std::string format_report_record(const ClassificationReport& rep) {
  std::ostringstream os;
  os << "perm=" << format_perm(rep.pi) << " m=" << rep.m << " r=" << rep.r
     << " codim=" << rep.codim << " deg_w0=" << rep.w0_degree
     << " verdict=" << to_string(rep.verdict_even_m)
     << " brion=" << (rep.brion_pass ? "pass" : "fail") << " patterns=" << pattern_names(rep)
     << " conj_rs=" << (rep.conjectured_rationally_smooth ? 1 : 0)
     << " conj_smooth=" << (rep.conjectured_smooth ? 1 : 0);
  return os.str();
}

bool SweepReport::coherent() const {
  if (m % 2 != 0) return true;
  return pattern_singular_degree_smooth.empty() && smooth_but_brion_fail.empty();
}

unsigned default_thread_count() {
  if (const char* env = std::getenv("ORBIT_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

SweepReport sweep(int m, unsigned threads) {
  const auto start = std::chrono::steady_clock::now();
  const InvolutionTable& table = involution_table(m);
  if (threads == 0) threads = default_thread_count();
  const std::size_t total = table.involutions.size();
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(total, 1)));

  SweepReport rep;
  rep.m = m;
  rep.threads = threads;
  rep.rows.resize(total);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < total; k = next++) {
      rep.rows[k] = classify(table.involutions[k]);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  // Rows follow the table order, which is lexicographic.
  for (const auto& row : rep.rows) {
    const bool deg_sing = row.degree_singular();
    if (deg_sing) rep.degree_singular.push_back(row.pi);
    if (row.pattern_singular() && !deg_sing) rep.pattern_singular_degree_smooth.push_back(row.pi);
    if (!row.pattern_singular() && deg_sing) rep.pattern_avoiding_degree_singular.push_back(row.pi);
    if (m % 2 == 0 && row.verdict_even_m == Verdict::RationallySmooth && !row.brion_pass) {
      rep.smooth_but_brion_fail.push_back(row.pi);
    }
  }
  rep.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

std::string format_sweep_text(const SweepReport& rep) {
  std::ostringstream os;
  os << "# sweep m=" << rep.m << " threads=" << rep.threads << " elapsed_ms=" << std::fixed
     << std::setprecision(1) << rep.elapsed_ms << "\n";
  const int w = std::max(6, rep.m <= 9 ? rep.m : 3 * rep.m);
  os << std::left << std::setw(w) << "perm" << "  " << std::right << std::setw(3) << "r" << " "
     << std::setw(5) << "codim" << " " << std::setw(6) << "deg_w0" << "  " << std::left
     << std::setw(18) << "verdict" << " " << std::setw(5) << "brion" << " patterns\n";
  for (const auto& row : rep.rows) {
    os << std::left << std::setw(w) << format_perm(row.pi) << "  " << std::right << std::setw(3)
       << row.r << " " << std::setw(5) << row.codim << " " << std::setw(6) << row.w0_degree
       << "  " << std::left << std::setw(18) << to_string(row.verdict_even_m) << " "
       << std::setw(5) << (row.brion_pass ? "pass" : "fail") << " " << pattern_names(row) << "\n";
  }
  os << std::right;
  constexpr std::size_t kListLimit = 20;
  if (rep.m % 2 == 0) {
    os << rep.rows.size() << " involutions, " << rep.degree_singular.size()
       << " rationally singular: " << join_perms(rep.degree_singular, kListLimit) << "\n";
  } else {
    os << rep.rows.size() << " involutions, " << rep.degree_singular.size()
       << " fail the all-conjugates degree test: " << join_perms(rep.degree_singular, kListLimit)
       << "\n";
  }
  os << "pattern-singular but degree-smooth: "
     << join_perms(rep.pattern_singular_degree_smooth, kListLimit) << "\n";
  os << "pattern-avoiding but degree-singular: "
     << join_perms(rep.pattern_avoiding_degree_singular, kListLimit) << "\n";
  if (rep.m % 2 == 0) {
    os << "degree-smooth but conjugate degree mismatch: "
       << join_perms(rep.smooth_but_brion_fail, kListLimit) << "\n";
    os << "coherence: " << (rep.coherent() ? "ok" : "VIOLATED") << "\n";
  }
  return os.str();
}

std::string format_sweep_records(const SweepReport& rep) {
  std::string out;
  for (const auto& row : rep.rows) {
    out += format_report_record(row);
    out += '\n';
  }
  return out;
}

bool PaperCheckResult::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const PaperCheck& c) { return c.pass; });
}

PaperCheckResult verify_paper_cases() {
  PaperCheckResult res;
  const std::set<std::string> bottom_exceptions = {"2137654", "4321576"};
  const std::vector<std::string> extension_exceptions = {"2134765", "3214576", "2137564",
                                                         "4231576"};

  // Bottom-vertex degree equals r but some conjugate is too large.
  auto conjugate_excess_check = [](const std::string& item, const Involution& pi) {
    const auto rep = classify(pi);
    const bool pass = rep.w0_degree == rep.r && excess_conjugate(rep).has_value();
    return PaperCheck{item, format_perm(pi), pass, degree_summary(rep)};
  };

  // (a) the bad patterns themselves.
  for (const auto& spec : bad_patterns()) {
    const std::string name = format_perm(spec.pattern);
    if (bottom_exceptions.contains(name)) {
      res.checks.push_back(conjugate_excess_check("a", spec.pattern));
    } else {
      const int d = w0_degree(spec.pattern);
      const int r = rank(spec.pattern);
      res.checks.push_back({"a", name, d > r,
                            "w0 degree=" + std::to_string(d) + " r=" + std::to_string(r)});
    }
  }

  // (b) fixed-point extensions where only a conjugate detects singularity.
  std::set<Involution> exceptions;
  for (const auto& text : extension_exceptions) {
    const Involution pi = parse_involution(text);
    exceptions.insert(pi);
    res.checks.push_back(conjugate_excess_check("b", pi));
  }

  // (c) one added fixed point: the bottom vertex already has too large a
  // degree, apart from the (b) cases; extending those once more also
  // restores the bottom-vertex excess.
  auto insertion_check = [&](const std::string& subject, const Involution& base,
                             bool skip_exceptions) {
    int checked = 0;
    std::vector<std::string> failures;
    for (const Involution& sigma : single_insertions(base)) {
      if (sigma.size() > kMaxInsertionM) continue;
      if (skip_exceptions && exceptions.contains(sigma)) continue;
      ++checked;
      const int d = w0_degree(sigma);
      const int r = rank(sigma);
      if (d <= r) {
        failures.push_back(format_perm(sigma) + "(deg " + std::to_string(d) + ", r " +
                           std::to_string(r) + ")");
      }
    }
    std::string detail = std::to_string(checked) + " insertions checked";
    for (const auto& f : failures) detail += "; fails " + f;
    res.checks.push_back({"c", subject, failures.empty(), detail});
  };
  for (const auto& spec : bad_patterns()) {
    insertion_check(format_perm(spec.pattern) + "+1", spec.pattern, true);
  }
  for (const Involution& pi : exceptions) insertion_check(format_perm(pi) + "+1", pi, false);

  // (d) 2143 plus one fixed point outside the middle gap. Several
  // conjugates of w0 in the interval fix the new point; the distinguished
  // one reverses every other position, i.e. w0 of the remaining letters
  // with the fixed point put back. It must lie in the interval and have
  // degree larger than r.
  auto fixed_conjugate_check = [](const std::string& item, const ClassificationReport& rep,
                                  int pos) {
    const Involution top = insert_fixed_point(w0(rep.m - 1), pos);
    const auto it = rep.conjugate_degrees.find(top);
    const bool pass = it != rep.conjugate_degrees.end() && it->second > rep.r;
    std::string detail = "w0 degree=" + std::to_string(rep.w0_degree) +
                         " r=" + std::to_string(rep.r) + "; conjugate " + format_perm(top);
    detail += it == rep.conjugate_degrees.end() ? " not in interval"
                                                : " has degree " + std::to_string(it->second);
    return PaperCheck{item, format_perm(rep.pi), pass, detail};
  };
  const Involution base_2143 = parse_involution("2143");
  for (int pos : {1, 2, 4, 5}) {
    res.checks.push_back(fixed_conjugate_check("d", classify(insert_fixed_point(base_2143, pos)), pos));
  }

  // (e) 21435: the bottom-vertex test passes at odd m although the closure
  // is singular.
  {
    const auto rep = classify(parse_involution("21435"));
    PaperCheck check = fixed_conjugate_check("e", rep, 5);
    const bool qualified = std::any_of(
        rep.theorem1_certificates.begin(), rep.theorem1_certificates.end(),
        [](const PatternCertificate& c) { return c.spec.qualifier == PatternQualifier::EvenFixedBetween; });
    check.pass = check.pass && rep.w0_degree == rep.r && rep.r == 4 && !rep.brion_pass &&
                 qualified && format_perm(insert_fixed_point(w0(4), 5)) == "43215";
    check.detail += std::string("; qualified 2143 ") + (qualified ? "found" : "missing");
    res.checks.push_back(std::move(check));
  }

  // (f) 2143 with two or more added fixed points, an even number of them
  // between the pairs: some conjugate of w0 (usually w0 itself) has degree
  // larger than r.
  {
    int checked = 0;
    int at_bottom = 0;
    std::vector<std::string> failures;
    for (int total = 2; total <= 4; ++total) {
      std::array<int, 5> gaps{};
      for (gaps[0] = 0; gaps[0] <= total; ++gaps[0])
        for (gaps[1] = 0; gaps[0] + gaps[1] <= total; ++gaps[1])
          for (gaps[2] = 0; gaps[0] + gaps[1] + gaps[2] <= total; gaps[2] += 2)
            for (gaps[3] = 0; gaps[0] + gaps[1] + gaps[2] + gaps[3] <= total; ++gaps[3]) {
              gaps[4] = total - gaps[0] - gaps[1] - gaps[2] - gaps[3];
              const auto rep = classify(pad_2143(gaps));
              ++checked;
              if (rep.w0_degree > rep.r) {
                ++at_bottom;
              } else if (!excess_conjugate(rep)) {
                failures.push_back(format_perm(rep.pi));
              }
            }
    }
    std::string detail = std::to_string(checked) + " placements of 2..4 points, " +
                         std::to_string(at_bottom) + " detected at w0";
    for (const auto& f : failures) detail += "; fails " + f;
    res.checks.push_back({"f", "2143+even", failures.empty(), detail});
  }
  return res;
}

std::string format_paper_checks(const PaperCheckResult& res) {
  std::ostringstream os;
  for (const auto& c : res.checks) {
    os << (c.pass ? "PASS" : "FAIL") << " (" << c.item << ") " << c.subject << ": " << c.detail
       << "\n";
  }
  const auto passed = std::count_if(res.checks.begin(), res.checks.end(),
                                    [](const PaperCheck& c) { return c.pass; });
  os << passed << "/" << res.checks.size() << " checks passed\n";
  return os.str();
}

}  // namespace korbit
