#include "korbit/orbit_graph.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <sstream>
#include <utility>

#include "korbit/error.hpp"

namespace korbit {

namespace {

struct ClassVertex {
  Involution vertex;
  std::vector<std::uint64_t> neighbor_codes;
};

// Neighbor lists of every w0-conjugate, built once per m; sweeps query
// them for every interval.
const std::vector<ClassVertex>& w0_class_graph(int m) {
  static std::mutex mutex;
  static std::unique_ptr<std::vector<ClassVertex>> cache[kMaxDeskM + 1];
  std::lock_guard lock(mutex);
  auto& slot = cache[m];
  if (!slot) {
    auto graph = std::make_unique<std::vector<ClassVertex>>();
    for (Involution& c : w0_class(m)) {
      ClassVertex cv{std::move(c), {}};
      for (const Involution& nu : neighbors(cv.vertex).neighbors) {
        cv.neighbor_codes.push_back(nu.code());
      }
      graph->push_back(std::move(cv));
    }
    slot = std::move(graph);
  }
  return *slot;
}

}  // namespace

bool NeighborSet::contains(const Permutation& v) const {
  return std::binary_search(neighbors.begin(), neighbors.end(), v,
                            [](const Permutation& a, const Permutation& b) { return a < b; });
}

NeighborSet neighbors(const Involution& mu) {
  const int m = mu.size();
  const bool even = m % 2 == 0;
  std::vector<Involution> out;
  for (const Transposition& t : all_transpositions(m)) {
    Involution nu = conjugate(mu, t);
    if (nu != mu) {
      out.push_back(std::move(nu));
    } else if (even) {
      out.emplace_back(compose(t.as_permutation(), mu));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return NeighborSet{mu, std::move(out)};
}

int degree_in(const Involution& v, const Interval& I) {
  if (!I.contains(v)) {
    throw Error(ErrorKind::NotInInterval,
                format_perm(v) + " is not in the interval of " + format_perm(I.base()));
  }
  const NeighborSet ns = neighbors(v);
  return static_cast<int>(std::count_if(ns.neighbors.begin(), ns.neighbors.end(),
                                        [&](const Involution& nu) { return I.contains(nu); }));
}

int w0_degree(const Involution& pi) {
  // Only w0's neighbors matter, so compare them against pi directly.
  const PrefixProfile base(pi);
  const NeighborSet ns = neighbors(w0(pi.size()));
  return static_cast<int>(std::count_if(ns.neighbors.begin(), ns.neighbors.end(),
                                        [&](const Involution& nu) { return base.leq(PrefixProfile(nu)); }));
}

std::map<Involution, int> conjugate_degrees(const Interval& I) {
  std::map<Involution, int> out;
  if (I.m() > kMaxDeskM) {
    for (const Involution& c : w0_class(I.m())) {
      if (I.contains(c)) out.emplace(c, degree_in(c, I));
    }
    return out;
  }
  for (const ClassVertex& cv : w0_class_graph(I.m())) {
    if (!I.contains(cv.vertex)) continue;
    const auto degree = std::count_if(cv.neighbor_codes.begin(), cv.neighbor_codes.end(),
                                      [&](std::uint64_t code) { return I.contains_code(code); });
    out.emplace(cv.vertex, static_cast<int>(degree));
  }
  return out;
}

std::map<Involution, int> conjugate_degrees(const Involution& pi) {
  return conjugate_degrees(interval(pi));
}

std::map<Involution, int> vertex_degrees(const Interval& I) {
  std::map<Involution, int> out;
  for (const Involution& v : I.members()) out.emplace(v, degree_in(v, I));
  return out;
}

std::string export_dot(const Interval& I) {
  if (I.size() > kMaxDotVertices) {
    throw Error(ErrorKind::TooLarge, "interval has " + std::to_string(I.size()) +
                                         " vertices; DOT export is limited to " +
                                         std::to_string(kMaxDotVertices));
  }
  std::ostringstream os;
  os << "graph \"I(" << format_perm(I.base()) << ")\" {\n";
  for (const Involution& v : I.members()) {
    os << "  \"" << format_perm(v) << "\";\n";
  }
  // Members are sorted, so emitting u--v for u < v in member order is
  // deterministic.
  for (const Involution& u : I.members()) {
    for (const Involution& v : neighbors(u).neighbors) {
      if (u < v && I.contains(v)) {
        os << "  \"" << format_perm(u) << "\" -- \"" << format_perm(v) << "\";\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace korbit
