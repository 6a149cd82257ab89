#include "korbit/perm.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "korbit/error.hpp"

namespace korbit {

namespace {

void require_same_size(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw Error(ErrorKind::SizeMismatch,
                "permutation sizes differ: " + std::to_string(p.size()) +
                    " vs " + std::to_string(q.size()));
  }
}

void enumerate_rec(std::vector<int>& cur, std::vector<bool>& used, int pos,
                   std::vector<Involution>& out) {
  const int m = static_cast<int>(cur.size());
  while (pos < m && used[pos]) ++pos;
  if (pos == m) {
    out.emplace_back(cur);
    return;
  }
  // Position pos+1 is the smallest unassigned index. Choosing its image in
  // increasing order keeps the output lexicographic.
  used[pos] = true;
  cur[pos] = pos + 1;
  enumerate_rec(cur, used, pos + 1, out);
  for (int k = pos + 1; k < m; ++k) {
    if (used[k]) continue;
    used[k] = true;
    cur[pos] = k + 1;
    cur[k] = pos + 1;
    enumerate_rec(cur, used, pos + 1, out);
    used[k] = false;
  }
  used[pos] = false;
}

}  // namespace

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const int m = size();
  std::vector<bool> seen(entries_.size(), false);
  for (int v : entries_) {
    if (v < 1 || v > m) {
      throw Error(ErrorKind::MalformedInput,
                  "value " + std::to_string(v) + " out of range 1.." + std::to_string(m));
    }
    if (seen[v - 1]) {
      throw Error(ErrorKind::MalformedInput, "repeated value " + std::to_string(v));
    }
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int m) {
  std::vector<int> e(static_cast<std::size_t>(m));
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(entries_.size());
  for (int i = 1; i <= size(); ++i) inv[(*this)(i) - 1] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_involution() const {
  for (int i = 1; i <= size(); ++i) {
    if ((*this)((*this)(i)) != i) return false;
  }
  return true;
}

std::uint64_t Permutation::code() const {
  std::uint64_t c = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    c |= static_cast<std::uint64_t>(entries_[i]) << (4 * i);
  }
  return c;
}

Involution::Involution(Permutation p) : Permutation(std::move(p)) {
  if (!is_involution()) {
    throw Error(ErrorKind::MalformedInput, format_perm(*this) + " is not an involution");
  }
}

Transposition::Transposition(int a_, int b_, int m_) : a(a_), b(b_), m(m_) {
  if (a > b) std::swap(a, b);
  if (a < 1 || b > m || a == b) {
    throw Error(ErrorKind::PositionOutOfRange,
                "bad transposition (" + std::to_string(a_) + "," + std::to_string(b_) +
                    ") in S_" + std::to_string(m_));
  }
}

Permutation Transposition::as_permutation() const {
  std::vector<int> e(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) e[i - 1] = apply(i);
  return Permutation(std::move(e));
}

std::vector<Transposition> all_transpositions(int m) {
  std::vector<Transposition> ts;
  ts.reserve(static_cast<std::size_t>(m * (m - 1) / 2));
  for (int a = 1; a <= m; ++a) {
    for (int b = a + 1; b <= m; ++b) ts.emplace_back(a, b, m);
  }
  return ts;
}

Permutation parse_perm(std::string_view text) {
  if (text.empty()) throw Error(ErrorKind::MalformedInput, "empty permutation");
  std::vector<int> entries;
  if (text.find(',') == std::string_view::npos) {
    if (text.size() > 9) {
      throw Error(ErrorKind::MalformedInput,
                  "digit-string notation is limited to m <= 9; use commas");
    }
    for (char ch : text) {
      if (ch < '0' || ch > '9') {
        throw Error(ErrorKind::MalformedInput, "non-numeric character in '" + std::string(text) + "'");
      }
      entries.push_back(ch - '0');
    }
  } else {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t end = std::min(text.find(',', start), text.size());
      const std::string_view tok = text.substr(start, end - start);
      int value = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw Error(ErrorKind::MalformedInput, "bad entry '" + std::string(tok) + "'");
      }
      entries.push_back(value);
      start = end + 1;
    }
  }
  return Permutation(std::move(entries));
}

Involution parse_involution(std::string_view text) { return Involution(parse_perm(text)); }

std::string format_perm(const Permutation& p) {
  std::string s;
  const bool compact = p.size() <= 9;
  for (int i = 1; i <= p.size(); ++i) {
    if (!compact && i > 1) s += ',';
    s += std::to_string(p(i));
  }
  return s;
}

Involution w0(int m) {
  std::vector<int> e(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) e[i] = m - i;
  return Involution(std::move(e));
}

Permutation compose(const Permutation& p, const Permutation& q) {
  require_same_size(p, q);
  std::vector<int> e(static_cast<std::size_t>(p.size()));
  for (int i = 1; i <= p.size(); ++i) e[i - 1] = p(q(i));
  return Permutation(std::move(e));
}

Involution conjugate(const Involution& mu, const Transposition& t) {
  if (mu.size() != t.m) {
    throw Error(ErrorKind::SizeMismatch, "transposition and involution sizes differ");
  }
  std::vector<int> e(static_cast<std::size_t>(mu.size()));
  for (int i = 1; i <= mu.size(); ++i) e[i - 1] = t.apply(mu(t.apply(i)));
  return Involution(std::move(e));
}

std::vector<int> fixed_points(const Involution& pi) {
  std::vector<int> out;
  for (int i = 1; i <= pi.size(); ++i) {
    if (pi(i) == i) out.push_back(i);
  }
  return out;
}

std::vector<std::pair<int, int>> two_cycles(const Involution& pi) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= pi.size(); ++i) {
    if (pi(i) > i) out.emplace_back(i, pi(i));
  }
  return out;
}

Involution insert_fixed_point(const Involution& pi, int pos) {
  const int m = pi.size();
  if (pos < 1 || pos > m + 1) {
    throw Error(ErrorKind::PositionOutOfRange,
                "insert position " + std::to_string(pos) + " outside 1.." + std::to_string(m + 1));
  }
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(m + 1));
  for (int i = 1; i <= m + 1; ++i) {
    if (i == pos) {
      e.push_back(pos);
      continue;
    }
    const int src = i < pos ? i : i - 1;
    const int v = pi(src);
    e.push_back(v >= pos ? v + 1 : v);
  }
  return Involution(std::move(e));
}

Involution delete_fixed_point(const Involution& pi, int pos) {
  const int m = pi.size();
  if (pos < 1 || pos > m || pi(pos) != pos) {
    throw Error(ErrorKind::PositionOutOfRange,
                "position " + std::to_string(pos) + " is not a fixed point");
  }
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(m - 1));
  for (int i = 1; i <= m; ++i) {
    if (i == pos) continue;
    const int v = pi(i);
    e.push_back(v > pos ? v - 1 : v);
  }
  return Involution(std::move(e));
}

std::vector<Involution> enumerate_involutions(int m) {
  std::vector<Involution> out;
  if (m < 0) return out;
  out.reserve(static_cast<std::size_t>(involution_count(m)));
  std::vector<int> cur(static_cast<std::size_t>(m));
  std::vector<bool> used(static_cast<std::size_t>(m), false);
  enumerate_rec(cur, used, 0, out);
  return out;
}

std::uint64_t involution_count(int m) {
  if (m < 0) return 0;
  std::uint64_t prev = 1, cur = 1;  // I(0), I(1)
  if (m == 0) return 1;
  for (int k = 2; k <= m; ++k) {
    const std::uint64_t next = cur + static_cast<std::uint64_t>(k - 1) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::vector<Involution> w0_class(int m) {
  std::vector<Involution> out;
  for (auto& pi : enumerate_involutions(m)) {
    if (static_cast<int>(two_cycles(pi).size()) == m / 2) out.push_back(std::move(pi));
  }
  return out;
}

}  // namespace korbit
