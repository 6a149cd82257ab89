#include "korbit/geometry.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <sstream>

#include "korbit/bruhat.hpp"
#include "korbit/error.hpp"
#include "korbit/orbit_graph.hpp"

namespace korbit {

namespace {

Rational parse_rational(const std::string& tok) {
  const auto slash = tok.find('/');
  auto parse_int = [&](const std::string& s, bool allow_sign) {
    std::size_t k = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) k = 1;
    if (k == s.size()) throw Error(ErrorKind::MalformedInput, "bad rational '" + tok + "'");
    for (std::size_t q = k; q < s.size(); ++q) {
      if (s[q] < '0' || s[q] > '9') throw Error(ErrorKind::MalformedInput, "bad rational '" + tok + "'");
    }
    return BigInt(s[0] == '+' ? s.substr(1) : s);
  };
  if (slash == std::string::npos) return Rational(parse_int(tok, true));
  const BigInt num = parse_int(tok.substr(0, slash), true);
  const BigInt den = parse_int(tok.substr(slash + 1), false);
  if (den == 0) throw Error(ErrorKind::MalformedInput, "zero denominator in '" + tok + "'");
  return Rational(num, den);
}

std::string format_rational(const Rational& q) {
  std::ostringstream os;
  os << numerator(q);
  if (denominator(q) != 1) os << "/" << denominator(q);
  return os.str();
}

void require_size(const Permutation& p, int n) {
  if (p.size() != 2 * n) {
    throw Error(ErrorKind::SizeMismatch, format_perm(p) + " does not have size 2n=" + std::to_string(2 * n));
  }
}

/// Sorted prefix of length i (values of p(1..i) in increasing order).
std::vector<int> sorted_prefix(const Permutation& p, int i) {
  std::vector<int> out(p.entries().begin(), p.entries().begin() + i);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

FlagMatrix::FlagMatrix(std::vector<std::vector<Rational>> rows) : rows_(std::move(rows)) {
  for (const auto& row : rows_) {
    if (row.size() != rows_.size()) {
      throw Error(ErrorKind::MalformedInput, "flag matrix must be square");
    }
  }
}

FlagMatrix FlagMatrix::identity(int m) {
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(m),
                                          std::vector<Rational>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i) rows[i][i] = 1;
  return FlagMatrix(std::move(rows));
}

FlagMatrix FlagMatrix::parse(std::istream& in) {
  std::string tok;
  if (!(in >> tok)) throw Error(ErrorKind::MalformedInput, "missing matrix size");
  int m = 0;
  try {
    std::size_t used = 0;
    m = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
  } catch (const std::exception&) {
    throw Error(ErrorKind::MalformedInput, "bad matrix size '" + tok + "'");
  }
  if (m < 1 || m > 64) throw Error(ErrorKind::MalformedInput, "matrix size out of range");
  std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(m));
  for (auto& row : rows) {
    for (int j = 0; j < m; ++j) {
      if (!(in >> tok)) throw Error(ErrorKind::MalformedInput, "flag matrix has too few entries");
      row.push_back(parse_rational(tok));
    }
  }
  if (in >> tok) throw Error(ErrorKind::MalformedInput, "trailing data after flag matrix");
  return FlagMatrix(std::move(rows));
}

FlagMatrix FlagMatrix::parse(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

std::string FlagMatrix::to_text() const {
  std::string s = std::to_string(size()) + "\n";
  for (const auto& row : rows_) {
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (j) s += ' ';
      s += format_rational(row[j]);
    }
    s += '\n';
  }
  return s;
}

std::vector<std::vector<int>> standard_gram(int m) {
  std::vector<std::vector<int>> g(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m), 0));
  for (int i = 0; i < m; ++i) g[i][m - 1 - i] = 1;
  return g;
}

int exact_rank(const std::vector<std::vector<Rational>>& a) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  std::vector<std::vector<BigInt>> m(rows, std::vector<BigInt>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    BigInt scale = 1;
    for (const auto& q : a[r]) scale = boost::multiprecision::lcm(scale, denominator(q));
    for (std::size_t c = 0; c < cols; ++c) m[r][c] = numerator(a[r][c]) * (scale / denominator(a[r][c]));
  }
  std::size_t rank = 0;
  BigInt prev = 1;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        m[r][c] = (m[r][c] * m[rank][col] - m[r][col] * m[rank][c]) / prev;
      }
      m[r][col] = 0;
    }
    prev = m[rank][col];
    ++rank;
  }
  return static_cast<int>(rank);
}

std::vector<std::vector<int>> form_rank_table(const FlagMatrix& flag) {
  const int m = flag.size();
  const auto& f = flag.rows();
  // Gram matrix of the flag basis under the antidiagonal form.
  std::vector<std::vector<Rational>> gram(static_cast<std::size_t>(m), std::vector<Rational>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      Rational s = 0;
      for (int k = 0; k < m; ++k) s += f[i][k] * f[j][m - 1 - k];
      gram[i][j] = s;
    }
  }
  std::vector<std::vector<int>> table(static_cast<std::size_t>(m + 1), std::vector<int>(static_cast<std::size_t>(m + 1), 0));
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      std::vector<std::vector<Rational>> block(static_cast<std::size_t>(i));
      for (int r = 0; r < i; ++r) block[r].assign(gram[r].begin(), gram[r].begin() + j);
      table[i][j] = exact_rank(block);
    }
  }
  return table;
}

Involution orbit_of_flag(const FlagMatrix& flag) {
  const int m = flag.size();
  if (exact_rank(flag.rows()) != m) {
    throw Error(ErrorKind::DegenerateFlag, "flag basis rows are linearly dependent");
  }
  const auto table = form_rank_table(flag);
  std::vector<int> e(static_cast<std::size_t>(m), 0);
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      if (table[i][j] == table[i - 1][j] + 1) {
        e[i - 1] = j;
        break;
      }
    }
    if (e[i - 1] == 0) {
      throw Error(ErrorKind::NotAnOrbitTable, "row " + std::to_string(i) + " of the rank table never jumps");
    }
  }
  Involution pi;
  try {
    pi = Involution(std::move(e));
  } catch (const Error& err) {
    throw Error(ErrorKind::NotAnOrbitTable, std::string("rank table does not define an involution: ") + err.what());
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) {
      int expected = 0;
      for (int k = 1; k <= i; ++k) expected += pi(k) <= j ? 1 : 0;
      if (expected != table[i][j]) {
        throw Error(ErrorKind::NotAnOrbitTable, "rank table disagrees with " + format_perm(pi));
      }
    }
  }
  return pi;
}

// ---------------------------------------------------------------------------

SliceVariable canonical_variable(int i, int j, int n) {
  const int mirror_sum = 2 * n + 1;
  if (i >= 1 && i <= n && j > n && j <= 2 * n) {
    const SliceVariable mirror{mirror_sum - j, mirror_sum - i};
    return mirror.i < i ? mirror : SliceVariable{i, j};
  }
  if (i > n && i < j && j <= 2 * n) return SliceVariable{i, j};
  throw Error(ErrorKind::PositionOutOfRange,
              "a(" + std::to_string(i) + "," + std::to_string(j) + ") is not a slice coordinate for n=" +
                  std::to_string(n));
}

std::string variable_name(const SliceVariable& v) {
  if (v.i < 10 && v.j < 10) return "a" + std::to_string(v.i) + std::to_string(v.j);
  return "a" + std::to_string(v.i) + "_" + std::to_string(v.j);
}

SliceVariables::SliceVariables(int n) : n_(n) {
  std::set<SliceVariable> seen;
  for (int i = 1; i <= 2 * n; ++i) {
    for (int j = std::max(i + 1, n + 1); j <= 2 * n; ++j) seen.insert(canonical_variable(i, j, n));
  }
  vars_.assign(seen.begin(), seen.end());
  for (const auto& v : vars_) names_.push_back(variable_name(v));
}

int SliceVariables::index_of(int i, int j) const {
  const SliceVariable v = canonical_variable(i, j, n_);
  const auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
  return static_cast<int>(it - vars_.begin());
}

PolyMatrix slice_basis(int n) {
  const SliceVariables vars(n);
  const int m = 2 * n;
  const int nv = vars.count();
  PolyMatrix b(static_cast<std::size_t>(m), std::vector<Polynomial>(static_cast<std::size_t>(m), Polynomial(nv)));
  for (int i = 1; i <= m; ++i) {
    b[i - 1][i - 1] = Polynomial::constant(nv, 1);
    const int first = i <= n ? n + 1 : i + 1;
    for (int j = first; j <= m; ++j) b[i - 1][j - 1] = Polynomial::variable(nv, vars.index_of(i, j));
  }
  return b;
}

FlagMatrix specialize_slice_basis(int n, std::span<const Rational> values) {
  const PolyMatrix b = slice_basis(n);
  std::vector<std::vector<Rational>> rows;
  for (const auto& row : b) {
    std::vector<Rational> r;
    for (const auto& p : row) r.push_back(p.evaluate(values));
    rows.push_back(std::move(r));
  }
  return FlagMatrix(std::move(rows));
}

PolyMatrix slice_gram(int n) {
  const SliceVariables vars(n);
  const int m = 2 * n;
  const int nv = vars.count();
  const int mirror = m + 1;
  auto entry = [&](int i, int j) -> Polynomial {
    if (i <= n && j <= n) {
      if (i > j) std::swap(i, j);
      return Polynomial::variable(nv, vars.index_of(i, mirror - j), 2);
    }
    if (j <= n && i > n) std::swap(i, j);
    if (i <= n && j > n) {
      if (j < mirror - i) return Polynomial::variable(nv, vars.index_of(j, mirror - i));
      if (j == mirror - i) return Polynomial::constant(nv, 1);
    }
    return Polynomial(nv);
  };
  PolyMatrix g(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= m; ++j) g[i - 1].push_back(entry(i, j));
  }
  return g;
}

PolyMatrix slice_basis_products(int n) {
  const PolyMatrix b = slice_basis(n);
  const int m = 2 * n;
  const int nv = n * n;
  PolyMatrix g(static_cast<std::size_t>(m), std::vector<Polynomial>(static_cast<std::size_t>(m), Polynomial(nv)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      for (int k = 0; k < m; ++k) g[i][j] += b[i][k] * b[j][m - 1 - k];
    }
  }
  return g;
}

std::vector<GramMismatch> gram_diagnostic(int n) {
  const PolyMatrix table = slice_gram(n);
  const PolyMatrix product = slice_basis_products(n);
  std::vector<GramMismatch> out;
  for (int i = 0; i < 2 * n; ++i) {
    for (int j = 0; j < 2 * n; ++j) {
      if (table[i][j] != product[i][j]) out.push_back({i + 1, j + 1, table[i][j], product[i][j]});
    }
  }
  return out;
}

Weight variable_weight(const SliceVariable& v, int n) {
  const SliceVariable c = canonical_variable(v.i, v.j, n);
  const int mirror = 2 * n + 1;
  Weight w(static_cast<std::size_t>(n), 0);
  if (c.i <= n) {
    // a_ij sits at Gram position (i, 2n+1-j), both indices <= n.
    w[c.i - 1] += 1;
    w[mirror - c.j - 1] += 1;
  } else {
    // a_ij sits at Gram position (2n+1-j, i) with i > n.
    w[mirror - c.j - 1] += 1;
    w[mirror - c.i - 1] -= 1;
  }
  return w;
}

SliceVariable neighbor_variable(const Involution& v, int n) {
  require_size(v, n);
  const int m = 2 * n;
  const int mirror = m + 1;
  const Involution bottom = w0(m);
  const Permutation bottom_perm = bottom;
  for (const Transposition& t : all_transpositions(m)) {
    const Involution conj = conjugate(bottom, t);
    const Permutation image = conj != bottom ? Permutation(conj) : compose(t.as_permutation(), bottom_perm);
    if (image != v) continue;
    if (t.b <= n) return canonical_variable(mirror - t.b, mirror - t.a, n);
    return canonical_variable(t.a, t.b, n);
  }
  throw Error(ErrorKind::NotANeighbor, format_perm(v) + " is not adjacent to w0");
}

bool attractiveness_check(int n) {
  const SliceVariables vars(n);
  std::multiset<Weight> got;
  for (const auto& v : vars.vars()) {
    const Weight w = variable_weight(v, n);
    long pairing = 0;
    for (int k = 0; k < n; ++k) pairing += static_cast<long>(n - k) * w[k];
    if (pairing <= 0) return false;
    got.insert(w);
  }
  std::multiset<Weight> expected;
  for (int i = 0; i < n; ++i) {
    Weight w(static_cast<std::size_t>(n), 0);
    w[i] = 2;
    expected.insert(w);
    for (int j = i + 1; j < n; ++j) {
      Weight plus(static_cast<std::size_t>(n), 0), minus(static_cast<std::size_t>(n), 0);
      plus[i] = 1;
      plus[j] = 1;
      minus[i] = 1;
      minus[j] = -1;
      expected.insert(plus);
      expected.insert(minus);
    }
  }
  return got == expected;
}

int first_failing_prefix(const Permutation& pi, const Permutation& v) {
  if (pi.size() != v.size()) throw Error(ErrorKind::SizeMismatch, "prefix comparison of different sizes");
  const PrefixProfile a(pi), b(v);
  for (int i = 1; i <= pi.size(); ++i) {
    for (int j = 1; j <= i; ++j) {
      if (a.sorted_prefix_entry(i, j) > b.sorted_prefix_entry(i, j)) return i;
    }
  }
  return 0;
}

int half_size(const Involution& pi) {
  if (pi.size() % 2 != 0 || pi.size() == 0) {
    throw Error(ErrorKind::SizeMismatch, "the slice is defined only for even m");
  }
  return pi.size() / 2;
}

Polynomial minor_condition_ii(const Involution& pi, const Involution& c, int n) {
  require_size(pi, n);
  require_size(c, n);
  const int i = first_failing_prefix(pi, c);
  if (i == 0) throw Error(ErrorKind::InInterval, format_perm(c) + " lies in the interval of " + format_perm(pi));
  std::vector<int> rows(static_cast<std::size_t>(i));
  for (int r = 0; r < i; ++r) rows[r] = r;
  std::vector<int> cols = sorted_prefix(c, i);
  for (int& col : cols) --col;
  return determinant(slice_gram(n), rows, cols);
}

Polynomial minor_condition_i(const Involution& pi, const Involution& v, int n) {
  require_size(pi, n);
  require_size(v, n);
  const int i = first_failing_prefix(pi, v);
  if (i == 0) throw Error(ErrorKind::InInterval, format_perm(v) + " lies in the interval of " + format_perm(pi));
  const std::vector<int> pi_sorted = sorted_prefix(pi, i);
  const std::vector<int> v_sorted = sorted_prefix(v, i);
  int j = 1;
  while (pi_sorted[j - 1] <= v_sorted[j - 1]) ++j;
  std::vector<int> rows, cols;
  for (int k = 0; k < j; ++k) {
    const int value = v_sorted[k];
    cols.push_back(value - 1);
    for (int pos = 1; pos <= i; ++pos) {
      if (v(pos) == value) rows.push_back(pos - 1);
    }
  }
  return determinant(slice_gram(n), rows, cols);
}

std::vector<IdealGenerator> slice_ideal(const Involution& pi, int n) {
  require_size(pi, n);
  const PrefixProfile base(pi);
  std::vector<IdealGenerator> out;
  for (const Involution& v : neighbors(w0(2 * n)).neighbors) {
    if (base.leq(PrefixProfile(v))) continue;
    out.push_back({v, minor_condition_i(pi, v, n)});
  }
  return out;
}

bool monomial_claim(const Involution& pi, const Involution& v, int n) {
  const SliceVariables vars(n);
  const int x = vars.index_of(neighbor_variable(v, n));
  const Polynomial p = minor_condition_ii(pi, v, n);
  int hits = 0;
  for (const auto& [mono, coeff] : p.terms()) {
    bool pure = true;
    for (int k = 0; k < static_cast<int>(mono.size()); ++k) {
      if (k != x && mono[k] != 0) pure = false;
    }
    if (pure && (mono[x] == 1 || mono[x] == 2)) ++hits;
  }
  return hits == 1;
}

}  // namespace korbit
