#include "korbit/polynomial.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace korbit {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("polynomial coefficient overflow");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("polynomial coefficient overflow");
  return out;
}

}  // namespace

int total_degree(const Monomial& mono) {
  return std::accumulate(mono.begin(), mono.end(), 0);
}

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const {
  const int da = total_degree(a);
  const int db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

Polynomial Polynomial::constant(int num_vars, std::int64_t c) {
  Polynomial p(num_vars);
  p.add_term(Monomial(static_cast<std::size_t>(num_vars), 0), c);
  return p;
}

Polynomial Polynomial::variable(int num_vars, int k, std::int64_t c) {
  Polynomial p(num_vars);
  Monomial mono(static_cast<std::size_t>(num_vars), 0);
  mono[static_cast<std::size_t>(k)] = 1;
  p.add_term(mono, c);
  return p;
}

std::int64_t Polynomial::coefficient(const Monomial& mono) const {
  const auto it = terms_.find(mono);
  return it == terms_.end() ? 0 : it->second;
}

std::int64_t Polynomial::constant_term() const {
  return coefficient(Monomial(static_cast<std::size_t>(num_vars_), 0));
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first);
}

void Polynomial::add_term(const Monomial& mono, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  num_vars_ = std::max(num_vars_, o.num_vars_);
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  num_vars_ = std::max(num_vars_, o.num_vars_);
  for (const auto& [mono, c] : o.terms_) add_term(mono, checked_mul(c, -1));
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial p(num_vars_);
  for (const auto& [mono, c] : terms_) p.terms_.emplace(mono, checked_mul(c, -1));
  return p;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out(std::max(a.num_vars_, b.num_vars_));
  Monomial prod(static_cast<std::size_t>(out.num_vars_), 0);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t k = 0; k < prod.size(); ++k) {
        prod[k] = static_cast<std::uint8_t>((k < ma.size() ? ma[k] : 0) + (k < mb.size() ? mb[k] : 0));
      }
      out.add_term(prod, checked_mul(ca, cb));
    }
  }
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (static_cast<int>(point.size()) != num_vars_) {
    throw std::invalid_argument("evaluation point has the wrong number of coordinates");
  }
  Rational sum = 0;
  for (const auto& [mono, c] : terms_) {
    Rational term = c;
    for (std::size_t k = 0; k < mono.size(); ++k) {
      for (int e = 0; e < mono[k]; ++e) term *= point[k];
    }
    sum += term;
  }
  return sum;
}

std::string Polynomial::to_string(std::span<const std::string> names) const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [mono, c] = *it;
    const bool is_const = total_degree(mono) == 0;
    const std::int64_t mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    bool need_star = false;
    if (mag != 1 || is_const) {
      s += std::to_string(mag);
      need_star = true;
    }
    for (std::size_t k = 0; k < mono.size(); ++k) {
      if (mono[k] == 0) continue;
      if (need_star) s += "*";
      s += names[k];
      if (mono[k] > 1) s += "^" + std::to_string(mono[k]);
      need_star = true;
    }
  }
  return s;
}

Polynomial determinant(const PolyMatrix& a, std::span<const int> rows, std::span<const int> cols) {
  if (rows.size() != cols.size()) throw std::invalid_argument("determinant of a non-square selection");
  const int size = static_cast<int>(rows.size());
  if (size > 30) throw std::invalid_argument("determinant selection too large");
  int num_vars = 0;
  for (const auto& row : a) {
    for (const auto& p : row) num_vars = std::max(num_vars, p.num_vars());
  }
  if (size == 0) return Polynomial::constant(num_vars, 1);

  std::unordered_map<std::uint32_t, Polynomial> memo;
  // Minor on rows popcount(used).. and the columns not in `used`.
  auto minor = [&](auto&& self, std::uint32_t used) -> Polynomial {
    const int k = std::popcount(used);
    if (k == size) return Polynomial::constant(num_vars, 1);
    if (auto it = memo.find(used); it != memo.end()) return it->second;
    Polynomial sum(num_vars);
    int free_before = 0;
    for (int c = 0; c < size; ++c) {
      if (used & (1u << c)) continue;
      const Polynomial& entry = a[static_cast<std::size_t>(rows[k])][static_cast<std::size_t>(cols[c])];
      if (!entry.is_zero()) {
        Polynomial term = entry * self(self, used | (1u << c));
        if (free_before % 2 == 0) {
          sum += term;
        } else {
          sum -= term;
        }
      }
      ++free_before;
    }
    memo.emplace(used, sum);
    return sum;
  };
  return minor(minor, 0u);
}

}  // namespace korbit
