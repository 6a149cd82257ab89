#include "doctest.h"

#include <random>

#include "korbit/bruhat.hpp"
#include "korbit/error.hpp"
#include "korbit/geometry.hpp"
#include "korbit/orbit_graph.hpp"
#include "oracles.hpp"

using namespace korbit;

namespace {

Involution inv(const char* s) { return parse_involution(s); }
std::vector<int> vec(const Permutation& p) { return {p.entries().begin(), p.entries().end()}; }

std::string str(const Polynomial& p, int n) { return p.to_string(SliceVariables(n).names()); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected korbit::Error");
  return ErrorKind::MalformedInput;
}

/// Leibniz expansion over all permutations.
Polynomial leibniz(const PolyMatrix& a) {
  const int size = static_cast<int>(a.size());
  Polynomial sum(a[0][0].num_vars());
  for (const auto& p : oracle::all_perms(size)) {
    Polynomial term = Polynomial::constant(a[0][0].num_vars(), oracle::inversions(p) % 2 ? -1 : 1);
    for (int i = 0; i < size; ++i) term = term * a[i][p[i] - 1];
    sum += term;
  }
  return sum;
}

Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  const Polynomial x = Polynomial::variable(2, 0);
  const Polynomial y = Polynomial::variable(2, 1);
  const std::vector<std::string> names{"x", "y"};
  const Polynomial p = (x + y) * (x - y);
  CHECK(p.to_string(names) == "x^2 - y^2");
  CHECK((p - p).is_zero());
  CHECK((Polynomial::constant(2, 3) * x * y + Polynomial::constant(2, -1)).to_string(names) == "3*x*y - 1");
  CHECK(p.degree() == 2);
  const std::vector<Rational> at{Rational(3), Rational(1, 2)};
  CHECK(p.evaluate(at) == Rational(35, 4));
  CHECK(p.constant_term() == 0);
  const Polynomial huge = Polynomial::variable(2, 0, INT64_MAX);
  CHECK_THROWS_AS(huge + huge, std::overflow_error);
}

TEST_CASE("determinant agrees with the Leibniz expansion") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coeff(-2, 2), var(0, 2), pick(0, 2);
  for (int size = 1; size <= 5; ++size) {
    for (int trial = 0; trial < 10; ++trial) {
      PolyMatrix a(static_cast<std::size_t>(size));
      for (auto& row : a) {
        for (int j = 0; j < size; ++j) {
          Polynomial e = Polynomial::constant(3, coeff(rng));
          if (pick(rng) == 0) e += Polynomial::variable(3, var(rng), coeff(rng));
          row.push_back(e);
        }
      }
      std::vector<int> idx(static_cast<std::size_t>(size));
      std::iota(idx.begin(), idx.end(), 0);
      CHECK(determinant(a, idx, idx) == leibniz(a));
    }
  }
}

TEST_CASE("standard_gram") {
  CHECK(standard_gram(2) == std::vector<std::vector<int>>{{0, 1}, {1, 0}});
  CHECK(standard_gram(1) == std::vector<std::vector<int>>{{1}});
  CHECK(standard_gram(4) == std::vector<std::vector<int>>{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}});
}

TEST_CASE("slice variables") {
  const SliceVariables v2(2);
  CHECK(v2.names() == std::vector<std::string>{"a13", "a14", "a23", "a34"});
  CHECK(v2.index_of(2, 4) == v2.index_of(1, 3));
  for (int n = 1; n <= 5; ++n) CHECK(SliceVariables(n).count() == n * n);
  CHECK(kind_of([] { canonical_variable(1, 2, 2); }) == ErrorKind::PositionOutOfRange);
}

TEST_CASE("slice_basis") {
  const auto b1 = slice_basis(1);
  CHECK(str(b1[0][0], 1) == "1");
  CHECK(str(b1[0][1], 1) == "a12");
  CHECK(str(b1[1][0], 1) == "0");
  CHECK(str(b1[1][1], 1) == "1");
  const auto b2 = slice_basis(2);
  CHECK(str(b2[2][2], 2) == "1");
  CHECK(str(b2[2][3], 2) == "a34");
  CHECK(str(b2[1][3], 2) == "a13");  // a24 = a13
  const std::vector<Rational> zero(4, Rational(0));
  CHECK(specialize_slice_basis(2, zero).rows() == FlagMatrix::identity(4).rows());
}

TEST_CASE("slice_gram examples") {
  const auto g1 = slice_gram(1);
  CHECK(str(g1[0][0], 1) == "2*a12");
  CHECK(str(g1[0][1], 1) == "1");
  CHECK(str(g1[1][0], 1) == "1");
  CHECK(str(g1[1][1], 1) == "0");
  CHECK(str(slice_gram(2)[0][2], 2) == "a34");
}

TEST_CASE("slice_gram structure for n <= 4") {
  std::mt19937 rng(11);
  for (int n = 1; n <= 4; ++n) {
    const int m = 2 * n;
    const auto g = slice_gram(n);
    for (int i = 1; i <= m; ++i) {
      for (int j = 1; j <= m; ++j) {
        CHECK(g[i - 1][j - 1] == g[j - 1][i - 1]);
        if (i + j > m + 1) CHECK(g[i - 1][j - 1].is_zero());
        if (i + j == m + 1) CHECK(g[i - 1][j - 1] == Polynomial::constant(n * n, 1));
      }
    }
    CHECK(gram_diagnostic(n).empty());
    // Numeric check: the case table equals B J B^T at random points.
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Rational> pt;
      for (int k = 0; k < n * n; ++k) pt.push_back(random_rational(rng));
      const FlagMatrix f = specialize_slice_basis(n, pt);
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
          Rational s = 0;
          for (int k = 0; k < m; ++k) s += f.rows()[i][k] * f.rows()[j][m - 1 - k];
          CHECK(g[i][j].evaluate(pt) == s);
        }
    }
  }
}

TEST_CASE("variable weights follow the torus scaling of Gram positions") {
  for (int n = 1; n <= 4; ++n) {
    const int m = 2 * n;
    const auto g = slice_gram(n);
    const SliceVariables vars(n);
    // Row/column k scales by t_k (k <= n) or t_{2n+1-k}^{-1} (k > n).
    auto index_weight = [&](int k) {
      Weight w(static_cast<std::size_t>(n), 0);
      if (k <= n) w[k - 1] = 1; else w[m - k] = -1;
      return w;
    };
    for (int x = 0; x < vars.count(); ++x) {
      std::set<Weight> seen;
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j)
          for (const auto& [mono, c] : g[i - 1][j - 1].terms()) {
            if (mono[x] == 0) continue;
            Weight w = index_weight(i);
            const Weight wj = index_weight(j);
            for (int k = 0; k < n; ++k) w[k] += wj[k];
            seen.insert(w);
          }
      REQUIRE(seen.size() == 1);
      CHECK(variable_weight(vars.vars()[x], n) == *seen.begin());
    }
  }
  CHECK(variable_weight({1, 4}, 2) == Weight{2, 0});
  CHECK(variable_weight({1, 3}, 2) == Weight{1, 1});
  CHECK(variable_weight({3, 4}, 2) == Weight{1, -1});
}

TEST_CASE("neighbor_variable") {
  CHECK(neighbor_variable(inv("1324"), 2) == SliceVariable{1, 4});
  CHECK(neighbor_variable(inv("2143"), 2) == SliceVariable{1, 3});
  CHECK(neighbor_variable(inv("3412"), 2) == SliceVariable{3, 4});
  CHECK(kind_of([] { neighbor_variable(inv("1234"), 2); }) == ErrorKind::NotANeighbor);
  CHECK(kind_of([] { neighbor_variable(inv("321"), 2); }) == ErrorKind::SizeMismatch);

  // The weight of t = (a, b) is w(a) - w(b) with w(k) = e_k for k <= n and
  // -e_{2n+1-k} otherwise; every t producing the vertex must agree.
  for (int n = 1; n <= 4; ++n) {
    const int m = 2 * n;
    const Involution bottom = w0(m);
    auto w = [&](int k) {
      Weight out(static_cast<std::size_t>(n), 0);
      if (k <= n) out[k - 1] = 1; else out[m - k] = -1;
      return out;
    };
    for (const auto& t : all_transpositions(m)) {
      const Involution c = conjugate(bottom, t);
      const Involution v = c != bottom ? c : Involution(compose(t.as_permutation(), bottom));
      Weight expect = w(t.a);
      const Weight wb = w(t.b);
      for (int k = 0; k < n; ++k) expect[k] -= wb[k];
      CHECK(variable_weight(neighbor_variable(v, n), n) == expect);
    }
  }
}

TEST_CASE("attractiveness_check") {
  for (int n = 1; n <= 5; ++n) CHECK(attractiveness_check(n));
}

TEST_CASE("minor_condition_ii") {
  CHECK(str(minor_condition_ii(inv("3412"), inv("1324"), 2), 2) == "2*a14");
  CHECK(str(minor_condition_ii(inv("3412"), inv("4231"), 2), 2) == "-2*a23");
  CHECK(str(minor_condition_ii(inv("4231"), inv("3412"), 2), 2) == "a34");
  CHECK(kind_of([] { minor_condition_ii(inv("3412"), inv("3412"), 2); }) == ErrorKind::InInterval);
  CHECK(first_failing_prefix(inv("3412"), inv("4231")) == 2);
  CHECK(first_failing_prefix(inv("3412"), inv("4321")) == 0);
}

TEST_CASE("minor_condition_i") {
  CHECK(str(minor_condition_i(inv("3412"), inv("1324"), 2), 2) == "2*a14");
  CHECK(str(minor_condition_i(inv("3412"), inv("4231"), 2), 2) == "2*a23");
  CHECK(str(minor_condition_i(inv("2143"), inv("1324"), 2), 2) == "2*a14");
  CHECK(kind_of([] { minor_condition_i(inv("3412"), inv("4321"), 2); }) == ErrorKind::InInterval);
}

TEST_CASE("slice_ideal examples") {
  auto render = [](const char* p) {
    std::vector<std::string> out;
    for (const auto& g : slice_ideal(inv(p), 2)) out.push_back(format_perm(g.excluded) + ":" + str(g.poly, 2));
    return out;
  };
  CHECK(render("3412") == std::vector<std::string>{"1324:2*a14", "2143:2*a13", "4231:2*a23"});
  CHECK(render("1234").empty());
  CHECK(render("4231") == std::vector<std::string>{"1324:2*a14", "2143:2*a13", "3412:a34"});
}

TEST_CASE("monomial_claim examples") {
  CHECK(monomial_claim(inv("3412"), inv("2143"), 2));
  CHECK(monomial_claim(inv("4231"), inv("3412"), 2));
  CHECK(monomial_claim(inv("3412"), inv("4231"), 2));
}

TEST_CASE("slice ideal size and monomial claim for every degree-smooth pi, m <= 8") {
  for (int n = 1; n <= 4; ++n) {
    int smooth = 0;
    for (const auto& pi : enumerate_involutions(2 * n)) {
      if (w0_degree(pi) != rank(pi)) continue;
      ++smooth;
      const auto ideal = slice_ideal(pi, n);
      CHECK(static_cast<int>(ideal.size()) == codim(pi));
      for (const auto& gen : ideal) {
        CAPTURE(format_perm(pi));
        CAPTURE(format_perm(gen.excluded));
        CHECK(gen.poly.constant_term() == 0);
        CHECK_FALSE(gen.poly.is_zero());
        CHECK(monomial_claim(pi, gen.excluded, n));
      }
    }
    MESSAGE("n=" << n << ": " << smooth << " degree-smooth involutions");
  }
}

TEST_CASE("orbit_of_flag examples") {
  for (int m = 1; m <= 8; ++m) CHECK(orbit_of_flag(FlagMatrix::identity(m)) == w0(m));
  std::vector<Rational> a(4, Rational(0));
  a[SliceVariables(2).index_of(3, 4)] = 1;
  CHECK(format_perm(orbit_of_flag(specialize_slice_basis(2, a))) == "3412");
}

TEST_CASE("generic slice points lie in the open orbit") {
  std::mt19937 rng(2024);
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Rational> pt;
      for (int k = 0; k < n * n; ++k) pt.push_back(random_rational(rng) + Rational(1, 11));
      CHECK(orbit_of_flag(specialize_slice_basis(n, pt)) == Involution::identity(2 * n));
    }
  }
}

TEST_CASE("orbit_of_flag agrees with the brute-force rank table search") {
  std::mt19937 rng(5);
  std::bernoulli_distribution keep(0.4);
  for (int n = 1; n <= 3; ++n) {
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<Rational> pt;
      for (int k = 0; k < n * n; ++k) pt.push_back(keep(rng) ? random_rational(rng) : Rational(0));
      const FlagMatrix f = specialize_slice_basis(n, pt);
      CHECK(vec(orbit_of_flag(f)) == oracle::orbit_of_flag(f.rows()));
    }
  }
  // Arbitrary (non-slice) flags too.
  for (int m = 2; m <= 5; ++m) {
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<std::vector<Rational>> rows(static_cast<std::size_t>(m));
      for (auto& r : rows)
        for (int j = 0; j < m; ++j) r.push_back(keep(rng) ? random_rational(rng) : Rational(0));
      if (oracle::rational_rank(rows) != m) continue;
      CHECK(vec(orbit_of_flag(FlagMatrix(rows))) == oracle::orbit_of_flag(rows));
    }
  }
}

TEST_CASE("zeroing a linear slice ideal stays inside the interval") {
  std::mt19937 rng(99);
  for (int n = 1; n <= 3; ++n) {
    const SliceVariables vars(n);
    for (const auto& pi : enumerate_involutions(2 * n)) {
      if (w0_degree(pi) != rank(pi)) continue;
      std::set<int> zeroed;
      bool linear = true;
      for (const auto& gen : slice_ideal(pi, n)) {
        if (gen.poly.terms().size() != 1 || gen.poly.degree() != 1) {
          linear = false;
          break;
        }
        const Monomial& mono = gen.poly.terms().begin()->first;
        zeroed.insert(static_cast<int>(std::find(mono.begin(), mono.end(), 1) - mono.begin()));
      }
      if (!linear) continue;
      for (int trial = 0; trial < 3; ++trial) {
        std::vector<Rational> pt;
        for (int k = 0; k < n * n; ++k) pt.push_back(zeroed.count(k) ? Rational(0) : random_rational(rng) + Rational(1, 13));
        const Involution v = orbit_of_flag(specialize_slice_basis(n, pt));
        CAPTURE(format_perm(pi));
        CAPTURE(format_perm(v));
        CHECK(bruhat_leq(pi, v));
      }
    }
  }
}

TEST_CASE("exact_rank agrees with rational Gaussian elimination") {
  std::mt19937 rng(3);
  std::bernoulli_distribution keep(0.5);
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = 1 + trial % 5, cols = 1 + (trial / 5) % 5;
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(rows));
    for (auto& r : a)
      for (int j = 0; j < cols; ++j) r.push_back(keep(rng) ? random_rational(rng) : Rational(0));
    if (trial % 3 == 0 && rows > 1) a[1] = a[0];
    CHECK(exact_rank(a) == oracle::rational_rank(a));
  }
}

TEST_CASE("flag files") {
  const FlagMatrix f = FlagMatrix::parse("3\n1 0 0\n1/2 1 0\n-3 2/4 1\n");
  CHECK(f.rows()[1][0] == Rational(1, 2));
  CHECK(f.rows()[2][1] == Rational(1, 2));
  CHECK(f.to_text() == "3\n1 0 0\n1/2 1 0\n-3 1/2 1\n");
  CHECK(FlagMatrix::parse(f.to_text()).rows() == f.rows());
  for (const char* bad : {"", "x", "2\n1 0\n0", "2\n1 0\n0 1/0", "2\n1 0\n0 1 5", "2\n1 a\n0 1", "0\n"}) {
    CAPTURE(bad);
    CHECK(kind_of([&] { FlagMatrix::parse(std::string(bad)); }) == ErrorKind::MalformedInput);
  }
  CHECK(kind_of([] { orbit_of_flag(FlagMatrix::parse("2\n1 2\n2 4\n")); }) == ErrorKind::DegenerateFlag);
}
