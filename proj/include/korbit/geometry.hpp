#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "korbit/perm.hpp"
#include "korbit/polynomial.hpp"

namespace korbit {

// ---------------------------------------------------------------------------
// Flags with exact rational coordinates.

/// Row i holds the coordinates of the i-th flag basis vector in the
/// standard basis; V_i is the span of the first i rows.
class FlagMatrix {
 public:
  explicit FlagMatrix(std::vector<std::vector<Rational>> rows);

  static FlagMatrix identity(int m);
  /// "m" on the first line, then m lines of m entries ("p/q" or integer).
  /// Throws MalformedInput.
  static FlagMatrix parse(std::istream& in);
  static FlagMatrix parse(const std::string& text);
  std::string to_text() const;

  int size() const { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }

 private:
  std::vector<std::vector<Rational>> rows_;
};

/// The form (e_i, e_j) = 1 iff i + j = m + 1.
std::vector<std::vector<int>> standard_gram(int m);

/// Exact rank by fraction-free (Bareiss) elimination after clearing
/// denominators row by row.
int exact_rank(const std::vector<std::vector<Rational>>& a);

/// rank_table[i][j] = rank of the form on V_i x V_j, 0 <= i, j <= m.
std::vector<std::vector<int>> form_rank_table(const FlagMatrix& flag);

/// The involution indexing the orbit of the flag. Throws DegenerateFlag for
/// dependent rows and NotAnOrbitTable if the rank table is not of orbit
/// form.
Involution orbit_of_flag(const FlagMatrix& flag);

// ---------------------------------------------------------------------------
// The slice at the closed-orbit flag for m = 2n.

/// A slice coordinate a_ij, stored as the canonical representative of
/// {(i,j), (2n+1-j, 2n+1-i)} for i <= n < j, and as itself for n < i < j.
struct SliceVariable {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const SliceVariable&, const SliceVariable&) = default;
};

/// Throws PositionOutOfRange unless i <= n < j or n < i < j.
SliceVariable canonical_variable(int i, int j, int n);

/// The n^2 canonical variables in increasing (i, j) order; polynomial
/// variable k is entry k of this list.
class SliceVariables {
 public:
  explicit SliceVariables(int n);

  int n() const { return n_; }
  int count() const { return static_cast<int>(vars_.size()); }
  const std::vector<SliceVariable>& vars() const { return vars_; }
  const std::vector<std::string>& names() const { return names_; }
  /// Index of the canonical representative of a_ij.
  int index_of(int i, int j) const;
  int index_of(const SliceVariable& v) const { return index_of(v.i, v.j); }

 private:
  int n_;
  std::vector<SliceVariable> vars_;
  std::vector<std::string> names_;
};

std::string variable_name(const SliceVariable& v);

/// Rows b_1..b_2n as polynomial coordinate vectors.
PolyMatrix slice_basis(int n);

/// Numeric flag obtained by substituting one rational per canonical variable.
FlagMatrix specialize_slice_basis(int n, std::span<const Rational> values);

/// Gram matrix of the slice from its closed-form case table.
PolyMatrix slice_gram(int n);

/// Gram matrix computed as sum_k b_i[k] b_j[2n+1-k] from slice_basis.
PolyMatrix slice_basis_products(int n);

struct GramMismatch {
  int i;
  int j;
  Polynomial table;
  Polynomial product;
};

/// Entries where slice_gram and slice_basis_products disagree.
std::vector<GramMismatch> gram_diagnostic(int n);

/// Torus character coefficients over e_1..e_n.
using Weight = std::vector<int>;

/// Rows and columns i <= n scale by t_i, rows and columns i > n by
/// t_{2n+1-i}^{-1}; the weight of a_ij is read off its Gram position.
Weight variable_weight(const SliceVariable& v, int n);

/// The variable attached to a neighbor v = t.w0 of w0(2n). Both
/// transpositions t and w0 t w0 producing v give the same variable.
/// Throws NotANeighbor.
SliceVariable neighbor_variable(const Involution& v, int n);

/// All weights are strictly positive under lambda_k = n+1-k and form
/// {2e_i} + {e_i+e_j} + {e_i-e_j} (i<j) with multiplicity one.
bool attractiveness_check(int n);

/// Smallest prefix length i at which pi <= v fails, i.e. sorted prefixes
/// satisfy pi'_j > v'_j for some j. Returns 0 if pi <= v.
int first_failing_prefix(const Permutation& pi, const Permutation& v);

/// Minor of slice_gram on rows 1..i and columns {c_1..c_i} (sorted), i the
/// first failing prefix. Throws InInterval if c lies in I_pi.
Polynomial minor_condition_ii(const Involution& pi, const Involution& c, int n);

/// Minor on columns v'_1..v'_j and rows r_1..r_j (positions of those values
/// among v_1..v_i), j the least failing sorted-prefix entry. Throws
/// InInterval.
Polynomial minor_condition_i(const Involution& pi, const Involution& v, int n);

struct IdealGenerator {
  Involution excluded;  // neighbor of w0 outside I_pi
  Polynomial poly;
};

/// One generator per neighbor of w0 outside I_pi, in lexicographic order of
/// the neighbor.
std::vector<IdealGenerator> slice_ideal(const Involution& pi, int n);

/// minor_condition_ii(pi, v) has exactly one monomial that is the first or
/// second power of neighbor_variable(v).
bool monomial_claim(const Involution& pi, const Involution& v, int n);

/// n with pi.size() == 2n; throws SizeMismatch for odd sizes.
int half_size(const Involution& pi);

}  // namespace korbit
