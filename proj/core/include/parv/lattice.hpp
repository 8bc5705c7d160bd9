#pragma once

#include "parv/polyhedron.hpp"
#include "parv/quadratic_form.hpp"

namespace parv {

/// The lattice is always Z^d in basis coordinates; all geometry lives in the
/// two Gram matrices. `construction` (G_V) defines the Voronoi cell,
/// `ambient` (G_A) defines projections and orthogonality. The two coincide
/// in the Voronoi case; a skew ambient form realizes a tiling that is
/// affinely equivalent to a Voronoi tiling without being one.
class Lattice {
public:
  Lattice(QuadraticForm construction, QuadraticForm ambient);
  explicit Lattice(QuadraticForm construction);

  int dim() const { return construction_.dim(); }
  const QuadraticForm& construction_form() const { return construction_; }
  const QuadraticForm& ambient_form() const { return ambient_; }
  bool voronoi_case() const { return construction_ == ambient_; }

private:
  QuadraticForm construction_;
  QuadraticForm ambient_;
};

/// Coset of a lattice vector modulo 2Z^d, as a bit vector. There are
/// exactly 2^d classes.
struct ParityClass {
  std::vector<int> bits;
  bool operator==(const ParityClass& o) const { return bits == o.bits; }
  bool operator<(const ParityClass& o) const { return bits < o.bits; }
  bool is_zero() const;
};

ParityClass parity_class(const IVec& v);

/// All integer vectors v with ||v - center||^2_form <= r2, in lexicographic
/// order. Exact Fincke-Pohst style recursion over the LDL^T factorization;
/// no square roots, no float rounding.
std::vector<IVec> enumerate_ball(const QuadraticForm& form, const Vec& center, const Scalar& r2);

enum class FormChoice { construction, ambient };
std::vector<IVec> enumerate_ball(const Lattice& l, const Vec& center, const Scalar& r2,
                                 FormChoice which = FormChoice::construction);

struct CosetMin {
  Scalar min_norm2;
  std::vector<IVec> argmins;  // closed under negation, lex order
};

/// Shortest vectors of a nonzero parity class under the construction form.
/// Radius doubling from trace(G_V), then one certifying re-scan at the
/// found minimum.
CosetMin coset_shortest(const Lattice& l, const ParityClass& cls);

struct RelevantVectorSet {
  std::vector<IVec> vectors;  // closed under negation, lex order
  std::vector<Scalar> norm2;  // parallel to vectors
};

/// Facet vectors of the Voronoi cell: one +-pair per parity class whose
/// coset minimum is strict (attained by exactly two opposite vectors).
RelevantVectorSet relevant_vectors(const Lattice& l);

/// Squared circumradius of the Voronoi cell = max ||vertex||^2_{G_V}; any
/// tile meeting the cell has its center within twice this radius.
Scalar covering_radius_bound(const Lattice& l, const VPolytope& cell);

}  // namespace parv
