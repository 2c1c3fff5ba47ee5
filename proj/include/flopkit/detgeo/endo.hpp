#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flopkit/core/error.hpp"
#include "flopkit/poly/linalg.hpp"

namespace flopkit {

/// Row-major flattening of a 3x3 matrix.
RatVector vec(const RatMatrix& a);
RatMatrix unvec(const RatVector& v);
RatMatrix outer(const RatVector& v, const RatVector& w);

/// tr(AB).
Rational trace_pair(const RatMatrix& a, const RatMatrix& b);

/// Linear subspace of End(V), V = Q^3, given by an independent basis.
class EndoSubspace {
 public:
  EndoSubspace() = default;
  /// Throws DegenerateError on a dependent basis.
  explicit EndoSubspace(std::vector<RatMatrix> basis);
  /// Reduced basis of the span, dropping dependent generators.
  static EndoSubspace span_of(const std::vector<RatMatrix>& generators);
  static EndoSubspace full();

  const std::vector<RatMatrix>& basis() const { return basis_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  /// sum_k c_k basis[k].
  RatMatrix combination(const RatVector& c) const;
  bool contains(const RatMatrix& m) const;
  /// Coordinates of a member in this basis; nullopt when m is outside the span.
  std::optional<RatVector> coordinates(const RatMatrix& m) const;
  bool same_span(const EndoSubspace& other) const;

 private:
  std::vector<RatMatrix> basis_;
};

/// Orthogonal complement under the trace pairing; basis vectors are primitive integral.
EndoSubspace trace_perp(const EndoSubspace& s);
EndoSubspace intersect(const EndoSubspace& a, const EndoSubspace& b);

/// Basis of ker(a) and of the left kernel {c : c^T a = 0}.
std::vector<RatVector> kernel(const RatMatrix& a);
std::vector<RatVector> left_kernel(const RatMatrix& a);
/// Basis of im(a).
std::vector<RatVector> image(const RatMatrix& a);

/// M(ker a) in im(a) for a rank-2 matrix a.
bool tangent_sigma2_contains(const RatMatrix& a, const RatMatrix& m);
/// M(ker b) in im(b) for a rank-1 matrix b.
bool tangent_sigma1_contains(const RatMatrix& b, const RatMatrix& m);
/// The rank-1 matrix with kernel im(a) and image ker(a), for rank(a) = 2.
RatMatrix annihilator(const RatMatrix& a);

enum class DualityCase { tangent_sigma2, meets_sigma1 };
std::string to_string(DualityCase c);

/// Outcome of transporting a degeneracy of a 4-dimensional subspace to its complement.
struct DualityWitness {
  bool found = false;
  DualityCase input_case = DualityCase::meets_sigma1;
  RatMatrix primal;  // rank-1 member, or rank-2 tangency point, of the subspace
  // Complement side: either tangent to Sigma_1 at b0 with direction b1, or tangent to Sigma_2
  // at the rank-2 point b0 (then b1 is unset).
  bool complement_tangent_sigma1 = false;
  RatMatrix b0;
  std::optional<RatMatrix> b1;
  bool verified = false;
  int search_bound = 0;
  std::string detail;
};

/// Degeneracy witness on the complement side. `primal` supplies the degenerate point; without it
/// a bounded search over integer coordinates in [-bound, bound] is performed.
DualityWitness linalg_duality_witness(const EndoSubspace& lambda, DualityCase c,
                                      const std::optional<RatMatrix>& primal = std::nullopt,
                                      int bound = 3);

}  // namespace flopkit
