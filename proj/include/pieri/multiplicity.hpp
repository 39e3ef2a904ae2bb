#pragma once

#include <cstdint>
#include <optional>

#include "pieri/cone.hpp"
#include "pieri/diagrams.hpp"

namespace pieri {

/// Number of upper-triangular nonnegative arrays c(s, t) whose "degree" at
/// each i (sum of c over pairs containing i) equals residual[i].
std::uint64_t count_pair_arrays(const Composition& residual);

/// Multiplicity of sigma^F in sigma^D (x) sigma^(p_1) (x) ... (x) sigma^(p_ell)
/// for the orthogonal group in the stable range, as the sum over
/// (E, A, B, C) with S(A, B, C) = P of K_{F/E,A} K_{D/E,B}.
std::uint64_t multiplicity(int k, int ell, const YoungDiagram& f, const YoungDiagram& d, const Composition& p);

/// The same number counted as lattice points of the fiber polytope.
std::uint64_t multiplicity_via_cone(int k, int ell, const YoungDiagram& f, const YoungDiagram& d,
                                    const Composition& p);

/// Every F with nonzero multiplicity. When n is given it must satisfy the
/// stable range 2 (k + ell) < n.
DiagramTable decompose_o(int k, int ell, const YoungDiagram& d, const Composition& p, std::optional<int> n = {});

/// Symplectic counterpart for Sp_2n, requiring k + ell <= n; the table
/// coincides with the orthogonal one.
DiagramTable decompose_sp(int k, int ell, const YoungDiagram& d, const Composition& p, int n);

}  // namespace pieri
