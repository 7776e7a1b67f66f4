#pragma once

#include "concord/exact/scalar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace concord {

/// D = U * M * V with U, V unimodular, D diagonal with d_1 | d_2 | ... and d_i >= 0.
struct SmithForm {
    IntMatrix D, U, V;
    IntMatrix U_inverse;
    Eigen::Index rank = 0;
    std::vector<Integer> diagonal() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Finitely generated abelian group Z^free_rank + sum Z/torsion[i], torsion[i] > 1 dividing torsion[i+1].
struct AbelianGroup {
    std::vector<Integer> torsion;
    long free_rank = 0;

    bool is_trivial() const { return torsion.empty() && free_rank == 0; }
    bool is_finite() const { return free_rank == 0; }
    Integer order() const;  // requires is_finite()
    std::string to_string() const;
    bool operator==(const AbelianGroup&) const = default;
};

/// Cokernel of m viewed as a map Z^cols -> Z^rows.
AbelianGroup cokernel(const IntMatrix& m);

/// Basis (as columns) of {x in Z^n : m x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

/// Some integral x with m x = b, if one exists.
std::optional<IntVector> solve_integer(const IntMatrix& m, const IntVector& b);

/// Column-style Hermite basis of the lattice spanned by the columns of m (zero columns dropped).
IntMatrix lattice_basis(const IntMatrix& m);

/// True iff every column of sub lies in the column span of m.
bool lattice_contains(const IntMatrix& m, const IntMatrix& sub);

/// Intersection of the column lattices of a and b (same row count).
IntMatrix lattice_intersection(const IntMatrix& a, const IntMatrix& b);

}  // namespace concord
