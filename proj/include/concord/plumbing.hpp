#pragma once

#include "concord/exact/scalar.hpp"

#include <string>
#include <vector>

namespace concord {

/// Star-shaped plumbing graph: root decoration e0 and nu >= 3 chains of decorations <= -2,
/// each listed root-outward.
struct PlumbingGraph {
    long e0 = 0;
    std::vector<std::vector<long>> branches;

    /// Throws InputError unless nu >= 3 and every e_{l,j} <= -2.
    void validate() const;
    Eigen::Index vertex_count() const;
    /// Matrix index of b_{l,j} (l, j zero-based); b_0 has index 0.
    Eigen::Index index(std::size_t l, std::size_t j) const;
    std::vector<std::string> basis_labels() const;
};

/// x_1 - 1/(x_2 - 1/(...)); entries must be >= 2, nonempty (else CapabilityError).
Rational cf_value(const std::vector<long>& entries);
/// Inverse of cf_value on reduced fractions p/q > 1.
std::vector<long> hirzebruch_jung(const Rational& x);

struct BranchData {
    Integer alpha, omega;
    /// n_{i,j}/d_{i,j} = [-e_i, ..., -e_j] for 1 <= i <= j <= s; n_{s+1,s} = 1, d_{s+1,s} = 0.
    Integer n(std::size_t i, std::size_t j) const;
    Integer d(std::size_t i, std::size_t j) const;
    std::size_t length() const { return chain.size(); }

    std::vector<long> chain;
};

BranchData branch_data(const std::vector<long>& chain);
std::vector<BranchData> branch_data(const PlumbingGraph& g);

IntMatrix intersection_form(const PlumbingGraph& g);
/// e = e0 + sum omega_l / alpha_l.
Rational orbifold_euler(const PlumbingGraph& g);
/// e < 0, cross-checked against the signature of the intersection form
/// (InvariantViolation on disagreement).
bool is_negative_definite(const PlumbingGraph& g);

}  // namespace concord
