#pragma once

#include "concord/exact/scalar.hpp"
#include "concord/exact/snf.hpp"

#include <map>
#include <optional>
#include <vector>

namespace concord {

/// Q/Z-valued symmetric pairing on Z/orders[0] + Z/orders[1] + ..., given on the standard generators.
/// Entries of `pairing` are kept reduced to [0, 1).
struct FiniteLinkingForm {
    std::vector<Integer> orders;  // each > 1
    RatMatrix pairing;

    /// Symmetry, order(g_i) B(g_i, g_j) = 0, and nonsingularity. Throws InputError.
    void validate() const;
    Integer order() const;
    AbelianGroup group() const;
    /// B(x, y) mod 1 for coordinate vectors.
    Rational operator()(const IntVector& x, const IntVector& y) const;
    bool operator==(const FiniteLinkingForm&) const = default;
};

/// Reduces q into [0, 1).
Rational mod_one(const Rational& q);

/// The sign in front of v^T L^{-1} w. The negative convention is the default.
enum class LinkSign { negative, positive };

struct FormFromMatrix {
    FiniteLinkingForm form;
    /// Row i sends an integer vector to its coordinate on the i-th cyclic generator.
    IntMatrix coordinates;
    /// Column i is an integer vector representing the i-th generator.
    IntMatrix generators;
};

/// Linking form on coker(L) for symmetric nonsingular L: B(v, w) = -+ v^T L^{-1} w mod 1.
FormFromMatrix form_from_linking_matrix(const IntMatrix& l, LinkSign sign = LinkSign::negative);

/// scale^2 * (-+ v^T L^{-1} w), not reduced.
Rational linking_number(const IntMatrix& l, const IntVector& v, const IntVector& w, const Integer& scale,
                        LinkSign sign = LinkSign::negative);

/// Order of the class of v in coker(L).
Integer class_order(const IntMatrix& l, const IntVector& v);

FiniteLinkingForm orthogonal_sum(const FiniteLinkingForm& a, const FiniteLinkingForm& b);
FiniteLinkingForm negate(const FiniteLinkingForm& b);
/// Cyclic form <num/den> on Z/den.
FiniteLinkingForm cyclic_form(const Integer& num, const Integer& den);

/// Restriction to each Sylow p-subgroup, generated by (d_i / p^{v_p(d_i)}) g_i.
std::map<Integer, FiniteLinkingForm> primary_decompose(const FiniteLinkingForm& b);

struct MetabolicOptions {
    Integer order_bound{4096};
    long node_budget = 2000000;
};

/// Generators (coordinate vectors) of some P with P = P^perp, or nullopt. Throws
/// CapabilityError when |A| exceeds the bound or the search budget runs out.
std::optional<std::vector<IntVector>> find_metabolizer(const FiniteLinkingForm& b, const MetabolicOptions& opt = {});
bool is_metabolic(const FiniteLinkingForm& b, const MetabolicOptions& opt = {});
/// is_metabolic(b1 + (-b2)).
bool witt_equivalent(const FiniteLinkingForm& b1, const FiniteLinkingForm& b2, const MetabolicOptions& opt = {});

}  // namespace concord
