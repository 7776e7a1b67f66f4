#pragma once

#include "concord/exact/scalar.hpp"
#include "concord/plumbing.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace concord {

/// Characteristic vector in the dual basis (b*_0, b*_{l,j}).
using CharVector = IntVector;

/// k_r = K - 2(a0 b*_0 + sum a_{l,j} b*_{l,j}).
struct SpinCRep {
    Integer a0;
    std::vector<std::vector<Integer>> a;  // a[l][j] = a_{l+1,j+1}

    static SpinCRep zero(const PlumbingGraph& g);
    bool operator==(const SpinCRep&) const = default;
};

/// Coset label of a characteristic vector modulo 2 lambda(H_2).
struct SpinCClass {
    std::vector<Integer> residue;
    auto operator<=>(const SpinCClass&) const = default;
    std::string to_string() const;
};

CharVector canonical_class(const PlumbingGraph& g);
CharVector char_vector(const PlumbingGraph& g, const SpinCRep& rep);
bool is_characteristic(const PlumbingGraph& g, const CharVector& k);
/// Solution x of lambda x = k when it is integral (c_1 of the class vanishes).
std::optional<IntVector> preimage(const PlumbingGraph& g, const CharVector& k);

/// a_l = sum_{t=1..s_l} n^l_{t+1,s_l} a_{l,t} with n^l_{s_l+1,s_l} = 1.
std::vector<Integer> aggregate_a(const PlumbingGraph& g, const SpinCRep& rep);
/// Digits of a_l written root-side first: a_{l,t} = floor(r / n_{t+1,s}).
std::vector<Integer> greedy_digits(const BranchData& b, Integer a_l);
SpinCRep rep_from_aggregates(const PlumbingGraph& g, const Integer& a0, const std::vector<Integer>& agg);

/// Last i that has to be checked in the a_0 condition.
Integer distinguished_check_range(const PlumbingGraph& g, const Integer& a0, const std::vector<Integer>& agg);
/// The a_0 inequality for all i > 0 and 0 <= a_l < alpha_l, on aggregates only.
bool satisfies_aggregate_conditions(const PlumbingGraph& g, const Integer& a0, const std::vector<Integer>& agg);
/// Aggregate conditions plus digits equal to the greedy expansion of each a_l.
bool is_distinguished(const PlumbingGraph& g, const SpinCRep& rep);

/// R = (1 + a0 + sum (a_l - alpha_l + 1)/alpha_l) / e; Delta_i >= 0 for i >= R.
Rational tau_bound(const PlumbingGraph& g, const Integer& a0, const std::vector<Integer>& agg);
/// tau(0..count-1) for arbitrary aggregates.
std::vector<Integer> tau_values(const PlumbingGraph& g, const Integer& a0, const std::vector<Integer>& agg,
                                std::size_t count);

struct TauMin {
    Integer minimum;
    std::vector<Integer> table;  // tau(0..max(0, ceil R))
};
TauMin tau_min(const PlumbingGraph& g, const SpinCRep& rep);

/// k^T lambda^{-1} k.
Rational k_square(const PlumbingGraph& g, const CharVector& k);
/// (k_r^2 + b_2)/4 - 2 min tau for a distinguished rep on a negative definite graph.
Rational d_invariant(const PlumbingGraph& g, const SpinCRep& rep);

SpinCClass spinc_class(const PlumbingGraph& g, const CharVector& k);

struct C1ZeroClass {
    SpinCClass cls;
    CharVector k;
    IntVector x;  // lambda x = k
};
/// Classes of characteristic vectors in Im(lambda), sorted by class label.
std::vector<C1ZeroClass> c1_zero_classes(const PlumbingGraph& g);

/// Minimal element of the class in the Lipman cone, computed by a Laufer-type sequence.
/// Independent of the digit convention used by is_distinguished.
SpinCRep laufer_representative(const PlumbingGraph& g, const CharVector& k);
/// d-invariant of the class of k via its Laufer representative.
Rational class_d_invariant(const PlumbingGraph& g, const CharVector& k);

enum class SearchStatus { found, absent, unknown };
std::string to_string(SearchStatus s);

struct SearchBounds {
    std::optional<Integer> a0_max;                 // default: the i = 1 bound, -1 - e0
    std::optional<std::vector<Integer>> agg_max;   // default: alpha_l - 1
    long budget = 5'000'000;                       // candidate limit
};

struct SearchResult {
    SearchStatus status = SearchStatus::unknown;
    std::optional<SpinCRep> rep;
    long examined = 0;
};

/// Searches (a0, a_l) with greedy digits, which keeps every digit in [0, -e_{l,j}-1].
/// absent is reported only when the full default box was scanned.
SearchResult find_distinguished(const PlumbingGraph& g, const SpinCClass& target, const SearchBounds& bounds = {});
/// All distinguished reps in the default box, in search order.
std::vector<SpinCRep> all_distinguished(const PlumbingGraph& g, long budget = 5'000'000);

/// d(L(p,q), i) by the two-term recursion with d(L(1,0)) = 0.
Rational lens_d(const Integer& p, const Integer& q, const Integer& i);
/// Unique i with 2i = q - 1 mod p; InputError for even p.
Integer lens_canonical_index(const Integer& p, const Integer& q);

}  // namespace concord
