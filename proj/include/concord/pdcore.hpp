#pragma once

#include "concord/exact/laurent.hpp"
#include "concord/exact/scalar.hpp"
#include "concord/exact/snf.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace concord {

// A finitely generated model of a monoid with an equivalence relation and a UFD-valued
// invariant chi. Monoid elements are words (nonnegative counts per generator); the class
// map is linear into C = Z^free_rank + sum Z/torsion[i]; chi is multiplicative.

struct Irreducible {
    std::string name;
    std::string star;  // name of the *-conjugate; equal to name when self-dual
};

using Word = std::vector<long>;  // count per generator

struct Generator {
    std::string name;
    std::map<std::string, int> chi;  // irreducible -> exponent
    IntVector cls;                   // class in C, coordinates (free..., torsion...)
    std::optional<Word> negation;    // a word with class -cls and the same chi
};

struct PDInstance {
    std::vector<Irreducible> irreducibles;
    std::vector<Generator> generators;
    long free_rank = 0;
    std::vector<Integer> torsion;

    /// Checks labels, the star involution, self-duality of each chi(g), and that each
    /// generator has a negation word (declared, or found with counts <= bound, which is
    /// then stored). Throws InputError on failure.
    void validate(long bound = 8);
    Eigen::Index dimension() const { return free_rank + static_cast<Eigen::Index>(torsion.size()); }
    /// Columns spanning the relations of C inside Z^dimension.
    IntMatrix relations() const;
    IntVector word_class(const Word& w) const;
    std::map<std::string, int> word_chi(const Word& w) const;
    /// Representatives of the *-associate classes of irreducibles, in declaration order.
    std::vector<std::string> star_classes() const;
};

/// Subgroup of C given by generators, together with its full preimage lattice in Z^n.
struct SubgroupReport {
    IntMatrix generators;  // columns, elements of C
    IntMatrix lattice;     // basis of generators + relations
    /// The subgroup as an abstract group.
    AbelianGroup group;
    bool exact = true;  // generator-generated subgroups are exact under (D1)-(D3)
};

SubgroupReport delta_subgroup(const PDInstance& inst);
/// C_lambda and C^lambda.
std::pair<SubgroupReport, SubgroupReport> primary_and_coprime_subgroups(const PDInstance& inst,
                                                                         const std::string& lambda);

struct HomReport {
    AbelianGroup domain, codomain;
    bool injective = false, surjective = false;
    bool exact = true;
    bool isomorphism() const { return injective && surjective; }
};

/// Sum of inclusions of C_lambda/Delta into C/Delta over the *-classes present.
HomReport phi_L(const PDInstance& inst);
/// C/Delta -> sum of C/C^lambda over the *-classes present.
HomReport phi_R(const PDInstance& inst);

enum class Verdict { holds, fails, unknown };
std::string to_string(Verdict v);

struct StrongPDReport {
    Verdict verdict = Verdict::unknown;
    std::optional<Word> witness;  // a word violating strong existence, if that is the failure
    bool uniqueness = false;      // Phi_L injective
    std::string reason;
};

/// Strong existence is decided over supports: words with support T decompose along the
/// factors of their chi iff every generator class of T lies in Delta + sum C_lambda over
/// the factors of T. Instances with more than `max_generators` generators give unknown.
StrongPDReport strong_pd_check(const PDInstance& inst, std::size_t max_generators = 20);

struct ExtensionRow {
    std::string lambda;
    AbelianGroup sub, whole, quotient;  // A_lambda, C_lambda, G_lambda (or the coprime versions)
    bool exact = false;
};

struct ExtensionReport {
    ExtensionRow delta;
    std::vector<ExtensionRow> primary;  // 0 -> A_lambda -> C_lambda -> G_lambda -> 0
    std::vector<ExtensionRow> coprime;  // 0 -> A^lambda -> C^lambda -> G^lambda -> 0
};

/// Exactness checks for a subgroup A of C (columns of a_gens, elements of C).
ExtensionReport extension_report(const PDInstance& inst, const IntMatrix& a_gens);

/// The two appendix examples: chi(K) = lambda, chi(J) = mu nu (left but not right
/// decomposable), and chi(K) = lambda mu, chi(J) = mu nu (right but not left).
PDInstance example_left_not_right();
PDInstance example_right_not_left();

/// Seeded random instance: at most 4 base generators each with a negation partner,
/// at most 3 *-classes of irreducibles, C = Z^a + Z/b with a <= 2, b <= 6.
PDInstance random_instance(std::uint64_t seed);

/// Builds an instance from Laurent polynomial invariants by factoring them over Q.
PDInstance instance_from_polynomials(const std::vector<std::pair<LaurentPoly, IntVector>>& gens, long free_rank,
                                     const std::vector<Integer>& torsion);

/// Group of cosets big/small for lattices small <= big (columns).
AbelianGroup lattice_quotient(const IntMatrix& big, const IntMatrix& small);

}  // namespace concord
