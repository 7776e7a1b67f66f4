#pragma once

#include "concord/exact/scalar.hpp"
#include "concord/plumbing.hpp"

#include <optional>
#include <string>
#include <vector>

namespace concord {

enum class CheckStatus { pass, fail, flagged };
std::string to_string(CheckStatus s);

struct Check {
    std::string name;
    std::string subject;   // which object the check is about
    std::string expected;  // the printed value or predicate
    std::string computed;
    CheckStatus status = CheckStatus::fail;
};

struct VerificationReport {
    std::vector<Check> checks;
    /// 0 when nothing failed; flagged checks do not fail.
    int exit_code() const;
    void append(const VerificationReport& other);
};

/// 69713280 (6n + 8m + 86).
Integer rho_budget(long n, long m);

/// Delta_i = tau(i+1) - tau(i) >= 0 for all i >= 0, for arbitrary aggregates. Checked
/// directly up to the bound R (past which the inequality is automatic); when
/// use_r_bound is set, additionally requires R <= 10 and scans only i <= 10.
struct AssertionOutcome {
    bool holds = false;
    Rational r_bound;
    long scanned = 0;               // number of Delta_i inspected
    std::optional<long> first_negative;
};
AssertionOutcome check_assertion(const PlumbingGraph& g, const Integer& a0, const std::vector<Integer>& agg,
                                 bool use_r_bound);

/// Delta_i for the displayed k_1, k_2 closed forms (i >= 0 for k_1, i >= 1 for k_2).
Integer closed_form_delta_k1(long m, long i);
Integer closed_form_delta_k2(long m, long i);

/// Every concrete number of the family at parameter m (odd, >= 3); n enters the rho budget.
/// Throws InputError for even m or m < 3.
VerificationReport verify_paper(long m, long n = 2);

/// Assertion checks for odd m in [from, to]: direct scan below 23, R-bound route from 23 on.
VerificationReport assertion_scan(long from, long to, int jobs = 1);

}  // namespace concord
