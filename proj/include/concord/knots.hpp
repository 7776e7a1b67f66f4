#pragma once

#include "concord/exact/laurent.hpp"
#include "concord/exact/scalar.hpp"
#include "concord/exact/snf.hpp"

#include <optional>
#include <vector>

namespace concord {

/// Throws InputError unless s is square of even size with det(S - S^T) = +-1.
void validate_seifert(const IntMatrix& s);

/// det(tS - S^T) as an honest polynomial in t (no normalization).
poly::Poly seifert_determinant(const IntMatrix& s);

/// det(tS - S^T), shifted to be symmetric under t -> 1/t, with Delta(1) = 1.
LaurentPoly alexander_polynomial(const IntMatrix& s);

/// Levine-Tristram signature at omega = exp(2 pi i k/d): signature of
/// (1-omega) S + (1-conj omega) S^T, exactly in Q(zeta_d). At zeros of the
/// Alexander polynomial the average of the two one-sided limits is returned.
int lt_signature(const IntMatrix& s, long k, long d);

/// Same value computed in Q(i) through s = tan(pi k/d):
/// sign(s) * sig(s(S+S^T) - i(S-S^T)). Jump points are handled identically.
int lt_signature_cayley(const IntMatrix& s, long k, long d);

/// (1/d) sum_{k=0}^{d-1} lt_signature(s, k, d).
Rational rho_zd(const IntMatrix& s, long d);

/// H_1 of the r-fold branched cover: coker of tS - S^T with t the r-cycle permutation matrix.
AbelianGroup branched_cover_homology(const IntMatrix& s, long r);

struct Metabolizer {
    /// Canonical linear factors whose eigen-summands span the metabolizer.
    std::vector<LaurentPoly> summands;
    /// Spanning vectors as columns, in the coordinates of the presentation tS - S^T.
    RatMatrix basis;
};

/// All P with P = P^perp for the Blanchfield pairing on the rational Alexander module.
/// Handles modules that split into pairwise distinct linear eigen-summands; throws
/// CapabilityError otherwise.
std::vector<Metabolizer> blanchfield_metabolizers(const IntMatrix& s);

/// Some f with delta = unit * f * f^*, if one exists.
std::optional<LaurentPoly> fox_milnor_factor(const LaurentPoly& delta);

struct PrimeReport {
    Integer q;
    int exponent = 0;
    bool coprime_to_m_m1 = false;
    bool r_divides_q_minus_1 = false;
};

struct CoverOrderReport {
    Integer u;  // (m+1)^r - m^r
    bool odd = false;
    bool r_prime = false;
    std::vector<PrimeReport> primes;  // primes <= bound dividing u
    Integer cofactor;                 // part of u left after removing those primes
    /// Every reported prime q with q coprime to m(m+1) satisfies r | q-1 (vacuous unless r is prime).
    bool fermat_check = true;
};
CoverOrderReport cover_order_arithmetic(long m, long r, long prime_bound = 1000000);

IntMatrix block_sum(const IntMatrix& a, const IntMatrix& b);
/// [[-1, 1], [0, -1]].
IntMatrix trefoil_seifert();

}  // namespace concord
