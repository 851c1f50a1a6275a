#pragma once

#include <functional>

#include "finsym/partition.hpp"

namespace finsym {

/*
 * Irreducible characters of the symmetric group, labeled so that
 * chi^{(n)} is the trivial character and chi^{(1^n)} the sign character,
 * and chi^{rho'}_nu = epsilon_nu * chi^{rho}_nu.
 *
 * character() runs the Murnaghan-Nakayama recursion (border strips removed
 * for the largest cycle first) with a global memo; character_oracle() is an
 * independent check that expands the power-sum product into monomials and
 * inverts the unitriangular Kostka matrix.  Both are exact.
 */
Int character(const Partition& rho, const Partition& nu);

/* Independent validation path; requires |rho| = |nu| <= 8. */
Int character_oracle(const Partition& rho, const Partition& nu);

/* Kostka number: semistandard tableaux of shape lambda and content mu,
 * counted by explicit horizontal-strip recursion (exposed for tests). */
Int kostka(const Partition& lambda, const Partition& mu);

enum class RhoFilter {
    EvenParts,          /* rho even */
    EvenTranspose,      /* rho' even, i.e. all multiplicities of rho even */
    EvenMultEvenSizes,  /* m_i(rho) even for every even i */
    EvenMultOddSizes,   /* m_i(rho) even for every odd i */
    All,
};

/* Sum of chi^{rho}_{nu} over all rho of |nu| passing the filter. */
Int even_character_sum(const Partition& nu, RhoFilter filter, int bound = 20);

/* Weighted variant: sum of weight(rho) * chi^{rho}_{nu}; a zero weight
 * acts as a filter. */
Int weighted_character_sum(const Partition& nu,
                           const std::function<Int(const Partition&)>& weight,
                           int bound = 20);

}  // namespace finsym
