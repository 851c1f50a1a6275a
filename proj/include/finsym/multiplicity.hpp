#pragma once

#include <string>

#include "finsym/orbits.hpp"
#include "finsym/partition.hpp"

namespace finsym {

/*
 * The ten symmetric-space cases.  Split cases pair with split orbit tables
 * (general linear groups), nonsplit cases with nonsplit tables (unitary
 * groups).  Case keys, as used by the CLI:
 *   gl-sp    GL_n / Sp_n                (n even)
 *   u-sp     U_n / Sp_n                 (n even)
 *   gl-glgl  GL_n / (GL_{n+} x GL_{n-})
 *   gl-gl2   GL_n / GL_{n/2}(q^2)       (n even)
 *   u-uu     U_n / (U_{n+} x U_{n-})
 *   u-u4     U_n / U_{n/2}(q^4)         (n even)
 *   gl-o     GL_n / O_n                 (n odd)
 *   gl-opm   GL_n / O_n^eps             (n even)
 *   u-o      U_n / O_n                  (n odd)
 *   u-opm    U_n / O_n^eps              (n even)
 */
enum class CaseKind { GlSp, USp, GlGlGl, GlGl2, UUU, UU4, GlO, GlOpm, UO, UOpm };

struct SymmetricSpaceCase {
    CaseKind kind;
    int n;
    int n_plus = 0, n_minus = 0; /* gl-glgl / u-uu */
    int epsilon = 1;             /* gl-opm / u-opm: +1 split form, -1 non-split form */
    bool so_variant = false;     /* evaluate the special-orthogonal subgroup instead */

    Twist twist() const;
    /* Validates parity constraints and parameters; throws std::invalid_argument. */
    static SymmetricSpaceCase make(CaseKind kind, int n, int n_plus = 0, int n_minus = 0,
                                   int epsilon = 1, bool so_variant = false);
    static CaseKind kind_from_key(const std::string& key);
    static std::string key(CaseKind kind);
};

/*
 * Dimension of the subgroup-invariant subspace in the irreducible
 * representation labeled by rho (one closed form per case).  Internal
 * half-integer terms are combined exactly and the result is asserted to be a
 * nonnegative integer.
 */
Int multiplicity(const SymmetricSpaceCase& c, const MultiPartition& rho);

/* The closed form specialized to unipotent labels (everything supported on
 * the orbit of 1), including the ceiling/floor presentation for the
 * even-dimensional orthogonal cases. */
Int unipotent_multiplicity(const SymmetricSpaceCase& c, const Partition& rho);

/* Special-orthogonal invariants via the two orthogonal branches:
 * multiplicity(rho) + multiplicity(zeta-twisted rho).  Concrete tables only. */
Int so_multiplicity(const SymmetricSpaceCase& c, const MultiPartition& rho);

/*
 * The pairing of the basic (virtual) character attached to nu with the
 * permutation representation on the symmetric space, by two independent
 * routes:
 *   Involution : the per-orbit factorized weighted involution sums.
 *   Character  : the transition to irreducibles, i.e. a signed sum over all
 *                rho with |rho_xi| = |nu_xi| of the character-value product
 *                times multiplicity().
 * Requires total rank <= 8 and support on at most 3 orbits.
 */
enum class Route { Involution, Character };
Int basic_character_multiplicity(const SymmetricSpaceCase& c, const MultiPartition& nu,
                                 Route route);

}  // namespace finsym
