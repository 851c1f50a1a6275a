#pragma once

#include <map>
#include <string>
#include <vector>

#include "finsym/partition.hpp"

namespace finsym {

/*
 * Orbits of the power maps x -> qx (split) and x -> -qx (nonsplit) on the
 * union over m of the residue rings Z/M_m, where M_m = q^m - 1 in the split
 * mode and M_m = q^m - (-1)^m in the nonsplit mode; the rings embed along
 * divisibility via x -> x * (M_{m'} / M_m).  Each orbit carries
 *   m       its size (equal to the level at which it first appears),
 *   d       the sign (-1)^x of any member at the orbit's own level,
 *   duality the orbit of -x,
 * and the distinguished orbits of 0 ("One") and of M_1/2 ("MinusOne").
 *
 * Abstract tables declare (tag, m, d, pairing) directly without a q; every
 * multiplicity formula depends on the orbits only through these invariants.
 */
enum class OrbitTag { One, MinusOne, SelfDualOther, DualPair };
enum class Twist { Split, Nonsplit };

std::string to_string(OrbitTag tag);
std::string to_string(Twist twist);

struct FrobeniusOrbit {
    OrbitTag tag;
    int m;
    int d;             /* +1 or -1 */
    int partner;       /* index of the dual orbit; own index unless DualPair */
    long long rep = -1;      /* concrete mode: smallest member at own level */
    long long modulus = 0;   /* concrete mode: M_m at own level */
};

struct OrbitTable {
    Twist twist = Twist::Split;
    long long q = 0;         /* 0 = abstract */
    int max_level = 0;
    std::vector<FrobeniusOrbit> orbits;
    bool concrete() const { return q != 0; }
};

/* Concrete enumeration; q odd <= 97, max_level <= 6, and every ring modulus
 * must stay <= 5e6 (full residue rings are walked). */
OrbitTable enumerate_orbits(long long q, Twist twist, int max_level);

struct AbstractOrbitSpec {
    OrbitTag tag;
    int m;
    int d;
};
/* DualPair specs expand into two partnered orbits. */
OrbitTable make_abstract_table(Twist twist, const std::vector<AbstractOrbitSpec>& specs);

/*
 * A finitely supported assignment of partitions to orbits;
 * total() = sum of m * |partition| is the rank n it parametrizes.
 */
struct MultiPartition {
    const OrbitTable* table = nullptr;
    std::map<int, Partition> assign; /* orbit index -> nonempty partition */
    int total() const;
    Partition at(int orbit_index) const; /* empty partition when unassigned */
};

/*
 * Twist by the fixed order-two character class zeta: concrete tables only.
 * zeta is the class of k_zeta in Z/M_1 with k_zeta odd, chosen as M_1/2 when
 * that is odd (making the twist an involution) and 1 otherwise; at level m it
 * acts by adding k_zeta * (M_m / M_1), which commutes with the power map and
 * preserves orbit sizes.
 */
int zeta_twisted_orbit(const OrbitTable& table, int orbit_index);
MultiPartition zeta_twist(const MultiPartition& rho);

}  // namespace finsym
