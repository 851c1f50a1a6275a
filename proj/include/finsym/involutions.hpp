#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "finsym/partition.hpp"

namespace finsym {

/*
 * The canonical permutation w_nu of cycle type nu rotates each of the
 * l(nu) indexed cycles.  An involution w in its centralizer is stored at
 * cycle level: a length-preserving pairing of cycles plus a rotation offset
 * per cycle.  The cycles split into three groups:
 *   group 1: fixed pointwise            (partner = self, shift 0)
 *   group 2: fixed with a half-rotation (partner = self, shift nu_j / 2)
 *   group 3: swapped with another cycle of equal length (any shift)
 * and l1/l2/l3 count them, refined by the parity (and residue mod 4) of the
 * underlying cycle length.
 */
struct InvolutionStats {
    int l1 = 0, l2 = 0, l3 = 0;
    int l1_even = 0, l1_odd = 0;      /* group-1 cycles of even / odd length */
    int l2_0mod4 = 0, l2_2mod4 = 0;   /* group-2 cycles by length mod 4 */
    int l3_even = 0, l3_odd = 0;      /* group-3 cycles of even / odd length */
    friend bool operator==(const InvolutionStats&, const InvolutionStats&) = default;
    friend auto operator<=>(const InvolutionStats&, const InvolutionStats&) = default;
};

struct CentralizerInvolution {
    std::vector<int> partner;  /* cycle pairing; partner[j] == j for fixed cycles */
    std::vector<int> shift;    /* offset per cycle, mod the cycle length */
    InvolutionStats stats;
};

struct InvolutionFilter {
    bool no_fixed = false;        /* l1 == 0 (fixed-point-free) */
    bool no_odd_fixed = false;    /* l1_odd == 0 */
    bool no_even_fixed = false;   /* l1_even == 0 */
    bool no_even_half = false;    /* no group-2 cycle of even length; group-2
                                     lengths are always even, so l2 == 0 */
    bool accepts(const InvolutionStats& s) const {
        if (no_fixed && s.l1 != 0) return false;
        if (no_odd_fixed && s.l1_odd != 0) return false;
        if (no_even_fixed && s.l1_even != 0) return false;
        if (no_even_half && s.l2 != 0) return false;
        return true;
    }
};

/* Weight of the form
 *   (-1)^{sum of selected statistics} * base^{l1}
 * covering every weighting the verified identities use.  neg_half_l3_odd
 * selects l3_odd / 2 (group-3 cycles come in pairs, so l3_odd is even). */
struct InvolutionWeight {
    bool neg_l1 = false;
    bool neg_l2 = false;
    bool neg_l1_even = false;
    bool neg_l2_0mod4 = false;
    bool neg_l2_2mod4 = false;
    bool neg_half_l3_odd = false;
    int base = 1; /* 1, 2, or -2 */
    Int eval(const InvolutionStats& s) const;
};

/* Structural enumeration of the involutions in the centralizer of w_nu.
 * Default size bound 14. */
void enumerate_involutions(const Partition& nu, const InvolutionFilter& filter,
                           const std::function<void(const CentralizerInvolution&)>& fn,
                           int bound = 14);
std::vector<CentralizerInvolution> enumerate_involutions(const Partition& nu,
                                                         const InvolutionFilter& filter = {},
                                                         int bound = 14);

Int weighted_involution_sum(const Partition& nu, const InvolutionFilter& filter,
                            const InvolutionWeight& weight, int bound = 14);

/* Brute-force oracle: all permutations w of the |nu| points with w^2 = 1 that
 * commute with w_nu, as raw image tables; requires |nu| <= 8. */
std::vector<std::vector<int>> brute_force_involutions(const Partition& nu);

/* Cycle-level statistics recovered from a raw commuting involution. */
InvolutionStats stats_from_permutation(const Partition& nu, const std::vector<int>& perm);

/*
 * Signed involutions: a sign per fixed point of w.  In the "plus" family the
 * signs are constant on each group-1 cycle (one sign bit per cycle); in the
 * "star" family they alternate along each group-1 cycle (two patterns,
 * possible only when the cycle length is even).  The signature class in
 * Z^2 / Z(1,1) is stored as the single integer d = (#plus) - (#minus);
 * star-family members always have d = 0.
 */
enum class SignedFamily { Plus, Star };

struct SignedInvolution {
    CentralizerInvolution base;
    std::vector<int> fixed_cycles;      /* indices of group-1 cycles, ascending */
    std::vector<int> sign_choice;       /* plus: +1/-1 per fixed cycle;
                                           star: 0/1 pattern selector */
    int signature_d = 0;
};

void enumerate_signed(const Partition& nu, SignedFamily family,
                      std::optional<int> signature_d,
                      const std::function<void(const SignedInvolution&)>& fn,
                      int bound = 14);

Int count_signed(const Partition& nu, SignedFamily family,
                 std::optional<int> signature_d = std::nullopt, int bound = 14);

/* Sum of weight(w) over signed involutions (w, signs) in the family with the
 * given signature class; the weight depends only on w, so per base involution
 * this multiplies by the number of admissible sign choices. */
Int weighted_signed_sum(const Partition& nu, SignedFamily family,
                        std::optional<int> signature_d,
                        const InvolutionWeight& weight, int bound = 14);

}  // namespace finsym
