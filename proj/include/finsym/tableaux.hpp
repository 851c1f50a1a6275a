#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "finsym/partition.hpp"

namespace finsym {

/*
 * Signed tableaux on a Young diagram: signs alternate along each row, so a
 * row is determined by its length and terminal sign, and rows of equal length
 * are unordered.  A class is therefore one plus-count per distinct row
 * length.  The signature class in Z^2/Z(1,1) is determined by the odd rows
 * alone and is stored as d = (#odd rows ending +) - (#odd rows ending -).
 */
struct TableauClass {
    struct Rows {
        int length;
        int mult;        /* number of rows of this length */
        int plus_count;  /* how many of them end with a plus */
        friend bool operator==(const Rows&, const Rows&) = default;
    };
    std::vector<Rows> rows; /* distinct lengths, descending */

    int signature_d() const;
    friend bool operator==(const TableauClass&, const TableauClass&) = default;
};

void enumerate_tableaux(const Partition& mu, std::optional<int> signature_d,
                        const std::function<void(const TableauClass&)>& fn,
                        int bound = 30);
Int count_tableaux(const Partition& mu, std::optional<int> signature_d = std::nullopt,
                   int bound = 30);

/* flip_all flips the sign of every box: every terminal sign flips.
 * reverse_rows reverses each row, which flips the terminal sign exactly on
 * even-length rows.  Both are involutions and they commute. */
TableauClass flip_all(const TableauClass& t);
TableauClass reverse_rows(const TableauClass& t);

struct FixedCounts {
    Int flip;              /* classes fixed by flip_all */
    Int reverse;           /* classes fixed by reverse_rows */
    Int flip_reverse;      /* classes fixed by the composite */
};
FixedCounts fixed_counts_closed(const Partition& mu);
FixedCounts fixed_counts_enumerated(const Partition& mu);

/* Classes with the given signature fixed by reverse_rows, by enumeration
 * (no closed form exists for this count). */
Int count_reverse_fixed_with_signature(const Partition& mu, int signature_d, int bound = 30);

/*
 * Number of ways to remove a vertical strip of size b from mu, then a
 * vertical strip of size a from the result, leaving a diagram with all rows
 * even.  Summed over a common shrink r, these chains biject with signed
 * tableau classes of a fixed signature, which is what the tests check.
 */
Int vertical_strip_count(const Partition& mu, int a, int b);

/*
 * Alternating sum over the signature-(0,0) classes of
 *   (-1)^{(#odd rows ending -) - m(T)}
 * where rows are ordered by decreasing length with minus-terminated rows
 * below plus-terminated rows of equal length, and m(T) is the maximum over
 * rows R of (#odd minus-rows at R or below) - (#odd plus-rows at R or below).
 * Evaluates to prod over even i of (m_i(mu)+1) when every odd part size has
 * even multiplicity, and to 0 otherwise; the closed variant returns that
 * target directly.
 */
Int star_sign_sum(const Partition& mu, int bound = 30);
Int star_sign_sum_closed(const Partition& mu);

}  // namespace finsym
