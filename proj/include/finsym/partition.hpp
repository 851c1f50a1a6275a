#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace finsym {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/*
 * A partition is a weakly decreasing sequence of positive integers.  The empty
 * partition is a first-class value (it appears as the zero component of
 * orbit-indexed partition families).  Instances are immutable after
 * construction and validated on construction.
 */
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /* Parses the canonical text form "[3,1]" (a JSON array of parts). */
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }               /* sum of parts */
    int length() const { return (int)parts_.size(); }
    bool empty() const { return parts_.empty(); }
    /* 1-based part access; returns 0 past the end. */
    int part(int i) const { return (i >= 1 && i <= length()) ? parts_[i - 1] : 0; }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }

    std::string to_string() const;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/* Transpose (conjugate) partition: flip the Young diagram across the diagonal. */
Partition transpose(const Partition& mu);

/* n(mu) = sum over rows of (i-1)*mu_i = sum over columns of C(mu'_j, 2). */
long long n_stat(const Partition& mu);

struct PartitionStats {
    std::map<int, int> mult;   /* part size -> multiplicity m_i */
    bool is_even;              /* all parts even */
    int length_even;           /* number of even parts */
    int length_odd;            /* number of odd parts */
    int length_0mod4;          /* number of parts == 0 (mod 4) */
    int length_2mod4;          /* number of parts == 2 (mod 4) */
    Int z;                     /* prod_i i^{m_i} m_i!  (centralizer order) */
    int epsilon;               /* (-1)^{number of even parts} */
};
PartitionStats stats(const Partition& nu);

std::map<int, int> multiplicities(const Partition& mu);

/* Scalar predicates and products used by the closed-form multiplicity rules. */
bool is_even_partition(const Partition& mu);          /* all parts even */
bool has_even_multiplicities(const Partition& mu);    /* all m_i even; same as transpose being even */
bool even_sizes_have_even_mult(const Partition& mu);  /* m_i even for every even i */
bool odd_sizes_have_even_mult(const Partition& mu);   /* m_i even for every odd i */
Int prod_mult_plus_one(const Partition& mu);            /* prod_i (m_i + 1) */
Int prod_mult_plus_one_even_sizes(const Partition& mu); /* prod over even i of (m_i + 1) */
Int prod_mult_plus_one_odd_sizes(const Partition& mu);  /* prod over odd i of (m_i + 1) */

/*
 * All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
 * Throws std::domain_error above the bound (the library is tuned for
 * exhaustive sweeps, not for generating astronomically many partitions).
 */
std::vector<Partition> partitions_of(int n, int bound = 40);

/* Number of partitions of n by the Euler pentagonal recurrence (used to
 * cross-check the enumerator). */
Int partition_count(int n);

}  // namespace finsym
