#include "finsym/involutions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace finsym {

Int InvolutionWeight::eval(const InvolutionStats& s) const {
    long long exponent = 0;
    if (neg_l1) exponent += s.l1;
    if (neg_l2) exponent += s.l2;
    if (neg_l1_even) exponent += s.l1_even;
    if (neg_l2_0mod4) exponent += s.l2_0mod4;
    if (neg_l2_2mod4) exponent += s.l2_2mod4;
    if (neg_half_l3_odd) exponent += s.l3_odd / 2;
    Int value = (exponent % 2 == 0) ? 1 : -1;
    for (int i = 0; i < s.l1; ++i) value *= base;
    return value;
}

namespace {

void add_parity(InvolutionStats& s, int group, int length, int delta) {
    if (group == 1) {
        s.l1 += delta;
        (length % 2 == 0 ? s.l1_even : s.l1_odd) += delta;
    } else if (group == 2) {
        s.l2 += delta;
        (length % 4 == 0 ? s.l2_0mod4 : s.l2_2mod4) += delta;
    } else {
        s.l3 += delta;
        (length % 2 == 0 ? s.l3_even : s.l3_odd) += delta;
    }
}

struct Enumerator {
    const std::vector<int>& len;
    std::function<void(const CentralizerInvolution&)> fn;
    const InvolutionFilter& filter;
    CentralizerInvolution cur;
    std::vector<bool> used;

    void run() {
        int L = (int)len.size();
        cur.partner.resize(L);
        cur.shift.assign(L, 0);
        used.assign(L, false);
        std::iota(cur.partner.begin(), cur.partner.end(), 0);
        rec(0);
    }

    void rec(int from) {
        int L = (int)len.size();
        int j = from;
        while (j < L && used[j]) ++j;
        if (j == L) {
            if (filter.accepts(cur.stats)) fn(cur);
            return;
        }
        used[j] = true;
        int a = len[j];

        /* fixed pointwise */
        cur.partner[j] = j;
        cur.shift[j] = 0;
        add_parity(cur.stats, 1, a, 1);
        rec(j + 1);
        add_parity(cur.stats, 1, a, -1);

        /* fixed with a half-rotation (even length only) */
        if (a % 2 == 0) {
            cur.shift[j] = a / 2;
            add_parity(cur.stats, 2, a, 1);
            rec(j + 1);
            add_parity(cur.stats, 2, a, -1);
            cur.shift[j] = 0;
        }

        /* swapped with a later cycle of equal length, any offset */
        for (int k = j + 1; k < L; ++k) {
            if (used[k] || len[k] != a) continue;
            used[k] = true;
            cur.partner[j] = k;
            cur.partner[k] = j;
            add_parity(cur.stats, 3, a, 2);
            for (int s = 0; s < a; ++s) {
                cur.shift[j] = s;
                cur.shift[k] = (a - s) % a;
                rec(j + 1);
            }
            add_parity(cur.stats, 3, a, -2);
            cur.partner[j] = j;
            cur.partner[k] = k;
            cur.shift[j] = 0;
            cur.shift[k] = 0;
            used[k] = false;
        }
        used[j] = false;
    }
};

void check_bound(const Partition& nu, int bound, const char* what) {
    if (nu.size() > bound) throw std::domain_error(std::string(what) + ": |nu| exceeds bound");
}

std::vector<int> fixed_cycle_indices(const CentralizerInvolution& w,
                                     const std::vector<int>& len) {
    std::vector<int> out;
    for (int j = 0; j < (int)len.size(); ++j)
        if (w.partner[j] == j && w.shift[j] == 0) out.push_back(j);
    return out;
}

Int pow2(int e) {
    Int v = 1;
    v <<= e;
    return v;
}

/* Number of +/- assignments to the fixed cycles with signed lengths summing
 * to d (each cycle contributes +length or -length to the signature). */
Int plus_sign_count(const std::vector<int>& lengths, std::optional<int> d) {
    if (!d) return pow2((int)lengths.size());
    std::map<int, Int> dist{{0, Int(1)}};
    for (int a : lengths) {
        std::map<int, Int> next;
        for (const auto& [v, c] : dist) {
            next[v + a] += c;
            next[v - a] += c;
        }
        dist.swap(next);
    }
    auto it = dist.find(*d);
    return it == dist.end() ? Int(0) : it->second;
}

/* Number of alternating sign patterns: two per fixed cycle, none if any fixed
 * cycle has odd length; every pattern has signature 0. */
Int star_sign_count(const InvolutionStats& s, std::optional<int> d) {
    if (s.l1_odd != 0) return 0;
    if (d && *d != 0) return 0;
    return pow2(s.l1);
}

}  // namespace

void enumerate_involutions(const Partition& nu, const InvolutionFilter& filter,
                           const std::function<void(const CentralizerInvolution&)>& fn,
                           int bound) {
    check_bound(nu, bound, "enumerate_involutions");
    Enumerator e{nu.parts(), fn, filter, {}, {}};
    e.run();
}

std::vector<CentralizerInvolution> enumerate_involutions(const Partition& nu,
                                                         const InvolutionFilter& filter,
                                                         int bound) {
    std::vector<CentralizerInvolution> out;
    enumerate_involutions(nu, filter, [&](const CentralizerInvolution& w) { out.push_back(w); },
                          bound);
    return out;
}

Int weighted_involution_sum(const Partition& nu, const InvolutionFilter& filter,
                            const InvolutionWeight& weight, int bound) {
    Int total = 0;
    enumerate_involutions(
        nu, filter, [&](const CentralizerInvolution& w) { total += weight.eval(w.stats); },
        bound);
    return total;
}

std::vector<std::vector<int>> brute_force_involutions(const Partition& nu) {
    if (nu.size() > 8) throw std::domain_error("brute_force_involutions: |nu| exceeds bound 8");
    int N = nu.size();
    /* w_nu rotates each cycle laid out contiguously */
    std::vector<int> wn(N);
    int off = 0;
    for (int a : nu.parts()) {
        for (int i = 0; i < a; ++i) wn[off + i] = off + (i + 1) % a;
        off += a;
    }
    std::vector<int> perm(N);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        bool ok = true;
        for (int x = 0; x < N && ok; ++x) {
            if (perm[perm[x]] != x) ok = false;
            else if (perm[wn[x]] != wn[perm[x]]) ok = false;
        }
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

InvolutionStats stats_from_permutation(const Partition& nu, const std::vector<int>& perm) {
    const auto& len = nu.parts();
    int L = (int)len.size();
    std::vector<int> offset(L);
    std::vector<int> cycle_of(nu.size());
    int off = 0;
    for (int j = 0; j < L; ++j) {
        offset[j] = off;
        for (int i = 0; i < len[j]; ++i) cycle_of[off + i] = j;
        off += len[j];
    }
    InvolutionStats s;
    for (int j = 0; j < L; ++j) {
        int image = perm[offset[j]];
        int k = cycle_of[image];
        if (len[k] != len[j])
            throw std::invalid_argument("permutation does not commute with w_nu");
        if (k > j) {
            add_parity(s, 3, len[j], 2);
        } else if (k == j) {
            int shift = image - offset[j];
            if (shift == 0) add_parity(s, 1, len[j], 1);
            else if (2 * shift == len[j]) add_parity(s, 2, len[j], 1);
            else throw std::invalid_argument("self-paired cycle with non-involutive shift");
        }
    }
    return s;
}

void enumerate_signed(const Partition& nu, SignedFamily family,
                      std::optional<int> signature_d,
                      const std::function<void(const SignedInvolution&)>& fn,
                      int bound) {
    enumerate_involutions(
        nu, InvolutionFilter{},
        [&](const CentralizerInvolution& w) {
            auto fixed = fixed_cycle_indices(w, nu.parts());
            int k = (int)fixed.size();
            if (family == SignedFamily::Star) {
                for (int j : fixed)
                    if (nu.parts()[j] % 2 != 0) return; /* no alternating pattern */
                if (signature_d && *signature_d != 0) return;
                std::vector<int> choice(k, 0);
                for (long long mask = 0; mask < (1LL << k); ++mask) {
                    for (int i = 0; i < k; ++i) choice[i] = (mask >> i) & 1;
                    fn(SignedInvolution{w, fixed, choice, 0});
                }
            } else {
                std::vector<int> choice(k, 1);
                for (long long mask = 0; mask < (1LL << k); ++mask) {
                    int d = 0;
                    for (int i = 0; i < k; ++i) {
                        choice[i] = (mask >> i) & 1 ? 1 : -1;
                        d += choice[i] * nu.parts()[fixed[i]];
                    }
                    if (signature_d && d != *signature_d) continue;
                    fn(SignedInvolution{w, fixed, choice, d});
                }
            }
        },
        bound);
}

Int count_signed(const Partition& nu, SignedFamily family, std::optional<int> signature_d,
                 int bound) {
    return weighted_signed_sum(nu, family, signature_d, InvolutionWeight{}, bound);
}

Int weighted_signed_sum(const Partition& nu, SignedFamily family,
                        std::optional<int> signature_d,
                        const InvolutionWeight& weight, int bound) {
    Int total = 0;
    enumerate_involutions(
        nu, InvolutionFilter{},
        [&](const CentralizerInvolution& w) {
            Int count;
            if (family == SignedFamily::Star) {
                count = star_sign_count(w.stats, signature_d);
            } else {
                std::vector<int> lengths;
                for (int j : fixed_cycle_indices(w, nu.parts())) lengths.push_back(nu.parts()[j]);
                count = plus_sign_count(lengths, signature_d);
            }
            if (count != 0) total += weight.eval(w.stats) * count;
        },
        bound);
    return total;
}

}  // namespace finsym
