#include "finsym/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace finsym {

namespace {

using Parts = std::vector<int>;

Parts normalize(Parts v) {
    std::sort(v.rbegin(), v.rend());
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

/*
 * Murnaghan-Nakayama via beta-numbers: with beta_i = rho_i + (L-1-i),
 * removing a border strip of length t is beta_i -> beta_i - t (legal when the
 * target value is free), and the strip height is the number of beta values
 * jumped over.
 */
Int mn_value(const Parts& rho, const Parts& nu,
             std::map<std::pair<Parts, Parts>, Int>& memo) {
    if (nu.empty()) return 1;
    auto key = std::make_pair(rho, nu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    int t = nu.front();
    Parts rest(nu.begin() + 1, nu.end());
    int L = (int)rho.size();
    Parts beta(L);
    for (int i = 0; i < L; ++i) beta[i] = rho[i] + (L - 1 - i);

    Int total = 0;
    for (int i = 0; i < L; ++i) {
        if (beta[i] < t) continue;
        int target = beta[i] - t;
        bool occupied = false;
        int height = 0;
        for (int j = 0; j < L; ++j) {
            if (j == i) continue;
            if (beta[j] == target) { occupied = true; break; }
            if (beta[j] > target && beta[j] < beta[i]) ++height;
        }
        if (occupied) continue;
        Parts nb = beta;
        nb[i] = target;
        std::sort(nb.rbegin(), nb.rend());
        Parts nrho(L);
        for (int j = 0; j < L; ++j) nrho[j] = nb[j] - (L - 1 - j);
        nrho = normalize(std::move(nrho));
        Int sub = mn_value(nrho, rest, memo);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo[key] = total;
    return total;
}

std::map<std::pair<Parts, Parts>, Int> g_mn_memo;
std::mutex g_mn_mutex;

/* Count of functions from the positions of nu onto variable slots such that
 * the parts sent to slot j sum to lambda_j: the coefficient of the monomial
 * x^lambda in the power-sum product p_nu. */
Int monomial_coefficient(const Parts& lambda, const Parts& nu) {
    int k = (int)nu.size();
    std::map<std::pair<int, int>, Int> memo;
    std::function<Int(int, int)> go = [&](int mask, int slot) -> Int {
        if (slot == (int)lambda.size()) return mask == 0 ? 1 : 0;
        auto key = std::make_pair(mask, slot);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        Int total = 0;
        /* enumerate submasks of mask whose parts sum to lambda[slot] */
        for (int sub = mask;; sub = (sub - 1) & mask) {
            int sum = 0;
            for (int i = 0; i < k; ++i)
                if (sub & (1 << i)) sum += nu[i];
            if (sum == lambda[slot]) total += go(mask ^ sub, slot + 1);
            if (sub == 0) break;
        }
        memo[key] = total;
        return total;
    };
    return go((1 << k) - 1, 0);
}

std::map<std::pair<Parts, Parts>, Int> g_kostka_memo;
std::mutex g_kostka_mutex;

Int kostka_value(const Parts& lambda, const Parts& mu) {
    int sl = 0, sm = 0;
    for (int p : lambda) sl += p;
    for (int p : mu) sm += p;
    if (sl != sm) return 0;
    if (mu.empty()) return lambda.empty() ? 1 : 0;
    auto key = std::make_pair(lambda, mu);
    {
        std::lock_guard<std::mutex> lock(g_kostka_mutex);
        if (auto it = g_kostka_memo.find(key); it != g_kostka_memo.end()) return it->second;
    }

    /* Remove the entries equal to the largest value of the content: they form
     * a horizontal strip of size mu.back() (mu sorted decreasingly, so the
     * smallest part is the multiplicity of the largest entry; Kostka numbers
     * are symmetric in the content, so any part works). */
    int strip = mu.back();
    Parts rest(mu.begin(), mu.end() - 1);
    Int total = 0;
    int L = (int)lambda.size();
    Parts inner(L);
    std::function<void(int, int)> choose = [&](int row, int removed) {
        if (row == L) {
            if (removed != strip) return;
            Parts in;
            for (int v : inner)
                if (v > 0) in.push_back(v);
            total += kostka_value(in, rest);
            return;
        }
        int below = (row + 1 < L) ? lambda[row + 1] : 0;
        for (int v = lambda[row]; v >= below; --v) {
            if (removed + (lambda[row] - v) > strip) break;
            inner[row] = v;
            choose(row + 1, removed + (lambda[row] - v));
        }
    };
    choose(0, 0);
    {
        std::lock_guard<std::mutex> lock(g_kostka_mutex);
        g_kostka_memo[key] = total;
    }
    return total;
}

}  // namespace

Int character(const Partition& rho, const Partition& nu) {
    if (rho.size() != nu.size()) throw std::invalid_argument("character: |rho| != |nu|");
    std::lock_guard<std::mutex> lock(g_mn_mutex);
    return mn_value(rho.parts(), nu.parts(), g_mn_memo);
}

Int kostka(const Partition& lambda, const Partition& mu) {
    return kostka_value(lambda.parts(), mu.parts());
}

Int character_oracle(const Partition& rho, const Partition& nu) {
    if (rho.size() != nu.size()) throw std::invalid_argument("character_oracle: |rho| != |nu|");
    int n = rho.size();
    if (n > 8) throw std::domain_error("character_oracle: |nu| exceeds bound 8");

    /*
     * p_nu = sum over lambda of chi^lambda_nu s_lambda, and
     * s_lambda = sum over mu of K_{lambda,mu} m_mu with K unitriangular for
     * dominance.  Reverse-lexicographic order refines dominance, so solving
     * front-to-back inverts the system:
     *   chi^mu_nu = [x^mu] p_nu - sum over earlier lambda of chi^lambda_nu K_{lambda,mu}.
     */
    auto all = partitions_of(n);
    std::map<Partition, Int> chi;
    for (const auto& mu : all) {
        Int value = monomial_coefficient(mu.parts(), nu.parts());
        for (const auto& lambda : all) {
            if (lambda == mu) break;
            value -= chi[lambda] * kostka_value(lambda.parts(), mu.parts());
        }
        chi[mu] = value;
        if (mu == rho) return value;
    }
    return chi[rho];
}

Int even_character_sum(const Partition& nu, RhoFilter filter, int bound) {
    return weighted_character_sum(
        nu,
        [&](const Partition& rho) -> Int {
            switch (filter) {
                case RhoFilter::EvenParts: return is_even_partition(rho) ? 1 : 0;
                case RhoFilter::EvenTranspose: return has_even_multiplicities(rho) ? 1 : 0;
                case RhoFilter::EvenMultEvenSizes: return even_sizes_have_even_mult(rho) ? 1 : 0;
                case RhoFilter::EvenMultOddSizes: return odd_sizes_have_even_mult(rho) ? 1 : 0;
                case RhoFilter::All: return 1;
            }
            return 0;
        },
        bound);
}

Int weighted_character_sum(const Partition& nu,
                           const std::function<Int(const Partition&)>& weight,
                           int bound) {
    if (nu.size() > bound) throw std::domain_error("weighted_character_sum: |nu| exceeds bound");
    Int total = 0;
    for (const auto& rho : partitions_of(nu.size())) {
        Int w = weight(rho);
        if (w != 0) total += w * character(rho, nu);
    }
    return total;
}

}  // namespace finsym
