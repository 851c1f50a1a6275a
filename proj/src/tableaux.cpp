#include "finsym/tableaux.hpp"

#include <algorithm>
#include <stdexcept>

namespace finsym {

int TableauClass::signature_d() const {
    int d = 0;
    for (const auto& r : rows)
        if (r.length % 2 != 0) d += 2 * r.plus_count - r.mult;
    return d;
}

namespace {

std::vector<TableauClass::Rows> row_template(const Partition& mu) {
    std::vector<TableauClass::Rows> rows;
    auto m = multiplicities(mu);
    for (auto it = m.rbegin(); it != m.rend(); ++it)
        rows.push_back({it->first, it->second, 0});
    return rows;
}

void check_bound(const Partition& mu, int bound, const char* what) {
    if (mu.size() > bound) throw std::domain_error(std::string(what) + ": |mu| exceeds bound");
}

}  // namespace

void enumerate_tableaux(const Partition& mu, std::optional<int> signature_d,
                        const std::function<void(const TableauClass&)>& fn, int bound) {
    check_bound(mu, bound, "enumerate_tableaux");
    TableauClass t{row_template(mu)};
    std::function<void(size_t)> rec = [&](size_t i) {
        if (i == t.rows.size()) {
            if (!signature_d || t.signature_d() == *signature_d) fn(t);
            return;
        }
        for (int k = 0; k <= t.rows[i].mult; ++k) {
            t.rows[i].plus_count = k;
            rec(i + 1);
        }
    };
    rec(0);
}

Int count_tableaux(const Partition& mu, std::optional<int> signature_d, int bound) {
    Int count = 0;
    enumerate_tableaux(mu, signature_d, [&](const TableauClass&) { ++count; }, bound);
    return count;
}

TableauClass flip_all(const TableauClass& t) {
    TableauClass out = t;
    for (auto& r : out.rows) r.plus_count = r.mult - r.plus_count;
    return out;
}

TableauClass reverse_rows(const TableauClass& t) {
    TableauClass out = t;
    for (auto& r : out.rows)
        if (r.length % 2 == 0) r.plus_count = r.mult - r.plus_count;
    return out;
}

FixedCounts fixed_counts_closed(const Partition& mu) {
    FixedCounts c{0, 0, 0};
    c.flip = has_even_multiplicities(mu) ? 1 : 0;
    c.reverse = even_sizes_have_even_mult(mu) ? prod_mult_plus_one_odd_sizes(mu) : 0;
    c.flip_reverse = odd_sizes_have_even_mult(mu) ? prod_mult_plus_one_even_sizes(mu) : 0;
    return c;
}

FixedCounts fixed_counts_enumerated(const Partition& mu) {
    FixedCounts c{0, 0, 0};
    enumerate_tableaux(mu, std::nullopt, [&](const TableauClass& t) {
        if (flip_all(t) == t) ++c.flip;
        if (reverse_rows(t) == t) ++c.reverse;
        if (flip_all(reverse_rows(t)) == t) ++c.flip_reverse;
    });
    return c;
}

Int count_reverse_fixed_with_signature(const Partition& mu, int signature_d, int bound) {
    Int count = 0;
    enumerate_tableaux(mu, signature_d, [&](const TableauClass& t) {
        if (reverse_rows(t) == t) ++count;
    }, bound);
    return count;
}

namespace {

/* All partitions obtained from `parts` by removing a vertical strip (at most
 * one box per row) of the given size. */
void for_each_vertical_strip(const std::vector<int>& parts, int size,
                             const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> result(parts.size());
    std::function<void(size_t, int, int)> rec = [&](size_t i, int removed, int prev) {
        if ((int)(parts.size() - i) < size - removed) return; /* cannot finish */
        if (i == parts.size()) {
            if (removed == size) {
                std::vector<int> out;
                for (int v : result)
                    if (v > 0) out.push_back(v);
                fn(out);
            }
            return;
        }
        for (int delta = 0; delta <= 1; ++delta) {
            int v = parts[i] - delta;
            if (v < 0 || v > prev) continue;
            if (removed + delta > size) continue;
            result[i] = v;
            rec(i + 1, removed + delta, v);
        }
    };
    rec(0, 0, parts.empty() ? 0 : parts[0]);
}

bool all_even(const std::vector<int>& parts) {
    for (int v : parts)
        if (v % 2 != 0) return false;
    return true;
}

}  // namespace

Int vertical_strip_count(const Partition& mu, int a, int b) {
    if (a < 0 || b < 0 || a + b > mu.size())
        return 0;
    Int count = 0;
    for_each_vertical_strip(mu.parts(), b, [&](const std::vector<int>& first) {
        for_each_vertical_strip(first, a, [&](const std::vector<int>& second) {
            if (all_even(second)) ++count;
        });
    });
    return count;
}

Int star_sign_sum(const Partition& mu, int bound) {
    Int total = 0;
    enumerate_tableaux(mu, 0, [&](const TableauClass& t) {
        /* Lay the rows out top to bottom: lengths descending, and within a
         * length the plus-terminated rows above the minus-terminated ones. */
        std::vector<std::pair<int, int>> ordered; /* (length, sign) */
        for (const auto& r : t.rows) {
            for (int i = 0; i < r.plus_count; ++i) ordered.push_back({r.length, +1});
            for (int i = 0; i < r.mult - r.plus_count; ++i) ordered.push_back({r.length, -1});
        }
        int odd_minus_total = 0;
        for (const auto& [len, sign] : ordered)
            if (len % 2 != 0 && sign < 0) ++odd_minus_total;
        /* scan bottom-up: running counts include the current row */
        int minus_below = 0, plus_below = 0, m = 0;
        for (auto it = ordered.rbegin(); it != ordered.rend(); ++it) {
            if (it->first % 2 != 0) (it->second < 0 ? minus_below : plus_below)++;
            m = std::max(m, minus_below - plus_below);
        }
        total += ((odd_minus_total - m) % 2 == 0) ? 1 : -1;
    }, bound);
    return total;
}

Int star_sign_sum_closed(const Partition& mu) {
    return odd_sizes_have_even_mult(mu) ? prod_mult_plus_one_even_sizes(mu) : 0;
}

}  // namespace finsym
