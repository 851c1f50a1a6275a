#include "finsym/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace finsym {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (i > 0 && parts_[i - 1] < parts_[i]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        size_ += parts_[i];
    }
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && isspace((unsigned char)text[i])) ++i; };
    skip_ws();
    if (i >= text.size() || text[i] != '[') {
        throw std::invalid_argument("partition text must look like [3,1]");
    }
    ++i;
    skip_ws();
    if (i < text.size() && text[i] == ']') {
        ++i;
    } else {
        while (true) {
            skip_ws();
            size_t start = i;
            while (i < text.size() && isdigit((unsigned char)text[i])) ++i;
            if (i == start) throw std::invalid_argument("expected a part in partition text");
            parts.push_back(std::stoi(text.substr(start, i - start)));
            skip_ws();
            if (i < text.size() && text[i] == ',') { ++i; continue; }
            if (i < text.size() && text[i] == ']') { ++i; break; }
            throw std::invalid_argument("expected ',' or ']' in partition text");
        }
    }
    skip_ws();
    if (i != text.size()) throw std::invalid_argument("trailing characters in partition text");
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    std::ostringstream out;
    out << '[';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) out << ',';
        out << parts_[i];
    }
    out << ']';
    return out.str();
}

Partition transpose(const Partition& mu) {
    std::vector<int> t;
    if (!mu.empty()) {
        t.resize(mu.parts()[0], 0);
        for (int p : mu.parts()) {
            for (int j = 0; j < p; ++j) ++t[j];
        }
    }
    return Partition(std::move(t));
}

long long n_stat(const Partition& mu) {
    long long total = 0;
    const auto& p = mu.parts();
    for (size_t i = 0; i < p.size(); ++i) total += (long long)i * p[i];
    return total;
}

std::map<int, int> multiplicities(const Partition& mu) {
    std::map<int, int> m;
    for (int p : mu.parts()) ++m[p];
    return m;
}

PartitionStats stats(const Partition& nu) {
    PartitionStats s;
    s.mult = multiplicities(nu);
    s.is_even = true;
    s.length_even = s.length_odd = s.length_0mod4 = s.length_2mod4 = 0;
    s.z = 1;
    for (int p : nu.parts()) {
        if (p % 2 == 0) {
            ++s.length_even;
            (p % 4 == 0 ? s.length_0mod4 : s.length_2mod4)++;
        } else {
            ++s.length_odd;
            s.is_even = false;
        }
    }
    for (const auto& [part, m] : s.mult) {
        for (int j = 1; j <= m; ++j) s.z *= Int(part) * j;
    }
    s.epsilon = (s.length_even % 2 == 0) ? 1 : -1;
    return s;
}

bool is_even_partition(const Partition& mu) {
    for (int p : mu.parts())
        if (p % 2 != 0) return false;
    return true;
}

bool has_even_multiplicities(const Partition& mu) {
    for (const auto& [part, m] : multiplicities(mu))
        if (m % 2 != 0) return false;
    return true;
}

bool even_sizes_have_even_mult(const Partition& mu) {
    for (const auto& [part, m] : multiplicities(mu))
        if (part % 2 == 0 && m % 2 != 0) return false;
    return true;
}

bool odd_sizes_have_even_mult(const Partition& mu) {
    for (const auto& [part, m] : multiplicities(mu))
        if (part % 2 != 0 && m % 2 != 0) return false;
    return true;
}

Int prod_mult_plus_one(const Partition& mu) {
    Int prod = 1;
    for (const auto& [part, m] : multiplicities(mu)) prod *= (m + 1);
    return prod;
}

Int prod_mult_plus_one_even_sizes(const Partition& mu) {
    Int prod = 1;
    for (const auto& [part, m] : multiplicities(mu))
        if (part % 2 == 0) prod *= (m + 1);
    return prod;
}

Int prod_mult_plus_one_odd_sizes(const Partition& mu) {
    Int prod = 1;
    for (const auto& [part, m] : multiplicities(mu))
        if (part % 2 != 0) prod *= (m + 1);
    return prod;
}

namespace {

void gen_partitions(int n, int max_part, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(acc));
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(n - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int bound) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    if (n > bound) throw std::domain_error("partitions_of: n exceeds bound");
    std::vector<Partition> out;
    std::vector<int> acc;
    gen_partitions(n, n, acc, out);
    return out;
}

Int partition_count(int n) {
    /* Euler's pentagonal-number recurrence. */
    std::vector<Int> p(n + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Int total = 0;
        for (int k = 1;; ++k) {
            long long g1 = (long long)k * (3 * k - 1) / 2;
            long long g2 = (long long)k * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            int sign = (k % 2 == 1) ? 1 : -1;
            if (g1 <= m) total += sign * p[m - g1];
            if (g2 <= m) total += sign * p[m - g2];
        }
        p[m] = total;
    }
    return p[n];
}

}  // namespace finsym
