#include "finsym/orbits.hpp"

#include <algorithm>
#include <stdexcept>

namespace finsym {

std::string to_string(OrbitTag tag) {
    switch (tag) {
        case OrbitTag::One: return "One";
        case OrbitTag::MinusOne: return "MinusOne";
        case OrbitTag::SelfDualOther: return "SelfDualOther";
        case OrbitTag::DualPair: return "DualPair";
    }
    return "?";
}

std::string to_string(Twist twist) { return twist == Twist::Split ? "split" : "nonsplit"; }

namespace {

const long long kModulusCap = 5'000'000;

long long level_modulus(long long q, Twist twist, int m) {
    long long M = 1;
    for (int i = 0; i < m; ++i) {
        M *= q;
        if (M > kModulusCap * 2) throw std::domain_error("enumerate_orbits: modulus too large");
    }
    if (twist == Twist::Split) return M - 1;
    return M - ((m % 2 == 0) ? 1 : -1);
}

/* The orbit of x under multiplication by q (split) or -q (nonsplit) mod M. */
std::vector<long long> orbit_of(long long x, long long q, Twist twist, long long M) {
    std::vector<long long> elems;
    long long cur = x % M;
    do {
        elems.push_back(cur);
        cur = (cur * q) % M;
        if (twist == Twist::Nonsplit) cur = (M - cur) % M;
    } while (cur != x % M);
    return elems;
}

}  // namespace

OrbitTable enumerate_orbits(long long q, Twist twist, int max_level) {
    if (q < 3 || q > 97 || q % 2 == 0) throw std::invalid_argument("enumerate_orbits: q must be odd, 3 <= q <= 97");
    if (max_level < 1 || max_level > 6) throw std::invalid_argument("enumerate_orbits: max_level must be in 1..6");

    OrbitTable table;
    table.twist = twist;
    table.q = q;
    table.max_level = max_level;

    for (int m = 1; m <= max_level; ++m) {
        long long M = level_modulus(q, twist, m);
        if (M > kModulusCap) throw std::domain_error("enumerate_orbits: modulus exceeds cap");
        std::vector<bool> seen(M, false);
        for (long long k = 0; k < M; ++k) {
            if (seen[k]) continue;
            auto elems = orbit_of(k, q, twist, M);
            for (long long e : elems) seen[e] = true;
            if ((int)elems.size() != m) continue; /* image of a lower level */
            long long rep = *std::min_element(elems.begin(), elems.end());
            FrobeniusOrbit o;
            o.m = m;
            o.rep = rep;
            o.modulus = M;
            o.d = (rep % 2 == 0) ? 1 : -1;
            o.tag = OrbitTag::SelfDualOther; /* fixed up below */
            o.partner = (int)table.orbits.size();
            table.orbits.push_back(o);
        }
    }

    /* duality: the orbit of -rep, found among same-size orbits at the same level */
    auto find_orbit = [&](long long value, int m, long long M) {
        for (size_t i = 0; i < table.orbits.size(); ++i) {
            const auto& o = table.orbits[i];
            if (o.m != m || o.modulus != M) continue;
            for (long long e : orbit_of(o.rep, q, twist, M))
                if (e == value) return (int)i;
        }
        throw std::logic_error("enumerate_orbits: dual orbit not found");
    };
    for (size_t i = 0; i < table.orbits.size(); ++i) {
        auto& o = table.orbits[i];
        int dual = find_orbit((o.modulus - o.rep) % o.modulus, o.m, o.modulus);
        o.partner = dual;
        if (o.m == 1 && o.rep == 0) {
            o.tag = OrbitTag::One;
        } else if (o.m == 1 && 2 * o.rep == level_modulus(q, twist, 1)) {
            o.tag = OrbitTag::MinusOne;
        } else if (dual == (int)i) {
            o.tag = OrbitTag::SelfDualOther;
        } else {
            o.tag = OrbitTag::DualPair;
        }
    }
    return table;
}

OrbitTable make_abstract_table(Twist twist, const std::vector<AbstractOrbitSpec>& specs) {
    OrbitTable table;
    table.twist = twist;
    bool has_one = false, has_minus_one = false;
    for (const auto& s : specs) {
        if (s.m < 1) throw std::invalid_argument("abstract orbit: m must be positive");
        if (s.d != 1 && s.d != -1) throw std::invalid_argument("abstract orbit: d must be +1/-1");
        int idx = (int)table.orbits.size();
        switch (s.tag) {
            case OrbitTag::One:
                if (has_one) throw std::invalid_argument("abstract table: duplicate One orbit");
                if (s.m != 1 || s.d != 1)
                    throw std::invalid_argument("abstract table: One orbit must have m=1, d=+1");
                has_one = true;
                table.orbits.push_back({s.tag, 1, 1, idx});
                break;
            case OrbitTag::MinusOne:
                if (has_minus_one)
                    throw std::invalid_argument("abstract table: duplicate MinusOne orbit");
                if (s.m != 1)
                    throw std::invalid_argument("abstract table: MinusOne orbit must have m=1");
                has_minus_one = true;
                table.orbits.push_back({s.tag, 1, s.d, idx});
                break;
            case OrbitTag::SelfDualOther:
                if (s.m % 2 != 0)
                    throw std::invalid_argument("abstract table: self-dual orbits need even m");
                table.orbits.push_back({s.tag, s.m, s.d, idx});
                break;
            case OrbitTag::DualPair:
                table.orbits.push_back({s.tag, s.m, s.d, idx + 1});
                table.orbits.push_back({s.tag, s.m, s.d, idx});
                break;
        }
        table.max_level = std::max(table.max_level, s.m);
    }
    return table;
}

int MultiPartition::total() const {
    int n = 0;
    for (const auto& [idx, rho] : assign) {
        if (idx < 0 || idx >= (int)table->orbits.size())
            throw std::invalid_argument("multipartition references a missing orbit");
        n += table->orbits[idx].m * rho.size();
    }
    return n;
}

Partition MultiPartition::at(int orbit_index) const {
    auto it = assign.find(orbit_index);
    return it == assign.end() ? Partition{} : it->second;
}

int zeta_twisted_orbit(const OrbitTable& table, int orbit_index) {
    if (!table.concrete())
        throw std::invalid_argument("zeta twist requires a concrete orbit table");
    const auto& o = table.orbits.at(orbit_index);
    long long M1 = level_modulus(table.q, table.twist, 1);
    long long k_zeta = (M1 / 2) % 2 != 0 ? M1 / 2 : 1;
    long long shift = k_zeta * (o.modulus / M1);
    long long target = (o.rep + shift) % o.modulus;
    for (size_t i = 0; i < table.orbits.size(); ++i) {
        const auto& c = table.orbits[i];
        if (c.m != o.m || c.modulus != o.modulus) continue;
        for (long long e : orbit_of(c.rep, table.q, table.twist, c.modulus))
            if (e == target) return (int)i;
    }
    throw std::logic_error("zeta twist left the enumerated orbit table");
}

MultiPartition zeta_twist(const MultiPartition& rho) {
    MultiPartition out;
    out.table = rho.table;
    for (const auto& [idx, p] : rho.assign) out.assign[zeta_twisted_orbit(*rho.table, idx)] = p;
    return out;
}

}  // namespace finsym
