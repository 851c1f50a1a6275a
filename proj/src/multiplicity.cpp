#include "finsym/multiplicity.hpp"

#include <stdexcept>

#include "finsym/characters.hpp"
#include "finsym/involutions.hpp"
#include "finsym/tableaux.hpp"

namespace finsym {

Twist SymmetricSpaceCase::twist() const {
    switch (kind) {
        case CaseKind::GlSp:
        case CaseKind::GlGlGl:
        case CaseKind::GlGl2:
        case CaseKind::GlO:
        case CaseKind::GlOpm:
            return Twist::Split;
        default:
            return Twist::Nonsplit;
    }
}

SymmetricSpaceCase SymmetricSpaceCase::make(CaseKind kind, int n, int n_plus, int n_minus,
                                            int epsilon, bool so_variant) {
    SymmetricSpaceCase c{kind, n, n_plus, n_minus, epsilon, so_variant};
    if (n < 0) throw std::invalid_argument("case: n must be nonnegative");
    bool needs_even = kind == CaseKind::GlSp || kind == CaseKind::USp || kind == CaseKind::GlGl2 ||
                      kind == CaseKind::UU4 || kind == CaseKind::GlOpm || kind == CaseKind::UOpm;
    bool needs_odd = kind == CaseKind::GlO || kind == CaseKind::UO;
    if (needs_even && n % 2 != 0) throw std::invalid_argument("case: n must be even");
    if (needs_odd && n % 2 != 1) throw std::invalid_argument("case: n must be odd");
    if (kind == CaseKind::GlGlGl || kind == CaseKind::UUU) {
        if (n_plus < 0 || n_minus < 0 || n_plus + n_minus != n)
            throw std::invalid_argument("case: n_plus + n_minus must equal n");
    }
    if (epsilon != 1 && epsilon != -1) throw std::invalid_argument("case: epsilon must be +1/-1");
    if (so_variant && !(kind == CaseKind::GlO || kind == CaseKind::GlOpm || kind == CaseKind::UO ||
                        kind == CaseKind::UOpm))
        throw std::invalid_argument("case: SO variant only applies to orthogonal cases");
    return c;
}

CaseKind SymmetricSpaceCase::kind_from_key(const std::string& key) {
    if (key == "gl-sp") return CaseKind::GlSp;
    if (key == "u-sp") return CaseKind::USp;
    if (key == "gl-glgl") return CaseKind::GlGlGl;
    if (key == "gl-gl2") return CaseKind::GlGl2;
    if (key == "u-uu") return CaseKind::UUU;
    if (key == "u-u4") return CaseKind::UU4;
    if (key == "gl-o") return CaseKind::GlO;
    if (key == "gl-opm") return CaseKind::GlOpm;
    if (key == "u-o") return CaseKind::UO;
    if (key == "u-opm") return CaseKind::UOpm;
    throw std::invalid_argument("unknown case key '" + key + "'");
}

std::string SymmetricSpaceCase::key(CaseKind kind) {
    switch (kind) {
        case CaseKind::GlSp: return "gl-sp";
        case CaseKind::USp: return "u-sp";
        case CaseKind::GlGlGl: return "gl-glgl";
        case CaseKind::GlGl2: return "gl-gl2";
        case CaseKind::UUU: return "u-uu";
        case CaseKind::UU4: return "u-u4";
        case CaseKind::GlO: return "gl-o";
        case CaseKind::GlOpm: return "gl-opm";
        case CaseKind::UO: return "u-o";
        case CaseKind::UOpm: return "u-opm";
    }
    throw std::invalid_argument("unknown case kind");
}

namespace {

Int sign_pow(long long e) { return (e % 2 == 0) ? 1 : -1; }

int find_tagged(const OrbitTable& t, OrbitTag tag) {
    for (size_t i = 0; i < t.orbits.size(); ++i)
        if (t.orbits[i].tag == tag) return (int)i;
    return -1;
}

void check_compatible(const SymmetricSpaceCase& c, const MultiPartition& rho) {
    if (!rho.table) throw std::invalid_argument("multipartition has no orbit table");
    if (rho.table->twist != c.twist())
        throw std::invalid_argument("orbit table twist does not match the case");
    if (rho.total() != c.n) throw std::invalid_argument("multipartition rank does not match n");
}

bool dual_pairs_match(const MultiPartition& rho) {
    const auto& orbits = rho.table->orbits;
    for (size_t i = 0; i < orbits.size(); ++i) {
        if (orbits[i].tag == OrbitTag::DualPair && (int)i < orbits[i].partner) {
            if (rho.at((int)i) != rho.at(orbits[i].partner)) return false;
        }
    }
    return true;
}

bool all_transposes_even(const MultiPartition& rho) {
    for (const auto& [idx, p] : rho.assign)
        if (!has_even_multiplicities(p)) return false;
    return true;
}

Int integral(const Rat& value, bool require_nonneg = true) {
    if (denominator(value) != 1)
        throw std::logic_error("multiplicity: non-integral result (model error)");
    Int v = numerator(value);
    if (require_nonneg && v < 0)
        throw std::logic_error("multiplicity: negative result (model error)");
    return v;
}

Rat multiplicity_exact(const SymmetricSpaceCase& c, const MultiPartition& rho) {
    const OrbitTable& table = *rho.table;
    Partition rho_one = [&] {
        int i = find_tagged(table, OrbitTag::One);
        return i < 0 ? Partition{} : rho.at(i);
    }();
    Partition rho_minus_one = [&] {
        int i = find_tagged(table, OrbitTag::MinusOne);
        return i < 0 ? Partition{} : rho.at(i);
    }();

    switch (c.kind) {
        case CaseKind::GlSp:
        case CaseKind::USp: {
            for (const auto& [idx, p] : rho.assign)
                if (!is_even_partition(p)) return 0;
            return 1;
        }
        case CaseKind::GlGlGl: {
            if (!dual_pairs_match(rho)) return 0;
            if (!has_even_multiplicities(rho_minus_one)) return 0;
            return Rat(count_tableaux(transpose(rho_one), c.n_plus - c.n_minus));
        }
        case CaseKind::GlGl2: {
            if (!dual_pairs_match(rho)) return 0;
            if (!is_even_partition(rho_one)) return 0;
            if (!has_even_multiplicities(rho_minus_one)) return 0;
            return 1;
        }
        case CaseKind::UUU: {
            if (!dual_pairs_match(rho)) return 0;
            if (!has_even_multiplicities(rho_minus_one)) return 0;
            return Rat(count_reverse_fixed_with_signature(transpose(rho_one),
                                                          c.n_plus - c.n_minus));
        }
        case CaseKind::UU4: {
            if (!dual_pairs_match(rho)) return 0;
            if (!has_even_multiplicities(rho_minus_one)) return 0;
            Partition rt = transpose(rho_one);
            if (!odd_sizes_have_even_mult(rt)) return 0;
            return Rat(prod_mult_plus_one_even_sizes(rt));
        }
        case CaseKind::GlO:
        case CaseKind::GlOpm: {
            Rat term = Rat(1, 2);
            for (const auto& [idx, p] : rho.assign) {
                if (table.orbits[idx].d == -1) {
                    if (!has_even_multiplicities(p)) { term = 0; break; }
                } else {
                    term *= Rat(prod_mult_plus_one(p));
                }
            }
            if (c.kind == CaseKind::GlOpm && all_transposes_even(rho))
                term += Rat(c.epsilon, 2);
            return term;
        }
        case CaseKind::UO: {
            Rat term = Rat(1, 2);
            for (const auto& [idx, p] : rho.assign) {
                const auto& o = table.orbits[idx];
                if (o.m % 2 != 0) {
                    if (o.d == 1) {
                        if (!even_sizes_have_even_mult(p)) return 0;
                        term *= Rat(prod_mult_plus_one_odd_sizes(p));
                    } else {
                        if (!odd_sizes_have_even_mult(p)) return 0;
                        term *= Rat(prod_mult_plus_one_even_sizes(p));
                    }
                } else {
                    if (o.d == 1) {
                        term *= Rat(prod_mult_plus_one(p));
                    } else {
                        if (!has_even_multiplicities(p)) return 0;
                    }
                }
            }
            return term;
        }
        case CaseKind::UOpm: {
            Rat term = Rat(1, 2);
            for (const auto& [idx, p] : rho.assign) {
                const auto& o = table.orbits[idx];
                if (o.m % 2 != 0) {
                    if (o.d == 1) {
                        if (!odd_sizes_have_even_mult(p)) { term = 0; break; }
                        term *= Rat(prod_mult_plus_one_even_sizes(p));
                    } else {
                        if (!even_sizes_have_even_mult(p)) { term = 0; break; }
                        term *= Rat(prod_mult_plus_one_odd_sizes(p));
                    }
                } else {
                    if (o.d == 1) {
                        term *= Rat(prod_mult_plus_one(p));
                    } else {
                        if (!has_even_multiplicities(p)) { term = 0; break; }
                    }
                }
            }
            if (all_transposes_even(rho)) term += Rat(c.epsilon, 2);
            return term;
        }
    }
    throw std::logic_error("multiplicity: unhandled case");
}

}  // namespace

Int multiplicity(const SymmetricSpaceCase& c, const MultiPartition& rho) {
    check_compatible(c, rho);
    return integral(multiplicity_exact(c, rho));
}

Int unipotent_multiplicity(const SymmetricSpaceCase& c, const Partition& rho) {
    if (rho.size() != c.n) throw std::invalid_argument("unipotent_multiplicity: |rho| != n");
    auto half_ceil_floor = [&](const Int& prod) -> Int {
        /* ceil(prod/2) for eps=+1, floor(prod/2) for eps=-1, exact half otherwise */
        if (has_even_multiplicities(rho)) {
            Int rounded_up = (prod + 1) / 2;
            Int rounded_down = prod / 2;
            return c.epsilon == 1 ? rounded_up : rounded_down;
        }
        if (prod % 2 != 0) throw std::logic_error("unipotent_multiplicity: odd product (model error)");
        return prod / 2;
    };
    switch (c.kind) {
        case CaseKind::GlSp:
        case CaseKind::USp:
        case CaseKind::GlGl2:
            return is_even_partition(rho) ? 1 : 0;
        case CaseKind::GlGlGl:
            return count_tableaux(transpose(rho), c.n_plus - c.n_minus);
        case CaseKind::UUU:
            return count_reverse_fixed_with_signature(transpose(rho), c.n_plus - c.n_minus);
        case CaseKind::UU4: {
            Partition rt = transpose(rho);
            return odd_sizes_have_even_mult(rt) ? prod_mult_plus_one_even_sizes(rt) : Int(0);
        }
        case CaseKind::GlO: {
            Int prod = prod_mult_plus_one(rho);
            if (prod % 2 != 0) throw std::logic_error("unipotent_multiplicity: odd product (model error)");
            return prod / 2;
        }
        case CaseKind::GlOpm:
            return half_ceil_floor(prod_mult_plus_one(rho));
        case CaseKind::UO: {
            if (!even_sizes_have_even_mult(rho)) return 0;
            Int prod = prod_mult_plus_one_odd_sizes(rho);
            if (prod % 2 != 0) throw std::logic_error("unipotent_multiplicity: odd product (model error)");
            return prod / 2;
        }
        case CaseKind::UOpm: {
            if (has_even_multiplicities(rho))
                return half_ceil_floor(prod_mult_plus_one_even_sizes(rho));
            if (!odd_sizes_have_even_mult(rho)) return 0;
            Int prod = prod_mult_plus_one_even_sizes(rho);
            if (prod % 2 != 0) throw std::logic_error("unipotent_multiplicity: odd product (model error)");
            return prod / 2;
        }
    }
    throw std::logic_error("unipotent_multiplicity: unhandled case");
}

Int so_multiplicity(const SymmetricSpaceCase& c, const MultiPartition& rho) {
    if (!(c.kind == CaseKind::GlO || c.kind == CaseKind::GlOpm || c.kind == CaseKind::UO ||
          c.kind == CaseKind::UOpm))
        throw std::invalid_argument("so_multiplicity: orthogonal cases only");
    check_compatible(c, rho);
    return multiplicity(c, rho) + multiplicity(c, zeta_twist(rho));
}

namespace {

/* ---- involution-route per-orbit factor sums ---- */

/* |fixed-point-free involutions| in the centralizer attached to nu */
Int sum_ff(const Partition& nu) {
    return weighted_involution_sum(nu, {.no_fixed = true}, {});
}

/* sum over the plus signed family with signature d of (-1)^{l2} */
Int sum_plus_l2(const Partition& nu, int d) {
    return weighted_signed_sum(nu, SignedFamily::Plus, d, {.neg_l2 = true});
}

/* sum over the star signed family of (-1)^{l2} */
Int sum_star_l2(const Partition& nu) {
    return weighted_signed_sum(nu, SignedFamily::Star, std::nullopt, {.neg_l2 = true});
}

/* |{w : l1_even = 0, l2 = 0}| */
Int sum_other(const Partition& nu) {
    return weighted_involution_sum(nu, {.no_even_fixed = true, .no_even_half = true}, {});
}

/* sum over the plus signed family with signature d of the unitary weight */
Int sum_plus_unitary(const Partition& nu, int d) {
    return weighted_signed_sum(nu, SignedFamily::Plus, d,
                               {.neg_l2_0mod4 = true, .neg_half_l3_odd = true});
}

/* sum over the star signed family of the unitary weight */
Int sum_star_unitary(const Partition& nu) {
    return weighted_signed_sum(nu, SignedFamily::Star, std::nullopt,
                               {.neg_l2_0mod4 = true, .neg_half_l3_odd = true});
}

/* sum of (-2)^{l1}, optionally over involutions with no odd fixed cycle */
Int sum_neg2_l1(const Partition& nu, bool restrict_no_odd_fixed) {
    return weighted_involution_sum(nu, {.no_odd_fixed = restrict_no_odd_fixed}, {.base = -2});
}

/* sum of (-1)^{l1_even + l2_{2 mod 4} + l3_odd/2} 2^{l1} */
Int sum_unitary_o(const Partition& nu, bool restrict_no_odd_fixed) {
    return weighted_involution_sum(
        nu, {.no_odd_fixed = restrict_no_odd_fixed},
        {.neg_l1_even = true, .neg_l2_2mod4 = true, .neg_half_l3_odd = true, .base = 2});
}

/* sum of (-1)^{l1 + l2_{2 mod 4} + l3_odd/2} 2^{l1} */
Int sum_unitary_so(const Partition& nu, bool restrict_no_odd_fixed) {
    return weighted_involution_sum(
        nu, {.no_odd_fixed = restrict_no_odd_fixed},
        {.neg_l1 = true, .neg_l2_2mod4 = true, .neg_half_l3_odd = true, .base = 2});
}

int epsilon_of(const Partition& nu) { return stats(nu).epsilon; }

Rat involution_route(const SymmetricSpaceCase& c, const MultiPartition& nu) {
    const OrbitTable& table = *nu.table;
    int one = find_tagged(table, OrbitTag::One);
    int minus_one = find_tagged(table, OrbitTag::MinusOne);
    Partition nu_one = one < 0 ? Partition{} : nu.at(one);
    Partition nu_minus_one = minus_one < 0 ? Partition{} : nu.at(minus_one);

    /* factors over the remaining orbit classes */
    auto for_self_dual_other = [&](auto fn) {
        for (size_t i = 0; i < table.orbits.size(); ++i)
            if (table.orbits[i].tag == OrbitTag::SelfDualOther) fn(table.orbits[i], nu.at((int)i));
    };
    auto for_dual_pairs = [&](auto fn) {
        for (size_t i = 0; i < table.orbits.size(); ++i) {
            const auto& o = table.orbits[i];
            if (o.tag == OrbitTag::DualPair && (int)i < o.partner)
                fn(o, nu.at((int)i), nu.at(o.partner));
        }
    };

    switch (c.kind) {
        case CaseKind::GlSp:
        case CaseKind::USp: {
            Rat prod = 1;
            for (size_t i = 0; i < table.orbits.size(); ++i) prod *= Rat(sum_ff(nu.at((int)i)));
            return prod;
        }
        case CaseKind::GlGlGl:
        case CaseKind::GlGl2: {
            Rat prod = c.kind == CaseKind::GlGlGl
                           ? Rat(sum_plus_l2(nu_one, c.n_plus - c.n_minus))
                           : Rat(sum_star_l2(nu_one));
            prod *= Rat(epsilon_of(nu_minus_one) * sum_ff(nu_minus_one));
            for_self_dual_other([&](const FrobeniusOrbit&, const Partition& p) {
                prod *= Rat(sign_pow(p.size()) * sum_other(p));
            });
            for_dual_pairs([&](const FrobeniusOrbit&, const Partition& a, const Partition& b) {
                prod *= (a == b) ? Rat(stats(a).z) : Rat(0);
            });
            return prod;
        }
        case CaseKind::UUU:
        case CaseKind::UU4: {
            Rat prod = c.kind == CaseKind::UUU ? Rat(sum_plus_unitary(nu_one, c.n_plus - c.n_minus))
                                               : Rat(sum_star_unitary(nu_one));
            /* an odd-size component contributes 0 here: no fixed-point-free involution */
            prod *= Rat(sign_pow(nu_minus_one.size() / 2) * epsilon_of(nu_minus_one) *
                        sum_ff(nu_minus_one));
            for_self_dual_other([&](const FrobeniusOrbit& o, const Partition& p) {
                Int factor = sum_other(p);
                if (o.m % 4 == 0) factor *= sign_pow(p.size());
                prod *= Rat(factor);
            });
            for_dual_pairs([&](const FrobeniusOrbit& o, const Partition& a, const Partition& b) {
                if (a != b) { prod = 0; return; }
                Int factor = stats(a).z;
                if (o.m % 2 != 0) factor *= sign_pow(a.size());
                prod *= Rat(factor);
            });
            return prod;
        }
        case CaseKind::GlO:
        case CaseKind::GlOpm: {
            Rat main = Rat(1, 2);
            for (size_t i = 0; i < table.orbits.size(); ++i)
                main *= Rat(sum_neg2_l1(nu.at((int)i), table.orbits[i].d == -1));
            if (c.kind == CaseKind::GlO) return -main;
            Rat corr = Rat(c.epsilon, 2);
            for (size_t i = 0; i < table.orbits.size(); ++i) {
                Partition p = nu.at((int)i);
                corr *= Rat(epsilon_of(p) * sum_ff(p));
            }
            return main + corr;
        }
        case CaseKind::UO: {
            Rat main = Rat(sign_pow(c.n / 2), 2);
            for (size_t i = 0; i < table.orbits.size(); ++i) {
                const auto& o = table.orbits[i];
                Partition p = nu.at((int)i);
                main *= o.m % 2 != 0 ? Rat(sum_unitary_o(p, o.d == -1))
                                     : Rat(sum_neg2_l1(p, o.d == -1));
            }
            return main;
        }
        case CaseKind::UOpm: {
            Rat main = Rat(sign_pow(c.n / 2), 2);
            for (size_t i = 0; i < table.orbits.size(); ++i) {
                const auto& o = table.orbits[i];
                Partition p = nu.at((int)i);
                main *= o.m % 2 != 0 ? Rat(sum_unitary_so(p, o.d == 1))
                                     : Rat(sum_neg2_l1(p, o.d == -1));
            }
            Rat corr = Rat(c.epsilon, 2);
            for (size_t i = 0; i < table.orbits.size(); ++i) {
                const auto& o = table.orbits[i];
                Partition p = nu.at((int)i);
                Int factor = epsilon_of(p) * sum_ff(p);
                if (o.m % 2 != 0) factor *= sign_pow(p.size() / 2);
                corr *= Rat(factor);
            }
            return main + corr;
        }
    }
    throw std::logic_error("involution route: unhandled case");
}

Rat character_route(const SymmetricSpaceCase& c, const MultiPartition& nu) {
    const OrbitTable& table = *nu.table;
    std::vector<int> support;
    for (const auto& [idx, p] : nu.assign)
        if (!p.empty()) support.push_back(idx);
    if ((int)support.size() > 3)
        throw std::domain_error("character route: support limited to 3 orbits");

    bool split = c.twist() == Twist::Split;
    long long total_sizes = 0;
    for (int idx : support) total_sizes += nu.at(idx).size();

    Rat total = 0;
    MultiPartition rho;
    rho.table = nu.table;
    std::function<void(size_t)> rec = [&](size_t pos) {
        if (pos == support.size()) {
            Int chi_prod = 1;
            for (int idx : support) {
                chi_prod *= character(rho.at(idx), nu.at(idx));
                if (chi_prod == 0) return;
            }
            Int sgn;
            if (split) {
                sgn = sign_pow(c.n + total_sizes);
            } else {
                long long e = (c.n + 1) / 2;
                for (int idx : support) {
                    e += (long long)table.orbits[idx].m * n_stat(transpose(rho.at(idx)));
                    e += rho.at(idx).size();
                }
                sgn = sign_pow(e);
            }
            total += Rat(sgn * chi_prod) * multiplicity_exact(c, rho);
            return;
        }
        int idx = support[pos];
        for (const auto& p : partitions_of(nu.at(idx).size())) {
            rho.assign[idx] = p;
            rec(pos + 1);
        }
        rho.assign.erase(idx);
    };
    rec(0);
    return total;
}

}  // namespace

Int basic_character_multiplicity(const SymmetricSpaceCase& c, const MultiPartition& nu,
                                 Route route) {
    check_compatible(c, nu);
    if (c.n > 8) throw std::domain_error("basic_character_multiplicity: n exceeds bound 8");
    Rat value = route == Route::Involution ? involution_route(c, nu) : character_route(c, nu);
    return integral(value, /*require_nonneg=*/false);
}

}  // namespace finsym
