#include "finsym/identities.hpp"

#include <stdexcept>

#include "finsym/characters.hpp"
#include "finsym/involutions.hpp"
#include "finsym/tableaux.hpp"

namespace finsym {

namespace {

const int kPlainBound = 8;
const int kSignedBound = 7;

Int sign_pow(long long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

std::vector<std::string> identity_names() {
    return {"ff-inv",  "macdonald-I8E11", "glnglngln", "glngln-star", "other-gln-on",
            "ununun",  "unun",            "gln-on",    "gln-son",     "un-on",
            "un-son"};
}

bool identity_takes_signature(const std::string& name) {
    return name == "glnglngln" || name == "ununun";
}

IdentityResult check_identity(const std::string& name, const Partition& nu,
                              std::optional<int> signature_d) {
    int bound = identity_takes_signature(name) || name == "glngln-star" || name == "unun"
                    ? kSignedBound
                    : kPlainBound;
    if (nu.size() > bound) throw std::domain_error("check_identity: |nu| exceeds bound");
    if (identity_takes_signature(name) && !signature_d)
        throw std::invalid_argument("check_identity: identity requires a signature class");

    Int lhs, rhs;
    if (name == "ff-inv") {
        lhs = weighted_involution_sum(nu, {.no_fixed = true}, {});
        rhs = even_character_sum(nu, RhoFilter::EvenParts);
    } else if (name == "macdonald-I8E11") {
        lhs = weighted_involution_sum(nu, {}, {.neg_l2 = true});
        rhs = even_character_sum(nu, RhoFilter::All);
    } else if (name == "glnglngln") {
        lhs = weighted_signed_sum(nu, SignedFamily::Plus, signature_d, {.neg_l2 = true});
        rhs = weighted_character_sum(nu, [&](const Partition& rho) {
            return count_tableaux(transpose(rho), signature_d);
        });
    } else if (name == "glngln-star") {
        lhs = weighted_signed_sum(nu, SignedFamily::Star, std::nullopt, {.neg_l2 = true});
        rhs = even_character_sum(nu, RhoFilter::EvenParts);
    } else if (name == "other-gln-on") {
        lhs = weighted_involution_sum(nu, {.no_even_fixed = true, .no_even_half = true}, {});
        rhs = even_character_sum(nu, RhoFilter::All);
    } else if (name == "ununun") {
        lhs = weighted_signed_sum(nu, SignedFamily::Plus, signature_d,
                                  {.neg_l2_0mod4 = true, .neg_half_l3_odd = true});
        rhs = weighted_character_sum(nu, [&](const Partition& rho) {
            return sign_pow(n_stat(rho)) *
                   count_reverse_fixed_with_signature(transpose(rho), *signature_d);
        });
    } else if (name == "unun") {
        lhs = weighted_signed_sum(nu, SignedFamily::Star, std::nullopt,
                                  {.neg_l2_0mod4 = true, .neg_half_l3_odd = true});
        rhs = weighted_character_sum(nu, [&](const Partition& rho) -> Int {
            Partition rt = transpose(rho);
            if (!odd_sizes_have_even_mult(rt)) return 0;
            return sign_pow(n_stat(rho)) * prod_mult_plus_one_even_sizes(rt);
        });
    } else if (name == "gln-on") {
        lhs = weighted_involution_sum(nu, {}, {.base = -2});
        rhs = sign_pow(nu.size()) * weighted_character_sum(nu, [&](const Partition& rho) {
                  return prod_mult_plus_one(rho);
              });
    } else if (name == "gln-son") {
        lhs = weighted_involution_sum(nu, {.no_odd_fixed = true}, {.base = -2});
        rhs = even_character_sum(nu, RhoFilter::EvenTranspose);
    } else if (name == "un-on") {
        lhs = weighted_involution_sum(
            nu, {}, {.neg_l1_even = true, .neg_l2_2mod4 = true, .neg_half_l3_odd = true, .base = 2});
        rhs = weighted_character_sum(nu, [&](const Partition& rho) -> Int {
            if (!even_sizes_have_even_mult(rho)) return 0;
            return sign_pow(n_stat(transpose(rho))) * prod_mult_plus_one_odd_sizes(rho);
        });
    } else if (name == "un-son") {
        lhs = weighted_involution_sum(
            nu, {.no_odd_fixed = true},
            {.neg_l1 = true, .neg_l2_2mod4 = true, .neg_half_l3_odd = true, .base = 2});
        rhs = weighted_character_sum(nu, [&](const Partition& rho) -> Int {
            if (!odd_sizes_have_even_mult(rho)) return 0;
            return sign_pow(n_stat(transpose(rho))) * prod_mult_plus_one_even_sizes(rho);
        });
    } else {
        throw std::invalid_argument("check_identity: unknown identity '" + name + "'");
    }
    return {lhs, rhs, lhs == rhs};
}

namespace {

Int factorial(int n) {
    Int v = 1;
    for (int i = 2; i <= n; ++i) v *= i;
    return v;
}

Int binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    return factorial(n) / (factorial(k) * factorial(n - k));
}

Int int_pow(Int base, int e) {
    Int v = 1;
    for (int i = 0; i < e; ++i) v *= base;
    return v;
}

/* b! / (2^{b/2} (b/2)!): the number of perfect matchings of b items. */
Int perfect_matchings(int b) {
    return factorial(b) / (int_pow(2, b / 2) * factorial(b / 2));
}

/* sum over r of C(b,2r) a^r (2r)!/(2^r r!): partial matchings of b items with
 * a choices per matched pair. */
Int partial_matchings(int a, int b) {
    Int total = 0;
    for (int r = 0; 2 * r <= b; ++r)
        total += binomial(b, 2 * r) * int_pow(a, r) * factorial(2 * r) / (int_pow(2, r) * factorial(r));
    return total;
}

Int closed_form_ab(int a, int b, const std::string& family) {
    bool a_odd = a % 2 != 0, b_odd = b % 2 != 0;
    if (family == "ff-inv") {
        if (a_odd && b_odd) return 0;
        if (a_odd) return int_pow(a, b / 2) * perfect_matchings(b);
        return partial_matchings(a, b);
    }
    if (family == "macdonald-I8E11") {
        if (!a_odd && b_odd) return 0;
        if (!a_odd) return int_pow(a, b / 2) * perfect_matchings(b);
        return partial_matchings(a, b);
    }
    throw std::invalid_argument("multiplicative_closed_form: unknown family '" + family + "'");
}

}  // namespace

Int multiplicative_closed_form(const Partition& nu, const std::string& family) {
    Int prod = 1;
    for (const auto& [a, b] : multiplicities(nu)) prod *= closed_form_ab(a, b, family);
    return prod;
}

}  // namespace finsym
