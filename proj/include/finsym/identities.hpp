#pragma once

#include <optional>
#include <string>
#include <vector>

#include "finsym/partition.hpp"

namespace finsym {

/*
 * Each verified identity equates a weighted count over centralizer
 * involutions (or signed involutions / signed tableaux) with a weighted sum
 * of symmetric-group character values.  The two sides are computed by
 * independent modules; check_identity evaluates both and compares.
 *
 * Stable keys:
 *   ff-inv            |fixed-point-free involutions|          = sum over even rho of chi
 *   macdonald-I8E11   sum (-1)^{l2}                           = sum over all rho of chi
 *   glnglngln         signed (plus family, signature d)       = sum |T_d(rho')| chi
 *   glngln-star       signed (star family)                    = sum over even rho of chi
 *   other-gln-on      |{w : l1_even = 0, l2 = 0}|             = sum over all rho of chi
 *   ununun            signed plus, unitary weight, signature  = sum (-1)^{n(rho)} |T_d(rho')^rev| chi
 *   unun              signed star, unitary weight             = restricted (-1)^{n(rho)} product sum
 *   gln-on            sum (-2)^{l1}                           = (-1)^{|nu|} sum prod(m_i+1) chi
 *   gln-son           sum over l1_odd=0 of (-2)^{l1}          = sum over even rho' of chi
 *   un-on             unitary orthogonal weight               = restricted product sum
 *   un-son            unitary special-orthogonal weight       = restricted product sum
 */
struct IdentityResult {
    Int lhs;
    Int rhs;
    bool equal;
};

std::vector<std::string> identity_names();
bool identity_takes_signature(const std::string& name);

IdentityResult check_identity(const std::string& name, const Partition& nu,
                              std::optional<int> signature_d = std::nullopt);

/*
 * Closed forms for single-part-size cycle types (a^b), extended
 * multiplicatively over distinct part sizes.  Families:
 *   "ff-inv"          target of the fixed-point-free count
 *   "macdonald-I8E11" target of the (-1)^{l2} sum
 */
Int multiplicative_closed_form(const Partition& nu, const std::string& family);

}  // namespace finsym
