#pragma once

#include "garside/element.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace garside {

// G_Delta = G / <Delta^m>, with m the central exponent of the table. Cosets
// are represented by the unique element whose inf lies in [0, m); two
// elements are in the same coset iff their factor lists agree and their inf
// powers agree mod m.

/// Canonical coset representative of g in G_Delta.
Element coset_normalize(const Element& g);
bool coset_equal(const Element& g, const Element& h);
/// g in <Delta^m>: exact power equality.
bool in_central_delta_subgroup(const Element& g);

/// Order of the image of g in G_Delta: the smallest j >= 1 with g^j an exact
/// power of Delta^m. nullopt when g is not periodic (infinite order). For a
/// p/q-periodic g the result equals q*m/gcd(p, m); minimality is re-verified
/// by direct power checks.
std::optional<std::int64_t> quotient_order(const Element& g);

/// A generator of a finite cyclic subgroup of G_Delta: the image of
/// Delta^u * a with a != Delta a simple and, when a != 1, an exponent
/// 2 <= q <= ||Delta|| such that tau^((q-1)u)(a) ... tau^u(a) a = Delta.
/// The identity-simple entries are the pure Delta classes <Delta^u>.
struct TypeIGenerator {
  std::int64_t u;
  SimpleId a;
  std::optional<int> q;  // absent when a is the identity
  Element element;       // Delta^u * a
  std::int64_t order;    // order of the image in G_Delta
};

/// Exhaustive search over u in [0, m), simples a != Delta and q in
/// [2, ||Delta||], emitting every witness of the product condition plus the
/// identity-simple entries. Each entry's product condition and the power
/// identity (Delta^u a)^q = Delta^(uq+1) are re-verified exactly.
std::vector<TypeIGenerator> enumerate_type_i(const TablePtr& table);

/// Groups the enumerated generators into conjugacy classes: entries i, j land
/// together when their elements are conjugate up to a central Delta^m shift.
std::vector<std::vector<std::size_t>> group_by_conjugacy(
    const std::vector<TypeIGenerator>& generators);

/// Falsification probe: for commuting periodic g, h checks
/// INF(gh) = INF(g) + INF(h), which must always hold. Throws
/// std::domain_error when the inputs do not commute or are not periodic.
bool inf_additivity_check(const Element& g, const Element& h);

/// Enumerates the finite subgroup of G_Delta generated by the images of the
/// given commuting periodic elements, finds a single element generating it,
/// and returns that generator with the subgroup order. Throws
/// std::domain_error on non-commuting or non-periodic input,
/// std::length_error when the closure exceeds `cap`.
std::pair<Element, std::int64_t> certify_cyclic(const std::vector<Element>& generators,
                                                std::size_t cap = 100000);

}  // namespace garside
