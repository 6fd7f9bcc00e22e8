#pragma once

#include "garside/element.hpp"
#include "garside/rational.hpp"

#include <cstdint>
#include <optional>
#include <utility>

namespace garside {

/// Exact translation numbers INF, SUP and LEN = SUP - INF. Denominators are
/// bounded by ||Delta||.
struct TranslationData {
  Rational t_inf;
  Rational t_sup;
  Rational t_len;
};

/// Computes INF(g) = max{infs(g^k)/k : k = 1..||Delta||} and
/// SUP(g) = min{sups(g^k)/k : k = 1..||Delta||} exactly.
TranslationData translation_numbers(const Element& g);

/// g is periodic iff LEN(g) = 0.
bool is_periodic(const Element& g);

/// p/q classification of a periodic element: INF = SUP = p/q in lowest terms,
/// q minimal, and a conjugator certifying g^q ~ Delta^p (verified exactly).
struct PeriodicityReport {
  std::int64_t p;
  std::int64_t q;
  Element conjugator;
};

/// nullopt for non-periodic elements. The identity reports (p, q) = (0, 1).
std::optional<PeriodicityReport> periodicity_class(const Element& g);

/// lens(g^k) for k = 1..kmax; each value is 0 or 1, with zeros exactly at
/// multiples of q. Throws std::domain_error when g is not periodic.
std::vector<int> lens_profile(const Element& g, int kmax);

/// Root certificate: requires INF(g) = a/b (re-derived, not trusted) and
/// returns a conjugator w with w^-1 g^b w = Delta^a. Throws std::domain_error
/// when the hypothesis fails.
Element delta_root_certificate(const Element& g, std::int64_t a, std::int64_t b);

/// Requires lens(g^a) = lens(g^b) = 0; returns d = gcd(a, b) and a conjugator
/// certifying that g^d is conjugate to the corresponding Delta power.
std::pair<std::int64_t, Element> gcd_periodic_exponent(const Element& g, std::int64_t a,
                                                       std::int64_t b);

/// Commutation with every atom, checked by exact arithmetic.
bool is_central(const Element& g);

/// Garside-element test for a positive c: the simple left and right divisor
/// sets coincide and contain every atom. Throws std::domain_error on
/// non-positive input.
bool is_garside_element(const Element& c);

/// For central g != 1 returns c = Delta^k g with k the smallest nonnegative
/// multiple of the central exponent satisfying k >= -inf(g) + 1; c is a
/// Garside element (asserted). Throws std::domain_error on non-central or
/// identity input.
Element garside_element_from_central(const Element& g);

/// Searches for nonzero (k, l) with g^k conjugate to h^l. For two nontrivial
/// periodic inputs the minimal pair is derived exactly from their p/q data;
/// otherwise exponents up to `bound` are tried. nullopt means none found
/// within the bound.
std::optional<std::pair<std::int64_t, std::int64_t>> commensurable(const Element& g,
                                                                   const Element& h,
                                                                   std::int64_t bound);

}  // namespace garside
