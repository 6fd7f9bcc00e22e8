#pragma once

#include "garside/element.hpp"

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace garside {

inline constexpr std::size_t kDefaultCap = 100000;

/// Conjugacy invariants of a class together with a witness: infs(g), sups(g),
/// lens(g), a representative r realizing both, and a conjugator w with
/// w^-1 g w = r (verified exactly on construction).
struct SummitData {
  std::int64_t infs;
  std::int64_t sups;
  std::int64_t lens;
  Element representative;
  Element conjugator;
};

/// Cycling conjugates g by its tau-twisted initial factor, moving it to the
/// tail; inf never decreases. Pure Delta powers are fixed points. Returns the
/// result and the conjugator used.
std::pair<Element, Element> cycling(const Element& g);

/// Decycling conjugates g by the inverse of its final factor, moving it to
/// the head; sup never increases.
std::pair<Element, Element> decycling(const Element& g);

/// Iterated cycling until inf stops increasing for ||Delta|| consecutive
/// steps, then iterated decycling for sup, repeated until a full round makes
/// no progress.
SummitData summit_invariants(const Element& g);

/// The full set of conjugates realizing infs and sups, computed as the
/// closure of the summit representative under conjugation by simples,
/// filtered to summit inf/sup. Output in canonical order. Throws
/// std::length_error when the closure exceeds `cap`.
std::vector<Element> super_summit_set(const Element& g, std::size_t cap = kDefaultCap);

/// Conjugacy decision with witness: returns w with w^-1 g w = h when g and h
/// are conjugate, nullopt otherwise.
std::optional<Element> is_conjugate(const Element& g, const Element& h,
                                    std::size_t cap = kDefaultCap);

/// When lens(g) = 0, returns a = infs(g) and a conjugator realizing
/// g ~ Delta^a; otherwise nullopt.
std::optional<std::pair<std::int64_t, Element>> conjugate_to_delta_power(const Element& g);

}  // namespace garside
