#include "garside/periodicity.hpp"

#include "garside/conjugacy.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace garside {

TranslationData translation_numbers(const Element& g) {
  const int norm = g.table()->delta_norm();
  Element pw = Element::identity(g.table());
  Rational best_inf(0), best_sup(0);
  for (int k = 1; k <= norm; ++k) {
    pw = multiply(pw, g);
    SummitData s = summit_invariants(pw);
    Rational inf_k(s.infs, k);
    Rational sup_k(s.sups, k);
    if (k == 1 || inf_k > best_inf) best_inf = inf_k;
    if (k == 1 || sup_k < best_sup) best_sup = sup_k;
  }
  return {best_inf, best_sup, best_sup - best_inf};
}

bool is_periodic(const Element& g) { return translation_numbers(g).t_len == Rational(0); }

std::optional<PeriodicityReport> periodicity_class(const Element& g) {
  TranslationData t = translation_numbers(g);
  if (t.t_len != Rational(0)) return std::nullopt;
  const std::int64_t p = t.t_inf.numerator();
  const std::int64_t q = t.t_inf.denominator();
  auto cert = conjugate_to_delta_power(power(g, q));
  if (!cert || cert->first != p) {
    throw std::logic_error("periodicity_class: g^q is not conjugate to Delta^p");
  }
  return PeriodicityReport{p, q, cert->second};
}

std::vector<int> lens_profile(const Element& g, int kmax) {
  if (kmax < 1) throw std::invalid_argument("lens_profile: kmax must be >= 1");
  if (!is_periodic(g)) throw std::domain_error("lens_profile requires a periodic element");
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(kmax));
  Element pw = Element::identity(g.table());
  for (int k = 1; k <= kmax; ++k) {
    pw = multiply(pw, g);
    out.push_back(static_cast<int>(summit_invariants(pw).lens));
  }
  return out;
}

Element delta_root_certificate(const Element& g, std::int64_t a, std::int64_t b) {
  if (b == 0) throw std::invalid_argument("delta_root_certificate: b must be nonzero");
  auto cls = periodicity_class(g);
  if (!cls) throw std::domain_error("delta_root_certificate: element is not periodic");
  if (Rational(a, b) != Rational(cls->p, cls->q)) {
    throw std::domain_error("delta_root_certificate: INF(g) differs from a/b");
  }
  // b = d q and a = d p for an integer d, so the class conjugator certifies
  // g^b ~ Delta^a as well. Verified exactly before returning.
  const Element& w = cls->conjugator;
  if (!(conjugate(power(g, b), w) == Element::delta_power(g.table(), a))) {
    throw std::logic_error("delta_root_certificate: witness failed exact verification");
  }
  return w;
}

std::pair<std::int64_t, Element> gcd_periodic_exponent(const Element& g, std::int64_t a,
                                                       std::int64_t b) {
  if (a == 0 || b == 0) throw std::invalid_argument("gcd_periodic_exponent: exponents must be nonzero");
  if (summit_invariants(power(g, a)).lens != 0) {
    throw std::domain_error("gcd_periodic_exponent: g^a is not conjugate to a Delta power (a = " +
                            std::to_string(a) + ")");
  }
  if (summit_invariants(power(g, b)).lens != 0) {
    throw std::domain_error("gcd_periodic_exponent: g^b is not conjugate to a Delta power (b = " +
                            std::to_string(b) + ")");
  }
  auto cls = periodicity_class(g);
  if (!cls) throw std::logic_error("gcd_periodic_exponent: Delta-power exponents on a non-periodic element");
  const std::int64_t q = cls->q;
  if (a % q != 0 || b % q != 0) {
    throw std::logic_error("gcd_periodic_exponent: exponents are not multiples of q");
  }
  const std::int64_t d = std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
  const std::int64_t target = d / q * cls->p;
  const Element& w = cls->conjugator;
  if (!(conjugate(power(g, d), w) == Element::delta_power(g.table(), target))) {
    throw std::logic_error("gcd_periodic_exponent: witness failed exact verification");
  }
  return {d, w};
}

bool is_central(const Element& g) {
  for (SimpleId a : g.table()->atoms()) {
    Element atom = Element::from_simple(g.table(), a);
    if (!(multiply(g, atom) == multiply(atom, g))) return false;
  }
  return true;
}

bool is_garside_element(const Element& c) {
  if (!c.is_positive()) {
    throw std::domain_error("is_garside_element requires a positive element");
  }
  DivisorSets ds = divisor_sets(c);
  if (ds.left != ds.right) return false;
  for (SimpleId a : c.table()->atoms()) {
    if (!std::binary_search(ds.left.begin(), ds.left.end(), a)) return false;
  }
  return true;
}

Element garside_element_from_central(const Element& g) {
  if (g.is_identity()) throw std::domain_error("garside_element_from_central: input is the identity");
  if (!is_central(g)) throw std::domain_error("garside_element_from_central: input is not central");
  const std::int64_t m = g.table()->central_exponent();
  const std::int64_t lower = -g.inf() + 1;
  const std::int64_t k = lower <= 0 ? 0 : (lower + m - 1) / m * m;
  Element c = multiply(Element::delta_power(g.table(), k), g);
  if (c.inf() < 1 || !is_garside_element(c)) {
    throw std::logic_error("garside_element_from_central: completion is not a Garside element");
  }
  return c;
}

std::optional<std::pair<std::int64_t, std::int64_t>> commensurable(const Element& g,
                                                                   const Element& h,
                                                                   std::int64_t bound) {
  if (bound < 1) throw std::invalid_argument("commensurable: bound must be >= 1");
  if (g.table() != h.table()) {
    throw std::invalid_argument("commensurable requires elements over the same table");
  }
  if (g == h) return std::make_pair<std::int64_t, std::int64_t>(1, 1);
  if (g.is_identity() || h.is_identity()) return std::nullopt;  // torsion-freeness

  auto cg = periodicity_class(g);
  auto ch = periodicity_class(h);
  if (cg && ch) {
    // Minimal k = q_g t with l = t p_g q_h / p_h integral; then g^k and h^l
    // are conjugate to the same Delta power.
    const std::int64_t pg = cg->p, qg = cg->q, ph = ch->p, qh = ch->q;
    const std::int64_t abs_ph = ph < 0 ? -ph : ph;
    const std::int64_t t = abs_ph / std::gcd(abs_ph, (pg < 0 ? -pg : pg) * qh);
    const std::int64_t k = qg * t;
    const std::int64_t l = t * pg * qh / ph;
    auto dk = conjugate_to_delta_power(power(g, k));
    auto dl = conjugate_to_delta_power(power(h, l));
    if (!dk || !dl || dk->first != dl->first) {
      throw std::logic_error("commensurable: exponent derivation is inconsistent");
    }
    return std::make_pair(k, l);
  }

  for (std::int64_t k = 1; k <= bound; ++k) {
    Element gk = power(g, k);
    for (std::int64_t la = 1; la <= bound; ++la) {
      for (std::int64_t l : {la, -la}) {
        if (is_conjugate(gk, power(h, l))) return std::make_pair(k, l);
      }
    }
  }
  return std::nullopt;
}

}  // namespace garside
