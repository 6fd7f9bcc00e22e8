#pragma once

#include "garside/element.hpp"
#include "garside/instances.hpp"
#include "garside/io.hpp"

#include <string>

namespace fixtures {

using garside::Element;
using garside::TablePtr;

inline const TablePtr& b2() {
  static TablePtr t = garside::braid_classical(2);
  return t;
}
inline const TablePtr& b3() {
  static TablePtr t = garside::braid_classical(3);
  return t;
}
inline const TablePtr& b4() {
  static TablePtr t = garside::braid_classical(4);
  return t;
}
inline const TablePtr& t22() {
  static TablePtr t = garside::torus(2, 2);
  return t;
}
inline const TablePtr& t33() {
  static TablePtr t = garside::torus(3, 3);
  return t;
}
inline const TablePtr& t23() {
  static TablePtr t = garside::torus(2, 3);
  return t;
}
inline const TablePtr& z2() {
  static TablePtr t = garside::free_abelian(2);
  return t;
}
inline const TablePtr& z3() {
  static TablePtr t = garside::free_abelian(3);
  return t;
}

inline Element el(const TablePtr& t, const std::string& word) {
  return garside::from_word(t, garside::parse_word(*t, word));
}

inline Element dpow(const TablePtr& t, std::int64_t k) { return Element::delta_power(t, k); }

// Hand-built classical B3: same simple order and names that braid_classical(3)
// discovers, so the two tables can be compared cell for cell.
inline garside::StructureData b3_data() {
  garside::StructureData d;
  d.names = {"1", "s1", "s2", "s1.s2", "s2.s1", "D"};
  d.atoms = {1, 2};
  d.delta = 5;
  d.allocate_product();
  for (garside::SimpleId s = 0; s < 6; ++s) {
    d.set_cell(0, s, s);
    if (s != 0) d.set_cell(s, 0, s);
  }
  d.set_cell(1, 2, 3);  // s1 * s2 = s1.s2
  d.set_cell(2, 1, 4);  // s2 * s1 = s2.s1
  d.set_cell(1, 4, 5);  // s1 * s2.s1 = D
  d.set_cell(2, 3, 5);  // s2 * s1.s2 = D
  d.set_cell(3, 1, 5);  // s1.s2 * s1 = D
  d.set_cell(4, 2, 5);  // s2.s1 * s2 = D
  return d;
}

}  // namespace fixtures
