#pragma once

#include "garside/structure.hpp"

#include <string>

namespace garside {

/// Classical Garside structure on the n-strand braid group, 2 <= n <= 7.
/// Simples are the n! permutation braids; Delta is the half twist; atoms are
/// s1..s(n-1). Simples are generated by closure from the atoms; products are
/// defined exactly when inversion counts add.
TablePtr braid_classical(int n);

/// G = <x, y | x^a = y^b> with a, b >= 2. Simples are 1, x..x^(a-1),
/// y..y^(b-1) and Delta = x^a = y^b; Delta is central.
TablePtr torus(int a, int b);

/// Z^l for 1 <= l <= 12. Simples are {0,1}^l, Delta = (1,...,1), atoms the
/// standard basis; meet and join are coordinatewise min and max.
TablePtr free_abelian(int ell);

/// Instance selector as used by the CLI: "braid:3", "torus:2:2",
/// "free_abelian:2", "custom:<path>".
struct InstanceSpec {
  enum class Kind { Braid, Torus, FreeAbelian, Custom };
  Kind kind;
  int a = 0, b = 0;
  std::string path;

  TablePtr build() const;  // reads the file for Kind::Custom
  std::string to_string() const;
};

/// Parses an instance string; throws std::invalid_argument on bad syntax or
/// out-of-range parameters.
InstanceSpec parse_instance(const std::string& text);

}  // namespace garside
