#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace garside {

/// Index of a simple element within a StructureTable. Index 0 is always the
/// identity; the table singles out one index as Delta.
using SimpleId = std::int32_t;

inline constexpr SimpleId kIdentity = 0;
inline constexpr SimpleId kNoProduct = -1;

/// Hard cap on the number of simples a table may carry. Keeps the derived
/// n x n tables and the exhaustive validation within desk scale.
inline constexpr std::size_t kMaxSimples = 6000;

/// Raw description of a Garside structure: named simples, the atom subset,
/// Delta, and the partial product on simples (defined exactly when the
/// product of two simples is again simple). Everything else -- divisibility,
/// meets, the complement, tau -- is derived from these four fields.
struct StructureData {
  std::vector<std::string> names;  // names[0] must be "1"
  std::vector<SimpleId> atoms;
  SimpleId delta = kNoProduct;
  std::vector<SimpleId> product;  // row-major names.size()^2, kNoProduct = undefined

  std::size_t count() const { return names.size(); }
  SimpleId cell(SimpleId a, SimpleId b) const {
    return product[static_cast<std::size_t>(a) * names.size() + b];
  }
  void set_cell(SimpleId a, SimpleId b, SimpleId value) {
    product[static_cast<std::size_t>(a) * names.size() + b] = value;
  }
  void allocate_product() { product.assign(names.size() * names.size(), kNoProduct); }
};

struct Violation {
  enum class Kind {
    Malformed,  // dangling index, duplicate name, missing identity row, ...
    Axiom,      // a Garside monoid axiom fails on the table
  };
  Kind kind;
  std::string what;
};

/// Outcome of validate_structure. `violations` is empty exactly when the
/// table passed; stats are filled as far as derivation got.
struct ValidationReport {
  bool pass = false;
  std::vector<Violation> violations;
  std::vector<std::string> notes;
  std::size_t simple_count = 0;
  std::size_t atom_count = 0;
  int delta_norm = 0;
  int tau_order = 0;

  std::string summary() const;
};

class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(ValidationReport r)
      : std::runtime_error(r.summary()), report(std::move(r)) {}
  ValidationReport report;
};

/// Checks every table axiom exhaustively: well-formed indices and names,
/// identity rows, no nontrivial units, left/right cancellativity,
/// associativity of the partial product, the left and right meet-lattice
/// property on simples, two-sided Delta divisibility, bijectivity of the
/// complement, atomicity and generation by atoms, acyclic divisibility, and
/// compatibility of tau with products, atoms, Delta and meets.
ValidationReport validate_structure(const StructureData& data);

/// An immutable, fully validated Garside structure. Instances are created
/// through `create` and shared via shared_ptr; all derived tables are
/// precomputed, so every accessor is a constant-time lookup (join is O(n)).
class StructureTable {
 public:
  /// Validates `data` and derives all tables. Throws ValidationError when the
  /// table fails validation, std::invalid_argument on structurally unusable
  /// input (e.g. too many simples).
  static std::shared_ptr<const StructureTable> create(StructureData data);

  std::size_t simple_count() const { return data_.count(); }
  const std::string& name(SimpleId s) const { return data_.names[static_cast<std::size_t>(s)]; }
  std::optional<SimpleId> find_name(const std::string& name) const;
  std::span<const SimpleId> atoms() const { return data_.atoms; }
  bool is_atom(SimpleId s) const { return is_atom_[static_cast<std::size_t>(s)]; }
  SimpleId delta() const { return data_.delta; }

  /// Product of simples, kNoProduct when s*t is not simple.
  SimpleId product(SimpleId s, SimpleId t) const { return data_.cell(s, t); }

  /// Lattice meet under left divisibility (total on simples).
  SimpleId meet(SimpleId a, SimpleId b) const {
    return meet_[static_cast<std::size_t>(a) * simple_count() + b];
  }
  /// Lattice join under left divisibility; least upper bound within simples.
  SimpleId join(SimpleId a, SimpleId b) const;

  bool leq_left(SimpleId a, SimpleId b) const { return ldiv_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]; }
  bool leq_right(SimpleId a, SimpleId b) const { return rdiv_[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]; }

  /// The unique c with u*c = t; requires u <=_L t.
  SimpleId left_quotient(SimpleId u, SimpleId t) const;

  /// The complement d(s) with s*d(s) = Delta.
  SimpleId complement(SimpleId s) const { return complement_[static_cast<std::size_t>(s)]; }

  /// tau(s) = Delta^-1 s Delta = d(d(s)).
  SimpleId tau(SimpleId s) const { return tau_[static_cast<std::size_t>(s)]; }
  SimpleId tau_pow(SimpleId s, std::int64_t k) const;

  /// Order of tau on simples; equals the central exponent m (the least m >= 1
  /// with Delta^m central).
  int tau_order() const { return tau_order_; }
  int central_exponent() const { return tau_order_; }

  /// ||Delta||: the longest chain of atom multiplications from 1 to Delta.
  int delta_norm() const { return delta_norm_; }
  /// ||s|| for a simple s.
  int weight(SimpleId s) const { return weight_[static_cast<std::size_t>(s)]; }

  /// A fixed word in atoms spelling Delta (greedy smallest-atom chain).
  const std::vector<SimpleId>& delta_atom_word() const { return delta_word_; }
  /// Canonical word in atoms spelling the simple s.
  std::vector<SimpleId> atom_word(SimpleId s) const;

  const ValidationReport& report() const { return report_; }

 private:
  StructureTable() = default;

  StructureData data_;
  std::vector<SimpleId> meet_;
  std::vector<SimpleId> lquot_;  // row-major: lquot_[u*n+t] = c with u*c = t
  std::vector<SimpleId> complement_;
  std::vector<SimpleId> tau_;
  std::vector<boost::dynamic_bitset<>> ldiv_;  // ldiv_[b] = {a : a <=_L b}
  std::vector<boost::dynamic_bitset<>> rdiv_;
  std::vector<boost::dynamic_bitset<>> lmul_;  // lmul_[a] = {b : a <=_L b}
  std::vector<char> is_atom_;
  std::vector<int> weight_;
  std::vector<SimpleId> delta_word_;
  int tau_order_ = 1;
  int delta_norm_ = 0;
  ValidationReport report_;

  friend struct TableBuilder;
};

using TablePtr = std::shared_ptr<const StructureTable>;

}  // namespace garside
