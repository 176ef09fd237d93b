#pragma once

// Recognised p-group classes and their c-nilpotent multipliers, order
// bounds and capability verdicts.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nilmult/abelian.hpp"
#include "nilmult/bigint.hpp"

namespace nilmult {

/// Exponent type of an extra-special group. ExpP/ExpP2 are for odd p; D8/Q8
/// for p = 2 (at m > 1 they record the type of the central product and do
/// not affect the multiplier).
enum class EsVariant { ExpP, ExpP2, D8, Q8 };

/// Shape of the centre of a generalised extra-special group:
/// Split is E x A, Central is (E . Z_{p^2}) x A, A elementary abelian.
enum class CenterKind { Split, Central };

class GroupDescriptor;

struct AbelianGroup {
  FinAbelian group;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Extra-special group of order p^{2m+1}.
struct ExtraSpecial {
  std::uint64_t p = 0;
  unsigned m = 0;
  EsVariant variant = EsVariant::ExpP;
  friend bool operator==(const ExtraSpecial&, const ExtraSpecial&) = default;
};

/// Generalised extra-special group: Phi(G) = G' of order p.
struct GenExtraSpecial {
  std::uint64_t p = 0;
  unsigned m = 0;
  CenterKind center = CenterKind::Split;
  unsigned rank = 0;  // rank of the elementary abelian complement A
  EsVariant variant = EsVariant::ExpP;
  friend bool operator==(const GenExtraSpecial&,
                         const GenExtraSpecial&) = default;
};

struct Product {
  std::vector<GroupDescriptor> factors;
  friend bool operator==(const Product&, const Product&);
};

class GroupDescriptor {
 public:
  using Value = std::variant<AbelianGroup, ExtraSpecial, GenExtraSpecial, Product>;

  static GroupDescriptor abelian(FinAbelian g);
  /// Throws std::invalid_argument for malformed parameters, e.g.
  /// "D8 requires p=2".
  static GroupDescriptor extra_special(std::uint64_t p, unsigned m,
                                       EsVariant variant);
  /// Without a variant, odd p uses ExpP and p = 2 uses D8.
  static GroupDescriptor gen_extra_special(
      std::uint64_t p, unsigned m, CenterKind center, unsigned rank,
      std::optional<EsVariant> variant = std::nullopt);
  /// Flattens nested products, keeps non-abelian factors in order and merges
  /// the abelian factors into one trailing factor.
  static GroupDescriptor product(std::vector<GroupDescriptor> factors);

  const Value& value() const { return value_; }

  BigInt order() const;
  BigInt derived_order() const;
  FinAbelian abelianization() const;
  std::vector<std::uint64_t> primes() const;

  friend bool operator==(const GroupDescriptor&,
                         const GroupDescriptor&) = default;

 private:
  explicit GroupDescriptor(Value v) : value_(std::move(v)) {}
  Value value_;
};

EsVariant default_variant(std::uint64_t p);

/// Non-abelian direct factor after rewriting generalised extra-special
/// groups: an extra-special group, or E_{p^{2m+1}} . Z_{p^2}.
struct NonAbelianPart {
  enum class Kind { ExtraSpecial, CentralProduct };
  Kind kind = Kind::ExtraSpecial;
  std::uint64_t p = 0;
  unsigned m = 0;
  EsVariant variant = EsVariant::ExpP;

  FinAbelian abelianization() const;
};

struct Decomposition {
  std::vector<NonAbelianPart> parts;
  FinAbelian abelian;
};

/// Direct decomposition into non-abelian parts and one abelian part.
Decomposition decompose(const GroupDescriptor& g);

struct MultiplierResult {
  /// Full structure when known; nullopt when only the order is known.
  std::optional<FinAbelian> structure;
  BigInt order;
  /// Citation tag of the result used, e.g. "Thm3.14(i)".
  std::string provenance;

  bool order_only() const { return !structure.has_value(); }
};

MultiplierResult multiplier(const GroupDescriptor& g, unsigned c);

/// gamma*_{c+1} of the dihedral group of order 2n.
FinAbelian gamma_star_dihedral(unsigned n, unsigned c);

/// Exponent of p in the bound on |M^(c)(G)| for |G| = p^n, |G'| = p^m:
/// witt(c+1, n-m) + witt(c+2, 2) + (m-1)(n-m)^c.
BigInt derived_order_bound(unsigned n, unsigned m, unsigned c);

/// True iff g is E_1 x Z_p^(r) (odd p, r >= 0), the equality case of the
/// bound for |G'| = p. Throws std::invalid_argument unless g is a p-group
/// with derived subgroup of order p.
bool attains_derived_order_bound(const GroupDescriptor& g, unsigned c);

struct CapabilityVerdict {
  bool capable = false;
  bool c_capable = false;
  std::string reason;
};

/// Capability and c-capability of extra-special and generalised
/// extra-special groups. Throws ClassNotCovered otherwise.
CapabilityVerdict capability(const GroupDescriptor& g, unsigned c);

/// Exponent k with |x| = p^k; throws std::domain_error if x is not a power
/// of p.
std::uint64_t log_p(const BigInt& x, std::uint64_t p);

}  // namespace nilmult
