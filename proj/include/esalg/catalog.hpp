#ifndef ESALG_CATALOG_HPP
#define ESALG_CATALOG_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "esalg/algebra.hpp"

namespace esalg {

enum class BlockKind { J, Gamma, H };

/// One canonical extra special block:
///   J(n)      basis x1..xn, z;   x_i x_{i+1} = z (n = 1: x x = z)
///   Gamma(n)  basis x1..xn, z;   n >= 2, alternating-sign table
///   H(1, l)   basis x1, x2, z;   x1 x2 = z, x2 x1 = l z, l not in {0, 1}
///   H(n, l)   basis x1..x2n, z;  n >= 2, l not in {0, (-1)^{n+1}}
struct BlockDescriptor {
  BlockKind kind = BlockKind::J;
  std::size_t n = 1;
  std::optional<Scalar> lambda;

  static BlockDescriptor j(std::size_t n) { return {BlockKind::J, n, std::nullopt}; }
  static BlockDescriptor gamma(std::size_t n) { return {BlockKind::Gamma, n, std::nullopt}; }
  static BlockDescriptor h(std::size_t n, Scalar lambda) { return {BlockKind::H, n, std::move(lambda)}; }

  /// Dimension of the algebra this block describes.
  std::size_t algebra_dim() const;

  /// Throws InvalidDescriptor when n or lambda violates the family constraints.
  void validate(const Field& f) const;

  /// H-blocks compare lambda up to inversion.
  friend bool operator==(const BlockDescriptor& a, const BlockDescriptor& b);
};

/// Representative of {l, 1/l} that is smaller under canonical_compare.
Scalar normalize_lambda(const Scalar& lambda);

/// J by n, then Gamma by n, then H by (n, normalized lambda).
bool canonical_less(const BlockDescriptor& a, const BlockDescriptor& b);

/// `j:4`, `gamma:3`, `h2:3/2`, `h2n:2:5`.
std::string to_string(const BlockDescriptor& d);

/// Parses a `+`-separated list such as `j:2+h2:3`; lambdas are read in `f`.
std::vector<BlockDescriptor> parse_descriptors(std::string_view text, const Field& f);

Algebra make_canonical(const BlockDescriptor& d, const Field& f);

/// Central sum along the one-dimensional centers: non-central basis vectors
/// x1.. of a, then those of b, then the shared z. Cross products vanish.
/// Throws NotExtraSpecial or FieldMismatch.
Algebra central_sum(const Algebra& a, const Algebra& b);

/// make_canonical of each block, folded with central_sum.
Algebra make_sum(const std::vector<BlockDescriptor>& blocks, const Field& f);

}  // namespace esalg

#endif  // ESALG_CATALOG_HPP
