#ifndef ESALG_VERIFY_HPP
#define ESALG_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "esalg/catalog.hpp"

namespace esalg {

struct SweepInstance {
  std::string name;  // descriptor text, e.g. "j:2+h2:3"
  std::vector<BlockDescriptor> blocks;
};

/// Catalog members within bounds: J(1..max_n), Gamma(2..max_n), H(1, l) and
/// H(n, l) with 2 <= 2n <= max_n for each admissible l, followed by every
/// unordered pair of them (repeats allowed) whose central sum has dimension
/// at most max_sum_dim.
std::vector<SweepInstance> sweep_instances(std::size_t max_n, const std::vector<Scalar>& lambdas, const Field& f,
                                           std::size_t max_sum_dim);

/// (dim - 1)^2 - 1 except J(1) -> 1.
std::size_t predicted_associative_multiplier(const std::vector<BlockDescriptor>& blocks);
/// (dim - 1)^2 - 1 except J(1) -> 1, J(2) -> 4, H(1, -1) -> 5.
std::size_t predicted_leibniz_multiplier(const std::vector<BlockDescriptor>& blocks, const Field& f);

struct VerifyRow {
  std::string name;
  std::size_t dim = 0;
  std::size_t multiplier = 0;
  std::size_t predicted = 0;
  std::size_t leibniz_multiplier = 0;
  std::size_t leibniz_predicted = 0;
  bool capable = false;
  bool unicentral = false;
  bool identities_ok = false;  // associative and both Leibniz identities, zero 3-products
  bool classify_ok = false;
  bool pass = false;
  std::optional<std::string> error;
};

VerifyRow verify_instance(const SweepInstance& inst, const Field& f);

/// Rows are independent and evaluated concurrently; an exception in one row
/// becomes that row's error and a FAIL.
std::vector<VerifyRow> verify_theorems(std::size_t max_n, const std::vector<Scalar>& lambdas, const Field& f,
                                       std::size_t max_sum_dim = 11);

}  // namespace esalg

#endif  // ESALG_VERIFY_HPP
