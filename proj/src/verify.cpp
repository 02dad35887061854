#include "esalg/verify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "esalg/cohomology.hpp"
#include "esalg/forms.hpp"

namespace esalg {

namespace {

std::string join(const std::vector<BlockDescriptor>& blocks) {
  std::string s;
  for (const auto& b : blocks) s += (s.empty() ? "" : "+") + to_string(b);
  return s;
}

std::size_t sum_dim(const std::vector<BlockDescriptor>& blocks) {
  std::size_t d = 1;
  for (const auto& b : blocks) d += b.algebra_dim() - 1;
  return d;
}

bool admissible(const BlockDescriptor& d, const Field& f) {
  try {
    d.validate(f);
    return true;
  } catch (const Error&) {
    return false;
  }
}

bool is_single(const std::vector<BlockDescriptor>& blocks, const BlockDescriptor& d) {
  return blocks.size() == 1 && blocks.front() == d;
}

bool all_triple_products_vanish(const Algebra& a) {
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector ij = a.basis_product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        const Vector e = unit_vector(a.field(), n, k);
        if (!is_zero(multiply(a, ij, e)) || !is_zero(multiply(a, e, ij))) return false;
      }
    }
  return true;
}

}  // namespace

std::vector<SweepInstance> sweep_instances(std::size_t max_n, const std::vector<Scalar>& lambdas, const Field& f,
                                           std::size_t max_sum_dim) {
  std::vector<BlockDescriptor> singles;
  for (std::size_t n = 1; n <= max_n; ++n) singles.push_back(BlockDescriptor::j(n));
  for (std::size_t n = 2; n <= max_n; ++n) singles.push_back(BlockDescriptor::gamma(n));
  for (std::size_t n = 1; 2 * n <= max_n; ++n)
    for (const auto& l : lambdas) {
      BlockDescriptor d = BlockDescriptor::h(n, l);
      if (!admissible(d, f)) continue;
      if (std::find(singles.begin(), singles.end(), d) != singles.end()) continue;  // l vs 1/l
      singles.push_back(d);
    }
  std::vector<SweepInstance> out;
  for (const auto& d : singles) out.push_back({to_string(d), {d}});
  for (std::size_t a = 0; a < singles.size(); ++a)
    for (std::size_t b = a; b < singles.size(); ++b) {
      std::vector<BlockDescriptor> pair{singles[a], singles[b]};
      if (sum_dim(pair) > max_sum_dim) continue;
      out.push_back({join(pair), pair});
    }
  return out;
}

std::size_t predicted_associative_multiplier(const std::vector<BlockDescriptor>& blocks) {
  if (is_single(blocks, BlockDescriptor::j(1))) return 1;
  const std::size_t d = sum_dim(blocks);
  return (d - 1) * (d - 1) - 1;
}

std::size_t predicted_leibniz_multiplier(const std::vector<BlockDescriptor>& blocks, const Field& f) {
  if (is_single(blocks, BlockDescriptor::j(1))) return 1;
  if (is_single(blocks, BlockDescriptor::j(2))) return 4;
  if (is_single(blocks, BlockDescriptor::h(1, Scalar::from_int(f, -1)))) return 5;
  const std::size_t d = sum_dim(blocks);
  return (d - 1) * (d - 1) - 1;
}

VerifyRow verify_instance(const SweepInstance& inst, const Field& f) {
  VerifyRow row;
  row.name = inst.name;
  try {
    const Algebra a = make_sum(inst.blocks, f);
    const bool is_j1 = is_single(inst.blocks, BlockDescriptor::j(1));
    row.dim = a.dim();
    row.identities_ok = check_identity(a, IdentityKind::Associative).holds &&
                        check_identity(a, IdentityKind::LeibnizLeft).holds &&
                        check_identity(a, IdentityKind::LeibnizRight).holds && all_triple_products_vanish(a);
    row.multiplier = multiplier_dim(a, IdentityKind::Associative);
    row.predicted = predicted_associative_multiplier(inst.blocks);
    row.leibniz_multiplier = multiplier_dim(a, kValidatedLeibniz);
    row.leibniz_predicted = predicted_leibniz_multiplier(inst.blocks, f);
    const Subspace zs = z_star(a);
    row.capable = zs.dim() == 0;
    row.unicentral = zs == center(a);
    BlockDecomposition expected{inst.blocks};
    row.classify_ok = classify(a) == expected;
    row.pass = is_extra_special(a) && row.identities_ok && row.multiplier == row.predicted &&
               row.leibniz_multiplier == row.leibniz_predicted && row.capable == is_j1 && row.unicentral == !is_j1 &&
               row.classify_ok;
  } catch (const std::exception& e) {
    row.error = e.what();
    row.pass = false;
  }
  return row;
}

std::vector<VerifyRow> verify_theorems(std::size_t max_n, const std::vector<Scalar>& lambdas, const Field& f,
                                       std::size_t max_sum_dim) {
  if (max_n < 2) throw Error(ErrorKind::InvalidDescriptor, "max_n must be at least 2");
  const std::vector<SweepInstance> instances = sweep_instances(max_n, lambdas, f, max_sum_dim);
  std::vector<VerifyRow> rows(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) rows[i] = verify_instance(instances[i], f);
  };
  const std::size_t threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

}  // namespace esalg
