#ifndef ESALG_DIALGEBRA_HPP
#define ESALG_DIALGEBRA_HPP

#include <array>
#include <optional>

#include "esalg/algebra.hpp"

namespace esalg {

/// Two products on one space: left() is x -| y, right() is x |- y.
class Dialgebra {
 public:
  Dialgebra() = default;
  Dialgebra(Algebra left, Algebra right);
  static Dialgebra zero(const Field& f, std::size_t dim);

  const Field& field() const { return left_.field(); }
  std::size_t dim() const { return left_.dim(); }
  const Algebra& left() const { return left_; }
  const Algebra& right() const { return right_; }
  Algebra& left() { return left_; }
  Algebra& right() { return right_; }

  friend bool operator==(const Dialgebra& a, const Dialgebra& b) {
    return a.left_ == b.left_ && a.right_ == b.right_;
  }

 private:
  Algebra left_;
  Algebra right_;
};

/// The five axioms, numbered as they are checked:
///   1  (x |- y) |- z = x |- (y |- z)
///   2  (x -| y) -| z = x -| (y -| z)
///   3  (x -| y) |- z = x |- (y |- z)
///   4  (x -| y) -| z = x -| (y |- z)
///   5  (x |- y) -| z = x |- (y -| z)
struct DiassociativeCheck {
  bool holds = true;
  int axiom = 0;                                        // 1..5 on failure
  std::optional<std::array<std::size_t, 3>> violation;  // basis triple
};

DiassociativeCheck check_diassociative(const Dialgebra& d);
inline bool is_diassociative(const Dialgebra& d) { return check_diassociative(d).holds; }

/// x -| y = x |- y = x y. Throws NotAssociative.
Dialgebra embed_associative(const Algebra& a);

/// x y = x -| y - y |- x. Throws NotDiassociative.
Algebra induced_leibniz(const Dialgebra& d);

}  // namespace esalg

#endif  // ESALG_DIALGEBRA_HPP
