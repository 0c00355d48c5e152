#pragma once

#include <vector>

#include "semicat/derived.hpp"
#include "semicat/matrix.hpp"
#include "semicat/monad.hpp"

namespace semicat {

/// A map n -> T(m) of Kl_N(T): component i is a T-value over {0..m-1}.
struct KleisliMap {
  MonadPtr monad;
  std::size_t dom = 0;
  std::size_t cod = 0;
  std::vector<Elem> components;

  friend bool operator==(const KleisliMap& a, const KleisliMap& b) {
    return a.monad->name() == b.monad->name() && a.dom == b.dom && a.cod == b.cod && a.components == b.components;
  }
};

std::string to_string(const KleisliMap& f);

/// Validates shape and that every component lives over {0..cod-1}.
KleisliMap make_kleisli(MonadPtr T, std::size_t dom, std::size_t cod, std::vector<Elem> components);

/// Kl_N(T) as a biproduct category (additive T) with tensor (commutative T)
/// and dagger (involutive T).
class KleisliCategory {
 public:
  using Morphism = KleisliMap;

  explicit KleisliCategory(MonadPtr T) : monad_(std::move(T)) {}

  const MonadPtr& monad() const { return monad_; }
  std::string name() const { return "Kl_N(" + monad_->name() + ")"; }

  std::size_t dom(const Morphism& f) const { return f.dom; }
  std::size_t cod(const Morphism& f) const { return f.cod; }

  Morphism identity(std::size_t n) const;
  /// f then g: component i is mu(T(g)(f_i)).
  Morphism compose(const Morphism& f, const Morphism& g) const;

  Morphism coproj1(std::size_t n, std::size_t m) const;
  Morphism coproj2(std::size_t n, std::size_t m) const;
  Morphism proj1(std::size_t n, std::size_t m) const;
  Morphism proj2(std::size_t n, std::size_t m) const;
  Morphism cotuple(const Morphism& f, const Morphism& g) const;
  /// Built through bc^-1.
  Morphism tuple(const Morphism& f, const Morphism& g) const;
  Morphism zero(std::size_t n, std::size_t m) const;

  /// Component at join(i,i') is T(join)(dst(f_i, g_i')).
  Morphism tensor(const Morphism& f, const Morphism& g) const;

  /// Lifts a function of finite sets along eta.
  Morphism embed(const Aleph0Map& f) const;

  bool has_dagger() const;
  /// f^dagger(j) = sum_i zeta_1(<f_i, j>) * eta(i), where <f_i, j> is the
  /// T(1)-coefficient obtained by Kleisli-composing with the selector of j.
  Morphism dagger(const Morphism& f) const;

 private:
  void check(const Morphism& f) const;
  MonadPtr monad_;
};

KleisliMap kl_id(const MonadPtr& T, std::size_t n);
KleisliMap kl_compose(const KleisliMap& f, const KleisliMap& g);
KleisliMap kl_tensor(const KleisliMap& f, const KleisliMap& g);

/// bc_m : T(m) -> T(1)^m, iterating binary bc along m = (m-1) + 1.
std::vector<Elem> bc_m(const Monad& T, const Elem& u, std::size_t m);
Elem bc_m_inv(const Monad& T, const std::vector<Elem>& parts);

/// theta(g)(i,j) = (pi_j . bc_m . g)(i), a matrix over E(T).
Matrix<Elem> theta(const KleisliMap& g);
/// xi(h)(i) = bc_m^-1(<h(i,j)>_j); h must be over E(T).
KleisliMap xi(const MonadPtr& T, const Matrix<Elem>& h);

/// Transport along E(M_S) = S, phi |-> phi(star).
ScalarMatrix to_scalar_matrix(const Matrix<Elem>& m, SemiringKind kind);
Matrix<Elem> from_scalar_matrix(const ScalarMatrix& m, const SemiringPtr<Elem>& ering);

}  // namespace semicat
