#include "dqalg/algebra.hpp"

#include <deque>

namespace dq {

namespace {

std::string describe_cell(std::size_t i, std::size_t j) {
  return "basis[" + std::to_string(i) + "]*basis[" + std::to_string(j) + "]";
}

}  // namespace

template <class S>
std::vector<Matrix<S>> matrices_of(const Subspace<S>& space, Index n) {
  std::vector<Matrix<S>> out;
  out.reserve(space.dim());
  for (Index i = 0; i < space.dim(); ++i) out.push_back(unflatten<S>(space.vector(i), n));
  return out;
}

template <class S>
MatSubalgebra<S>::MatSubalgebra(const FieldSpec& field, Index n, Subspace<S> space, bool unital)
    : field_(field), n_(n), space_(std::move(space)), unital_(unital) {
  if (space_.ambient_dim() != n * n) {
    throw Error(ErrorCode::DimensionMismatch, "algebra space is not a subspace of K^{n^2}");
  }
  basis_ = matrices_of(space_, n_);
}

template <class S>
MatSubalgebra<S> MatSubalgebra<S>::from_basis(const FieldSpec& field, Index n,
                                              const std::vector<Matrix<S>>& basis) {
  SubspaceBuilder<S> b(n * n);
  for (const auto& m : basis) {
    if (m.rows() != n || m.cols() != n) {
      throw Error(ErrorCode::DimensionMismatch, "basis matrix is not " + std::to_string(n) + "x" +
                                                    std::to_string(n));
    }
    b.add(flatten<S>(m));
  }
  const Subspace<S> space = b.build();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (!space.contains(flatten<S>(basis[i] * basis[j]))) {
        throw Error(ErrorCode::ClosureViolation,
                    "product " + describe_cell(i, j) + " is not in the span of the basis");
      }
    }
  }
  const bool unital = n == 0 || space.contains(flatten<S>(identity<S>(field, n)));
  return MatSubalgebra(field, n, space, unital);
}

template <class S>
bool MatSubalgebra<S>::contains(const Matrix<S>& m) const {
  if (m.rows() != n_ || m.cols() != n_) return false;
  return space_.contains(flatten<S>(m));
}

template <class S>
IdealSpace<S>::IdealSpace(const MatSubalgebra<S>& parent, Subspace<S> space)
    : parent_(parent), space_(std::move(space)) {
  basis_ = matrices_of(space_, parent_.n());
}

template <class S>
MatSubalgebra<S> unital_closure(const FieldSpec& field, Index n, const std::vector<Matrix<S>>& generators) {
  SubspaceBuilder<S> b(n * n);
  std::vector<Matrix<S>> found;
  std::deque<Matrix<S>> pending;
  auto offer = [&](const Matrix<S>& m) {
    if (b.add(flatten<S>(m))) {
      found.push_back(m);
      pending.push_back(m);
    }
  };
  offer(identity<S>(field, n));
  for (const auto& g : generators) {
    if (g.rows() != n || g.cols() != n) throw Error(ErrorCode::DimensionMismatch, "generator has wrong size");
    offer(g);
  }
  // The products of a spanning set span the products of the space, so each
  // new element only needs pairing with everything found so far.
  while (!pending.empty()) {
    const Matrix<S> x = pending.front();
    pending.pop_front();
    const std::size_t count = found.size();
    for (std::size_t i = 0; i < count; ++i) {
      const Matrix<S> y = found[i];
      offer(x * y);
      offer(y * x);
    }
  }
  return MatSubalgebra<S>(field, n, b.build(), true);
}

template <class S>
Subspace<S> product_space(const Subspace<S>& a, const Subspace<S>& b, Index n) {
  if (a.ambient_dim() != n * n || b.ambient_dim() != n * n) {
    throw Error(ErrorCode::DimensionMismatch, "product of spaces of different sizes");
  }
  const auto am = matrices_of(a, n);
  const auto bm = matrices_of(b, n);
  SubspaceBuilder<S> out(n * n);
  for (const auto& x : am) {
    for (const auto& y : bm) {
      const Matrix<S> p = x * y;
      if (!is_zero(p)) out.add(flatten<S>(p));
    }
  }
  return out.build();
}

template <class S>
IdealSpace<S> two_sided_ideal(const MatSubalgebra<S>& parent, const std::vector<Matrix<S>>& seed) {
  const Index n = parent.n();
  SubspaceBuilder<S> b(n * n);
  std::deque<Matrix<S>> pending;
  auto offer = [&](const Matrix<S>& m) {
    if (b.add(flatten<S>(m))) pending.push_back(m);
  };
  for (const auto& s : seed) {
    if (!parent.contains(s)) throw Error(ErrorCode::NotInAlgebra, "ideal seed is not in the algebra");
    offer(s);
  }
  while (!pending.empty()) {
    const Matrix<S> x = pending.front();
    pending.pop_front();
    for (const auto& a : parent.basis()) {
      offer(a * x);
      offer(x * a);
    }
  }
  return IdealSpace<S>(parent, b.build());
}

template <class S>
IdealSpace<S> as_ideal(const MatSubalgebra<S>& parent, const Subspace<S>& space) {
  if (!parent.space().contains(space)) {
    throw Error(ErrorCode::NotAnIdeal, "subspace is not contained in the algebra");
  }
  const Index n = parent.n();
  for (const auto& x : matrices_of(space, n)) {
    for (const auto& a : parent.basis()) {
      if (!space.contains(flatten<S>(a * x)) || !space.contains(flatten<S>(x * a))) {
        throw Error(ErrorCode::NotAnIdeal, "subspace is not closed under multiplication by the algebra");
      }
    }
  }
  return IdealSpace<S>(parent, space);
}

template <class S>
IdealSpace<S> commutator_ideal(const MatSubalgebra<S>& a) {
  const auto& basis = a.basis();
  std::vector<Matrix<S>> seed;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      Matrix<S> c = commutator<S>(basis[i], basis[j]);
      if (!is_zero(c)) seed.push_back(std::move(c));
    }
  }
  return two_sided_ideal(a, seed);
}

template <class S>
std::vector<Subspace<S>> ideal_powers(const IdealSpace<S>& ideal, int count) {
  std::vector<Subspace<S>> out;
  if (count <= 0) return out;
  out.push_back(ideal.space());
  while (static_cast<int>(out.size()) < count) {
    out.push_back(product_space(out.back(), ideal.space(), ideal.n()));
  }
  return out;
}

template <class S>
std::optional<int> nilpotency_index(const IdealSpace<S>& ideal) {
  if (ideal.is_zero()) return 1;
  Subspace<S> power = ideal.space();
  // Powers of an ideal form a decreasing chain, so at most dim + 1 steps.
  for (int k = 1;; ++k) {
    Subspace<S> next = product_space(power, ideal.space(), ideal.n());
    if (next.is_zero()) return k + 1;
    if (next == power) return std::nullopt;
    power = std::move(next);
  }
}

template <class S>
IdealSpace<S> radical(const MatSubalgebra<S>& a) {
  if (!a.field().characteristic_exceeds(a.n())) {
    throw Error(ErrorCode::UnsupportedCharacteristic,
                "trace-form radical needs characteristic 0 or p > n; got " + a.field().describe() +
                    " with n = " + std::to_string(a.n()));
  }
  const auto& basis = a.basis();
  const Index d = a.dim();
  Matrix<S> gram(d, d);
  for (Index i = 0; i < d; ++i) {
    for (Index j = 0; j < d; ++j) gram(i, j) = trace<S>(basis[i] * basis[j]);
  }
  const Matrix<S> kernel = right_kernel<S>(gram);
  const Index n = a.n();
  SubspaceBuilder<S> b(n * n);
  for (Index r = 0; r < kernel.rows(); ++r) {
    RowVector<S> v = RowVector<S>::Zero(n * n);
    for (Index i = 0; i < d; ++i) {
      if (!is_zero(kernel(r, i))) v += kernel(r, i) * a.space().vector(i);
    }
    b.add(v);
  }
  return IdealSpace<S>(a, b.build());
}

template <class S>
MatSubalgebra<S> centralizer(const MatSubalgebra<S>& a) {
  const Index n = a.n();
  // Row for entry (i,j) of Xb - bX: coefficient of X_kl is d_ik b_lj - b_ik d_lj.
  SubspaceBuilder<S> equations(n * n);
  for (const auto& b : a.basis()) {
    for (Index i = 0; i < n; ++i) {
      for (Index j = 0; j < n; ++j) {
        RowVector<S> row = RowVector<S>::Zero(n * n);
        for (Index l = 0; l < n; ++l) row(i * n + l) += b(l, j);
        for (Index k = 0; k < n; ++k) row(k * n + j) -= b(i, k);
        if (!is_zero(row)) equations.add(row);
      }
    }
  }
  Subspace<S> eqs = equations.build();
  if (eqs.is_zero()) return full_matrix_algebra<S>(a.field(), n);
  return MatSubalgebra<S>(a.field(), n, solution_space(eqs), true);
}

template <class S>
MatSubalgebra<S> conjugate_algebra(const MatSubalgebra<S>& a, const Matrix<S>& x) {
  if (x.rows() != a.n() || x.cols() != a.n()) {
    throw Error(ErrorCode::DimensionMismatch, "conjugator has the wrong size");
  }
  const Matrix<S> xi = matrix_invert<S>(x);
  SubspaceBuilder<S> b(a.n() * a.n());
  for (const auto& m : a.basis()) b.add(flatten<S>(Matrix<S>(xi * m * x)));
  return MatSubalgebra<S>(a.field(), a.n(), b.build(), a.unital());
}

template <class S>
bool is_commutative(const MatSubalgebra<S>& a) {
  const auto& basis = a.basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (basis[i] * basis[j] != basis[j] * basis[i]) return false;
    }
  }
  return true;
}

template <class S>
Subspace<S> acting_image(const Subspace<S>& space, Index n) {
  return column_space<S>(matrices_of(space, n), n);
}

template <class S>
MatSubalgebra<S> full_matrix_algebra(const FieldSpec& field, Index n) {
  return MatSubalgebra<S>(field, n, Subspace<S>::whole(field, n * n), true);
}

#define DQ_INSTANTIATE_ALGEBRA(S)                                                               \
  template class MatSubalgebra<S>;                                                              \
  template class IdealSpace<S>;                                                                 \
  template std::vector<Matrix<S>> matrices_of<S>(const Subspace<S>&, Index);                    \
  template MatSubalgebra<S> unital_closure<S>(const FieldSpec&, Index, const std::vector<Matrix<S>>&); \
  template Subspace<S> product_space<S>(const Subspace<S>&, const Subspace<S>&, Index);         \
  template IdealSpace<S> two_sided_ideal<S>(const MatSubalgebra<S>&, const std::vector<Matrix<S>>&); \
  template IdealSpace<S> as_ideal<S>(const MatSubalgebra<S>&, const Subspace<S>&);              \
  template IdealSpace<S> commutator_ideal<S>(const MatSubalgebra<S>&);                          \
  template std::vector<Subspace<S>> ideal_powers<S>(const IdealSpace<S>&, int);                 \
  template std::optional<int> nilpotency_index<S>(const IdealSpace<S>&);                        \
  template IdealSpace<S> radical<S>(const MatSubalgebra<S>&);                                   \
  template MatSubalgebra<S> centralizer<S>(const MatSubalgebra<S>&);                            \
  template MatSubalgebra<S> conjugate_algebra<S>(const MatSubalgebra<S>&, const Matrix<S>&);    \
  template bool is_commutative<S>(const MatSubalgebra<S>&);                                     \
  template Subspace<S> acting_image<S>(const Subspace<S>&, Index);                              \
  template MatSubalgebra<S> full_matrix_algebra<S>(const FieldSpec&, Index);

DQ_INSTANTIATE_ALGEBRA(Rational)
DQ_INSTANTIATE_ALGEBRA(Fp)

}  // namespace dq
