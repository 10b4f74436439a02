#include <random>
#include <stdexcept>

#include "dqalg/classification.hpp"

namespace dq {

namespace {

// Polynomials are coefficient vectors, lowest degree first.
template <class S>
using Poly = std::vector<S>;

template <class S>
void trim(Poly<S>& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

/// Monic characteristic polynomial by the Faddeev-LeVerrier recursion; needs
/// division by 1..n, so the characteristic must exceed n.
template <class S>
Poly<S> characteristic_polynomial(const FieldSpec& field, const Matrix<S>& x) {
  const Index n = x.rows();
  Poly<S> c(n + 1, make_scalar<S>(field, 0));
  c[n] = make_scalar<S>(field, 1);
  const Matrix<S> id = identity<S>(field, n);
  Matrix<S> m = Matrix<S>::Zero(n, n);
  for (Index k = 1; k <= n; ++k) {
    m = Matrix<S>(x * m) + c[n - k + 1] * id;
    c[n - k] = -trace<S>(Matrix<S>(x * m)) / make_scalar<S>(field, k);
  }
  return c;
}

template <class S>
std::pair<Poly<S>, Poly<S>> divide(Poly<S> num, const Poly<S>& den) {
  Poly<S> quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, S(0));
  const S lead = inverse(den.back());
  for (std::size_t i = quot.size(); i-- > 0;) {
    const S f = num[i + den.size() - 1] * lead;
    quot[i] = f;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= f * den[j];
  }
  num.resize(den.size() - 1);
  trim(num);
  return {quot, num};
}

template <class S>
Poly<S> gcd(Poly<S> a, Poly<S> b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    auto r = divide(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  const S lead = inverse(a.back());
  for (auto& c : a) c *= lead;
  return a;
}

template <class S>
Poly<S> derivative(const Poly<S>& p, const FieldSpec& field) {
  Poly<S> d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(make_scalar<S>(field, static_cast<long long>(i)) * p[i]);
  trim(d);
  return d;
}

/// Monic polynomial with the same roots, each simple.
template <class S>
Poly<S> squarefree_part(const Poly<S>& p, const FieldSpec& field) {
  const Poly<S> g = gcd(p, derivative(p, field));
  Poly<S> q = divide(p, g).first;
  const S lead = inverse(q.back());
  for (auto& c : q) c *= lead;
  return q;
}

template <class S>
S evaluate(const Poly<S>& p, const S& x) {
  S acc(0);
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

constexpr std::uint64_t kRootSearchLimit = std::uint64_t{1} << 20;

/// Roots of a squarefree monic polynomial that splits over GF(p).
std::vector<Fp> split_roots(const Poly<Fp>& p, const FieldSpec& field) {
  if (field.p > kRootSearchLimit) {
    throw Error(ErrorCode::UnsupportedCharacteristic,
                "canonical conjugators over GF(p) need p <= 2^20 for root search, got " + field.describe());
  }
  std::vector<Fp> roots;
  for (std::uint64_t v = 0; v < field.p && roots.size() + 1 < p.size(); ++v) {
    const Fp x = Fp::bound(static_cast<std::int64_t>(v), field.p);
    if (is_zero(evaluate(p, x))) roots.push_back(x);
  }
  return roots;
}

Integer integer_value(const Poly<Integer>& p, const Integer& x) {
  Integer acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

/// Roots of a squarefree monic rational polynomial that splits over Q.
std::vector<Rational> split_roots(const Poly<Rational>& p, const FieldSpec&) {
  std::vector<Rational> roots;
  Poly<Rational> rest = p;
  while (rest.size() > 3) {
    // Odd degree here, so the scaled integer polynomial changes sign on
    // [-B, B] and bisection over the integers lands exactly on a root.
    const std::size_t d = rest.size() - 1;
    Integer scale = 1;
    for (const auto& c : rest) scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(c));
    // h(y) = scale^d f(y / scale) is monic with integer coefficients and integer roots.
    Poly<Integer> h(d + 1);
    Integer power = 1;
    for (std::size_t i = d + 1; i-- > 0;) {
      const Rational v = rest[i] * Rational(power);
      h[i] = boost::multiprecision::numerator(v);
      power *= scale;
    }
    Integer bound = 1;
    for (const auto& c : h) bound = std::max(bound, Integer(abs(c)));
    bound += 1;
    Integer lo = -bound, hi = bound;
    std::optional<Integer> root;
    if (integer_value(h, lo) == 0) root = lo;
    while (!root && hi - lo > 1) {
      const Integer mid = (lo + hi) / 2;
      const Integer v = integer_value(h, mid);
      if (v == 0) root = mid;
      else if (v < 0) lo = mid;
      else hi = mid;
    }
    if (!root) throw Error(ErrorCode::NotCanonical, "characteristic polynomial does not split over Q");
    const Rational r(*root, scale);
    roots.push_back(r);
    rest = divide(rest, Poly<Rational>{-r, Rational(1)}).first;
    if (rest.size() % 2 == 1) break;
  }
  if (rest.size() == 2) {
    roots.push_back(-rest[0]);
  } else if (rest.size() == 3) {
    // y^2 + b y + c with rational square discriminant.
    const Rational disc = rest[1] * rest[1] - 4 * rest[0];
    const Integer num = boost::multiprecision::numerator(disc);
    const Integer den = boost::multiprecision::denominator(disc);
    if (num < 0) throw Error(ErrorCode::NotCanonical, "characteristic polynomial does not split over Q");
    const Integer sn = boost::multiprecision::sqrt(num);
    const Integer sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) {
      throw Error(ErrorCode::NotCanonical, "characteristic polynomial does not split over Q");
    }
    const Rational s(sn, sd);
    roots.push_back((-rest[1] + s) / 2);
    roots.push_back((-rest[1] - s) / 2);
  }
  return roots;
}

struct BlockShape {
  Index t = 0;   // dim a - dim J
  Index d2 = 0;  // dim J^2
  Index v = 0;   // dim J V
};

template <class S>
BlockShape block_shape(const MatSubalgebra<S>& a, const IdealSpace<S>& j) {
  return {a.dim() - j.dim(), product_space(j, j).dim(), acting_image(j.space(), a.n()).dim()};
}

std::optional<int> identify(Index n, const BlockShape& s) {
  const Index l = n / 2;
  if (n == 1) return 1;
  if (n == 2) return s.t == 1 ? 1 : 2;
  if (n == 3) {
    if (s.t == 3) return 5;
    if (s.t == 2) return 4;
    if (s.t == 1 && s.d2 == 1) return 3;
    if (s.t == 1 && s.d2 == 0 && s.v == 1) return 1;
    if (s.t == 1 && s.d2 == 0 && s.v == 2) return 2;
    return std::nullopt;
  }
  if (s.t != 1 || s.d2 != 0) return std::nullopt;
  if (s.v == l) return 1;
  if (n % 2 == 1 && s.v == l + 1) return 2;
  return std::nullopt;
}

template <class S>
RowVector<S> standard_vector(const FieldSpec& field, Index n, Index i) {
  return unit<S>(field, 1, n, 0, i);
}

/// Columns: the given vectors, then standard vectors completing a basis.
template <class S>
Matrix<S> complete_basis(const FieldSpec& field, Index n, const std::vector<RowVector<S>>& start) {
  SubspaceBuilder<S> b(n);
  std::vector<RowVector<S>> cols;
  for (const auto& v : start)
    if (b.add(v)) cols.push_back(v);
  for (Index i = 0; i < n && b.dim() < n; ++i) {
    const auto e = standard_vector<S>(field, n, i);
    if (b.add(e)) cols.push_back(e);
  }
  Matrix<S> x(n, n);
  for (Index j = 0; j < n; ++j) x.col(j) = cols[j].transpose();
  return x;
}

template <class S>
RowVector<S> apply(const Matrix<S>& m, const RowVector<S>& v) {
  return (m * v.transpose()).transpose();
}

/// Generalized eigenspaces of an element of `a` with exactly t distinct
/// eigenvalues; an element is drawn from a fixed pseudo-random sequence.
template <class S>
std::vector<Subspace<S>> eigenspace_split(const MatSubalgebra<S>& a, Index t) {
  const FieldSpec& field = a.field();
  const Index n = a.n();
  std::mt19937 gen(20240611u);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int attempt = 0; attempt < 256; ++attempt) {
    Matrix<S> x = Matrix<S>::Zero(n, n);
    for (const auto& b : a.basis()) x += make_scalar<S>(field, coeff(gen)) * b;
    const Poly<S> g = squarefree_part(characteristic_polynomial(field, x), field);
    if (static_cast<Index>(g.size()) - 1 != t) continue;
    std::vector<Subspace<S>> spaces;
    Index total = 0;
    for (const S& lambda : split_roots(g, field)) {
      Matrix<S> shifted = x - lambda * identity<S>(field, n);
      Matrix<S> power = identity<S>(field, n);
      for (Index i = 0; i < n; ++i) power = power * shifted;
      spaces.push_back(Subspace<S>::span(n, right_kernel<S>(power)));
      total += spaces.back().dim();
    }
    if (total == n && static_cast<Index>(spaces.size()) == t) return spaces;
  }
  throw Error(ErrorCode::NotCanonical, "no element separating the simple components was found");
}

}  // namespace

template <class S>
CanonicalBlockId recognize_block(const MatSubalgebra<S>& a) {
  if (!is_commutative(a)) throw Error(ErrorCode::NotCanonical, "block is not commutative");
  if (a.dim() != schur_bound(a.n())) {
    throw Error(ErrorCode::NotCanonical, "block dimension " + std::to_string(a.dim()) +
                                             " is not the maximum " + std::to_string(schur_bound(a.n())));
  }
  const auto shape = block_shape(a, radical(a));
  const auto k = identify(a.n(), shape);
  if (!k) throw Error(ErrorCode::NotCanonical, "invariants match no canonical commutative algebra");
  return {static_cast<int>(a.n()), *k};
}

template <class S>
BlockConjugation<S> canonical_block_conjugator(const MatSubalgebra<S>& a) {
  const CanonicalBlockId id = recognize_block(a);
  const FieldSpec& field = a.field();
  const Index n = a.n();
  const IdealSpace<S> j = radical(a);
  const BlockShape shape = block_shape(a, j);
  Matrix<S> p;
  if (n == 1) {
    p = identity<S>(field, 1);
  } else if (shape.t == 1 && shape.d2 == 0) {
    // J V first: J kills J V and maps everything into it.
    const Subspace<S> image = acting_image(j.space(), n);
    std::vector<RowVector<S>> start;
    for (Index i = 0; i < image.dim(); ++i) start.push_back(image.vector(i));
    p = complete_basis<S>(field, n, start);
  } else if (shape.t == 1) {
    // Cyclic basis (j^2 w, j w, w) turns j into e12 + e23.
    Matrix<S> gen = Matrix<S>::Zero(n, n);
    for (const auto& b : j.basis()) {
      if (!is_zero(Matrix<S>(b * b))) {
        gen = b;
        break;
      }
    }
    if (is_zero(gen)) for (const auto& b : j.basis()) gen += b;
    const Matrix<S> sq = gen * gen;
    Index w = 0;
    while (w < n && is_zero(sq.col(w))) ++w;
    if (w == n) throw Error(ErrorCode::NotCanonical, "radical has no element with nonzero square");
    const RowVector<S> e = standard_vector<S>(field, n, w);
    p = complete_basis<S>(field, n, {apply<S>(sq, e), apply<S>(gen, e), e});
  } else {
    auto spaces = eigenspace_split(a, shape.t);
    std::stable_sort(spaces.begin(), spaces.end(),
                     [](const Subspace<S>& x, const Subspace<S>& y) { return x.dim() > y.dim(); });
    std::vector<RowVector<S>> start;
    for (const auto& s : spaces) {
      if (s.dim() == 2) {
        // Local 2-dimensional piece: basis (N w, w) with N spanning J.
        const Matrix<S>& nil = j.basis().front();
        RowVector<S> w = s.vector(0);
        if (is_zero(apply<S>(nil, w))) w = s.vector(1);
        start.push_back(apply<S>(nil, w));
        start.push_back(w);
      } else {
        for (Index i = 0; i < s.dim(); ++i) start.push_back(s.vector(i));
      }
    }
    p = complete_basis<S>(field, n, start);
  }
  if (conjugate_algebra(a, p) != canonical_commutative<S>(field, id)) {
    throw Error(ErrorCode::NotCanonical, "block is not conjugate to its recognized canonical form");
  }
  return {id, p};
}

template <class S>
IsoInvariantVector iso_invariants(const MatSubalgebra<S>& a) {
  IsoInvariantVector out;
  const IdealSpace<S> j = radical(a);
  const IdealSpace<S> c = commutator_ideal(a);
  const auto q = nilpotency_index(c);
  const bool commutative = c.is_zero();
  out.aux_dims.radical = j.dim();
  out.aux_dims.commutator = c.dim();
  out.aux_dims.radical_times_commutator = product_space(j, c).dim();
  out.aux_dims.commutator_times_radical = product_space(c, j).dim();
  if (q) {
    const Subspace<S> top = commutative ? a.space() : ideal_powers(c, *q - 1).back();
    out.aux_dims.top_power_times_radical = product_space(top, j.space(), a.n()).dim();
  }
  out.block_type = detect_type(a);
  if (!out.block_type) return out;
  try {
    if (commutative) {
      if (a.dim() == schur_bound(a.n())) out.block_ids = std::vector{recognize_block(a)};
    } else {
      const auto mx = is_maximal_dq(a);
      if (mx.maximal && mx.block_ids_checked) {
        std::vector<CanonicalBlockId> ids;
        const BlockType& type = mx.witness->block_type;
        for (int i = 0; i < type.q(); ++i) {
          ids.push_back(recognize_block(diagonal_block_algebra(mx.witness->conjugated, type, i)));
        }
        out.block_ids = ids;
      }
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotCanonical) throw;
  }
  return out;
}

namespace {

template <class S>
struct MaxDimStructure {
  BlockType type;
  std::vector<CanonicalBlockId> ids;
  /// Y with Y^{-1} a Y = block_type_algebra(type, canonical blocks).
  Matrix<S> to_canonical;
};

template <class S>
MaxDimStructure<S> max_dim_structure(const MatSubalgebra<S>& a, const char* label) {
  const auto q = min_dq(a);
  if (!q || *q < 2) {
    throw Error(ErrorCode::NotBlockTypeMaxDim, std::string(label) + " is not a D_q algebra with q >= 2");
  }
  const auto mx = is_maximal_dq(a);
  if (!mx.maximal || !mx.block_ids_checked) {
    throw Error(ErrorCode::NotBlockTypeMaxDim,
                std::string(label) + " is not a maximal block-type algebra with maximum-dimension blocks");
  }
  MaxDimStructure<S> out;
  out.type = mx.witness->block_type;
  std::vector<Matrix<S>> per_block;
  for (int i = 0; i < out.type.q(); ++i) {
    auto bc = canonical_block_conjugator(diagonal_block_algebra(mx.witness->conjugated, out.type, i));
    out.ids.push_back(bc.id);
    per_block.push_back(bc.conjugator);
  }
  out.to_canonical = mx.witness->conjugator * build_block_conjugator<S>(out.type, per_block);
  return out;
}

}  // namespace

template <class S>
IsomorphismVerdict<S> is_isomorphic_maxdim(const MatSubalgebra<S>& a, const MatSubalgebra<S>& b) {
  if (a.field() != b.field()) throw Error(ErrorCode::InvalidInput, "algebras are over different fields");
  const auto sa = max_dim_structure(a, "first algebra");
  const auto sb = max_dim_structure(b, "second algebra");
  IsomorphismVerdict<S> out;
  if (a.n() != b.n() || sa.type != sb.type || sa.ids != sb.ids) return out;
  const Matrix<S> x = sa.to_canonical * matrix_invert<S>(sb.to_canonical);
  if (conjugate_algebra(a, x) != b) {
    throw std::logic_error("assembled conjugator does not map the first algebra onto the second");
  }
  out.isomorphic = true;
  out.certificate = x;
  return out;
}

template <class S>
AnalysisReport<S> analyze(const MatSubalgebra<S>& a) {
  AnalysisReport<S> out;
  out.n = a.n();
  out.dim = a.dim();
  out.commutative = is_commutative(a);
  out.min_q = min_dq(a);
  if (out.min_q) {
    out.type = detect_type(a);
    out.type_source = "commutator-filtration";
    const auto mx = is_maximal_dq(a);
    out.maximal = mx.maximal;
    out.type_canonical = mx.maximal;
    if (mx.witness) out.conjugator = mx.witness->conjugator;
  } else if (a.field().characteristic_exceeds(a.n())) {
    const IdealSpace<S> j = radical(a);
    if (!j.is_zero()) {
      const auto tri = block_triangulate(a, j);
      out.type = tri.block_type;
      out.type_source = "radical-filtration";
      out.conjugator = tri.conjugator;
    }
  }
  if (a.field().characteristic_exceeds(a.n())) {
    const auto inv = iso_invariants(a);
    out.invariants = inv.aux_dims;
    out.block_ids = inv.block_ids;
  }
  return out;
}

#define DQ_INSTANTIATE_RECOGNITION(S)                                                              \
  template CanonicalBlockId recognize_block<S>(const MatSubalgebra<S>&);                           \
  template BlockConjugation<S> canonical_block_conjugator<S>(const MatSubalgebra<S>&);             \
  template IsoInvariantVector iso_invariants<S>(const MatSubalgebra<S>&);                          \
  template IsomorphismVerdict<S> is_isomorphic_maxdim<S>(const MatSubalgebra<S>&, const MatSubalgebra<S>&); \
  template AnalysisReport<S> analyze<S>(const MatSubalgebra<S>&);

DQ_INSTANTIATE_RECOGNITION(Rational)
DQ_INSTANTIATE_RECOGNITION(Fp)

}  // namespace dq
