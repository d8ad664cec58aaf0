#include "oinv/isometry.hpp"

#include "oinv/errors.hpp"
#include "oinv/random.hpp"

namespace oinv {

namespace {

void require_square(const Signature& sig, const Matrix& m) {
  const auto n = static_cast<std::size_t>(sig.n());
  if (m.rows() != n || m.cols() != n)
    throw DimensionMismatch("matrix shape does not match the signature dimension");
}

}  // namespace

bool is_isometry(const Signature& sig, const Matrix& m) {
  require_square(sig, m);
  const Matrix g = sig.metric();
  return m.transpose() * g * m == g;
}

bool is_lie_algebra_element(const Signature& sig, const Matrix& m) {
  require_square(sig, m);
  const Matrix g = sig.metric();
  return (m.transpose() * g + g * m).is_zero();
}

Isometry::Isometry(Signature signature, Matrix matrix)
    : signature_(signature), matrix_(std::move(matrix)) {
  if (!is_isometry(signature_, matrix_))
    throw InvalidGroupElement("matrix does not preserve the metric");
}

Isometry Isometry::identity(Signature signature) {
  return Isometry(signature, Matrix::identity(static_cast<std::size_t>(signature.n())));
}

Isometry Isometry::operator*(const Isometry& other) const {
  if (!(signature_ == other.signature_))
    throw DimensionMismatch("isometries of different signatures");
  return Isometry(signature_, matrix_ * other.matrix_);
}

Isometry Isometry::inverse() const {
  // Q^-1 = G Q^T G.
  const Matrix g = signature_.metric();
  return Isometry(signature_, g * matrix_.transpose() * g);
}

LieAlgebraElement::LieAlgebraElement(Signature signature, Matrix matrix)
    : signature_(signature), matrix_(std::move(matrix)) {
  if (!is_lie_algebra_element(signature_, matrix_))
    throw InvalidGroupElement("matrix is not skew with respect to the metric");
}

std::vector<LieAlgebraElement> so_basis(const Signature& sig) {
  const auto n = static_cast<std::size_t>(sig.n());
  std::vector<LieAlgebraElement> basis;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      Matrix x(n, n);
      x(b, a) = 1;
      x(a, b) = -sig.sign(static_cast<int>(a) + 1) * sig.sign(static_cast<int>(b) + 1);
      basis.emplace_back(sig, std::move(x));
    }
  return basis;
}

Isometry cayley(const LieAlgebraElement& a) {
  const auto n = a.matrix().rows();
  const Matrix id = Matrix::identity(n);
  auto inv = inverse(id + a.matrix());
  if (!inv) throw SingularCayley("I + A is singular");
  return Isometry(a.signature(), (id - a.matrix()) * *inv);
}

std::vector<Isometry> component_representatives(const Signature& sig) {
  const auto n = static_cast<std::size_t>(sig.n());
  auto flip = [&](std::size_t axis) {
    Matrix d = Matrix::identity(n);
    d(axis, axis) = -1;
    return Isometry(sig, std::move(d));
  };
  std::vector<Isometry> reps{Isometry::identity(sig)};
  if (sig.definite()) {
    reps.push_back(flip(0));
  } else {
    const auto ds = flip(0);
    const auto dt = flip(static_cast<std::size_t>(sig.p()));
    reps.push_back(ds);
    reps.push_back(dt);
    reps.push_back(ds * dt);
  }
  return reps;
}

ComponentLabel component_of(const Isometry& q) {
  auto sign_of = [](const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); };
  ComponentLabel label;
  label.det_sign = sign_of(determinant(q.matrix()));
  const auto& sig = q.signature();
  if (!sig.definite()) {
    const auto p = static_cast<std::size_t>(sig.p());
    Matrix block(p, p);
    for (std::size_t r = 0; r < p; ++r)
      for (std::size_t c = 0; c < p; ++c) block(r, c) = q.matrix()(r, c);
    label.spacelike_sign = sign_of(determinant(block));
  }
  return label;
}

Isometry sample_isometry(const Signature& sig, std::uint64_t seed,
                         std::int64_t magnitude) {
  if (magnitude < 1) throw Error("sampling magnitude must be positive");
  SeededRng rng(seed);
  const auto reps = component_representatives(sig);
  const auto& rep =
      reps[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(reps.size()) - 1))];
  const auto basis = so_basis(sig);
  const auto n = static_cast<std::size_t>(sig.n());

  constexpr int kMaxDraws = 16;
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    Matrix a(n, n);
    for (const auto& element : basis) a = a + element.matrix() * rng.rational(magnitude);
    try {
      return rep * cayley(LieAlgebraElement(sig, std::move(a)));
    } catch (const SingularCayley&) {
    }
  }
  return rep;
}

}  // namespace oinv
