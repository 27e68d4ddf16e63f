#include "doctest.h"

#include <limits>

#include "cvec/linalg.hpp"
#include "cvec/rational.hpp"

using cvec::QMatrix;
using cvec::Rational;

TEST_CASE("rational arithmetic reduces") {
  Rational a(6, -4);
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK(a + Rational(3, 2) == Rational(0));
  CHECK(Rational(1, 3) * Rational(3) == Rational(1));
  CHECK(Rational(2, 3) / Rational(4, 9) == Rational(3, 2));
  CHECK(Rational(-1, 2) < Rational(1, 3));
  CHECK(Rational(7, 5).str() == "7/5");
  CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("rational overflow throws") {
  const auto big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(Rational(big) + Rational(1), cvec::OverflowError);
  CHECK_THROWS_AS(Rational(big) * Rational(2), cvec::OverflowError);
  CHECK(Rational(big) * Rational(1, 2) == Rational(big, 2));
}

TEST_CASE("kernel and rank of a small matrix") {
  QMatrix a(2, 3);
  a << 1, 2, 3, 2, 4, 6;
  CHECK(cvec::linalg::rank(a) == 1);
  const QMatrix k = cvec::linalg::kernel(a);
  CHECK(k.cols() == 2);
  CHECK(cvec::linalg::is_zero(QMatrix(a * k)));
}

TEST_CASE("cokernel projection kills the image and splits the lift") {
  QMatrix a(3, 1);
  a << 1, 1, 0;
  const auto c = cvec::linalg::cokernel(a);
  CHECK(c.dim() == 2);
  CHECK(cvec::linalg::is_zero(QMatrix(c.projection * a)));
  CHECK(QMatrix(c.projection * c.lift) == QMatrix::Identity(2, 2));
}

TEST_CASE("inverse and span coordinates") {
  QMatrix a(2, 2);
  a << 2, 1, 1, 1;
  const QMatrix inv = cvec::linalg::inverse(a);
  CHECK(QMatrix(a * inv) == QMatrix::Identity(2, 2));
  QMatrix basis(3, 1);
  basis << 1, 2, 3;
  cvec::linalg::SpanCoordinates<Rational> span(basis);
  QMatrix v(3, 1);
  v << 2, 4, 6;
  CHECK(span.contains(v));
  CHECK(span.coordinates(v)(0, 0) == Rational(2));
  v(2, 0) = 5;
  CHECK_FALSE(span.contains(v));
}
