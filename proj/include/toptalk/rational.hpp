// Copyright 2026 The TopTalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

namespace toptalk {

// Canonical (reduced, positive denominator) arbitrary-precision rational.
// Expression templates are off so the type behaves as a plain value inside
// Eigen expressions.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                              boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalVector = Vector<Rational>;
using RationalMatrix = Matrix<Rational>;

/// Parses "a", "a/b" or a finite decimal such as "-1.25" or "2.5e-1" into an
/// exact rational. Binary floating point is never involved. Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" form; the denominator is always written, so zero is
/// "0/1" and two is "2/1".
std::string to_string(const Rational& value);

double to_double(const Rational& value);

/// C(n, k), zero when k < 0, n < 0 or k > n.
Integer binomial(int n, int k);

inline Rational make_rational(long num, long den = 1) { return Rational(num, den); }

}  // namespace toptalk
