// Exact scalar types shared by every module, plus the Eigen aliases built on them.
#ifndef FRACINT_NUMERIC_HPP
#define FRACINT_NUMERIC_HPP

#include <Eigen/Core>
#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <type_traits>

// Boost 1.74 probes every operand for a `const_iterator` to detect byte
// containers. Eigen 3.4 expressions expose one that is `void`, which turns a
// harmless SFINAE probe into a hard error. No Eigen type is a byte container.
namespace boost::multiprecision::detail {
template <class C>
  requires requires { typename C::StorageKind; }  // every Eigen expression and base class
struct is_byte_container<C> : std::false_type {};
}  // namespace boost::multiprecision::detail

#include <boost/multiprecision/eigen.hpp>

namespace fracint {

namespace mp = boost::multiprecision;

using BigInt = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rational = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalMatrix = MatrixX<Rational>;
using BigIntMatrix = MatrixX<BigInt>;

/// Parses `p`, `-p` or `p/q` into an exact rational. Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

/// Renders `p` when the denominator is 1, `p/q` otherwise.
std::string to_string(const Rational& value);

inline std::string to_string(const BigInt& value) { return value.str(); }

}  // namespace fracint

#endif  // FRACINT_NUMERIC_HPP
