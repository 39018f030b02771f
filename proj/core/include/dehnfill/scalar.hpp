#pragma once

#include <concepts>
#include <string>
#include <variant>

#include "dehnfill/rational_function.hpp"
#include "dehnfill/tower.hpp"

namespace dehnfill {

template <class K>
concept FieldScalar = requires(K x, K y) {
  K(0);
  K(1);
  { x + y } -> std::convertible_to<K>;
  { x - y } -> std::convertible_to<K>;
  { x * y } -> std::convertible_to<K>;
  { x / y } -> std::convertible_to<K>;
  { -x } -> std::convertible_to<K>;
  { x == y } -> std::convertible_to<bool>;
};

/// Field with a decidable total order compatible with the reals.
template <class K>
concept OrderedScalar = FieldScalar<K> && requires(K x) {
  { sign(x) } -> std::convertible_to<int>;
};

/// The one number kind flowing through the whole library: a point value
/// (rational or tower) or a function of t.
using ExactScalar = std::variant<Rational, Tower, RationalFunction>;

enum class ScalarDomain { Rational, Tower, FunctionOfT };

std::string to_string(ScalarDomain d);
ScalarDomain parse_scalar_domain(const std::string& tag);

std::string serialize(const ExactScalar& x);
ExactScalar parse_scalar(const std::string& text, ScalarDomain domain);

inline std::string serialize_scalar(const Rational& x) { return to_string(x); }
inline std::string serialize_scalar(const Tower& x) { return serialize(x); }
inline std::string serialize_scalar(const RationalFunction& x) {
  return serialize(x);
}

template <class K>
struct scalar_domain_of;
template <>
struct scalar_domain_of<Rational> {
  static constexpr ScalarDomain value = ScalarDomain::Rational;
};
template <>
struct scalar_domain_of<Tower> {
  static constexpr ScalarDomain value = ScalarDomain::Tower;
};
template <>
struct scalar_domain_of<RationalFunction> {
  static constexpr ScalarDomain value = ScalarDomain::FunctionOfT;
};

}  // namespace dehnfill
