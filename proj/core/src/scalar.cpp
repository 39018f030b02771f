#include "dehnfill/scalar.hpp"

namespace dehnfill {

std::string to_string(ScalarDomain d) {
  switch (d) {
    case ScalarDomain::Rational: return "rational";
    case ScalarDomain::Tower: return "tower";
    case ScalarDomain::FunctionOfT: return "function-of-t";
  }
  throw DomainError("unknown scalar domain");
}

ScalarDomain parse_scalar_domain(const std::string& tag) {
  if (tag == "rational") return ScalarDomain::Rational;
  if (tag == "tower") return ScalarDomain::Tower;
  if (tag == "function-of-t") return ScalarDomain::FunctionOfT;
  throw ParseError("unknown domain tag '" + tag + "'");
}

std::string serialize(const ExactScalar& x) {
  return std::visit([](const auto& v) { return serialize_scalar(v); }, x);
}

ExactScalar parse_scalar(const std::string& text, ScalarDomain domain) {
  switch (domain) {
    case ScalarDomain::Rational: return parse_rational(text);
    case ScalarDomain::Tower: return parse_tower(text);
    case ScalarDomain::FunctionOfT: return parse_rational_function(text);
  }
  throw ParseError("unknown domain");
}

}  // namespace dehnfill
