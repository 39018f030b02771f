#include <fstream>
#include <sstream>

#include "dehnfill/cartan.hpp"

namespace dehnfill {

std::string to_string(CartanType t) {
  switch (t) {
    case CartanType::Positive: return "positive";
    case CartanType::Zero: return "zero";
    case CartanType::Negative: return "negative";
  }
  throw DomainError("unknown Cartan type");
}

namespace {

template <FieldScalar K>
CartanMatrix<K> read_entries(std::istream& in, int n, ScalarDomain domain,
                             std::vector<std::string> labels) {
  Mat<K> m(n, n);
  for (int i = 0; i < n; ++i) {
    std::string line;
    if (!std::getline(in, line))
      throw ParseError("matrix row " + std::to_string(i + 1) + ": missing");
    std::istringstream row(line);
    std::string tok;
    for (int j = 0; j < n; ++j) {
      if (!(row >> tok))
        throw ParseError("matrix row " + std::to_string(i + 1) + ", entry " +
                         std::to_string(j + 1) + ": missing");
      try {
        m(i, j) = std::get<K>(parse_scalar(tok, domain));
      } catch (const ParseError& e) {
        throw ParseError("matrix row " + std::to_string(i + 1) + ", entry " +
                         std::to_string(j + 1) + ": " + e.what());
      }
    }
    std::string extra;
    if (row >> extra)
      throw ParseError("matrix row " + std::to_string(i + 1) +
                       ": trailing junk '" + extra + "'");
  }
  return CartanMatrix<K>(std::move(m), std::move(labels));
}

}  // namespace

CartanDocument read_cartan_document(std::istream& in) {
  std::string line, word;
  int n = 0;
  if (!std::getline(in, line)) throw ParseError("line 1: empty document");
  {
    std::istringstream h(line);
    if (!(h >> word >> n) || word != "cartan" || n <= 0)
      throw ParseError("line 1: expected 'cartan <N>'");
  }
  if (!std::getline(in, line)) throw ParseError("line 2: missing domain");
  ScalarDomain domain;
  {
    std::istringstream h(line);
    std::string tag;
    if (!(h >> word >> tag) || word != "domain")
      throw ParseError("line 2: expected 'domain <tag>'");
    domain = parse_scalar_domain(tag);
  }
  std::vector<std::string> labels;
  std::streampos mark = in.tellg();
  if (std::getline(in, line)) {
    std::istringstream h(line);
    if ((h >> word) && word == "labels") {
      std::string name;
      while (h >> name) labels.push_back(name);
      if (static_cast<int>(labels.size()) != n)
        throw ParseError("labels line: expected " + std::to_string(n) +
                         " names");
    } else {
      in.seekg(mark);
    }
  }
  switch (domain) {
    case ScalarDomain::Rational:
      return CartanDocument{domain,
                            read_entries<Rational>(in, n, domain, labels)};
    case ScalarDomain::Tower:
      return CartanDocument{domain, read_entries<Tower>(in, n, domain, labels)};
    case ScalarDomain::FunctionOfT:
      return CartanDocument{
          domain, read_entries<RationalFunction>(in, n, domain, labels)};
  }
  throw ParseError("unreachable domain");
}

CartanDocument read_cartan_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_cartan_document(in);
}

void write_cartan_document(std::ostream& out, const CartanDocument& doc) {
  std::visit(
      [&](const auto& m) {
        out << "cartan " << m.size() << "\n";
        out << "domain " << to_string(doc.domain) << "\n";
        if (!m.labels.empty()) {
          out << "labels";
          for (const auto& l : m.labels) out << " " << l;
          out << "\n";
        }
        for (int i = 0; i < m.size(); ++i) {
          for (int j = 0; j < m.size(); ++j) {
            if (j) out << " ";
            out << serialize_scalar(m.entries(i, j));
          }
          out << "\n";
        }
      },
      doc.matrix);
}

}  // namespace dehnfill
