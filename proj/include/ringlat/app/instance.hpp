#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ringlat/extension.hpp"

namespace ringlat::app {

/// Malformed instance text. `location` is "line L, column C" for syntax
/// errors and a JSON pointer for structural ones.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string location, const std::string& message)
      : std::runtime_error(location + ": " + message), location_(std::move(location)) {}
  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

struct FieldDoc {
  unsigned p = 2;
  unsigned e = 1;
  /// Monic, low degree first, over F_p.
  std::optional<std::vector<unsigned>> modulus;
};

struct AlgebraDoc {
  enum class Kind { PolyQuotient, Table, Product };
  Kind kind = Kind::PolyQuotient;
  /// poly_quotient: monic, low degree first.
  std::vector<unsigned> poly;
  /// table
  std::size_t dim = 0;
  std::vector<unsigned> mul;
  std::vector<unsigned> one;
  /// product
  std::vector<AlgebraDoc> factors;

  friend bool operator==(const AlgebraDoc&, const AlgebraDoc&) = default;
};

struct InstanceDocument {
  FieldDoc field;
  AlgebraDoc algebra;
  /// Absent: R is the prime subring.
  std::optional<std::vector<std::vector<unsigned>>> generators;

  friend bool operator==(const InstanceDocument& a, const InstanceDocument& b) {
    return a.field.p == b.field.p && a.field.e == b.field.e && a.field.modulus == b.field.modulus &&
           a.algebra == b.algebra && a.generators == b.generators;
  }
};

InstanceDocument parse_instance(const std::string& text);
std::string serialize_instance(const InstanceDocument& doc, bool pretty = true);

/// Throws AlgebraError when the described algebra or subring is invalid.
Extension build_extension(const InstanceDocument& doc);

/// Table-form document for an extension; generators are R's echelon basis.
InstanceDocument document_from_extension(const Extension& ext);

}  // namespace ringlat::app
