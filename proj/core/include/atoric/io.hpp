#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "atoric/base.hpp"
#include "atoric/ingredients.hpp"
#include "atoric/jet2.hpp"
#include "atoric/report.hpp"

namespace atoric::io {

inline constexpr const char* kFormatName = "atoric-ingredient";
inline constexpr int kFormatVersion = 1;

/// Malformed text. For JSON syntax errors line() and column() are 1-based
/// positions; for structural errors they are 0 and path() names the field.
class DocumentError : public std::runtime_error {
 public:
  DocumentError(const std::string& message, std::size_t line, std::size_t column, std::string path = {});

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& path() const { return path_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string path_;
};

/// Label data as written in a file, before the axioms are checked.
struct RawLabel {
  int m = 1;
  std::vector<Jet2> s;
  std::vector<Jet2> g;  // row-major m x m

  friend bool operator==(const RawLabel&, const RawLabel&) = default;
};

/// The parsed file: everything needed to build a CompleteIngredient.
struct IngredientDocument {
  int version = kFormatVersion;
  int order = kDefaultOrder;
  BaseDiagram base;
  std::vector<RawLabel> labels;
  std::vector<long> k;

  friend bool operator==(const IngredientDocument&, const IngredientDocument&) = default;
};

IngredientDocument parse_document(const std::string& text);
std::string serialize_document(const IngredientDocument& doc);

/// Full report: diagram checks, every label axiom, and compatibility.
ValidationReport validate_document(const IngredientDocument& doc);

/// Throws InvalidLabel / LabelShapeError if a label fails its axioms.
CompleteIngredient to_ingredient(const IngredientDocument& doc);
IngredientDocument to_document(const CompleteIngredient& ingredient);

CompleteIngredient parse_ingredient(const std::string& text);
std::string serialize_ingredient(const CompleteIngredient& ingredient);

/// Parses a polynomial such as "2tY+X^2-3XY+1/2*Y^3" into a jet. `t` marks
/// a factor of tau = 2*pi; `*` between factors is optional.
Jet2 parse_polynomial(const std::string& text, int order);

/// Deterministic SVG 1.1 drawing: polygon as one path, nodes as crosses
/// labelled c_i (m), cut rays dashed, the opposite half-eigenlines dotted.
std::string render_svg(const BaseDiagram& d);

}  // namespace atoric::io
