#ifndef ALGINT_CORE_ALGFILE_HPP
#define ALGINT_CORE_ALGFILE_HPP

#include <map>

#include "catalog.hpp"

namespace algint {

// Parsed form of the line-oriented algebra definition format:
//
//   # comment
//   algebra NAME
//   mode exact|approx
//   dim N
//   labels l0 l1 ...
//   identity LABEL            (or: identity coeffs c0 c1 ...)
//   entry li lj lk SCALAR
//
// or a group body:
//
//   group elements e g ...
//   group mul a b c           (x(a) x(b) = x(c), times the cocycle)
//   group cocycle a b SCALAR
//
// or a catalog body:
//
//   catalog FAMILY key=value ...
//
// Exactly one of {entries, group, catalog} may be present.
struct AlgebraFile {
  enum class Body { entries, group, catalog };

  std::string name;
  Mode mode = Mode::exact;
  Body body = Body::entries;

  // entries body
  int dim = 0;
  std::vector<std::string> labels;
  std::optional<std::string> identity_label;
  std::optional<std::vector<std::string>> identity_coeffs;
  struct EntryLine {
    std::string i, j, k, scalar;
    int line;
  };
  std::vector<EntryLine> entries;

  // group body
  std::vector<std::string> group_elements;
  struct MulLine {
    std::string a, b, c;
    int line;
  };
  std::vector<MulLine> group_mul;
  struct CocycleLine {
    std::string a, b, phase;
    int line;
  };
  std::vector<CocycleLine> group_cocycle;

  // catalog body
  std::string catalog_family;
  std::map<std::string, std::string> catalog_params;
};

// Structured value or errc::parse with a "line L, column C" diagnostic.
AlgebraFile parse_algebra_file(const std::string& text);

// Build the algebra a parsed file describes.
AlgebraPtr realize(const AlgebraFile& file);

AlgebraPtr load_algebra_text(const std::string& text);
AlgebraPtr load_algebra_path(const std::string& path);

// Serialize in the explicit-entries form; re-parsing reproduces the
// structure constants bit-exactly.
std::string emit_algebra(const Algebra& a);

} // namespace algint

#endif
