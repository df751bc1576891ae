#pragma once

#include <string>
#include <vector>

#include "fcpi/quotient.hpp"

namespace fcpi {

/// JSON document with fields `dimension`, `family` and `hyperplanes`
/// (records {normal, offset, kind, tag}). parse(serialize(x)) == x.
std::string serialize_arrangement(const Arrangement& arr);
Arrangement parse_arrangement(const std::string& text);

struct ChambersFile {
  int dimension = 0;
  std::vector<Face> chambers;

  bool operator==(const ChambersFile&) const = default;
};
std::string serialize_chambers(const ChambersFile& c);
ChambersFile parse_chambers(const std::string& text);

/// Cell tables plus attaching words as lists of signed 1-based Cell1 indices.
std::string serialize_complex(const Complex2& cx);
Complex2 parse_complex(const std::string& text);

/// Mirrors the complex serialization with the orbit tables added.
std::string serialize_quotient(const QuotientComplex2& q);
QuotientComplex2 parse_quotient(const std::string& text);

}  // namespace fcpi
