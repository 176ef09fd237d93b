#pragma once

// Text syntax for group descriptors:
//
//   group := term ("x" term)*
//   term  := Ab(p;e,...) | ES(p;m;expP|expP2|D8|Q8)
//          | GES(p;m;split|central;rank[;variant]) | Zp(p,e)
//
// Whitespace is ignored.

#include <string>
#include <string_view>

#include "nilmult/pgroups.hpp"

namespace nilmult {

/// Throws ParseError carrying the byte offset of the offending token.
GroupDescriptor parse_descriptor(std::string_view text);

/// Canonical text; parse_descriptor(format_descriptor(g)) == g.
std::string format_descriptor(const GroupDescriptor& g);

std::string variant_name(EsVariant v);

}  // namespace nilmult
