#ifndef CHERN_SPACE_FILE_HPP
#define CHERN_SPACE_FILE_HPP

#include <string>
#include <string_view>

#include "chern/spaces.hpp"

namespace chern {

// Space-definition files are line-oriented `key = value` text; '#' starts a
// comment. Repeatable keys: generator, relation, integral. Keys:
//   name          = quintic_threefold
//   dim           = 3
//   ambient_dim   = 4                  (optional)
//   generator     = h : 1              (name : degree)
//   relation      = h^4                (monomial that is zero)
//   integral      = h^3 : 5            (top monomial : rational)
//   tangent_chern = (1+h)^5 * (1+5*h)^(-1)
//   polarization  = h
//   very_ample    = true               (optional flags, default false)
//   tangent_nef   = false
//   canonical_ample_gg = false
//   note          = free text          (optional)
// Errors carry line/column positions; schema violations name the key.

PolarizedSpace parse_space_text(std::string_view text, const std::string& origin);
PolarizedSpace load_space_file(const std::string& path);

}  // namespace chern

#endif
