#ifndef CHERN_EXPRESSION_HPP
#define CHERN_EXPRESSION_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "chern/chern_polynomial.hpp"
#include "chern/cohomology.hpp"

namespace chern {

/// Parse failure with 1-based position data and the token class the parser
/// was expecting.
struct ParseError : std::runtime_error {
    ParseError(std::string message, int line, int column, std::string expected_tokens)
        : std::runtime_error(std::move(message)),
          line(line),
          column(column),
          expected(std::move(expected_tokens)) {}
    int line;
    int column;
    std::string expected;
};

// Expression grammar (documented in the README):
//   expr     := ['-'] term (('+'|'-') term)*
//   term     := factor (['*'] factor)*          -- juxtaposition multiplies
//   factor   := atom ['^' exponent]
//   exponent := INT | '(' ['-'] INT ')'
//   atom     := NUMBER ['/' NUMBER] | IDENT | '(' expr ')'
// Negative exponents expand the series inverse up to the truncation degree
// (the model dimension, resp. max_degree) and require an invertible scalar
// unit part.

/// Evaluates over a cohomology model; identifiers are its generators.
Element parse_model_expression(std::string_view text, const ModelPtr& model);

/// Evaluates over the abstract Chern ring; identifiers are c0..c<k>, with
/// c_i = 0 beyond the rank.
ChernPolynomial parse_chern_expression(std::string_view text, int rank, int max_degree);

}  // namespace chern

#endif
