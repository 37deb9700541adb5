#pragma once

// Number expressions: products of rationals, surds, roots of unity and polynomial roots.
//
//   expr    := term ('*' term)*
//   term    := atom ['^' power]
//   atom    := rational | 'zeta(' m ',' j ')' | 'root(' poly ',' k ')' | '(' expr ')'
//   power   := integer | '(' rational ')'      -- a fractional power needs a rational base
//
// root(poly, k) is the k-th root (0-based) of poly in the order of isolate_roots.

#include "mahler/algnum/surd.hpp"

#include <string>
#include <vector>

namespace mahler {

struct NumberExpr {
    std::vector<SurdExpr> surds;
    std::vector<AlgebraicNumber> others;

    bool is_surd_product() const { return others.empty(); }
    AlgebraicNumber value() const;
};

// Throws ParseError on malformed input.
NumberExpr parse_number(const std::string& text);

} // namespace mahler
