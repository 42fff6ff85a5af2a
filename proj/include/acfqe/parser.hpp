/*
   Copyright 2026 The acfqe authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef ACFQE_PARSER_HPP
#define ACFQE_PARSER_HPP

#include <string_view>

#include "acfqe/formula.hpp"

namespace acfqe {

struct ParsedFormula {
  Formula formula;
  /// The input table, extended with any quantified variables first seen here.
  VarTablePtr table;
};

/// Parse the formula grammar:
///
///   formula := 'exists' IDENT '.' formula | 'forall' IDENT '.' formula | disj
///   disj    := conj ('|' conj)*
///   conj    := neg ('&' neg)*
///   neg     := '!' neg | '(' formula ')' | atom
///   atom    := poly ('=' | '!=') poly
///   poly    := signed sums of products of INT, IDENT and IDENT^INT
///
/// Quantifier bodies extend maximally right; '!' binds tighter than '&',
/// which binds tighter than '|'. "s = t" is stored as the atom s - t = 0;
/// "!=" gives the negated atom. Identifiers must name table entries except
/// quantified variables, which are added as logical variables. ParseError
/// carries a 1-based line/column.
ParsedFormula parse_formula(std::string_view text, VarTablePtr table, const BaseDomain& base);

/// Parse a bare polynomial; every identifier must already be in the table.
Polynomial parse_polynomial(std::string_view text, const VarTablePtr& table,
                            const BaseDomain& base);

}  // namespace acfqe

#endif  // ACFQE_PARSER_HPP
