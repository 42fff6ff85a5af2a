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

#include "acfqe/chevalley.hpp"

#include <algorithm>
#include <sstream>

#include "acfqe/errors.hpp"
#include "acfqe/parser.hpp"

namespace acfqe {

Presentation::Presentation(BaseDomain base, VarTablePtr table, std::vector<VarId> params,
                           std::vector<VarId> gens, std::vector<Polynomial> rels)
    : base_(std::move(base)),
      table_(std::move(table)),
      params_(std::move(params)),
      gens_(std::move(gens)),
      rels_(std::move(rels)) {
  if (!table_) throw UsageError("Presentation requires a variable table");
  for (VarId v : params_) {
    if (table_->kind(v) != VarTable::Kind::Parameter) {
      throw UsageError("presentation parameter '" + table_->name(v) + "' not declared as one");
    }
  }
  for (VarId g : gens_) {
    if (table_->kind(g) != VarTable::Kind::Variable) {
      throw UsageError("presentation generator '" + table_->name(g) + "' clashes with a parameter");
    }
  }
  for (const auto& rel : rels_) {
    if (rel.base() != base_) throw UsageError("relation over a different base domain");
    for (VarId v : rel.variables()) {
      const bool declared = std::find(params_.begin(), params_.end(), v) != params_.end() ||
                            std::find(gens_.begin(), gens_.end(), v) != gens_.end();
      if (!declared) {
        throw UsageError("relation uses undeclared name '" + table_->name(v) + "'");
      }
    }
  }
}

namespace {

std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> out;
  std::string word;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      if (!word.empty()) out.push_back(std::exchange(word, {}));
    } else {
      word += c;
    }
  }
  if (!word.empty()) out.push_back(word);
  return out;
}

}  // namespace

Presentation Presentation::parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;

  bool base_seen = false, params_seen = false, gens_seen = false;
  BaseDomain base = BaseDomain::integers();
  std::vector<std::string> param_names, gen_names;
  std::vector<std::pair<int, std::string>> rel_texts;

  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::vector<std::string> words = split_words(line);
    if (words.empty()) continue;
    const std::string& directive = words.front();
    if (directive == "base") {
      if (base_seen) throw ParseError(lineno, 1, "duplicate base line");
      base_seen = true;
      if (words.size() == 2 && words[1] == "z") {
        base = BaseDomain::integers();
      } else if (words.size() == 2 && words[1] == "q") {
        base = BaseDomain::rationals();
      } else if (words.size() == 3 && words[1] == "fp") {
        try {
          base = BaseDomain::prime_field(std::stoull(words[2]));
        } catch (const UsageError& e) {
          throw ParseError(lineno, 1, e.what());
        } catch (const std::exception&) {
          throw ParseError(lineno, 1, "invalid prime '" + words[2] + "'");
        }
      } else {
        throw ParseError(lineno, 1, "expected 'base z', 'base q' or 'base fp <prime>'");
      }
    } else if (directive == "params") {
      if (params_seen) throw ParseError(lineno, 1, "duplicate params line");
      params_seen = true;
      param_names.assign(words.begin() + 1, words.end());
    } else if (directive == "gens") {
      if (gens_seen) throw ParseError(lineno, 1, "duplicate gens line");
      gens_seen = true;
      gen_names.assign(words.begin() + 1, words.end());
    } else if (directive == "rel") {
      std::string rest = line;
      rest.erase(0, rest.find("rel") + 3);
      rel_texts.emplace_back(lineno, rest);
    } else {
      throw ParseError(lineno, 1, "unknown directive '" + directive + "'");
    }
  }

  std::vector<VarTable::Entry> entries;
  for (const auto& n : param_names) entries.push_back({n, VarTable::Kind::Parameter});
  for (const auto& n : gen_names) entries.push_back({n, VarTable::Kind::Variable});
  VarTablePtr table;
  try {
    table = VarTable::create(std::move(entries));
  } catch (const UsageError& e) {
    throw ParseError(1, 1, e.what());
  }

  std::vector<VarId> params, gens;
  for (const auto& n : param_names) params.push_back(*table->find(n));
  for (const auto& n : gen_names) gens.push_back(*table->find(n));

  std::vector<Polynomial> rels;
  for (const auto& [rel_line, rel_text] : rel_texts) {
    try {
      rels.push_back(parse_polynomial(rel_text, table, base));
    } catch (const ParseError& e) {
      throw ParseError(rel_line, e.column(), e.what());
    }
  }
  return Presentation(base, std::move(table), std::move(params), std::move(gens), std::move(rels));
}

Formula image_formula(const Presentation& p) {
  std::vector<Formula> atoms;
  for (const auto& rel : p.rels()) atoms.push_back(Formula::atom(rel));
  Formula body = Formula::conjunction(std::move(atoms));
  for (std::size_t i = p.gens().size(); i-- > 0;) {
    body = Formula::exists(p.gens()[i], std::move(body), p.table());
  }
  return body;
}

ConstructibleSet::ConstructibleSet(CanonicalDNF dnf, std::vector<VarId> params)
    : dnf_(std::move(dnf)), params_(std::move(params)) {
  for (VarId v : dnf_.variables()) {
    if (std::find(params_.begin(), params_.end(), v) == params_.end()) {
      throw UsageError("constructible set mentions non-parameter '" + dnf_.table()->name(v) + "'");
    }
  }
}

ConstructibleSet chevalley_image(const Presentation& p, const QeLimits& limits) {
  QeResult result = eliminate_all(image_formula(p), p.base(), p.table(), limits);
  return ConstructibleSet(std::move(result.dnf), p.params());
}

namespace {

void require_same_ring(const ConstructibleSet& a, const ConstructibleSet& b) {
  if (a.dnf().base() != b.dnf().base() ||
      !VarTable::prefix_compatible(a.dnf().table(), b.dnf().table()) ||
      a.params() != b.params()) {
    throw UsageError("constructible sets over different parameter rings");
  }
}

}  // namespace

ConstructibleSet constructible_union(const ConstructibleSet& a, const ConstructibleSet& b) {
  require_same_ring(a, b);
  CanonicalDNF out(a.dnf().base(), a.dnf().table());
  for (const auto& piece : a.dnf().pieces()) out.add_piece(piece.open, piece.closed);
  for (const auto& piece : b.dnf().pieces()) out.add_piece(piece.open, piece.closed);
  return ConstructibleSet(std::move(out), a.params());
}

ConstructibleSet constructible_intersect(const ConstructibleSet& a, const ConstructibleSet& b) {
  require_same_ring(a, b);
  CanonicalDNF out(a.dnf().base(), a.dnf().table());
  for (const auto& pa : a.dnf().pieces()) {
    for (const auto& pb : b.dnf().pieces()) {
      std::vector<Polynomial> closed = pa.closed;
      closed.insert(closed.end(), pb.closed.begin(), pb.closed.end());
      out.add_piece(pa.open * pb.open, std::move(closed));
    }
  }
  return ConstructibleSet(std::move(out), a.params());
}

ConstructibleSet constructible_complement(const ConstructibleSet& a) {
  CanonicalDNF out = to_canonical_dnf(Formula::negation(a.to_formula()), a.dnf().base(),
                                      a.dnf().table());
  return ConstructibleSet(std::move(out), a.params());
}

}  // namespace acfqe
