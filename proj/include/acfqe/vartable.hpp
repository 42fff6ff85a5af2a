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

#ifndef ACFQE_VARTABLE_HPP
#define ACFQE_VARTABLE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace acfqe {

using VarId = std::uint32_t;

class VarTable;
using VarTablePtr = std::shared_ptr<const VarTable>;

/// Ordered, immutable list of named indeterminates. Each entry is either a
/// ring parameter (an element of the coefficient ring R) or a logical
/// variable available for quantification. The entry order is fixed at
/// creation and defines the monomial order.
///
/// Fresh quantifier variables are introduced by building an *extension*: a
/// new table whose entries start with the old ones. Values built over a
/// table stay valid over any extension of it, so the original is never
/// mutated.
class VarTable {
 public:
  enum class Kind { Parameter, Variable };

  struct Entry {
    std::string name;
    Kind kind;
  };

  static VarTablePtr create(std::vector<Entry> entries);

  /// New table = this table's entries followed by `extra`.
  VarTablePtr extended(std::vector<Entry> extra) const;

  std::size_t size() const { return entries_.size(); }
  const std::string& name(VarId id) const;
  Kind kind(VarId id) const;
  std::optional<VarId> find(std::string_view name) const;

  /// A name not present in this table: `base` itself if free, otherwise
  /// base_1, base_2, ... in order.
  std::string fresh_name(const std::string& base) const;

  std::vector<VarId> parameters() const;

  /// True when one table's entry list is a prefix of the other's; values over
  /// the shorter table are usable over the longer one.
  static bool prefix_compatible(const VarTablePtr& a, const VarTablePtr& b);
  /// Of two prefix-compatible tables, the one with more entries.
  static const VarTablePtr& longer(const VarTablePtr& a, const VarTablePtr& b);

  static bool valid_identifier(std::string_view name);

 private:
  explicit VarTable(std::vector<Entry> entries) : entries_(std::move(entries)) {}

  std::vector<Entry> entries_;
};

}  // namespace acfqe

#endif  // ACFQE_VARTABLE_HPP
