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

#include "acfqe/vartable.hpp"

#include <cctype>
#include <unordered_set>

#include "acfqe/errors.hpp"

namespace acfqe {

namespace {

void check_entries(const std::vector<VarTable::Entry>& entries) {
  std::unordered_set<std::string_view> seen;
  for (const auto& e : entries) {
    if (!VarTable::valid_identifier(e.name)) {
      throw UsageError("invalid identifier: '" + e.name + "'");
    }
    if (!seen.insert(e.name).second) {
      throw UsageError("duplicate name in variable table: '" + e.name + "'");
    }
  }
}

}  // namespace

VarTablePtr VarTable::create(std::vector<Entry> entries) {
  check_entries(entries);
  return VarTablePtr(new VarTable(std::move(entries)));
}

VarTablePtr VarTable::extended(std::vector<Entry> extra) const {
  std::vector<Entry> all = entries_;
  for (auto& e : extra) all.push_back(std::move(e));
  check_entries(all);
  return VarTablePtr(new VarTable(std::move(all)));
}

const std::string& VarTable::name(VarId id) const {
  if (id >= entries_.size()) throw UsageError("variable id out of range");
  return entries_[id].name;
}

VarTable::Kind VarTable::kind(VarId id) const {
  if (id >= entries_.size()) throw UsageError("variable id out of range");
  return entries_[id].kind;
}

std::optional<VarId> VarTable::find(std::string_view name) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].name == name) return static_cast<VarId>(i);
  }
  return std::nullopt;
}

std::string VarTable::fresh_name(const std::string& base) const {
  if (!find(base)) return base;
  for (unsigned n = 1;; ++n) {
    std::string candidate = base + "_" + std::to_string(n);
    if (!find(candidate)) return candidate;
  }
}

std::vector<VarId> VarTable::parameters() const {
  std::vector<VarId> out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].kind == Kind::Parameter) out.push_back(static_cast<VarId>(i));
  }
  return out;
}

bool VarTable::prefix_compatible(const VarTablePtr& a, const VarTablePtr& b) {
  if (!a || !b) return false;
  if (a == b) return true;
  const std::size_t n = std::min(a->size(), b->size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a->entries_[i].name != b->entries_[i].name ||
        a->entries_[i].kind != b->entries_[i].kind) {
      return false;
    }
  }
  return true;
}

const VarTablePtr& VarTable::longer(const VarTablePtr& a, const VarTablePtr& b) {
  return a->size() >= b->size() ? a : b;
}

bool VarTable::valid_identifier(std::string_view name) {
  if (name.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name.substr(1)) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return name != "exists" && name != "forall";
}

}  // namespace acfqe
