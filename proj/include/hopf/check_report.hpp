#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopf/linear_map.hpp"

namespace hopf {

// Counterexample attached to a failed check: the offending domain basis
// index (or pair of indices) and both evaluated sides as sparse columns.
struct Witness {
  std::vector<Index> indices;
  std::vector<std::pair<Index, std::string>> lhs;
  std::vector<std::pair<Index, std::string>> rhs;
};

struct CheckEntry {
  std::string name;
  bool pass = false;
  bool informational = false;  // recorded but excluded from the verdict
  std::string note;
  std::optional<Witness> witness;
};

struct CheckReport {
  std::vector<CheckEntry> entries;

  bool all_pass() const;
  void add(CheckEntry e) { entries.push_back(std::move(e)); }
  void append(CheckReport other);
  const CheckEntry* find(const std::string& name) const;
  // First non-informational failing entry, if any.
  const CheckEntry* first_failure() const;
  std::string text() const;
};

CheckEntry entry_bool(const std::string& name, bool pass, std::string note = {});
CheckEntry entry_info(const std::string& name, bool value, std::string note = {});

// Exact equality of two maps; on mismatch the witness records the first
// differing column in basis-index order.
CheckEntry compare_maps_entry(const std::string& name, const LinearMap& a, const LinearMap& b);

std::vector<std::pair<Index, std::string>> sparse_dump(const LinearMap& colvec);

}  // namespace hopf
