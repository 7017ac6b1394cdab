#include "hopf/check_report.hpp"

#include <sstream>

namespace hopf {

bool CheckReport::all_pass() const {
  for (const auto& e : entries)
    if (!e.informational && !e.pass) return false;
  return true;
}

void CheckReport::append(CheckReport other) {
  for (auto& e : other.entries) entries.push_back(std::move(e));
}

const CheckEntry* CheckReport::find(const std::string& name) const {
  for (const auto& e : entries)
    if (e.name == name) return &e;
  return nullptr;
}

const CheckEntry* CheckReport::first_failure() const {
  for (const auto& e : entries)
    if (!e.informational && !e.pass) return &e;
  return nullptr;
}

std::string CheckReport::text() const {
  std::ostringstream os;
  for (const auto& e : entries) {
    if (e.informational)
      os << "[info] " << e.name << " = " << (e.pass ? "true" : "false");
    else
      os << (e.pass ? "[PASS] " : "[FAIL] ") << e.name;
    if (!e.note.empty()) os << "  (" << e.note << ")";
    if (e.witness) {
      os << "  witness @";
      for (Index i : e.witness->indices) os << " " << i;
      auto dump = [&os](const char* tag, const std::vector<std::pair<Index, std::string>>& v) {
        os << " " << tag << "{";
        for (std::size_t k = 0; k < v.size(); ++k) {
          if (k) os << ", ";
          os << v[k].first << ": " << v[k].second;
        }
        os << "}";
      };
      dump("lhs", e.witness->lhs);
      dump("rhs", e.witness->rhs);
    }
    os << "\n";
  }
  return os.str();
}

CheckEntry entry_bool(const std::string& name, bool pass, std::string note) {
  CheckEntry e;
  e.name = name;
  e.pass = pass;
  e.note = std::move(note);
  return e;
}

CheckEntry entry_info(const std::string& name, bool value, std::string note) {
  CheckEntry e = entry_bool(name, value, std::move(note));
  e.informational = true;
  return e;
}

std::vector<std::pair<Index, std::string>> sparse_dump(const LinearMap& colvec) {
  std::vector<std::pair<Index, std::string>> out;
  for (Index i = 0; i < colvec.rows(); ++i) {
    Scalar s = colvec.at(i, 0);
    if (!s.is_zero()) out.emplace_back(i, s.str());
  }
  return out;
}

CheckEntry compare_maps_entry(const std::string& name, const LinearMap& a, const LinearMap& b) {
  CheckEntry e;
  e.name = name;
  if (!(a.field() == b.field()) || a.rows() != b.rows() || a.cols() != b.cols()) {
    e.pass = false;
    e.note = "shape or field mismatch: " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
             " (" + a.field().str() + ") vs " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()) +
             " (" + b.field().str() + ")";
    return e;
  }
  for (Index j = 0; j < a.cols(); ++j) {
    LinearMap ca = a.column(j);
    LinearMap cb = b.column(j);
    if (!(ca == cb)) {
      e.pass = false;
      Witness w;
      w.indices = {j};
      w.lhs = sparse_dump(ca);
      w.rhs = sparse_dump(cb);
      e.witness = std::move(w);
      return e;
    }
  }
  e.pass = true;
  return e;
}

}  // namespace hopf
