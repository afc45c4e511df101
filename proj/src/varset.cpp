#include "apoly/varset.hpp"

#include <set>

#include "apoly/errors.hpp"

namespace apoly {

VarSet::VarSet(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > kMaxVars)
    throw StructuralError("VarSet: more than " + std::to_string(kMaxVars) +
                          " variables");
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw StructuralError("VarSet: empty variable name");
    if (!seen.insert(n).second)
      throw StructuralError("VarSet: duplicate variable '" + n + "'");
  }
}

std::shared_ptr<const VarSet> VarSet::make(std::vector<std::string> names) {
  return std::make_shared<const VarSet>(std::move(names));
}

std::shared_ptr<const VarSet> VarSet::uvx(int n) {
  std::vector<std::string> names = {"u", "v"};
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return make(std::move(names));
}

std::shared_ptr<const VarSet> VarSet::uv() { return make({"u", "v"}); }

std::shared_ptr<const VarSet> VarSet::uvz() { return make({"u", "v", "z"}); }

std::shared_ptr<const VarSet> VarSet::tz() { return make({"t", "z"}); }

std::shared_ptr<const VarSet> VarSet::xs(int n) {
  std::vector<std::string> names;
  for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return make(std::move(names));
}

std::shared_ptr<const VarSet> VarSet::uvX(int n) {
  std::vector<std::string> names = {"u", "v"};
  for (int i = 1; i <= n; ++i) names.push_back("X" + std::to_string(i));
  return make(std::move(names));
}

int VarSet::find(const std::string& name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

}  // namespace apoly
