#include "qihou/polycore/variables.hpp"

#include <cctype>
#include <stdexcept>

namespace qihou {

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace

VarRegistry::VarRegistry(std::vector<std::string> names) : names_(std::move(names)) {
  for (std::uint32_t i = 0; i < names_.size(); ++i) {
    if (!valid_name(names_[i]))
      throw std::invalid_argument("VarRegistry: invalid variable name '" + names_[i] + "'");
    if (!by_name_.emplace(names_[i], i).second)
      throw std::invalid_argument("VarRegistry: duplicate variable name '" + names_[i] + "'");
  }
}

VarRegistry::Ptr VarRegistry::make(std::vector<std::string> names) {
  if (names.empty()) throw std::invalid_argument("VarRegistry: needs at least one variable");
  return Ptr(new VarRegistry(std::move(names)));
}

VarId VarRegistry::id(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end())
    throw std::invalid_argument("VarRegistry: unknown variable '" + name + "'");
  return VarId{it->second};
}

bool VarRegistry::contains(const std::string& name) const {
  return by_name_.count(name) != 0;
}

bool same_registry(const VarRegistry::Ptr& a, const VarRegistry::Ptr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

VarRegistry::Ptr make_xy_registry(std::size_t n) {
  std::vector<std::string> names;
  names.reserve(2 * n);
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));
  return VarRegistry::make(std::move(names));
}

}  // namespace qihou
