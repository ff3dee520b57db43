#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace qihou {

/// Index of a variable within one VarRegistry.
struct VarId {
  std::uint32_t index = 0;

  friend bool operator==(VarId a, VarId b) { return a.index == b.index; }
  friend bool operator!=(VarId a, VarId b) { return a.index != b.index; }
  friend bool operator<(VarId a, VarId b) { return a.index < b.index; }
};

/// An immutable, ordered set of named variables.
///
/// Registries are values: two registries are the same registry iff they list
/// the same names in the same order. Polynomials hold a shared reference and
/// refuse to mix registries.
class VarRegistry {
 public:
  using Ptr = std::shared_ptr<const VarRegistry>;

  /// Throws if names are empty, malformed, or not unique.
  static Ptr make(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(VarId v) const { return names_.at(v.index); }
  const std::vector<std::string>& names() const { return names_; }

  /// Looks a name up; throws std::invalid_argument when absent.
  VarId id(const std::string& name) const;
  bool contains(const std::string& name) const;

  friend bool operator==(const VarRegistry& a, const VarRegistry& b) {
    return a.names_ == b.names_;
  }

 private:
  explicit VarRegistry(std::vector<std::string> names);

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> by_name_;
};

bool same_registry(const VarRegistry::Ptr& a, const VarRegistry::Ptr& b);

/// Registry {x1..xn, y1..yn}; x_i has index i-1, y_i has index n+i-1 (i is
/// 1-based as in the usual subscript notation).
VarRegistry::Ptr make_xy_registry(std::size_t n);

}  // namespace qihou
