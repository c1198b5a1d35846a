#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace ajlab {

/// Variable symbol with a fixed total order:
///   q < s < Q < Qm < Qt1 < Qt2 < ... < alpha < w1 < ... < x < E < Em < Et1 < ... < l < (others)
/// The order only fixes canonical forms; it carries no meaning.
class VarId {
 public:
  VarId() = default;
  VarId(std::string name);  // NOLINT(google-explicit-constructor)
  VarId(const char* name) : VarId(std::string(name)) {}  // NOLINT

  const std::string& name() const { return name_; }

  friend bool operator==(const VarId& a, const VarId& b) { return a.name_ == b.name_; }
  friend std::strong_ordering operator<=>(const VarId& a, const VarId& b);

 private:
  std::string name_;
  int rank_ = 0;
  long index_ = 0;
};

using VarList = std::vector<VarId>;

// Well-known symbols.
namespace vars {
inline const VarId q{"q"};
inline const VarId s{"s"};
inline const VarId Q{"Q"};
inline const VarId Qm{"Qm"};
inline const VarId E{"E"};
inline const VarId Em{"Em"};
inline const VarId l{"l"};
inline const VarId alpha{"alpha"};
inline const VarId x{"x"};
VarId Qt(int i);
VarId Et(int i);
VarId w(int i);
}  // namespace vars

bool is_valid_identifier(std::string_view name);

}  // namespace ajlab
