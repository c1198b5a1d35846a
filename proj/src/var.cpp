#include "ajlab/var.hpp"

#include <array>
#include <cctype>

namespace ajlab {

namespace {

struct Kind {
  std::string_view prefix;
  bool indexed;
};

// Position in this table is the rank.
constexpr std::array<Kind, 12> kKinds{{
    {"q", false},
    {"s", false},
    {"Q", false},
    {"Qm", true},
    {"Qt", true},
    {"alpha", false},
    {"w", true},
    {"x", false},
    {"E", false},
    {"Em", true},
    {"Et", true},
    {"l", false},
}};

constexpr int kOtherRank = static_cast<int>(kKinds.size());

}  // namespace

VarId::VarId(std::string name) : name_(std::move(name)) {
  std::size_t split = name_.size();
  while (split > 0 && std::isdigit(static_cast<unsigned char>(name_[split - 1]))) --split;
  std::string_view prefix(name_.data(), split);
  bool has_index = split < name_.size() && split > 0;
  long index = has_index ? std::stol(name_.substr(split)) : 0;
  rank_ = kOtherRank;
  index_ = 0;
  for (std::size_t r = 0; r < kKinds.size(); ++r) {
    const auto& k = kKinds[r];
    if (!has_index && prefix == k.prefix) {
      rank_ = static_cast<int>(r);
      return;
    }
    if (has_index && k.indexed && prefix == k.prefix) {
      rank_ = static_cast<int>(r);
      index_ = index;
      return;
    }
  }
  // Unknown symbols: order by prefix, then numeric suffix.
  index_ = has_index ? index : -1;
}

std::strong_ordering operator<=>(const VarId& a, const VarId& b) {
  if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
  if (a.rank_ == kOtherRank) {
    auto pa = std::string_view(a.name_).substr(0, a.name_.find_first_of("0123456789"));
    auto pb = std::string_view(b.name_).substr(0, b.name_.find_first_of("0123456789"));
    if (auto c = pa.compare(pb); c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (auto c = a.index_ <=> b.index_; c != 0) return c;
  auto c = a.name_.compare(b.name_);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

namespace vars {
VarId Qt(int i) { return VarId("Qt" + std::to_string(i)); }
VarId Et(int i) { return VarId("Et" + std::to_string(i)); }
VarId w(int i) { return VarId("w" + std::to_string(i)); }
}  // namespace vars

bool is_valid_identifier(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace ajlab
