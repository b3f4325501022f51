#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>

namespace treematch {

using LabelId = std::uint32_t;

// A label is any non-empty byte string of printable characters, excluding
// whitespace, '(', ')' and '#'. Bytes >= 0x80 are accepted as-is.
inline bool valid_label(std::string_view text) {
  if (text.empty()) return false;
  for (unsigned char b : text) {
    if (b <= 0x20 || b == 0x7F) return false;
    if (b == '(' || b == ')' || b == '#') return false;
  }
  return true;
}

// Interns label strings to dense ids. Ids are assigned in first-seen order;
// the ordering contract between labels is byte-wise order of their text,
// exposed through compare(). Grow-only; interned views stay valid.
class LabelPool {
 public:
  LabelId intern(std::string_view text) {
    auto it = index_.find(text);
    if (it != index_.end()) return it->second;
    if (!valid_label(text))
      throw std::invalid_argument("invalid label: \"" + std::string(text) + "\"");
    texts_.emplace_back(text);
    LabelId id = static_cast<LabelId>(texts_.size() - 1);
    index_.emplace(texts_.back(), id);
    return id;
  }

  std::optional<LabelId> find(std::string_view text) const {
    auto it = index_.find(text);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  std::string_view text(LabelId id) const { return texts_[id]; }

  // Byte-wise order of the label text: <0, 0, >0.
  int compare(LabelId a, LabelId b) const {
    if (a == b) return 0;
    return texts_[a].compare(texts_[b]);
  }

  bool less(LabelId a, LabelId b) const { return compare(a, b) < 0; }

  std::size_t size() const { return texts_.size(); }

 private:
  std::deque<std::string> texts_;  // stable storage, string_views never move
  std::unordered_map<std::string_view, LabelId> index_;
};

}  // namespace treematch
