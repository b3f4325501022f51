#include "treematch/database.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

namespace treematch {

namespace {

bool blank_or_comment(std::string_view line) {
  std::size_t i = line.find_first_not_of(" \t\r");
  return i == std::string_view::npos || line[i] == '#';
}

// Splits an optional "id<TAB>" prefix off a record line.
bool split_id(std::string_view line, TreeId& id, std::string_view& rest) {
  std::size_t tab = line.find('\t');
  if (tab == std::string_view::npos) return false;
  std::string_view head = line.substr(0, tab);
  TreeId value = 0;
  auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), value);
  if (ec != std::errc() || ptr != head.data() + head.size()) return false;
  id = value;
  rest = line.substr(tab + 1);
  return true;
}

}  // namespace

TreeDatabase load_database(std::istream& in, LabelPool& pool) {
  TreeDatabase db;
  std::unordered_set<TreeId> seen;
  std::string line;
  std::size_t line_no = 0;
  bool any_record = false;
  TreeId last_id = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    TreeId id = any_record ? last_id + 1 : 0;
    std::string_view tree_text = line;
    std::string_view rest;
    TreeId explicit_id;
    if (split_id(line, explicit_id, rest)) {
      id = explicit_id;
      tree_text = rest;
    }
    TreeRecord rec;
    rec.id = id;
    try {
      rec.tree = parse_tree(tree_text, pool);
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what(),
                       e.position);
    } catch (const ValidationError& e) {
      throw ValidationError("line " + std::to_string(line_no) + ": " +
                            e.what());
    }
    if (!seen.insert(id).second)
      throw ValidationError("line " + std::to_string(line_no) +
                            ": duplicate tree id " + std::to_string(id));
    db.records.push_back(std::move(rec));
    last_id = id;
    any_record = true;
  }
  return db;
}

TreeDatabase load_database_file(const std::string& path, LabelPool& pool) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open database file: " + path);
  return load_database(in, pool);
}

void save_database(const TreeDatabase& db, const LabelPool& pool,
                   std::ostream& out) {
  for (const TreeRecord& rec : db.records)
    out << rec.id << '\t' << format_tree(rec.tree, pool) << '\n';
}

std::vector<Tree> load_query_file(const std::string& path, LabelPool& pool) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open query file: " + path);
  std::vector<Tree> queries;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (blank_or_comment(line)) continue;
    std::string_view text = line;
    std::string_view rest;
    TreeId ignored;
    if (split_id(line, ignored, rest)) text = rest;
    try {
      queries.push_back(parse_tree(text, pool));
    } catch (const ParseError& e) {
      throw ParseError(path + ":" + std::to_string(line_no) + ": " + e.what(),
                       e.position);
    }
  }
  return queries;
}

}  // namespace treematch
