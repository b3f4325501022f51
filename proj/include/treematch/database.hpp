#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "treematch/tree.hpp"

namespace treematch {

using TreeId = std::uint64_t;

struct TreeRecord {
  TreeId id = 0;
  Tree tree;
};

// A loaded tree database. Ids are unique; duplicate tree content under
// distinct ids is allowed. Labels live in the caller's pool so queries can
// be parsed against the same label universe.
struct TreeDatabase {
  std::vector<TreeRecord> records;
};

// File format: one record per line, "id<TAB>tree" with the id optional
// (assigned 0,1,2,... continuing from the previous record when absent).
// Blank lines and lines starting with '#' are skipped.
TreeDatabase load_database(std::istream& in, LabelPool& pool);
TreeDatabase load_database_file(const std::string& path, LabelPool& pool);

void save_database(const TreeDatabase& db, const LabelPool& pool,
                   std::ostream& out);

// Query files share the record format; ids and '#' comments are ignored.
std::vector<Tree> load_query_file(const std::string& path, LabelPool& pool);

}  // namespace treematch
