// Plain-text numeric tables: '# key=value' header lines, then
// '<index> <digit-string>' rows.
#pragma once

#include <map>
#include <string>
#include <vector>

namespace secz {

struct DataRow {
  long index;
  std::string digits;
};

struct DataFile {
  std::string path;
  std::map<std::string, std::string> headers;
  std::vector<DataRow> rows;

  long header_long(const std::string& key, long fallback) const;
};

DataFile read_data_file(const std::string& path);

// Trusted decimal places of a digit string given a significant-digit
// budget (<= 0: unlimited).
long certified_decimals(const std::string& digits, long significant_budget);

// Directory of the bundled data: $SECZ_DATA_DIR, else the compiled-in path.
std::string data_dir();

}  // namespace secz
