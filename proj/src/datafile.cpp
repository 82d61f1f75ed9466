#include "secz/datafile.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "secz/errors.hpp"

namespace secz {

long DataFile::header_long(const std::string& key, long fallback) const {
  auto it = headers.find(key);
  if (it == headers.end()) return fallback;
  try {
    return std::stol(it->second);
  } catch (const std::exception&) {
    throw Error(ErrorKind::parse, path + ": header '" + key + "' is not an integer");
  }
}

DataFile read_data_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io, "cannot open " + path);
  DataFile f;
  f.path = path;
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::string body = line.substr(first + 1);
      auto eq = body.find('=');
      if (eq == std::string::npos) continue;
      auto trim = [](std::string s) {
        s.erase(0, s.find_first_not_of(" \t"));
        s.erase(s.find_last_not_of(" \t\r") + 1);
        return s;
      };
      f.headers[trim(body.substr(0, eq))] = trim(body.substr(eq + 1));
      continue;
    }
    std::istringstream ls(line);
    DataRow r;
    if (!(ls >> r.index >> r.digits))
      throw Error(ErrorKind::parse, path + ":" + std::to_string(lineno) + ": expected '<index> <digits>'");
    bool ok = !r.digits.empty();
    for (char c : r.digits)
      if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == '-' || c == 'e' || c == 'E' || c == '+'))
        ok = false;
    if (!ok) throw Error(ErrorKind::parse, path + ":" + std::to_string(lineno) + ": malformed digit string");
    f.rows.push_back(std::move(r));
  }
  return f;
}

long certified_decimals(const std::string& digits, long significant_budget) {
  std::string d = digits;
  if (!d.empty() && d[0] == '-') d.erase(0, 1);
  auto dot = d.find('.');
  long after = dot == std::string::npos ? 0 : static_cast<long>(d.size() - dot - 1);
  if (significant_budget <= 0) return after;
  std::string intpart = d.substr(0, dot);
  intpart.erase(0, std::min(intpart.find_first_not_of('0'), intpart.size()));
  long lead_zeros = 0;
  if (intpart.empty() && dot != std::string::npos)
    while (dot + 1 + static_cast<std::size_t>(lead_zeros) < d.size() && d[dot + 1 + static_cast<std::size_t>(lead_zeros)] == '0')
      ++lead_zeros;
  long decimals = significant_budget - static_cast<long>(intpart.size()) + lead_zeros;
  return std::max(0L, std::min(after, decimals));
}

std::string data_dir() {
  if (const char* env = std::getenv("SECZ_DATA_DIR"); env && *env) return env;
  return SECZ_DATA_DIR;
}

}  // namespace secz
