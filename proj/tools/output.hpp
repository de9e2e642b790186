#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

namespace cli {

using Json = nlohmann::ordered_json;

// Non-finite doubles become null in JSON ("inf", "-inf" and "nan" strings
// would not round-trip through strict parsers).
Json Number(double v);

class OutputDir {
 public:
  // Empty path: the report goes to stdout and CSVs are skipped.
  explicit OutputDir(std::string path);

  void WriteReport(const Json& report) const;
  void WriteCsv(const std::string& name, const std::vector<std::string>& header,
                const std::vector<std::vector<double>>& rows) const;
  bool enabled() const { return !path_.empty(); }

 private:
  std::filesystem::path path_;
};

}  // namespace cli
