#include "output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>

#include "handles.hpp"

namespace cli {

Json Number(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

OutputDir::OutputDir(std::string path) : path_(std::move(path)) {
  if (path_.empty()) return;
  std::error_code ec;
  std::filesystem::create_directories(path_, ec);
  if (ec) throw Failure(CLIPOPT_ERR_IO, "cannot create output directory " + path_.string() + ": " + ec.message());
}

void OutputDir::WriteReport(const Json& report) const {
  const std::string text = report.dump(2) + "\n";
  if (path_.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path_ / "report.json");
  f << text;
  if (!f) throw Failure(CLIPOPT_ERR_IO, "cannot write " + (path_ / "report.json").string());
}

void OutputDir::WriteCsv(const std::string& name, const std::vector<std::string>& header,
                         const std::vector<std::vector<double>>& rows) const {
  if (path_.empty()) return;
  std::ofstream f(path_ / name);
  for (std::size_t k = 0; k < header.size(); ++k) f << (k ? "," : "") << header[k];
  f << "\n";
  char buf[32];
  for (const auto& row : rows) {
    for (std::size_t k = 0; k < row.size(); ++k) {
      std::snprintf(buf, sizeof buf, "%.17g", row[k]);
      f << (k ? "," : "") << buf;
    }
    f << "\n";
  }
  if (!f) throw Failure(CLIPOPT_ERR_IO, "cannot write " + (path_ / name).string());
}

}  // namespace cli
