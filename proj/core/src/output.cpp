#include "ultrafid/output.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ultrafid {

std::string format_double(double v) {
  std::array<char, 40> buf{};
  const int len = std::snprintf(buf.data(), buf.size(), "%.17g", v);
  return std::string(buf.data(), static_cast<std::size_t>(len));
}

std::string to_csv(const DensityGrid& grid) {
  std::ostringstream os;
  os << "x,value\n";
  const auto xs = grid.abscissae();
  const auto vs = grid.values();
  for (std::size_t i = 0; i < xs.size(); ++i) os << format_double(xs[i]) << ',' << format_double(vs[i]) << '\n';
  return os.str();
}

std::string to_csv(const ConvergenceReport& report) {
  std::ostringstream os;
  os << "n,sup_distance\n";
  for (const auto& e : report.entries) os << e.n << ',' << format_double(e.sup_distance) << '\n';
  return os.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) {
      out.close();
      std::filesystem::remove(tmp);
      throw std::runtime_error("failed writing " + tmp.string());
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace ultrafid
