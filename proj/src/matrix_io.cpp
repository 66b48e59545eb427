#include "snapvar/matrix_io.hpp"

#include <cstdio>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace snapvar {

namespace {

[[noreturn]] void fail(const std::string& origin, int line, const std::string& msg) {
  throw std::runtime_error(origin + ":" + std::to_string(line) + ": " + msg);
}

bool next_content_line(std::istream& in, std::string& line, int& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;  // blank
    if (line[first] == '#') continue;          // comment
    return true;
  }
  return false;
}

Complex parse_entry(const std::string& token, const std::string& origin, int line) {
  const auto comma = token.find(',');
  if (comma == std::string::npos) fail(origin, line, "entry '" + token + "' is not a re,im pair");
  size_t used = 0;
  double re = 0.0, im = 0.0;
  try {
    re = std::stod(token.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("");
    const std::string imag_part = token.substr(comma + 1);
    im = std::stod(imag_part, &used);
    if (used != imag_part.size()) throw std::invalid_argument("");
  } catch (const std::exception&) {
    fail(origin, line, "entry '" + token + "' is not a re,im pair");
  }
  if (!std::isfinite(re) || !std::isfinite(im))
    fail(origin, line, "entry '" + token + "' is not finite");
  return Complex(re, im);
}

}  // namespace

ComplexMatrix read_matrix(std::istream& in, const std::string& origin) {
  std::string line;
  int line_no = 0;
  if (!next_content_line(in, line, line_no)) fail(origin, line_no, "missing dimension line");

  int d = 0;
  {
    std::istringstream ss(line);
    std::string extra;
    if (!(ss >> d) || d < 1) fail(origin, line_no, "dimension line must hold a positive integer");
    if (ss >> extra) fail(origin, line_no, "unexpected token after dimension");
  }

  ComplexMatrix m(d);
  for (int r = 0; r < d; ++r) {
    if (!next_content_line(in, line, line_no))
      fail(origin, line_no, "expected " + std::to_string(d) + " rows, file ends after " +
                                std::to_string(r));
    std::istringstream ss(line);
    std::string token;
    for (int c = 0; c < d; ++c) {
      if (!(ss >> token))
        fail(origin, line_no, "row " + std::to_string(r) + " has " + std::to_string(c) +
                                  " entries, expected " + std::to_string(d));
      m(r, c) = parse_entry(token, origin, line_no);
    }
    std::string extra;
    if (ss >> extra)
      fail(origin, line_no, "row " + std::to_string(r) + " has more than " + std::to_string(d) +
                                " entries");
  }
  return m;
}

ComplexMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open for reading");
  return read_matrix(in, path);
}

void write_matrix(std::ostream& out, const ComplexMatrix& m) {
  out << m.dim() << "\n";
  char buf[64];
  for (int r = 0; r < m.dim(); ++r) {
    for (int c = 0; c < m.dim(); ++c) {
      std::snprintf(buf, sizeof(buf), "%.17g,%.17g", m(r, c).real(), m(r, c).imag());
      out << (c == 0 ? "" : " ") << buf;
    }
    out << "\n";
  }
}

void write_matrix_file(const std::string& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error(path + ": cannot open for writing");
  write_matrix(out, m);
  if (!out.good()) throw std::runtime_error(path + ": write failed");
}

}  // namespace snapvar
