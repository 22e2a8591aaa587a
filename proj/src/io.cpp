#include "lnfft/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

#include "lnfft/error.hpp"

namespace lnfft {

namespace {

std::vector<std::string_view> fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

double parse_double(std::string_view field, std::size_t line_no) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size())
    throw Error(Errc::Parse, "line " + std::to_string(line_no) + ": cannot parse '" +
                                 std::string(field) + "' as a number");
  return value;
}

template <typename OnLine>
void for_each_record(std::istream& in, OnLine on_line) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto f = fields(line);
    if (f.empty() || f.front().front() == '#') continue;
    on_line(f, line_no);
  }
}

std::string format17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

CVector read_vector(std::istream& in) {
  CVector out;
  for_each_record(in, [&](const std::vector<std::string_view>& f, std::size_t n) {
    if (f.size() > 2)
      throw Error(Errc::Parse, "line " + std::to_string(n) + ": expected 're im', got " +
                                   std::to_string(f.size()) + " fields");
    const double re = parse_double(f[0], n);
    const double im = f.size() == 2 ? parse_double(f[1], n) : 0.0;
    out.emplace_back(re, im);
  });
  return out;
}

std::vector<double> read_reals(std::istream& in) {
  std::vector<double> out;
  for_each_record(in, [&](const std::vector<std::string_view>& f, std::size_t n) {
    if (f.size() != 1)
      throw Error(Errc::Parse, "line " + std::to_string(n) + ": expected one value, got " +
                                   std::to_string(f.size()));
    out.push_back(parse_double(f[0], n));
  });
  return out;
}

void write_vector(std::ostream& out, const CVector& values) {
  for (const auto& v : values) out << format17(v.real()) << ' ' << format17(v.imag()) << '\n';
}

void write_reals(std::ostream& out, const std::vector<double>& values) {
  for (double v : values) out << format17(v) << '\n';
}

CVector read_vector_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, "cannot open '" + path + "'");
  return read_vector(in);
}

std::vector<double> read_reals_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::Parse, "cannot open '" + path + "'");
  return read_reals(in);
}

void write_vector_file(const std::string& path, const CVector& values) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::Parse, "cannot write '" + path + "'");
  write_vector(out, values);
}

}  // namespace lnfft
