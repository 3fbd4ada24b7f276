#include "sbo/field_io.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace sbo::io {
namespace {

static_assert(std::endian::native == std::endian::little, "binary field format assumes little-endian");

template <class T>
void put(std::ostream& out, T value) {
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <class T>
T get(std::istream& in) {
  T value{};
  in.read(reinterpret_cast<char*>(&value), sizeof(T));
  if (!in) throw std::runtime_error("field binary stream truncated");
  return value;
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

template <class Values>
void write_binary_impl(std::ostream& out, const SpectralGrid& grid, const Values& values) {
  put<double>(out, grid.length());
  put<std::uint64_t>(out, grid.points());
  for (const auto& z : values) {
    const cplx c(z);
    put<double>(out, c.real());
    put<double>(out, c.imag());
  }
}

template <class Values>
void write_csv_impl(std::ostream& out, const SpectralGrid& grid, const Values& values) {
  out << "length,points\n" << fmt17(grid.length()) << ',' << grid.points() << "\nre,im\n";
  for (const auto& z : values) {
    const cplx c(z);
    out << fmt17(c.real()) << ',' << fmt17(c.imag()) << '\n';
  }
}

}  // namespace

void write_binary(std::ostream& out, const ComplexField& f) { write_binary_impl(out, f.grid(), f.values()); }
void write_binary(std::ostream& out, const RealField& f) { write_binary_impl(out, f.grid(), f.values()); }

ComplexField read_binary(std::istream& in) {
  const auto length = get<double>(in);
  const auto points = get<std::uint64_t>(in);
  SpectralGrid grid(length, static_cast<std::size_t>(points));
  std::vector<cplx> values(grid.points());
  for (auto& z : values) {
    const double re = get<double>(in);
    const double im = get<double>(in);
    z = cplx(re, im);
  }
  return ComplexField(grid, std::move(values));
}

void write_csv(std::ostream& out, const ComplexField& f) { write_csv_impl(out, f.grid(), f.values()); }
void write_csv(std::ostream& out, const RealField& f) { write_csv_impl(out, f.grid(), f.values()); }

ComplexField read_csv(std::istream& in) {
  std::string line;
  auto next = [&]() {
    if (!std::getline(in, line)) throw std::runtime_error("field CSV truncated");
    return line;
  };
  if (next() != "length,points") throw std::runtime_error("field CSV: bad header");
  std::istringstream head(next());
  double length = 0.0;
  std::uint64_t points = 0;
  char comma = 0;
  head >> length >> comma >> points;
  if (!head || comma != ',') throw std::runtime_error("field CSV: bad grid line");
  SpectralGrid grid(length, static_cast<std::size_t>(points));
  if (next() != "re,im") throw std::runtime_error("field CSV: bad column header");
  std::vector<cplx> values(grid.points());
  for (auto& z : values) {
    const std::string row = next();
    const auto pos = row.find(',');
    if (pos == std::string::npos) throw std::runtime_error("field CSV: bad row '" + row + "'");
    z = cplx(std::stod(row.substr(0, pos)), std::stod(row.substr(pos + 1)));
  }
  return ComplexField(grid, std::move(values));
}

RealField to_real(const ComplexField& f, double tol) {
  std::vector<double> values(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) {
    if (std::abs(f[j].imag()) > tol)
      throw std::runtime_error("to_real: imaginary part " + fmt17(f[j].imag()) + " exceeds tolerance");
    values[j] = f[j].real();
  }
  return RealField(f.grid(), std::move(values));
}

}  // namespace sbo::io
