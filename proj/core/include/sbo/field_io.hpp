#pragma once

#include <iosfwd>

#include "sbo/field.hpp"

namespace sbo::io {

// Binary layout, little-endian IEEE-754:
//   float64 length, uint64 points, then points pairs of float64 (re, im).
// Real fields are written with im = 0.
//
// CSV layout:
//   length,points
//   <length>,<points>
//   re,im
//   <re>,<im>      (one row per node, 17 significant digits)

void write_binary(std::ostream& out, const ComplexField& f);
void write_binary(std::ostream& out, const RealField& f);
ComplexField read_binary(std::istream& in);

void write_csv(std::ostream& out, const ComplexField& f);
void write_csv(std::ostream& out, const RealField& f);
ComplexField read_csv(std::istream& in);

/// Real part of a complex field; throws if any imaginary part exceeds tol.
RealField to_real(const ComplexField& f, double tol = 0.0);

}  // namespace sbo::io
