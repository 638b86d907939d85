#pragma once
#include <string>

#include "flns/field.hpp"

namespace flns {

// Binary field container: magic "SFL1", then little-endian u32 version (= 1),
// u32 d, u32 components, d x u32 points-per-axis (isotropic), f64 L, then
// components * n^d coefficients as (re, im) f64 pairs in storage order.
// Total size: 24 + 4 d + 16 c n^d bytes.  Round trips byte-exactly.
void write_field(const std::string& path, const SpectralField& f);
SpectralField read_field(const std::string& path);

} // namespace flns
