#pragma once

// File formats for grid functions and sampled partitions.
//
// GridFunction binary (little-endian): "AMGF", u32 version = 1, u32 n,
// u32 N, f64 L, then N^n interleaved (re, im) f64 pairs in row-major order
// (axis 0 slowest). Always space-domain samples with zero frequency offset.
//
// Partition binary: "AMPT", u32 version = 1, u32 n, u32 N, f64 L, f64 alpha,
// u32 member count; per member: i32 index (n values; the level j for
// dyadic members), i64 box_lo[n], i64 box_extent[n], then the f64 samples
// of the box in row-major order.
//
// CSV (n = 1 only): header "x,re,im", one sample per row.

#include <iosfwd>
#include <string>

#include "alphamod/covering.hpp"
#include "alphamod/grid.hpp"

namespace alphamod {

void write_grid_function(std::ostream& out, const GridFunction& f);
GridFunction read_grid_function(std::istream& in);

void write_grid_csv(std::ostream& out, const GridFunction& f);
/// Reads "x,re,im" rows; N is the row count and L = N · (x_1 - x_0).
GridFunction read_grid_csv(std::istream& in);

/// Dispatches on the extension: ".csv" is CSV, anything else binary.
GridFunction load_grid_function(const std::string& path);
void save_grid_function(const std::string& path, const GridFunction& f);

void write_partition(std::ostream& out, const Partition& p);

}  // namespace alphamod
