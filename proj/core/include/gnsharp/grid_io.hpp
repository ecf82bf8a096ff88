#pragma once

#include <filesystem>

#include "gnsharp/spectral.hpp"

/**
 * Grid-function array files: a small header (n, N, L) followed by the N^n
 * complex samples in row-major order, interleaved re/im.
 *
 * Binary layout (little-endian):
 *   bytes 0..7   magic "GNSHGRD1"
 *   bytes 8..11  uint32 n
 *   bytes 12..15 uint32 N (points per axis)
 *   bytes 16..23 float64 L (box length)
 *   then N^n * 2 float64 values: re, im, re, im, ...
 *
 * Text layout:
 *   line 1: "gnsharp-grid 1"
 *   line 2: "<n> <N> <L>"        (L with 17 significant digits)
 *   then one "re im" pair per line, 17 significant digits each.
 */

namespace gnsharp {

enum class ArrayFormat { binary, text };

void save_grid_function(const std::filesystem::path& path, const GridFunction& u,
                        ArrayFormat format = ArrayFormat::binary);

/// Auto-detects the format from the file contents.
GridFunction load_grid_function(const std::filesystem::path& path);

}  // namespace gnsharp
