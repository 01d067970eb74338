#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "probgeo/distribution.hpp"
#include "probgeo/multivariate.hpp"

namespace probgeo::cli {

/// Reads one column of a CSV file as a univariate sample. A single header
/// row is skipped when the first row is non-numeric. Cells must parse as
/// finite floats (ParseError with the line number otherwise); an input
/// with no data rows raises EmptyInput.
[[nodiscard]] Sample ingest_csv(const std::string& path, std::size_t column);

/// Multi-column variant returning a VectorSample over the given columns.
[[nodiscard]] VectorSample ingest_csv_columns(const std::string& path,
                                              const std::vector<std::size_t>& columns);

}  // namespace probgeo::cli
