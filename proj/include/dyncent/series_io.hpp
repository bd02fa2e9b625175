#ifndef DYNCENT_SERIES_IO_HPP
#define DYNCENT_SERIES_IO_HPP

#include <iosfwd>
#include <string>

#include "dyncent/snapshot_series.hpp"

namespace dyncent {

// Binary series container (".dcs"): magic, orientation, time range, node
// labels (and optional timestamps), then per-snapshot CSR arrays.
// Little-endian, fixed-width fields.

void save_series(const SnapshotSeries& series, std::ostream& out);
void save_series(const SnapshotSeries& series, const std::string& path);

SnapshotSeries load_series(std::istream& in);
SnapshotSeries load_series(const std::string& path);

}  // namespace dyncent

#endif  // DYNCENT_SERIES_IO_HPP
