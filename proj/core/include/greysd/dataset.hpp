#ifndef GREYSD_DATASET_HPP
#define GREYSD_DATASET_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "greysd/digest.hpp"
#include "greysd/series.hpp"

namespace greysd {

enum class DataSource { Embedded, File };

// Named observation set: embedded reference data or an external CSV.
struct Dataset {
  std::string name;
  std::vector<std::string> labels; // time labels (years) or synthetic 1..n
  std::vector<double> values;
  DataSource source = DataSource::Embedded;
  std::size_t default_nu = 0; // canonical split; 0 means "use n"

  Series to_series() const;

  // FNV-1a 64-bit digest over all values, each formatted with 17
  // significant digits and joined by commas.  Guards the embedded
  // fixtures against accidental edits.
  std::uint64_t digest() const;

  // "label,value" lines, one per observation (no header).
  std::string to_csv() const;
};

// Embedded fixtures: electricity_cn (n=10, nu=7), gdp_lanzhou
// (n=12, nu=6), freightage_lanzhou (n=11, nu=6).
const Dataset &fixture(const std::string &name);
std::vector<std::string> fixture_names();

struct CsvOptions {
  bool header = false;          // skip the first line
  std::size_t value_column = 0; // 1-based; 0 = auto (single column, else 2nd)
};

// Parse a CSV file into a Dataset.  Labels come from the first column
// when the file has more than one column, otherwise they are synthesized
// as 1..n.  Errors name 1-based line numbers; rows must agree on column
// count; values must be strictly positive and number at least 4.
Dataset load_csv(const std::string &path, const CsvOptions &opts = {});

// Same parser on in-memory text (used by the CSV round-trip checks).
Dataset parse_csv(const std::string &text, const CsvOptions &opts = {},
                  const std::string &origin = "<memory>");

} // namespace greysd

#endif
