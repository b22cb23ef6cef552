#include "greysd/dataset.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "greysd/errors.hpp"

namespace greysd {

Series Dataset::to_series() const { return Series(values, labels); }

std::uint64_t Dataset::digest() const {
  return values_digest(values, values.size());
}

std::string Dataset::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += i < labels.size() ? labels[i] : std::to_string(i + 1);
    out += ',';
    out += num17(values[i]);
    out += '\n';
  }
  return out;
}

namespace {

std::vector<std::string> year_labels(int first, std::size_t n) {
  std::vector<std::string> out(n);
  for (std::size_t i = 0; i < n; ++i)
    out[i] = std::to_string(first + static_cast<int>(i));
  return out;
}

// Reference data embedded verbatim: total electricity consumption of
// China 2005-2014 (10^8 kWh), GDP of Lanzhou 2004-2015 (10^8 RMB),
// freightage of Lanzhou 2004-2014 (10^4 tons).
Dataset make_electricity() {
  Dataset d;
  d.name = "electricity_cn";
  d.values = {24940.3, 28588.0, 32711.8, 34541.4, 37032.2,
              41932.5, 47000.9, 49762.6, 54203.4, 56383.7};
  d.labels = year_labels(2005, d.values.size());
  d.source = DataSource::Embedded;
  d.default_nu = 7;
  return d;
}

Dataset make_gdp() {
  Dataset d;
  d.name = "gdp_lanzhou";
  d.values = {504.65,  567.04,  638.47,  732.76,  846.28,  926.00,
              1100.40, 1360.03, 1563.80, 1776.28, 2000.94, 2095.99};
  d.labels = year_labels(2004, d.values.size());
  d.source = DataSource::Embedded;
  d.default_nu = 6;
  return d;
}

Dataset make_freightage() {
  Dataset d;
  d.name = "freightage_lanzhou";
  d.values = {5786.0, 5973.0, 6262.0, 6840.0,  7207.0, 7332.0,
              8032.0, 8882.0, 9728.0, 10531.0, 11147.0};
  d.labels = year_labels(2004, d.values.size());
  d.source = DataSource::Embedded;
  d.default_nu = 6;
  return d;
}

} // namespace

const Dataset &fixture(const std::string &name) {
  static const Dataset electricity = make_electricity();
  static const Dataset gdp = make_gdp();
  static const Dataset freightage = make_freightage();
  if (name == electricity.name)
    return electricity;
  if (name == gdp.name)
    return gdp;
  if (name == freightage.name)
    return freightage;
  throw DataError("unknown fixture '" + name +
                  "' (available: electricity_cn, gdp_lanzhou, "
                  "freightage_lanzhou)");
}

std::vector<std::string> fixture_names() {
  return {"electricity_cn", "gdp_lanzhou", "freightage_lanzhou"};
}

namespace {

std::string strip(const std::string &s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
    ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
    --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split_fields(const std::string &line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(strip(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  fields.push_back(strip(cur));
  return fields;
}

double parse_value(const std::string &field, std::size_t line_no,
                   const std::string &origin) {
  const char *begin = field.c_str();
  char *end = nullptr;
  const double v = std::strtod(begin, &end);
  if (end == begin || *end != '\0')
    throw DataError(origin + ": line " + std::to_string(line_no) +
                    ": cannot parse value '" + field + "'");
  return v;
}

} // namespace

Dataset parse_csv(const std::string &text, const CsvOptions &opts,
                  const std::string &origin) {
  Dataset d;
  d.name = origin;
  d.source = DataSource::File;
  d.default_nu = 0;

  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  std::size_t columns = 0; // fixed by the first data row
  bool skipped_header = false;
  std::size_t data_row = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r')
      line.pop_back();
    if (strip(line).empty())
      continue;
    if (opts.header && !skipped_header) {
      skipped_header = true;
      continue;
    }
    const std::vector<std::string> fields = split_fields(line);
    if (columns == 0)
      columns = fields.size();
    else if (fields.size() != columns)
      throw DataError(origin + ": line " + std::to_string(line_no) +
                      ": expected " + std::to_string(columns) +
                      " columns, got " + std::to_string(fields.size()));
    std::size_t value_col = opts.value_column;
    if (value_col == 0)
      value_col = columns == 1 ? 1 : 2;
    if (value_col > columns)
      throw DataError(origin + ": line " + std::to_string(line_no) +
                      ": value column " + std::to_string(value_col) +
                      " exceeds " + std::to_string(columns) + " columns");
    ++data_row;
    const double v = parse_value(fields[value_col - 1], line_no, origin);
    if (!(v > 0.0))
      throw DataError(origin + ": row " + std::to_string(data_row) +
                      ": value must be strictly positive, got " +
                      fields[value_col - 1]);
    d.values.push_back(v);
    d.labels.push_back(columns > 1 ? fields[0] : std::to_string(data_row));
  }
  if (d.values.size() < kMinSeriesLength)
    throw DataError(origin + ": needs at least " +
                    std::to_string(kMinSeriesLength) + " data rows, got " +
                    std::to_string(d.values.size()));
  return d;
}

Dataset load_csv(const std::string &path, const CsvOptions &opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw DataError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv(buf.str(), opts, path);
}

} // namespace greysd
