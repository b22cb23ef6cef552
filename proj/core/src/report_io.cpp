#include "greysd/report_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "greysd/errors.hpp"

namespace greysd {

namespace {

std::string fmt(const char *f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::string hex16(std::uint64_t v) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%016llx",
                static_cast<unsigned long long>(v));
  return buf;
}

// Reference-table cell format: fixed four decimals.
std::string cell4(double v) {
  if (std::isnan(v))
    return "n/a";
  return fmt("%.4f", v);
}

// Data column: four decimals with trailing zeros (and a bare point)
// trimmed, matching the way the source data is quoted.
std::string data_cell(double v) {
  std::string s = fmt("%.4f", v);
  std::size_t last = s.find_last_not_of('0');
  if (last != std::string::npos && s[last] == '.')
    --last;
  s.erase(last + 1);
  return s;
}

// Five significant digits in scientific notation, exponent without
// leading zeros, exact zero rendered as "0".
std::string sci5(double v) {
  if (v == 0.0)
    return "0";
  std::string s = fmt("%.4e", v);
  const std::size_t e = s.find('e');
  std::string mant = s.substr(0, e);
  std::string exp = s.substr(e + 1);
  const bool neg = exp[0] == '-';
  if (exp[0] == '+' || exp[0] == '-')
    exp.erase(0, 1);
  while (exp.size() > 1 && exp[0] == '0')
    exp.erase(0, 1);
  return mant + "e" + (neg ? "-" : "") + exp;
}

std::string json_escape(const std::string &s) {
  std::string out = "\"";
  for (char ch : s) {
    switch (ch) {
    case '"':
      out += "\\\"";
      break;
    case '\\':
      out += "\\\\";
      break;
    case '\n':
      out += "\\n";
      break;
    case '\r':
      out += "\\r";
      break;
    case '\t':
      out += "\\t";
      break;
    default:
      if (static_cast<unsigned char>(ch) < 0x20) {
        char buf[8];
        std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(ch));
        out += buf;
      } else {
        out += ch;
      }
    }
  }
  out += '"';
  return out;
}

std::string json_num(double v) {
  if (std::isnan(v) || std::isinf(v))
    return "null";
  return num17(v);
}

std::string json_array(const std::vector<double> &vals, std::size_t count) {
  std::string out = "[";
  for (std::size_t i = 0; i < count; ++i) {
    if (i)
      out += ", ";
    out += json_num(vals[i]);
  }
  out += "]";
  return out;
}

std::string json_window(const MetricWindow &w) {
  if (w.ell > w.m)
    return "null";
  return "[" + std::to_string(w.ell) + ", " + std::to_string(w.m) + "]";
}

std::string csv_escape(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"')
      out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

// Row labels for k = 1..total; a numeric label sequence (years,
// indices) is continued past the series end for horizon rows.
std::vector<std::string> row_labels(const Series &s, std::size_t total) {
  const std::size_t n = s.size();
  std::vector<std::string> out(total);
  bool numeric_tail = false;
  long long next = 0;
  if (s.has_labels()) {
    for (std::size_t i = 0; i < n; ++i)
      out[i] = s.labels()[i];
    const std::string &last = s.labels().back();
    char *end = nullptr;
    const long long v = std::strtoll(last.c_str(), &end, 10);
    if (!last.empty() && end && *end == '\0') {
      numeric_tail = true;
      next = v;
    }
  } else {
    for (std::size_t i = 0; i < n; ++i)
      out[i] = std::to_string(i + 1);
    numeric_tail = true;
    next = static_cast<long long>(n);
  }
  for (std::size_t i = n; i < total; ++i)
    out[i] = numeric_tail
                 ? std::to_string(next + static_cast<long long>(i - n + 1))
                 : "+" + std::to_string(i - n + 1);
  return out;
}

// Index of the entry with the smallest prediction/overall MAPE.
int best_entry(const std::vector<ExperimentEntry> &entries, bool pred) {
  int best = -1;
  double best_v = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (!entries[i].report)
      continue;
    const double v =
        pred ? entries[i].report->mape_pred : entries[i].report->mape_over;
    if (!std::isnan(v) && v < best_v) {
      best_v = v;
      best = static_cast<int>(i);
    }
  }
  return best;
}

std::string describe_window(const MetricWindow &w) {
  if (w.ell > w.m)
    return "empty";
  return "[" + std::to_string(w.ell) + ", " + std::to_string(w.m) + "]";
}

std::string render_table(const Series &s,
                         const std::vector<ExperimentEntry> &entries,
                         const SplitSpec &split,
                         const std::string &dataset_name) {
  const std::size_t n = s.size();
  const std::size_t total = n + split.horizon;
  const std::size_t cols = 2 + entries.size();
  const std::vector<std::string> labels = row_labels(s, total);

  std::vector<std::string> header(cols);
  header[0] = "";
  header[1] = "Data";
  for (std::size_t j = 0; j < entries.size(); ++j)
    header[2 + j] = display_name(entries[j].kind);

  std::vector<std::vector<std::string>> value_rows(total);
  for (std::size_t k = 1; k <= total; ++k) {
    auto &row = value_rows[k - 1];
    row.assign(cols, "-");
    row[0] = labels[k - 1];
    row[1] = k <= n ? data_cell(s.values()[k - 1]) : "-";
    for (std::size_t j = 0; j < entries.size(); ++j)
      if (entries[j].report)
        row[2 + j] = cell4(entries[j].report->values[k - 1]);
  }

  std::vector<std::vector<std::string>> ape_rows(n);
  for (std::size_t k = 1; k <= n; ++k) {
    auto &row = ape_rows[k - 1];
    row.assign(cols, "-");
    row[0] = labels[k - 1];
    row[1] = "";
    for (std::size_t j = 0; j < entries.size(); ++j)
      if (entries[j].report)
        row[2 + j] = cell4(entries[j].report->ape[k - 1]);
  }

  const int star_pred = best_entry(entries, true);
  const int star_over = best_entry(entries, false);
  std::vector<std::vector<std::string>> mape_rows(3);
  const char *mape_names[3] = {"simulation", "prediction", "overall"};
  for (int r = 0; r < 3; ++r) {
    auto &row = mape_rows[r];
    row.assign(cols, "-");
    row[0] = mape_names[r];
    row[1] = "";
    for (std::size_t j = 0; j < entries.size(); ++j) {
      if (!entries[j].report)
        continue;
      const ForecastReport &rep = *entries[j].report;
      const double v = r == 0   ? rep.mape_simu
                       : r == 1 ? rep.mape_pred
                                : rep.mape_over;
      std::string cell = cell4(v);
      if ((r == 1 && static_cast<int>(j) == star_pred) ||
          (r == 2 && static_cast<int>(j) == star_over))
        cell += "*";
      row[2 + j] = cell;
    }
  }

  std::vector<std::size_t> width(cols, 0);
  auto widen = [&](const std::vector<std::string> &row) {
    for (std::size_t c = 0; c < cols; ++c)
      width[c] = std::max(width[c], row[c].size());
  };
  widen(header);
  for (const auto &row : value_rows)
    widen(row);
  for (const auto &row : ape_rows)
    widen(row);
  for (const auto &row : mape_rows)
    widen(row);

  std::size_t line_width = 2 * (cols - 1);
  for (std::size_t c = 0; c < cols; ++c)
    line_width += width[c];

  auto emit_row = [&](const std::vector<std::string> &row) {
    std::string line;
    for (std::size_t c = 0; c < cols; ++c) {
      if (c) {
        line += "  ";
        line.append(width[c] - row[c].size(), ' ');
        line += row[c];
      } else {
        line += row[c];
        line.append(width[c] - row[c].size(), ' ');
      }
    }
    while (!line.empty() && line.back() == ' ')
      line.pop_back();
    return line + "\n";
  };

  std::string out;
  out += dataset_name.empty() ? "series" : dataset_name;
  out += " (n = " + std::to_string(n) +
         ", fit window 1.." + std::to_string(split.nu);
  if (split.horizon > 0)
    out += ", horizon +" + std::to_string(split.horizon);
  out += ")\n\n";

  out += emit_row(header);
  for (std::size_t k = 1; k <= total; ++k) {
    out += emit_row(value_rows[k - 1]);
    if (k == split.nu && k < total)
      out += std::string(line_width, '-') + "\n";
  }

  out += "\nAPE (%)\n";
  for (const auto &row : ape_rows)
    out += emit_row(row);

  out += "\nMAPE (%)\n";
  for (const auto &row : mape_rows)
    out += emit_row(row);
  if (star_pred >= 0 || star_over >= 0)
    out += "(* best prediction / overall)\n";

  std::string notes;
  for (const ExperimentEntry &e : entries) {
    if (e.report) {
      notes += display_name(e.kind) + ": windows simulation " +
               describe_window(e.report->simu_window) + ", prediction " +
               describe_window(e.report->pred_window) + ", overall " +
               describe_window(e.report->over_window) + "\n";
    } else {
      notes += display_name(e.kind) + ": " + e.error + "\n";
    }
  }
  if (!notes.empty())
    out += "\n" + notes;
  return out;
}

std::string render_csv(const Series &s,
                       const std::vector<ExperimentEntry> &entries,
                       const SplitSpec &split) {
  const std::size_t n = s.size();
  const std::size_t total = n + split.horizon;
  const std::vector<std::string> labels = row_labels(s, total);

  std::string out = "label,data";
  for (const ExperimentEntry &e : entries)
    out += "," + to_string(e.kind);
  for (const ExperimentEntry &e : entries)
    out += "," + to_string(e.kind) + "_ape";
  out += "\n";

  for (std::size_t k = 1; k <= total; ++k) {
    out += csv_escape(labels[k - 1]);
    out += ",";
    if (k <= n)
      out += num17(s.values()[k - 1]);
    for (const ExperimentEntry &e : entries) {
      out += ",";
      if (e.report)
        out += num17(e.report->values[k - 1]);
    }
    for (const ExperimentEntry &e : entries) {
      out += ",";
      if (e.report && k <= n)
        out += num17(e.report->ape[k - 1]);
    }
    out += "\n";
  }

  const char *mape_labels[3] = {"mape_simu", "mape_pred", "mape_over"};
  for (int r = 0; r < 3; ++r) {
    out += mape_labels[r];
    out += ",";
    for (const ExperimentEntry &e : entries) {
      out += ",";
      if (!e.report)
        continue;
      const double v = r == 0   ? e.report->mape_simu
                       : r == 1 ? e.report->mape_pred
                                : e.report->mape_over;
      if (!std::isnan(v))
        out += num17(v);
    }
    out += std::string(entries.size(), ',');
    out += "\n";
  }
  return out;
}

std::string render_json(const Series &s,
                        const std::vector<ExperimentEntry> &entries,
                        const SplitSpec &split,
                        const std::string &dataset_name) {
  const std::size_t n = s.size();
  const std::size_t total = n + split.horizon;
  const std::vector<std::string> labels = row_labels(s, total);

  std::string out = "{\n";
  out += "  \"dataset\": " + json_escape(dataset_name) + ",\n";
  out += "  \"n\": " + std::to_string(n) + ",\n";
  out += "  \"nu\": " + std::to_string(split.nu) + ",\n";
  out += "  \"horizon\": " + std::to_string(split.horizon) + ",\n";
  out += "  \"labels\": [";
  for (std::size_t i = 0; i < total; ++i) {
    if (i)
      out += ", ";
    out += json_escape(labels[i]);
  }
  out += "],\n";
  out += "  \"data\": " + json_array(s.values(), n) + ",\n";
  out += "  \"models\": [\n";
  for (std::size_t j = 0; j < entries.size(); ++j) {
    const ExperimentEntry &e = entries[j];
    out += "    {\n";
    out += "      \"kind\": " + json_escape(to_string(e.kind)) + ",\n";
    out += "      \"name\": " + json_escape(display_name(e.kind));
    if (e.report) {
      const ForecastReport &r = *e.report;
      out += ",\n";
      out += "      \"values\": " + json_array(r.values, total) + ",\n";
      out += "      \"ape\": " + json_array(r.ape, n) + ",\n";
      out += "      \"mape\": {\"simu\": " + json_num(r.mape_simu) +
             ", \"pred\": " + json_num(r.mape_pred) +
             ", \"over\": " + json_num(r.mape_over) + "},\n";
      out += "      \"windows\": {\"simu\": " + json_window(r.simu_window) +
             ", \"pred\": " + json_window(r.pred_window) +
             ", \"over\": " + json_window(r.over_window) + "}\n";
    } else {
      out += ",\n      \"error\": " + json_escape(e.error) + "\n";
    }
    out += j + 1 < entries.size() ? "    },\n" : "    }\n";
  }
  out += "  ]\n}\n";
  return out;
}

} // namespace

ReportFormat report_format_from_string(const std::string &name) {
  if (name == "table")
    return ReportFormat::Table;
  if (name == "csv")
    return ReportFormat::Csv;
  if (name == "json")
    return ReportFormat::Json;
  throw DataError("unknown output format '" + name +
                  "' (expected table, csv or json)");
}

std::string model_to_json(const FittedModel &m) {
  std::string out = "{\n";
  out += "  \"kind\": " + json_escape(to_string(m.kind)) + ",\n";
  if (m.kind == ModelKind::DGM11) {
    out += "  \"beta1\": " + json_num(m.beta1) + ",\n";
    out += "  \"beta2\": " + json_num(m.beta2) + ",\n";
  } else {
    out += "  \"a\": " + json_num(m.params.a) + ",\n";
    out += "  \"b\": " + json_num(m.params.b) + ",\n";
  }
  if (m.kind == ModelKind::GM_SD) {
    const SdConstants sd = m.sd ? *m.sd : sd_constants(m.params);
    out += "  \"w\": " + json_num(sd.w) + ",\n";
    out += "  \"lambda\": " + json_num(sd.lambda) + ",\n";
    out += "  \"mu\": " + json_num(sd.mu) + ",\n";
  }
  out += "  \"nu\": " + std::to_string(m.split.nu) + ",\n";
  if (m.kind == ModelKind::GM_SC)
    out += std::string("  \"sc_init\": ") +
           (m.sc_init == ScInit::First ? "\"first\"" : "\"anchored\"") + ",\n";
  out += "  \"anchors\": {\"x0_1\": " + json_num(m.head.x0_1) +
         ", \"x0_2\": " + json_num(m.head.x0_2) +
         ", \"x1_1\": " + json_num(m.head.x1_1) +
         ", \"x1_2\": " + json_num(m.head.x1_2) + "},\n";
  out += "  \"data_digest\": \"" + hex16(m.data_digest) + "\"\n";
  out += "}\n";
  return out;
}

FittedModel model_from_json(const std::string &text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception &e) {
    throw DataError(std::string("model document: ") + e.what());
  }
  try {
    FittedModel m;
    m.kind = model_kind_from_string(doc.at("kind").get<std::string>());
    if (m.kind == ModelKind::DGM11) {
      m.beta1 = doc.at("beta1").get<double>();
      m.beta2 = doc.at("beta2").get<double>();
    } else {
      m.params.a = doc.at("a").get<double>();
      m.params.b = doc.at("b").get<double>();
    }
    if (m.kind == ModelKind::GM_SD) {
      SdConstants sd;
      sd.w = doc.at("w").get<double>();
      sd.lambda = doc.at("lambda").get<double>();
      sd.mu = doc.at("mu").get<double>();
      m.sd = sd;
    }
    m.split.nu = doc.at("nu").get<std::size_t>();
    if (m.kind == ModelKind::GM_SC && doc.contains("sc_init")) {
      const std::string init = doc.at("sc_init").get<std::string>();
      if (init == "first")
        m.sc_init = ScInit::First;
      else if (init == "anchored")
        m.sc_init = ScInit::Anchored;
      else
        throw DataError("model document: unknown sc_init '" + init + "'");
    }
    const nlohmann::json &anchors = doc.at("anchors");
    m.head.x0_1 = anchors.at("x0_1").get<double>();
    m.head.x0_2 = anchors.at("x0_2").get<double>();
    m.head.x1_1 = anchors.at("x1_1").get<double>();
    m.head.x1_2 = anchors.at("x1_2").get<double>();
    if (doc.contains("data_digest")) {
      std::string hex = doc.at("data_digest").get<std::string>();
      if (hex.rfind("0x", 0) == 0)
        hex.erase(0, 2);
      std::size_t pos = 0;
      try {
        m.data_digest = std::stoull(hex, &pos, 16);
      } catch (const std::exception &) {
        pos = std::string::npos;
      }
      if (hex.empty() || pos != hex.size())
        throw DataError("model document: malformed data_digest '" + hex + "'");
    }
    return m;
  } catch (const nlohmann::json::exception &e) {
    throw DataError(std::string("model document: ") + e.what());
  }
}

std::string render_comparison(const Series &s,
                              const std::vector<ExperimentEntry> &entries,
                              const SplitSpec &split, ReportFormat format,
                              const std::string &dataset_name) {
  split.validate(s.size());
  switch (format) {
  case ReportFormat::Table:
    return render_table(s, entries, split, dataset_name);
  case ReportFormat::Csv:
    return render_csv(s, entries, split);
  case ReportFormat::Json:
    return render_json(s, entries, split, dataset_name);
  }
  throw std::logic_error("unreachable report format");
}

std::string phi_csv(const std::vector<double> &a_grid) {
  std::string out = "a,phi\n";
  for (double a : a_grid)
    out += fmt("%.2f", a) + "," + sci5(phi(a)) + "\n";
  return out;
}

std::string epsilon_csv(const EpsilonGridResult &grid) {
  std::string out = "r,q,epsilon\n";
  for (const EpsilonCell &c : grid.cells) {
    out += num17(c.r) + "," + num17(c.q) + ",";
    out += std::isnan(c.epsilon) ? "nan" : num17(c.epsilon);
    out += "\n";
  }
  out += "# n = " + std::to_string(grid.n) + "\n";
  out += "# q exclusion radius around 1 = " + data_cell(grid.q_exclusion_radius) + "\n";
  if (grid.seeded)
    out += "# seed = " + std::to_string(grid.seed) +
           ", r drawn uniformly from [1, 15]\n";
  out += "# failures = " + std::to_string(grid.failures) + "\n";
  const EpsilonCell top = grid.max_cell();
  out += "# max epsilon = " + (std::isnan(top.epsilon)
                                   ? std::string("nan")
                                   : sci5(top.epsilon));
  if (!std::isnan(top.epsilon))
    out += " at r = " + fmt("%.6g", top.r) + ", q = " + fmt("%.6g", top.q);
  out += "\n";
  return out;
}

std::string epsilon_summary(const EpsilonGridResult &grid) {
  std::string out;
  out += "parameter recovery sweep: " + std::to_string(grid.cells.size()) +
         " cells, series length n = " + std::to_string(grid.n) + "\n";
  if (grid.seeded) {
    const std::size_t draws =
        grid.q_values.empty() ? 0 : grid.cells.size() / grid.q_values.size();
    out += "  r: " + std::to_string(draws) +
           " seeded draws per q from [1, 15], seed " +
           std::to_string(grid.seed) + "\n";
  } else if (!grid.r_values.empty()) {
    out += "  r: " + std::to_string(grid.r_values.size()) +
           " grid points in [" + fmt("%.6g", grid.r_values.front()) + ", " +
           fmt("%.6g", grid.r_values.back()) + "]\n";
  }
  if (!grid.q_values.empty())
    out += "  q: " + std::to_string(grid.q_values.size()) +
           " grid points in [" + fmt("%.6g", grid.q_values.front()) + ", " +
           fmt("%.6g", grid.q_values.back()) + "], excluding (" +
           fmt("%.6g", 1.0 - grid.q_exclusion_radius) + ", " +
           fmt("%.6g", 1.0 + grid.q_exclusion_radius) + ")\n";
  const EpsilonCell top = grid.max_cell();
  if (std::isnan(top.epsilon)) {
    out += "  max epsilon: nan (no cell converged)\n";
  } else {
    out += "  max epsilon: " + sci5(top.epsilon) + " at r = " +
           fmt("%.6g", top.r) + ", q = " + fmt("%.6g", top.q) + "\n";
  }
  out += "  fit failures: " + std::to_string(grid.failures) + "\n";
  return out;
}

} // namespace greysd
