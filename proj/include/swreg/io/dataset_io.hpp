#pragma once

// Dataset files.
//
// CSV: header `x1,...,xd,y`, one row per point, shortest round-trip decimals.
// JSON: {"format": "swreg-dataset", "d", "N", "x": [[...]], "y": [...],
//        optional "n", "seed", "ground_truth": {"models", "labels"}}.
// Labels in files are 1-based.

#include "swreg/core.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

namespace swreg {

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DatasetFile {
  Dataset data;
  std::optional<int> n;
  std::optional<std::uint64_t> seed;
  std::optional<ModelSet> truth_models;
  std::optional<std::vector<int>> truth_labels;  // 0-based in memory
};

inline std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

inline void write_csv(std::ostream& out, const Dataset& data) {
  for (Index k = 0; k < data.dim(); ++k) out << 'x' << (k + 1) << ',';
  out << "y\n";
  for (Index i = 0; i < data.size(); ++i) {
    for (Index k = 0; k < data.dim(); ++k) out << format_double(data.x()(i, k)) << ',';
    out << format_double(data.y()(i)) << '\n';
  }
}

namespace detail {

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::stringstream in(line);
  while (std::getline(in, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  for (auto& f : out) {
    const auto a = f.find_first_not_of(" \t\r");
    const auto b = f.find_last_not_of(" \t\r");
    f = a == std::string::npos ? std::string() : f.substr(a, b - a + 1);
  }
  return out;
}

inline double parse_number(const std::string& field, std::size_t row, std::size_t column) {
  double v = 0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (!field.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (field.empty() || ec != std::errc() || ptr != last || !std::isfinite(v))
    throw FormatError("row " + std::to_string(row) + ", column " + std::to_string(column) +
                      ": '" + field + "' is not a finite number");
  return v;
}

}  // namespace detail

/// Rows are numbered from 1 after the header.
inline Dataset read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError("empty CSV input");
  const auto header = detail::split_csv_line(line);
  if (header.size() < 2 || header.back() != "y")
    throw FormatError("CSV header must read x1,...,xd,y");
  for (std::size_t k = 0; k + 1 < header.size(); ++k)
    if (header[k] != "x" + std::to_string(k + 1))
      throw FormatError("CSV header column " + std::to_string(k + 1) + " is '" + header[k] +
                        "', expected 'x" + std::to_string(k + 1) + "'");
  const std::size_t d = header.size() - 1;

  std::vector<double> values;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    ++row;
    const auto fields = detail::split_csv_line(line);
    if (fields.size() != d + 1)
      throw FormatError("row " + std::to_string(row) + " has " + std::to_string(fields.size()) +
                        " fields, expected " + std::to_string(d + 1));
    for (std::size_t c = 0; c < fields.size(); ++c)
      values.push_back(detail::parse_number(fields[c], row, c + 1));
  }
  if (row == 0) throw FormatError("CSV has no data rows");
  Matrix x(static_cast<Index>(row), static_cast<Index>(d));
  Vector y(static_cast<Index>(row));
  for (std::size_t i = 0; i < row; ++i) {
    for (std::size_t k = 0; k < d; ++k) x(static_cast<Index>(i), static_cast<Index>(k)) = values[i * (d + 1) + k];
    y(static_cast<Index>(i)) = values[i * (d + 1) + d];
  }
  return Dataset(std::move(x), std::move(y));
}

inline nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Matrix matrix_from_json(const nlohmann::json& j, const std::string& what) {
  if (!j.is_array() || j.empty() || !j.front().is_array())
    throw FormatError(what + " must be a non-empty array of arrays");
  const std::size_t cols = j.front().size();
  Matrix m(static_cast<Index>(j.size()), static_cast<Index>(cols));
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw FormatError(what + " row " + std::to_string(i + 1) + " has " +
                        std::to_string(j[i].size()) + " entries, expected " + std::to_string(cols));
    for (std::size_t k = 0; k < cols; ++k) {
      if (!j[i][k].is_number())
        throw FormatError(what + " row " + std::to_string(i + 1) + " entry " +
                          std::to_string(k + 1) + " is not a number");
      m(static_cast<Index>(i), static_cast<Index>(k)) = j[i][k].get<double>();
    }
  }
  return m;
}

inline std::vector<int> labels_to_json_form(const std::vector<int>& q) {
  std::vector<int> out(q);
  for (auto& v : out) ++v;
  return out;
}

inline nlohmann::json dataset_to_json(const DatasetFile& f) {
  nlohmann::json j;
  j["format"] = "swreg-dataset";
  j["d"] = f.data.dim();
  j["N"] = f.data.size();
  j["x"] = matrix_to_json(f.data.x());
  j["y"] = std::vector<double>(f.data.y().data(), f.data.y().data() + f.data.size());
  if (f.n) j["n"] = *f.n;
  if (f.seed) j["seed"] = *f.seed;
  if (f.truth_models || f.truth_labels) {
    auto& gt = j["ground_truth"];
    if (f.truth_models) gt["models"] = matrix_to_json(f.truth_models->w());
    if (f.truth_labels) gt["labels"] = labels_to_json_form(*f.truth_labels);
  }
  return j;
}

inline DatasetFile dataset_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("x") || !j.contains("y"))
    throw FormatError("dataset JSON needs 'x' and 'y'");
  Matrix x = matrix_from_json(j["x"], "x");
  const auto& jy = j["y"];
  if (!jy.is_array() || static_cast<Index>(jy.size()) != x.rows())
    throw FormatError("'y' must be an array with one entry per row of 'x'");
  Vector y(x.rows());
  for (std::size_t i = 0; i < jy.size(); ++i) {
    if (!jy[i].is_number()) throw FormatError("y entry " + std::to_string(i + 1) + " is not a number");
    y(static_cast<Index>(i)) = jy[i].get<double>();
  }
  if (j.contains("d") && j["d"].get<Index>() != x.cols())
    throw FormatError("'d' does not match the width of 'x'");
  DatasetFile f{Dataset(std::move(x), std::move(y)), {}, {}, {}, {}};
  if (j.contains("n")) f.n = j["n"].get<int>();
  if (j.contains("seed")) f.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("ground_truth")) {
    const auto& gt = j["ground_truth"];
    if (gt.contains("models")) f.truth_models = ModelSet(matrix_from_json(gt["models"], "ground_truth.models"));
    if (gt.contains("labels")) {
      std::vector<int> q = gt["labels"].get<std::vector<int>>();
      for (auto& v : q) --v;
      const int n = f.n ? *f.n : (f.truth_models ? f.truth_models->modes() : 1 + *std::max_element(q.begin(), q.end()));
      try {
        validate_labeling(q, n, f.data.size());
      } catch (const std::invalid_argument& e) {
        throw FormatError(std::string("ground_truth.labels: ") + e.what());
      }
      f.truth_labels = std::move(q);
    }
  }
  return f;
}

inline bool is_json_path(const std::string& path) {
  return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

inline DatasetFile load_dataset(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  if (is_json_path(path)) {
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw FormatError("'" + path + "': " + e.what());
    }
    return dataset_from_json(j);
  }
  return DatasetFile{read_csv(in), {}, {}, {}, {}};
}

inline void save_dataset(const std::string& path, const DatasetFile& f) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write '" + path + "'");
  if (is_json_path(path))
    out << dataset_to_json(f).dump(2) << '\n';
  else
    write_csv(out, f.data);
  if (!out) throw FormatError("error writing '" + path + "'");
}

}  // namespace swreg
