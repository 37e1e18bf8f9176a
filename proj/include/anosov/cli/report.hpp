#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "anosov/io/json.hpp"

namespace anosov {

enum class RowMethod { Certificate, Obstruction, Theorem };

struct ReportRow {
  std::string key;
  std::string name;
  std::string real_completion;
  std::size_t dim = 0;
  std::string type;
  std::string pfaffian;
  bool expected_anosov = false;
  RowMethod method = RowMethod::Theorem;
  std::string verdict;  // PASS, OBSTRUCTED, or "expected by theorem, not mechanized"
  std::optional<std::pair<int, int>> signature;
  std::optional<std::pair<int, int>> expected_signature;
  bool agrees = false;
  std::string note;
  Json evidence;
};

struct ReportBundle {
  std::vector<ReportRow> rows;
  bool all_agree() const;
};

/// Recomputes every row of the dimension <= 8 classification table for square-free k <= 10.
ReportBundle build_report();
Json to_json(const ReportBundle& r);
/// Fixed-width table, one line per row.
std::string render_table(const ReportBundle& r);

}  // namespace anosov
