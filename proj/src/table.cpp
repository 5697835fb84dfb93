#include "exactq/table.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <limits>
#include <mutex>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "exactq/complexity.hpp"
#include "exactq/nonadaptive.hpp"

namespace exactq::table {

std::string format_entry(double raw, bool star) {
  if (std::isnan(raw)) return "-";
  std::string out;
  if (raw > 0.999) {
    out = "1";
  } else {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%.3f", raw);
    out = buf;
  }
  if (star) out += "*";
  return out;
}

std::string detect_name(const BooleanFunction& f) {
  const int n = f.arity();
  auto equals = [&](const BooleanFunction& g) { return f == g; };
  using boolfn::Family;
  using boolfn::from_family;
  if (f.is_constant()) return f.value_at(0) ? "1" : "0";
  if (equals(from_family({Family::kThreshold, n, {}}, n))) return "AND";
  if (equals(from_family({Family::kThreshold, 1, {}}, n))) return "OR";
  if (equals(from_family({Family::kParity, 0, {}}, n))) return n == 2 ? "XOR" : "PARITY";
  if (equals(from_family({Family::kMaj, 0, {}}, n))) return "MAJ";
  if (equals(from_family({Family::kNae, 0, {}}, n))) return "NAE";
  for (int k = 0; k <= n; ++k)
    if (equals(from_family({Family::kExact, k, {}}, n))) return "EXACT_" + std::to_string(k);
  for (int k = 2; k < n; ++k)
    if (equals(from_family({Family::kThreshold, k, {}}, n))) return "Th_" + std::to_string(k);
  if (n == 3 && equals(from_family({Family::kSel, 0, {}}, 3))) return "SEL";
  if (f.is_symmetric()) {
    std::string label = "SYM(";
    for (int w = 0; w <= n; ++w) {
      int idx = w ? ((1 << w) - 1) << (n - w) : 0;
      label += f.value_at(idx) ? '1' : '0';
      if (w < n) label += ',';
    }
    return label + ")";
  }
  return "";
}

namespace {

std::string sym_label_of(const BooleanFunction& f) {
  std::string label = "(";
  for (int w = 0; w <= f.arity(); ++w) {
    int idx = w ? ((1 << w) - 1) << (f.arity() - w) : 0;
    label += f.value_at(idx) ? '1' : '0';
    if (w < f.arity()) label += ',';
  }
  return label + ")";
}

}  // namespace

TableRow analyze_row(const BooleanFunction& f, const SweepOptions& opt) {
  TableRow row;
  row.id = f.id_string();
  row.name = detect_name(f);
  if (f.is_symmetric()) row.sym_label = sym_label_of(f);
  row.n = f.arity();
  auto report = complexity::analyze(f);
  row.f2_degree = report.f2_degree;
  row.depth = report.depth;
  row.q_na = na::q_na(f);

  int t_max = opt.t_max > 0 ? opt.t_max : std::max(1, f.arity() - 1);
  t_max = std::min(t_max, f.arity());
  bool exact_already = false;
  for (int t = 1; t <= t_max; ++t) {
    if (f.is_constant()) {
      row.success.push_back(1.0);
      continue;
    }
    if (exact_already) {
      // success is monotone in t; once above 0.9995 the remaining entries
      // print as 1 either way
      row.success.push_back(1.0);
      continue;
    }
    try {
      auto sol = sdp::solve_min_error(sdp::build_instance(f, t), opt.solver);
      row.success.push_back(1.0 - sol.eps);
      if (1.0 - sol.eps > 0.9995) exact_already = true;
    } catch (const SolverFailure&) {
      row.success.push_back(std::numeric_limits<double>::quiet_NaN());
    }
  }
  return row;
}

namespace {

std::vector<TableRow> sweep_rows(const std::vector<BooleanFunction>& fns,
                                 const SweepOptions& opt) {
  std::vector<TableRow> rows(fns.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex io;
  auto worker = [&] {
    for (;;) {
      std::size_t k = next.fetch_add(1);
      if (k >= fns.size()) return;
      rows[k] = analyze_row(fns[k], opt);
      std::size_t d = done.fetch_add(1) + 1;
      if (opt.progress) {
        std::lock_guard<std::mutex> lock(io);
        std::fprintf(stderr, "[%zu/%zu] id=%s\n", d, fns.size(), rows[k].id.c_str());
      }
    }
  };
  int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return rows;
}

}  // namespace

std::vector<TableRow> sweep_classes(int n, const SweepOptions& opt) {
  std::vector<BooleanFunction> fns;
  for (std::uint64_t id : boolfn::npn_class_representatives(n))
    fns.push_back(BooleanFunction::from_id(n, id));
  return sweep_rows(fns, opt);
}

std::vector<TableRow> sweep_symmetric(int n, const SweepOptions& opt) {
  if (n < 1 || n > 6) throw CapacityError("symmetric sweep supported for 1 <= n <= 6");
  // canonical = lexicographically least among the vector, its reversal,
  // complement, and reversed complement; constants are skipped
  std::vector<std::vector<std::uint8_t>> vecs;
  for (int bits = 0; bits < (1 << (n + 1)); ++bits) {
    std::vector<std::uint8_t> c(n + 1);
    for (int w = 0; w <= n; ++w) c[w] = (bits >> (n - w)) & 1;
    if (std::all_of(c.begin(), c.end(), [&](int v) { return v == c[0]; })) continue;
    auto rev = c;
    std::reverse(rev.begin(), rev.end());
    auto comp = c, revcomp = rev;
    for (auto& v : comp) v ^= 1;
    for (auto& v : revcomp) v ^= 1;
    if (c <= rev && c <= comp && c <= revcomp) vecs.push_back(c);
  }
  std::sort(vecs.begin(), vecs.end());
  std::vector<BooleanFunction> fns;
  for (const auto& c : vecs)
    fns.push_back(boolfn::from_family({boolfn::Family::kSym, 0, c}, n));
  return sweep_rows(fns, opt);
}

namespace {

std::vector<std::string> row_cells(const TableRow& row) {
  std::vector<std::string> cells;
  cells.push_back(row.id);
  cells.push_back(row.sym_label.empty() ? row.name : row.sym_label);
  for (std::size_t t = 0; t < row.success.size(); ++t)
    cells.push_back(format_entry(row.success[t], row.q_na <= static_cast<int>(t) + 1));
  cells.push_back(std::to_string(row.f2_degree));
  cells.push_back(std::to_string(row.depth));
  cells.push_back(std::to_string(row.q_na));
  return cells;
}

std::vector<std::string> header_cells(const std::vector<TableRow>& rows) {
  std::vector<std::string> cells{"id", "function"};
  std::size_t t_max = 0;
  for (const auto& row : rows) t_max = std::max(t_max, row.success.size());
  for (std::size_t t = 1; t <= t_max; ++t) cells.push_back(std::to_string(t) + "q");
  cells.push_back("f2deg");
  cells.push_back("D");
  cells.push_back("qna");
  return cells;
}

}  // namespace

std::string render_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << cells[i];
    os << "\n";
  };
  emit(header_cells(rows));
  for (const auto& row : rows) emit(row_cells(row));
  return os.str();
}

std::string render_markdown(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& cells) {
    os << "|";
    for (const auto& c : cells) os << " " << c << " |";
    os << "\n";
  };
  auto head = header_cells(rows);
  emit(head);
  os << "|";
  for (std::size_t i = 0; i < head.size(); ++i) os << "---|";
  os << "\n";
  for (const auto& row : rows) emit(row_cells(row));
  return os.str();
}

std::string render_json(const std::vector<TableRow>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json j;
    j["id"] = row.id;
    j["n"] = row.n;
    if (!row.name.empty()) j["name"] = row.name;
    if (!row.sym_label.empty()) j["sym"] = row.sym_label;
    nlohmann::json raw = nlohmann::json::array();
    nlohmann::json printed = nlohmann::json::array();
    for (std::size_t t = 0; t < row.success.size(); ++t) {
      if (std::isnan(row.success[t]))
        raw.push_back(nullptr);
      else
        raw.push_back(row.success[t]);
      printed.push_back(format_entry(row.success[t], row.q_na <= static_cast<int>(t) + 1));
    }
    j["success"] = std::move(raw);
    j["entries"] = std::move(printed);
    j["f2_degree"] = row.f2_degree;
    j["depth"] = row.depth;
    j["q_na"] = row.q_na;
    arr.push_back(std::move(j));
  }
  return arr.dump(2);
}

}  // namespace exactq::table
