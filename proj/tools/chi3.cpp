#include <iostream>
#include <fstream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chi3/a3.hpp"
#include "chi3/lowgenus.hpp"
#include "chi3/partition.hpp"
#include "chi3/strata.hpp"
#include "chi3/verify.hpp"

namespace {

using namespace chi3;

// Command-line mistakes that are not CLI11 parse errors: bad space names,
// shape constraints, unreadable extension files.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const std::set<std::string> kSpaces = {"m3", "m3-nonhyp", "h3", "a3", "a1", "m2", "a111"};

bool needs_m2(const std::string& space) { return space == "a3" || space == "m2"; }

H3Provider make_h3(const std::string& path) {
  H3Provider h3;
  if (!path.empty()) {
    try {
      h3.load_extension(path);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }
  return h3;
}

std::optional<M2Provider> make_m2(const std::string& space, const std::string& path) {
  if (!needs_m2(space)) return std::nullopt;
  std::optional<M2Provider> m2 = bootstrap_m2(default_m2_anchors());
  if (!path.empty()) {
    try {
      m2->load_extension(path);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }
  return m2;
}

void check_space(const std::string& space) {
  if (!kSpaces.count(space)) throw UsageError("unknown space " + space);
}

void check_shape(const std::string& space, const Partition& lam) {
  if (space == "a1" && (lam.p[1] != 0 || lam.p[2] != 0))
    throw UsageError("space a1 takes weights k,0,0");
  if (space == "m2" && lam.p[2] != 0) throw UsageError("space m2 takes weights a,b,0");
}

Integer evaluate(const std::string& space, const Partition& lam, const H3Provider& h3,
                 const std::optional<M2Provider>& m2) {
  if (space == "m3") return euler_m3(lam, h3);
  if (space == "m3-nonhyp") return euler_m3_nonhyp(lam);
  if (space == "h3") return h3.lookup(lam);
  if (space == "a3") return euler_a3(lam, h3, *m2).total;
  if (space == "a1") return euler_a1(lam.p[0]);
  if (space == "m2") return m2->lookup(Partition2(lam.p[0], lam.p[1]));
  if (space == "a111") return euler_a111(lam);
  throw std::logic_error("unhandled space " + space);
}

// Tables list only rows where the value can be nonzero: odd weight is kept
// for the curve spaces (m3, m3-nonhyp) and dropped for the abelian ones,
// where -1 acts on every fiber. a1 and m2 rows are the partitions that fit
// in one or two parts.
bool table_emits(const std::string& space, const Partition& lam) {
  if (space == "a1" && (lam.p[1] != 0 || lam.p[2] != 0)) return false;
  if (space == "m2" && lam.p[2] != 0) return false;
  if (space == "m3" || space == "m3-nonhyp") return true;
  return lam.weight() % 2 == 0;
}

struct TableRow {
  Partition lam{0, 0, 0};
  std::optional<Integer> value;
  std::string error;
};

std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

void render_csv(std::ostream& os, const std::string& space, const std::vector<TableRow>& rows) {
  os << "lambda1,lambda2,lambda3,space,value\n";
  for (const auto& r : rows) {
    os << r.lam.p[0] << ',' << r.lam.p[1] << ',' << r.lam.p[2] << ',' << space << ',';
    if (r.value)
      os << *r.value;
    else
      os << "NA";
    os << '\n';
  }
}

void render_json(std::ostream& os, const std::string& space, const std::vector<TableRow>& rows) {
  os << "[\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& r = rows[i];
    os << "  {\"lambda\": [" << r.lam.p[0] << ", " << r.lam.p[1] << ", " << r.lam.p[2]
       << "], \"space\": \"" << space << "\", \"value\": ";
    if (r.value)
      os << *r.value;
    else
      os << "null, \"error\": \"" << json_escape(r.error) << "\"";
    os << '}' << (i + 1 < rows.size() ? "," : "") << '\n';
  }
  os << "]\n";
}

int cmd_eval(const std::string& space, const std::string& lambda_str, bool breakdown,
             const std::string& h3_path, const std::string& m2_path) {
  check_space(space);
  if (breakdown && space != "a3") throw UsageError("--breakdown applies to space a3 only");
  Partition lam = parse_partition(lambda_str);
  check_shape(space, lam);
  H3Provider h3 = make_h3(h3_path);
  std::optional<M2Provider> m2 = make_m2(space, m2_path);
  if (breakdown) {
    A3Breakdown b = euler_a3(lam, h3, *m2);
    std::cout << "m3-nonhyp " << b.m30_term << "\nh3 " << b.h3_term << "\nm2-a1 "
              << b.kunneth_term << "\na111 " << b.a111_term << "\ntotal " << b.total << "\n";
  } else {
    std::cout << evaluate(space, lam, h3, m2) << "\n";
  }
  return 0;
}

int cmd_table(const std::string& space, int max_weight, const std::string& format, bool strict,
              const std::string& h3_path, const std::string& m2_path) {
  check_space(space);
  if (format != "csv" && format != "json") throw UsageError("--format must be csv or json");
  if (max_weight < 0) throw UsageError("--max-weight must be nonnegative");
  H3Provider h3 = make_h3(h3_path);
  std::optional<M2Provider> m2 = make_m2(space, m2_path);

  std::vector<TableRow> rows;
  for (const Partition& lam : partitions_up_to(max_weight)) {
    if (!table_emits(space, lam)) continue;
    TableRow row;
    row.lam = lam;
    try {
      row.value = evaluate(space, lam, h3, m2);
    } catch (const CoverageError& e) {
      if (strict) throw;
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }

  if (format == "csv")
    render_csv(std::cout, space, rows);
  else
    render_json(std::cout, space, rows);
  return 0;
}

int cmd_verify(const std::string& skip) {
  if (!skip.empty() && skip != "bootstrap")
    throw UsageError("--skip recognizes only: bootstrap");
  int failed = 0, passed = 0, skipped = 0;
  for (const CheckResult& r : run_verification(skip == "bootstrap")) {
    if (r.skipped) {
      ++skipped;
      std::cout << "[SKIP] " << r.name << ": " << r.detail << "\n";
    } else if (r.passed) {
      ++passed;
      std::printf("[PASS] %s (%.2f s)\n", r.name.c_str(), r.seconds);
    } else {
      ++failed;
      std::printf("[FAIL] %s (%.2f s): %s\n", r.name.c_str(), r.seconds, r.detail.c_str());
    }
  }
  std::cout << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
  return failed == 0 ? 0 : 3;
}

int cmd_bootstrap(const std::string& out_path) {
  M2Provider m2 = bootstrap_m2(default_m2_anchors());
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw UsageError("cannot open " + out_path + " for writing");
  }
  std::ostream& os = out_path.empty() ? std::cout : file;
  os << "# mu1,mu2,value\n";
  for (int w = 0; w <= 10; w += 2)
    for (const Partition2& mu : partitions2_of_weight(w))
      os << mu.p[0] << ',' << mu.p[1] << ',' << m2.lookup(mu) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Euler characteristics of symplectic local systems on genus-3 moduli spaces"};
  app.require_subcommand(1);

  std::string space, lambda_str, h3_path, m2_path, format = "csv", out_path, skip;
  bool breakdown = false, strict = false;
  int max_weight = 0;

  const std::string space_help = "one of m3, m3-nonhyp, h3, a3, a1, m2, a111";

  CLI::App* eval = app.add_subcommand("eval", "Evaluate one local system on one space");
  eval->add_option("space", space, space_help)->required();
  eval->add_option("lambda", lambda_str, "highest weight as a,b,c with a >= b >= c >= 0")
      ->required();
  eval->add_flag("--breakdown", breakdown, "print the per-locus terms (a3 only)");
  eval->add_option("--h3-table", h3_path, "hyperelliptic extension file (lambda1,lambda2,lambda3,value)");
  eval->add_option("--m2-table", m2_path, "genus-2 extension file (mu1,mu2,value)");

  CLI::App* table = app.add_subcommand("table", "Print values for all weights up to a bound");
  table->add_option("space", space, space_help)->required();
  table->add_option("--max-weight", max_weight, "largest |lambda| to include")->required();
  table->add_option("--format", format, "csv (default) or json");
  table->add_flag("--strict", strict, "abort on missing data instead of annotating the row");
  table->add_option("--h3-table", h3_path, "hyperelliptic extension file");
  table->add_option("--m2-table", m2_path, "genus-2 extension file");

  CLI::App* verify = app.add_subcommand("verify", "Run the built-in consistency suite");
  verify->add_option("--skip", skip, "stage to leave out (only: bootstrap)");

  CLI::App* boot = app.add_subcommand("bootstrap-m2",
                                      "Recover the genus-2 table and print it as an extension file");
  boot->add_option("--out", out_path, "write to this file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (eval->parsed()) return cmd_eval(space, lambda_str, breakdown, h3_path, m2_path);
    if (table->parsed()) return cmd_table(space, max_weight, format, strict, h3_path, m2_path);
    if (verify->parsed()) return cmd_verify(skip);
    if (boot->parsed()) return cmd_bootstrap(out_path);
    return 1;
  } catch (const CoverageError& e) {
    std::cerr << "coverage error: " << e.what() << "\n";
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
