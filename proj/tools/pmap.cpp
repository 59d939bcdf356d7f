// pmap: command-line front end for the planar map library.

#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "pmap/bijections.hpp"
#include "pmap/counting.hpp"
#include "pmap/decomposition.hpp"
#include "pmap/enumeration.hpp"
#include "pmap/verify.hpp"

using namespace pmap;
using json = nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitUsage = 64;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// a library error tagged with the input position that caused it
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Located {
  Record record;
  std::string where;  // path:line of the record's first line
};

std::vector<Located> read_input(const std::string& path) {
  std::ifstream file;
  if (path != "-") {
    file.open(path);
    if (!file) throw UsageError("cannot open " + path);
  }
  std::istream& in = path == "-" ? std::cin : file;
  const std::string name = path == "-" ? "<stdin>" : path;
  std::vector<Located> out;
  std::string line, block;
  int line_no = 0, start = 0;
  auto flush = [&] {
    if (block.empty()) return;
    const std::string where = name + ":" + std::to_string(start);
    try {
      out.push_back({decode_record(block), where});
    } catch (const Error& e) {
      throw InputError(where + ": " + e.what());
    }
    block.clear();
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      flush();
      continue;
    }
    if (block.empty()) start = line_no;
    block += line + '\n';
  }
  flush();
  return out;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path != "-") {
      file_.open(path);
      if (!file_) throw UsageError("cannot write " + path);
    }
    out_ = path == "-" ? &std::cout : &file_;
  }
  std::ostream& operator*() { return *out_; }

 private:
  std::ofstream file_;
  std::ostream* out_;
};

template <typename F>
auto at(const Located& r, F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    throw InputError(r.where + ": " + e.what());
  }
}

void write_all(const std::string& path, const std::vector<Record>& records) {
  Output out(path);
  write_records(*out, records);
}

Record plain(const RootedMap& m) { return Record{m, {}, {}, {}}; }

std::vector<std::string> family_names() {
  return {"loopless", "nonseparable", "triangulation", "quad_triangulation", "irreducible"};
}

Record apply_one(const std::string& bijection, const Record& r) {
  if (bijection == "phi") return to_record(phi(from_record(r)));
  if (bijection == "psi") return to_record(psi(from_record(r)));
  if (bijection == "phi_prime") return to_record(phi_prime(from_record(r)));
  if (bijection == "psi_prime") return to_record(psi_prime(transversal_from_record(r)));
  if (bijection == "f1") return plain(f1(r.map));
  if (bijection == "f1inv") return plain(f1_inv(r.map));
  if (bijection == "f1_tilde") return plain(f1_tilde(r.map));
  if (bijection == "f2") return plain(f2(r.map));
  return plain(f2_inv(r.map));
}

std::string describe(const Record& r) {
  std::ostringstream s;
  if (r.color) {
    const auto x = transversal_from_record(r);
    int right = 0;
    for (const auto& c : alt_four_cycles(x)) right += c.kind == CycleKind::right;
    s << "transversal structure: " << x.inner_vertex_count() << " inner vertices, "
      << (is_N_avoiding_transversal(x) ? "N-avoiding" : "has an N-pattern") << ", " << right
      << " right alternating 4-cycles";
    return s.str();
  }
  if (r.orient || r.poles) {
    const auto o = from_record(r);
    s << (is_bipolar_poset(o) ? "plane bipolar poset" : "plane bipolar orientation") << ": " << o.edge_count()
      << " edges, " << o.vertex_count() - 2 << " non-special vertices, "
      << (is_N_avoiding(o) ? "N-avoiding" : "has an N-pattern") << ", " << find_LOPs(o).size() << " LOPs";
    return s.str();
  }
  const auto f = classify(r.map);
  s << "rooted map: " << r.map.edge_count() << " edges";
  const std::pair<bool, const char*> flags[] = {{f.loopless, "loopless"},
                                                {f.nonseparable, "nonseparable"},
                                                {f.triangulation, "triangulation"},
                                                {f.quad_triangulation, "quad_triangulation"},
                                                {f.irreducible && f.quad_triangulation, "irreducible"}};
  for (auto [on, name] : flags)
    if (on) s << ", " << name;
  return s.str();
}

int print_verify(const std::vector<CheckRow>& rows, const std::string& format) {
  bool failed = false;
  for (const auto& r : rows) failed |= r.outcome == Outcome::fail;
  if (format == "json") {
    json j = json::array();
    for (const auto& r : rows)
      j.push_back({{"criterion", r.criterion},
                   {"check", r.check},
                   {"n", r.size},
                   {"observed", r.observed},
                   {"expected", r.expected},
                   {"status", to_string(r.outcome)}});
    std::cout << j.dump(2) << '\n';
    return failed ? kExitFailed : kExitOk;
  }
  std::size_t wc = 5, wo = 8, we = 8;
  for (const auto& r : rows) {
    wc = std::max(wc, r.check.size());
    wo = std::max(wo, r.observed.size());
    we = std::max(we, r.expected.size());
  }
  auto line = [&](const std::string& c, const std::string& check, const std::string& n, const std::string& obs,
                  const std::string& exp, const std::string& status) {
    std::cout << std::left << std::setw(3) << c << "  " << std::setw(static_cast<int>(wc)) << check << "  "
              << std::setw(2) << n << "  " << std::setw(static_cast<int>(wo)) << obs << "  "
              << std::setw(static_cast<int>(we)) << exp << "  " << status << '\n';
  };
  line("#", "check", "n", "observed", "expected", "status");
  for (const auto& r : rows)
    line(std::to_string(r.criterion), r.check, std::to_string(r.size), r.observed, r.expected, to_string(r.outcome));
  int pass = 0, fail = 0, skip = 0;
  for (int c = 1; c <= kCriteria; ++c) {
    const Outcome o = criterion_outcome(rows, c);
    (o == Outcome::pass ? pass : o == Outcome::fail ? fail : skip)++;
  }
  std::cout << "\ncriteria: " << pass << " passed, " << fail << " failed, " << skip << " skipped\n";
  return failed ? kExitFailed : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rooted planar maps, bipolar orientations and transversal structures"};
  app.require_subcommand(1);

  auto* enumerate = app.add_subcommand("enumerate", "list every member of a family at one size");
  std::string family, out_path = "-";
  int size = 0, jobs = 1;
  bool count_only = false;
  enumerate->add_option("--family", family)->required()->check(CLI::IsMember(family_names()));
  enumerate->add_option("--size", size)->required()->check(CLI::NonNegativeNumber);
  enumerate->add_flag("--count-only", count_only);
  enumerate->add_option("--out", out_path);
  enumerate->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

  auto* apply = app.add_subcommand("apply", "apply a bijection to every record");
  std::string bijection, in_path = "-";
  apply->add_option("--bijection", bijection)
      ->required()
      ->check(CLI::IsMember({"phi", "psi", "phi_prime", "psi_prime", "f1", "f1inv", "f1_tilde", "f2", "f2inv"}));
  apply->add_option("--in", in_path);
  apply->add_option("--out", out_path);

  auto* minimal = app.add_subcommand("minimal", "minimal bipolar orientation or transversal structure");
  std::string structure;
  minimal->add_option("--structure", structure)->required()->check(CLI::IsMember({"bipolar", "transversal"}));
  minimal->add_option("--in", in_path);
  minimal->add_option("--out", out_path);

  auto* decompose = app.add_subcommand("decompose", "block or separating-triangle decomposition");
  std::string kind;
  decompose->add_option("--kind", kind)->required()->check(CLI::IsMember({"block", "tri"}));
  decompose->add_option("--in", in_path);
  decompose->add_option("--out", out_path);

  auto* count = app.add_subcommand("count", "evaluate a closed-form count");
  std::string formula;
  int n = 0;
  std::optional<int> i;
  count->add_option("--family", formula)
      ->required()
      ->check(CLI::IsMember({"theta_ni", "theta_n", "lambda_ni", "lambda_n", "a_n"}));
  count->add_option("--n", n)->required();
  count->add_option("--i", i);

  auto* check = app.add_subcommand("check", "validate decorated records and name their structure");
  std::string format = "text";
  check->add_option("--in", in_path);
  check->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "run the acceptance suite");
  int max_size = 5;
  verify->add_option("--max-size", max_size)->check(CLI::NonNegativeNumber);
  verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*enumerate) {
      const auto maps = enumerate_family(*parse_family(family), size, jobs);
      if (count_only) {
        Output out(out_path);
        *out << maps.size() << '\n';
      } else {
        std::vector<Record> records;
        for (const auto& m : maps) records.push_back(plain(m));
        write_all(out_path, records);
      }
    } else if (*apply) {
      std::vector<Record> records;
      for (const auto& r : read_input(in_path)) records.push_back(at(r, [&] { return apply_one(bijection, r.record); }));
      write_all(out_path, records);
    } else if (*minimal) {
      std::vector<Record> records;
      for (const auto& r : read_input(in_path))
        records.push_back(at(r, [&] {
          return structure == "bipolar" ? to_record(minimal_bipolar(r.record.map))
                                        : to_record(minimal_transversal(r.record.map));
        }));
      write_all(out_path, records);
    } else if (*decompose) {
      Output out(out_path);
      bool first = true;
      for (const auto& r : read_input(in_path)) {
        std::vector<Record> records;
        std::string header;
        at(r, [&] {
          if (kind == "block") {
            const auto d = block_decompose(r.record.map);
            header = "tuple " + std::to_string(d.components.size());
            records.push_back(plain(d.core));
            for (const auto& c : d.components) records.push_back(plain(c));
          } else {
            const auto d = tri_decompose(r.record.map);
            header = "tuple " + std::to_string(d.components.size()) + " " + to_string(d.kind);
            records.push_back(plain(d.core));
            for (const auto& c : d.components) records.push_back(plain(c));
          }
          return 0;
        });
        if (!first) *out << '\n';
        first = false;
        *out << header << "\n\n";
        write_records(*out, records);
      }
    } else if (*count) {
      if ((formula == "theta_ni" || formula == "lambda_ni") != i.has_value())
        throw UsageError(formula + (i ? " takes no --i" : " needs --i"));
      std::cout << count_formula(*parse_formula(formula), n, i) << '\n';
    } else if (*check) {
      json j = json::array();
      int status = kExitOk;
      for (const auto& r : read_input(in_path)) {
        std::string text;
        bool valid = true;
        try {
          text = describe(r.record);
        } catch (const Error& e) {
          valid = false;
          status = kExitInvalid;
          text = std::string("invalid: ") + e.what();
        }
        if (format == "json") j.push_back({{"where", r.where}, {"valid", valid}, {"structure", text}});
        else std::cout << r.where << ": " << text << '\n';
      }
      if (format == "json") std::cout << j.dump(2) << '\n';
      return status;
    } else if (*verify) {
      return print_verify(run_acceptance({max_size, jobs}), format);
    }
  } catch (const UsageError& e) {
    std::cerr << "pmap: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    std::cerr << "pmap: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitOk;
}
