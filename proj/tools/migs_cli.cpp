#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "migs/acceptance.hpp"
#include "migs/bounds.hpp"
#include "migs/certificate.hpp"
#include "migs/constructions.hpp"
#include "migs/family_search.hpp"
#include "migs/group_oracle.hpp"

using namespace migs;

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Range {
  int n = 0;
  int from = 0;
  int to = 0;

  std::pair<int, int> resolve() const {
    if (n != 0) {
      if (from != 0 || to != 0) throw UsageError("give either --n or --from/--to");
      return {n, n};
    }
    if (from == 0 || to == 0) throw UsageError("give --n or both --from and --to");
    if (from > to) throw UsageError("empty range: --from exceeds --to");
    return {from, to};
  }
};

void add_range(CLI::App* cmd, Range& r) {
  cmd->add_option("--n", r.n, "Degree");
  cmd->add_option("--from", r.from, "First degree of a range");
  cmd->add_option("--to", r.to, "Last degree of a range");
}

void write_out(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write '" + path + "'");
  file << text;
}

std::string join(const std::vector<Partition>& ps, const char* sep = "; ") {
  std::string s;
  for (std::size_t k = 0; k < ps.size(); ++k) s += (k ? sep : "") + ps[k].to_string();
  return s;
}

void print_checks(std::ostream& out, const Certificate& cert) {
  for (const auto& c : cert.checks) {
    out << "  " << (c.passed ? "ok   " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << ": " << c.detail;
    out << "\n";
  }
}

void print_family(std::ostream& out, const XFamily& xf, const FamilyCertificate& cert) {
  out << "n = " << xf.n << ", " << xf.members.size() << " members (" << to_string(xf.repair_case) << ")\n";
  for (std::size_t k = 0; k < xf.members.size(); ++k) {
    out << "  (" << xf.members[k].to_string() << ")  witness " << (k < cert.witnesses.size() ? cert.witnesses[k] : 0)
        << "\n";
  }
  print_checks(out, cert);
  out << (cert.passed() ? "all checks pass\n" : "verification failed\n");
}

int cmd_lemma(int i, int n, bool json) {
  const LemmaPartition lp = lemma_partition(i, n);
  const LemmaCertificate cert = verify_lemma(lp);
  if (json) {
    std::cout << lemma_certificate_json(lp, cert).dump(2) << "\n";
  } else {
    std::cout << "p_{" << i << "," << n << "} = (" << lp.p.to_string() << ")  case " << to_string(lp.case_tag) << "\n";
    std::cout << "missing partial sums:";
    for (int m : cert.missing) std::cout << " " << m;
    std::cout << "\n";
    print_checks(std::cout, cert);
  }
  return cert.passed() ? kOk : kFailed;
}

int cmd_construct(int n, bool json, const std::string& output) {
  const XFamily xf = build_x_family(n);
  const FamilyCertificate cert = verify_family(xf);
  std::ostringstream text;
  if (json) {
    text << family_certificate_json(xf, cert).dump(2) << "\n";
  } else {
    print_family(text, xf, cert);
  }
  write_out(text.str(), output);
  return cert.passed() ? kOk : kFailed;
}

int cmd_verify(const std::string& path, bool json) {
  std::ifstream file(path);
  if (!file) throw UsageError("cannot read '" + path + "'");
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(file);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("not JSON: ") + e.what());
  }
  const XFamily xf = family_from_json(doc);
  const FamilyCertificate cert = verify_family(xf);
  if (json) {
    std::cout << family_certificate_json(xf, cert).dump(2) << "\n";
  } else {
    print_family(std::cout, xf, cert);
  }
  return cert.passed() ? kOk : kFailed;
}

int cmd_search(const Range& range, const SearchOptions& options, const std::string& variant, bool json) {
  const auto [lo, hi] = range.resolve();
  if (options.cap <= 0) throw UsageError("--cap must be positive");
  if (options.threads <= 0) throw UsageError("--threads must be positive");
  nlohmann::json docs = nlohmann::json::array();
  bool ok = true;
  if (!json) {
    std::cout << (variant == "partial-sums" ? "n\tt_max\tfloor(n/2)\tnodes\tfamily\n" : "n\tt_max\tnodes\tclasses\n");
  }
  for (int n = lo; n <= hi; ++n) {
    if (variant == "partial-sums") {
      const SearchResult r = max_family(n, options);
      if (n >= 5) ok = ok && exceeds_half_minus_log2(r.t_max, n) && r.t_max <= n / 2;
      if (json) {
        docs.push_back(search_result_json(r));
      } else {
        std::cout << n << "\t" << r.t_max << "\t" << n / 2 << "\t" << r.nodes_explored << "\t" << join(r.optimal_family)
                  << "\n";
      }
    } else {
      SearchOptions o = options;
      if (o.cap == kDefaultEnumerationCap) o.cap = kDefaultDescriptorCap;
      const DescriptorSearchResult r = max_family_intransitive_imprimitive(n, o);
      if (json) {
        nlohmann::json d;
        d["n"] = r.n;
        d["t_max"] = r.t_max;
        d["classes"] = nlohmann::json::array();
        d["subgroups"] = nlohmann::json::array();
        for (const auto& c : r.classes) d["classes"].push_back(c.to_string());
        for (const auto& s : r.subgroups) d["subgroups"].push_back(s.to_string());
        d["nodes_explored"] = r.nodes_explored;
        d["exhaustive"] = r.exhaustive;
        docs.push_back(d);
      } else {
        std::cout << n << "\t" << r.t_max << "\t" << r.nodes_explored << "\t";
        for (std::size_t k = 0; k < r.classes.size(); ++k) {
          std::cout << (k ? "; " : "") << r.classes[k].to_string() << " / " << r.subgroups[k].to_string();
        }
        std::cout << "\n";
      }
    }
  }
  if (json) std::cout << (docs.size() == 1 ? docs[0] : docs).dump(2) << "\n";
  return ok ? kOk : kFailed;
}

int cmd_bounds(const Range& range, bool include_k1) {
  const auto [lo, hi] = range.resolve();
  if (lo < 2) throw UsageError("bounds need n >= 2");
  std::cout << "n\tdelta\ta\tb\tc\tlower\tupper\ttable1\n";
  for (int n = lo; n <= hi; ++n) {
    const BoundReport r = bound_report(static_cast<u64>(n), include_k1);
    std::cout << n << "\t" << r.delta << "\t" << r.a << "\t" << (include_k1 ? r.b_with_k1 : r.b) << "\t" << r.c << "\t"
              << r.lower << "\t" << r.upper << "\t";
    for (std::size_t k = 0; k < r.table1_hits.size(); ++k) {
      std::cout << (k ? "," : "") << r.table1_hits[k].group << ":" << r.table1_hits[k].class_count;
    }
    std::cout << "\n";
  }
  return kOk;
}

std::vector<Partition> read_classes(int n, const std::string& inline_list, const std::string& path) {
  std::vector<std::string> items;
  if (!inline_list.empty()) {
    std::stringstream ss(inline_list);
    std::string item;
    while (std::getline(ss, item, ';')) items.push_back(item);
  } else {
    std::ifstream file(path);
    if (!file) throw UsageError("cannot read '" + path + "'");
    std::string line;
    while (std::getline(file, line)) {
      if (line.find_first_not_of(" \t\r") != std::string::npos && line[line.find_first_not_of(" \t")] != '#') {
        items.push_back(line);
      }
    }
  }
  std::vector<Partition> classes;
  for (const auto& item : items) classes.push_back(Partition::parse(item, n));
  if (classes.empty()) throw UsageError("no classes given");
  return classes;
}

int cmd_oracle(int n, const std::string& inline_list, const std::string& path, const std::string& dataset_path,
               bool json) {
  if (inline_list.empty() == path.empty()) throw UsageError("give exactly one of --classes and --classes-file");
  const std::vector<Partition> classes = read_classes(n, inline_list, path);
  const SubgroupDataset loaded = dataset_path.empty() ? SubgroupDataset{} : SubgroupDataset::load_file(dataset_path);
  const SubgroupDataset& data = dataset_path.empty() ? builtin_dataset() : loaded;
  const MigCertificate cert = is_mig_set(n, classes, data);
  if (json) {
    nlohmann::json doc;
    doc["n"] = n;
    doc["classes"] = nlohmann::json::array();
    for (const auto& c : classes) doc["classes"].push_back(c.to_string());
    doc["invariably_generates"] = cert.generates;
    doc["overgroup"] = cert.overgroup ? nlohmann::json(cert.overgroup->label) : nlohmann::json(nullptr);
    doc["is_mig"] = cert.is_mig;
    doc["minimality"] = nlohmann::json::array();
    for (const auto& s : cert.subgroups) doc["minimality"].push_back(s ? nlohmann::json(s->label) : nullptr);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << "classes: " << join(classes) << "\n";
    if (cert.generates) {
      std::cout << "invariably generate S_" << n << "\n";
    } else {
      std::cout << "do not invariably generate S_" << n << ": every class meets " << cert.overgroup->label << " ("
                << to_string(cert.overgroup->kind) << ")\n";
    }
    for (std::size_t k = 0; k < classes.size(); ++k) {
      std::cout << "  drop (" << classes[k].to_string() << "): ";
      if (cert.subgroups[k]) {
        std::cout << "rest lie in " << cert.subgroups[k]->label << "\n";
      } else {
        std::cout << "rest still generate\n";
      }
    }
    std::cout << (cert.is_mig ? "MIG-set\n" : "not a MIG-set\n");
  }
  return kOk;
}

int cmd_repro(int threads, const std::string& output) {
  if (threads <= 0) throw UsageError("--threads must be positive");
  const auto results = run_acceptance({threads, AcceptanceOptions{}.seed});
  std::ostringstream text;
  print_acceptance(text, results);
  std::cout << text.str();
  if (!output.empty()) write_out(text.str(), output);
  for (const auto& r : results) {
    if (!r.passed) return kFailed;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal invariable generating sets of symmetric groups"};
  app.require_subcommand(1);

  int lemma_i = 0;
  int lemma_n = 0;
  bool json = false;
  auto* lemma = app.add_subcommand("lemma", "Partition missing i and n - i as partial sums");
  lemma->add_option("--i", lemma_i)->required();
  lemma->add_option("--n", lemma_n)->required();
  lemma->add_flag("--json", json);

  int construct_n = 0;
  std::string output;
  auto* construct = app.add_subcommand("construct", "Build and certify the family X for S_n");
  construct->add_option("--n", construct_n)->required();
  construct->add_flag("--json", json);
  construct->add_option("-o,--output", output, "Write to a file instead of stdout");

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "Re-check a family certificate from disk");
  verify->add_option("file", verify_path)->required();
  verify->add_flag("--json", json);

  Range search_range;
  SearchOptions search_options;
  bool no_incumbent = false;
  std::string variant = "partial-sums";
  auto* search = app.add_subcommand("search", "Largest family with properties (1) and (2)");
  add_range(search, search_range);
  search->add_option("--threads", search_options.threads);
  search->add_option("--cap", search_options.cap, "Largest n to enumerate");
  search->add_option("--variant", variant)->check(CLI::IsMember({"partial-sums", "descriptors"}));
  search->add_flag("--no-incumbent", no_incumbent);
  search->add_flag("--json", json);

  Range bounds_range;
  bool include_k1 = false;
  auto* bounds = app.add_subcommand("bounds", "Upper bound components as TSV");
  add_range(bounds, bounds_range);
  bounds->add_flag("--include-k1", include_k1, "Count C(n, 1) in b_n");

  int oracle_n = 0;
  std::string classes;
  std::string classes_file;
  std::string dataset_path;
  auto* oracle = app.add_subcommand("oracle", "Decide invariable generation and minimality");
  oracle->add_option("--n", oracle_n)->required();
  oracle->add_option("--classes", classes, "Cycle types separated by ';', padded with fixed points");
  oracle->add_option("--classes-file", classes_file, "One cycle type per line");
  oracle->add_option("--dataset", dataset_path, "Maximal-subgroup dataset to use instead of the bundled one");
  oracle->add_flag("--json", json);

  int repro_threads = 1;
  std::string repro_output;
  auto* repro = app.add_subcommand("repro", "Run every acceptance criterion");
  repro->add_option("--threads", repro_threads);
  repro->add_option("-o,--output", repro_output, "Also write the summary here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*lemma) return cmd_lemma(lemma_i, lemma_n, json);
    if (*construct) return cmd_construct(construct_n, json, output);
    if (*verify) return cmd_verify(verify_path, json);
    if (*search) {
      search_options.use_incumbent = !no_incumbent;
      return cmd_search(search_range, search_options, variant, json);
    }
    if (*bounds) return cmd_bounds(bounds_range, include_k1);
    if (*oracle) return cmd_oracle(oracle_n, classes, classes_file, dataset_path, json);
    if (*repro) return cmd_repro(repro_threads, repro_output);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}
