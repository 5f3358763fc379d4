#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "charprod/catalog.hpp"
#include "charprod/character_table.hpp"
#include "charprod/charops.hpp"
#include "charprod/error.hpp"
#include "charprod/render.hpp"
#include "charprod/verify.hpp"

namespace {

using namespace charprod;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  std::vector<std::string> manifests;
  std::string format = "text";
  std::string output;
  unsigned jobs = 1;
  std::string source;
  std::vector<std::string> sources;
  std::size_t chi = 0;
  std::size_t psi = 0;
  std::string statements = "A,B,C,lemma,bound";
  bool all = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::size_t closure_cap() {
  const char* env = std::getenv("CHARPROD_CLOSURE_CAP");
  if (env == nullptr || *env == '\0') return kDefaultClosureCap;
  try {
    std::size_t used = 0;
    unsigned long long cap = std::stoull(env, &used);
    if (used != std::string(env).size() || cap == 0) throw std::invalid_argument(env);
    return static_cast<std::size_t>(cap);
  } catch (const std::exception&) {
    throw UsageError(std::string("CHARPROD_CLOSURE_CAP must be a positive integer, got '") + env + "'");
  }
}

Catalog load_catalog(const Options& o) {
  Catalog c = Catalog::builtin();
  for (const auto& m : o.manifests) c.load_file(m);
  return c;
}

// A catalog id, or else a generator file.
GroupPtr resolve(const Catalog& c, const std::string& source, std::size_t cap) {
  if (c.find(source) != nullptr) return c.group(source, cap);
  std::ifstream in(source);
  if (!in) throw UsageError("'" + source + "' is neither a catalog id nor a readable file");
  std::stringstream text;
  text << in.rdbuf();
  return parse_group(text.str(), cap);
}

std::string source_id(const std::string& source) {
  return Catalog::builtin().find(source) || !std::filesystem::exists(source)
             ? source
             : std::filesystem::path(source).filename().string();
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output);
  if (!out) throw UsageError("cannot write " + o.output);
  out << text;
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::size_t check_index(std::size_t i, const CharacterTable& t, const char* flag) {
  if (i >= t.size()) {
    throw UsageError(std::string(flag) + " " + std::to_string(i) + " is out of range (the table has " +
                     std::to_string(t.size()) + " characters)");
  }
  return i;
}

int run_table(const Options& o) {
  GroupPtr g = resolve(load_catalog(o), o.source, closure_cap());
  CharacterTable t = dixon_table(g);
  emit(o, o.format == "json" ? dump(render_table_json(t)) : render_table_text(t));
  return 0;
}

int run_product(const Options& o) {
  GroupPtr g = resolve(load_catalog(o), o.source, closure_cap());
  CharacterTable t = dixon_table(g);
  const std::size_t i = check_index(o.chi, t, "--chi");
  const std::size_t j = check_index(o.psi, t, "--psi");
  Decomposition d = decompose(product(t[i], t[j]), t);
  if (o.format == "json") {
    nlohmann::json out = render_decomposition_json(d, t);
    out["chi"] = {{"index", i}, {"degree", t.degrees()[i]}};
    out["psi"] = {{"index", j}, {"degree", t.degrees()[j]}};
    emit(o, dump(out));
  } else {
    std::ostringstream out;
    out << "chi_" << i << " (degree " << t.degrees()[i] << ") * chi_" << j << " (degree " << t.degrees()[j]
        << ") = " << render_decomposition_text(d, t);
    emit(o, out.str());
  }
  return 0;
}

int run_verify(const Options& o) {
  const Catalog c = load_catalog(o);
  const std::size_t cap = closure_cap();
  std::vector<Statement> statements;
  try {
    statements = parse_statements(o.statements);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::vector<std::string> sources = o.sources;
  if (o.all) {
    if (!sources.empty()) throw UsageError("give either --catalog or group sources, not both");
    for (const auto& e : c.entries()) sources.push_back(e.id);
  }
  if (sources.empty()) throw UsageError("verify needs a group source or --catalog");
  std::vector<VerificationReport> reports;
  for (const auto& s : sources) reports.push_back(verify_group(source_id(s), resolve(c, s, cap), statements, o.jobs));
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();
  if (o.format == "json") {
    emit(o, dump(reports.size() == 1 && !o.all ? render_report_json(reports.front()) : render_reports_json(reports)));
  } else {
    std::string text;
    Summary total;
    for (const auto& r : reports) {
      text += render_report_text(r);
      total += r.summary();
    }
    if (reports.size() > 1) {
      text += "total: " + std::to_string(total.pass) + " pass, " + std::to_string(total.fail) + " fail, " +
              std::to_string(total.hypothesis_not_met) + " hypothesis-not-met, " +
              std::to_string(total.skipped) + " skipped\n";
    }
    emit(o, text);
  }
  return ok ? 0 : kExitFail;
}

int run_witness(const Options& o) {
  GroupPtr g = resolve(load_catalog(o), o.source, closure_cap());
  SubgroupCache cache;
  check_index(o.chi, *cache.table(g), "--chi");
  try {
    MonomialWitness w = monomial_witness_search(g, o.chi, cache);
    emit(o, o.format == "json" ? dump(render_witness_json(w)) : render_witness_text(w));
  } catch (const SearchExhausted& e) {
    std::cerr << "charprod: witness search failed: " << e.what() << '\n';
    return kExitFail;
  }
  return 0;
}

int run_catalog(const Options& o) {
  const Catalog c = load_catalog(o);
  if (o.format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& e : c.entries()) {
      nlohmann::json entry{{"id", e.id}, {"description", e.description}, {"order", e.expected_order}};
      entry["classes"] = e.expected_classes ? nlohmann::json(*e.expected_classes) : nlohmann::json(nullptr);
      entry["p"] = e.prime ? nlohmann::json(*e.prime) : nlohmann::json(nullptr);
      out.push_back(std::move(entry));
    }
    emit(o, dump(out));
    return 0;
  }
  std::size_t width = 0;
  for (const auto& e : c.entries()) width = std::max(width, e.id.size());
  std::ostringstream out;
  for (const auto& e : c.entries()) {
    out << e.id << std::string(width - e.id.size() + 2, ' ') << "order " << e.expected_order;
    if (e.expected_classes) out << ", " << *e.expected_classes << " classes";
    out << "  " << e.description << '\n';
  }
  emit(o, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Exact character tables and product-of-characters checks for finite permutation groups"};
  app.require_subcommand(1);
  app.add_option("--manifest", o.manifests, "Extra catalog manifest (JSON); repeatable")
      ->check(CLI::ExistingFile);
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--output", o.output, "Write to this file instead of standard output");
  };
  const char* source_help = "Catalog id or generator file";

  auto* table = app.add_subcommand("table", "Print the character table");
  table->add_option("source", o.source, source_help)->required();
  add_common(table);

  auto* prod = app.add_subcommand("product", "Decompose chi * psi into irreducibles");
  prod->add_option("source", o.source, source_help)->required();
  prod->add_option("--chi", o.chi, "Index of chi in the table order")->required();
  prod->add_option("--psi", o.psi, "Index of psi in the table order")->required();
  add_common(prod);

  auto* verify = app.add_subcommand("verify", "Run the theorem checks");
  verify->add_option("sources", o.sources, source_help);
  verify->add_flag("--catalog", o.all, "Check every catalog group");
  verify->add_option("--statements", o.statements, "Comma-separated: A,B,C,lemma,bound,fixtures")
      ->capture_default_str();
  verify->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  add_common(verify);

  auto* witness = app.add_subcommand("witness", "Find H and a linear alpha with alpha^G = chi");
  witness->add_option("source", o.source, source_help)->required();
  witness->add_option("--chi", o.chi, "Index of chi in the table order")->required();
  add_common(witness);

  auto* catalog = app.add_subcommand("catalog", "List the catalog groups");
  add_common(catalog);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*table) return run_table(o);
    if (*prod) return run_product(o);
    if (*verify) return run_verify(o);
    if (*witness) return run_witness(o);
    if (*catalog) return run_catalog(o);
  } catch (const std::exception& e) {
    std::cerr << "charprod: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
