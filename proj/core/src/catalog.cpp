#include "charprod/catalog.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "charprod/error.hpp"

namespace charprod {

namespace detail {
extern const std::string_view kBuiltinManifest;
}

namespace {

constexpr int kMaxProductDepth = 16;

GroupSpec spec_from_json(const nlohmann::json& j) {
  GroupSpec s;
  s.id = j.at("id").get<std::string>();
  s.description = j.value("description", "");
  s.generators = j.value("generators", "");
  s.product_of = j.value("product_of", std::vector<std::string>{});
  s.expected_order = j.at("expected_order").get<std::uint64_t>();
  if (j.contains("expected_classes")) s.expected_classes = j["expected_classes"].get<std::uint64_t>();
  if (j.contains("prime")) s.prime = j["prime"].get<std::uint32_t>();
  if (s.generators.empty() == s.product_of.empty()) {
    throw ManifestError("entry '" + s.id + "' needs exactly one of generators and product_of");
  }
  return s;
}

}  // namespace

GroupPtr parse_group(std::string_view text, std::size_t cap) {
  GeneratorList list = parse_generators(text);
  return Group::closure(std::move(list.generators), list.degree, cap);
}

std::vector<Permutation> direct_product_generators(const Group& a, const Group& b) {
  const std::size_t degree = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const auto& s : a.generators()) gens.push_back(s.extended(degree));
  for (const auto& s : b.generators()) gens.push_back(s.shifted(a.degree(), degree));
  return gens;
}

const Catalog& Catalog::builtin() {
  static const Catalog catalog = from_json(detail::kBuiltinManifest);
  return catalog;
}

Catalog Catalog::from_json(std::string_view text) {
  Catalog c;
  try {
    auto doc = nlohmann::json::parse(text);
    if (!doc.is_array()) throw ManifestError("manifest must be a JSON array");
    for (const auto& entry : doc) c.merge_entry(spec_from_json(entry));
  } catch (const nlohmann::json::exception& e) {
    throw ManifestError(std::string("malformed manifest: ") + e.what());
  }
  return c;
}

void Catalog::merge_entry(GroupSpec spec) {
  for (auto& e : entries_) {
    if (e.id == spec.id) {
      e = std::move(spec);
      return;
    }
  }
  entries_.push_back(std::move(spec));
}

void Catalog::load_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ManifestError("cannot read manifest " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  merge(from_json(buffer.str()));
}

void Catalog::merge(const Catalog& other) {
  for (const auto& e : other.entries_) merge_entry(e);
}

const GroupSpec* Catalog::find(std::string_view id) const {
  for (const auto& e : entries_) {
    if (e.id == id) return &e;
  }
  return nullptr;
}

std::vector<Permutation> Catalog::generators_of(const GroupSpec& spec, std::size_t& degree,
                                                std::size_t cap, int depth) const {
  if (spec.product_of.empty()) {
    GeneratorList list = parse_generators(spec.generators);
    degree = list.degree;
    return std::move(list.generators);
  }
  if (depth > kMaxProductDepth) throw ManifestError("product_of nesting too deep at '" + spec.id + "'");
  std::vector<Permutation> gens;
  degree = 0;
  for (const auto& id : spec.product_of) {
    const GroupSpec* factor = find(id);
    if (!factor) throw UnknownId("unknown factor '" + id + "' in '" + spec.id + "'");
    std::size_t d = 0;
    auto fgens = generators_of(*factor, d, cap, depth + 1);
    const std::size_t total = degree + d;
    for (auto& s : gens) s = s.extended(total);
    for (auto& s : fgens) gens.push_back(s.shifted(degree, total));
    degree = total;
  }
  return gens;
}

GroupPtr Catalog::group(std::string_view id, std::size_t cap) const {
  const GroupSpec* spec = find(id);
  if (!spec) throw UnknownId("unknown group id '" + std::string(id) + "'");
  std::size_t degree = 0;
  auto gens = generators_of(*spec, degree, cap, 0);
  GroupPtr g = Group::closure(std::move(gens), degree, cap);
  if (g->order() != spec->expected_order) {
    throw ManifestError("'" + spec->id + "' has order " + std::to_string(g->order()) +
                        ", expected " + std::to_string(spec->expected_order));
  }
  if (spec->expected_classes && g->class_count() != *spec->expected_classes) {
    throw ManifestError("'" + spec->id + "' has " + std::to_string(g->class_count()) +
                        " classes, expected " + std::to_string(*spec->expected_classes));
  }
  if (g->prime() != spec->prime) throw ManifestError("'" + spec->id + "' has the wrong prime");
  return g;
}

GroupPtr builtin(std::string_view id, std::size_t cap) { return Catalog::builtin().group(id, cap); }

}  // namespace charprod
