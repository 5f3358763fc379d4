#include "charprod/render.hpp"

#include <algorithm>
#include <sstream>

namespace charprod {

namespace {

std::string pad(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

std::vector<std::string> subgroup_cycles(const Subgroup& s) {
  std::vector<std::string> out;
  for (ElementIndex x : s.generators()) out.push_back(s.parent()->element(x).to_cycle_string());
  return out;
}

nlohmann::json summary_json(const Summary& s) {
  return {{"pass", s.pass}, {"fail", s.fail}, {"hypothesis_not_met", s.hypothesis_not_met},
          {"skipped", s.skipped}};
}

}  // namespace

std::string render_table_text(const CharacterTable& t) {
  const Group& g = *t.group();
  const std::size_t k = g.class_count();
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"class"};
  std::vector<std::string> sizes{"size"};
  std::vector<std::string> orders{"order"};
  for (ClassIndex j = 0; j < k; ++j) {
    header.push_back(std::to_string(j));
    sizes.push_back(std::to_string(g.classes()[j].size()));
    orders.push_back(std::to_string(g.representative_order(j)));
  }
  rows.push_back(header);
  rows.push_back(sizes);
  rows.push_back(orders);
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<std::string> row{"chi_" + std::to_string(i) + " (" + std::to_string(t.degrees()[i]) + ")"};
    for (ClassIndex j = 0; j < k; ++j) row.push_back(t[i][j].to_string());
    rows.push_back(std::move(row));
  }
  std::vector<std::size_t> width(k + 1, 0);
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  out << "order " << g.order() << ", " << k << " classes, exponent " << g.exponent();
  if (g.prime()) out << ", p = " << *g.prime();
  out << '\n';
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out << rows[r][0] << std::string(width[0] - rows[r][0].size(), ' ');
    for (std::size_t c = 1; c < rows[r].size(); ++c) out << "  " << pad(rows[r][c], width[c]);
    out << '\n';
    if (r == 2) out << '\n';
  }
  out << "\nclass representatives\n";
  for (ClassIndex j = 0; j < k; ++j) {
    out << "  " << j << ": " << g.element(g.classes()[j].representative).to_cycle_string() << '\n';
  }
  return out.str();
}

nlohmann::json render_table_json(const CharacterTable& t) {
  const Group& g = *t.group();
  nlohmann::json classes = nlohmann::json::array();
  for (ClassIndex j = 0; j < g.class_count(); ++j) {
    classes.push_back({{"index", j},
                       {"size", g.classes()[j].size()},
                       {"element_order", g.representative_order(j)},
                       {"representative", g.element(g.classes()[j].representative).to_cycle_string()}});
  }
  nlohmann::json characters = nlohmann::json::array();
  for (std::size_t i = 0; i < t.size(); ++i) {
    nlohmann::json values = nlohmann::json::array();
    for (const auto& v : t[i].values()) values.push_back(v.to_string());
    characters.push_back({{"index", i}, {"degree", t.degrees()[i]}, {"values", values}});
  }
  nlohmann::json out{{"order", g.order()}, {"exponent", g.exponent()}, {"classes", classes},
                     {"characters", characters}};
  out["p"] = g.prime() ? nlohmann::json(*g.prime()) : nlohmann::json(nullptr);
  return out;
}

std::string render_decomposition_text(const Decomposition& d, const CharacterTable& t) {
  std::ostringstream out;
  bool first = true;
  for (auto [i, m] : d.constituents) {
    if (!first) out << " + ";
    first = false;
    if (m != 1) out << m << '*';
    out << "chi_" << i;
  }
  if (first) out << '0';
  out << "\neta = " << d.eta() << '\n';
  for (auto [i, m] : d.constituents) {
    out << "  chi_" << i << "  degree " << t.degrees()[i] << "  multiplicity " << m << '\n';
  }
  return out.str();
}

nlohmann::json render_decomposition_json(const Decomposition& d, const CharacterTable& t) {
  nlohmann::json constituents = nlohmann::json::array();
  for (auto [i, m] : d.constituents) {
    constituents.push_back({{"irr_index", i}, {"degree", t.degrees()[i]}, {"multiplicity", m}});
  }
  return {{"constituents", constituents}, {"eta", d.eta()}};
}

nlohmann::json render_lattice_json(const NormalLattice& l) {
  nlohmann::json out = nlohmann::json::array();
  for (std::size_t i = 0; i < l.normals.size(); ++i) {
    out.push_back({{"id", i},
                   {"order", l.normals[i].order()},
                   {"index", l.normals[i].index()},
                   {"generator_cycles", subgroup_cycles(l.normals[i])},
                   {"is_in", l.covers(i)}});
  }
  return out;
}

nlohmann::json render_witness_json(const MonomialWitness& w) {
  nlohmann::json chain = nlohmann::json::array();
  for (const auto& s : w.chain) {
    if (s.kind == DescentStep::Kind::Quotient) {
      chain.push_back({{"step", "quotient"}, {"group_order", s.group_order}, {"degree", s.degree},
                       {"kernel_order", s.kernel_order}});
    } else {
      chain.push_back({{"step", "clifford"}, {"group_order", s.group_order}, {"degree", s.degree},
                       {"y_order", s.y_order}, {"iota", s.iota}, {"stabilizer_order", s.stabilizer_order},
                       {"correspondent", s.correspondent}, {"correspondent_degree", s.correspondent_degree}});
    }
  }
  nlohmann::json alpha = nlohmann::json::array();
  for (const auto& v : w.alpha.values()) alpha.push_back(v.to_string());
  return {{"chi", w.chi},
          {"chain", chain},
          {"h", {{"order", w.h.order()}, {"index", w.h.index()}, {"generator_cycles", subgroup_cycles(w.h)}}},
          {"alpha", alpha},
          {"induced_square", w.induced_square}};
}

std::string render_witness_text(const MonomialWitness& w) {
  std::ostringstream out;
  out << "chi_" << w.chi << " = alpha^G with |H| = " << w.h.order() << ", |G:H| = " << w.h.index() << '\n';
  out << "H generated by";
  for (const auto& c : subgroup_cycles(w.h)) out << ' ' << c;
  if (w.h.generators().empty()) out << " ()";
  out << "\nalpha on the classes of H:";
  for (const auto& v : w.alpha.values()) out << ' ' << v.to_string();
  out << "\n(alpha^2)^G = chi_" << w.induced_square << '\n';
  for (const auto& s : w.chain) {
    if (s.kind == DescentStep::Kind::Quotient) {
      out << "  quotient: |G| = " << s.group_order << ", degree " << s.degree << ", |Ker| = " << s.kernel_order
          << '\n';
    } else {
      out << "  clifford: |G| = " << s.group_order << ", degree " << s.degree << ", |Y| = " << s.y_order
          << ", iota = " << s.iota << ", |G_iota| = " << s.stabilizer_order << ", correspondent "
          << s.correspondent << " of degree " << s.correspondent_degree << '\n';
    }
  }
  return out.str();
}

nlohmann::json render_report_json(const VerificationReport& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) {
    nlohmann::json entry{{"statement", c.statement}, {"instance", c.instance},
                         {"status", std::string(status_name(c.status))}};
    if (c.witness) entry["witness"] = *c.witness;
    checks.push_back(std::move(entry));
  }
  nlohmann::json group{{"id", r.group_id}, {"order", r.order}};
  group["p"] = r.prime ? nlohmann::json(*r.prime) : nlohmann::json(nullptr);
  return {{"group", group}, {"checks", checks}, {"summary", summary_json(r.summary())}};
}

std::string render_report_text(const VerificationReport& r) {
  std::ostringstream out;
  Summary s = r.summary();
  out << r.group_id << " (order " << r.order;
  if (r.prime) out << ", p = " << *r.prime;
  out << "): " << s.pass << " pass, " << s.fail << " fail, " << s.hypothesis_not_met
      << " hypothesis-not-met, " << s.skipped << " skipped\n";
  for (const auto& c : r.checks) {
    if (c.status != Status::Fail) continue;
    out << "  FAIL " << c.statement << ' ' << c.instance.dump();
    if (c.witness) out << ' ' << c.witness->dump();
    out << '\n';
  }
  return out.str();
}

nlohmann::json render_reports_json(const std::vector<VerificationReport>& reports) {
  nlohmann::json list = nlohmann::json::array();
  Summary total;
  for (const auto& r : reports) {
    list.push_back(render_report_json(r));
    total += r.summary();
  }
  return {{"reports", list}, {"summary", summary_json(total)}};
}

}  // namespace charprod
