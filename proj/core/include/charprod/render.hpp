#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "charprod/character_table.hpp"
#include "charprod/charops.hpp"
#include "charprod/structure.hpp"
#include "charprod/verify.hpp"

namespace charprod {

/// Cyclotomic values use Cyclotomic::to_string: integers and fractions as
/// is, other values as z(e;c0,...,c_{phi(e)-1}) = sum c_k zeta_e^k.
std::string render_table_text(const CharacterTable& t);
nlohmann::json render_table_json(const CharacterTable& t);

std::string render_decomposition_text(const Decomposition& d, const CharacterTable& t);
nlohmann::json render_decomposition_json(const Decomposition& d, const CharacterTable& t);

nlohmann::json render_lattice_json(const NormalLattice& l);

nlohmann::json render_witness_json(const MonomialWitness& w);
std::string render_witness_text(const MonomialWitness& w);

nlohmann::json render_report_json(const VerificationReport& r);
std::string render_report_text(const VerificationReport& r);

/// Several reports as one JSON document: {"reports": [...], "summary": {...}}.
nlohmann::json render_reports_json(const std::vector<VerificationReport>& reports);

}  // namespace charprod
