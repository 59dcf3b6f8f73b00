#pragma once

#include "artin/coxeter.hpp"
#include "artin/lie.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace artin {

/// {"entries": [[...], ...]}, each entry an integer >= 1 or "inf".
CoxeterMatrix parse_matrix(std::string_view text);
CoxeterMatrix matrix_from_json(nlohmann::json const &doc);
nlohmann::json matrix_to_json(CoxeterMatrix const &m);

/// {"F","G","f2","g2","src_slots","dst_slots"}. Slot lists must match the
/// algebras' slot order exactly.
MorphismWitness parse_morphism(std::string_view text, LieAlgebra const &src,
                               LieAlgebra const &dst);
MorphismWitness morphism_from_json(nlohmann::json const &doc, LieAlgebra const &src,
                                   LieAlgebra const &dst);
nlohmann::json morphism_to_json(MorphismWitness const &w, LieAlgebra const &src,
                                LieAlgebra const &dst);

nlohmann::json to_json(BigInt const &v);
nlohmann::json to_json(IntMatrix const &m);
nlohmann::json to_json(Entry e);

std::string read_file(std::string const &path);

} // namespace artin
