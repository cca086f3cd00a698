#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "sofic/action.hpp"
#include "sofic/certificate.hpp"
#include "sofic/eppa.hpp"
#include "sofic/gromov.hpp"
#include "sofic/group.hpp"
#include "sofic/tiling.hpp"
#include "sofic/wreath.hpp"

namespace sofic {

using Json = nlohmann::json;

/// "Z", "Z^d", "F_n", "C_n" (cyclic), "S_n" (symmetric).
GroupFamily group_from_name(const std::string& name);
/// Accepts a name string or {kind: free|lattice|finite|cyclic|symmetric|product, ...}.
GroupFamily group_from_json(const Json& j);
Json group_to_json(const GroupFamily& family);
/// {elements: [...], identity: "...", table: [[...]]} with labels as entries.
FiniteTable table_from_json(const Json& j);
Json table_to_json(const FiniteTable& t);

std::vector<Element> elements_from_json(const GroupFamily& family, const Json& j);
Json elements_to_json(const GroupFamily& family, const std::vector<Element>& xs);

/// {vertices, edges}, vertices sorted and edges canonical.
Json graph_to_json(const FiniteGraph& g);
FiniteGraph graph_from_json(const Json& j);

/// {kind: trivial} | {kind: elements, elements} | {kind: sublattice, basis}.
Subgroup subgroup_from_json(const GroupFamily& family, const Json& j);
Json subgroup_to_json(const GroupFamily& family, const Subgroup& H);
CharacteristicPair pair_from_json(const GroupFamily& family, const Json& j);
Json pair_to_json(const GroupFamily& family, const CharacteristicPair& p);

/// {group, graph: {kind: cayley|coset|explicit, ...}, action}, or a composite
/// {combine: product|coproduct|complement|edgeless|complete|precompose, ...}.
GraphAction action_from_json(const Json& j);

Json certificate_to_json(const OrbitCertificate& c);
/// The family comes from the "group" member, or from `family` if absent.
OrbitCertificate certificate_from_json(const Json& j, const std::optional<GroupFamily>& family = std::nullopt);
Json sofic_certificate_to_json(const SoficGroupCertificate& c);
SoficGroupCertificate sofic_certificate_from_json(const Json& j,
                                                  const std::optional<GroupFamily>& family = std::nullopt);

Json report_to_json(const VerifierReport& r);
Json wreath_report_to_json(const WreathReport& r);

Json tiling_to_json(const Tiling& t);
Tiling tiling_from_json(const Json& j);

struct EppaInput {
  FiniteGraph graph;
  std::vector<PartialIso> partials;
};
EppaInput eppa_input_from_json(const Json& j);
Json eppa_solution_to_json(const FiniteGraph& g0, const EppaSolution& s);

/// Compact, key-sorted serialization with a trailing newline.
std::string canonical_dump(const Json& j);
/// Reads and parses a JSON file; Error(parse_error) on failure.
Json load_json(const std::string& path);

}  // namespace sofic
