#ifndef QTCAT_JSON_IO_HPP
#define QTCAT_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "qtcat/partition.hpp"
#include "qtcat/qt_matrix.hpp"
#include "qtcat/symmetry.hpp"
#include "qtcat/verifier.hpp"

namespace qtcat {

// Partitions serialize to JSON arrays of parts, e.g. [5,5,4,3,1,1]; the zero
// partition is [].
nlohmann::json partition_to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

// {"n": n, "entries": [[q_exp, t_exp, coeff], ...]} sorted by (q_exp, t_exp).
nlohmann::json matrix_to_json(const QtMatrix& m, std::size_t n);

// {"n":..., "pairs":[[[parts],[parts]],...], "status":"ok"|"duplicate"|
//  "unmatched", "witness":...}
nlohmann::json pairing_to_json(std::size_t n, const NOppositeResult& res);

// {"k":..., "entries":[{"mu":...,"mu_star":...,"kind":...}, ...]} with kind
// "explicit" (generators + tail), "hook", or "almost-hook" (params {a,b}).
nlohmann::json spec_to_json(const ChainSpec& spec);
ChainSpec spec_from_json(const nlohmann::json& j);
ChainSpec load_spec_file(const std::string& path);

nlohmann::json report_to_json(const VerificationReport& report);

std::vector<Partition> partition_list_from_file(const std::string& path);

}  // namespace qtcat

#endif
