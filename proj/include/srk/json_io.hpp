#ifndef SRK_JSON_IO_HPP
#define SRK_JSON_IO_HPP

#include <json.hpp>

#include "srk/harness.hpp"

namespace srk {

using json = nlohmann::json;

// Elements travel as residue tuples, subsets as arrays of tuples.
json elem_to_json(const AbelianGroup& G, Elem x);
Elem elem_from_json(const AbelianGroup& G, const json& j);
json subset_to_json(const AbelianGroup& G, const Subset& s);
Subset subset_from_json(const AbelianGroup& G, const json& j);

json group_to_json(const AbelianGroup& G);
AbelianGroup group_from_json(const json& j);

json sring_to_json(const SRing& A);
SRing sring_from_json(const json& j);

PermutationSet perms_from_json(const json& j);

// Rings parse from any constructor form and serialize to the tables form.
CommRing ring_from_json(const json& j);
json ring_to_json(const CommRing& R);

json local_pair_to_json(const LocalPair& pair);
LocalPair local_pair_from_json(const json& j);

json report_to_json(const VerificationReport& rep);
json separation_report_to_json(const AbelianGroup& G, const SeparationReport& rep);
json duality_report_to_json(const DualityReport& rep);
json check_report_to_json(const CheckReport& rep);

}  // namespace srk

#endif
