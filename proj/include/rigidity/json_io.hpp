#ifndef RIGIDITY_JSON_IO_HPP
#define RIGIDITY_JSON_IO_HPP

#include <sstream>
#include <string>

#include "json.hpp"

#include "rigidity/harness.hpp"
#include "rigidity/multigraph.hpp"
#include "rigidity/pinning.hpp"
#include "rigidity/rank_test.hpp"
#include "rigidity/theorem.hpp"
#include "rigidity/treedecomp.hpp"

namespace rigidity {

nlohmann::json to_json(const Multigraph& g);
nlohmann::json to_json(const OrderedPath& p);
nlohmann::json to_json(const RigidityVerdict& v);
nlohmann::json to_json(const TreeDecomposition& dec);
nlohmann::json to_json(const PartitionWitness& w);
nlohmann::json to_json(const DecomposeResult& res);
// full = false omits per-path decompositions and witnesses (summary form).
nlohmann::json to_json(const TheoremReport& rep, bool full = true);
nlohmann::json to_json(const ComparisonResult& cmp, bool full = true);
nlohmann::json to_json(const ScanReport& rep, bool full = true);
nlohmann::json to_json(const EliminationPartition& part);

template <typename T>
nlohmann::json stress_to_json(const StressVector<T>& s) {
    nlohmann::json j;
    j["support"] = s.support;
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : s.coefficients) {
        std::ostringstream os;
        os << c;
        coeffs.push_back(os.str());
    }
    j["coefficients"] = coeffs;
    return j;
}

} // namespace rigidity

#endif
