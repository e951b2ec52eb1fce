#include <sstream>

#include "homgraph/claims.hpp"
#include "json.hpp"

namespace homgraph {

std::string verdicts_to_json(const std::vector<ClaimVerdict>& verdicts) {
  auto doc = nlohmann::ordered_json::array();
  for (const auto& v : verdicts) {
    nlohmann::ordered_json item;
    item["claim_id"] = v.claim_id;
    item["paper_ref"] = v.paper_ref;
    item["instances_checked"] = v.instances_checked;
    item["status"] = to_string(v.status);
    item["witnesses"] = nlohmann::ordered_json::array();
    for (const auto& w : v.witnesses) item["witnesses"].push_back({{"modules", w.modules}, {"detail", w.detail}});
    doc.push_back(std::move(item));
  }
  return doc.dump(2) + "\n";
}

std::string verdicts_to_csv(const std::vector<ClaimVerdict>& verdicts) {
  std::ostringstream os;
  os << "claim_id,status,instances,witness_count\n";
  for (const auto& v : verdicts)
    os << v.claim_id << ',' << to_string(v.status) << ',' << v.instances_checked << ',' << v.witnesses.size() << '\n';
  return os.str();
}

}  // namespace homgraph
