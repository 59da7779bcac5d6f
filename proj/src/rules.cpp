#include "bwm/rules.hpp"

#include <map>
#include <mutex>

namespace bwm {

template class RuleSystem<ExactRing>;
template class RuleSystem<ModularRing>;

std::shared_ptr<RuleSystem<ExactRing>> rule_system(const ExactRing& ring) {
  static std::mutex mu;
  static std::shared_ptr<RuleSystem<ExactRing>> shared;
  std::lock_guard lock(mu);
  if (!shared) shared = std::make_shared<RuleSystem<ExactRing>>(ring);
  return shared;
}

std::shared_ptr<RuleSystem<ModularRing>> rule_system(const ModularRing& ring) {
  static std::mutex mu;
  static std::map<std::tuple<std::uint64_t, std::uint64_t, std::uint64_t>, std::shared_ptr<RuleSystem<ModularRing>>>
      cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{ring.point.p, ring.point.q0, ring.point.r0}];
  if (!slot) slot = std::make_shared<RuleSystem<ModularRing>>(ring);
  return slot;
}

}  // namespace bwm
