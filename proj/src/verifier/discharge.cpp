#include <map>

#include "godp/verifier.hpp"

namespace godp {

void discharge_serial(std::vector<Obligation>& obs, const RuleEngineConfig& cfg) {
  for (Obligation& ob : obs) ob.verdict = entails(*ob.context, ob.axiom, cfg);
}

void discharge_parallel(std::vector<Obligation>& obs, const RuleEngineConfig& cfg) {
  // Saturation depends only on the context, so each distinct context is
  // saturated once and its goals are answered concurrently.
  std::map<const Ontology*, std::size_t> index;
  std::vector<const Ontology*> contexts;
  for (const Obligation& ob : obs) {
    if (index.emplace(ob.context.get(), contexts.size()).second) {
      contexts.push_back(ob.context.get());
    }
  }
  std::vector<std::unique_ptr<Saturation>> sats(contexts.size());
  const long nctx = static_cast<long>(contexts.size());
#pragma omp parallel for schedule(dynamic)
  for (long c = 0; c < nctx; ++c) {
    sats[c] = std::make_unique<Saturation>(*contexts[c], cfg);
  }
  const long n = static_cast<long>(obs.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    obs[i].verdict = sats[index.at(obs[i].context.get())]->holds(obs[i].axiom);
  }
}

}  // namespace godp
