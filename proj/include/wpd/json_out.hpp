#pragma once

#include <json.hpp>

#include "wpd/classify.hpp"
#include "wpd/graded.hpp"
#include "wpd/semigroup.hpp"
#include "wpd/verify.hpp"

namespace wpd {

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson to_json(const Window &w) {
  return OrderedJson{{"degree_lo", w.degree_lo},
                     {"degree_hi", w.degree_hi},
                     {"order_bound", w.order_bound},
                     {"padding", w.padding}};
}

inline OrderedJson to_json(const KernelWitness &w) {
  OrderedJson j;
  if (w.kind == WitnessKind::TwistingSheaf) {
    j["kind"] = "TwistingSheaf";
    j["twist"] = w.sheaf_twist;
  } else {
    j["kind"] = "FractionalModule";
    j["base_exponent"] = w.base_exponent.get_str();
  }
  j["verification_window"] = to_json(w.verification_window);
  return j;
}

inline OrderedJson to_json(const Classification &c) {
  OrderedJson j;
  j["twist"] = c.twist.str();
  j["weights"] = c.weights;
  j["exactness"] = str(c.exactness);
  j["kernel"] = str(c.kernel);
  j["witnesses"] = c.witness ? OrderedJson::array({to_json(*c.witness)})
                             : OrderedJson::array();
  j["equivalences"] = OrderedJson{{"stack", str(c.stack_equivalence)},
                                  {"pushforward", str(c.pushforward_equivalence)}};
  j["caveats"] = OrderedJson{{"n_equals_1", c.n_caveat}};
  return j;
}

inline OrderedJson to_json(const KoszulReport &r) {
  OrderedJson j;
  j["twist"] = r.twist;
  j["window"] = to_json(r.window);
  j["ker_phi1_total"] = r.ker_phi1_total;
  j["homology_total"] = r.homology_total;
  OrderedJson degs = OrderedJson::array();
  for (const auto &d : r.degrees) {
    OrderedJson dj;
    dj["degree"] = d.degree;
    dj["ker_phi1_dim"] = d.ker_phi1_dim;
    dj["homology_dim"] = d.homology_dim;
    dj["witnesses"] = d.witnesses;
    degs.push_back(std::move(dj));
  }
  j["degrees"] = std::move(degs);
  return j;
}

inline OrderedJson to_json(const SuiteResult &s) {
  OrderedJson j;
  j["suite"] = s.suite;
  j["pass"] = s.pass();
  OrderedJson checks = OrderedJson::array();
  for (const auto &c : s.checks)
    checks.push_back(OrderedJson{
        {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = std::move(checks);
  return j;
}

inline OrderedJson to_json(const DeltaCertificate &c, const TwistParameter &lam) {
  OrderedJson j;
  j["twist"] = lam.str();
  j["found"] = c.found;
  j["order_used"] = c.order_used;
  if (c.witness_exponent) {
    OrderedJson e = OrderedJson::array();
    for (int v : *c.witness_exponent)
      e.push_back(v);
    j["witness_exponent"] = std::move(e);
  } else {
    j["witness_exponent"] = nullptr;
  }
  j["weights_in_window"] = c.weights_in_window;
  return j;
}

} // namespace wpd
