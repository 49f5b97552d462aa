#pragma once

// Uniform handle over every shipped merging operator, keyed by CLI name.

#include <string>
#include <vector>

#include "mergeforge/base.hpp"
#include "mergeforge/core.hpp"
#include "mergeforge/model_merge.hpp"
#include "mergeforge/ocf.hpp"
#include "mergeforge/syntax_merge.hpp"

namespace mergeforge {

enum class OperatorFamily { model_based, formula_based, formula_based_hat, flat_ocf };

class OperatorHandle {
 public:
  const std::string& name() const { return name_; }
  OperatorFamily family() const { return family_; }

  // Flat operators are defined without integrity constraints.
  bool accepts_constraint() const { return family_ != OperatorFamily::flat_ocf; }

  // True when the result can depend on how a base is written, not only on
  // its models. Only the unhatted formula-based operators qualify.
  bool syntax_sensitive() const { return family_ == OperatorFamily::formula_based; }

  // True when the merged set can be empty (C3 and its hatted variant).
  bool may_return_empty() const {
    return (family_ == OperatorFamily::formula_based ||
            family_ == OperatorFamily::formula_based_hat) &&
           cvariant_ == CVariant::c3;
  }

  DistanceId distance_id() const { return distance_; }
  AggId agg_id() const { return agg_; }

  ModelSet merge(const Profile& e, const Formula& mu, const Signature& sig) const {
    switch (family_) {
      case OperatorFamily::model_based:
        return merge_model_based(e, mu, distance_, agg_, sig);
      case OperatorFamily::formula_based:
        return merge_c(e, mu, cvariant_, sig);
      case OperatorFamily::formula_based_hat:
        return merge_c_hat(e, mu, cvariant_, sig);
      case OperatorFamily::flat_ocf:
        if (!is_true_const(mu))
          throw domain_error("operator " + name_ + " takes no integrity constraint");
        return flat_merge(e, ocf_rule_, sig);
    }
    throw domain_error("unreachable operator family");
  }

  // Full ranking for table rendering; model-based operators only.
  MergeRanking table(const Profile& e, const Formula& mu, const Signature& sig) const {
    if (family_ != OperatorFamily::model_based)
      throw domain_error("operator " + name_ + " has no distance ranking table");
    return ranking(e, mu, builtin_distance(distance_), builtin_aggregation(agg_), sig);
  }

  static const std::vector<OperatorHandle>& all() {
    static const std::vector<OperatorHandle> ops = [] {
      std::vector<OperatorHandle> v;
      auto model = [&](const char* n, DistanceId d, AggId f) {
        OperatorHandle h;
        h.name_ = n;
        h.family_ = OperatorFamily::model_based;
        h.distance_ = d;
        h.agg_ = f;
        v.push_back(h);
      };
      auto formula = [&](const char* n, CVariant c, bool hat) {
        OperatorHandle h;
        h.name_ = n;
        h.family_ = hat ? OperatorFamily::formula_based_hat : OperatorFamily::formula_based;
        h.cvariant_ = c;
        v.push_back(h);
      };
      auto flat = [&](const char* n, OcfRule r) {
        OperatorHandle h;
        h.name_ = n;
        h.family_ = OperatorFamily::flat_ocf;
        h.ocf_rule_ = r;
        v.push_back(h);
      };
      model("dD-sum", DistanceId::drastic, AggId::sum);
      model("dD-max", DistanceId::drastic, AggId::max);
      model("dD-gmax", DistanceId::drastic, AggId::gmax);
      model("dH-sum", DistanceId::hamming, AggId::sum);
      model("dH-max", DistanceId::hamming, AggId::max);
      model("dH-gmax", DistanceId::hamming, AggId::gmax);
      formula("c1", CVariant::c1, false);
      formula("c3", CVariant::c3, false);
      formula("c4", CVariant::c4, false);
      formula("c5", CVariant::c5, false);
      formula("hc1", CVariant::c1, true);
      formula("hc3", CVariant::c3, true);
      formula("hc4", CVariant::c4, true);
      formula("hc5", CVariant::c5, true);
      flat("ocf-max", OcfRule::max);
      flat("ocf-min1", OcfRule::min1);
      flat("ocf-min2", OcfRule::min2);
      flat("ocf-sigma", OcfRule::sigma);
      return v;
    }();
    return ops;
  }

  static const OperatorHandle& by_name(const std::string& n) {
    for (const OperatorHandle& h : all())
      if (h.name() == n) return h;
    throw domain_error("unknown operator '" + n + "'");
  }

 private:
  std::string name_;
  OperatorFamily family_ = OperatorFamily::model_based;
  DistanceId distance_ = DistanceId::drastic;
  AggId agg_ = AggId::sum;
  CVariant cvariant_ = CVariant::c1;
  OcfRule ocf_rule_ = OcfRule::max;
};

} // namespace mergeforge
