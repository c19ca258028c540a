#include "opensos/tss.hpp"

namespace opensos {

std::string to_string(const Formula& f) {
  return to_string(f.source) + " -" + f.label + "-> " + to_string(f.target);
}

std::string Rule::defined_operator() const {
  return conclusion.source.is_var() ? std::string{} : conclusion.source.name();
}

std::string to_string(const Rule& r) {
  std::string out;
  for (std::size_t i = 0; i < r.premises.size(); ++i) {
    if (i) out += ", ";
    out += to_string(r.premises[i]);
  }
  if (!out.empty()) out += ' ';
  out += "|- " + to_string(r.conclusion);
  return out;
}

Tss::Tss(std::string name, Signature own_signature, std::set<Label> own_labels, std::vector<Rule> own_rules,
         std::shared_ptr<const Tss> base)
    : name_(std::move(name)),
      own_signature_(std::move(own_signature)),
      own_labels_(std::move(own_labels)),
      own_rules_(std::move(own_rules)),
      base_(std::move(base)) {
  if (base_) {
    signature_ = Signature::merge(base_->signature(), own_signature_);
    labels_ = base_->labels();
    rules_ = base_->rules();
  } else {
    signature_ = own_signature_;
  }
  labels_.insert(own_labels_.begin(), own_labels_.end());
  rules_.insert(rules_.end(), own_rules_.begin(), own_rules_.end());
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    defining_[rules_[i].defined_operator()].push_back(i);
  }
}

const std::vector<std::size_t>& Tss::rules_defining(const std::string& op) const {
  static const std::vector<std::size_t> none;
  auto it = defining_.find(op);
  return it == defining_.end() ? none : it->second;
}

std::shared_ptr<const Tss> Tss::delta() const {
  return std::make_shared<const Tss>(name_, own_signature_, own_labels_, own_rules_);
}

bool Tss::extends(const Tss& ancestor) const {
  for (const Tss* t = this; t; t = t->base_.get()) {
    if (t == &ancestor) return true;
  }
  return false;
}

std::shared_ptr<const Tss> Tss::unite(const std::string& name, const Tss& t0, const Tss& t1) {
  std::set<Label> labels = t0.labels();
  labels.insert(t1.labels().begin(), t1.labels().end());
  std::vector<Rule> rules = t0.rules();
  rules.insert(rules.end(), t1.rules().begin(), t1.rules().end());
  return std::make_shared<const Tss>(name, Signature::merge(t0.signature(), t1.signature()), std::move(labels),
                                     std::move(rules));
}

Extension resolve_extension(const TssPtr& base, const TssPtr& ext) {
  if (ext.get() != base.get() && ext->extends(*base)) {
    // collect every layer strictly above `base`
    Signature sig;
    std::set<Label> labels;
    std::vector<Rule> rules;
    std::vector<const Tss*> layers;
    for (const Tss* t = ext.get(); t != base.get(); t = t->base().get()) layers.push_back(t);
    for (auto it = layers.rbegin(); it != layers.rend(); ++it) {
      sig = Signature::merge(sig, (*it)->own_signature());
      labels.insert((*it)->own_labels().begin(), (*it)->own_labels().end());
      rules.insert(rules.end(), (*it)->own_rules().begin(), (*it)->own_rules().end());
    }
    auto delta = std::make_shared<const Tss>(ext->name(), std::move(sig), std::move(labels), std::move(rules));
    return {base, delta, ext};
  }
  return {base, ext, Tss::unite(base->name() + "+" + ext->name(), *base, *ext)};
}

}  // namespace opensos
