#include "opensos/ruloid.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

#include "choice.hpp"
#include "opensos/gsos.hpp"

namespace opensos {

std::string to_string(const Hypothesis& h) { return h.source + " -" + h.label + "-> " + h.target; }

std::string to_string(const Ruloid& r) {
  std::string out;
  for (std::size_t i = 0; i < r.hypotheses.size(); ++i) {
    if (i) out += ", ";
    out += to_string(r.hypotheses[i]);
  }
  if (!out.empty()) out += ' ';
  return out + "|- " + to_string(r.source) + " -" + r.label + "-> " + to_string(r.target);
}

namespace {

constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

std::size_t index_of(const std::vector<std::string>& order, const std::string& v) {
  auto it = std::find(order.begin(), order.end(), v);
  return it == order.end() ? npos : static_cast<std::size_t>(it - order.begin());
}

std::string fresh_name(std::size_t& counter, const std::set<std::string>& avoid) {
  for (;;) {
    std::string n = "h" + std::to_string(counter++);
    if (!avoid.count(n)) return n;
  }
}

}  // namespace

Ruloid canonical_ruloid(std::vector<Hypothesis> hyps, Term source, Label label, Term target) {
  auto src_order = vars_in_order(source);
  auto tgt_order = vars_in_order(target);
  std::sort(hyps.begin(), hyps.end(), [&](const Hypothesis& a, const Hypothesis& b) {
    return std::tuple(index_of(src_order, a.source), a.label, index_of(tgt_order, a.target), a.target) <
           std::tuple(index_of(src_order, b.source), b.label, index_of(tgt_order, b.target), b.target);
  });
  std::set<std::string> avoid(src_order.begin(), src_order.end());
  Renaming r;
  std::size_t counter = 0;
  for (auto& h : hyps) {
    auto name = fresh_name(counter, avoid);
    r[h.target] = name;
    h.target = name;
  }
  return Ruloid{std::move(hyps), std::move(source), std::move(label), rename(r, target)};
}

Semantics::Semantics(TssPtr tss) : tss_(std::move(tss)) {
  auto report = validate_positive_gsos(*tss_);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw Error("TSS '" + tss_->name() + "' is not positive GSOS: rule '" + v.rule + "': " + v.explanation);
  }
}

const std::vector<Ruloid>& Semantics::ruloids(const Term& t, std::size_t limit) {
  if (auto it = ruloid_cache_.find(t); it != ruloid_cache_.end()) {
    if (it->second.size() > limit) throw RuloidLimit("more than " + std::to_string(limit) + " ruloids");
    return it->second;
  }
  auto rs = synthesize(t, limit);
  return ruloid_cache_.emplace(t, std::move(rs)).first->second;
}

namespace {

// A rule destructured into the positive GSOS shape.
struct RuleShape {
  std::vector<std::string> args;
  // (argument index, label, target variable)
  std::vector<std::tuple<std::size_t, Label, std::string>> premises;
};

RuleShape shape_of(const Rule& rule) {
  RuleShape s;
  for (const auto& a : rule.conclusion.source.args()) s.args.push_back(a.name());
  for (const auto& p : rule.premises) {
    s.premises.emplace_back(index_of(s.args, p.source.name()), p.label, p.target.name());
  }
  return s;
}

}  // namespace

std::vector<Ruloid> Semantics::synthesize(const Term& t, std::size_t limit) {
  std::set<Ruloid> out;
  if (t.is_var()) {
    std::set<std::string> avoid{t.name()};
    for (const auto& l : tss_->labels()) {
      std::size_t counter = 0;
      auto h = fresh_name(counter, avoid);
      out.insert(Ruloid{{Hypothesis{t.name(), l, h}}, t, l, Term::variable(h)});
    }
    return {out.begin(), out.end()};
  }
  for (std::size_t idx : tss_->rules_defining(t.name())) {
    const Rule& rule = tss_->rules()[idx];
    RuleShape shape = shape_of(rule);
    std::vector<std::vector<const Ruloid*>> options;
    std::vector<std::size_t> sizes;
    for (const auto& [i, label, y] : shape.premises) {
      auto& opts = options.emplace_back();
      for (const auto& r : ruloids(t.arg(i), limit)) {
        if (r.label == label) opts.push_back(&r);
      }
      sizes.push_back(opts.size());
    }
    detail::for_each_choice(sizes, [&](const std::vector<std::size_t>& pick) {
      Substitution sigma;
      for (std::size_t i = 0; i < shape.args.size(); ++i) sigma.emplace(shape.args[i], t.arg(i));
      std::vector<Hypothesis> hyps;
      std::size_t fresh = 0;
      for (std::size_t k = 0; k < pick.size(); ++k) {
        const Ruloid& chosen = *options[k][pick[k]];
        Renaming apart;
        for (const auto& h : chosen.hypotheses) {
          auto name = "#" + std::to_string(fresh++);
          apart[h.target] = name;
          hyps.push_back(Hypothesis{h.source, h.label, name});
        }
        sigma.insert_or_assign(std::get<2>(shape.premises[k]), rename(apart, chosen.target));
      }
      out.insert(canonical_ruloid(std::move(hyps), t, rule.conclusion.label, opensos::apply(sigma, rule.conclusion.target)));
      if (out.size() > limit) throw RuloidLimit("more than " + std::to_string(limit) + " ruloids");
    });
  }
  return {out.begin(), out.end()};
}

const std::vector<Step>& Semantics::transitions(const Term& p) {
  if (auto it = step_cache_.find(p); it != step_cache_.end()) return it->second;
  auto steps = derive(p);
  return step_cache_.emplace(p, std::move(steps)).first->second;
}

std::vector<Step> Semantics::derive(const Term& p) {
  if (!p.is_closed()) throw Error("transitions: term '" + to_string(p) + "' is not closed");
  std::set<Step> out;
  for (std::size_t idx : tss_->rules_defining(p.name())) {
    const Rule& rule = tss_->rules()[idx];
    RuleShape shape = shape_of(rule);
    std::vector<std::vector<const Step*>> options;
    std::vector<std::size_t> sizes;
    for (const auto& [i, label, y] : shape.premises) {
      auto& opts = options.emplace_back();
      for (const auto& s : transitions(p.arg(i))) {
        if (s.label == label) opts.push_back(&s);
      }
      sizes.push_back(opts.size());
    }
    detail::for_each_choice(sizes, [&](const std::vector<std::size_t>& pick) {
      Substitution sigma;
      for (std::size_t i = 0; i < shape.args.size(); ++i) sigma.emplace(shape.args[i], p.arg(i));
      for (std::size_t k = 0; k < pick.size(); ++k) {
        sigma.insert_or_assign(std::get<2>(shape.premises[k]), options[k][pick[k]]->target);
      }
      out.insert(Step{rule.conclusion.label, opensos::apply(sigma, rule.conclusion.target)});
    });
  }
  return {out.begin(), out.end()};
}

std::set<Label> Semantics::initial_actions(const Term& p) {
  std::set<Label> out;
  for (const auto& s : transitions(p)) out.insert(s.label);
  return out;
}

Lts Semantics::explore(const Term& p, std::size_t state_cap) {
  Lts lts;
  std::map<Term, std::size_t> index;
  std::deque<std::size_t> queue;
  index.emplace(p, 0);
  lts.states.push_back(p);
  queue.push_back(0);
  while (!queue.empty()) {
    std::size_t from = queue.front();
    queue.pop_front();
    for (const auto& s : transitions(lts.states[from])) {
      auto it = index.find(s.target);
      if (it == index.end()) {
        if (lts.states.size() >= state_cap) {
          lts.complete = false;
          continue;
        }
        it = index.emplace(s.target, lts.states.size()).first;
        lts.states.push_back(s.target);
        queue.push_back(it->second);
      }
      lts.transitions.emplace_back(from, s.label, it->second);
    }
  }
  return lts;
}

template <class Emit>
void Semantics::discharge(const Ruloid& r, const Substitution& closing, Emit&& emit) {
  Substitution sigma;
  for (const auto& v : vars(r.source)) {
    auto it = closing.find(v);
    if (it == closing.end() || !it->second.is_closed()) {
      throw Error("substitution does not close variable '" + v + "' of " + to_string(r.source));
    }
    sigma.emplace(v, it->second);
  }
  std::vector<std::vector<const Step*>> options;
  std::vector<std::size_t> sizes;
  for (const auto& h : r.hypotheses) {
    auto& opts = options.emplace_back();
    for (const auto& s : transitions(sigma.at(h.source))) {
      if (s.label == h.label) opts.push_back(&s);
    }
    sizes.push_back(opts.size());
  }
  detail::for_each_choice(sizes, [&](const std::vector<std::size_t>& pick) {
    Substitution full = sigma;
    for (std::size_t k = 0; k < pick.size(); ++k) full.insert_or_assign(r.hypotheses[k].target, options[k][pick[k]]->target);
    return emit(Step{r.label, opensos::apply(full, r.target)});
  });
}

std::vector<Step> Semantics::instantiate_all(const Ruloid& r, const Substitution& sigma) {
  std::set<Step> out;
  discharge(r, sigma, [&](Step s) { out.insert(std::move(s)); });
  return {out.begin(), out.end()};
}

std::optional<Step> Semantics::instantiate(const Ruloid& r, const Substitution& sigma) {
  std::optional<Step> first;
  discharge(r, sigma, [&](Step s) {
    if (!first) first = std::move(s);
  });
  return first;
}

std::vector<Ruloid> ruloids(const Term& t, const TssPtr& tss) { return Semantics(tss).ruloids(t); }
std::vector<Step> transitions(const Term& p, const TssPtr& tss) { return Semantics(tss).transitions(p); }
std::set<Label> initial_actions(const Term& p, const TssPtr& tss) { return Semantics(tss).initial_actions(p); }
Lts explore(const Term& p, const TssPtr& tss, std::size_t state_cap) {
  return Semantics(tss).explore(p, state_cap);
}
std::optional<Step> instantiate_ruloid(const Ruloid& r, const Substitution& sigma, const TssPtr& tss) {
  return Semantics(tss).instantiate(r, sigma);
}

}  // namespace opensos
