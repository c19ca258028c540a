#include "opensos/bisim.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>

#include "choice.hpp"

namespace opensos {

std::string to_string(Notion n) {
  switch (n) {
    case Notion::Strong: return "strong";
    case Notion::Ci: return "ci";
    case Notion::Fh: return "fh";
    case Notion::Hp: return "hp";
    case Notion::Pfh: return "pfh";
    case Notion::Php: return "php";
  }
  return "?";
}

std::optional<Notion> parse_notion(std::string_view s) {
  for (auto n : {Notion::Strong, Notion::Ci, Notion::Fh, Notion::Hp, Notion::Pfh, Notion::Php}) {
    if (to_string(n) == s) return n;
  }
  return std::nullopt;
}

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "holds";
    case Outcome::Fails: return "fails";
    case Outcome::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::string to_string(const Hml& f) {
  switch (f.kind) {
    case Hml::Kind::Top: return "tt";
    case Hml::Kind::Negation: return "!" + to_string(f.operands.front());
    case Hml::Kind::Diamond: {
      std::string out = "<" + f.label + ">";
      if (f.operands.empty()) return out + "tt";
      if (f.operands.size() == 1) return out + to_string(f.operands.front());
      out += '(';
      for (std::size_t i = 0; i < f.operands.size(); ++i) out += (i ? " & " : "") + to_string(f.operands[i]);
      return out + ')';
    }
  }
  return "?";
}

bool satisfies(Semantics& sem, const Term& p, const Hml& f) {
  switch (f.kind) {
    case Hml::Kind::Top: return true;
    case Hml::Kind::Negation: return !satisfies(sem, p, f.operands.front());
    case Hml::Kind::Diamond:
      for (const auto& s : sem.transitions(p)) {
        if (s.label != f.label) continue;
        if (std::all_of(f.operands.begin(), f.operands.end(),
                        [&](const Hml& g) { return satisfies(sem, s.target, g); })) {
          return true;
        }
      }
      return false;
  }
  return false;
}

std::string to_string(const HpState& st) {
  std::string out = "(" + to_string(st.s) + ", " + to_string(st.t) + ")";
  if (st.gamma.empty()) return out;
  out += " under {";
  for (std::size_t i = 0; i < st.gamma.size(); ++i) out += (i ? ", " : "") + to_string(st.gamma[i]);
  return out + "}";
}

bool is_proper_pair(const Term& s, const Term& t) {
  if (s.is_var() || t.is_var()) return s.is_var() && t.is_var() && s.name() == t.name();
  return true;
}

namespace {

// ---------------------------------------------------------------- strong

// Exact stratification of a finite LTS by partition refinement.
class Refinement {
 public:
  Refinement(Semantics& sem, const Lts& a, const Lts& b) {
    auto add = [&](const Term& t) { index_.try_emplace(t, index_.size()); };
    for (const auto& t : a.states) add(t);
    for (const auto& t : b.states) add(t);
    std::vector<std::vector<std::pair<Label, std::size_t>>> succ(index_.size());
    for (const auto& [t, i] : index_) {
      for (const auto& s : sem.transitions(t)) succ[i].emplace_back(s.label, index_.at(s.target));
    }
    history_.emplace_back(index_.size(), 0);
    for (;;) {
      const auto& prev = history_.back();
      std::map<std::pair<std::size_t, std::vector<std::pair<Label, std::size_t>>>, std::size_t> ids;
      std::vector<std::size_t> next(prev.size());
      for (std::size_t i = 0; i < prev.size(); ++i) {
        std::vector<std::pair<Label, std::size_t>> sig;
        for (const auto& [l, j] : succ[i]) sig.emplace_back(l, prev[j]);
        std::sort(sig.begin(), sig.end());
        sig.erase(std::unique(sig.begin(), sig.end()), sig.end());
        next[i] = ids.try_emplace({prev[i], std::move(sig)}, ids.size()).first->second;
      }
      std::size_t before = *std::max_element(prev.begin(), prev.end()) + 1;
      if (ids.size() == before && history_.size() > 1) break;
      history_.push_back(std::move(next));
      if (ids.size() == before) break;
    }
  }

  bool equiv(const Term& u, const Term& v, std::size_t k) const {
    const auto& level = history_[std::min(k, history_.size() - 1)];
    return level[index_.at(u)] == level[index_.at(v)];
  }
  std::size_t levels() const { return history_.size(); }

 private:
  std::map<Term, std::size_t> index_;
  std::vector<std::vector<std::size_t>> history_;
};

// k-step bisimilarity computed on demand, for truncated state spaces.
class Stratified {
 public:
  explicit Stratified(Semantics& sem) : sem_(sem) {}

  bool equiv(const Term& u, const Term& v, std::size_t k) {
    if (k == 0 || u == v) return true;
    auto key = u < v ? std::tuple(u, v, k) : std::tuple(v, u, k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool ok = matched(u, v, k) && matched(v, u, k);
    memo_.emplace(key, ok);
    return ok;
  }

 private:
  bool matched(const Term& u, const Term& v, std::size_t k) {
    for (const auto& a : sem_.transitions(u)) {
      bool found = false;
      for (const auto& b : sem_.transitions(v)) {
        if (a.label == b.label && equiv(a.target, b.target, k - 1)) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return true;
  }

  Semantics& sem_;
  std::map<std::tuple<Term, Term, std::size_t>, bool> memo_;
};

template <class Equiv>
std::size_t first_split(const Term& u, const Term& v, std::size_t max, Equiv& eq) {
  for (std::size_t k = 1; k <= max; ++k) {
    if (!eq.equiv(u, v, k)) return k;
  }
  return 0;
}

// A formula true of u and false of v, given that u and v differ at level k.
template <class Equiv>
Hml distinguish(Semantics& sem, const Term& u, const Term& v, std::size_t k, Equiv& eq) {
  auto separate = [&](const Term& from, const Term& other, Hml& out) {
    for (const auto& a : sem.transitions(from)) {
      std::vector<Term> answers;
      bool escapes = true;
      for (const auto& b : sem.transitions(other)) {
        if (b.label != a.label) continue;
        if (eq.equiv(a.target, b.target, k - 1)) {
          escapes = false;
          break;
        }
        answers.push_back(b.target);
      }
      if (!escapes) continue;
      out = Hml{Hml::Kind::Diamond, a.label, {}};
      for (const auto& b : answers) {
        out.operands.push_back(distinguish(sem, a.target, b, first_split(a.target, b, k - 1, eq), eq));
      }
      return true;
    }
    return false;
  };
  Hml f;
  if (separate(u, v, f)) return f;
  if (separate(v, u, f)) return Hml{Hml::Kind::Negation, {}, {std::move(f)}};
  throw Error("internal: no distinguishing move between " + to_string(u) + " and " + to_string(v));
}

// ------------------------------------------------------------------ games

struct Obligation {
  std::string side;
  Ruloid ruloid;
};

template <class Key>
struct Expansion {
  std::optional<std::string> failure;
  std::vector<std::pair<Obligation, std::vector<Key>>> obligations;
  std::vector<Key> required;
  // Too large to expand under the ruloid cap; the position stays open.
  bool skipped = false;
};

template <class Key>
Expansion<Key> open_position() {
  Expansion<Key> ex;
  ex.skipped = true;
  return ex;
}

template <class Key>
struct GameResult {
  Outcome outcome = Outcome::Inconclusive;
  std::vector<Key> good;
  std::size_t expanded = 0;
  bool skipped = false;
  // Fails only
  std::vector<std::pair<Key, Obligation>> path;
  std::optional<Key> last;
  std::optional<std::string> failure;
  std::optional<Obligation> unmatched;
};

// Solves the bisimulation game from `root`: a position loses when it fails
// outright, when some obligation has only losing answers, or when a required
// position loses. Unexpanded positions are assumed to win.
template <class Key, class Expand>
GameResult<Key> solve(const Key& root, std::size_t cap, Expand&& expand) {
  struct Node {
    Key key;
    bool expanded = false;
    std::optional<std::string> failure;
    std::vector<std::pair<Obligation, std::vector<std::size_t>>> obligations;
    std::vector<std::size_t> required;
  };
  std::vector<Node> nodes;
  std::map<Key, std::size_t> index;
  std::deque<std::size_t> queue;
  auto intern = [&](const Key& k) {
    auto [it, fresh] = index.try_emplace(k, nodes.size());
    if (fresh) {
      nodes.push_back(Node{k, false, std::nullopt, {}, {}});
      queue.push_back(it->second);
    }
    return it->second;
  };
  intern(root);
  GameResult<Key> res;
  bool skipped = false;

  // Least fixpoint of losing positions, recording why and when each lost.
  // Rerun as the graph grows; losses are final since open positions win.
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> lost_at, reason, via;  // reason: obligation index, or none for failure/required
  std::vector<std::vector<std::size_t>> remaining, required_by;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> answered_by;
  std::deque<std::size_t> work;
  std::size_t clock = 0;
  auto lose = [&](std::size_t i, std::size_t why, std::size_t through) {
    lost_at[i] = clock++;
    reason[i] = why;
    via[i] = through;
    work.push_back(i);
  };
  auto settle = [&] {
    const std::size_t n = nodes.size();
    lost_at.assign(n, none);
    reason.assign(n, none);
    via.assign(n, none);
    remaining.assign(n, {});
    answered_by.assign(n, {});
    required_by.assign(n, {});
    work.clear();
    clock = 0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const Node& n = nodes[i];
      if (!n.expanded) continue;
      for (std::size_t o = 0; o < n.obligations.size(); ++o) {
        remaining[i].push_back(n.obligations[o].second.size());
        for (std::size_t j : n.obligations[o].second) answered_by[j].emplace_back(i, o);
      }
      for (std::size_t j : n.required) required_by[j].push_back(i);
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      const Node& n = nodes[i];
      if (!n.expanded || lost_at[i] != none) continue;
      if (n.failure) {
        lose(i, none, none);
        continue;
      }
      for (std::size_t o = 0; o < n.obligations.size(); ++o) {
        if (n.obligations[o].second.empty()) {
          lose(i, o, none);
          break;
        }
      }
    }
    while (!work.empty()) {
      std::size_t j = work.front();
      work.pop_front();
      for (auto [i, o] : answered_by[j]) {
        if (lost_at[i] == none && --remaining[i][o] == 0) lose(i, o, none);
      }
      for (std::size_t i : required_by[j]) {
        if (lost_at[i] == none) lose(i, none, j);
      }
    }
    return lost_at[0] != none;
  };

  while (!queue.empty() && res.expanded < cap) {
    std::size_t id = queue.front();
    queue.pop_front();
    Expansion<Key> ex = expand(nodes[id].key);
    ++res.expanded;
    if (ex.skipped) {
      skipped = res.skipped = true;
      continue;
    }
    std::vector<std::pair<Obligation, std::vector<std::size_t>>> obls;
    for (auto& [ob, keys] : ex.obligations) {
      std::vector<std::size_t> ids;
      for (const auto& k : keys) ids.push_back(intern(k));
      std::sort(ids.begin(), ids.end());
      ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
      obls.emplace_back(std::move(ob), std::move(ids));
    }
    std::vector<std::size_t> req;
    for (const auto& k : ex.required) req.push_back(intern(k));
    Node& n = nodes[id];
    n.expanded = true;
    n.failure = std::move(ex.failure);
    n.obligations = std::move(obls);
    n.required = std::move(req);
    if ((res.expanded & (res.expanded - 1)) == 0 && settle()) break;
  }
  const bool truncated = skipped || !queue.empty();
  settle();

  if (lost_at[0] == none) {
    res.outcome = truncated ? Outcome::Inconclusive : Outcome::Holds;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
      if (nodes[i].expanded && lost_at[i] == none) res.good.push_back(nodes[i].key);
    }
    return res;
  }
  res.outcome = Outcome::Fails;
  // Replay: every answer of the blamed obligation lost strictly earlier.
  std::size_t cur = 0;
  for (;;) {
    const Node& n = nodes[cur];
    if (n.failure) {
      res.last = n.key;
      res.failure = n.failure;
      break;
    }
    if (reason[cur] == none) {
      cur = via[cur];
      continue;
    }
    const auto& [ob, answers] = n.obligations[reason[cur]];
    if (answers.empty()) {
      res.last = n.key;
      res.unmatched = ob;
      break;
    }
    std::size_t next = *std::min_element(answers.begin(), answers.end(),
                                         [&](std::size_t a, std::size_t b) { return lost_at[a] < lost_at[b]; });
    res.path.emplace_back(n.key, ob);
    cur = next;
  }
  return res;
}

// Renames hypothesis targets apart as #0, #1, ...
std::pair<std::vector<Hypothesis>, Term> freshen(const Ruloid& r) {
  Renaming ren;
  std::vector<Hypothesis> hyps;
  for (const auto& h : r.hypotheses) {
    auto name = "#" + std::to_string(ren.size());
    ren[h.target] = name;
    hyps.push_back(Hypothesis{h.source, h.label, name});
  }
  return {std::move(hyps), rename(ren, r.target)};
}

// A position branching past the position cap.
struct Overflow {};

// Every map sending each hypothesis of `hyps` to a hypothesis of `into`
// with the same source and label, as a renaming of targets.
std::vector<Renaming> embeddings(const std::vector<Hypothesis>& hyps, const std::vector<Hypothesis>& into,
                                 std::size_t limit) {
  std::vector<std::vector<const Hypothesis*>> cands;
  std::vector<std::size_t> sizes;
  for (const auto& h : hyps) {
    auto& c = cands.emplace_back();
    for (const auto& g : into) {
      if (g.source == h.source && g.label == h.label) c.push_back(&g);
    }
    sizes.push_back(c.size());
  }
  std::size_t product = 1;
  for (auto n : sizes) {
    if (n && product > limit / n) throw Overflow{};
    product *= n;
  }
  std::vector<Renaming> out;
  detail::for_each_choice(sizes, [&](const std::vector<std::size_t>& pick) {
    Renaming r;
    for (std::size_t k = 0; k < pick.size(); ++k) r[hyps[k].target] = cands[k][pick[k]]->target;
    out.push_back(std::move(r));
  });
  return out;
}

using Pair = std::pair<Term, Term>;

Pair canonical_pair(const Term& s, const Term& t) {
  std::vector<Term> ts{s, t};
  auto [c, r] = canonical_rename(ts);
  return {c[0], c[1]};
}

HpState canonical_state(const Term& s, const Term& t, std::vector<Hypothesis> gamma) {
  auto live = vars(s);
  for (const auto& v : vars(t)) live.insert(v);
  std::erase_if(gamma, [&](const Hypothesis& h) { return !live.count(h.source) && !live.count(h.target); });
  std::map<std::string, std::size_t> rank;
  auto name = [&](const std::string& v) { rank.try_emplace(v, rank.size()); };
  for (const auto& v : vars_in_order(s)) name(v);
  for (const auto& v : vars_in_order(t)) name(v);
  auto rank_of = [&](const std::string& v) {
    auto it = rank.find(v);
    return it == rank.end() ? std::numeric_limits<std::size_t>::max() : it->second;
  };
  std::sort(gamma.begin(), gamma.end(), [&](const Hypothesis& a, const Hypothesis& b) {
    return std::tuple(rank_of(a.source), a.label, rank_of(a.target), a.source, a.target) <
           std::tuple(rank_of(b.source), b.label, rank_of(b.target), b.source, b.target);
  });
  for (const auto& h : gamma) {
    name(h.source);
    name(h.target);
  }
  Renaming ren;
  for (const auto& [v, i] : rank) ren[v] = "v" + std::to_string(i);
  for (auto& h : gamma) h = Hypothesis{ren.at(h.source), h.label, ren.at(h.target)};
  std::sort(gamma.begin(), gamma.end());
  gamma.erase(std::unique(gamma.begin(), gamma.end()), gamma.end());
  return HpState{rename(ren, s), rename(ren, t), std::move(gamma)};
}

// Every identification of the variables of (s, t) other than the identity.
// Identifications of variables in (s, t); nullopt past `limit` of them.
std::optional<std::vector<Pair>> merging_variants(const Term& s, const Term& t, std::size_t limit) {
  auto order = vars_in_order(s);
  for (const auto& v : vars_in_order(t)) {
    if (std::find(order.begin(), order.end(), v) == order.end()) order.push_back(v);
  }
  std::vector<Pair> out;
  const std::size_t n = order.size();
  if (n < 2) return out;
  // restricted growth strings enumerate set partitions
  std::vector<std::size_t> block(n, 0), top(n, 0);
  for (;;) {
    bool identity = true;
    for (std::size_t i = 0; i < n; ++i) identity = identity && block[i] == i;
    if (!identity) {
      Renaming r;
      std::vector<std::string> rep(n);
      for (std::size_t i = 0; i < n; ++i) {
        if (rep[block[i]].empty()) rep[block[i]] = order[i];
        r[order[i]] = rep[block[i]];
      }
      out.push_back(canonical_pair(rename(r, s), rename(r, t)));
      if (out.size() > limit) return std::nullopt;
    }
    std::size_t i = n - 1;
    while (i > 0 && block[i] == top[i - 1] + 1) --i;
    if (i == 0) break;
    ++block[i];
    top[i] = std::max(top[i - 1], block[i]);
    for (std::size_t j = i + 1; j < n; ++j) {
      block[j] = 0;
      top[j] = top[i];
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

const char* kMostGeneralNote =
    "obligations range over most-general ruloids; merged instances are covered by closing the relation under "
    "variable identification";
const char* kGcNote =
    "hypotheses mentioning no variable of the pair are discarded before positions are compared";

template <class Key>
void fill_failure(Verdict& v, const GameResult<Key>& g, auto&& to_state) {
  for (const auto& [k, ob] : g.path) v.path.push_back(GameStep{to_state(k), ob.side, ob.ruloid});
  HpState last = to_state(*g.last);
  if (g.failure) {
    v.improper = Pair{last.s, last.t};
    v.failing_state = last;
    v.detail = "improper pair " + to_string(last);
  } else {
    v.unmatched = g.unmatched->ruloid;
    v.unmatched_side = g.unmatched->side;
    v.failing_state = last;
    v.detail = "ruloid " + to_string(*v.unmatched) + " of the " + v.unmatched_side + " at " + to_string(last) +
               " has no match";
  }
}

}  // namespace

Verdict strong_bisim(Semantics& sem, const Term& p, const Term& q, const Bounds& b) {
  if (!p.is_closed() || !q.is_closed()) throw Error("strong bisimilarity needs closed terms");
  Verdict v;
  v.notion = Notion::Strong;
  Lts lp = sem.explore(p, b.state_cap);
  Lts lq = sem.explore(q, b.state_cap);
  v.explored = lp.states.size() + lq.states.size();
  auto fail = [&](auto& eq, std::size_t k) {
    v.outcome = Outcome::Fails;
    v.formula = distinguish(sem, p, q, k, eq);
    v.distinguished = Pair{p, q};
    v.detail = to_string(p) + " satisfies " + to_string(*v.formula) + ", " + to_string(q) + " does not";
  };
  if (lp.complete && lq.complete) {
    Refinement ref(sem, lp, lq);
    std::size_t k = first_split(p, q, ref.levels(), ref);
    if (k) {
      fail(ref, k);
      return v;
    }
    v.outcome = Outcome::Holds;
    for (const auto& u : lp.states) {
      for (const auto& w : lq.states) {
        if (ref.equiv(u, w, ref.levels())) v.relation.emplace_back(u, w);
      }
    }
    v.detail = "bisimilar by partition refinement over " + std::to_string(v.explored) + " states";
    return v;
  }
  Stratified strat(sem);
  if (std::size_t k = first_split(p, q, b.depth, strat)) {
    fail(strat, k);
    return v;
  }
  v.detail = "state space exceeds " + std::to_string(b.state_cap) + " states; bisimilar up to depth " +
             std::to_string(b.depth);
  return v;
}

Verdict ci_bisim(Semantics& sem, const Term& s, const Term& t, const Bounds& b) {
  auto order = vars_in_order(s);
  for (const auto& x : vars_in_order(t)) {
    if (std::find(order.begin(), order.end(), x) == order.end()) order.push_back(x);
  }
  if (order.empty()) {
    Verdict v = strong_bisim(sem, s, t, b);
    v.notion = Notion::Ci;
    return v;
  }
  Verdict v;
  v.notion = Notion::Ci;
  auto closed = enumerate_closed_terms(sem.tss().signature(), b.term_size);
  if (closed.empty()) {
    v.outcome = Outcome::Holds;
    v.vacuous = true;
    v.detail = "vacuous: the signature has no constants, so no closing substitution exists";
    return v;
  }
  std::size_t undecided = 0;
  std::size_t count = 0;
  std::optional<Verdict> found;
  detail::for_each_choice(std::vector<std::size_t>(order.size(), closed.size()),
                          [&](const std::vector<std::size_t>& pick) {
                            if (found) return;
                            ++count;
                            Substitution sigma;
                            for (std::size_t i = 0; i < order.size(); ++i) sigma.emplace(order[i], closed[pick[i]]);
                            Verdict inst = strong_bisim(sem, opensos::apply(sigma, s), opensos::apply(sigma, t), b);
                            if (inst.outcome == Outcome::Fails) {
                              inst.notion = Notion::Ci;
                              inst.substitution = sigma;
                              found = std::move(inst);
                            } else if (inst.outcome == Outcome::Inconclusive) {
                              ++undecided;
                            }
                          });
  v.explored = count;
  if (found) {
    std::string sub;
    for (const auto& [x, p] : *found->substitution) sub += (sub.empty() ? "" : ", ") + x + " := " + to_string(p);
    found->detail = "under {" + sub + "}: " + found->detail;
    found->explored = count;
    return std::move(*found);
  }
  v.outcome = Outcome::Inconclusive;
  v.no_counterexample = undecided == 0;
  v.detail = "no counterexample among " + std::to_string(count) + " closing substitutions with terms of size <= " +
             std::to_string(b.term_size);
  if (undecided) v.detail += " (" + std::to_string(undecided) + " instances undecided)";
  return v;
}

Verdict fh_bisim(Semantics& sem, const Term& s, const Term& t, const Bounds& b, bool proper) {
  auto expand = [&](const Pair& key) {
    Expansion<Pair> ex;
    const auto& [l, r] = key;
    if (l.size() > b.position_cap || r.size() > b.position_cap) return open_position<Pair>();
    if (proper && !is_proper_pair(l, r)) {
      ex.failure = "improper";
      return ex;
    }
    auto side = [&](const Term& mine, const Term& other, bool lhs) {
      for (const auto& ob : sem.ruloids(mine, b.position_cap)) {
        auto [gamma, target] = freshen(ob);
        std::vector<Pair> answers;
        for (const auto& ans : sem.ruloids(other, b.position_cap)) {
          if (ans.label != ob.label) continue;
          for (const auto& pi : embeddings(ans.hypotheses, gamma, b.position_cap)) {
            Term reply = rename(pi, ans.target);
            answers.push_back(lhs ? canonical_pair(target, reply) : canonical_pair(reply, target));
            if (answers.size() > b.position_cap) throw Overflow{};
          }
        }
        ex.obligations.emplace_back(Obligation{lhs ? "lhs" : "rhs", ob}, std::move(answers));
      }
    };
    try {
      side(l, r, true);
      side(r, l, false);
    } catch (const RuloidLimit&) {
      return open_position<Pair>();
    } catch (const Overflow&) {
      return open_position<Pair>();
    }
    auto merged = merging_variants(l, r, b.position_cap);
    if (!merged) return open_position<Pair>();
    ex.required = std::move(*merged);
    return ex;
  };
  auto g = solve<Pair>(Pair{s, t}, b.pair_cap, expand);
  Verdict v;
  v.notion = proper ? Notion::Pfh : Notion::Fh;
  v.outcome = g.outcome;
  v.explored = g.expanded;
  auto as_state = [](const Pair& p) { return HpState{p.first, p.second, {}}; };
  if (g.outcome == Outcome::Fails) {
    fill_failure(v, g, as_state);
    return v;
  }
  v.notes.push_back(kMostGeneralNote);
  if (g.outcome == Outcome::Holds) {
    std::set<Pair> rel;
    for (const auto& [l, r] : g.good) {
      rel.insert(canonical_pair(l, r));
      rel.insert(canonical_pair(r, l));
    }
    v.relation.assign(rel.begin(), rel.end());
    v.detail = "relation of " + std::to_string(rel.size()) + " pairs closes (most-general discipline)";
  } else {
    v.detail = g.skipped ? "some position exceeds the position cap of " + std::to_string(b.position_cap)
                         : "no losing position within " + std::to_string(b.pair_cap) + " expanded pairs";
  }
  return v;
}

Verdict hp_bisim(Semantics& sem, const Term& s, const Term& t, const Bounds& b, bool proper) {
  auto expand = [&](const HpState& key) {
    Expansion<HpState> ex;
    if (key.s.size() > b.position_cap || key.t.size() > b.position_cap || key.gamma.size() > b.position_cap) {
      return open_position<HpState>();
    }
    if (proper && !is_proper_pair(key.s, key.t)) {
      ex.failure = "improper";
      return ex;
    }
    auto side = [&](const Term& mine, const Term& other, bool lhs) {
      for (const auto& ob : sem.ruloids(mine, b.position_cap)) {
        auto [fresh, target] = freshen(ob);
        std::vector<Hypothesis> gamma = key.gamma;
        gamma.insert(gamma.end(), fresh.begin(), fresh.end());
        std::vector<HpState> answers;
        for (const auto& ans : sem.ruloids(other, b.position_cap)) {
          if (ans.label != ob.label) continue;
          for (const auto& pi : embeddings(ans.hypotheses, gamma, b.position_cap)) {
            Term reply = rename(pi, ans.target);
            answers.push_back(lhs ? canonical_state(target, reply, gamma) : canonical_state(reply, target, gamma));
            if (answers.size() > b.position_cap) throw Overflow{};
          }
        }
        ex.obligations.emplace_back(Obligation{lhs ? "lhs" : "rhs", ob}, std::move(answers));
      }
    };
    try {
      side(key.s, key.t, true);
      side(key.t, key.s, false);
    } catch (const RuloidLimit&) {
      return open_position<HpState>();
    } catch (const Overflow&) {
      return open_position<HpState>();
    }
    return ex;
  };
  auto g = solve<HpState>(HpState{s, t, {}}, b.pair_cap, expand);
  Verdict v;
  v.notion = proper ? Notion::Php : Notion::Hp;
  v.outcome = g.outcome;
  v.explored = g.expanded;
  if (g.outcome == Outcome::Fails) {
    fill_failure(v, g, [](const HpState& st) { return st; });
    return v;
  }
  v.notes.push_back(kMostGeneralNote);
  v.notes.push_back(kGcNote);
  if (g.outcome == Outcome::Holds) {
    std::set<HpState> rel;
    for (const auto& st : g.good) {
      rel.insert(canonical_state(st.s, st.t, st.gamma));
      rel.insert(canonical_state(st.t, st.s, st.gamma));
    }
    v.hp_relation.assign(rel.begin(), rel.end());
    v.detail = "family of " + std::to_string(rel.size()) + " positions closes (most-general discipline)";
  } else {
    v.detail = g.skipped ? "some position exceeds the position cap of " + std::to_string(b.position_cap)
                         : "no losing position within " + std::to_string(b.pair_cap) + " expanded positions";
  }
  return v;
}

Verdict check(Notion n, Semantics& sem, const Term& s, const Term& t, const Bounds& b) {
  switch (n) {
    case Notion::Strong: return strong_bisim(sem, s, t, b);
    case Notion::Ci: return ci_bisim(sem, s, t, b);
    case Notion::Fh: return fh_bisim(sem, s, t, b, false);
    case Notion::Hp: return hp_bisim(sem, s, t, b, false);
    case Notion::Pfh: return fh_bisim(sem, s, t, b, true);
    case Notion::Php: return hp_bisim(sem, s, t, b, true);
  }
  throw Error("unknown notion");
}

Verdict check(Notion n, const TssPtr& tss, const Term& s, const Term& t, const Bounds& b) {
  Semantics sem(tss);
  return check(n, sem, s, t, b);
}

}  // namespace opensos
