#include "opensos/term.hpp"

#include <algorithm>
#include <sstream>

namespace opensos {

void Signature::add(const std::string& name, std::size_t arity) {
  auto [it, inserted] = ops_.emplace(name, arity);
  if (!inserted && it->second != arity) {
    throw Error("operator '" + name + "' declared with arity " + std::to_string(arity) +
                " but already has arity " + std::to_string(it->second));
  }
}

std::optional<std::size_t> Signature::arity(const std::string& name) const {
  auto it = ops_.find(name);
  if (it == ops_.end()) return std::nullopt;
  return it->second;
}

bool Signature::has_constants() const {
  return std::any_of(ops_.begin(), ops_.end(), [](const auto& kv) { return kv.second == 0; });
}

Signature Signature::merge(const Signature& a, const Signature& b) {
  Signature out = a;
  for (const auto& [name, arity] : b.ops_) out.add(name, arity);
  return out;
}

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Term Term::variable(std::string name) {
  auto n = std::make_shared<Node>();
  n->is_var = true;
  n->hash = mix(0x51ed27, std::hash<std::string>{}(name));
  n->name = std::move(name);
  n->closed = false;
  return Term(std::move(n));
}

Term Term::make(std::string op, std::vector<Term> args) {
  auto n = std::make_shared<Node>();
  n->hash = mix(0x0a11ce, std::hash<std::string>{}(op));
  n->size = 1;
  for (const auto& a : args) {
    n->size += a.size();
    n->closed = n->closed && a.is_closed();
    n->hash = mix(n->hash, a.hash());
  }
  n->name = std::move(op);
  n->args = std::move(args);
  return Term(std::move(n));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.is_var() != b.is_var() || a.name() != b.name() ||
      a.arity() != b.arity()) {
    return false;
  }
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (!(a.arg(i) == b.arg(i))) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  // variables sort before applications
  if (a.is_var() != b.is_var()) {
    return a.is_var() ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (auto c = a.name().compare(b.name()); c != 0) {
    return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (auto c = a.arity() <=> b.arity(); c != 0) return c;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (auto c = a.arg(i) <=> b.arg(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

namespace {

void print(const Term& t, std::string& out) {
  out += t.name();
  if (t.is_var() || t.arity() == 0) return;
  out += '(';
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i) out += ", ";
    print(t.arg(i), out);
  }
  out += ')';
}

}  // namespace

std::string to_string(const Term& t) {
  std::string out;
  print(t, out);
  return out;
}

std::string to_string(const Equation& e) {
  return to_string(e.lhs) + " = " + to_string(e.rhs);
}

void collect_vars_in_order(const Term& t, std::vector<std::string>& out) {
  if (t.is_closed()) return;
  if (t.is_var()) {
    if (std::find(out.begin(), out.end(), t.name()) == out.end()) out.push_back(t.name());
    return;
  }
  for (const auto& a : t.args()) collect_vars_in_order(a, out);
}

std::vector<std::string> vars_in_order(const Term& t) {
  std::vector<std::string> out;
  collect_vars_in_order(t, out);
  return out;
}

std::set<std::string> vars(const Term& t) {
  auto v = vars_in_order(t);
  return {v.begin(), v.end()};
}

bool occurs(const std::string& var, const Term& t) {
  if (t.is_closed()) return false;
  if (t.is_var()) return t.name() == var;
  return std::any_of(t.args().begin(), t.args().end(),
                     [&](const Term& a) { return occurs(var, a); });
}

Term apply(const Substitution& sigma, const Term& t) {
  if (t.is_closed() || sigma.empty()) return t;
  if (t.is_var()) {
    auto it = sigma.find(t.name());
    return it == sigma.end() ? t : it->second;
  }
  std::vector<Term> args;
  args.reserve(t.arity());
  bool changed = false;
  for (const auto& a : t.args()) {
    args.push_back(opensos::apply(sigma, a));
    changed = changed || !(args.back() == a);
  }
  return changed ? Term::make(t.name(), std::move(args)) : t;
}

Term rename(const Renaming& r, const Term& t) {
  Substitution s;
  for (const auto& [from, to] : r) s.emplace(from, Term::variable(to));
  return opensos::apply(s, t);
}

Substitution compose(const Substitution& outer, const Substitution& inner) {
  Substitution out;
  for (const auto& [v, t] : inner) out.emplace(v, opensos::apply(outer, t));
  for (const auto& [v, t] : outer) out.emplace(v, t);  // only where inner is silent
  return out;
}

bool is_linear(const Term& t) {
  std::vector<std::string> seen;
  bool linear = true;
  std::function<void(const Term&)> walk = [&](const Term& u) {
    if (!linear || u.is_closed()) return;
    if (u.is_var()) {
      if (std::find(seen.begin(), seen.end(), u.name()) != seen.end()) linear = false;
      seen.push_back(u.name());
      return;
    }
    for (const auto& a : u.args()) walk(a);
  };
  walk(t);
  return linear;
}

std::pair<std::vector<Term>, Renaming> canonical_rename(std::span<const Term> ts) {
  std::vector<std::string> order;
  for (const auto& t : ts) collect_vars_in_order(t, order);
  Renaming r;
  for (std::size_t i = 0; i < order.size(); ++i) r.emplace(order[i], "v" + std::to_string(i));
  std::vector<Term> out;
  out.reserve(ts.size());
  for (const auto& t : ts) out.push_back(rename(r, t));
  return {std::move(out), std::move(r)};
}

std::pair<Term, Renaming> canonical_rename(const Term& t) {
  auto [ts, r] = canonical_rename(std::span<const Term>(&t, 1));
  return {ts.front(), std::move(r)};
}

void check_well_formed(const Term& t, const Signature& sig) {
  if (t.is_var()) {
    if (sig.contains(t.name())) {
      throw Error("'" + t.name() + "' is an operator and cannot be used as a variable");
    }
    return;
  }
  auto ar = sig.arity(t.name());
  if (!ar) throw Error("undeclared operator '" + t.name() + "'");
  if (*ar != t.arity()) {
    throw Error("operator '" + t.name() + "' has arity " + std::to_string(*ar) + " but is applied to " +
                std::to_string(t.arity()) + " argument(s)");
  }
  for (const auto& a : t.args()) check_well_formed(a, sig);
}

bool is_well_formed(const Term& t, const Signature& sig) {
  try {
    check_well_formed(t, sig);
    return true;
  } catch (const Error&) {
    return false;
  }
}

namespace {

// Calls `emit` for every composition of `total` into `parts` non-negative
// summands, in lexicographic order.
void compositions(std::size_t total, std::size_t parts, std::vector<std::size_t>& cur,
                  const std::function<void(const std::vector<std::size_t>&)>& emit) {
  if (cur.size() + 1 == parts) {
    cur.push_back(total);
    emit(cur);
    cur.pop_back();
    return;
  }
  for (std::size_t k = 0; k <= total; ++k) {
    cur.push_back(k);
    compositions(total - k, parts, cur, emit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Term> enumerate_terms(const Signature& sig, std::span<const std::string> variables,
                                  std::size_t max_size) {
  std::vector<std::vector<Term>> by_size(max_size + 1);
  for (const auto& v : variables) by_size[0].push_back(Term::variable(v));
  for (std::size_t n = 1; n <= max_size; ++n) {
    for (const auto& [op, arity] : sig.operators()) {
      if (arity == 0) {
        if (n == 1) by_size[n].push_back(Term::make(op));
        continue;
      }
      std::vector<std::size_t> cur;
      compositions(n - 1, arity, cur, [&](const std::vector<std::size_t>& sizes) {
        std::vector<Term> args(arity, Term::variable("_"));
        std::function<void(std::size_t)> fill = [&](std::size_t i) {
          if (i == arity) {
            by_size[n].push_back(Term::make(op, args));
            return;
          }
          for (const auto& t : by_size[sizes[i]]) {
            args[i] = t;
            fill(i + 1);
          }
        };
        fill(0);
      });
    }
  }
  std::vector<Term> out;
  for (const auto& level : by_size) out.insert(out.end(), level.begin(), level.end());
  return out;
}

std::vector<Term> enumerate_closed_terms(const Signature& sig, std::size_t max_size) {
  return enumerate_terms(sig, {}, max_size);
}

}  // namespace opensos
