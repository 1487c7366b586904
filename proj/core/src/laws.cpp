#include "pco/laws.hpp"

#include <algorithm>
#include <functional>

#include "pco/error.hpp"

namespace pco {

LawTable::LawTable(const Signature& sig, Var target, std::vector<Val> outputs)
    : target_(target), outputs_(std::move(outputs)) {
  if (target >= sig.size()) throw Error(ErrorCode::RangeViolation, "law for unknown variable");
  strides_.assign(sig.size(), 0);
  radices_.assign(sig.size(), 1);
  std::size_t stride = 1;
  for (std::size_t i = sig.size(); i-- > 0;) {
    if (i == target) continue;
    strides_[i] = stride;
    radices_[i] = sig.range_size(static_cast<Var>(i));
    if (stride > (std::size_t{1} << 40) / radices_[i])
      throw Error(ErrorCode::RangeViolation, "law table for " + sig.name(target) + " is too large");
    stride *= radices_[i];
  }
  if (outputs_.size() != stride)
    throw Error(ErrorCode::RangeViolation, "law for " + sig.name(target) + " has " +
                                               std::to_string(outputs_.size()) + " entries, expected " +
                                               std::to_string(stride));
  for (Val y : outputs_)
    if (y >= sig.range_size(target))
      throw Error(ErrorCode::RangeViolation, "law for " + sig.name(target) + " yields an out-of-range value");

  // X is a parent iff changing only X changes the output somewhere.
  for (Var x = 0; x < sig.size(); ++x) {
    if (x == target) continue;
    const std::size_t st = strides_[x];
    const std::size_t radix = radices_[x];
    bool depends = false;
    for (std::size_t i = 0; i < outputs_.size() && !depends; ++i) {
      const std::size_t digit = (i / st) % radix;
      for (std::size_t other = 0; other < radix; ++other) {
        if (other == digit) continue;
        const std::size_t j = i - digit * st + other * st;
        if (outputs_[i] != outputs_[j]) {
          depends = true;
          break;
        }
      }
    }
    if (depends) parents_.push_back(x);
  }
}

std::size_t LawTable::index_of(const Assignment& s) const {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < strides_.size(); ++i) idx += strides_[i] * s.values[i];
  return idx;
}

std::vector<Val> LawTable::arguments_at(std::size_t index) const {
  std::vector<Val> out;
  for (std::size_t i = 0; i < strides_.size(); ++i) {
    if (i == target_) continue;
    out.push_back(static_cast<Val>((index / strides_[i]) % radices_[i]));
  }
  return out;
}

bool LawTable::is_constant() const {
  return std::all_of(outputs_.begin(), outputs_.end(), [&](Val y) { return y == outputs_.front(); });
}

std::optional<std::vector<Var>> find_cycle(const std::vector<std::vector<Var>>& parents_of) {
  const std::size_t n = parents_of.size();
  // 0 = unvisited, 1 = on stack, 2 = done
  std::vector<int> color(n, 0);
  std::vector<Var> stack;
  std::optional<std::vector<Var>> found;
  std::function<bool(Var)> visit = [&](Var v) {
    color[v] = 1;
    stack.push_back(v);
    for (Var p : parents_of[v]) {
      if (color[p] == 1) {
        auto it = std::find(stack.begin(), stack.end(), p);
        // stack runs child -> parent, so reverse to list edges in causal direction
        std::vector<Var> cycle(it, stack.end());
        std::reverse(cycle.begin(), cycle.end());
        found = cycle;
        return true;
      }
      if (color[p] == 0 && visit(p)) return true;
    }
    stack.pop_back();
    color[v] = 2;
    return false;
  };
  for (Var v = 0; v < n; ++v)
    if (color[v] == 0 && visit(v)) break;
  return found;
}

FunctionComponent::FunctionComponent(SignaturePtr sig)
    : sig_(std::move(sig)), mask_(0) {
  auto base = std::make_shared<Base>();
  base->tables.resize(sig_->size());
  base_ = std::move(base);
}

FunctionComponent::FunctionComponent(SignaturePtr sig, std::vector<LawTable> tables) : sig_(std::move(sig)) {
  auto base = std::make_shared<Base>();
  base->tables.resize(sig_->size());
  for (auto& t : tables) {
    const Var v = t.target();
    if (v >= sig_->size()) throw Error(ErrorCode::RangeViolation, "law for unknown variable");
    if (base->tables[v]) throw Error(ErrorCode::RangeViolation, "two laws given for " + sig_->name(v));
    if (t.outputs().size() != sig_->assignment_count() / sig_->range_size(v))
      throw Error(ErrorCode::RangeViolation, "law for " + sig_->name(v) + " has the wrong arity");
    mask_ |= std::uint64_t{1} << v;
    base->tables[v] = std::move(t);
  }

  std::vector<std::vector<Var>> parents_of(sig_->size());
  for (Var v = 0; v < sig_->size(); ++v)
    if (base->tables[v]) parents_of[v] = base->tables[v]->parents();
  if (auto cycle = find_cycle(parents_of)) {
    std::vector<std::string> names;
    std::string text;
    for (Var v : *cycle) {
      names.push_back(sig_->name(v));
      text += sig_->name(v) + " -> ";
    }
    text += sig_->name(cycle->front());
    throw CycleError("laws are not recursive: " + text, std::move(names));
  }

  // Kahn's algorithm, smallest index first for determinism.
  std::vector<std::size_t> pending(sig_->size(), 0);
  std::vector<std::vector<Var>> children(sig_->size());
  for (Var v = 0; v < sig_->size(); ++v)
    for (Var p : parents_of[v]) {
      ++pending[v];
      children[p].push_back(v);
    }
  std::vector<Var> ready;
  for (Var v = 0; v < sig_->size(); ++v)
    if (pending[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    auto it = std::min_element(ready.begin(), ready.end());
    const Var v = *it;
    ready.erase(it);
    if (base->tables[v]) base->topo.push_back(v);
    for (Var c : children[v])
      if (--pending[c] == 0) ready.push_back(c);
  }
  base_ = std::move(base);
}

std::vector<Var> FunctionComponent::endogenous() const {
  std::vector<Var> out;
  for (Var v = 0; v < sig_->size(); ++v)
    if (is_endogenous(v)) out.push_back(v);
  return out;
}

const LawTable& FunctionComponent::table(Var v) const {
  if (v >= sig_->size() || !is_endogenous(v))
    throw Error(ErrorCode::NotEndogenous,
                (v < sig_->size() ? sig_->name(v) : std::string("variable")) + " is not endogenous");
  return *base_->tables[v];
}

std::vector<Var> FunctionComponent::topological_order() const {
  std::vector<Var> out;
  for (Var v : base_->topo)
    if (is_endogenous(v)) out.push_back(v);
  return out;
}

FunctionComponent FunctionComponent::restricted(std::uint64_t removed) const {
  FunctionComponent out = *this;
  out.mask_ &= ~removed;
  return out;
}

void FunctionComponent::check_non_constant() const {
  for (Var v : endogenous())
    if (table(v).is_constant())
      throw Error(ErrorCode::ConstantFunction, "law for " + sig_->name(v) + " is constant");
}

bool operator==(const FunctionComponent& a, const FunctionComponent& b) {
  if (a.mask_ != b.mask_) return false;
  if (a.sig_ != b.sig_ && !(*a.sig_ == *b.sig_)) return false;
  if (a.base_ == b.base_) return true;
  for (Var v : a.endogenous())
    if (!(a.table(v) == b.table(v))) return false;
  return true;
}

bool CausalGraph::has_edge(Var from, Var to) const {
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(from, to));
}

CausalGraph causal_graph(const FunctionComponent& laws) {
  CausalGraph g;
  g.vertex_count = laws.signature().size();
  for (Var v : laws.endogenous())
    for (Var p : laws.parents(v)) g.edges.emplace_back(p, v);
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

std::vector<Var> parents(const FunctionComponent& laws, Var v) { return laws.parents(v); }

}  // namespace pco
