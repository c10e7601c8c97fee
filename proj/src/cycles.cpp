#include "ordlen/cycles.hpp"

#include <algorithm>
#include <tuple>

#include "ordlen/errors.hpp"

namespace ordlen {

bool operator<(const DirectedCycle& a, const DirectedCycle& b) {
  if (a.vertices.size() != b.vertices.size()) return a.vertices.size() < b.vertices.size();
  return std::tie(a.vertices, a.colors) < std::tie(b.vertices, b.colors);
}

long long CycleInequality::violation(const std::vector<int>& rho) const {
  long long v = gamma;
  A.for_each([&](int x) { v += rho[x - 1]; });
  B.for_each([&](int x) { v -= rho[x - 1]; });
  return v;
}

bool operator<(const CycleInequality& a, const CycleInequality& b) {
  return std::tuple(a.gamma, a.B.elements(), a.A.elements()) < std::tuple(b.gamma, b.B.elements(), b.A.elements());
}

DirectedCycle normalized(DirectedCycle c) {
  if (c.vertices.empty()) return c;
  auto k = std::min_element(c.vertices.begin(), c.vertices.end()) - c.vertices.begin();
  std::rotate(c.vertices.begin(), c.vertices.begin() + k, c.vertices.end());
  std::rotate(c.colors.begin(), c.colors.begin() + k, c.colors.end());
  return c;
}

namespace {

// Strongly connected component of s inside the vertices `allowed`.
ElementSet component_of(int s, ElementSet allowed, const std::vector<ElementSet>& succ,
                        const std::vector<ElementSet>& pred) {
  auto reach = [&](const std::vector<ElementSet>& adj) {
    ElementSet seen{s}, frontier{s};
    while (!frontier.empty()) {
      ElementSet next;
      frontier.for_each([&](int v) { next |= adj[v - 1] & allowed; });
      frontier = next - seen;
      seen |= next;
    }
    return seen;
  };
  return reach(succ) & reach(pred);
}

class CircuitSearch {
 public:
  CircuitSearch(const KeyGraph& g, const std::function<void(const DirectedCycle&)>& visit, std::size_t limit)
      : g_(g), visit_(visit), limit_(limit), succ_(g.size()), pred_(g.size()), blocked_by_(g.size()) {
    for (const Arc& a : g.arcs())
      if (a.tail != a.head) {
        succ_[a.tail - 1].insert(a.head);
        pred_[a.head - 1].insert(a.tail);
      }
  }

  void run() {
    for (const Arc& a : g_.arcs())
      if (a.tail == a.head) emit({a.tail}, {{a.color}});
    const int n = g_.size();
    for (int s = 1; s <= n; ++s) {
      ElementSet allowed = ElementSet::range(s, n);
      comp_ = component_of(s, allowed, succ_, pred_);
      if (comp_.size() < 2) continue;
      start_ = s;
      blocked_ = {};
      for (auto& b : blocked_by_) b = {};
      circuit(s);
    }
  }

 private:
  bool circuit(int v) {
    bool found = false;
    stack_.push_back(v);
    blocked_.insert(v);
    (succ_[v - 1] & comp_).for_each([&](int w) {
      if (w == start_) {
        report();
        found = true;
      } else if (!blocked_.contains(w) && circuit(w)) {
        found = true;
      }
    });
    if (found) {
      unblock(v);
    } else {
      (succ_[v - 1] & comp_).for_each([&](int w) { blocked_by_[w - 1].insert(v); });
    }
    stack_.pop_back();
    return found;
  }

  void unblock(int v) {
    blocked_.erase(v);
    ElementSet waiting = blocked_by_[v - 1];
    blocked_by_[v - 1] = {};
    waiting.for_each([&](int w) {
      if (blocked_.contains(w)) unblock(w);
    });
  }

  // one cycle per choice of colored arc on each step
  void report() {
    const std::size_t k = stack_.size();
    std::vector<std::vector<ArcColor>> choices(k);
    for (std::size_t i = 0; i < k; ++i) {
      int a = stack_[i], b = stack_[(i + 1) % k];
      for (ArcColor c : {ArcColor::blue, ArcColor::red})
        if (g_.has_arc(a, b, c)) choices[i].push_back(c);
    }
    emit(stack_, choices);
  }

  void emit(const std::vector<int>& verts, const std::vector<std::vector<ArcColor>>& choices) {
    DirectedCycle c{verts, std::vector<ArcColor>(verts.size())};
    std::function<void(std::size_t)> pick = [&](std::size_t i) {
      if (i == verts.size()) {
        if (++count_ > limit_) throw CycleLimitExceeded(limit_);
        visit_(c);
        return;
      }
      for (ArcColor col : choices[i]) {
        c.colors[i] = col;
        pick(i + 1);
      }
    };
    pick(0);
  }

  const KeyGraph& g_;
  const std::function<void(const DirectedCycle&)>& visit_;
  std::size_t limit_;
  std::size_t count_ = 0;
  std::vector<ElementSet> succ_, pred_, blocked_by_;
  ElementSet comp_, blocked_;
  int start_ = 0;
  std::vector<int> stack_;
};

}  // namespace

void for_each_cycle(const KeyGraph& g, const std::function<void(const DirectedCycle&)>& visit, std::size_t limit) {
  CircuitSearch(g, visit, limit).run();
}

std::vector<DirectedCycle> enumerate_cycles(const KeyGraph& g, std::size_t limit) {
  std::vector<DirectedCycle> out;
  for_each_cycle(g, [&](const DirectedCycle& c) { out.push_back(normalized(c)); }, limit);
  std::sort(out.begin(), out.end());
  return out;
}

CycleInequality cycle_inequality(const KeyGraph& g, const DirectedCycle& c) {
  const int k = c.length();
  if (k == 0 || c.colors.size() != c.vertices.size()) throw NotACycle("cycle needs one color per arc");
  ElementSet seen;
  for (int v : c.vertices) {
    if (v < 1 || v > g.size()) throw NotACycle("vertex " + std::to_string(v) + " is out of range");
    if (seen.contains(v)) throw NotACycle("vertex " + std::to_string(v) + " repeats");
    seen.insert(v);
  }
  for (int i = 0; i < k; ++i) {
    int a = c.vertices[i], b = c.vertices[(i + 1) % k];
    if (!g.has_arc(a, b, c.colors[i]))
      throw NotACycle("no " + std::string(color_name(c.colors[i])) + " arc " + std::to_string(a) + "->" +
                      std::to_string(b));
  }
  CycleInequality q;
  if (k == 1) {
    q.B.insert(c.vertices[0]);
    return q;
  }
  for (int i = 0; i < k; ++i) {
    ArcColor in = c.colors[(i + k - 1) % k], out = c.colors[i];
    if (out == ArcColor::blue) ++q.gamma;
    if (in == ArcColor::blue && out == ArcColor::blue) q.A.insert(c.vertices[i]);
    if (in == ArcColor::red && out == ArcColor::red) q.B.insert(c.vertices[i]);
  }
  return q;
}

LengthPolyhedron length_polyhedron(const IntervalOrder& order, std::size_t cycle_limit) {
  const auto canon = compute_canonical(order);
  const KeyGraph g = build_key_graph(canon);
  LengthPolyhedron q;
  q.apex = canon.apex();
  for_each_cycle(g, [&](const DirectedCycle& c) { q.inequalities.push_back(cycle_inequality(g, c)); }, cycle_limit);
  std::sort(q.inequalities.begin(), q.inequalities.end());
  q.inequalities.erase(std::unique(q.inequalities.begin(), q.inequalities.end()), q.inequalities.end());
  return q;
}

namespace {

// larger violation, then larger support, then canonical order
bool more_informative(const CycleInequality& a, long long va, const CycleInequality& b, long long vb) {
  if (va != vb) return va > vb;
  int sa = a.A.size() + a.B.size(), sb = b.A.size() + b.B.size();
  if (sa != sb) return sa > sb;
  return a < b;
}

}  // namespace

Membership is_member(const LengthPolyhedron& q, const std::vector<int>& rho) {
  if (rho.size() != q.apex.size()) throw DimensionMismatch(q.apex.size(), rho.size());
  Membership m;
  long long worst = 0;
  for (const auto& ineq : q.inequalities) {
    long long v = ineq.violation(rho);
    if (v <= 0) continue;
    if (!m.violated || more_informative(ineq, v, *m.violated, worst)) {
      m.violated = ineq;
      worst = v;
    }
  }
  m.member = !m.violated.has_value();
  return m;
}

Extension extend_to_location(const IntervalOrder& order, const std::vector<int>& rho, std::size_t cycle_limit) {
  const int n = order.size();
  if (rho.size() != static_cast<std::size_t>(n)) throw DimensionMismatch(n, rho.size());
  const KeyGraph g = build_key_graph(compute_canonical(order));

  auto weight = [&](const Arc& a) -> long long {
    return a.color == ArcColor::blue ? rho[a.tail - 1] + 1LL : -static_cast<long long>(rho[a.head - 1]);
  };

  bool infeasible = false;
  std::optional<DirectedCycle> found;
  for (const Arc& a : g.arcs())
    if (a.tail == a.head && rho[a.tail - 1] < 0) {
      infeasible = true;
      found = DirectedCycle{{a.tail}, {ArcColor::red}};
      break;
    }

  std::vector<long long> dist(n, 0);
  if (!infeasible) {
    std::vector<const Arc*> via(n, nullptr);
    int changed_at = 0;
    for (int round = 0; round <= n; ++round) {
      changed_at = 0;
      for (const Arc& a : g.arcs()) {
        if (a.tail == a.head) continue;
        long long cand = dist[a.tail - 1] + weight(a);
        if (cand > dist[a.head - 1]) {
          dist[a.head - 1] = cand;
          via[a.head - 1] = &a;
          changed_at = a.head;
        }
      }
      if (!changed_at) break;
    }
    if (changed_at) {
      infeasible = true;
      // walk back n steps to land on the positive cycle, then read it off
      int v = changed_at;
      for (int s = 0; s < n && v; ++s) v = via[v - 1] ? via[v - 1]->tail : 0;
      if (v) {
        DirectedCycle c;
        int u = v;
        do {
          const Arc* a = via[u - 1];
          c.vertices.push_back(a->tail);
          c.colors.push_back(a->color);
          u = a->tail;
        } while (u != v && c.vertices.size() <= static_cast<std::size_t>(n));
        if (u == v) {
          std::reverse(c.vertices.begin(), c.vertices.end());
          std::reverse(c.colors.begin(), c.colors.end());
          found = normalized(c);
        }
      }
    }
  }

  if (!infeasible) {
    std::vector<Interval> iv;
    for (int x = 1; x <= n; ++x) {
      int left = static_cast<int>(dist[x - 1]);
      iv.push_back({left, left + rho[x - 1]});
    }
    return IntervalRepresentation(std::move(iv));
  }

  std::optional<InfeasibilityCertificate> cert;
  if (found) {
    CycleInequality q = cycle_inequality(g, *found);
    cert = InfeasibilityCertificate{*found, q, q.violation(rho)};
  }
  try {
    for (const auto& c : enumerate_cycles(g, cycle_limit)) {
      CycleInequality q = cycle_inequality(g, c);
      long long v = q.violation(rho);
      if (v > 0 && (!cert || more_informative(q, v, cert->inequality, cert->violation)))
        cert = InfeasibilityCertificate{c, q, v};
    }
  } catch (const CycleLimitExceeded&) {
    if (!cert) throw;
  }
  if (!cert) throw Error("positive cycle detected but no violated cycle inequality found");
  return *cert;
}

}  // namespace ordlen
