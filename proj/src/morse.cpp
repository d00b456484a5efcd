#include "ptopo/morse.hpp"

#include <bit>
#include <sstream>

namespace ptopo {

namespace {
// Split block i (1-based) of tau into its `head` smallest elements and the
// rest, inserting both in place of the block.
Osp split_block(const Osp& tau, int i, int head) {
  std::vector<int> elems = mask_elements(tau.blocks[i - 1]);
  // An empty tail is allowed only when splitting the final block: it appends
  // an empty pointed block (m = 0).
  bool last = (i == tau.num_blocks());
  if (head <= 0 || head > static_cast<int>(elems.size()) ||
      (!last && head == static_cast<int>(elems.size())))
    throw std::logic_error("split_block: bad split size");
  Mask x = 0, y = 0;
  for (int t = 0; t < static_cast<int>(elems.size()); ++t)
    (t < head ? x : y) |= Mask(1) << (elems[t] - 1);
  Osp r;
  for (int j = 0; j < tau.num_blocks(); ++j) {
    if (j == i - 1) {
      r.blocks.push_back(x);
      r.blocks.push_back(y);
    } else {
      r.blocks.push_back(tau.blocks[j]);
    }
  }
  return r;
}
}  // namespace

MatchDecision match_face(const Osp& tau, const KnapsackPartition& kp) {
  int r = tau.num_blocks();
  MatchDecision out;
  for (int i = 1; i <= r - 1; ++i) {
    int size_i = std::popcount(tau.blocks[i - 1]);
    // B_i: kappa(|C_i|) < |C_i|: the block splits off its kappa smallest.
    if (kp.kappa(size_i) < size_i) {
      out.status = MatchStatus::MatchedUp;
      out.partner = split_block(tau, i, kp.kappa(size_i));
      out.edge_type = i;
      return out;
    }
    // A_i: max(C_i) < min(C_{i+1}) together with the size condition that
    // makes the merge invert the corresponding split: the merged block must
    // re-split into exactly C_i and C_{i+1}.  For i <= r-2 that is
    // |C_i| <= kappa(|C_{i+1}|); for i = r-1 it is
    // |C_{r-1}| = kappa(|C_{r-1}| + |C_r| - m).
    bool a_i;
    Mask next = tau.blocks[i];
    if (next == 0) {
      a_i = true;  // min of the empty block is +infinity
    } else {
      a_i = mask_max(tau.blocks[i - 1]) < mask_min(next);
    }
    int size_next = std::popcount(next);
    if (a_i) {
      if (i <= r - 2) {
        a_i = size_i <= kp.kappa(size_next);
      } else {
        int s = size_i + size_next - kp.m;
        a_i = kp.in_domain(s) && kp.kappa(s) == size_i;
      }
    }
    if (a_i) {
      out.status = MatchStatus::MatchedDown;
      out.partner = tau.merge(i);
      out.edge_type = i;
      return out;
    }
  }
  // B_r: |C_r| > m: split off the kappa(|C_r| - m) smallest elements.
  int size_r = std::popcount(tau.blocks[r - 1]);
  if (size_r > kp.m) {
    out.status = MatchStatus::MatchedUp;
    out.partner = split_block(tau, r, kp.kappa(size_r - kp.m));
    out.edge_type = r;
    return out;
  }
  out.status = MatchStatus::Critical;
  return out;
}

std::vector<Osp> MorseMatching::critical_cells() const {
  std::vector<Osp> out;
  for (const auto& [f, d] : decisions)
    if (d.status == MatchStatus::Critical) out.push_back(f);
  std::sort(out.begin(), out.end());
  return out;
}

MorseMatching build_matching(const KnapsackPartition& kp) {
  MorseMatching m;
  m.kp = &kp;
  m.complex = build_lambda(kp);
  for (const auto& lvl : m.complex.by_blocks)
    for (const Osp& f : lvl) m.decisions.emplace(f, match_face(f, kp));
  // Involution check.
  for (const auto& [f, d] : m.decisions) {
    if (d.status == MatchStatus::Critical) continue;
    if (!m.complex.contains(d.partner))
      throw std::logic_error("build_matching: partner " + d.partner.to_string() +
                             " of " + f.to_string() + " not in Lambda");
    const MatchDecision& back = m.decisions.at(d.partner);
    bool ok = back.status != MatchStatus::Critical && back.partner == f &&
              back.edge_type == d.edge_type &&
              ((d.status == MatchStatus::MatchedUp &&
                back.status == MatchStatus::MatchedDown) ||
               (d.status == MatchStatus::MatchedDown &&
                back.status == MatchStatus::MatchedUp));
    if (!ok)
      throw std::logic_error("build_matching: matching is not an involution at " +
                             f.to_string());
  }
  return m;
}

AcyclicityReport verify_acyclic(const MorseMatching& m) {
  AcyclicityReport rep;
  // Modified Hasse diagram: matched edges point up, all other covers down.
  // Index faces globally.
  std::vector<const Osp*> faces;
  std::unordered_map<Osp, int, OspHash> id;
  for (const auto& lvl : m.complex.by_blocks)
    for (const Osp& f : lvl) {
      id.emplace(f, static_cast<int>(faces.size()));
      faces.push_back(&f);
    }
  int N = static_cast<int>(faces.size());
  std::vector<std::vector<int>> adj(N);
  for (int v = 0; v < N; ++v) {
    const Osp& f = *faces[v];
    const MatchDecision& dec = m.decisions.at(f);
    if (dec.status == MatchStatus::MatchedUp) adj[v].push_back(id.at(dec.partner));
    for (int i = 1; i < f.num_blocks(); ++i) {
      Osp g = f.merge(i);
      if (dec.status == MatchStatus::MatchedDown && g == dec.partner) continue;
      adj[v].push_back(id.at(g));
    }
  }
  // Iterative 3-color DFS for a directed cycle.
  std::vector<char> color(N, 0);
  std::vector<std::pair<int, size_t>> stack;
  std::vector<int> parent(N, -1);
  bool cycle = false;
  int cycle_at = -1;
  for (int s = 0; s < N && !cycle; ++s) {
    if (color[s]) continue;
    stack.push_back({s, 0});
    color[s] = 1;
    while (!stack.empty() && !cycle) {
      auto& [v, it] = stack.back();
      if (it < adj[v].size()) {
        int w = adj[v][it++];
        if (color[w] == 1) {
          cycle = true;
          cycle_at = w;
          parent[w] = v;
        } else if (color[w] == 0) {
          color[w] = 1;
          parent[w] = v;
          stack.push_back({w, 0});
        }
      } else {
        color[v] = 2;
        stack.pop_back();
      }
    }
  }
  rep.acyclic_dfs = !cycle;
  if (cycle) {
    std::ostringstream os;
    os << "cycle through " << faces[cycle_at]->to_string();
    rep.cycle_witness = os.str();
  }

  // Independent check: Kahn's algorithm must consume every vertex, i.e. the
  // modified Hasse digraph admits a topological order.
  std::vector<int> indeg(N, 0);
  for (int v = 0; v < N; ++v)
    for (int w : adj[v]) ++indeg[w];
  std::vector<int> queue;
  for (int v = 0; v < N; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  int consumed = 0;
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    ++consumed;
    for (int w : adj[v])
      if (--indeg[w] == 0) queue.push_back(w);
  }
  rep.acyclic_certificate = (consumed == N);
  if (!rep.acyclic_certificate && !rep.cycle_witness) {
    for (int v = 0; v < N; ++v)
      if (indeg[v] > 0) {
        rep.cycle_witness = "no topological order; stuck at " + faces[v]->to_string();
        break;
      }
  }
  return rep;
}

std::vector<Osp> predicted_critical_cells(const KnapsackPartition& kp) {
  std::vector<Osp> out;
  for (const Composition& d : kp.v_set()) {
    Composition eps = kp.epsilon(d);
    for (const Perm& alpha : perms_with_descent_composition(d)) {
      if (alpha.empty() && kp.n > 0) continue;  // degenerate c = (0) marker
      out.push_back(sigma(alpha, eps));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ptopo
