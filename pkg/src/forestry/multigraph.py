"""Loopless multigraphs on vertices 0..n-1 with exact minor operations.

Parallel edges are stored as per-pair multiplicities.  Contraction
identifies the two endpoints, drops the loops this would create and
keeps parallel edges, which is the convention all counting code in this
package depends on.  Operations never mutate their argument; they build
a new graph.
"""

from __future__ import annotations

from . import canon
from .errors import EdgeAbsent, LoopRejected, VertexOutOfRange


class MultiGraph:
    __slots__ = ("n", "_adj", "_m", "_key")

    def __init__(self, n, adj=None):
        # adj is a list of {neighbor: multiplicity} dicts with ascending
        # keys, already symmetric; use from_edge_list for raw input.
        # Omitting it gives the edgeless graph on n vertices.
        if n < 0:
            raise VertexOutOfRange(f"vertex count {n} is negative")
        self.n = n
        self._adj = [{} for _ in range(n)] if adj is None else adj
        self._m = sum(sum(d.values()) for d in self._adj) // 2
        self._key = None

    @property
    def m(self):
        """Edge count, counting multiplicities."""
        return self._m

    def degree(self, v):
        self._check(v)
        return sum(self._adj[v].values())

    def multiplicity(self, u, v):
        self._check(u)
        self._check(v)
        if u == v:
            return 0
        return self._adj[u].get(v, 0)

    def neighbors(self, v):
        self._check(v)
        return list(self._adj[v])

    def bundles(self):
        """Yield (u, v, multiplicity) with u < v in ascending order."""
        for u in range(self.n):
            for v, t in self._adj[u].items():
                if u < v:
                    yield u, v, t

    def edge_list(self):
        """Every edge copy as a (u, v) pair, u < v, parallel copies repeated."""
        out = []
        for u, v, t in self.bundles():
            out.extend([(u, v)] * t)
        return out

    def degree_sequence(self):
        return tuple(sorted(self.degree(v) for v in range(self.n)))

    def _check(self, v):
        if not isinstance(v, int) or v < 0 or v >= self.n:
            raise VertexOutOfRange(f"vertex {v!r} not in 0..{self.n - 1}")

    def __eq__(self, other):
        if not isinstance(other, MultiGraph):
            return NotImplemented
        return self.n == other.n and self._adj == other._adj

    def __repr__(self):
        pairs = ", ".join(
            f"{u}-{v}" + (f"x{t}" if t > 1 else "") for u, v, t in self.bundles()
        )
        return f"MultiGraph(n={self.n}, [{pairs}])"


def _build(n, mults):
    """mults: {(u, v) with u < v: multiplicity > 0} -> MultiGraph."""
    adj = [{} for _ in range(n)]
    # lexicographic pair order makes every neighbor dict ascending
    for (u, v), t in sorted(mults.items()):
        if t <= 0:
            continue
        adj[u][v] = t
        adj[v][u] = t
    return MultiGraph(n, adj)


def from_edge_list(n, pairs):
    if not isinstance(n, int) or n < 0:
        raise VertexOutOfRange(f"vertex count {n!r} must be a nonnegative int")
    mults = {}
    for u, v in pairs:
        if not isinstance(u, int) or not isinstance(v, int):
            raise VertexOutOfRange(f"edge ({u!r}, {v!r}) has non-integer endpoint")
        if u == v:
            raise LoopRejected(f"loop at vertex {u} rejected")
        if not (0 <= u < n) or not (0 <= v < n):
            raise VertexOutOfRange(f"edge ({u}, {v}) out of range for n={n}")
        key = (u, v) if u < v else (v, u)
        mults[key] = mults.get(key, 0) + 1
    return _build(n, mults)


def relabel(g, perm):
    """Apply a bijection perm (perm[old] = new) to vertex ids."""
    if sorted(perm) != list(range(g.n)):
        raise VertexOutOfRange("perm is not a bijection on 0..n-1")
    mults = {}
    for u, v, t in g.bundles():
        a, b = perm[u], perm[v]
        mults[(a, b) if a < b else (b, a)] = t
    return _build(g.n, mults)


def induced(g, vertices):
    """Subgraph induced on the given vertices, relabeled to 0..k-1 by rank."""
    vs = sorted(set(vertices))
    for v in vs:
        g._check(v)
    idx = {v: i for i, v in enumerate(vs)}
    mults = {}
    for u, v, t in g.bundles():
        if u in idx and v in idx:
            mults[(idx[u], idx[v])] = t
    return _build(len(vs), mults)


def delete_edge(g, u, v):
    """Remove one copy of the edge uv."""
    t = g.multiplicity(u, v)
    if t == 0:
        raise EdgeAbsent(f"no edge between {u} and {v}")
    mults = {(a, b): s for a, b, s in g.bundles()}
    key = (u, v) if u < v else (v, u)
    if t == 1:
        del mults[key]
    else:
        mults[key] = t - 1
    return _build(g.n, mults)


def delete_bundle(g, u, v):
    """Remove every parallel copy between u and v."""
    if g.multiplicity(u, v) == 0:
        raise EdgeAbsent(f"no edge between {u} and {v}")
    mults = {(a, b): s for a, b, s in g.bundles()}
    del mults[(u, v) if u < v else (v, u)]
    return _build(g.n, mults)


def delete_vertex(g, v):
    """Remove v and its edges; ids above v shift down by one."""
    g._check(v)
    mults = {}
    for a, b, t in g.bundles():
        if a == v or b == v:
            continue
        a2 = a if a < v else a - 1
        b2 = b if b < v else b - 1
        mults[(a2, b2) if a2 < b2 else (b2, a2)] = t
    return _build(g.n - 1, mults)


def contract_edge(g, u, v):
    """Identify the endpoints of edge uv, dropping the uv bundle.

    The merged vertex takes the min(u, v) slot; ids above max(u, v)
    shift down by one.  Parallel edges arising from common neighbors
    are kept (multiplicities add).
    """
    if g.multiplicity(u, v) == 0:
        raise EdgeAbsent(f"no edge between {u} and {v} to contract")
    return _identify(g, (u, v))


def contract_set(g, vset):
    """Identify all vertices of vset into one, adjacency not required.

    Edges inside vset are dropped (they would become loops); edges from
    outside accumulate on the merged vertex, which takes the min(vset)
    slot.  Ids of removed vertices are closed up, preserving the order
    of the survivors.
    """
    vs = sorted(set(vset))
    if not vs:
        raise VertexOutOfRange("contract_set needs at least one vertex")
    for v in vs:
        g._check(v)
    if len(vs) == 1:
        return g
    return _identify(g, vs)


def _identify(g, vs):
    vs = sorted(set(vs))
    target = vs[0]
    removed = vs[1:]
    # new id of an untouched vertex = old id minus removed ids below it
    newid = {}
    drop = set(removed)
    nid = 0
    for v in range(g.n):
        if v in drop:
            continue
        newid[v] = nid
        nid += 1
    group = set(vs)
    tgt = newid[target]
    mults = {}
    for a, b, t in g.bundles():
        a2 = tgt if a in group else newid[a]
        b2 = tgt if b in group else newid[b]
        if a2 == b2:
            continue
        key = (a2, b2) if a2 < b2 else (b2, a2)
        mults[key] = mults.get(key, 0) + t
    return _build(g.n - len(removed), mults)


def components(g):
    """Vertex sets of connected components, each sorted, ordered by min."""
    seen = [False] * g.n
    out = []
    for start in range(g.n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        queue = [start]
        while queue:
            v = queue.pop()
            for w in g._adj[v]:
                if not seen[w]:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        out.append(sorted(comp))
    return out


def is_connected(g):
    return len(components(g)) <= 1


def _bridges_and_cuts(g):
    n = g.n
    adj = g._adj
    disc = [-1] * n
    low = [0] * n
    br = set()
    cuts = set()
    t = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        root_children = 0
        disc[root] = low[root] = t
        t += 1
        stack = [(root, -1, iter(adj[root]))]
        while stack:
            v, pv, it = stack[-1]
            pushed = False
            for w in it:
                if disc[w] == -1:
                    disc[w] = low[w] = t
                    t += 1
                    stack.append((w, v, iter(adj[w])))
                    pushed = True
                    break
                if w == pv and adj[v][w] == 1:
                    continue  # the single tree edge back to the parent
                if disc[w] < low[v]:
                    low[v] = disc[w]
            if pushed:
                continue
            stack.pop()
            if pv == -1:
                continue
            if low[v] < low[pv]:
                low[pv] = low[v]
            if low[v] > disc[pv] and adj[v][pv] == 1:
                br.add((min(v, pv), max(v, pv)))
            if pv == root:
                root_children += 1
            elif low[v] >= disc[pv]:
                cuts.add(pv)
        if root_children >= 2:
            cuts.add(root)
    return br, cuts


def bridges(g):
    """Bridge edges as (u, v) pairs, u < v.  Parallel bundles never qualify."""
    return _bridges_and_cuts(g)[0]


def cut_vertices(g):
    return _bridges_and_cuts(g)[1]


def degree_counts(g):
    """Map degree -> number of vertices of that degree."""
    out = {}
    for v in range(g.n):
        d = g.degree(v)
        out[d] = out.get(d, 0) + 1
    return out


def canonical_key(g):
    """Isomorphism-invariant bytes; equal keys iff isomorphic graphs."""
    if g._key is None:
        g._key = canon.canonical_key(g.n, g._adj)
    return g._key


def automorphisms(g):
    """All automorphisms as tuples sigma with sigma[v] the image of v."""
    return canon.automorphisms(g.n, g._adj)
