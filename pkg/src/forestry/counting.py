"""Spanning-forest and spanning-tree counts via deletion-contraction.

count_forests and count_trees share one recursion.  Cheap reductions run
to a fixpoint before every branch: pendant vertices come off (a pendant
edge is in or out of a forest freely, and is forced into a spanning
tree), bridges are contracted, cut vertices split the count into a
product over blocks.  Branching always happens on a whole parallel
bundle, F(G) = F(G - bundle) + t * F(G/uv), choosing the bundle with
maximum multiplicity, then maximum degree sum, then lexicographically
least pair.  Branch-point graphs small enough to canonicalise cheaply
are memoized by canonical key.
"""

from __future__ import annotations

import os

from .errors import TooLarge, VertexOutOfRange
from .multigraph import (
    _bridges_and_cuts,
    canonical_key,
    components,
    contract_edge,
    contract_set,
    delete_bundle,
    delete_vertex,
    induced,
)

FORESTS = "F"
TREES = "T"

DEFAULT_MEMO_VERTEX_CAP = 16


def _memo_vertex_cap():
    raw = os.environ.get("FORESTRY_CACHE_CAP")
    if raw is None:
        return DEFAULT_MEMO_VERTEX_CAP
    try:
        return max(0, int(raw))
    except ValueError:
        return DEFAULT_MEMO_VERTEX_CAP


class MemoCache:
    """Canonical-key -> count table with separate forest/tree namespaces.

    Entries never change once inserted; inserting a different value for
    an existing key raises, which would mean a counting bug upstream.
    """

    def __init__(self, max_vertices=None, max_entries=None):
        self.max_vertices = _memo_vertex_cap() if max_vertices is None else max_vertices
        self.max_entries = max_entries
        self.hits = 0
        self.misses = 0
        self._table = {}

    def lookup(self, kind, key):
        got = self._table.get((kind, key))
        if got is None:
            self.misses += 1
        else:
            self.hits += 1
        return got

    def insert(self, kind, key, value):
        k = (kind, key)
        old = self._table.get(k)
        if old is not None:
            if old != value:
                raise ValueError(f"memo entry for {k!r} changed: {old} -> {value}")
            return
        if self.max_entries is not None and len(self._table) >= self.max_entries:
            return
        self._table[k] = value

    def __len__(self):
        return len(self._table)


def count_forests(g, cache=None):
    """Number of spanning forests of g (exact integer)."""
    return _count(g, cache, FORESTS)


def count_trees(g, cache=None):
    """Number of spanning trees of g; 0 when g is disconnected."""
    return _count(g, cache, TREES)


def _count(g, cache, kind):
    comps = components(g)
    if len(comps) == 1:
        return _connected(g, cache, kind)
    if kind == TREES:
        return 0
    total = 1
    for comp in comps:
        total *= _connected(induced(g, comp), cache, kind)
    return total


def _connected(g, cache, kind):
    factor = 1
    while True:
        if g.m == 0:
            return factor
        pend = None
        for v in range(g.n):
            if g.degree(v) == 1:
                pend = v
                break
        if pend is not None:
            if kind == FORESTS:
                factor *= 2
            g = delete_vertex(g, pend)
            continue
        u, v, t = _branch_pair(g)
        if t == 1:
            br, cuts = _bridges_and_cuts(g)
            if br:
                bu, bv = min(br)
                if kind == FORESTS:
                    factor *= 2
                g = contract_edge(g, bu, bv)
                continue
            if cuts:
                c = min(cuts)
                for block in _blocks(g, c):
                    factor *= _connected(block, cache, kind)
                return factor
        return factor * _branch(g, u, v, t, cache, kind)


def _branch_pair(g):
    best = None
    for u, v, t in g.bundles():
        if best is None:
            best = (u, v, t, g.degree(u) + g.degree(v))
            continue
        ds = g.degree(u) + g.degree(v)
        bu, bv, bt, bds = best
        if t > bt or (t == bt and (ds > bds or (ds == bds and (u, v) < (bu, bv)))):
            best = (u, v, t, ds)
    return best[0], best[1], best[2]


def _blocks(g, c):
    seen = [False] * g.n
    seen[c] = True
    for start in range(g.n):
        if seen[start]:
            continue
        comp = [start]
        seen[start] = True
        queue = [start]
        while queue:
            v = queue.pop()
            for w in g._adj[v]:
                if not seen[w] and w != c:
                    seen[w] = True
                    comp.append(w)
                    queue.append(w)
        yield induced(g, comp + [c])


def _branch(g, u, v, t, cache, kind):
    key = None
    if cache is not None and g.n <= cache.max_vertices:
        key = canonical_key(g)
        got = cache.lookup(kind, key)
        if got is not None:
            return got
    result = _count(delete_bundle(g, u, v), cache, kind) + t * _count(
        contract_edge(g, u, v), cache, kind
    )
    if key is not None:
        cache.insert(kind, key, result)
    return result


def count_forests_bruteforce(g, cap=24):
    """Count acyclic edge subsets directly; parallel copies distinguishable.

    A subset containing two copies of a parallel bundle is cyclic, so it
    is never counted.  Raises TooLarge above the edge cap.
    """
    if g.m > cap:
        raise TooLarge(f"{g.m} edges exceeds the brute-force cap {cap}")
    edges = g.edge_list()
    parent = list(range(g.n))
    size = [1] * g.n

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    def rec(i):
        if i == len(edges):
            return 1
        total = rec(i + 1)
        u, v = edges[i]
        ru, rv = find(u), find(v)
        if ru != rv:
            if size[ru] < size[rv]:
                ru, rv = rv, ru
            parent[rv] = ru
            size[ru] += size[rv]
            total += rec(i + 1)
            parent[rv] = rv
            size[ru] -= size[rv]
        return total

    return rec(0)


def count_forests_separating(g, vset, cache=None):
    """Forests in which all of vset's vertices lie in distinct components."""
    vs = sorted(set(vset))
    if not vs:
        raise VertexOutOfRange("need at least one vertex to separate")
    return count_forests(contract_set(g, vs), cache)


def extension_count(g, gadget_edges, partition, cache=None):
    """Forest count of the gadget with each partition block identified.

    gadget_edges is a multiset of (u, v) pairs taken from g; partition
    is an iterable of blocks of gadget vertices.  The union of the
    blocks must cover every gadget vertex that also meets an edge of g
    outside the gadget (its attachment vertices); blocks over further
    gadget vertices are allowed, since any host could attach there.
    """
    from .errors import EdgeAbsent, InvalidPartition, LoopRejected

    gadget = {}
    for u, v in gadget_edges:
        if u == v:
            raise LoopRejected(f"gadget edge ({u}, {v}) is a loop")
        key = (u, v) if u < v else (v, u)
        gadget[key] = gadget.get(key, 0) + 1
    for (u, v), t in gadget.items():
        if g.multiplicity(u, v) < t:
            raise EdgeAbsent(f"gadget uses {t} copies of {u}-{v}, graph has fewer")
    gverts = set()
    for u, v in gadget:
        gverts.add(u)
        gverts.add(v)

    blocks = [tuple(sorted(set(b))) for b in partition]
    covered = set()
    for b in blocks:
        if not b:
            raise InvalidPartition("empty block")
        for x in b:
            if x not in gverts:
                raise InvalidPartition(f"block vertex {x} is not a gadget vertex")
            if x in covered:
                raise InvalidPartition(f"vertex {x} appears in two blocks")
            covered.add(x)
    gadget_deg = {}
    for (u, v), t in gadget.items():
        gadget_deg[u] = gadget_deg.get(u, 0) + t
        gadget_deg[v] = gadget_deg.get(v, 0) + t
    for w in sorted(gverts):
        if g.degree(w) > gadget_deg[w] and w not in covered:
            raise InvalidPartition(f"attachment vertex {w} is not in any block")

    # identify each block directly while relabeling the gadget
    rep = {}
    for b in blocks:
        for x in b:
            rep[x] = b[0]
    order = sorted({rep.get(w, w) for w in gverts})
    idx = {w: i for i, w in enumerate(order)}
    from .multigraph import _build

    mults = {}
    for (u, v), t in gadget.items():
        a, b = idx[rep.get(u, u)], idx[rep.get(v, v)]
        if a == b:
            continue
        key = (a, b) if a < b else (b, a)
        mults[key] = mults.get(key, 0) + t
    return count_forests(_build(len(order), mults), cache)
