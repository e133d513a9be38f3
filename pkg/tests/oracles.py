"""Independent reference implementations used only by the test suite.

Nothing here may import the counting engine's internals; the point is a
second route to every number.
"""

from __future__ import annotations

from itertools import combinations, permutations

from forestry import from_edge_list


def perm_isomorphic(g1, g2):
    """Brute-force isomorphism test by trying every vertex permutation."""
    if g1.n != g2.n or g1.m != g2.m:
        return False
    if g1.degree_sequence() != g2.degree_sequence():
        return False
    b2 = {(u, v): t for u, v, t in g2.bundles()}
    b1 = list(g1.bundles())
    for perm in permutations(range(g1.n)):
        ok = True
        for u, v, t in b1:
            a, b = perm[u], perm[v]
            if b2.get((a, b) if a < b else (b, a), 0) != t:
                ok = False
                break
        if ok:
            return True
    return False


def kirchhoff_trees(g):
    """Spanning trees via an integer (Bareiss) determinant of the Laplacian."""
    n = g.n
    if n == 0:
        return 1
    if n == 1:
        return 1
    lap = [[0] * n for _ in range(n)]
    for u, v, t in g.bundles():
        lap[u][u] += t
        lap[v][v] += t
        lap[u][v] -= t
        lap[v][u] -= t
    # delete last row and column, fraction-free (Bareiss) elimination;
    # the reduced Laplacian is positive semidefinite, so a zero pivot
    # already forces a zero determinant and no pivoting is needed
    a = [row[: n - 1] for row in lap[: n - 1]]
    m = n - 1
    prev = 1
    for k in range(m - 1):
        if a[k][k] == 0:
            return 0
        for i in range(k + 1, m):
            for j in range(k + 1, m):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return a[m - 1][m - 1]


def forests_by_subsets(g):
    """Count acyclic edge subsets by checking each subset for cycles."""
    edges = g.edge_list()
    total = 0
    for r in range(len(edges) + 1):
        for subset in combinations(range(len(edges)), r):
            parent = list(range(g.n))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            ok = True
            for i in subset:
                u, v = edges[i]
                ru, rv = find(u), find(v)
                if ru == rv:
                    ok = False
                    break
                parent[ru] = rv
            if ok:
                total += 1
    return total


def trees_by_subsets(g):
    """Count spanning trees by checking every (n-1)-subset of edge copies."""
    n = g.n
    if n == 0:
        return 1
    edges = g.edge_list()
    if len(edges) < n - 1:
        return 0
    total = 0
    for subset in combinations(range(len(edges)), n - 1):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        joins = 0
        for i in subset:
            u, v = edges[i]
            ru, rv = find(u), find(v)
            if ru == rv:
                joins = -1
                break
            parent[ru] = rv
            joins += 1
        if joins == n - 1:
            total += 1
    return total


def separating_forests_bruteforce(g, vset):
    """Forests keeping all of vset in pairwise distinct components."""
    edges = g.edge_list()
    vs = sorted(set(vset))
    total = 0
    for r in range(len(edges) + 1):
        for subset in combinations(range(len(edges)), r):
            parent = list(range(g.n))

            def find(x):
                while parent[x] != x:
                    parent[x] = parent[parent[x]]
                    x = parent[x]
                return x

            ok = True
            for i in subset:
                u, v = edges[i]
                ru, rv = find(u), find(v)
                if ru == rv:
                    ok = False
                    break
                parent[ru] = rv
            if not ok:
                continue
            roots = {find(v) for v in vs}
            if len(roots) == len(vs):
                total += 1
    return total


def rand_multigraph(rng, max_n=8, max_edges=16, max_mult=3, connected=False):
    """A random multigraph; optionally resampled until connected."""
    from forestry import is_connected

    while True:
        n = rng.randint(1, max_n)
        pairs = []
        m = rng.randint(0, max_edges)
        if n >= 2:
            for _ in range(m):
                u = rng.randrange(n)
                v = rng.randrange(n)
                if u == v:
                    continue
                pairs.append((u, v))
        # clamp multiplicities
        counts = {}
        kept = []
        for u, v in pairs:
            key = (min(u, v), max(u, v))
            if counts.get(key, 0) >= max_mult:
                continue
            counts[key] = counts.get(key, 0) + 1
            kept.append(key)
        g = from_edge_list(n, kept)
        if not connected or is_connected(g):
            return g


def complete_graph(n):
    return from_edge_list(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n):
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])
