"""Independent brute-force oracles used to cross-check the library.

Everything here deliberately avoids the production code paths it checks:
polynomials are plain coefficient lists, the characteristic polynomial is a
permutation-sum expansion, distances come from Floyd-Warshall, and the
enhanced-adjacency oracle scans all witness elements directly from the
Cayley table.
"""

from __future__ import annotations

import itertools

from pgspectra import FiniteGroup, Graph, IntMatrix


def perm_sign(perm: tuple[int, ...]) -> int:
    inversions = 0
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                inversions += 1
    return -1 if inversions & 1 else 1


def _list_mul(a: list[int], b: list[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return out


def char_poly_oracle(m: IntMatrix) -> tuple[int, ...]:
    """Coefficients (ascending) of det(xI - M) via the Leibniz expansion.

    O(n! * n) work, so only sane for n <= 7 or so; that is the point.
    """
    n = m.rows
    assert m.cols == n
    total = [0] * (n + 1)
    for perm in itertools.permutations(range(n)):
        prod = [1]
        for i in range(n):
            entry = [-m[i, perm[i]], 1] if i == perm[i] else [-m[i, perm[i]]]
            prod = _list_mul(prod, entry)
        s = perm_sign(perm)
        for k, c in enumerate(prod):
            total[k] += s * c
    while len(total) > 1 and total[-1] == 0:
        total.pop()
    return tuple(total)


def determinant_oracle(m: IntMatrix) -> int:
    n = m.rows
    assert m.cols == n
    total = 0
    for perm in itertools.permutations(range(n)):
        term = perm_sign(perm)
        for i in range(n):
            term *= m[i, perm[i]]
        total += term
    return total


def enhanced_edges_oracle(g: FiniteGroup) -> set[tuple[int, int]]:
    """Edge set of the enhanced power graph by scanning every witness c.

    Powers of c are walked straight off the Cayley table; nothing from the
    production subgroup machinery is reused.
    """
    member_sets = []
    for c in range(g.order):
        seen = {g.identity}
        acc = c
        while acc not in seen:
            seen.add(acc)
            acc = g.table[acc][c]
        member_sets.append(seen)
    edges = set()
    for u in range(g.order):
        for v in range(u + 1, g.order):
            if any(u in s and v in s for s in member_sets):
                edges.add((u, v))
    return edges


def power_edges_oracle(g: FiniteGroup) -> set[tuple[int, int]]:
    """Edge set of the power graph: u ~ v iff one generates the other."""
    powers = []
    for c in range(g.order):
        seen = {g.identity}
        acc = c
        while acc not in seen:
            seen.add(acc)
            acc = g.table[acc][c]
        powers.append(seen)
    edges = set()
    for u in range(g.order):
        for v in range(u + 1, g.order):
            if v in powers[u] or u in powers[v]:
                edges.add((u, v))
    return edges


def floyd_warshall(graph: Graph) -> list[list[int]]:
    n = graph.vertex_count
    inf = n + 1  # strictly larger than any path length in a connected graph
    dist = [[0 if i == j else inf for j in range(n)] for i in range(n)]
    for u in range(n):
        for v in graph.neighbors[u]:
            dist[u][v] = 1
    for k in range(n):
        dk = dist[k]
        for i in range(n):
            dik = dist[i][k]
            if dik == inf:
                continue
            di = dist[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    assert all(d < inf for row in dist for d in row), "graph is disconnected"
    return dist
