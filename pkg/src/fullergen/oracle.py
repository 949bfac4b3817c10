"""Independent verification tools: canonical forms by exhaustive code
minimisation, an unfiltered closure generator for small sizes, the
isolated-pentagon test, and an exact Hamiltonian-cycle search.

The closure generator deliberately applies *every* expansion site with
no canonicity filtering and deduplicates by canonical form, so a bug in
the acceptance logic cannot confirm itself.
"""

from __future__ import annotations

from .canonical import bfs_code
from .planar import (
    DualFullerene,
    PrimalFullerene,
    min_pentagon_distance,
    validate,
)


def canonical_form(g: DualFullerene) -> bytes:
    """Label-invariant certificate: the minimum BFS code over every
    (dart, orientation) start; equal iff isomorphic (mirror included)."""
    best = None
    for d in range(g.n_darts):
        for o in (0, 1):
            c = bfs_code(g, d, o)
            if best is None or c < best:
                best = c
    return best


def is_ipr(g: DualFullerene) -> bool:
    """True iff no two degree-5 vertices are adjacent."""
    err = validate(g)
    if err is not None:
        raise ValueError(f"invalid dual fullerene: {err}")
    return min_pentagon_distance(g) >= 2


def closure_generate(n_max_primal: int, guard: int = 44):
    """Exhaustive unfiltered closure of the seeds under all L/B sites
    plus the nanotube ring insertion, deduplicated by canonical form.

    Returns (counts, forms): per-primal-size class counts and the set of
    canonical forms per size.
    """
    if n_max_primal > guard:
        raise ValueError(f"closure generation is capped at {guard} vertices")
    from .expansions import apply_expansion, enumerate_expansion_sites
    from .seeds import SeedKind, SeedTag, build_seed

    nv_max = n_max_primal // 2 + 2
    seen = {}
    queue = []

    def add(g):
        if g.nv > nv_max:
            return
        err = validate(g)
        if err is not None:
            raise AssertionError(f"closure produced an invalid graph: {err}")
        form = canonical_form(g)
        key = (g.nv, form)
        if key not in seen:
            seen[key] = g
            queue.append(g)

    add(build_seed(SeedKind(SeedTag.C20)))
    if nv_max >= 16:
        add(build_seed(SeedKind(SeedTag.C28TD)))
    k = 0
    while 17 + 5 * k <= nv_max:
        add(build_seed(SeedKind(SeedTag.NANOTUBE, k)))
        k += 1

    while queue:
        g = queue.pop()
        max_len = nv_max - g.nv - 1
        if max_len < 1:
            continue
        for site in enumerate_expansion_sites(g, max_len):
            child, _ = apply_expansion(g, site)
            add(child)

    counts = {}
    forms = {}
    for (nv, form) in seen:
        n = 2 * (nv - 2)
        counts[n] = counts.get(n, 0) + 1
        forms.setdefault(n, set()).add(form)
    return counts, forms


def find_hamiltonian_cycle(p: PrimalFullerene):
    """Exact backtracking search with unit propagation on forced and
    forbidden edges; returns a vertex cycle or None.

    Edge states are IN (1), OUT (-1) or unknown; a cubic vertex needs
    exactly two IN edges, so a second OUT edge or a third IN edge at a
    vertex is a contradiction, and fragments may only close when they
    cover every vertex.
    """
    n = p.n
    edges = []
    for u in range(n):
        for v in p.adj[u]:
            if u < v:
                edges.append((u, v))
    m = len(edges)
    inc = [[] for _ in range(n)]
    for i, (u, v) in enumerate(edges):
        inc[u].append(i)
        inc[v].append(i)

    state = [0] * m
    nin = [0] * n
    nout = [0] * n
    end = list(range(n))  # fragment endpoint partner (valid at fragment ends)
    in_count = 0
    trail = []  # undo log: ('e', i) or ('end', v, oldvalue) or ('cnt',)

    def set_edge(i, val, pending):
        nonlocal in_count
        if state[i] != 0:
            return state[i] == val
        u, v = edges[i]
        if val == 1:
            if nin[u] == 2 or nin[v] == 2:
                return False
            eu, ev = end[u], end[v]
            if eu == v:
                if in_count + 1 != n:
                    return False  # premature cycle
            state[i] = 1
            trail.append(("e", i))
            nin[u] += 1
            nin[v] += 1
            in_count += 1
            if eu != v:
                trail.append(("end", eu, end[eu]))
                trail.append(("end", ev, end[ev]))
                end[eu] = ev
                end[ev] = eu
        else:
            if nout[u] == 1 or nout[v] == 1:
                return False
            state[i] = -1
            trail.append(("e", i))
            nout[u] += 1
            nout[v] += 1
        pending.append(i)
        return True

    def propagate(pending):
        while pending:
            i = pending.pop()
            for w in edges[i]:
                if nin[w] == 2:
                    for j in inc[w]:
                        if state[j] == 0 and not set_edge(j, -1, pending):
                            return False
                elif nout[w] == 1:
                    for j in inc[w]:
                        if state[j] == 0 and not set_edge(j, 1, pending):
                            return False
        return True

    def undo(mark):
        nonlocal in_count
        while len(trail) > mark:
            item = trail.pop()
            if item[0] == "e":
                i = item[1]
                u, v = edges[i]
                if state[i] == 1:
                    nin[u] -= 1
                    nin[v] -= 1
                    in_count -= 1
                else:
                    nout[u] -= 1
                    nout[v] -= 1
                state[i] = 0
            else:
                end[item[1]] = item[2]

    def solve():
        if in_count == n:
            return True
        # branch on an unknown edge at a vertex already on a fragment
        pick = -1
        for i in range(m):
            if state[i] == 0:
                u, v = edges[i]
                if nin[u] == 1 or nin[v] == 1:
                    pick = i
                    break
                if pick < 0:
                    pick = i
        if pick < 0:
            return False
        for val in (1, -1):
            mark = len(trail)
            pending = []
            if set_edge(pick, val, pending) and propagate(pending):
                if in_count == n or solve():
                    return True
            undo(mark)
        return False

    # seed the search: vertex 0 keeps two of its three edges
    if not solve():
        return None
    cyc = [0]
    prev = -1
    cur = 0
    while True:
        for j in inc[cur]:
            if state[j] == 1:
                u2, v2 = edges[j]
                w = v2 if u2 == cur else u2
                if w != prev:
                    prev, cur = cur, w
                    break
        if cur == 0:
            break
        cyc.append(cur)
    return cyc


def is_hamiltonian(p: PrimalFullerene, cap: int = 100) -> bool:
    if p.n > cap:
        raise ValueError(f"hamiltonicity search is capped at {cap} vertices")
    return find_hamiltonian_cycle(p) is not None
