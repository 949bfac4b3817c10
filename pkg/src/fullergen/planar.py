"""Rotation-system representation of dual fullerenes.

A dual fullerene is a triangulation of the sphere whose vertices have
degree 5 or 6 (exactly twelve of degree 5).  It is stored as a system of
*darts* (directed edge sides) with dense ids ``0..2E-1``:

* dart ``d`` and ``d ^ 1`` are the two sides of one edge,
* ``nxt[d]`` is the next dart around the origin vertex of ``d`` in the
  stored rotational sense (called clockwise throughout),
* ``prv`` is the inverse permutation of ``nxt``,
* ``origin[d]`` is the vertex the dart points away from.

Faces are traced by ``d -> nxt[d ^ 1]``; every face orbit of a valid
dual fullerene has length 3.
"""

from __future__ import annotations

from collections import deque

MAX_NV = 512  # largest supported dual vertex count (primal 1020)


class DualFullerene:
    """Plane triangulation with vertex degrees in {5, 6}."""

    __slots__ = ("nv", "origin", "nxt", "prv", "deg", "first")

    def __init__(self, nv, origin, nxt):
        self.nv = nv
        self.origin = origin
        self.nxt = nxt
        nd = len(nxt)
        prv = [0] * nd
        deg = [0] * nv
        first = [-1] * nv
        for d in range(nd):
            prv[nxt[d]] = d
            v = origin[d]
            deg[v] += 1
            if first[v] < 0:
                first[v] = d
        self.prv = prv
        self.deg = deg
        self.first = first

    # -- construction ----------------------------------------------------

    @classmethod
    def from_rotations(cls, rotations):
        """Build from clockwise neighbour lists, one list per vertex."""
        nv = len(rotations)
        dart_of = {}
        edges = []
        for u, ring in enumerate(rotations):
            for v in ring:
                if u < v:
                    dart_of[(u, v)] = 2 * len(edges)
                    dart_of[(v, u)] = 2 * len(edges) + 1
                    edges.append((u, v))
        nd = 2 * len(edges)
        origin = [0] * nd
        nxt = [0] * nd
        for u, ring in enumerate(rotations):
            k = len(ring)
            darts = [dart_of[(u, v)] for v in ring]
            for i, d in enumerate(darts):
                origin[d] = u
                nxt[d] = darts[(i + 1) % k]
        return cls(nv, origin, nxt)

    def rotations(self):
        """Clockwise neighbour lists (inverse of :meth:`from_rotations`)."""
        out = []
        for v in range(self.nv):
            ring = []
            d0 = self.first[v]
            d = d0
            while True:
                ring.append(self.origin[d ^ 1])
                d = self.nxt[d]
                if d == d0:
                    break
            out.append(ring)
        return out

    # -- basic queries ----------------------------------------------------

    @property
    def n_darts(self):
        return len(self.nxt)

    @property
    def n_edges(self):
        return len(self.nxt) // 2

    @property
    def n_primal(self):
        """Vertex count of the primal fullerene."""
        return 2 * (self.nv - 2)

    def head(self, d):
        return self.origin[d ^ 1]

    def neighbors(self, v):
        d0 = self.first[v]
        d = d0
        while True:
            yield self.origin[d ^ 1]
            d = self.nxt[d]
            if d == d0:
                break

    def darts_at(self, v):
        d0 = self.first[v]
        d = d0
        while True:
            yield d
            d = self.nxt[d]
            if d == d0:
                break

    def dart_between(self, u, v):
        """Some dart from u to v, or -1."""
        for d in self.darts_at(u):
            if self.origin[d ^ 1] == v:
                return d
        return -1

    def degree_counts(self):
        fives = sum(1 for k in self.deg if k == 5)
        return fives, self.nv - fives

    def copy(self):
        return DualFullerene(self.nv, self.origin.copy(), self.nxt.copy())

    def mirror(self):
        """The mirror image: every rotation reversed."""
        return DualFullerene(self.nv, self.origin.copy(), self.prv.copy())

    def relabeled(self, perm):
        """Apply a vertex permutation (old id -> new id); tests use this."""
        rots = self.rotations()
        new_rots = [None] * self.nv
        for v, ring in enumerate(rots):
            new_rots[perm[v]] = [perm[u] for u in ring]
        return DualFullerene.from_rotations(new_rots)

    # -- traversal ---------------------------------------------------------

    def faces(self):
        """Face orbits under d -> nxt[d ^ 1], as dart triples."""
        nxt = self.nxt
        seen = [False] * len(nxt)
        out = []
        for d in range(len(nxt)):
            if seen[d]:
                continue
            orbit = []
            e = d
            while not seen[e]:
                seen[e] = True
                orbit.append(e)
                e = nxt[e ^ 1]
            out.append(orbit)
        return out

    def five_vertices(self):
        return [v for v in range(self.nv) if self.deg[v] == 5]


def rotation_system_from_adjacency(adj):
    """Orient a triangulation of the sphere given as unordered adjacency
    lists: around every vertex the neighbours form a cycle in the link;
    directions are propagated so all faces close consistently.  The
    direction chosen at vertex 0 picks one of the two mirror images.
    """
    nv = len(adj)
    adjsets = [set(a) for a in adj]

    def link_cycle(v):
        nbrs = adj[v]
        cyc = [nbrs[0]]
        used = {nbrs[0]}
        while len(cyc) < len(nbrs):
            last = cyc[-1]
            step = [w for w in nbrs if w in adjsets[last] and w not in used]
            if not step:
                raise ValueError(f"link of vertex {v} is not a cycle")
            cyc.append(step[0])
            used.add(step[0])
        return cyc

    rot = [None] * nv
    rot[0] = link_cycle(0)
    stack = [0]
    while stack:
        u = stack.pop()
        ru = rot[u]
        k = len(ru)
        for idx, v in enumerate(ru):
            if rot[v] is not None:
                continue
            w = ru[(idx + 1) % k]
            cyc = link_cycle(v)
            i = cyc.index(w)
            if cyc[(i + 1) % len(cyc)] != u:
                cyc.reverse()
                i = cyc.index(w)
                if cyc[(i + 1) % len(cyc)] != u:
                    raise ValueError("inconsistent orientation")
            rot[v] = cyc
            stack.append(v)
    if any(r is None for r in rot):
        raise ValueError("adjacency is not connected")
    return rot


def validate(g: DualFullerene):
    """Check every structural invariant; return None if ok, else a message
    naming the first violated invariant."""
    nd = len(g.nxt)
    if nd % 2 != 0 or len(g.origin) != nd:
        return "dart tables malformed"
    if not (12 <= g.nv <= MAX_NV):
        return f"vertex count {g.nv} out of range"
    if sorted(g.nxt) != list(range(nd)):
        return "nxt is not a permutation of the darts"
    # rotation orbits must match origins and give degrees 5 or 6
    seen = [False] * nd
    for v in range(g.nv):
        d0 = g.first[v]
        if d0 < 0:
            return f"vertex {v} has no darts"
        d = d0
        k = 0
        nbrs = set()
        while True:
            if g.origin[d] != v:
                return f"rotation at vertex {v} leaves its origin"
            if seen[d]:
                return f"dart {d} in two rotations"
            seen[d] = True
            w = g.origin[d ^ 1]
            if w == v:
                return f"loop at vertex {v}"
            if w in nbrs:
                return f"parallel edge {v}-{w}"
            nbrs.add(w)
            k += 1
            d = g.nxt[d]
            if d == d0:
                break
        if k != g.deg[v]:
            return f"degree table wrong at vertex {v}"
        if k not in (5, 6):
            return f"vertex {v} has degree {k}"
    if not all(seen):
        return "orphan darts outside every rotation"
    fives, _ = g.degree_counts()
    if fives != 12:
        return f"{fives} degree-5 vertices instead of 12"
    # all faces triangles
    nxt = g.nxt
    fseen = [False] * nd
    nfaces = 0
    for d in range(nd):
        if fseen[d]:
            continue
        e = d
        size = 0
        while not fseen[e]:
            fseen[e] = True
            size += 1
            e = nxt[e ^ 1]
        if e != d:
            return "face walk does not close"
        if size != 3:
            return f"face of size {size}"
        nfaces += 1
    if g.nv - g.n_edges + nfaces != 2:
        return "Euler characteristic is not 2"
    return None


def distance(g: DualFullerene, u, v):
    """Graph distance by breadth-first search."""
    if not (0 <= u < g.nv and 0 <= v < g.nv):
        raise ValueError("vertex id out of range")
    if u == v:
        return 0
    dist = [-1] * g.nv
    dist[u] = 0
    q = deque([u])
    while q:
        w = q.popleft()
        dw = dist[w] + 1
        for x in g.neighbors(w):
            if dist[x] < 0:
                if x == v:
                    return dw
                dist[x] = dw
                q.append(x)
    raise ValueError("graph not connected")


def pentagon_distances(g: DualFullerene):
    """Distance matrix restricted to the twelve degree-5 vertices."""
    fives = g.five_vertices()
    index = {v: i for i, v in enumerate(fives)}
    mat = [[0] * 12 for _ in range(12)]
    for i, src in enumerate(fives):
        dist = [-1] * g.nv
        dist[src] = 0
        q = deque([src])
        while q:
            w = q.popleft()
            for x in g.neighbors(w):
                if dist[x] < 0:
                    dist[x] = dist[w] + 1
                    q.append(x)
        for v, j in index.items():
            mat[i][j] = dist[v]
    return fives, mat


def min_pentagon_distance(g: DualFullerene):
    """Minimum distance between two degree-5 vertices (>= 2 iff IPR)."""
    # cheap adjacency test first
    for v in g.five_vertices():
        for w in g.neighbors(v):
            if g.deg[w] == 5:
                return 1
    _, mat = pentagon_distances(g)
    return min(mat[i][j] for i in range(12) for j in range(12) if i != j)


class PrimalFullerene:
    """Cubic plane graph with pentagon/hexagon faces, as clockwise
    adjacency lists (three neighbours per vertex)."""

    __slots__ = ("n", "adj")

    def __init__(self, n, adj):
        self.n = n
        self.adj = adj

    def face_sizes(self):
        """Sizes of all faces, traced in the embedding."""
        pos = [{v: i for i, v in enumerate(ring)} for ring in self.adj]
        seen = set()
        sizes = []
        for u in range(self.n):
            for v in self.adj[u]:
                if (u, v) in seen:
                    continue
                size = 0
                a, b = u, v
                while (a, b) not in seen:
                    seen.add((a, b))
                    size += 1
                    # next edge of the face: rotate at b past the reverse dart
                    i = pos[b][a]
                    c = self.adj[b][(i + 1) % 3]
                    a, b = b, c
                sizes.append(size)
        return sizes


def validate_primal(p: PrimalFullerene):
    """None if p is a fullerene graph, else a message."""
    if any(len(ring) != 3 for ring in p.adj):
        return "not cubic"
    for u in range(p.n):
        for v in p.adj[u]:
            if u == v:
                return f"loop at {u}"
            if u not in p.adj[v]:
                return f"edge {u}-{v} not symmetric"
        if len(set(p.adj[u])) != 3:
            return f"parallel edge at {u}"
    sizes = p.face_sizes()
    if any(s not in (5, 6) for s in sizes):
        return "face size outside {5, 6}"
    pentagons = sum(1 for s in sizes if s == 5)
    if pentagons != 12:
        return f"{pentagons} pentagons instead of 12"
    if len(sizes) != p.n // 2 + 2:
        return "face count violates Euler's formula"
    return None


def to_primal(g: DualFullerene) -> PrimalFullerene:
    """Exchange vertices and faces: each triangle of the dual becomes a
    cubic vertex whose rotation follows the dual's face adjacency."""
    err = validate(g)
    if err is not None:
        raise ValueError(f"invalid dual fullerene: {err}")
    nxt = g.nxt
    face_of = [-1] * len(nxt)
    faces = g.faces()
    for i, orbit in enumerate(faces):
        for d in orbit:
            face_of[d] = i
    adj = []
    for orbit in faces:
        adj.append([face_of[d ^ 1] for d in orbit])
    return PrimalFullerene(len(faces), adj)


def dual_of_primal(p: PrimalFullerene) -> DualFullerene:
    """Face-vertex incidence inversion of a cubic plane graph; the
    round-trip dual_of_primal(to_primal(g)) is isomorphic to g."""
    pos = [{v: i for i, v in enumerate(ring)} for ring in p.adj]
    # darts of the primal are ordered pairs (u, v)
    dart_id = {}
    for u in range(p.n):
        for v in p.adj[u]:
            dart_id[(u, v)] = len(dart_id)
    face_of = {}
    rings = []
    for u in range(p.n):
        for v in p.adj[u]:
            if (u, v) in face_of:
                continue
            ring = []
            a, b = u, v
            while (a, b) not in face_of:
                face_of[(a, b)] = len(rings)
                ring.append((a, b))
                i = pos[b][a]
                c = p.adj[b][(i + 1) % 3]
                a, b = b, c
            rings.append(ring)
    rotations = []
    for ring in rings:
        rotations.append([face_of[(b, a)] for (a, b) in ring])
    return DualFullerene.from_rotations(rotations)
