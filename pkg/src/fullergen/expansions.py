"""Straight (L) and bent (B) expansions of dual fullerenes, and their
inverse reductions.

An expansion acts on a central path traced from a dart: three rotation
steps past the reversed dart continue the path straight through each
interior vertex (four steps at the single bend of a B path).  The two
*pivots* sit two rotation steps to the side of the path ends; they must
have degree 5 and are the two pentagons the operation destroys.  The
rewrite cuts the sphere along the pivot-to-pivot extension of the path,
doubles every path vertex, and sews the slit with one rung edge per
doubled vertex plus one diagonal per quad.  That inserts ``length + 1``
new vertices; one fresh chain runs through degree-6 interiors and ends
in a degree-5 vertex diagonally opposite the path start, which together
with the kept path start forms the two degree-5 vertices of the inverse
reduction.

Occurrences are described by descriptors (dart, kind, direction);
directions 0 and 1 are mirror images reading the rotations the other
way round.  A reduction descriptor is anchored at a degree-5 vertex and
removes the inserted chain by merging each of its vertices back into
its path mate.
"""

from __future__ import annotations

from typing import NamedTuple

from .planar import DualFullerene


class ExpansionKind(NamedTuple):
    tag: str  # "L" or "B"
    i: int
    j: int = -1

    @property
    def length(self):
        return self.i + 1 if self.tag == "L" else self.i + self.j + 2


class ExpansionSite(NamedTuple):
    dart: int
    kind: ExpansionKind
    direction: int


class ReductionTriple(NamedTuple):
    dart: int
    kind: ExpansionKind
    direction: int


def kind_length(kind):
    return kind.i + 1 if kind.tag == "L" else kind.i + kind.j + 2


def kind_neg_straight(kind):
    """Negated length of the longest straight run of the path."""
    if kind.tag == "L":
        return -(kind.i + 1)
    return -(max(kind.i, kind.j) + 1)


def _sort_key(desc):
    return (kind_length(desc.kind), desc.dart, desc.direction,
            desc.kind.tag, desc.kind.i, desc.kind.j)


# -- path tracing ------------------------------------------------------------


def _straight(g, d, direction):
    """Continuation of a path entering a vertex via dart d, in the given
    rotational sense: three rotation steps past the reversed dart (the
    straight line through a degree-6 vertex, and its analogue at 5)."""
    rot = g.nxt if direction == 0 else g.prv
    b = d ^ 1
    return rot[rot[rot[b]]]


def trace_path_darts(g, e, kind, direction):
    """Darts of the central path described by (e, kind, direction)."""
    length = kind_length(kind)
    turn_at = kind.i + 1 if kind.tag == "B" else -1  # path index of the bend
    rot = g.nxt if direction == 0 else g.prv
    darts = [e]
    d = e
    for step in range(1, length):
        b = d ^ 1
        d = rot[rot[rot[b]]]
        if step == turn_at:
            d = rot[d]
        darts.append(d)
    return darts


def triple_path_darts(g, t):
    return trace_path_darts(g, t.dart, t.kind, t.direction)


# -- patch geometry ----------------------------------------------------------


class _Patch(NamedTuple):
    path: list  # path darts
    verts: list  # path vertices, len = length + 1
    pivot0: int
    pivot1: int
    ext0: int  # dart from the path start to pivot0
    ext1: int  # dart from the path end to pivot1
    zin: list  # per path vertex: dart toward the previous cut vertex
    zout: list  # per path vertex: dart toward the next cut vertex
    arc_l: list  # per path vertex: darts on the left of the cut
    arc_r: list


def _cut_darts(g, path, kind, direction):
    """The pivot extension darts: two rotation steps from the path-end
    darts, on the side matching the seam (for B the start extension sits
    on the other side, continuing the line into the bend)."""
    N = g.nxt if direction == 0 else g.prv
    P = g.prv if direction == 0 else g.nxt
    e = path[0]
    end = path[-1] ^ 1
    ext0 = N[N[e]] if kind.tag == "L" else P[P[e]]
    ext1 = N[N[end]]
    return ext0, ext1


def _collect_patch(g, path, kind, direction):
    origin = g.origin
    N = g.nxt if direction == 0 else g.prv
    verts = [origin[path[0]]] + [origin[d ^ 1] for d in path]
    ext0, ext1 = _cut_darts(g, path, kind, direction)
    npath = len(verts)
    zin = [0] * npath
    zout = [0] * npath
    for i in range(npath):
        zin[i] = ext0 if i == 0 else path[i - 1] ^ 1
        zout[i] = path[i] if i < npath - 1 else ext1
    arc_l, arc_r = [], []
    for i in range(npath):
        arc = []
        d = N[zout[i]]
        while d != zin[i]:
            arc.append(d)
            d = N[d]
        arc_l.append(arc)
        arc = []
        d = N[zin[i]]
        while d != zout[i]:
            arc.append(d)
            d = N[d]
        arc_r.append(arc)
    return _Patch(path, verts, origin[ext0 ^ 1], origin[ext1 ^ 1],
                  ext0, ext1, zin, zout, arc_l, arc_r)


def _quad_is_lr(kind, j):
    """Orientation of the seam diagonal in quad j (between path vertices
    j and j+1): True when it runs from the left copy to the right."""
    if kind.tag == "L":
        return True
    return j > kind.i  # up to the bend the diagonal runs right to left


def _figure_distinct(core, arc_heads, shared):
    """Injectivity of the figure's embedding: core labels are pairwise
    distinct, and the boundary seen through the arcs repeats only where
    two consecutive path vertices share the triangle mate of their
    common edge (``shared`` times)."""
    if len(set(core)) != len(core):
        return False
    boundary = set(arc_heads)
    if len(boundary) != len(arc_heads) - shared:
        return False
    if boundary & set(core):
        return False
    return True


# -- expansion sites ----------------------------------------------------------


def site_patch(g, e, kind, direction):
    """Patch of an applicable expansion, or None.

    Applicability: both pivots have degree 5 (they gain an edge) and the
    figure embeds injectively; path vertices may have either degree.
    """
    path = trace_path_darts(g, e, kind, direction)
    ext0, ext1 = _cut_darts(g, path, kind, direction)
    deg, origin = g.deg, g.origin
    if deg[origin[ext0 ^ 1]] != 5 or deg[origin[ext1 ^ 1]] != 5:
        return None
    patch = _collect_patch(g, path, kind, direction)
    core = list(patch.verts) + [patch.pivot0, patch.pivot1]
    heads = [origin[d ^ 1] for arcs in (patch.arc_l, patch.arc_r)
             for arc in arcs for d in arc]
    if not _figure_distinct(core, heads, 2 * len(path)):
        return None
    return patch


def site_patch_vertices(g, s):
    """Every vertex of the site's figure (used for disjointness tests)."""
    patch = site_patch(g, s.dart, s.kind, s.direction)
    if patch is None:
        raise ValueError("site is not applicable")
    origin = g.origin
    out = set(patch.verts) | {patch.pivot0, patch.pivot1}
    for arcs in (patch.arc_l, patch.arc_r):
        for arc in arcs:
            out.update(origin[d ^ 1] for d in arc)
    return out


def partner_site(g, s):
    """The descriptor of the same site patch read from its other end, or
    None.  Reading the path backwards flips the rotational sense (the
    seam sits on a fixed geometric side), so the direction bit flips for
    both kinds and B parameters swap."""
    darts = trace_path_darts(g, s.dart, s.kind, s.direction)
    e2 = darts[-1] ^ 1
    if s.kind.tag == "L":
        cand = ExpansionSite(e2, s.kind, s.direction ^ 1)
    else:
        cand = ExpansionSite(e2, ExpansionKind("B", s.kind.j, s.kind.i),
                             s.direction ^ 1)
    back = trace_path_darts(g, cand.dart, cand.kind, cand.direction)
    if back != [d ^ 1 for d in reversed(darts)]:
        return None
    p1 = _cut_darts(g, darts, s.kind, s.direction)
    p2 = _cut_darts(g, back, cand.kind, cand.direction)
    if (g.origin[p1[0] ^ 1], g.origin[p1[1] ^ 1]) != \
            (g.origin[p2[1] ^ 1], g.origin[p2[0] ^ 1]):
        return None
    return cand


def normalize_site(g, s):
    """Canonical descriptor key of a site's patch."""
    keys = [_sort_key(s)]
    partner = partner_site(g, s)
    if partner is not None:
        keys.append(_sort_key(partner))
    return min(keys)


def enumerate_expansion_sites(g, max_len):
    """All applicable expansion patches of length <= max_len, one
    descriptor per patch, in deterministic order."""
    out = []
    seen = set()
    for e, kind, direction in _iter_walks(g, max_len, five_anchor=False):
        s = ExpansionSite(e, kind, direction)
        if site_patch(g, e, kind, direction) is None:
            continue
        key = normalize_site(g, s)
        if key not in seen:
            seen.add(key)
            out.append(s)
    out.sort(key=_sort_key)
    return out


def _iter_walks(g, max_len, five_anchor):
    """Candidate (dart, kind, direction) walks of length <= max_len.
    Reduction descriptors are anchored at degree-5 origins; expansion
    sites may start anywhere."""
    deg, origin = g.deg, g.origin
    nxt, prv = g.nxt, g.prv
    if max_len < 1:
        return
    for e in range(g.n_darts):
        if five_anchor and deg[origin[e]] != 5:
            continue
        for direction in (0, 1):
            rot = nxt if direction == 0 else prv
            run = [e]
            d = e
            while len(run) < max_len:
                b = d ^ 1
                d = rot[rot[rot[b]]]
                run.append(d)
            for ln in range(1, len(run) + 1):
                yield e, ExpansionKind("L", ln - 1), direction
            for x in range(max_len - 1):
                b = run[x] ^ 1
                d = rot[rot[rot[rot[b]]]]
                y = 0
                length = x + 2
                while True:
                    yield e, ExpansionKind("B", x, y), direction
                    if length == max_len:
                        break
                    b = d ^ 1
                    d = rot[rot[rot[b]]]
                    y += 1
                    length += 1


# -- reductions ----------------------------------------------------------------


class ReductionMatch(NamedTuple):
    triple: ReductionTriple
    patch: _Patch
    inserted: list  # the chain removed by the reduction, one per path vertex

    @property
    def signature(self):
        """Identity of the occurrence: its merge pairs and pivots."""
        return (frozenset(zip(self.patch.verts, self.inserted)),
                frozenset((self.patch.pivot0, self.patch.pivot1)))

    def endpoints(self):
        """The two degree-5 vertices of the reduction."""
        a, b = self.patch.verts[0], self.inserted[-1]
        return (a, b) if a <= b else (b, a)


def _match_reduction(g, e, kind, direction):
    """Match the child-side figure of a reduction; None if it does not
    embed.  Cheap checks run first: pivots of degree 6, a consistent
    read of the inserted chain with a degree-5 far end and degree-6
    interiors on one of the two chains, then injectivity."""
    deg = g.deg
    origin = g.origin
    rot = g.nxt if direction == 0 else g.prv
    length = kind_length(kind)
    turn_at = kind.i + 1 if kind.tag == "B" else -1
    npath = length + 1

    path = trace_path_darts(g, e, kind, direction)
    ext0, ext1 = _cut_darts(g, path, kind, direction)
    if deg[origin[ext0 ^ 1]] != 6 or deg[origin[ext1 ^ 1]] != 6:
        return None

    # the inserted chain, read off the slit side of the path
    reads = [set() for _ in range(npath)]
    d1 = rot[rot[rot[e]]]
    if kind.tag == "L":
        reads[0].add(origin[d1 ^ 1])
        reads[1].add(origin[rot[d1] ^ 1])
    else:
        reads[0].add(origin[rot[d1] ^ 1])
    for i in range(1, npath - 1):
        back = path[i - 1] ^ 1
        a = origin[rot[back] ^ 1]
        b = origin[rot[rot[back]] ^ 1]
        if kind.tag == "L" or i > turn_at:
            reads[i].add(a)
            reads[i + 1].add(b)
        elif i < turn_at:
            reads[i - 1].add(a)
            reads[i].add(b)
        else:  # the bend vertex touches three of them
            reads[i - 1].add(a)
            reads[i].add(b)
            reads[i + 1].add(origin[rot[rot[rot[back]]] ^ 1])
    end = path[-1] ^ 1
    reads[npath - 1].add(origin[rot[end] ^ 1])

    inserted = []
    for rs in reads:
        if len(rs) != 1:
            return None  # inconsistent reads: not the figure
        inserted.append(next(iter(rs)))
    if deg[inserted[-1]] != 5:
        return None
    # one of the chains is the freshly inserted one: degree-6 interiors
    if npath > 2:
        if any(deg[v] != 6 for v in inserted[1:-1]):
            verts_mid = [origin[d] for d in path[1:]]
            if any(deg[v] != 6 for v in verts_mid):
                return None

    patch = _collect_patch(g, path, kind, direction)
    ins_set = set(inserted)
    core = list(patch.verts) + [patch.pivot0, patch.pivot1] + inserted
    if len(set(core)) != len(core):
        return None
    heads = []
    for i in range(npath):
        for d in patch.arc_r[i]:
            if origin[d ^ 1] not in ins_set:
                return None  # the slit side may only see the inserted chain
        heads.extend(origin[d ^ 1] for d in patch.arc_l[i])
    structural = set(patch.verts) | ins_set | {patch.pivot0, patch.pivot1}
    for r in inserted:
        heads.extend(h for h in (origin[d ^ 1] for d in g.darts_at(r))
                     if h not in structural)
    # the outer boundary repeats exactly once per path edge on each side
    if not _figure_distinct(core, heads, 2 * length):
        return None
    return ReductionMatch(ReductionTriple(e, kind, direction), patch, inserted)


def matched_reductions(g, max_len):
    """Every reduction occurrence descriptor of length <= max_len with
    its full match data, sorted deterministically."""
    out = []
    for e, kind, direction in _iter_walks(g, max_len, five_anchor=True):
        m = _match_reduction(g, e, kind, direction)
        if m is not None:
            out.append(m)
    out.sort(key=lambda m: _sort_key(m.triple))
    return out


def enumerate_reductions(g, max_len):
    """Every reduction triple of length <= max_len, all representing
    descriptors of each occurrence, sorted by (length, dart, direction)."""
    return [m.triple for m in matched_reductions(g, max_len)]


def has_reduction_shorter_than(g, length):
    if length <= 1:
        return False
    for e, kind, direction in _iter_walks(g, length - 1, five_anchor=True):
        if _match_reduction(g, e, kind, direction) is not None:
            return True
    return False


def reduction_signature(g, t):
    """Identity of the patch occurrence a triple represents."""
    m = _match_reduction(g, t.dart, t.kind, t.direction)
    if m is None:
        raise ValueError("triple is not a reduction")
    return m.signature


def partner_triple(g, t):
    """The descriptor of the same reduction anchored at its other
    degree-5 corner (the far end of the inserted chain), or None."""
    m = _match_reduction(g, t.dart, t.kind, t.direction)
    if m is None:
        raise ValueError("triple is not a reduction")
    e2 = g.dart_between(m.inserted[-1], m.inserted[-2]
                        if len(m.inserted) > 1 else m.patch.verts[0])
    if t.kind.tag == "L":
        cand = ReductionTriple(e2, t.kind, t.direction)
    else:
        cand = ReductionTriple(e2, ExpansionKind("B", t.kind.j, t.kind.i),
                               t.direction ^ 1)
    m2 = _match_reduction(g, cand.dart, cand.kind, cand.direction)
    if m2 is None or m2.signature != m.signature:
        return None
    return cand


def triple_endpoints(g, t):
    """The unordered pair of degree-5 vertices of a reduction."""
    m = _match_reduction(g, t.dart, t.kind, t.direction)
    if m is None:
        raise ValueError("triple is not a reduction")
    return m.endpoints()


def triple_patch_vertices(g, t):
    """Every vertex of a reduction's figure: both chains, the pivots and
    the full outer boundary."""
    m = _match_reduction(g, t.dart, t.kind, t.direction)
    if m is None:
        raise ValueError("triple is not a reduction")
    return match_patch_vertices(g, m)


def match_patch_vertices(g, m):
    origin = g.origin
    patch = m.patch
    out = set(patch.verts) | set(m.inserted) | {patch.pivot0, patch.pivot1}
    structural = set(out)
    for arcs in (patch.arc_l, patch.arc_r):
        for arc in arcs:
            out.update(origin[d ^ 1] for d in arc)
    for r in m.inserted:
        out.update(h for h in (origin[d ^ 1] for d in g.darts_at(r))
                   if h not in structural)
    return out


# -- the expansion rewrite ------------------------------------------------------


def apply_expansion(g, site):
    """Apply an expansion; returns the child and the triple representing
    the inverse reduction (same kind and direction, anchored at the kept
    copy of the path start)."""
    child, triple, _ = apply_expansion_full(g, site)
    return child, triple


def apply_expansion_full(g, site):
    """As :func:`apply_expansion`, also returning the child-side
    signature of the inverse reduction occurrence."""
    kind, direction = site.kind, site.direction
    patch = site_patch(g, site.dart, kind, direction)
    if patch is None:
        raise ValueError("site is not applicable")
    length = kind_length(kind)
    npath = length + 1
    nv = g.nv
    nd = g.n_darts

    origin = g.origin.copy()
    nxt = g.nxt.copy()
    rid = list(range(nv, nv + npath))  # right copies of the path vertices
    need = 2 * (npath + 1) + 2 * npath + 2 * length
    origin.extend([0] * need)
    nxt.extend([0] * need)
    rcut = [nd + 2 * j for j in range(npath + 1)]  # dart from the earlier end
    base = nd + 2 * (npath + 1)
    rung = [base + 2 * i for i in range(npath)]  # dart from the left copy
    base += 2 * npath
    diag = [base + 2 * j for j in range(length)]  # dart from the earlier quad end

    cycles = []
    for i in range(npath):
        # left copy keeps the old vertex id and the old darts
        slit = []
        if i > 0 and not _quad_is_lr(kind, i - 1):
            slit.append(diag[i - 1] ^ 1)
        slit.append(rung[i])
        if i < length and _quad_is_lr(kind, i):
            slit.append(diag[i])
        cycles.append((patch.verts[i],
                       [patch.zout[i]] + patch.arc_l[i] + [patch.zin[i]] + slit))
        # right copy
        slit = []
        if i < length and not _quad_is_lr(kind, i):
            slit.append(diag[i])
        slit.append(rung[i] ^ 1)
        if i > 0 and _quad_is_lr(kind, i - 1):
            slit.append(diag[i - 1] ^ 1)
        cycles.append((rid[i],
                       [rcut[i + 1]] + slit + [rcut[i] ^ 1] + patch.arc_r[i]))

    # pivots gain one dart next to their old copy edge
    told = patch.ext0 ^ 1
    ring = [rcut[0], told]
    d = g.nxt[told] if direction == 0 else g.prv[told]
    while d != told:
        ring.append(d)
        d = g.nxt[d] if direction == 0 else g.prv[d]
    cycles.append((patch.pivot0, ring))
    bold = patch.ext1 ^ 1
    ring = [bold, rcut[npath] ^ 1]
    d = g.nxt[bold] if direction == 0 else g.prv[bold]
    while d != bold:
        ring.append(d)
        d = g.nxt[d] if direction == 0 else g.prv[d]
    cycles.append((patch.pivot1, ring))

    for v, cyc in cycles:
        if direction == 1:
            cyc.reverse()
        k = len(cyc)
        for a in range(k):
            dd = cyc[a]
            origin[dd] = v
            nxt[dd] = cyc[(a + 1) % k]

    child = DualFullerene(nv + npath, origin, nxt)
    triple = ReductionTriple(site.dart, kind, direction)
    sig = (frozenset(zip(patch.verts, rid)),
           frozenset((patch.pivot0, patch.pivot1)))
    return child, triple, sig


# -- the reduction rewrite --------------------------------------------------------


def apply_reduction(g, t):
    """Apply a reduction; the inverse of :func:`apply_expansion`.

    Every path vertex merges with its inserted-chain mate: the merged
    rotation is the path side's outer arc between the two cut darts
    followed by the mate's outer arc, the pivots each lose one of their
    two copy edges, and the inserted ids disappear.
    """
    m = _match_reduction(g, t.dart, t.kind, t.direction)
    if m is None:
        raise ValueError("triple is not a reduction")
    patch, inserted = m.patch, m.inserted
    origin = g.origin
    rots = g.rotations()
    fwd = t.direction == 0
    path_verts = patch.verts
    npath = len(path_verts)
    to_path = {r: p for p, r in zip(path_verts, inserted)}
    ins_set = set(inserted)

    merged = {}
    for i, p in enumerate(path_verts):
        r = inserted[i]
        ring_r = rots[r] if fwd else list(reversed(rots[r]))
        prev_z = patch.pivot0 if i == 0 else inserted[i - 1]
        next_z = patch.pivot1 if i == npath - 1 else inserted[i + 1]
        k = ring_r.index(prev_z)
        ring_r = ring_r[k:] + ring_r[:k]
        mate_outer = ring_r[1:ring_r.index(next_z)]
        ring = [origin[patch.zout[i] ^ 1]]
        ring.extend(origin[d ^ 1] for d in patch.arc_l[i])
        ring.append(origin[patch.zin[i] ^ 1])
        ring.extend(mate_outer)
        if not fwd:
            ring.reverse()
        merged[p] = ring

    keep = [v for v in range(g.nv) if v not in ins_set]
    newid = {v: i for i, v in enumerate(keep)}
    rot_lists = []
    for v in keep:
        if v in merged:
            ring = [to_path.get(w, w) for w in merged[v]]
        else:
            ring = [to_path.get(w, w) for w in rots[v]]
            if v in (patch.pivot0, patch.pivot1):
                # its two copy edges collapse into one
                deduped = []
                for w in ring:
                    if not (deduped and deduped[-1] == w):
                        deduped.append(w)
                if len(deduped) > 1 and deduped[0] == deduped[-1]:
                    deduped.pop()
                ring = deduped
        rot_lists.append([newid[w] for w in ring])
    return DualFullerene.from_rotations(rot_lists)
