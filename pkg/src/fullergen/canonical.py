"""Canonicity test for the construction path, BFS codes and automorphism
groups of dual fullerenes.

Every reduction descriptor is ranked by a lazily evaluated key

    (length, -longest_straight, path_degrees, origin_ring, head_ring, code)

compared lexicographically.  A freshly expanded graph is accepted exactly
when its constructing reduction owns a descriptor of minimal key.  Later
components are only computed for descriptors still tied at the front;
the full code at the end is needed only when descriptors of a different
occurrence are still tied with the constructing one.
"""

from __future__ import annotations

from dataclasses import dataclass

from .expansions import (
    has_reduction_shorter_than,
    kind_length,
    kind_neg_straight,
    matched_reductions,
)


def bfs_code(g, start, orient):
    """Canonical byte code of (g, start dart, orientation).

    Vertices are numbered breadth-first from the start dart; each vertex
    emits the numbers of its neighbours in rotation order (clockwise for
    orient 0, counterclockwise for 1) beginning at its entry dart, then a
    0 terminator.  Two codes are equal iff an isomorphism maps one start
    dart to the other (orientation-preserving when the orient bits agree,
    orientation-reversing otherwise).
    """
    code, _ = _bfs_code_and_darts(g, start, orient)
    return code


def _bfs_code_and_darts(g, start, orient):
    """BFS code plus the dart visit order (used to extract automorphisms)."""
    rot = g.nxt if orient == 0 else g.prv
    origin = g.origin
    num = [0] * g.nv
    num[origin[start]] = 1
    count = 1
    queue = [start]
    out = bytearray()
    order = []
    qi = 0
    while qi < len(queue):
        d0 = queue[qi]
        qi += 1
        d = d0
        while True:
            order.append(d)
            w = origin[d ^ 1]
            if num[w] == 0:
                count += 1
                num[w] = count
                queue.append(d ^ 1)
            out.append(num[w])
            d = rot[d]
            if d == d0:
                break
        out.append(0)
    return bytes(out), order


def minimal_code(g):
    """Minimum BFS code over all (dart, orientation) starts."""
    best = None
    for d in range(g.n_darts):
        for o in (0, 1):
            c = bfs_code(g, d, o)
            if best is None or c < best:
                best = c
    return best


@dataclass
class AutomorphismGroup:
    """Automorphisms as dart permutations with orientation tags."""

    perms: list  # list of (dartmap: list[int], reversing: bool)
    order: int

    @classmethod
    def trivial(cls):
        return cls(perms=[], order=1)

    def is_trivial(self):
        return self.order == 1


def _dartmap_from_codes(ref_order, other_order, nd):
    m = [0] * nd
    for a, b in zip(ref_order, other_order):
        m[a] = b
    return m


def compute_automorphism_group(g):
    """Full automorphism group via a sweep over all (dart, orientation)
    starts: the starts achieving the minimal code are exactly the images
    of one fixed minimal start under the group."""
    best = None
    hits = []
    for d in range(g.n_darts):
        for o in (0, 1):
            c, order = _bfs_code_and_darts(g, d, o)
            if best is None or c < best:
                best = c
                hits = [(d, o, order)]
            elif c == best:
                hits.append((d, o, order))
    d0, o0, ref = hits[0]
    perms = []
    for d, o, order in hits[1:]:
        perms.append((_dartmap_from_codes(ref, order, g.n_darts), o != o0))
    return AutomorphismGroup(perms=perms, order=len(perms) + 1)


def invariant_prefix(g, t, upto=4):
    """The first ``upto + 1`` components of a descriptor's ranking key.

    Component 0 is the reduction length, component 1 the negated longest
    straight run; components 2-4 are degree strings of fixed
    neighbourhoods of the descriptor's dart (central path, then the rings
    of the dart's origin and head, read clockwise for direction 0 and
    counterclockwise for direction 1).
    """
    parts = [kind_length(t.kind), kind_neg_straight(t.kind)]
    if upto >= 2:
        parts.append(_path_degrees(g, t))
    if upto >= 3:
        parts.append(_ring_degrees(g, t.dart, t.direction))
    if upto >= 4:
        parts.append(_ring_degrees(g, t.dart ^ 1, t.direction))
    return tuple(parts)


def _path_degrees(g, t):
    from .expansions import trace_path_darts

    deg = g.deg
    darts = trace_path_darts(g, t.dart, t.kind, t.direction)
    out = bytearray()
    out.append(deg[g.origin[darts[0]]])
    for d in darts:
        out.append(deg[g.origin[d ^ 1]])
    return bytes(out)


def _path_degrees_of_match(g, m):
    deg = g.deg
    return bytes(deg[v] for v in m.patch.verts)


def _ring_degrees(g, d, direction):
    rot = g.nxt if direction == 0 else g.prv
    deg = g.deg
    origin = g.origin
    out = bytearray()
    e = d
    while True:
        out.append(deg[origin[e ^ 1]])
        e = rot[e]
        if e == d:
            break
    return bytes(out)


@dataclass
class CanonicityResult:
    accept: bool
    group: AutomorphismGroup | None
    decision_stage: int  # index of the key component that settled it


def is_canonical(g, constructed_by, own_sig=None):
    """Decide whether the expansion that produced g was canonical.

    Accepts iff the constructing reduction owns a descriptor of minimal
    key.  The automorphism group is returned whenever g is accepted; it
    is trivial when a unique descriptor survived a proper prefix.
    """
    t = constructed_by
    own_len = kind_length(t.kind)
    if has_reduction_shorter_than(g, own_len):
        return CanonicityResult(False, None, 0)

    matches = [m for m in matched_reductions(g, own_len)
               if kind_length(m.triple.kind) == own_len]
    if own_sig is None:
        own_sig = next(m.signature for m in matches if m.triple == t)

    best = min(kind_neg_straight(m.triple.kind) for m in matches)
    survivors = [m for m in matches
                 if kind_neg_straight(m.triple.kind) == best]
    stage = 1
    fns = ((2, lambda m: _path_degrees_of_match(g, m)),
           (3, lambda m: _ring_degrees(g, m.triple.dart, m.triple.direction)),
           (4, lambda m: _ring_degrees(g, m.triple.dart ^ 1,
                                       m.triple.direction)))
    k = 0
    while True:
        sigs = {m.signature for m in survivors}
        if own_sig not in sigs:
            return CanonicityResult(False, None, stage)
        if len(sigs) == 1:
            # every tied descriptor represents the constructing reduction
            return CanonicityResult(True, _group_from_tied(g, survivors),
                                    stage)
        if k == len(fns):
            break
        stage, fn = fns[k]
        k += 1
        vals = [fn(m) for m in survivors]
        best = min(vals)
        survivors = [m for m, v in zip(survivors, vals) if v == best]

    # final component: full BFS codes
    coded = [(bfs_code(g, m.triple.dart, m.triple.direction), m)
             for m in survivors]
    best = min(code for code, _ in coded)
    winners = [m for code, m in coded if code == best]
    if any(m.signature == own_sig for m in winners):
        return CanonicityResult(True, _group_from_tied(g, winners), 5)
    return CanonicityResult(False, None, 5)


def _group_from_tied(g, tied):
    """Automorphisms extracted from tied minimal descriptors: each pair
    with equal codes yields one automorphism."""
    if len(tied) == 1:
        return AutomorphismGroup.trivial()
    coded = []
    for m in tied:
        code, order = _bfs_code_and_darts(g, m.triple.dart,
                                          m.triple.direction)
        coded.append((code, m.triple, order))
    best = min(code for code, _, _ in coded)
    ref = next(c for c in coded if c[0] == best)
    perms = []
    for code, t, order in coded:
        if code == best and t != ref[1]:
            perms.append((_dartmap_from_codes(ref[2], order, g.n_darts),
                          t.direction != ref[1].direction))
    return AutomorphismGroup(perms=perms, order=len(perms) + 1)


def site_equivalence_classes(g, sites, group):
    """One expansion site per orbit under the automorphism group.

    Orientation-preserving automorphisms identify sites with equal
    direction bits, orientation-reversing ones with flipped bits.  Sites
    are assumed to already carry one descriptor per patch.
    """
    if group is None or group.is_trivial():
        return list(sites)
    from .expansions import ExpansionSite, normalize_site

    reps = []
    seen = set()
    for s in sites:
        keys = [normalize_site(g, s)]
        for dartmap, reversing in group.perms:
            img = ExpansionSite(dartmap[s.dart], s.kind,
                                s.direction ^ (1 if reversing else 0))
            keys.append(normalize_site(g, img))
        key = min(keys)
        if key not in seen:
            seen.add(key)
            reps.append(s)
    return reps
