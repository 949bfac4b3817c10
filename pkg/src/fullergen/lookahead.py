"""Upper bounds on the length of a possibly-canonical expansion, and a
pre-application filter for expansions that provably cannot be canonical.

Short reductions rank first, so an expansion can only be canonical if it
destroys every shorter reduction; the bounds below exploit that, plus a
packing argument: if all degree-5 vertices are pairwise far apart the
graph must be large.
"""

from __future__ import annotations

from dataclasses import dataclass

from .expansions import (
    ReductionMatch,
    _match_reduction,
    kind_length,
    kind_neg_straight,
    match_patch_vertices,
    site_patch_vertices,
)
from .planar import pentagon_distances


def _as_matches(g, reductions):
    """Accept ReductionMatch lists (internal callers) or bare triples."""
    out = []
    for r in reductions:
        if isinstance(r, ReductionMatch):
            out.append(r)
        else:
            m = _match_reduction(g, r.dart, r.kind, r.direction)
            if m is None:
                raise ValueError("not a reduction")
            out.append(m)
    return out


def min_nv_for_length(d: int) -> int:
    """Least dual size a graph can have when some expansion of length d
    is canonical in it: 12 * (1 + 5/2 * (x+1) * x) with x = (d-1) // 2."""
    if d < 1:
        raise ValueError("length must be positive")
    x = (d - 1) // 2
    return 12 * (1 + 5 * (x + 1) * x // 2)


@dataclass
class LengthBound:
    max_len: int
    source: str
    far_l0: bool = False  # two L0 reductions at pair distance > 4


def canonical_length_bound(g, reductions) -> LengthBound:
    """Tightest applicable bound on canonical expansion lengths for
    children of g, from the already-enumerated short reductions."""
    matches = _as_matches(g, reductions)
    l0s = [m for m in matches if kind_length(m.triple.kind) == 1]
    len2 = {m.endpoints() for m in matches
            if kind_length(m.triple.kind) == 2}

    # packing bound: a child of size nv + d + 1 cannot have a canonical
    # reduction of length d when it is smaller than min_nv_for_length(d)
    d = 1
    while min_nv_for_length(d + 1) <= g.nv + d + 2:
        d += 1
    bound, source = d, "size"

    if l0s:
        if bound > 2:
            bound, source = 2, "l0-present"
    elif len2:
        pairs = sorted(len2)
        if len(pairs) >= 3 and _has_disjoint_triple(pairs):
            if bound > 2:
                bound, source = 2, "three-disjoint-len2"
        elif len(pairs) >= 2:
            if bound > 3:
                bound, source = 3, "two-distinct-len2"
        else:
            if bound > 4:
                bound, source = 4, "len2-present"

    far = False
    if len(l0s) >= 2:
        fives, mat = pentagon_distances(g)
        index = {v: i for i, v in enumerate(fives)}
        pairs = sorted({m.endpoints() for m in l0s})
        for a in range(len(pairs)):
            for b in range(a + 1, len(pairs)):
                dmin = min(mat[index[x]][index[y]]
                           for x in pairs[a] for y in pairs[b])
                if dmin > 4:
                    far = True
                    break
            if far:
                break
    return LengthBound(bound, source, far)


def _has_disjoint_triple(pairs):
    k = len(pairs)
    for a in range(k):
        for b in range(a + 1, k):
            if set(pairs[a]) & set(pairs[b]):
                continue
            for c in range(b + 1, k):
                if not (set(pairs[c]) & (set(pairs[a]) | set(pairs[b]))):
                    return True
    return False


def prune_expansion(g, site, reductions) -> bool:
    """False only when the expanded graph certainly keeps a reduction
    ranking strictly below the site's inverse: a strictly shorter
    reduction, or one of equal length and smaller early key, whose whole
    figure is disjoint from the site's patch (so it survives verbatim).
    Never prunes a canonical expansion."""
    matches = _as_matches(g, reductions)
    slen = kind_length(site.kind)
    sneg = kind_neg_straight(site.kind)
    spatch = None
    for m in matches:
        tlen = kind_length(m.triple.kind)
        if tlen > slen:
            continue
        if tlen == slen and kind_neg_straight(m.triple.kind) >= sneg:
            continue
        if spatch is None:
            spatch = site_patch_vertices(g, site)
        if match_patch_vertices(g, m) & spatch:
            continue
        return False
    return True
