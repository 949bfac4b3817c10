"""The irreducible start graphs: the icosahedron (dual of the
dodecahedral C20), the dual of C28 with tetrahedral symmetry, and the
type-(5,0) nanotube series grown from the dual of C30(D5h) by inserting
rings of degree-6 vertices at the waist.

All seeds are stored as explicit clockwise rotation tables and checked
against the structural validator on first use.
"""

from __future__ import annotations

from enum import Enum
from typing import NamedTuple

from .planar import DualFullerene, rotation_system_from_adjacency, validate


class SeedTag(Enum):
    C20 = "C20"
    C28TD = "C28Td"
    NANOTUBE = "nanotube"


class SeedKind(NamedTuple):
    tag: SeedTag
    rings: int = 0  # nanotube only: waist rings added to C30(D5h)


# Icosahedron adjacency: apex 0, upper ring 1-5, lower ring 6-10, apex 11.
_ICOSAHEDRON = [
    [1, 2, 3, 4, 5],
    [0, 2, 5, 6, 7],
    [0, 1, 3, 7, 8],
    [0, 2, 4, 8, 9],
    [0, 3, 5, 9, 10],
    [0, 1, 4, 10, 6],
    [11, 10, 5, 1, 7],
    [11, 6, 1, 2, 8],
    [11, 7, 2, 3, 9],
    [11, 8, 3, 4, 10],
    [11, 9, 4, 5, 6],
    [6, 7, 8, 9, 10],
]

# Dual of C28 with tetrahedral symmetry: vertices 0-3 are the four
# degree-6 vertices (hexagons); each of the four triples {a,b,c} of
# them carries an inner triangle of degree-5 vertices.  Startup checks
# confirm validity; its automorphism group has order 24 and it admits
# no reduction at all.
_C28_TD = [
    [4, 5, 7, 8, 10, 11],
    [4, 6, 7, 9, 13, 14],
    [5, 6, 10, 12, 13, 15],
    [8, 9, 11, 12, 14, 15],
    [0, 1, 5, 6, 7],
    [0, 2, 4, 6, 10],
    [1, 2, 4, 5, 13],
    [0, 1, 4, 8, 9],
    [0, 3, 7, 9, 11],
    [1, 3, 7, 8, 14],
    [0, 2, 5, 11, 12],
    [0, 3, 8, 10, 12],
    [2, 3, 10, 11, 15],
    [1, 2, 6, 14, 15],
    [1, 3, 9, 13, 15],
    [2, 3, 12, 13, 14],
]


def _nanotube_adjacency(rings):
    """Adjacency of the type-(5,0) nanotube dual with the given number
    of extra waist rings (rings=0 is the dual of C30(D5h)).

    Layout: apex 0; pentagon ring 1..5; ``rings + 1`` hexagon rings of
    five; pentagon ring; apex.  Ring r vertex i is joined to vertices i
    and i+1 of the ring below, so consecutive rings form an antiprism
    and every face is a triangle.
    """
    belts = rings + 1
    ring_ids = [[1 + 5 * r + i for i in range(5)] for r in range(belts + 2)]
    apex_a = 0
    apex_b = 6 + 5 * (belts + 1)
    adj = [list(ring_ids[0])]
    for r in range(belts + 2):
        ring = ring_ids[r]
        for i in range(5):
            nbrs = [ring[(i - 1) % 5], ring[(i + 1) % 5]]
            if r == 0:
                nbrs.append(apex_a)
            else:
                above = ring_ids[r - 1]
                nbrs += [above[(i - 1) % 5], above[i]]
            if r == belts + 1:
                nbrs.append(apex_b)
            else:
                below = ring_ids[r + 1]
                nbrs += [below[i], below[(i + 1) % 5]]
            adj.append(nbrs)
    adj.append(list(ring_ids[belts + 1]))
    return adj


_checked = {}


def _checked_build(key, adjacency):
    if key not in _checked:
        g = DualFullerene.from_rotations(
            rotation_system_from_adjacency(adjacency))
        err = validate(g)
        if err is not None:
            raise AssertionError(f"seed {key} is corrupt: {err}")
        _checked[key] = g
    return _checked[key].copy()


def build_seed(kind: SeedKind) -> DualFullerene:
    """Construct a seed dual fullerene."""
    if kind.tag is SeedTag.C20:
        return _checked_build("C20", _ICOSAHEDRON)
    if kind.tag is SeedTag.C28TD:
        return _checked_build("C28Td", _C28_TD)
    if kind.tag is SeedTag.NANOTUBE:
        if kind.rings < 0:
            raise ValueError("ring count must be non-negative")
        return _checked_build(("tube", kind.rings),
                              _nanotube_adjacency(kind.rings))
    raise ValueError(f"unknown seed {kind!r}")


def apply_F(g: DualFullerene) -> DualFullerene:
    """Insert one ring of five degree-6 vertices at the nanotube waist.

    Only defined on members of the type-(5,0) series; the result is the
    next member (5 more dual vertices).
    """
    k, rem = divmod(g.nv - 17, 5)
    if rem != 0 or k < 0:
        raise ValueError("not a type-(5,0) nanotube dual")
    from .oracle import canonical_form

    expect = build_seed(SeedKind(SeedTag.NANOTUBE, k))
    if canonical_form(g) != canonical_form(expect):
        raise ValueError("not a type-(5,0) nanotube dual")
    return build_seed(SeedKind(SeedTag.NANOTUBE, k + 1))
