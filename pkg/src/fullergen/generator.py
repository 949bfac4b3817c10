"""The generation driver: depth-first recursion from the irreducible
start graphs, one expansion per equivalence class, children kept only
when their constructing expansion was canonical.

Exactly one representative of every isomorphism class in the requested
window reaches the sink.  Runs can be split over independent processes:
ownership of a subtree is decided by a counter over the nodes where a
root-to-node path first reaches the splitting size, so the parts are
disjoint and their union equals the unsplit run.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .canonical import (
    compute_automorphism_group,
    is_canonical,
    site_equivalence_classes,
)
from .expansions import (
    apply_expansion_full,
    enumerate_expansion_sites,
    kind_length,
    matched_reductions,
)
from .lookahead import canonical_length_bound, prune_expansion
from .planar import min_pentagon_distance, to_primal, validate
from .seeds import SeedKind, SeedTag, apply_F, build_seed


class Mode(Enum):
    ALL = "all"
    IPR = "ipr"


SPLIT_SIZE = 16  # dual size at which subtree ownership is decided


@dataclass
class GenerationTask:
    n_min: int = 20
    n_max: int = 60
    mode: Mode = Mode.ALL
    split: tuple = (0, 1)  # (res, mod)
    sink: object = None  # callable(graph, n, info)
    emit_dual: bool = False
    lookaheads: bool = True
    debug_checks: bool = False

    def __post_init__(self):
        if self.n_min % 2 or self.n_max % 2 or self.n_min < 20:
            raise ValueError("vertex bounds must be even and at least 20")
        if self.n_min > self.n_max:
            raise ValueError("empty size window")
        res, mod = self.split
        if mod < 1 or not (0 <= res < mod):
            raise ValueError("split residue out of range")


@dataclass
class GenerationStats:
    fullerenes: dict = field(default_factory=dict)
    ipr_fullerenes: dict = field(default_factory=dict)
    attempted: int = 0
    accepted: int = 0
    decisions_by_stage: dict = field(default_factory=dict)

    def total(self):
        return sum(self.fullerenes.values())


@dataclass
class _Run:
    task: GenerationTask
    stats: GenerationStats
    nv_min: int
    nv_max: int
    counter: int = 0


def generate(task: GenerationTask) -> GenerationStats:
    """Run the recursion; returns exact per-size counts."""
    stats = GenerationStats()
    st = _Run(task, stats, task.n_min // 2 + 2, task.n_max // 2 + 2)

    roots = [(build_seed(SeedKind(SeedTag.C20)), False)]
    if st.nv_max >= 16:
        roots.append((build_seed(SeedKind(SeedTag.C28TD)), False))
    tube = None
    while (17 if tube is None else tube.nv + 5) <= st.nv_max:
        tube = build_seed(SeedKind(SeedTag.NANOTUBE, 0)) if tube is None \
            else apply_F(tube)
        roots.append((tube, True))

    for g, is_tube in roots:
        _visit(st, g, None, is_tube, below=True)
    return stats


def _visit(st, g, group, is_tube, below):
    """Process one accepted (or seed) graph.  ``below`` is true while the
    path from the root has stayed under the splitting size."""
    if below and g.nv >= SPLIT_SIZE:
        st.counter += 1
        res, mod = st.task.split
        if (st.counter - 1) % mod != res:
            return
        below = False
    _emit(st, g, is_tube)
    if group is None:
        group = compute_automorphism_group(g)
    _expand(st, g, group, below)


def _emit(st, g, is_tube):
    task, stats = st.task, st.stats
    if not (st.nv_min <= g.nv <= st.nv_max):
        return
    if g.nv < SPLIT_SIZE and task.split[1] > 1 and task.split[0] != 0:
        return  # graphs below the splitting size belong to residue 0
    ipr = min_pentagon_distance(g) >= 2
    if task.mode is Mode.IPR and not ipr:
        return
    n = g.n_primal
    stats.fullerenes[n] = stats.fullerenes.get(n, 0) + 1
    if ipr:
        stats.ipr_fullerenes[n] = stats.ipr_fullerenes.get(n, 0) + 1
    if task.sink is not None:
        payload = g.copy() if task.emit_dual else to_primal(g)
        task.sink(payload, n, {"ipr": ipr, "nanotube": is_tube})


def _expand(st, g, group, below):
    task = st.task
    size_cap = st.nv_max - g.nv - 1  # longest expansion the window allows
    if size_cap < 1:
        return
    reductions = matched_reductions(g, min(3, size_cap + 1))
    if task.lookaheads:
        bound = canonical_length_bound(g, reductions)
        max_len = min(size_cap, bound.max_len)
        far_l0 = bound.far_l0
    else:
        max_len = size_cap
        far_l0 = None  # computed on demand in IPR mode

    lens = _allowed_lengths(st, g, reductions, max_len, far_l0)
    if not lens:
        return
    sites = enumerate_expansion_sites(g, max(lens))
    if len(lens) < max(lens):
        sites = [s for s in sites if kind_length(s.kind) in lens]
    sites = site_equivalence_classes(g, sites, group)

    stats = st.stats
    for site in sites:
        if task.lookaheads and not prune_expansion(g, site, reductions):
            continue
        child, triple, sig = apply_expansion_full(g, site)
        stats.attempted += 1
        if task.debug_checks:
            err = validate(child)
            assert err is None, err
            assert child.nv == g.nv + kind_length(site.kind) + 1
        res = is_canonical(child, triple, own_sig=sig)
        stage = res.decision_stage
        stats.decisions_by_stage[stage] = \
            stats.decisions_by_stage.get(stage, 0) + 1
        if not res.accept:
            continue
        stats.accepted += 1
        _visit(st, child, res.group, False, below and child.nv < SPLIT_SIZE)


def _allowed_lengths(st, g, reductions, max_len, far_l0=None):
    """Expansion lengths worth applying from g.

    In IPR mode a child is useful when it can still be expanded towards
    the window top (size <= top - 3: anything closer only reaches the
    top by a straight length-1 growth, which never yields an isolated-
    pentagon graph) or when it is itself an emission candidate (length
    >= 2 and inside the window).
    """
    task = st.task
    if task.mode is not Mode.IPR:
        return set(range(1, max_len + 1))
    top = st.nv_max
    out = set()
    for ln in range(1, max_len + 1):
        child = g.nv + ln + 1
        if child > top:
            break
        if child <= top - 3 or (ln >= 2 and child >= st.nv_min):
            out.add(ln)
    if not out:
        return out
    l0_triples = sum(1 for m in reductions if kind_length(m.triple.kind) == 1)
    if l0_triples and g.nv == top - 4:
        # its length-3 expansions cannot be canonical
        out.discard(3)
    if l0_triples >= 4:  # at least two distinct length-1 reductions
        if far_l0 is None:
            far_l0 = canonical_length_bound(g, reductions).far_l0
        if far_l0:
            # every canonical child keeps adjacent degree-5 vertices, so
            # none is an isolated-pentagon graph; keep parent uses only
            out = {ln for ln in out if g.nv + ln + 1 <= top - 3}
    return out


def ipr_prune(g, task: GenerationTask, reductions) -> bool:
    """Whether g can still contribute to an IPR run (emission aside)."""
    st = _Run(task, GenerationStats(),
              task.n_min // 2 + 2, task.n_max // 2 + 2)
    size_cap = st.nv_max - g.nv - 1
    if size_cap < 1:
        return False
    bound = canonical_length_bound(g, reductions)
    return bool(_allowed_lengths(st, g, reductions,
                                 min(size_cap, bound.max_len), bound.far_l0))


def emit(g, task: GenerationTask, stats: GenerationStats, is_tube=False):
    """Forward one graph to the sink and update the counters."""
    st = _Run(task, stats, task.n_min // 2 + 2, task.n_max // 2 + 2)
    _emit(st, g, is_tube)
