"""Isomorph-free exhaustive generation at small orders, plus seeded dense
samplers for larger ones.

Exhaustive mode is canonical augmentation: graphs of order k+1 are built by
attaching one new vertex to each parent of order k, and a child is kept only
when deleting its canonically chosen removable vertex gives back exactly that
parent.  Each isomorphism class therefore appears once, produced from one
parent class, and hereditary predicates (claw-free, net-free, and the
extended-net filter) prune the tree at every level.  Non-hereditary
predicates (closed, two-connected) only gate emission at the final order.

Sample mode starts from the complete graph and deletes uniformly chosen
edges, rejecting deletions that create an induced claw or disconnect the
graph, which concentrates samples near the dense regimes the spectral
verifiers probe.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Callable

import numpy as np

from .canon import canonical_form, canonical_labeling
from .errors import InfeasibleSpec, InvalidParams, TargetUnreachable
from .families import graph_m, net
from .graph import (
    Graph,
    bits,
    block_decomposition,
    from_edges,
    induced,
    is_connected,
    is_two_connected,
    popcount,
)
from . import graph6
from .structure import find_induced, is_claw_free, is_closed

MAX_EXHAUSTIVE = 9
MAX_SAMPLE = 30

HEREDITARY_FILTERS = ("claw-free", "net-free", "m-free")
EMISSION_FILTERS = ("closed", "two-connected")
KNOWN_FILTERS = HEREDITARY_FILTERS + EMISSION_FILTERS + ("connected",)

_NET = net()
_M = graph_m()


@dataclass(frozen=True)
class Exhaustive:
    pass


@dataclass(frozen=True)
class Sample:
    count: int
    seed: int
    density: float


@dataclass(frozen=True)
class EnumSpec:
    n: int
    predicate_chain: tuple[str, ...] = ("connected", "claw-free")
    mode: Exhaustive | Sample = field(default_factory=Exhaustive)


def _validate(spec: EnumSpec) -> None:
    for name in spec.predicate_chain:
        if name not in KNOWN_FILTERS:
            raise InfeasibleSpec(f"unknown predicate {name!r}")
    if "closed" in spec.predicate_chain and "claw-free" not in spec.predicate_chain:
        raise InfeasibleSpec("'closed' filter requires 'claw-free' in the chain")
    if spec.n < 1:
        raise InfeasibleSpec(f"order must be positive, got {spec.n}")
    if isinstance(spec.mode, Exhaustive):
        if spec.n > MAX_EXHAUSTIVE:
            raise InfeasibleSpec(
                f"exhaustive mode capped at n <= {MAX_EXHAUSTIVE}, got {spec.n}"
            )
    else:
        if spec.n > MAX_SAMPLE:
            raise InfeasibleSpec(f"sample mode capped at n <= {MAX_SAMPLE}, got {spec.n}")
        if not 0.0 <= spec.mode.density <= 1.0:
            raise InfeasibleSpec(f"density must lie in [0, 1], got {spec.mode.density}")
        if spec.mode.count < 0:
            raise InfeasibleSpec(f"sample count must be >= 0, got {spec.mode.count}")


def _attach(parent: Graph, mask: int) -> Graph:
    rows = list(parent.adj)
    new_bit = 1 << parent.n
    for v in bits(mask):
        rows[v] |= new_bit
    rows.append(mask)
    return Graph(n=parent.n + 1, adj=tuple(rows), m=parent.m + popcount(mask))


def _claw_free_extension_ok(p: Graph, attach_mask: int) -> bool:
    """For a claw-free parent, decide whether adding a vertex adjacent to
    attach_mask keeps the child claw-free.  Any new claw must involve the
    new vertex: either as center (independent triple inside the mask) or as
    a leaf (some u in the mask with two nonadjacent old neighbors outside
    the mask)."""
    verts = list(bits(attach_mask))
    for i, a in enumerate(verts):
        na = p.adj[a]
        for b in verts[i + 1 :]:
            if na >> b & 1:
                continue
            if attach_mask & ~na & ~p.adj[b] & ~(1 << a | 1 << b):
                return False
    for u in verts:
        outside = p.adj[u] & ~attach_mask
        for a in bits(outside):
            if outside & ~p.adj[a] & ~(1 << a):
                return False
    return True


def _removal_rule_vertex(child: Graph, connected: bool) -> int:
    """The canonically chosen vertex whose deletion defines the parent:
    highest canonical label, restricted to non-cut vertices when generating
    connected graphs."""
    labels = canonical_labeling(child)[1]
    allowed = child.vertex_mask
    if connected:
        allowed &= ~block_decomposition(child).cut_vertices
    return max(bits(allowed), key=lambda v: labels[v])


def _expand_parent(parent: Graph, chain: tuple[str, ...]) -> list[Graph]:
    """All accepted children of one parent, deterministically ordered."""
    connected = "connected" in chain
    claw = "claw-free" in chain
    lo = 1 if connected else 0
    seen: set[str] = set()
    out: list[Graph] = []
    for mask in range(lo, 1 << parent.n):
        if claw and not _claw_free_extension_ok(parent, mask):
            continue
        child = _attach(parent, mask)
        if "net-free" in chain and find_induced(child, _NET) is not None:
            continue
        if "m-free" in chain and find_induced(child, _M) is not None:
            continue
        rule = _removal_rule_vertex(child, connected)
        if rule != parent.n:
            kept = child.vertex_mask & ~(1 << rule)
            if canonical_form(induced(child, kept)) != canonical_form(parent):
                continue
        cf = canonical_form(child)
        if cf in seen:
            continue
        seen.add(cf)
        out.append(child)
    return out


def _expand_task(args: tuple[str, tuple[str, ...]]) -> list[str]:
    parent_g6, chain = args
    return [graph6.encode(c) for c in _expand_parent(graph6.decode(parent_g6), chain)]


def _emission_ok(g: Graph, chain: tuple[str, ...]) -> bool:
    if "two-connected" in chain and not is_two_connected(g):
        return False
    if "closed" in chain and not is_closed(g):
        return False
    return True


def _load_checkpoint(path: str | None) -> dict[str, list[str]]:
    done: dict[str, list[str]] = {}
    if path is None:
        return done
    try:
        with open(path, encoding="ascii") as fh:
            for line in fh:
                parts = line.split()
                if parts:
                    done[parts[0]] = parts[1:]
    except FileNotFoundError:
        pass
    return done


def _expand_level(
    parents: list[Graph],
    chain: tuple[str, ...],
    workers: int,
    checkpoint: str | None,
) -> list[Graph]:
    """One augmentation level.  The checkpoint file holds one line per
    finished parent (parent graph6 followed by its children), so an
    interrupted run resumes without redoing completed branches."""
    done = _load_checkpoint(checkpoint)
    parent_lines = [graph6.encode(p) for p in parents]
    todo = [line for line in parent_lines if line not in done]
    results: dict[str, list[str]] = dict(done)
    ck = open(checkpoint, "a", encoding="ascii") if checkpoint else None
    try:
        if workers > 1 and len(todo) > 1:
            with Pool(workers) as pool:
                for line, kids in zip(
                    todo, pool.map(_expand_task, [(line, chain) for line in todo])
                ):
                    results[line] = kids
                    if ck:
                        print(line, *kids, file=ck, flush=True)
        else:
            for line in todo:
                kids = _expand_task((line, chain))
                results[line] = kids
                if ck:
                    print(line, *kids, file=ck, flush=True)
    finally:
        if ck:
            ck.close()
    merged: list[Graph] = []
    for line in parent_lines:
        merged.extend(graph6.decode(k) for k in results[line])
    return merged


def enumerate_graphs(
    spec: EnumSpec,
    consumer: Callable[[Graph], None],
    workers: int = 1,
    checkpoint: str | None = None,
) -> int:
    """Feed every graph matching spec to consumer; return how many.

    Exhaustive mode emits one representative per isomorphism class in a
    deterministic order.  Sample mode emits seeded random graphs and may
    repeat classes.  The checkpoint only applies to the last (most
    expensive) exhaustive level.
    """
    _validate(spec)
    if isinstance(spec.mode, Sample):
        return _run_sample(spec, consumer)
    frontier = [from_edges(1, ())]
    for order in range(1, spec.n):
        last = order == spec.n - 1
        frontier = _expand_level(
            frontier,
            spec.predicate_chain,
            workers,
            checkpoint if last else None,
        )
    count = 0
    for g in frontier:
        if _emission_ok(g, spec.predicate_chain):
            consumer(g)
            count += 1
    return count


def sample_dense_claw_free(n: int, target_m: int, seed: int) -> Graph:
    """Delete uniformly chosen edges from K_n down to target_m, rejecting
    any deletion that creates an induced claw or disconnects the graph.
    Deterministic for a fixed seed.  Raises TargetUnreachable, carrying the
    stuck graph and its edge count, when no deletable edge remains."""
    if not 1 <= n <= MAX_SAMPLE:
        raise InvalidParams(f"sampler needs 1 <= n <= {MAX_SAMPLE}, got {n}")
    if target_m > n * (n - 1) // 2 or target_m < 0:
        raise InvalidParams(f"target_m {target_m} outside 0..C({n},2)")
    rng = np.random.default_rng(seed)
    rows = [((1 << n) - 1) & ~(1 << v) for v in range(n)]

    def creates_claw(u: int, v: int) -> bool:
        # any new claw uses the fresh non-edge (u, v) as a leaf pair
        for c in bits(rows[u] & rows[v]):
            third = rows[c] & ~rows[u] & ~rows[v] & ~(1 << u | 1 << v)
            if third:
                return True
        return False

    m = n * (n - 1) // 2
    while m > target_m:
        edges = [(u, v) for u in range(n) for v in bits(rows[u] >> (u + 1) << (u + 1))]
        removed = False
        for idx in rng.permutation(len(edges)):
            u, v = edges[int(idx)]
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
            if creates_claw(u, v) or not is_connected(Graph(n, tuple(rows), m - 1)):
                rows[u] |= 1 << v
                rows[v] |= 1 << u
                continue
            m -= 1
            removed = True
            break
        if not removed:
            stuck = Graph(n, tuple(rows), m)
            raise TargetUnreachable(
                f"no deletable edge at m={m} (target {target_m})",
                graph=stuck,
                achieved_m=m,
            )
    return Graph(n, tuple(rows), m)


def _sample_ok(g: Graph, chain: tuple[str, ...]) -> bool:
    if "connected" in chain and not is_connected(g):
        return False
    if "claw-free" in chain and not is_claw_free(g):
        return False
    if "net-free" in chain and find_induced(g, _NET) is not None:
        return False
    if "m-free" in chain and find_induced(g, _M) is not None:
        return False
    return _emission_ok(g, chain)


def _run_sample(spec: EnumSpec, consumer: Callable[[Graph], None]) -> int:
    mode = spec.mode
    assert isinstance(mode, Sample)
    total = spec.n * (spec.n - 1) // 2
    target_m = round(mode.density * total)
    emitted = 0
    attempts = 0
    limit = 200 * max(mode.count, 1)
    while emitted < mode.count:
        if attempts >= limit:
            raise InfeasibleSpec(
                f"sampler rejected {attempts} candidates before reaching "
                f"count={mode.count}"
            )
        try:
            g = sample_dense_claw_free(spec.n, target_m, mode.seed + attempts)
        except TargetUnreachable as exc:
            g = exc.graph  # denser than asked but valid; still near the regime
        attempts += 1
        if g is None or not _sample_ok(g, spec.predicate_chain):
            continue
        consumer(g)
        emitted += 1
    return emitted


def exhaustive_list(
    n: int,
    predicate_chain: tuple[str, ...] = ("connected", "claw-free"),
    workers: int = 1,
    checkpoint: str | None = None,
) -> list[Graph]:
    out: list[Graph] = []
    enumerate_graphs(
        EnumSpec(n, predicate_chain), out.append, workers=workers, checkpoint=checkpoint
    )
    return out
