"""Exact canonical labelling for graphs on at most 16 vertices.

Individualization-refinement search: an equitable partition is refined from a
degree/triangle invariant, then the first non-singleton cell is split on each
candidate vertex in turn.  Leaves of the search tree are complete labellings;
the canonical form is the lexicographically smallest upper-triangle encoding
over all leaves.  Branch-and-bound on the already-determined encoding prefix
plus two exact prunings keep the tree small:

* only candidates whose adjacency row against the fixed prefix is minimal can
  start a minimal completion (the row becomes the next encoding column), and
* children refining to the identical ordered partition are explored once.

Exponential in the worst case, which the n <= 16 cap makes acceptable.
"""
from __future__ import annotations

from functools import lru_cache

from .errors import OrderTooLargeForCanonical
from .graph import Graph, bits, popcount, relabel

MAX_CANONICAL = 16


def _initial_cells(g: Graph) -> tuple[tuple[int, ...], ...]:
    tri = []
    for v in range(g.n):
        t = sum(popcount(g.adj[v] & g.adj[u]) for u in bits(g.adj[v]))
        tri.append(t // 2)
    groups: dict[tuple[int, int], list[int]] = {}
    for v in range(g.n):
        groups.setdefault((g.degree(v), tri[v]), []).append(v)
    return tuple(tuple(groups[key]) for key in sorted(groups))


def _refine(g: Graph, cells: tuple[tuple[int, ...], ...]) -> tuple[tuple[int, ...], ...]:
    """Equitable refinement; cell order is an isomorphism invariant."""
    while True:
        masks = [0] * len(cells)
        for ci, cell in enumerate(cells):
            for v in cell:
                masks[ci] |= 1 << v
        new_cells: list[tuple[int, ...]] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                new_cells.append(cell)
                continue
            sig = {}
            for v in cell:
                sig[v] = tuple(popcount(g.adj[v] & cm) for cm in masks)
            parts: dict[tuple, list[int]] = {}
            for v in cell:
                parts.setdefault(sig[v], []).append(v)
            if len(parts) > 1:
                changed = True
            for key in sorted(parts):
                new_cells.append(tuple(parts[key]))
        cells = tuple(new_cells)
        if not changed:
            return cells


def _column(g: Graph, v: int, prefix_vertices: list[int]) -> int:
    col = 0
    row = g.adj[v]
    for u in prefix_vertices:
        col = (col << 1) | (row >> u & 1)
    return col


def canonical_labeling(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Return (encoding, labels): encoding[j-1] is column j of the canonical
    adjacency (bit to label 0 most significant); labels[v] is v's canonical
    label."""
    if g.n > MAX_CANONICAL:
        raise OrderTooLargeForCanonical(
            f"canonical labelling capped at n <= {MAX_CANONICAL}, got {g.n}"
        )
    n = g.n
    if n == 1:
        return (), (0,)

    best_enc: list[int] | None = None
    best_cells: tuple[tuple[int, ...], ...] | None = None

    def visit(cells: tuple[tuple[int, ...], ...], prefix: list[int]) -> None:
        nonlocal best_enc, best_cells
        k = 0
        while k < len(cells) and len(cells[k]) == 1:
            k += 1
        run = [cells[i][0] for i in range(k)]
        # extend the determined encoding prefix (columns for labels 1..k-1)
        while len(prefix) < k - 1:
            j = len(prefix) + 1
            prefix = prefix + [_column(g, run[j], run[:j])]
        if best_enc is not None and prefix > best_enc[: len(prefix)]:
            return
        if k == n:
            if best_enc is None or prefix < best_enc:
                best_enc = prefix
                best_cells = cells
            return
        cell = cells[k]
        cols = [(_column(g, v, run), v) for v in cell]
        low = min(c for c, _ in cols)
        # the next encoding column of any completion is the candidate's row
        # against the fixed prefix, so only minimal rows can win; if the prefix
        # ties the best leaf, a minimal row worse than the best's column k loses
        if k > 0 and best_enc is not None and prefix == best_enc[: len(prefix)]:
            if low > best_enc[k - 1]:
                return
        seen: set[tuple[tuple[int, ...], ...]] = set()
        for c, v in cols:
            if c != low:
                continue
            rest = tuple(u for u in cell if u != v)
            child = cells[:k] + ((v,), rest) + cells[k + 1:]
            refined = _refine(g, child)
            if refined in seen:
                continue
            seen.add(refined)
            visit(refined, prefix + [c])

    visit(_refine(g, _initial_cells(g)), [])
    assert best_enc is not None and best_cells is not None
    labels = [0] * n
    for pos, cell in enumerate(best_cells):
        labels[cell[0]] = pos
    return tuple(best_enc), tuple(labels)


@lru_cache(maxsize=1 << 16)
def canonical_form(g: Graph) -> str:
    """graph6 string of the canonically relabelled graph."""
    from .graph6 import encode

    _, labels = canonical_labeling(g)
    return encode(relabel(g, labels))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
