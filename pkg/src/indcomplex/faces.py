"""Independence-complex face enumeration and f-vectors.

A graph is treated implicitly as its independence complex: faces are the
independent vertex sets, including the empty face.  Enumeration is bounded
by a configurable face budget (env var INDCOMPLEX_FACE_BUDGET) and guarded
by an exact pre-count computed per connected component, so oversized inputs
are rejected deterministically before any memory is committed.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterator

from .graphs import Graph, delete_vertices

DEFAULT_FACE_BUDGET = 20_000_000
FACE_BUDGET_ENV = "INDCOMPLEX_FACE_BUDGET"

MAX_ENUM_VERTICES = 128
# Components larger than this are rejected by the exact pre-count.
MAX_COMPONENT_VERTICES = 36
_COUNT_MEMO_CAP = 2_000_000


class FaceBudgetExceeded(RuntimeError):
    """Enumeration would exceed the face budget (or its pre-count guard)."""


def face_budget() -> int:
    raw = os.environ.get(FACE_BUDGET_ENV)
    if raw is None:
        return DEFAULT_FACE_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise FaceBudgetExceeded(f"invalid {FACE_BUDGET_ENV}={raw!r}") from None
    if value < 1:
        raise FaceBudgetExceeded(f"invalid {FACE_BUDGET_ENV}={raw!r}")
    return value


def count_faces(g: Graph) -> int:
    """Exact number of independent sets of g (empty set included).

    Works component-wise and multiplies; rejects components with more than
    MAX_COMPONENT_VERTICES vertices rather than risk an expensive count.
    """
    if len(g) > MAX_ENUM_VERTICES:
        raise FaceBudgetExceeded(
            f"graph has {len(g)} vertices; enumeration is capped at {MAX_ENUM_VERTICES}"
        )
    total = 1
    for comp in g.components():
        size = comp.bit_count()
        if size > MAX_COMPONENT_VERTICES:
            raise FaceBudgetExceeded(
                f"component with {size} vertices exceeds the exact-count cap "
                f"of {MAX_COMPONENT_VERTICES}"
            )
        total *= _count_component(g, comp)
    return total


def _count_component(g: Graph, comp_mask: int) -> int:
    masks = g.neighbor_masks
    memo: dict[int, int] = {}

    def count(mask: int) -> int:
        if mask == 0:
            return 1
        hit = memo.get(mask)
        if hit is not None:
            return hit
        if len(memo) > _COUNT_MEMO_CAP:
            raise FaceBudgetExceeded("independent-set count exceeded its memo cap")
        v = (mask & -mask).bit_length() - 1
        result = count(mask & ~(1 << v)) + count(mask & ~(masks[v] | (1 << v)))
        memo[mask] = result
        return result

    return count(comp_mask)


def enumerate_faces(g: Graph, budget: int | None = None) -> Iterator[tuple[int, ...]]:
    """Yield every independent set of g exactly once, in lexicographic order
    of sorted member tuples, starting with the empty face."""
    limit = face_budget() if budget is None else budget
    total = count_faces(g)
    if total > limit:
        raise FaceBudgetExceeded(f"{total} faces exceed the budget of {limit}")
    masks = g.neighbor_masks
    nv = len(g)

    def rec(face: list[int], banned: int, start: int) -> Iterator[tuple[int, ...]]:
        for v in range(start, nv):
            if banned >> v & 1:
                continue
            face.append(v)
            yield tuple(face)
            yield from rec(face, banned | masks[v] | (1 << v), v + 1)
            face.pop()

    yield ()
    yield from rec([], 0, 0)


def faces_by_dimension(g: Graph, budget: int | None = None) -> dict[int, list[tuple[int, ...]]]:
    """Faces grouped by dimension (|face| - 1); each group stays in lex order."""
    out: dict[int, list[tuple[int, ...]]] = {}
    for face in enumerate_faces(g, budget=budget):
        out.setdefault(len(face) - 1, []).append(face)
    return out


@dataclass(frozen=True)
class FVector:
    """Counts of nonempty faces by cardinality: counts[i] = #(i+1)-vertex faces.

    The single empty face is kept separate from the counts.
    """

    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(c < 0 for c in self.counts):
            raise ValueError("face counts must be nonnegative")

    @property
    def total_faces(self) -> int:
        """All faces including the empty one."""
        return 1 + sum(self.counts)


def f_vector(g: Graph, budget: int | None = None) -> FVector:
    counts: list[int] = []
    for face in enumerate_faces(g, budget=budget):
        if not face:
            continue
        size = len(face)
        while len(counts) < size:
            counts.append(0)
        counts[size - 1] += 1
    return FVector(tuple(counts))


def euler_from_fvector(fv: FVector) -> int:
    """Unreduced Euler characteristic: alternating sum over nonempty faces."""
    return sum((-1) ** i * c for i, c in enumerate(fv.counts))


def deletion_graph(g: Graph, v: int) -> Graph:
    """G - v; its independence complex is I(G) with v removed."""
    return delete_vertices(g, [v])


def link_graph(g: Graph, v: int) -> Graph:
    """G - N[v]; its independence complex is the link of v in I(G)."""
    return delete_vertices(g, g.neighborhood(v, closed=True))
