"""Homotopy-preserving graph reductions for independence complexes.

Three unconditional moves are applied exhaustively, in priority order:

* cone: an isolated vertex makes the independence complex contractible;
* K2 strip: a two-vertex complete component contributes one suspension;
* fold: if N(v) is contained in N(w) with v != w, deleting w preserves the
  homotopy type of the independence complex.

The scan order is fixed (lowest indices first) so the trace is a pure
function of the input graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .graphs import Graph, Vertex, delete_vertices
from .wedge import WedgeOfSpheres


@dataclass(frozen=True)
class Fold:
    """w was removed because N(v) was contained in N(w) at the time."""

    v: Vertex
    w: Vertex

    def to_json_dict(self) -> dict:
        return {"kind": "fold", "v": list(self.v), "w": list(self.w)}


@dataclass(frozen=True)
class Cone:
    """v was isolated, so the complex is a cone (contractible)."""

    v: Vertex

    def to_json_dict(self) -> dict:
        return {"kind": "cone", "v": list(self.v)}


@dataclass(frozen=True)
class StripK2:
    """{a, b} was a full K2 component; stripping it suspends the complex."""

    a: Vertex
    b: Vertex

    def to_json_dict(self) -> dict:
        return {"kind": "strip_k2", "a": list(self.a), "b": list(self.b)}


Move = Union[Fold, Cone, StripK2]


@dataclass(frozen=True)
class ReductionTrace:
    moves: tuple[Move, ...]
    suspensions: int
    contractible: bool
    residual: Graph

    def to_json_dict(self) -> dict:
        from .graphs import graph_to_json_dict

        return {
            "moves": [m.to_json_dict() for m in self.moves],
            "suspensions": self.suspensions,
            "contractible": self.contractible,
            "residual": graph_to_json_dict(self.residual),
        }


def find_fold(g: Graph) -> tuple[int, int] | None:
    """First pair (v, w) with N(v) contained in N(w), least by (w, v).

    Inclusion may be non-strict; equal neighborhoods (twins) are only
    considered in the orientation that removes the larger index.
    """
    masks = g.neighbor_masks
    nv = len(g)
    for w in range(nv):
        mw = masks[w]
        for v in range(nv):
            if v == w:
                continue
            mv = masks[v]
            if mv & ~mw:
                continue
            if mv == mw and w < v:
                continue
            return (v, w)
    return None


def _find_isolated(g: Graph) -> int | None:
    for i, mask in enumerate(g.neighbor_masks):
        if mask == 0:
            return i
    return None


def _find_k2_component(g: Graph) -> tuple[int, int] | None:
    masks = g.neighbor_masks
    for a, mask in enumerate(masks):
        if mask.bit_count() == 1:
            b = mask.bit_length() - 1
            if masks[b] == 1 << a:
                return (a, b)
    return None


def reduce_graph(g: Graph) -> ReductionTrace:
    """Exhaustively apply cone / K2-strip / fold moves, in that priority.

    I(residual) suspended `suspensions` times is homotopy equivalent to
    I(g); if `contractible` is set the whole complex is contractible and
    reduction stopped at the cone move.
    """
    moves: list[Move] = []
    suspensions = 0
    current = g
    while len(current) > 0:
        iso = _find_isolated(current)
        if iso is not None:
            moves.append(Cone(current.vertices[iso]))
            return ReductionTrace(tuple(moves), suspensions, True, current)
        k2 = _find_k2_component(current)
        if k2 is not None:
            a, b = k2
            moves.append(StripK2(current.vertices[a], current.vertices[b]))
            suspensions += 1
            current = delete_vertices(current, [a, b])
            continue
        fold = find_fold(current)
        if fold is None:
            break
        v, w = fold
        moves.append(Fold(current.vertices[v], current.vertices[w]))
        current = delete_vertices(current, [w])
    return ReductionTrace(tuple(moves), suspensions, False, current)


def homotopy_type_if_closed(trace: ReductionTrace) -> WedgeOfSpheres | None:
    """Read off the homotopy type when the trace fully resolved it.

    Contractible traces give a point; an empty residual gives a single
    sphere S^{suspensions - 1} (each K2 strip suspends the empty complex).
    A nonempty residual gives None: run homology on it and shift.
    """
    if trace.contractible:
        return WedgeOfSpheres.point()
    if len(trace.residual) == 0:
        return WedgeOfSpheres.sphere(trace.suspensions - 1)
    return None
