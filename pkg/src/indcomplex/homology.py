"""Reduced simplicial homology of independence complexes.

Chain groups are indexed by the lex-ordered faces of each dimension, in the
augmented convention: the empty face spans dimension -1, so contractible
complexes have all reduced Betti numbers zero and the empty complex reports
a single generator in dimension -1.

The family pipeline first fold-reduces the graph, computes homology on the
residual, and shifts dimensions up by the number of recorded suspensions.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import linalg
from .faces import FaceBudgetExceeded, faces_by_dimension
from .fold import reduce_graph
from .graphs import Family, Graph, build_family

# Integral Smith reduction is only attempted below this face count.
SNF_FACE_LIMIT = 100_000


@dataclass(frozen=True)
class BettiProfile:
    """Reduced Betti numbers (nonzero entries only) plus torsion summands."""

    reduced_betti: dict[int, int] = field(default_factory=dict)
    torsion: tuple[tuple[int, int], ...] = ()
    coefficient: str = "gf2"
    suspensions_applied: int = 0

    def betti(self, dim: int) -> int:
        return self.reduced_betti.get(dim, 0)

    @property
    def reduced_euler(self) -> int:
        return sum((-1) ** d * b for d, b in self.reduced_betti.items())

    def shifted(self, s: int) -> "BettiProfile":
        return BettiProfile(
            {d + s: b for d, b in self.reduced_betti.items()},
            tuple((d + s, f) for d, f in self.torsion),
            self.coefficient,
            self.suspensions_applied + s,
        )

    def to_json_dict(self) -> dict:
        return {
            "reduced_betti": {str(d): b for d, b in sorted(self.reduced_betti.items())},
            "torsion": [[d, f] for d, f in self.torsion],
            "coefficient": self.coefficient,
            "suspensions_applied": self.suspensions_applied,
        }


@dataclass(frozen=True)
class BoundaryMatrix:
    """Sparse boundary operator from d-faces (columns) to (d-1)-faces (rows).

    Both sides are in lex face order; omitting the j-th vertex (ascending)
    contributes sign (-1)^j.  For d = 0 this is the augmentation row.
    """

    dimension: int
    n_rows: int
    n_cols: int
    columns: tuple[tuple[tuple[int, int], ...], ...]  # per column: ((row, sign), ...)


def boundary_matrix(
    g: Graph, d: int, faces: dict[int, list[tuple[int, ...]]] | None = None
) -> BoundaryMatrix:
    if d < 0:
        raise ValueError("boundary dimension must be >= 0")
    if faces is None:
        faces = faces_by_dimension(g)
    return _boundary(faces, d)


def _boundary(faces: dict[int, list[tuple[int, ...]]], d: int) -> BoundaryMatrix:
    cols_faces = faces.get(d, [])
    if d == 0:
        return BoundaryMatrix(
            0, 1, len(cols_faces), tuple(((0, 1),) for _ in cols_faces)
        )
    rows_faces = faces.get(d - 1, [])
    row_index = {f: i for i, f in enumerate(rows_faces)}
    columns = []
    for face in cols_faces:
        entries = []
        for j in range(len(face)):
            sub = face[:j] + face[j + 1 :]
            entries.append((row_index[sub], (-1) ** j))
        entries.sort()
        columns.append(tuple(entries))
    return BoundaryMatrix(d, len(rows_faces), len(cols_faces), tuple(columns))


def _all_boundaries(faces: dict[int, list[tuple[int, ...]]]) -> list[BoundaryMatrix]:
    top = max((d for d in faces if d >= 0), default=-1)
    return [_boundary(faces, d) for d in range(0, top + 1)]


def _betti_from_ranks(
    faces: dict[int, list[tuple[int, ...]]], ranks: dict[int, int]
) -> dict[int, int]:
    top = max((d for d in faces if d >= 0), default=-1)
    out: dict[int, int] = {}
    b_empty = 1 - ranks.get(0, 0)  # c_{-1} = 1 for the empty face
    if b_empty:
        out[-1] = b_empty
    for d in range(0, top + 1):
        b = len(faces.get(d, [])) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        if b:
            out[d] = b
    return out


def betti_over_field(g: Graph, p: int, budget: int | None = None) -> BettiProfile:
    """Reduced Betti numbers of I(g) over GF(p), without fold reduction."""
    faces = faces_by_dimension(g, budget=budget)
    ranks: dict[int, int] = {}
    for bd in _all_boundaries(faces):
        if p == 2:
            cols = [sum(1 << r for r, _ in col) for col in bd.columns]
            ranks[bd.dimension] = linalg.gf2_rank(cols)
        else:
            cols = [dict(col) for col in bd.columns]
            ranks[bd.dimension] = linalg.modp_rank(cols, p)
    return BettiProfile(_betti_from_ranks(faces, ranks), (), f"gf{p}")


def integral_homology(g: Graph, budget: int | None = None) -> BettiProfile:
    """Reduced integral homology: Betti numbers plus torsion invariant factors."""
    faces = faces_by_dimension(g, budget=budget)
    total = sum(len(v) for v in faces.values())
    if total > SNF_FACE_LIMIT:
        raise FaceBudgetExceeded(
            f"{total} faces exceed the integral Smith-reduction limit of {SNF_FACE_LIMIT}"
        )
    ranks: dict[int, int] = {}
    torsion: list[tuple[int, int]] = []
    for bd in _all_boundaries(faces):
        factors = linalg.smith_invariant_factors(dict(col) for col in bd.columns)
        ranks[bd.dimension] = len(factors)
        # Non-unit factors of the d-boundary are torsion in dimension d - 1.
        torsion.extend((bd.dimension - 1, f) for f in factors if f != 1)
    return BettiProfile(_betti_from_ranks(faces, ranks), tuple(torsion), "int")


def _zero_profile(coeff: str) -> BettiProfile:
    return BettiProfile({}, (), coeff)


def _coeff_compute(g: Graph, coeff: str, budget: int | None) -> BettiProfile:
    if coeff == "int":
        return integral_homology(g, budget=budget)
    if coeff.startswith("gf"):
        return betti_over_field(g, int(coeff[2:]), budget=budget)
    raise ValueError(f"unknown coefficient descriptor {coeff!r}")


def betti_of_graph(
    g: Graph,
    coeff: str = "gf2",
    use_reduction: bool = True,
    budget: int | None = None,
) -> BettiProfile:
    """Homology of I(g), optionally through the fold-reduction pipeline."""
    if not use_reduction:
        return _coeff_compute(g, coeff, budget)
    trace = reduce_graph(g)
    if trace.contractible:
        return _zero_profile(coeff)
    profile = _coeff_compute(trace.residual, coeff, budget)
    return profile.shifted(trace.suspensions)


def betti_of_family(f: Family, coeff: str = "gf2", budget: int | None = None) -> BettiProfile:
    """Build the family graph, fold-reduce, compute homology, shift suspensions."""
    return betti_of_graph(build_family(f), coeff=coeff, budget=budget)
