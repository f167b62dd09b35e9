"""Grid graphs and their induced subgraph families.

The central objects are the n-by-k square grid graph (vertices at integer
coordinates, edges between L1-distance-1 pairs) and four families of induced
subgraphs of the n-by-6 grid obtained by removing vertices from the last
column.  Vertices are kept in column-major lexicographic order so every
downstream computation (fold scanning, boundary matrix layout) is
deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

Vertex = tuple[int, int]

FAMILY_KINDS = ("gamma", "x", "y", "a", "b")

# Vertices removed from the last column of the n-by-6 grid, per family.
_FAMILY_REMOVED_ROWS = {"x": (1, 3, 5), "y": (3, 4), "a": (1, 5), "b": (4,)}


class GraphError(ValueError):
    """Invalid graph construction or vertex index."""


@dataclass(frozen=True)
class Family:
    """A named induced-subgraph family: gamma(n, k) or x/y/a/b(n) with k = 6."""

    kind: str
    n: int
    k: int = 6

    def __post_init__(self) -> None:
        if self.kind not in FAMILY_KINDS:
            raise GraphError(f"unknown family kind {self.kind!r}")
        if self.n < 1:
            raise GraphError(f"family parameter n must be >= 1, got {self.n}")
        if self.k < 1:
            raise GraphError(f"family parameter k must be >= 1, got {self.k}")
        if self.kind != "gamma" and self.k != 6:
            raise GraphError(f"family {self.kind!r} is only defined for k = 6")

    @property
    def distinguished_vertex(self) -> Vertex:
        """The marked last-column vertex (n, 3) used by the a/b recursions."""
        return (self.n, 3)


class Graph:
    """An immutable finite simple graph with grid-coordinate vertices.

    Vertices are (x, y) integer pairs, stored strictly sorted in column-major
    lexicographic order; edges are unordered index pairs into that list.
    Construction canonicalizes the order, so equal vertex/edge sets compare
    equal regardless of input order.  Adjacency is also kept as per-vertex
    neighbor bitmasks.
    """

    __slots__ = ("vertices", "edges", "family", "neighbor_masks", "_index")

    def __init__(
        self,
        vertices: Iterable[Vertex],
        edges: Iterable[tuple[int, int]],
        family: Family | None = None,
    ) -> None:
        raw = [tuple(v) for v in vertices]
        if len(set(raw)) != len(raw):
            raise GraphError("duplicate vertices")
        order = sorted(range(len(raw)), key=lambda i: raw[i])
        remap = {old: new for new, old in enumerate(order)}
        self_vertices = tuple(raw[i] for i in order)

        edge_set: set[tuple[int, int]] = set()
        for a, b in edges:
            if not (0 <= a < len(raw) and 0 <= b < len(raw)):
                raise GraphError(f"edge ({a}, {b}) references an invalid vertex index")
            if a == b:
                raise GraphError(f"loop at vertex index {a}")
            i, j = remap[a], remap[b]
            edge_set.add((min(i, j), max(i, j)))

        masks = [0] * len(raw)
        for i, j in edge_set:
            masks[i] |= 1 << j
            masks[j] |= 1 << i

        object.__setattr__(self, "vertices", self_vertices)
        object.__setattr__(self, "edges", frozenset(edge_set))
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "neighbor_masks", tuple(masks))
        object.__setattr__(self, "_index", {v: i for i, v in enumerate(self_vertices)})

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Graph is immutable")

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other: object) -> bool:
        # Structural equality; the family tag is provenance only.
        if not isinstance(other, Graph):
            return NotImplemented
        return self.vertices == other.vertices and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        tag = f", family={self.family}" if self.family else ""
        return f"Graph({len(self.vertices)} vertices, {len(self.edges)} edges{tag})"

    def index(self, vertex: Vertex) -> int:
        try:
            return self._index[tuple(vertex)]
        except KeyError:
            raise GraphError(f"vertex {vertex} not in graph") from None

    def neighborhood(self, v: int, closed: bool = False) -> frozenset[int]:
        """N(v) as a set of vertex indices; N[v] = N(v) | {v} if closed."""
        self._check_index(v)
        mask = self.neighbor_masks[v]
        out = {i for i in range(len(self.vertices)) if mask >> i & 1}
        if closed:
            out.add(v)
        return frozenset(out)

    def degree(self, v: int) -> int:
        self._check_index(v)
        return self.neighbor_masks[v].bit_count()

    def components(self) -> list[int]:
        """Connected components as vertex bitmasks, ordered by least vertex."""
        seen = 0
        out = []
        for start in range(len(self.vertices)):
            if seen >> start & 1:
                continue
            comp = 1 << start
            frontier = 1 << start
            while frontier:
                nxt = 0
                m = frontier
                while m:
                    v = (m & -m).bit_length() - 1
                    m &= m - 1
                    nxt |= self.neighbor_masks[v]
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            out.append(comp)
        return out

    def _check_index(self, v: int) -> None:
        if not (0 <= v < len(self.vertices)):
            raise GraphError(f"vertex index {v} out of range")


def build_gamma(n: int, k: int) -> Graph:
    """The n-by-k grid graph: nk vertices, edges at L1 distance 1."""
    if n < 1 or k < 1:
        raise GraphError(f"grid dimensions must be positive, got ({n}, {k})")
    vertices = [(x, y) for x in range(1, n + 1) for y in range(1, k + 1)]
    index = {v: i for i, v in enumerate(vertices)}
    edges = []
    for x, y in vertices:
        for w in ((x + 1, y), (x, y + 1)):
            if w in index:
                edges.append((index[(x, y)], index[w]))
    return Graph(vertices, edges, family=Family("gamma", n, k))


def build_family(f: Family) -> Graph:
    """Realize a Family as a graph (gamma, or gamma(n, 6) minus last-column vertices)."""
    if f.kind == "gamma":
        return build_gamma(f.n, f.k)
    g = build_gamma(f.n, 6)
    removed = [g.index((f.n, row)) for row in _FAMILY_REMOVED_ROWS[f.kind]]
    trimmed = delete_vertices(g, removed)
    return Graph(trimmed.vertices, _index_edges(trimmed), family=f)


def delete_vertices(g: Graph, s: Iterable[int]) -> Graph:
    """Induced subgraph on V - s; vertex order is preserved, g is unmodified."""
    drop = set(s)
    for v in drop:
        g._check_index(v)
    keep = [i for i in range(len(g.vertices)) if i not in drop]
    remap = {old: new for new, old in enumerate(keep)}
    vertices = [g.vertices[i] for i in keep]
    edges = [
        (remap[a], remap[b]) for a, b in g.edges if a in remap and b in remap
    ]
    return Graph(vertices, edges)


def neighborhood(g: Graph, v: int, closed: bool = False) -> frozenset[int]:
    return g.neighborhood(v, closed=closed)


def _index_edges(g: Graph) -> Iterator[tuple[int, int]]:
    return iter(sorted(g.edges))


def graph_to_json_dict(g: Graph) -> dict:
    """Serialize to the wire schema: n, k, family, vertices, 0-based edges."""
    xs = [x for x, _ in g.vertices]
    ys = [y for _, y in g.vertices]
    fam = g.family
    return {
        "n": fam.n if fam else (max(xs) if xs else 0),
        "k": fam.k if fam else (max(ys) if ys else 0),
        "family": fam.kind if fam else None,
        "vertices": [[x, y] for x, y in g.vertices],
        "edges": [[a, b] for a, b in sorted(g.edges)],
    }


def graph_from_json_dict(data: dict) -> Graph:
    """Deserialize the wire schema; vertex order is re-canonicalized."""
    try:
        vertices = [tuple(v) for v in data["vertices"]]
        edges = [tuple(e) for e in data["edges"]]
    except (KeyError, TypeError) as exc:
        raise GraphError(f"malformed graph JSON: {exc}") from exc
    family = None
    if data.get("family"):
        try:
            family = Family(data["family"], int(data.get("n", 1)), int(data.get("k", 6)))
        except GraphError:
            family = None
    return Graph(vertices, edges, family=family)
