import itertools
import random

import pytest

from indcomplex import Graph, build_gamma, delete_vertices


def brute_force_independent_sets(g: Graph) -> list[tuple[int, ...]]:
    """Oracle: check every vertex subset directly against the edge set."""
    out = []
    n = len(g.vertices)
    for size in range(n + 1):
        for subset in itertools.combinations(range(n), size):
            if all((a, b) not in g.edges for a, b in itertools.combinations(subset, 2)):
                out.append(subset)
    return sorted(out)


def random_grid_subgraph(rng: random.Random, max_n: int = 4, max_vertices: int = 20) -> Graph:
    n = rng.randint(1, max_n)
    g = build_gamma(n, 6)
    size = rng.randint(0, min(max_vertices, len(g)))
    keep = set(rng.sample(range(len(g)), size))
    return delete_vertices(g, set(range(len(g))) - keep)


def shift_columns(g: Graph, dx: int) -> list[tuple[int, int]]:
    return [(x + dx, y) for x, y in g.vertices]


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union realized by shifting g2 past g1 in the x direction."""
    dx = (max((x for x, _ in g1.vertices), default=0)
          - min((x for x, _ in g2.vertices), default=0) + 1)
    verts = list(g1.vertices) + shift_columns(g2, dx)
    n1 = len(g1.vertices)
    edges = sorted(g1.edges) + [(a + n1, b + n1) for a, b in sorted(g2.edges)]
    return Graph(verts, edges)


@pytest.fixture
def rng():
    return random.Random(987123)
