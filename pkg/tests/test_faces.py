import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from indcomplex import (
    FaceBudgetExceeded,
    Family,
    build_family,
    build_gamma,
    count_faces,
    delete_vertices,
    deletion_graph,
    enumerate_faces,
    euler_from_fvector,
    f_vector,
    link_graph,
)
from indcomplex.faces import FVector, face_budget

from conftest import brute_force_independent_sets, disjoint_union, random_grid_subgraph


class TestEnumerateFaces:
    def test_p3_matches_brute_force(self):
        p3 = build_gamma(3, 1)
        faces = list(enumerate_faces(p3))
        # Frozen from the subset-checking oracle, in lex order.
        assert faces == [(), (0,), (0, 2), (1,), (2,)]
        assert faces == brute_force_independent_sets(p3)

    def test_k2(self):
        k2 = build_gamma(2, 1)
        assert list(enumerate_faces(k2)) == [(), (0,), (1,)]

    def test_edgeless_three_vertices_full_simplex(self):
        g = delete_vertices(build_gamma(3, 3), [1, 3, 4, 5, 7, 8])  # keep (1,1),(1,3),(3,1)
        assert not g.edges
        assert len(list(enumerate_faces(g))) == 8

    def test_lex_order_and_uniqueness(self):
        g = build_gamma(2, 3)
        faces = list(enumerate_faces(g))
        assert faces[0] == ()
        nonempty = faces[1:]
        assert nonempty == sorted(nonempty)
        assert len(set(faces)) == len(faces)

    @given(st.integers(0, 10_000))
    @settings(max_examples=30, deadline=None)
    def test_matches_brute_force_on_random_subgraphs(self, seed):
        import random

        g = random_grid_subgraph(random.Random(seed), max_n=2, max_vertices=8)
        assert list(enumerate_faces(g)) == brute_force_independent_sets(g)

    def test_budget_exceeded(self):
        g = build_gamma(3, 3)
        with pytest.raises(FaceBudgetExceeded):
            list(enumerate_faces(g, budget=5))

    def test_env_budget_override(self, monkeypatch):
        monkeypatch.setenv("INDCOMPLEX_FACE_BUDGET", "3")
        assert face_budget() == 3
        with pytest.raises(FaceBudgetExceeded):
            list(enumerate_faces(build_gamma(2, 2)))

    def test_component_size_guard(self):
        # A 42-vertex grid is one component above the exact-count cap.
        with pytest.raises(FaceBudgetExceeded):
            count_faces(build_gamma(7, 6))


class TestFVector:
    def test_p3(self):
        assert f_vector(build_gamma(3, 1)).counts == (3, 1)

    def test_k2(self):
        assert f_vector(build_gamma(2, 1)).counts == (2,)

    def test_p6(self):
        # Independent i-subsets of the 6-path: C(7-i, i).
        assert f_vector(build_gamma(1, 6)).counts == (6, 10, 4)

    def test_counts_validated(self):
        with pytest.raises(ValueError):
            FVector((1, -2))

    def test_count_faces_matches_enumeration(self):
        for n in (1, 2, 3):
            g = build_gamma(n, 4)
            assert count_faces(g) == len(list(enumerate_faces(g)))


class TestEuler:
    def test_p3(self):
        assert euler_from_fvector(f_vector(build_gamma(3, 1))) == 2

    def test_gamma_2x6(self):
        assert euler_from_fvector(f_vector(build_gamma(2, 6))) == 2

    def test_empty_graph(self):
        g = delete_vertices(build_gamma(1, 1), [0])
        assert euler_from_fvector(f_vector(g)) == 0

    @given(st.integers(0, 10_000))
    @settings(max_examples=20, deadline=None)
    def test_join_rule_on_disjoint_unions(self, seed):
        import random

        rng = random.Random(seed)
        g1 = random_grid_subgraph(rng, max_n=2, max_vertices=6)
        g2 = random_grid_subgraph(rng, max_n=2, max_vertices=6)
        g = disjoint_union(g1, g2)
        chi = euler_from_fvector(f_vector(g))
        chi1 = euler_from_fvector(f_vector(g1))
        chi2 = euler_from_fvector(f_vector(g2))
        assert 1 - chi == (1 - chi1) * (1 - chi2)
        # Face counts convolve (empty faces included).
        fv, fv1, fv2 = (_padded(x) for x in (g, g1, g2))
        conv = [0] * (len(fv1) + len(fv2) - 1)
        for i, a in enumerate(fv1):
            for j, b in enumerate(fv2):
                conv[i + j] += a * b
        assert fv == conv


def _padded(g):
    return [1, *f_vector(g).counts]


class TestLinkDeletion:
    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_b_minus_v_is_y(self, n):
        g = build_family(Family("b", n))
        assert deletion_graph(g, g.index((n, 3))) == build_family(Family("y", n))

    @pytest.mark.parametrize("n", [1, 2, 3])
    def test_a_minus_v_is_x(self, n):
        g = build_family(Family("a", n))
        assert deletion_graph(g, g.index((n, 3))) == build_family(Family("x", n))

    def test_link_of_isolated_vertex(self):
        g = build_family(Family("x", 1))
        assert len(link_graph(g, 0).vertices) == len(g.vertices) - 1

    def test_faces_monotone_under_induced_subgraph(self):
        g = build_gamma(2, 4)
        sub = delete_vertices(g, [0, 5])
        sub_faces = {
            tuple(g.index(sub.vertices[i]) for i in face)
            for face in enumerate_faces(sub)
        }
        assert sub_faces <= set(enumerate_faces(g))
