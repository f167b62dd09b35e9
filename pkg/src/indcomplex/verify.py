"""Cross-oracle verification suites.

Each suite compares independent computations of the same quantity (closed
forms, fold-reduced homology, brute-force homology, transfer-matrix Euler
characteristics) and assembles a deterministic report.  Cases skipped by
the face budget are reported, never silently dropped.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .faces import FaceBudgetExceeded
from .graphs import Family, build_family, build_gamma, delete_vertices
from .homology import betti_of_family, betti_of_graph, betti_over_field
from .predictor import chi_of_wedge, expected_f6, predict_family, predict_gamma
from .transfer import euler_sweep

DEFAULT_SEED = 1729

FAMILY_KEYS = ("gamma", "x", "y", "a", "b")


@dataclass(frozen=True)
class Case:
    key: str
    expected: object
    actual: object
    passed: bool
    skipped: str | None = None

    def to_json_dict(self) -> dict:
        out = {
            "key": self.key,
            "expected": self.expected,
            "actual": self.actual,
            "passed": self.passed,
        }
        if self.skipped:
            out["skipped"] = self.skipped
        return out


@dataclass
class VerificationReport:
    suite: str
    cases: list[Case] = field(default_factory=list)
    runtime: float = 0.0

    @property
    def budget_skips(self) -> list[str]:
        return [c.key for c in self.cases if c.skipped]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.cases if not c.skipped)

    def to_json_dict(self) -> dict:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "runtime_seconds": round(self.runtime, 3),
            "budget_skips": self.budget_skips,
            "cases": [c.to_json_dict() for c in sorted(self.cases, key=lambda c: c.key)],
        }


def _finish(report: VerificationReport, started: float) -> VerificationReport:
    report.cases.sort(key=lambda c: c.key)
    report.runtime = time.perf_counter() - started
    return report


def _betti_dict(profile) -> dict[str, int]:
    return {str(d): b for d, b in sorted(profile.reduced_betti.items())}


def _wedge_dict(wedge) -> dict[str, int]:
    return {str(d): m for d, m in sorted(wedge.betti_numbers().items())}


def _add_shifted(*terms: tuple[dict[int, int], int, int]) -> dict[str, int]:
    """Sum of Betti maps, each shifted up and scaled: (betti, shift, scale)."""
    acc: dict[int, int] = {}
    for betti, shift, scale in terms:
        for d, b in betti.items():
            acc[d + shift] = acc.get(d + shift, 0) + scale * b
    return {str(d): b for d, b in sorted(acc.items()) if b}


def verify_euler_table(max_n: int = 56) -> VerificationReport:
    """Three-way chi agreement: tabulated values, transfer matrix, predictor."""
    started = time.perf_counter()
    report = VerificationReport("euler_table")
    transfer = euler_sweep(6, max_n)
    for n in range(1, max_n + 1):
        expected = expected_f6(n)
        actual = {
            "transfer": transfer[n - 1],
            "predictor": chi_of_wedge(predict_gamma(n)),
        }
        passed = actual["transfer"] == expected == actual["predictor"]
        report.cases.append(Case(f"n={n:03d}", expected, actual, passed))
    return _finish(report, started)


def verify_small_homology(
    max_n: int = 4, coeff: str = "gf2", suite_name: str | None = None
) -> VerificationReport:
    """Fold-reduced homology of every family against the closed forms."""
    started = time.perf_counter()
    report = VerificationReport(suite_name or f"small_homology_{coeff}")
    for kind in FAMILY_KEYS:
        for n in range(1, max_n + 1):
            key = f"{kind}:n={n}:{coeff}"
            fam = Family(kind, n)
            expected = _wedge_dict(predict_family(fam))
            try:
                profile = betti_of_family(fam, coeff=coeff)
            except FaceBudgetExceeded as exc:
                report.cases.append(Case(key, expected, None, True, skipped=str(exc)))
                continue
            actual = _betti_dict(profile)
            passed = actual == expected
            if coeff == "int":
                actual = {"betti": actual, "torsion": list(profile.torsion)}
                expected = {"betti": expected, "torsion": []}
                passed = passed and not profile.torsion
            report.cases.append(Case(key, expected, actual, passed))
    return _finish(report, started)


def verify_splittings(max_n: int = 5) -> VerificationReport:
    """Betti additivity of the wedge splittings and the deleted-neighborhood
    suspension identities, over GF(2)."""
    started = time.perf_counter()
    report = VerificationReport("splittings")

    def betti_fam(kind: str, n: int) -> dict[int, int]:
        return betti_of_family(Family(kind, n), coeff="gf2").reduced_betti

    def add_case(key: str, expected, actual) -> None:
        report.cases.append(Case(key, expected, actual, expected == actual))

    for n in range(4, max_n + 1):
        # a(n) = x(n) + S^4 b(n-3)
        add_case(
            f"a_split:n={n}",
            _add_shifted((betti_fam("x", n), 0, 1), (betti_fam("b", n - 3), 4, 1)),
            _add_shifted((betti_fam("a", n), 0, 1)),
        )
        # a(n) - N[v_n] vs S^3 b(n-3)
        g = build_family(Family("a", n))
        link = delete_vertices(g, g.neighborhood(g.index((n, 3)), closed=True))
        add_case(
            f"a_deleted_nbhd:n={n}",
            _add_shifted((betti_fam("b", n - 3), 3, 1)),
            _add_shifted((betti_of_graph(link, coeff="gf2").reduced_betti, 0, 1)),
        )
    for n in range(5, max_n + 1):
        # b(n) = y(n) + S^6 a(n-4)
        add_case(
            f"b_split:n={n}",
            _add_shifted((betti_fam("y", n), 0, 1), (betti_fam("a", n - 4), 6, 1)),
            _add_shifted((betti_fam("b", n), 0, 1)),
        )
        # gamma(n) = y(n) + 2 * S^6 a(n-4)
        add_case(
            f"gamma_split:n={n}",
            _add_shifted((betti_fam("y", n), 0, 1), (betti_fam("a", n - 4), 6, 2)),
            _add_shifted((betti_fam("gamma", n), 0, 1)),
        )
        # b(n) - N[v_n] vs S^5 a(n-4)
        g = build_family(Family("b", n))
        link = delete_vertices(g, g.neighborhood(g.index((n, 3)), closed=True))
        add_case(
            f"b_deleted_nbhd:n={n}",
            _add_shifted((betti_fam("a", n - 4), 5, 1)),
            _add_shifted((betti_of_graph(link, coeff="gf2").reduced_betti, 0, 1)),
        )
    return _finish(report, started)


def verify_fold_soundness(
    samples: int = 200, seed: int = DEFAULT_SEED, max_vertices: int = 20
) -> VerificationReport:
    """Betti numbers before and after fold reduction agree on a seeded corpus
    of random induced subgraphs of small grids."""
    started = time.perf_counter()
    report = VerificationReport("fold_soundness")
    rng = random.Random(seed)
    for i in range(samples):
        n = rng.randint(1, 4)
        g = build_gamma(n, 6)
        size = rng.randint(0, min(max_vertices, len(g)))
        keep = sorted(rng.sample(range(len(g)), size))
        sub = delete_vertices(g, set(range(len(g))) - set(keep))
        direct = betti_over_field(sub, 2)
        reduced = betti_of_graph(sub, coeff="gf2", use_reduction=True)
        key = f"sample={i:03d}:n={n}:size={size}"
        report.cases.append(
            Case(
                key,
                _betti_dict(direct),
                _betti_dict(reduced),
                direct.reduced_betti == reduced.reduced_betti,
            )
        )
    return _finish(report, started)


def verify_deep_homology() -> VerificationReport:
    """Stretch check: every family at n = 5 over GF(2) against the closed forms."""
    return verify_small_homology(max_n=5, coeff="gf2", suite_name="deep_homology")


SUITES = {
    "euler_table": verify_euler_table,
    "small_homology_gf2": lambda: verify_small_homology(coeff="gf2"),
    "small_homology_int": lambda: verify_small_homology(coeff="int"),
    "splittings": verify_splittings,
    "fold_soundness": verify_fold_soundness,
    "deep_homology": verify_deep_homology,
}


def run_all(deep: bool = False, seed: int = DEFAULT_SEED) -> list[VerificationReport]:
    reports = [
        verify_euler_table(),
        verify_small_homology(coeff="gf2"),
        verify_small_homology(coeff="int"),
        verify_splittings(),
        verify_fold_soundness(seed=seed),
    ]
    if deep:
        reports.append(verify_deep_homology())
    return reports
