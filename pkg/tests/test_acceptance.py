"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -s`` to see the per-criterion
report lines as they complete.
"""

import json
import random
import subprocess
import sys
import time
from collections import Counter
from contextlib import contextmanager
from fractions import Fraction
from itertools import combinations

from gaugedgw.algebra import MultiPoly, RationalFunction, normal_form
from gaugedgw.cli import COMMANDS
from gaugedgw.curves import (
    AFFINE,
    PROJECTIVE,
    EdgeParams,
    check_balanced,
    enumerate_types,
    stratum_dimension,
)
from gaugedgw.mundet import GaugedMapData, mundet_classify, quot_moduli_dimension
from gaugedgw.potentials import (
    FramedSheafSpec,
    LinearActionSpec,
    crepancy_check,
    framed_sheaf_fundamental_solution,
    k_euler_class_expansion,
    localized_potential,
    qde_residual_cohomological,
    qde_residual_ktheoretic,
    qh_presentation,
    qk_presentation,
    reduce_k_theory_class,
)
from gaugedgw.stability import Stability, WeightSystem, classify, kn_strata

HALF = Fraction(1, 2)


@contextmanager
def report(label):
    started = time.time()
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {label}: FAIL")
        raise
    print(f"ACCEPTANCE {label}: PASS ({time.time() - started:.1f}s)")


# -- criterion 1 ---------------------------------------------------------------


def _oracle_candidates(points, rank):
    out = set()
    for i in range(rank):
        e = [0] * rank
        e[i] = 1
        out.add(tuple(e))
        out.add(tuple(-x for x in e))
    if rank == 2:
        for p, q in combinations(points, 2):
            d = (q[0] - p[0], q[1] - p[1])
            if d != (0, 0):
                out.add((-d[1], d[0]))
                out.add((d[1], -d[0]))
    return out


def _oracle_status(points):
    """Brute-force verdict from signs of the Hilbert-Mumford weight over the
    pair-perpendicular and basis candidate directions (points are mu_i -
    theta)."""
    rank = len(points[0])
    values = {
        lam: min(-sum(p * l for p, l in zip(pt, lam)) for pt in points)
        for lam in _oracle_candidates(points, rank)
    }
    top = max(values.values())
    if top > 0:
        return Stability.UNSTABLE
    if top < 0:
        return Stability.STABLE
    for lam, value in values.items():
        if value == 0 and values.get(tuple(-x for x in lam)) != 0:
            return Stability.SEMISTABLE_NOT_POLYSTABLE
    return Stability.POLYSTABLE_NOT_STABLE


def test_criterion_01_torus_lemma_oracle_equivalence():
    # classify(ws, s) depends only on the set of support weights and theta, so
    # the family "all weight systems with r in {1,2}, k <= 4, entries -2..2,
    # all non-empty supports" is covered exactly by the distinct point sets of
    # size <= 4, paired with every theta
    with report("1 torus-lemma oracle equivalence"):
        started = time.time()
        checked = 0
        for rank in (1, 2):
            if rank == 1:
                grid = [(a,) for a in range(-2, 3)]
                thetas = [(Fraction(t, 2),) for t in (-1, 0, 1)]
            else:
                grid = [(a, b) for a in range(-2, 3) for b in range(-2, 3)]
                thetas = [
                    (Fraction(s, 2), Fraction(t, 2))
                    for s in (-1, 0, 1)
                    for t in (-1, 0, 1)
                ]
            for size in range(1, 5):
                for weights in combinations(grid, size):
                    for theta in thetas:
                        ws = WeightSystem.create(rank, weights, theta)
                        support = range(1, size + 1)
                        got = classify(ws, support).status
                        # doubling clears the half-integer shifts and cannot
                        # change any Hilbert-Mumford sign
                        shifted = [
                            tuple(int(2 * (x - t)) for x, t in zip(w, theta))
                            for w in weights
                        ]
                        assert got == _oracle_status(shifted), (weights, theta)
                        checked += 1
        elapsed = time.time() - started
        assert checked == 90 + 137475  # 30 r=1 point sets x 3 thetas; 15275 x 9
        assert elapsed < 60.0, f"took {elapsed:.1f}s"


# -- criterion 2 ---------------------------------------------------------------


def test_criterion_02_kirwan_ness_coverage():
    with report("2 Kirwan-Ness coverage at rank one"):
        from itertools import combinations_with_replacement

        started = time.time()
        values = list(range(-2, 3))
        thetas = [Fraction(t, 2) for t in (-1, 0, 1)]
        for k in range(1, 5):
            for weights in combinations_with_replacement(values, k):
                for theta in thetas:
                    ws = WeightSystem.create(1, [[w] for w in weights], [theta])
                    strata = kn_strata(ws)
                    lams = [s.lam for s in strata]
                    assert len(lams) == len(set(lams))
                    for size in range(1, k + 1):
                        for support in combinations(range(1, k + 1), size):
                            unstable = (
                                classify(ws, support).status is Stability.UNSTABLE
                            )
                            hits = sum(
                                1 for s in strata if s.contains(ws, support)
                            )
                            assert hits == (1 if unstable else 0), (
                                weights,
                                theta,
                                support,
                            )
        elapsed = time.time() - started
        assert elapsed < 30.0, f"took {elapsed:.1f}s"


# -- criterion 3 ---------------------------------------------------------------


def test_criterion_03_mundet_shift_invariance():
    with report("3 Mundet shift invariance on 1000 random instances"):
        rng = random.Random(2024)
        metrics = {1: [None, [[2]]], 2: [None, [[2, 1], [1, 2]]]}
        for _ in range(1000):
            rank = rng.choice((1, 2))
            k = rng.randint(1, 4)
            weights = [
                tuple(rng.randint(-2, 2) for _ in range(rank)) for _ in range(k)
            ]
            theta = tuple(Fraction(rng.randint(-2, 2), 2) for _ in range(rank))
            ws = WeightSystem.create(rank, weights, theta, rng.choice(metrics[rank]))
            support = [i for i in range(1, k + 1) if rng.random() < 0.7]
            dp = tuple(rng.randint(-2, 2) for _ in range(rank))
            c = tuple(rng.randint(-2, 2) for _ in range(rank))
            base = mundet_classify(GaugedMapData.create(ws, dp, support)).status
            c_dual = ws.coweight_dual(c)
            shifted_ws = WeightSystem.create(
                rank,
                weights,
                tuple(t - d for t, d in zip(theta, c_dual)),
                ws.inner_product,
            )
            shifted = mundet_classify(
                GaugedMapData.create(
                    shifted_ws, tuple(a + b for a, b in zip(dp, c)), support
                )
            ).status
            assert base == shifted


# -- criterion 4 ---------------------------------------------------------------


def test_criterion_04_quot_dimension():
    with report("4 quot-compactification dimensions"):
        assert quot_moduli_dimension(2, 1, 0) == 3
        for k in range(1, 6):
            for dp in range(-4, 5):
                for du in range(-4, 5):
                    if 0 <= dp + du <= 4:
                        assert (
                            quot_moduli_dimension(k, dp, du)
                            == k * (dp + du + 1) - 1
                        )


# -- criterion 5 ---------------------------------------------------------------


def test_criterion_05_scaled_curve_census():
    with report("5 scaled-curve census"):
        projective2 = enumerate_types(2, PROJECTIVE)
        assert len(projective2) == 6
        assert Counter(stratum_dimension(t) for t in projective2) == Counter(
            {3: 1, 2: 3, 1: 2}
        )
        affine2 = enumerate_types(2, AFFINE)
        assert len(affine2) == 3
        assert Counter(stratum_dimension(t) for t in affine2) == Counter(
            {1: 1, 0: 2}
        )
        assert len(enumerate_types(0, PROJECTIVE)) == 2


# -- criterion 6 ---------------------------------------------------------------


def _path_product_oracle(t, table):
    """Literal signed product over the tree path between every pair of
    transition vertices, positive sign on edges oriented toward the root."""

    def root_path(v):
        path = []
        while t.parents[v] is not None:
            path.append(v)
            v = t.parents[v]
        return path

    transitions = t.transition_vertices()
    for a, b in combinations(transitions, 2):
        up_a, up_b = root_path(a), root_path(b)
        common = set(up_a) & set(up_b)
        product = Fraction(1)
        for v in up_a:
            if v in common:
                break
            product *= table[v]
        for v in up_b:
            if v in common:
                break
            product /= table[v]
        if product != 1:
            return False
    return True


def test_criterion_06_balanced_products():
    with report("6 balanced parameters vs path-product oracle"):
        rng = random.Random(99)
        pool = [
            t
            for n, mode in [(3, PROJECTIVE), (4, PROJECTIVE), (3, AFFINE), (4, AFFINE)]
            for t in enumerate_types(n, mode)
            if len(t.labels) > 1
        ]
        multi = [t for t in pool if len(t.transition_vertices()) >= 2]
        assert multi
        for i in range(1000):
            t = rng.choice(pool if i % 3 else multi)
            table = {
                v: Fraction(rng.randint(1, 4), rng.randint(1, 4))
                for v in range(1, len(t.labels))
            }
            if rng.random() < 0.5 and len(t.transition_vertices()) >= 2:
                # force balance by aligning every transition's root product
                target = Fraction(rng.randint(1, 5), rng.randint(1, 3))
                for v in t.transition_vertices():
                    walk, product = v, Fraction(1)
                    while t.parents[walk] is not None:
                        product *= table[walk]
                        walk = t.parents[walk]
                    table[v] = table[v] * target / product
            params = EdgeParams.create(table)
            assert check_balanced(t, params) == _path_product_oracle(t, table)


# -- criterion 7 ---------------------------------------------------------------


def test_criterion_07_qde_residuals():
    with report("7 QDE residuals vanish identically"):
        started = time.time()
        for k in range(1, 6):
            for trunc in range(1, 7):
                assert qde_residual_cohomological(k, trunc).is_zero()
                assert qde_residual_ktheoretic(k, trunc).is_zero()
        elapsed = time.time() - started
        assert elapsed < 120.0, f"took {elapsed:.1f}s"


# -- criterion 8 ---------------------------------------------------------------


def test_criterion_08_presentations():
    with report("8 quantum presentations reduce their generators"):
        for k in range(2, 7):
            qh = qh_presentation(k)
            beta_k = MultiPoly(("beta", "q"), {(k, 0): 1})
            q_mono = MultiPoly(("beta", "q"), {(0, 1): 1})
            assert normal_form(beta_k, qh.presentation) == q_mono
            qk = qk_presentation(k)
            assert reduce_k_theory_class(k_euler_class_expansion(k), qk) == q_mono


# -- criterion 9 ---------------------------------------------------------------


def test_criterion_09_localized_potential_recursion():
    with report("9 localized-potential first-order recursion"):
        zeta = MultiPoly.variable("zeta")
        for k in (1, 2, 3):
            spec = LinearActionSpec.create(1, [[1]] * k, truncation=6)
            series = localized_potential(spec)
            for d in range(1, 7):
                step = RationalFunction.constant(1)
                for j in range(1, k + 1):
                    xinv = MultiPoly.variable("Xinv" if k == 1 else f"Xinv{j}")
                    step = step * RationalFunction(
                        MultiPoly.constant(1) - xinv * zeta**d
                    )
                assert series.coefficient((d,)) * step == series.coefficient((d - 1,))


# -- criterion 10 --------------------------------------------------------------


def test_criterion_10_framed_sheaf_two_path_agreement():
    with report("10 framed-sheaf symbolic vs specialized agreement"):
        rng = random.Random(7)
        cases = [(k, r, 2) for k in (1, 2) for r in (1, 2)]
        symbolic = {
            (k, r, trunc): framed_sheaf_fundamental_solution(
                FramedSheafSpec.create(k, r, trunc)
            )
            for k, r, trunc in cases
        }
        points_checked = 0
        while points_checked < 20:
            point = {
                "xi1": Fraction(rng.randint(1, 9), 3),
                "xi2": Fraction(rng.randint(1, 9), 5),
                "zeta": Fraction(rng.randint(1, 4)),
            }
            for i in (1, 2):
                point[f"theta{i}"] = Fraction(rng.randint(1, 13), 7)
            if point["theta1"] == point["theta2"]:
                continue
            try:
                for k, r, trunc in cases:
                    spec = framed_sheaf_fundamental_solution(
                        FramedSheafSpec.create(k, r, trunc, point)
                    )
                    for d in range(1, trunc + 1):
                        sym_value = symbolic[k, r, trunc].coefficient((d,)).evaluate(
                            point
                        )
                        assert spec.coefficient((d,)) == RationalFunction.constant(
                            sym_value
                        )
            except ZeroDivisionError:
                continue
            points_checked += 1


# -- criterion 11 --------------------------------------------------------------


def test_criterion_11_crepancy():
    with report("11 crepancy of the flop weights"):
        assert crepancy_check([0, 1, 1, -1, -1]).crepant is True


# -- criterion 12 --------------------------------------------------------------

DETERMINISM_ARGV = [
    ["curves", "enumerate", "--n", "2", "--mode", "projective"],
    ["curves", "divisors", "--n", "2", "--mode", "affine", "--output", "json"],
    ["qde", "check", "--k", "3", "--trunc", "4"],
    ["potential", "localized", "--weights", "1,1", "--trunc", "3"],
    ["potential", "jframed", "--k", "2", "--r", "1", "--trunc", "1",
     "--specialize", "default", "--output", "json"],
    ["presentation", "projective", "--k", "4", "--ktheory"],
    ["age", "compute", "--r", "5", "--exponents", "1,2,3"],
    ["wallcross", "crepancy", "--weights", "0,1,1,-1,-1", "--output", "json"],
]


def _invoke(argv, hash_seed):
    import os

    env = dict(os.environ)
    env["PYTHONHASHSEED"] = hash_seed
    proc = subprocess.run(
        [sys.executable, "-m", "gaugedgw", *argv],
        capture_output=True,
        env=env,
    )
    return proc.returncode, proc.stdout


def test_criterion_12_cli_determinism(tmp_path):
    with report("12 CLI byte determinism"):
        for argv in DETERMINISM_ARGV:
            runs = [_invoke(argv, seed) for seed in ("0", "17", "42")]
            assert all(code == 0 for code, _ in runs), argv
            assert runs[0][1] == runs[1][1] == runs[2][1], argv

        # one job per command so the batch determinism check spans the whole
        # command surface
        ws_doc = {"rank": 1, "weights": [[0], [1], [1], [-1], [-1]], "theta": ["1/2"]}
        jobs = [
            {"command": "curves.enumerate", "payload": {"n": n, "mode": mode}}
            for n in (1, 2) for mode in ("projective", "affine")
        ]
        jobs += [
            {"command": "stability.classify",
             "payload": {"weight_system": ws_doc, "support": [1, 4]},
             "output": "json"},
            {"command": "stability.strata", "payload": {"weight_system": ws_doc},
             "output": "json"},
            {"command": "mundet.check",
             "payload": {"weight_system": {"rank": 1, "weights": [[0], [1]]},
                         "bundle_degree": [0], "support": [1, 2]}},
            {"command": "mundet.quotdim", "payload": {"k": 3, "dp": 1, "du": 1}},
            {"command": "curves.balanced",
             "payload": {"type": {"mode": "projective",
                                  "labels": ["infinite_root", "transition", "transition"],
                                  "parents": [None, 0, 0],
                                  "markings": {"1": 1, "2": 2}},
                         "params": {"1": "2/3", "2": "2/3"}}},
            {"command": "curves.divisors", "payload": {"n": 2, "mode": "projective"}},
            {"command": "potential.localized", "payload": {"weights": [1], "trunc": 4}},
            {"command": "potential.jframed",
             "payload": {"k": 2, "r": 2, "trunc": 2, "specialize": "default"},
             "output": "json"},
            {"command": "potential.delta", "payload": {"m": -2}},
            {"command": "qde.check", "payload": {"k": 2, "trunc": 4}},
            {"command": "qde.check", "payload": {"k": 2, "trunc": 4, "ktheory": True}},
            {"command": "presentation.projective", "payload": {"k": 5, "ktheory": True}},
            {"command": "presentation.toric",
             "payload": {"rank": 1, "weights": [1, 1, -1], "generators": [[1]]},
             "output": "json"},
            {"command": "age.compute", "payload": {"order": 7, "exponents": [1, 2, 3]}},
            {"command": "wallcross.crepancy", "payload": {"weights": [2, -1, -1]}},
        ]
        assert {j["command"] for j in jobs} == set(COMMANDS)
        path = tmp_path / "jobs.json"
        path.write_text(json.dumps(jobs))
        single = [
            _invoke(["batch", "--input", str(path), "--jobs", "1"], seed)
            for seed in ("0", "23", "99")
        ]
        wide = _invoke(["batch", "--input", str(path), "--jobs", "8"], "0")
        assert all(code == 0 for code, _ in single)
        assert wide[0] == 0
        assert single[0][1] == single[1][1] == single[2][1] == wide[1]
