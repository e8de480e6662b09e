"""Acceptance criteria, one test each, each printing a PASS/FAIL line.

Run on its own with ``pytest tests/test_acceptance.py -v`` or as a script.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from typing import Callable

import pytest

from totaldom import verify as ver
from totaldom.domination import gamma_t, gamma_t_oracle
from totaldom.families import (
    K4,
    K4_MINUS_E,
    extremal_orientation_for,
    fig8,
    fig9,
    generate_f2,
    paw,
    petersen,
    recognize_theorem_class,
)
from totaldom.graph import connected_class_c, enumerate_graphs, is_cycle, is_isomorphic, parse_graph6
from totaldom.orientations import (
    domt_range,
    enumerate_valid_orientations,
    exists_extremal_orientation,
    verify_extremal_necessary_conditions,
)

from _support import random_connected_class_c, random_f1, random_f2, random_f3, random_valid_orientation

SAMPLERS = {"F1": random_f1, "F2": random_f2, "F3": random_f3}


@dataclass
class Outcome:
    ok: bool
    detail: str


def criterion_main_characterisation() -> Outcome:
    start = time.perf_counter()
    report = ver.verify_theorem_main(ver.Enumeration(max_n=6))
    elapsed = time.perf_counter() - start
    n4 = [parse_graph6(r.graph6) for r in report.positives if r.n == 4]
    n4_ok = len(n4) == 3 and all(any(is_isomorphic(a, b) for b in n4) for a in (paw(), K4_MINUS_E, K4))
    ok = not report.mismatches and n4_ok and elapsed <= 600
    return Outcome(ok, f"{report.graph_count} graphs, {len(report.positives)} positives, "
                       f"{len(report.mismatches)} mismatches, n=4 positives ok={n4_ok}, {elapsed:.1f}s")


def criterion_min_orientation_characterisation() -> Outcome:
    report = ver.verify_result1(ver.Enumeration(max_n=6))
    return Outcome(not report.mismatches, f"{report.graph_count} graphs, {len(report.mismatches)} mismatches")


def criterion_cycle_union_characterisation() -> Outcome:
    report = ver.verify_result2(ver.Enumeration(max_n=6))
    return Outcome(not report.mismatches, f"{report.graph_count} graphs, {len(report.mismatches)} mismatches")


def criterion_component_additivity() -> Outcome:
    report = ver.verify_concomp(100, 10, seed=0)
    ok = report.graph_count == 100 and not report.mismatches and max(r.n for r in report.records) <= 10
    return Outcome(ok, f"{report.graph_count} unions, {len(report.mismatches)} mismatches")


def criterion_fig8_gap() -> Outcome:
    start = time.perf_counter()
    _, named = fig8()
    left, right = gamma_t(named["left"]), gamma_t(named["right"])
    elapsed = time.perf_counter() - start
    return Outcome(left == 11 and right == 3 and elapsed <= 1.0, f"left={left} right={right} in {elapsed:.3f}s")


def criterion_fig9_gap() -> Outcome:
    rows = []
    for k in (4, 5, 6):
        g = fig9(k)[0]
        r = domt_range(g)
        rows.append((k, r.lower, r.upper, r.stats.orientations_examined <= 2 ** (2 * k - 2)))
    ok = all(lo == 3 and hi == k and within for k, lo, hi, within in rows)
    return Outcome(ok, ", ".join(f"k={k}: ({lo}, {hi})" for k, lo, hi, _ in rows))


def criterion_universal_lower_bound() -> Outcome:
    # the solver itself asserts gamma_t >= 3 on every call; this sweeps dom_t explicitly
    lows = []
    for n in range(3, 7):
        for g in enumerate_graphs(n, connected_class_c):
            lows.append(domt_range(g).lower)
    for k in range(3, 7):
        lows.append(domt_range(fig9(k)[0]).lower)
    lows.append(domt_range(petersen()).lower)
    return Outcome(min(lows) >= 3, f"{len(lows)} graphs, smallest dom_t = {min(lows)}")


def criterion_edge_bound() -> Outcome:
    worst = 0
    count = 0
    for i, (family, sample) in enumerate(sorted(SAMPLERS.items())):
        rng = random.Random(100 + i)
        for _ in range(200):
            g, _ = sample(rng, 16)
            assert g.n <= 16
            worst = max(worst, g.m - (2 * g.n - 2))
            count += 1
    tight = []
    for lengths in ([3], [3, 4, 4], [5, 5, 5], [3, 3, 3, 3, 3]):
        g, _ = generate_f2(lengths, list(lengths))
        tight.append(g.m == 2 * g.n - 2)
    ok = worst <= 0 and all(tight)
    return Outcome(ok, f"{count} members, max |E|-(2n-2) = {worst}, full-hub equality {sum(tight)}/{len(tight)}")


def criterion_extremal_invariants() -> Outcome:
    found = []
    # every valid orientation, n <= 6
    for n in range(3, 7):
        for g in enumerate_graphs(n, connected_class_c):
            found.extend(d for d in enumerate_valid_orientations(g) if gamma_t(d) == n - 1)
    # search results for every connected class-C graph on 7 vertices
    for g in enumerate_graphs(7, connected_class_c):
        if not is_cycle(g):
            d, _ = exists_extremal_orientation(g)
            if d is not None:
                found.append(d)
    # n = 8: random graphs and family constructions
    rng = random.Random(8)
    for _ in range(150):
        g = random_connected_class_c(rng, 8, 0.3)
        if not is_cycle(g):
            d, _ = exists_extremal_orientation(g)
            if d is not None:
                found.append(d)
    for sample in SAMPLERS.values():
        for _ in range(50):
            g, w = sample(rng, 8)
            found.append(extremal_orientation_for(w))
    bad = [d for d in found if gamma_t(d) != d.n - 1 or verify_extremal_necessary_conditions(d)]
    return Outcome(not bad, f"{len(found)} extremal orientations, {len(bad)} violations")


def criterion_oracle_equivalence() -> Outcome:
    exhaustive = 0
    disagreements = 0
    for n in range(3, 6):
        for g in enumerate_graphs(n, connected_class_c):
            for d in enumerate_valid_orientations(g):
                exhaustive += 1
                disagreements += gamma_t(d) != gamma_t_oracle(d)
    rng = random.Random(10)
    for _ in range(500):
        g = random_connected_class_c(rng, rng.randint(6, 8))
        d = random_valid_orientation(rng, g)
        disagreements += gamma_t(d) != gamma_t_oracle(d)
    return Outcome(disagreements == 0, f"{exhaustive} exhaustive + 500 random, {disagreements} disagreements")


def criterion_constructor_correctness() -> Outcome:
    start = time.perf_counter()
    failures = 0
    for i, (family, sample) in enumerate(sorted(SAMPLERS.items())):
        rng = random.Random(200 + i)
        for _ in range(200):
            g, w = sample(rng, 16)
            failures += gamma_t(extremal_orientation_for(w)) != g.n - 1
    elapsed = time.perf_counter() - start
    return Outcome(failures == 0 and elapsed <= 300, f"600 members, {failures} failures, {elapsed:.1f}s")


def criterion_petersen_control() -> Outcome:
    g = petersen()
    witness = recognize_theorem_class(g)
    r = domt_range(g)
    full = r.stats.orientations_examined
    ok = witness is None and r.upper < g.n - 1
    return Outcome(ok, f"recognizer={'none' if witness is None else witness.family}, DOM_t={r.upper} "
                       f"over {full} valid of 2^15 orientations")


CRITERIA: list[tuple[str, Callable[[], Outcome]]] = [
    ("1 main characterisation, n <= 6", criterion_main_characterisation),
    ("2 dom_t = n-1 characterisation, n <= 6", criterion_min_orientation_characterisation),
    ("3 DOM_t = n iff union of cycles, n <= 6", criterion_cycle_union_characterisation),
    ("4 DOM_t additive over components", criterion_component_additivity),
    ("5 twelve-vertex gap instance", criterion_fig8_gap),
    ("6 fig9(k) gap, k = 4..6", criterion_fig9_gap),
    ("7 dom_t >= 3 everywhere", criterion_universal_lower_bound),
    ("8 |E| <= 2n-2 with equality", criterion_edge_bound),
    ("9 extremal orientations pass necessary conditions", criterion_extremal_invariants),
    ("10 solver matches subset oracle", criterion_oracle_equivalence),
    ("11 constructed orientations are extremal", criterion_constructor_correctness),
    ("12 Petersen negative control", criterion_petersen_control),
]


def _report(name: str, outcome: Outcome) -> str:
    return f"[{'PASS' if outcome.ok else 'FAIL'}] {name}: {outcome.detail}"


@pytest.mark.parametrize("name, check", CRITERIA, ids=[c[0].split()[0] for c in CRITERIA])
def test_criterion(name, check, capsys):
    outcome = check()
    with capsys.disabled():
        print("\n" + _report(name, outcome))
    assert outcome.ok, outcome.detail


if __name__ == "__main__":
    results = [(name, check()) for name, check in CRITERIA]
    for name, outcome in results:
        print(_report(name, outcome))
    raise SystemExit(0 if all(o.ok for _, o in results) else 1)
