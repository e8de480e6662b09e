"""Exhaustive checks of the characterisation results against brute force.

Each pipeline turns a graph source into :class:`VerificationRecord` objects and
folds them into a :class:`VerificationReport`. Records are emitted in source
order whatever the worker count, so reports are reproducible.
"""

from __future__ import annotations

import csv
import io
import json
import logging
import random
import time
from collections import deque
import warnings
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import partial
from pathlib import Path
from typing import Callable, Iterable, Iterator, Sequence, Union

from .domination import gamma_t
from .families import (
    extremal_orientation_for,
    fig8,
    fig9,
    recognize_result1_class,
    recognize_theorem_class,
    recognize_theorem_class_disconnected,
)
from .graph import (
    Graph,
    connected_class_c,
    disjoint_union,
    enumerate_graphs,
    in_class_c,
    is_connected,
    is_cycle,
    is_disjoint_union_of_cycles,
    read_graph6_lines,
    to_graph6,
)
from .orientations import (
    EDGE_BUDGET,
    BudgetExceededError,
    OrientationSearchStats,
    domt_range,
    domt_upper,
    exists_extremal_orientation,
    verify_extremal_necessary_conditions,
)

log = logging.getLogger(__name__)

DEFAULT_MAX_N = 6
FLAGGED_MAX_N = 7

THEOREMS = ("main", "result1", "result2", "concomp", "disconnected", "gap")


class SourceError(ValueError):
    pass


@dataclass(frozen=True)
class Enumeration:
    """Built-in enumeration of all graphs with min_n <= n <= max_n."""

    max_n: int = DEFAULT_MAX_N
    min_n: int = 1
    allow_n7: bool = False

    def graphs(self) -> Iterator[Graph]:
        if self.max_n > FLAGGED_MAX_N:
            raise BudgetExceededError(f"built-in enumeration stops at n = {FLAGGED_MAX_N}; ingest graph6 files beyond")
        if self.max_n == FLAGGED_MAX_N:
            if not self.allow_n7:
                raise BudgetExceededError("n = 7 enumeration requires the explicit opt-in flag")
            warnings.warn("enumerating all 1044 graphs on 7 vertices; expect a long run", RuntimeWarning)
        for n in range(self.min_n, self.max_n + 1):
            yield from enumerate_graphs(n)


Source = Union[Enumeration, Path, str, Iterable[Graph]]


def iter_source(source: Source) -> Iterator[Graph]:
    if isinstance(source, Enumeration):
        yield from source.graphs()
    elif isinstance(source, (str, Path)):
        path = Path(source)
        try:
            text = path.read_text(encoding="ascii")
        except (OSError, UnicodeDecodeError) as exc:
            raise SourceError(f"cannot read graph6 source {path}: {exc}") from exc
        for g, _ in _annotated_lines(text.splitlines()):
            yield g
    else:
        yield from source


def _annotated_lines(lines: Iterable[str]) -> Iterator[tuple[Graph, str | None]]:
    """graph6 lines with an optional second token: a claimed verdict to audit."""
    for raw in lines:
        parts = raw.split()
        if not parts:
            continue
        g = next(read_graph6_lines(parts[:1]))
        if len(parts) > 2:
            raise SourceError(f"unexpected tokens after graph6 line: {raw.strip()!r}")
        yield g, parts[1] if len(parts) == 2 else None


def iter_claims(source: Source) -> Iterator[tuple[Graph, str | None]]:
    """Like :func:`iter_source`, also yielding any verdict claimed in a file line."""
    if isinstance(source, (str, Path)):
        path = Path(source)
        try:
            text = path.read_text(encoding="ascii")
        except (OSError, UnicodeDecodeError) as exc:
            raise SourceError(f"cannot read graph6 source {path}: {exc}") from exc
        yield from _annotated_lines(text.splitlines())
    else:
        for g in iter_source(source):
            yield g, None


@dataclass
class VerificationRecord:
    graph6: str
    n: int
    m: int
    recognizer_verdict: str | None
    bruteforce_verdict: bool
    domt_upper: int | None = None
    domt_lower: int | None = None
    details: dict = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return (self.recognizer_verdict is not None) == self.bruteforce_verdict

    def to_json(self) -> dict:
        return {
            "graph6": self.graph6,
            "n": self.n,
            "m": self.m,
            "recognizer_verdict": self.recognizer_verdict,
            "bruteforce_verdict": self.bruteforce_verdict,
            "domt_upper": self.domt_upper,
            "domt_lower": self.domt_lower,
            "agree": self.agree,
            **({"details": self.details} if self.details else {}),
        }


@dataclass
class VerificationReport:
    theorem: str
    records: list[VerificationRecord] = field(default_factory=list)
    stats: OrientationSearchStats = field(default_factory=OrientationSearchStats)
    wall_time: float = 0.0
    extremal_violations: list[dict] = field(default_factory=list)

    @property
    def graph_count(self) -> int:
        return len(self.records)

    @property
    def mismatches(self) -> list[VerificationRecord]:
        return [r for r in self.records if not r.agree]

    @property
    def positives(self) -> list[VerificationRecord]:
        return [r for r in self.records if r.bruteforce_verdict]

    @property
    def holds(self) -> bool:
        return not self.mismatches and not self.extremal_violations

    def summary(self, *, timing: bool = False) -> dict:
        out = {
            "theorem": self.theorem,
            "graph_count": self.graph_count,
            "positives": len(self.positives),
            "mismatch_count": len(self.mismatches),
            "mismatches": [r.to_json() for r in self.mismatches],
            "extremal_violations": self.extremal_violations,
            "prune_stats": self.stats.to_dict(),
            "holds": self.holds,
        }
        if timing:
            out["wall_time"] = round(self.wall_time, 3)
        return out

    def to_jsonl(self, *, timing: bool = False) -> str:
        lines = [json.dumps(r.to_json(), sort_keys=True) for r in self.records]
        lines.append(json.dumps({"summary": self.summary(timing=timing)}, sort_keys=True))
        return "\n".join(lines) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["graph6", "n", "m", "dom_t", "DOM_t", "family_tag"])
        for r in self.records:
            writer.writerow([
                r.graph6, r.n, r.m,
                "" if r.domt_lower is None else r.domt_lower,
                "" if r.domt_upper is None else r.domt_upper,
                r.recognizer_verdict or "",
            ])
        return buf.getvalue()

    def write(self, out: Path | str, *, csv_too: bool = False, timing: bool = False) -> list[Path]:
        """Write ``<out>.jsonl`` (records plus summary footer) and optionally ``<out>.csv``."""
        base = Path(out)
        if base.suffix in (".jsonl", ".csv"):
            base = base.with_suffix("")
        base.parent.mkdir(parents=True, exist_ok=True)
        written = [base.with_suffix(".jsonl")]
        written[0].write_text(self.to_jsonl(timing=timing), encoding="utf-8")
        if csv_too:
            p = base.with_suffix(".csv")
            p.write_text(self.to_csv(), encoding="utf-8")
            written.append(p)
        return written


# per-graph checks ------------------------------------------------------------------
# module-level so they pickle for worker processes


def _check_main(g: Graph) -> tuple[VerificationRecord, OrientationSearchStats, list[str]]:
    g6 = to_graph6(g)
    witness = recognize_theorem_class(g)
    verdict = witness.family if witness is not None else None
    if is_cycle(g):
        return VerificationRecord(g6, g.n, g.m, verdict, False, domt_upper=g.n, details={"cycle": True}), OrientationSearchStats(), []
    found, stats = exists_extremal_orientation(g)
    violations: list[str] = []
    details = {}
    if found is not None:
        violations = verify_extremal_necessary_conditions(found)
        if gamma_t(found) != g.n - 1:
            violations.append("gamma_t")
        details["orientation"] = found.arcs()
    if witness is not None:
        details["witness"] = witness.to_json()
        if gamma_t(extremal_orientation_for(witness)) != g.n - 1:
            violations.append("constructor")
    rec = VerificationRecord(
        g6, g.n, g.m, verdict, found is not None,
        domt_upper=g.n - 1 if found is not None else None,
        details=details,
    )
    return rec, stats, violations


def _check_result1(g: Graph, budget: int = EDGE_BUDGET) -> tuple[VerificationRecord, OrientationSearchStats, list[str]]:
    member, reason = recognize_result1_class(g)
    verdict = None
    if member:
        verdict = reason if isinstance(reason, str) else reason.family
    r = domt_range(g, budget=budget)
    rec = VerificationRecord(
        to_graph6(g), g.n, g.m, verdict, r.lower == g.n - 1, domt_upper=r.upper, domt_lower=r.lower
    )
    violations = []
    if r.upper == g.n - 1:
        violations = verify_extremal_necessary_conditions(r.argmax)
    return rec, r.stats, violations


def _check_result2(g: Graph, budget: int = EDGE_BUDGET) -> tuple[VerificationRecord, OrientationSearchStats, list[str]]:
    verdict = "cycles" if is_disjoint_union_of_cycles(g) else None
    r = domt_range(g, budget=budget)
    rec = VerificationRecord(
        to_graph6(g), g.n, g.m, verdict, r.upper == g.n, domt_upper=r.upper, domt_lower=r.lower
    )
    violations = []
    if r.upper == g.n - 1:
        violations = verify_extremal_necessary_conditions(r.argmax)
    return rec, r.stats, violations


def _check_disconnected(g: Graph) -> tuple[VerificationRecord, OrientationSearchStats, list[str]]:
    witness = recognize_theorem_class_disconnected(g)
    found, stats = exists_extremal_orientation(g, require_preconditions=False)
    violations = verify_extremal_necessary_conditions(found) if found is not None else []
    details = {}
    if witness is not None:
        details["witness"] = witness.to_json()
        if gamma_t(extremal_orientation_for(witness)) != g.n - 1:
            violations.append("constructor")
    rec = VerificationRecord(
        to_graph6(g), g.n, g.m, witness.family if witness else None, found is not None,
        domt_upper=g.n - 1 if found is not None else None, details=details,
    )
    return rec, stats, violations


def _apply_claim(rec: VerificationRecord, claim: str | None) -> None:
    """Replace the recogniser verdict by a claimed one; brute force is untouched."""
    if claim is None:
        return
    rec.details["own_verdict"] = rec.recognizer_verdict
    rec.recognizer_verdict = None if claim.lower() == "none" else claim


def _run(
    theorem: str,
    items: Iterable[tuple[object, str | None]],
    check: Callable[[Graph], tuple[VerificationRecord, OrientationSearchStats, list[str]]],
    workers: int = 1,
    progress: Callable[[VerificationRecord], None] | None = None,
) -> VerificationReport:
    start = time.perf_counter()
    report = VerificationReport(theorem)
    claims: deque[str | None] = deque()

    def graphs() -> Iterator[object]:
        for g, claim in items:
            claims.append(claim)
            yield g

    if workers > 1:
        pool = ProcessPoolExecutor(max_workers=workers)
        results: Iterable = pool.map(check, graphs(), chunksize=8)
    else:
        pool = None
        results = map(check, graphs())
    try:
        for rec, stats, violations in results:
            _apply_claim(rec, claims.popleft())
            report.records.append(rec)
            report.stats.merge(stats)
            if violations:
                report.extremal_violations.append({"graph6": rec.graph6, "violated": violations})
            if not rec.agree:
                log.warning("%s mismatch on %s", theorem, rec.graph6)
            if progress:
                progress(rec)
    finally:
        if pool is not None:
            pool.shutdown()
    report.wall_time = time.perf_counter() - start
    return report


def _filtered(source: Source, keep: Callable[[Graph], bool]) -> Iterator[tuple[Graph, str | None]]:
    for g, claim in iter_claims(source):
        if keep(g):
            yield g, claim


def verify_theorem_main(source: Source = Enumeration(), *, workers: int = 1, progress=None) -> VerificationReport:
    """Connected class-C graphs: recogniser verdict against the extremal search."""
    return _run("main", _filtered(source, connected_class_c), _check_main, workers, progress)


def verify_result1(
    source: Source = Enumeration(), *, workers: int = 1, budget: int = EDGE_BUDGET, progress=None
) -> VerificationReport:
    """Connected class-C graphs: F or special graph against dom_t = n - 1."""
    return _run("result1", _filtered(source, connected_class_c), partial(_check_result1, budget=budget), workers, progress)


def verify_result2(
    source: Source = Enumeration(), *, workers: int = 1, budget: int = EDGE_BUDGET, progress=None
) -> VerificationReport:
    """All class-C graphs: disjoint union of cycles against DOM_t = n."""
    return _run("result2", _filtered(source, in_class_c), partial(_check_result2, budget=budget), workers, progress)


def disconnected_compositions(max_n: int = 8, *, component_max_n: int = 5) -> Iterator[Graph]:
    """Disjoint unions of two or more connected class-C graphs, total n <= max_n."""
    pool: list[Graph] = []
    for n in range(3, min(component_max_n, max_n - 3) + 1):
        pool.extend(enumerate_graphs(n, connected_class_c))

    def rec(start: int, parts: list[Graph], total: int) -> Iterator[list[Graph]]:
        if len(parts) >= 2:
            yield list(parts)
        for i in range(start, len(pool)):
            if total + pool[i].n <= max_n:
                parts.append(pool[i])
                yield from rec(i, parts, total + pool[i].n)
                parts.pop()

    for parts in rec(0, [], 0):
        yield disjoint_union(*parts)


def verify_disconnected_main(source: Source | None = None, *, workers: int = 1, progress=None) -> VerificationReport:
    """Disconnected class-C graphs: cycles plus one theorem-class core against DOM_t = n - 1."""
    if source is None:
        source = disconnected_compositions()
    keep = lambda g: in_class_c(g) and not is_connected(g)  # noqa: E731
    return _run("disconnected", _filtered(source, keep), _check_disconnected, workers, progress)


def random_class_c_component(rng: random.Random, n: int, extra_edges: int) -> Graph:
    """Random spanning tree on n vertices plus ``extra_edges`` further edges (at least one)."""
    edges = set()
    for v in range(1, n):
        u = rng.randrange(v)
        edges.add((u, v))
    missing = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    rng.shuffle(missing)
    edges.update(missing[: max(1, min(extra_edges, len(missing)))])
    perm = list(range(n))
    rng.shuffle(perm)
    return Graph.from_edges(n, [(perm[u], perm[v]) for u, v in edges])


def _check_concomp(parts: tuple[Graph, Graph], budget: int) -> tuple[VerificationRecord, OrientationSearchStats, list[str]]:
    union = disjoint_union(*parts)
    stats = OrientationSearchStats()
    pieces = []
    for p in parts:
        r = domt_range(p, budget=budget)
        stats.merge(r.stats)
        pieces.append(r.upper)
    r = domt_range(union, budget=budget)
    stats.merge(r.stats)
    expected = sum(pieces)
    rec = VerificationRecord(
        to_graph6(union), union.n, union.m, "additive", r.upper == expected,
        domt_upper=r.upper, domt_lower=r.lower,
        details={"parts": [to_graph6(p) for p in parts], "part_upper": pieces},
    )
    return rec, stats, []


def verify_concomp(
    trials: int = 100,
    max_total_n: int = 10,
    *,
    seed: int = 0,
    edge_budget: int = 16,
    workers: int = 1,
    progress=None,
) -> VerificationReport:
    """DOM_t of a two-component union against the sum over its components."""
    if max_total_n < 6:
        raise ValueError("two class-C components need at least 6 vertices")
    if edge_budget > EDGE_BUDGET:
        raise BudgetExceededError(f"edge budget above {EDGE_BUDGET}")
    rng = random.Random(seed)
    pairs = []
    while len(pairs) < trials:
        n1 = rng.randint(3, max_total_n - 3)
        n2 = rng.randint(3, max_total_n - n1)
        a = random_class_c_component(rng, n1, rng.randint(1, 3))
        b = random_class_c_component(rng, n2, rng.randint(1, 3))
        if a.m + b.m <= edge_budget:
            pairs.append((a, b))
    return _run("concomp", [(p, None) for p in pairs], partial(_check_concomp, budget=edge_budget), workers, progress)


# dom_t / DOM_t gap survey -------------------------------------------------------------


@dataclass
class GapRow:
    name: str
    n: int
    m: int
    dom_t: int
    DOM_t: int
    method: str

    def to_json(self) -> dict:
        return dict(self.__dict__)


def fig8_certificate() -> GapRow:
    """dom_t and DOM_t of the twelve-vertex gap fixture without enumerating 2^22 orientations.

    gamma_t of the drawn right orientation meets the universal lower bound 3;
    gamma_t of the extremal left orientation meets the cap n - 1 that holds
    for every graph that is not a disjoint union of cycles.
    """
    g, named = fig8()
    low = gamma_t(named["right"])
    high = gamma_t(named["left"])
    if low != 3 or high != g.n - 1 or is_disjoint_union_of_cycles(g):
        raise AssertionError("fig8 certificate failed")
    return GapRow("fig8", g.n, g.m, low, high, "certificate")


def gap_survey(
    instances: Sequence[tuple[str, Graph]] | None = None,
    *,
    budget: int = EDGE_BUDGET,
    include_fig8: bool = True,
) -> list[GapRow]:
    """Exact (dom_t, DOM_t) per instance by full orientation enumeration."""
    if instances is None:
        instances = [(f"fig9({k})", fig9(k)[0]) for k in range(3, 7)]
    rows = []
    for name, g in instances:
        if g.m > budget:
            raise BudgetExceededError(f"{name}: {g.m} edges exceeds the budget of {budget}")
        r = domt_range(g, budget=budget)
        rows.append(GapRow(name, g.n, g.m, r.lower, r.upper, "enumeration"))
    if include_fig8:
        rows.append(fig8_certificate())
    return rows
