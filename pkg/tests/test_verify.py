import json
import warnings

import pytest

from totaldom.families import K23, K4, K4_MINUS_E, cycle_graph, paw
from totaldom.graph import Graph, disjoint_union, is_isomorphic, parse_graph6, to_graph6
from totaldom.orientations import BudgetExceededError
from totaldom import verify as ver

from _support import frozen


def positives(report):
    return [parse_graph6(r.graph6) for r in report.positives]


def same_classes(found, expected):
    return len(found) == len(expected) and all(any(is_isomorphic(a, b) for b in found) for a in expected)


class TestMain:
    def test_n4(self):
        report = ver.verify_theorem_main(ver.Enumeration(max_n=4, min_n=4))
        assert report.graph_count == 4 and report.holds
        assert same_classes(positives(report), [paw(), K4_MINUS_E, K4])

    def test_up_to_6_matches_frozen(self):
        report = ver.verify_theorem_main()
        assert report.holds and not report.extremal_violations
        expect = frozen()["main"]
        assert report.graph_count == expect["graph_count"]
        assert sorted(r.graph6 for r in report.positives) == expect["positives"]

    def test_cycle_file(self, tmp_path):
        src = tmp_path / "cycles.g6"
        src.write_text("\n".join(to_graph6(cycle_graph(n)) for n in range(3, 9)) + "\n")
        report = ver.verify_theorem_main(src)
        assert report.graph_count == 6 and not report.positives and report.holds

    def test_claimed_verdicts_are_audited(self, tmp_path):
        src = tmp_path / "doctored.g6"
        src.write_text(f"{to_graph6(cycle_graph(4))} F1\n{to_graph6(K4)} F2\n{to_graph6(paw())} none\n")
        report = ver.verify_theorem_main(src)
        assert len(report.mismatches) == 2
        assert {r.graph6 for r in report.mismatches} == {to_graph6(cycle_graph(4)), to_graph6(paw())}

    def test_unreadable_source(self, tmp_path):
        with pytest.raises(ver.SourceError):
            ver.verify_theorem_main(tmp_path / "missing.g6")

    def test_enumeration_guard(self):
        with pytest.raises(BudgetExceededError):
            list(ver.Enumeration(max_n=7).graphs())
        with pytest.raises(BudgetExceededError):
            list(ver.Enumeration(max_n=8, allow_n7=True).graphs())
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            next(ver.Enumeration(max_n=7, min_n=7, allow_n7=True).graphs())
        assert any(issubclass(w.category, RuntimeWarning) for w in caught)

    def test_workers_give_identical_records(self):
        one = ver.verify_theorem_main(ver.Enumeration(max_n=5))
        two = ver.verify_theorem_main(ver.Enumeration(max_n=5), workers=2)
        assert one.to_jsonl() == two.to_jsonl()


class TestResults:
    def test_result1(self):
        report = ver.verify_result1()
        assert report.holds
        assert sorted(r.graph6 for r in report.positives) == frozen()["result1"]["positives"]
        n5 = [g for g in positives(report) if g.n == 5]
        c3_p3 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)])
        c4_p2 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 0), (3, 4)])
        assert same_classes(n5, [K23, c3_p3, c4_p2])

    def test_result1_c6(self):
        report = ver.verify_result1([cycle_graph(6)])
        rec = report.records[0]
        assert rec.recognizer_verdict is None and not rec.bruteforce_verdict

    def test_result2(self):
        report = ver.verify_result2()
        assert report.holds
        assert sorted(r.graph6 for r in report.positives) == frozen()["result2"]["positives"]

    def test_result2_examples(self):
        report = ver.verify_result2([disjoint_union(cycle_graph(3), cycle_graph(3)), paw()])
        (cc, pw) = report.records
        assert cc.recognizer_verdict and cc.bruteforce_verdict
        assert not pw.recognizer_verdict and not pw.bruteforce_verdict and pw.domt_upper == 3


class TestDisconnected:
    def test_examples(self):
        graphs = [
            disjoint_union(cycle_graph(3), paw()),
            disjoint_union(cycle_graph(3), cycle_graph(4)),
            disjoint_union(paw(), paw()),
        ]
        report = ver.verify_disconnected_main(graphs)
        assert [r.bruteforce_verdict for r in report.records] == [True, False, False]
        assert report.holds

    def test_compositions(self):
        report = ver.verify_disconnected_main()
        assert report.holds
        assert sorted(r.graph6 for r in report.positives) == frozen()["disconnected"]["positives"]


class TestConcomp:
    def test_random_pairs(self):
        report = ver.verify_concomp(40, 10, seed=3)
        assert report.graph_count == 40 and report.holds

    def test_seed_is_reproducible(self):
        assert ver.verify_concomp(5, seed=9).to_jsonl() == ver.verify_concomp(5, seed=9).to_jsonl()


class TestGap:
    def test_survey(self):
        rows = [r.to_json() for r in ver.gap_survey()]
        assert rows == frozen()["gap"]
        by_name = {r["name"]: r for r in rows}
        assert (by_name["fig9(5)"]["n"], by_name["fig9(5)"]["dom_t"], by_name["fig9(5)"]["DOM_t"]) == (6, 3, 5)
        assert (by_name["fig8"]["n"], by_name["fig8"]["dom_t"], by_name["fig8"]["DOM_t"]) == (12, 3, 11)


class TestReports:
    def test_files(self, tmp_path):
        report = ver.verify_theorem_main(ver.Enumeration(max_n=4))
        written = report.write(tmp_path / "main", csv_too=True)
        assert sorted(p.suffix for p in written) == [".csv", ".jsonl"]
        lines = (tmp_path / "main.jsonl").read_text().splitlines()
        assert len(lines) == report.graph_count + 1
        assert "wall_time" not in json.loads(lines[-1])["summary"]
        header = (tmp_path / "main.csv").read_text().splitlines()[0]
        assert header == "graph6,n,m,dom_t,DOM_t,family_tag"

    def test_timing_opt_in(self):
        report = ver.verify_theorem_main(ver.Enumeration(max_n=3))
        assert "wall_time" in report.summary(timing=True)
