import json
import subprocess
import sys

import pytest

from linkpoly.bracket import jones
from linkpoly.catalog import (capo_pretzel, capo_reduced_diagram, catalog,
                              run_catalog)
from linkpoly.report import invariants, parse_input
from linkpoly.seifert import canonical_euler, positivity_class


def test_catalog_entries_carry_citations():
    for entry in catalog():
        assert entry.expected
        for exp in entry.expected:
            assert exp.citation


def test_catalog_runs_clean():
    results = run_catalog()
    assert all(r.ok for r in results), [
        (r.label, r.checks) for r in results if not r.ok]
    assert all(r.chirality == "as written" for r in results)


def test_capo_reduced_diagram_presents_the_same_link():
    for n in (2, 3, 4, 5):
        Dn = capo_reduced_diagram(n)
        assert Dn.n == 3 * n
        assert positivity_class(Dn) == 1
        assert canonical_euler(Dn) == 1 - n
        assert jones(Dn) == jones(capo_pretzel(n))


def test_invariants_report_trefoil():
    rep = invariants("2: 1 1 1")
    assert rep.crossings == 3 and rep.writhe == 3
    assert rep.prime_factors == 1
    assert rep.b1_reduced_seifert == 0
    assert rep.polynomials["jones"] == "t^1 +t^3 -t^4"
    assert not rep.failures
    statuses = {v.theorem: v.status for v in rep.verdicts}
    assert statuses["positive braid coefficients"] == "pass"
    assert statuses["fibered positive: vanishing coefficient"] == "pass"
    data = json.loads(rep.to_json())
    assert data["schema"] == 1


def test_invariants_report_almost_positive():
    rep = invariants("2: -1 1 1 1 1")
    assert rep.positivity_class == 1
    statuses = {v.theorem: v.status for v in rep.verdicts}
    assert statuses["almost positive leading term (parallel crossing)"] == "pass"
    assert statuses["almost positive degree identities"] == "pass"
    assert statuses["fiber shape vs Alexander criterion"] == "pass"
    assert not rep.failures


def test_parse_input_accepts_pd():
    D = parse_input("X[4,2,5,1] X[2,6,3,5] X[6,4,1,3]")
    assert D.n == 3


def _cli(*args):
    proc = subprocess.run([sys.executable, "-m", "linkpoly.cli", *args],
                          capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def test_cli_invariants():
    code, out, err = _cli("invariants", "2: 1 1 1")
    assert code == 0 and "jones: t^1 +t^3 -t^4" in out
    code, out, err = _cli("invariants", "2: 1 1 1", "--json")
    assert code == 0 and json.loads(out)["schema"] == 1


def test_cli_invariants_bad_input():
    code, out, err = _cli("invariants", "X[1,2,1,2]")
    assert code == 2 and "error" in err


def test_cli_catalog_list():
    code, out, _ = _cli("catalog")
    assert code == 0 and "brep" in out and "L5" in out


def test_cli_verify_small():
    code, out, _ = _cli("verify", "cc", "--seed", "3", "--trials", "5")
    assert code == 0 and "5/5 passed" in out


def test_cli_verify_json():
    code, out, _ = _cli("verify", "matrix_tree", "--seed", "1",
                        "--trials", "4", "--json")
    assert code == 0
    data = json.loads(out)
    assert data[0]["passes"] == 4


def test_cli_generate_deterministic():
    code1, out1, _ = _cli("generate", "positive", "--seed", "5",
                          "--crossings", "8", "--json")
    code2, out2, _ = _cli("generate", "positive", "--seed", "5",
                          "--crossings", "8", "--json")
    assert code1 == code2 == 0 and out1 == out2
    code3, out3, _ = _cli("generate", "almost-positive", "--seed", "5",
                          "--crossings", "8", "--no-parallel", "--json")
    assert code3 == 0
    d = json.loads(out3)
    assert sum(1 for s in d["signs"] if s < 0) == 1
