"""Acceptance criteria 1-10 at the default scale (Z/2, depth 4, canonical equality).

Each criterion maps to a set of check ids in the verification report. The full
report is produced twice by the command-line tool in fresh processes; the first
run is timed and the second must match it byte for byte.

Run with ``pytest -s tests/test_acceptance.py`` or ``python3 tests/test_acceptance.py``
to see the per-criterion summary lines (they are also printed in the pytest
terminal summary).
"""

import json
import os
import random
import subprocess
import sys
import time

import pytest

from mouldcalc.flexion import NAMED, named_mould
from mouldcalc.gamma import GammaSpec
from mouldcalc.mould import random_mould
from mouldcalc.mouldio import parse_mould, render_mould
from mouldcalc.symmetry import random_structured

TIME_LIMIT = 600.0
Z2 = GammaSpec([2])

# criterion -> (description, check ids or id prefixes ending in ".")
CRITERIA = {
    1: ("example moulds and the pic negative control", ["examples."]),
    2: ("pic flexion identities, 100 samples", ["ganit.pic-identities"]),
    3: (
        "dimould homomorphisms, tensor law, Sh(I), route agreement",
        ["dimould.sh-homomorphism", "dimould.shstar-homomorphism", "dimould.tensor-law", "dimould.sh-identity", "dimould.route-agreement"],
    ),
    4: ("closure of mu and lu on structured pairs", ["dimould.closure-"]),
    5: ("exp correspondences and log round trip", ["exp."]),
    6: ("ganit morphism, inverse and exp diagram", ["ganit.morphism-", "ganit.inverse", "ganit.diagram"]),
    7: ("decompositions, g recurrences, shuffle intertwining, transfer", ["recurrences."]),
    8: (
        "ganit(pic) and ganit(poc) on structured moulds",
        ["ganit.pic-alternal-to-alternil", "ganit.pic-symmetral-to-symmetril", "ganit.poc-alternil-to-alternal", "ganit.poc-symmetril-to-symmetral"],
    ),
    9: ("Ex family, C coefficients, arit, expari", ["appendix."]),
}

# composition checks run to weight 6; every mould check runs at depth 4
WEIGHT_CHECKS = {"appendix.c-recurrence": 6, "appendix.ex-symmetral": 6}

RESULTS = {}


def _matches(theorem, patterns):
    return any(theorem.startswith(p) if p.endswith((".", "-")) else theorem == p for p in patterns)


def _verify(out_path):
    cmd = [sys.executable, "-m", "mouldcalc", "verify", "--suite", "all", "--out", str(out_path), "--quiet"]
    start = time.perf_counter()
    proc = subprocess.run(cmd, capture_output=True, text=True)
    return proc, time.perf_counter() - start


@pytest.fixture(scope="module")
def report(tmp_path_factory):
    d = tmp_path_factory.mktemp("acceptance")
    first, elapsed = _verify(d / "first.jsonl")
    second, _ = _verify(d / "second.jsonl")
    return {
        "elapsed": elapsed,
        "codes": (first.returncode, second.returncode),
        "stderr": first.stderr + second.stderr,
        "first": (d / "first.jsonl").read_bytes(),
        "second": (d / "second.jsonl").read_bytes(),
    }


def _records(report):
    return [json.loads(line) for line in report["first"].decode().splitlines()]


def _record(n, ok, detail=""):
    RESULTS[n] = (ok, detail)
    line = "criterion %2d: %s  %s" % (n, "PASS" if ok else "FAIL", detail)
    print(line)
    return line


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(report, n):
    desc, patterns = CRITERIA[n]
    recs = [r for r in _records(report) if _matches(r["theorem"], patterns)]
    failed = [r for r in recs if r["status"] != "PASS"]
    wrong_scale = [r["theorem"] for r in recs if r["depth"] != WEIGHT_CHECKS.get(r["theorem"], 4)]
    ok = bool(recs) and not failed and not wrong_scale
    detail = "%s (%d checks)" % (desc, len(recs))
    if failed:
        detail += "; failing: " + ", ".join("%s: %s" % (r["theorem"], r["witness"]) for r in failed)
    if wrong_scale:
        detail += "; wrong depth: " + ", ".join(wrong_scale)
    _record(n, ok, detail)
    assert ok, detail


def test_negative_control_reports_the_residual(report):
    rec = next(r for r in _records(report) if r["theorem"] == "examples.pic-not-symmetral")
    assert "residual=1/(x1*x2)" in rec["witness"]


def _round_trip_moulds():
    rng = random.Random(0)
    out = [named_mould(name, Z2, 4) for name in sorted(NAMED)]
    out += [random_mould("V", Z2, 4, rng, empty=e) for e in (0, 1)]
    out += [random_structured(kind, Z2, 3, seed=5) for kind in ("alternal", "symmetral", "alternil", "symmetril")]
    out.append(random_mould("V", GammaSpec([2, 3]), 2, rng, empty=1))
    return out


def test_engineering(report):
    problems = []
    if report["elapsed"] >= TIME_LIMIT:
        problems.append("verify took %.0fs" % report["elapsed"])
    if report["codes"] != (0, 0):
        problems.append("exit codes %s: %s" % (report["codes"], report["stderr"][-500:]))
    if report["first"] != report["second"]:
        problems.append("rerun report differs")
    for m in _round_trip_moulds():
        text = render_mould(m)
        back = parse_mould(text)
        if back != m or render_mould(back) != text:
            problems.append("round trip failed for %s" % text.splitlines()[0])
    detail = "verify --suite all in %.0fs, identical rerun, exact round trips" % report["elapsed"]
    _record(10, not problems, detail + ("; " + "; ".join(problems) if problems else ""))
    assert not problems


def summary_lines():
    lines = []
    for n in range(1, 11):
        if n in RESULTS:
            ok, detail = RESULTS[n]
            lines.append("criterion %2d: %s  %s" % (n, "PASS" if ok else "FAIL", detail))
    return lines


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-s"]))
