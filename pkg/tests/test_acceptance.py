"""Acceptance criteria 1-9, one test each, with a PASS/FAIL line per criterion."""

import hashlib
import os
import subprocess
import sys
from pathlib import Path

import pytest

import acceptance_suite as suite

TITLES = {
    1: "regular bipartite suite (200 graphs, < 60 s)",
    2: "divisible and two-size bipartite corollaries",
    3: "degree-divisible bipartite graphs via vertex splitting",
    4: "even-regular graphs",
    5: "odd-regular graphs with two disjoint perfect matchings",
    6: "odd-regular bipartite graphs, common-neighbour bound",
    7: "exhaustive-search oracle and 1000 corrupted certificates",
    8: "perfect matching kernel against enumeration",
    9: "byte-identical certificates on rerun",
}

_outcomes: dict[int, suite.Outcome] = {}


@pytest.mark.parametrize("number", range(1, 9))
def test_criterion(number, acceptance):
    outcome = getattr(suite, f"criterion_{number}")()
    _outcomes[number] = outcome
    acceptance(number, TITLES[number], outcome.ok, outcome.detail())
    assert outcome.ok, "\n".join(outcome.failures[:10])


def _digest(certificates_by_criterion) -> str:
    h = hashlib.sha256()
    for certs in certificates_by_criterion:
        for text in certs:
            h.update(text.encode("ascii"))
            h.update(b"\0")
    return h.hexdigest()


def test_criterion_9_determinism(acceptance):
    first = suite.certificate_digest()
    second = suite.certificate_digest()
    digests = {"in-process run 1": first, "in-process run 2": second}
    if all(i in _outcomes for i in range(1, 8)):
        digests["earlier criterion runs"] = _digest(_outcomes[i].certificates for i in range(1, 8))
    env = dict(os.environ, PYTHONHASHSEED="4242")
    here = Path(__file__).parent
    proc = subprocess.run(
        [sys.executable, str(here / "acceptance_suite.py")],
        cwd=here,
        env=env,
        capture_output=True,
        text=True,
        check=False,
    )
    digests["fresh interpreter"] = proc.stdout.strip() if proc.returncode == 0 else f"error: {proc.stderr[-300:]}"
    same = len(set(digests.values())) == 1
    acceptance(9, TITLES[9], same, f"{len(digests)} runs, digest {first[:16]}")
    assert same, digests
