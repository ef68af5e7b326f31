"""Acceptance gate: one test per criterion, each printing a single PASS/FAIL line.

All checks are exact; runtime ceilings are asserted where a criterion sets one.
"""

import itertools
import random
import time

import pytest

from pathcover.campaigns import Bounds, CampaignReport, check_family_member, run_campaign
from pathcover.canon import canonical_form
from pathcover.enumeration import build_catalog, enumerate_up_to
from pathcover.families import WhirligigSpec, named, whirligig
from pathcover.graph import add_edge, remove_edge

pytestmark = pytest.mark.acceptance


@pytest.fixture
def verdict(capsys):
    def emit(number: int, name: str, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\nACCEPTANCE {number:>2} {name}: {'PASS' if ok else 'FAIL'} ({detail})")
        assert ok, detail

    return emit


def _run(cid: str, bounds: Bounds | None = None) -> tuple[CampaignReport, float]:
    start = time.perf_counter()
    rep = run_campaign(cid, bounds)
    return rep, time.perf_counter() - start


def _summary(*pairs: tuple[CampaignReport, float]) -> str:
    return "; ".join(
        f"{r.campaign_id} checked={r.checked} counterexamples={len(r.counterexamples)} {s:.1f}s"
        for r, s in pairs
    )


def test_01_oracle(verdict):
    rep, secs = _run("ORACLE", Bounds(max_n=7))
    verdict(1, "ORACLE", rep.success and rep.checked == 1252 and secs < 300, _summary((rep, secs)))


def test_02_ami_alpha(verdict):
    ami, ami_s = _run("AMI", Bounds(max_n=6))
    alpha, alpha_s = _run("ALPHA", Bounds(max_n=6))
    ok = ami.success and alpha.success and ami.checked == alpha.checked == 208 and ami_s + alpha_s < 300
    verdict(2, "AMI+ALPHA", ok, _summary((ami, ami_s), (alpha, alpha_s)))


def test_03_disj_star_lemmy(verdict):
    disj = _run("DISJ", Bounds(max_n=5))
    star = _run("STAR", Bounds(max_n=5, max_s=3))
    lemmy = _run("LEMMY", Bounds(max_n=4, samples=10_000, seed=0, max_s=4))
    ok = all(r.success for r, _ in (disj, star, lemmy)) and lemmy[0].checked >= 10_000
    verdict(3, "DISJ/STAR/LEMMY", ok, _summary(disj, star, lemmy))


def test_04_edgeadd(verdict):
    rep, secs = _run("EDGEADD", Bounds(max_n=5, connected_only=True))
    verdict(4, "EDGEADD", rep.success and rep.checked > 0, _summary((rep, secs)))


def test_05_term(verdict):
    rep, secs = _run("TERM", Bounds(max_n=7))
    verdict(5, "TERM", rep.success and rep.checked > 0, _summary((rep, secs)))


def test_06_max1_cot(verdict):
    max1 = _run("MAX1", Bounds(max_n=6))
    cot = _run("COT", Bounds(max_n=6))
    ok = max1[0].success and cot[0].success and max1[0].checked > 0 and cot[0].checked > 0
    verdict(6, "MAX1/COT", ok, _summary(max1, cot))


def test_07_decomp(verdict):
    rep, secs = _run("DECOMP", Bounds(max_n=8))
    verdict(7, "DECOMP", rep.success and rep.checked > 0 and secs < 1800, _summary((rep, secs)))


def test_08_smallest_trim_two(verdict):
    entries = build_catalog(enumerate_up_to(6), "N", 2)
    small = [e for e in entries if e.n <= 5]
    at_six = [e.canonical for e in entries if e.n == 6]
    net = canonical_form(named("fig1-net"))
    ok = not small and net in at_six
    verdict(8, "SMALLEST-N2", ok, f"members n<=5: {len(small)}; members n=6: {len(at_six)}; net present: {net in at_six}")


def test_09_family(verdict):
    rep, secs = _run("FAMILY", Bounds(max_n=18, samples=50, seed=0))
    verdict(9, "FAMILY", rep.success and rep.checked >= 50 and secs < 1800, _summary((rep, secs)))


def test_10_degone(verdict):
    rep, secs = _run("DEGONE", Bounds(max_n=8))
    extra = f"lemma cases={rep.corpus['lemmaCases']} trim graphs={rep.corpus['trimGraphs']}"
    verdict(10, "DEGONE", rep.success and rep.corpus["lemmaCases"] > 0, _summary((rep, secs)) + "; " + extra)


def test_11_mutation_sanity(verdict):
    g = whirligig(WhirligigSpec(3, 5))
    seed = 0
    u, v = random.Random(seed).choice(list(itertools.combinations(range(g.n), 2)))
    mutant = remove_edge(g, u, v) if g.has_edge(u, v) else add_edge(g, u, v)
    decomp = run_campaign("DECOMP", Bounds(graphs=(mutant,)))
    family = check_family_member(mutant, "N", 3)
    ok = not decomp.success or bool(family)
    verdict(
        11, "MUTATION", ok,
        f"seed={seed} flipped ({u},{v}); DECOMP counterexamples={len(decomp.counterexamples)}; "
        f"FAMILY counterexamples={len(family)}",
    )
