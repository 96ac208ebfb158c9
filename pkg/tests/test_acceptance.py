"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Every criterion runs over the exhaustive topology corpus on 0..4 points
(1 + 1 + 4 + 29 + 355 members) unless it says otherwise.
"""

import subprocess
import sys
import time

import pytest

from mtlab.cli import main
from mtlab.documents import fixture_names, fixture_text, parse, serialize
from mtlab.functors import powerset_mt
from mtlab.generate import all_topologies, distributive_lattices_upto
from mtlab.mt import separation_check
from mtlab.sweep import FAIL, PASS, VACUOUS, sweep

CORPUS_SIZES = range(5)
CORPUS_TOTAL = 390
SEPARATION_SEED = 20240501
HOM_SEED = 7


@pytest.fixture
def report(capsys):
    def emit(number: int, title: str, ok: bool, detail: str = "") -> None:
        with capsys.disabled():
            print(f"\n{'PASS' if ok else 'FAIL'} criterion {number}: {title}" + (f" ({detail})" if detail else ""))
        assert ok, f"criterion {number} failed: {detail}"

    return emit


def corpus_rows(suite: str, props=None) -> tuple[dict, list]:
    """Summed pass/fail/vacuous counts per property over the corpus."""
    rows: dict = {}
    failures: list = []
    for n in CORPUS_SIZES:
        rep = sweep(suite, n)
        assert rep.accounting_holds()
        failures += rep.failures
        for name, r in rep.rows.items():
            if props is None or name in props:
                acc = rows.setdefault(name, {PASS: 0, FAIL: 0, VACUOUS: 0})
                for k in acc:
                    acc[k] += r[k]
    return rows, [f for f in failures if props is None or f["property"] in props]


def axiom_count(axiom: str) -> int:
    return sum(bool(separation_check(powerset_mt(x), axiom)) for n in CORPUS_SIZES for x in all_topologies(n))


def sober_count() -> int:
    return axiom_count("sober")


def fmt(failures) -> str:
    return "; ".join(f"{f['property']} on {f['item']}: {f['witness']}" for f in failures[:3])


def test_criterion_01_hofmann_mislove(report):
    start = time.perf_counter()
    rows, failures = corpus_rows("hm", {"hm_bijection"})
    elapsed = time.perf_counter() - start
    r = rows["hm_bijection"]
    ok = r[PASS] == CORPUS_TOTAL and not failures and elapsed < 60
    report(1, "compact saturated elements vs Scott-open filters, antitone bijection", ok,
           f"{r[PASS]}/{CORPUS_TOTAL} pass, {elapsed:.1f}s {fmt(failures)}")


def test_criterion_02_keimel_paseka(report):
    rows, failures = corpus_rows("kp")
    r = rows["keimel_paseka"]
    sober = sober_count()
    ok = r[FAIL] == 0 and r[PASS] == sober and r[VACUOUS] == CORPUS_TOTAL - sober
    report(2, "open filters vs saturated elements on sober members", ok,
           f"pass={r[PASS]} vacuous={r[VACUOUS]} sober={sober} {fmt(failures)}")


def test_criterion_03_separation_chain(report):
    chain = {"regular_implies_hausdorff", "hausdorff_implies_sober_t1", "t1_implies_t_half", "t_half_implies_t0"}
    _, failures = corpus_rows("separation", chain)
    checked = CORPUS_TOTAL
    for n, count in ((5, 167), (6, 167), (7, 166)):
        rep = sweep("separation", n, seed=SEPARATION_SEED, count=count)
        assert rep.accounting_holds() and rep.count == count
        failures += [f for f in rep.failures if f["property"] in chain]
        checked += count
    report(3, "regular => Hausdorff => sober and T1 => T_half => T0", not failures,
           f"{checked} spaces incl. 500 random on 5-7 points {fmt(failures)}")


def test_criterion_04_compactness(report):
    props = {"hausdorff_k_in_c", "compact_c_in_k", "compact_hausdorff_c_eq_k", "compact_hausdorff_locally_compact"}
    rows, failures = corpus_rows("compactness", props)
    report(4, "compactness lemmas", not failures and set(rows) == props,
           ", ".join(f"{k}: pass={v[PASS]} vacuous={v[VACUOUS]}" for k, v in sorted(rows.items())) + fmt(failures))


def test_criterion_05_t_half(report):
    rows, failures = corpus_rows("t_half", {"t_half_iso"})
    r = rows["t_half_iso"]
    t_half = axiom_count("T_half")
    # a member that is neither T_half nor isomorphic is reported vacuous
    ok = not failures and r[FAIL] == 0 and r[PASS] == t_half and r[VACUOUS] == CORPUS_TOTAL - t_half
    report(5, "T_half iff isomorphic to the boolean extension of its opens", ok,
           f"iso on all {r[PASS]} T_half members, absent on the other {r[VACUOUS]} {fmt(failures)}")


def test_criterion_06_essential_surjectivity(report):
    rep = sweep("ess_surj", 8)
    r = rep.rows["essentially_surjective"]
    ok = rep.count == 36 and r[PASS] == 36 and rep.accounting_holds()
    report(6, "opens of the boolean extension recover every distributive lattice of size <= 8", ok,
           f"{r[PASS]}/{rep.count} lattices {fmt(rep.failures)}")


def test_criterion_07_duality(report):
    props = {"epsilon_homeomorphism", "eta_iso_iff_atomic", "zeta_iso", "delta_homeo_iff_sober", "theta_homeomorphism"}
    rows, failures = corpus_rows("duality", props)
    sober = sober_count()
    frames = sweep("ess_surj", 8)
    fz = frames.rows["frame_zeta_iso"]
    ok = (
        not failures
        and all(rows[p][PASS] == CORPUS_TOTAL for p in ("epsilon_homeomorphism", "eta_iso_iff_atomic", "zeta_iso", "delta_homeo_iff_sober"))
        and rows["theta_homeomorphism"][PASS] == sober
        and fz[PASS] == frames.count
    )
    report(7, "unit and counit round trips", ok,
           f"theta on {rows['theta_homeomorphism'][PASS]} sober members, zeta on {fz[PASS]} lattices {fmt(failures)}")


def test_criterion_08_stone(report):
    rep = sweep("stone", 4, seed=HOM_SEED)
    full = all(r[PASS] == rep.count for r in rep.rows.values())
    report(8, "canonical extension of boolean algebras with <= 4 atoms", full and rep.count == 5 and not rep.failures,
           f"{rep.count} algebras, {20 * rep.count} random homs lifted {fmt(rep.failures)}")


def test_criterion_09_zero_dim(report):
    props = {"clopen_eq_complemented", "zero_dim_algebra_iff_frame", "zdim_open_iff_closed"}
    rows, failures = corpus_rows("zero_dim", props)
    ok = not failures and rows["clopen_eq_complemented"][PASS] == CORPUS_TOTAL and rows["zdim_open_iff_closed"][PASS] == CORPUS_TOTAL
    report(9, "clopens, zero-dimensional algebra vs frame, open and closed forms", ok,
           f"frame agreement on {rows['zero_dim_algebra_iff_frame'][PASS]} T1 members {fmt(failures)}")


def test_criterion_10_degeneracy(report):
    rows, failures = corpus_rows("degeneracy")
    frames = sweep("ess_surj", 8)
    wb = frames.rows["frame_way_below_oracle"]
    small = sum(1 for s in _frame_sizes() if s <= 6)
    ok = not failures and all(r[PASS] == CORPUS_TOTAL for r in rows.values()) and wb[PASS] == small and wb[FAIL] == 0
    report(10, "finite degeneracy facts", ok, f"way-below oracle on {wb[PASS]} frames of size <= 6 {fmt(failures)}")


def _frame_sizes():
    return [l.size for l in distributive_lattices_upto(8)]


def test_criterion_11_oracles(report):
    rows, failures = corpus_rows("oracle")
    fails = sum(r[FAIL] for r in rows.values())
    report(11, "brute-force oracles agree with the optimized predicates", fails == 0 and not failures,
           ", ".join(f"{k}={v[PASS]}" for k, v in sorted(rows.items())) + fmt(failures))


def _cli(*argv) -> subprocess.CompletedProcess:
    return subprocess.run([sys.executable, "-m", "mtlab.cli", *argv], capture_output=True, text=True)


def test_criterion_12_cli(report, capsys):
    problems = []
    for argv, expected in (
        (["check", "--pred", "sober", "sierpinski"], 0),
        (["check", "--pred", "t1", "sierpinski"], 1),
        (["validate", "broken_topology"], 2),
        (["validate", "sierpinski"], 0),
        (["check", "--pred", "compact", "m3"], 2),
    ):
        code = main(argv)
        capsys.readouterr()
        if code != expected:
            problems.append(f"{argv} -> {code}")
    names = [n for n in fixture_names() if not n.startswith("broken_")]
    problems += [n for n in names if serialize(parse(fixture_text(n))) != fixture_text(n)]
    argv = ["sweep", "--suite", "full", "--size", "5", "--seed", "3", "--count", "4", "--json"]
    a, b = _cli(*argv), _cli(*argv)
    if a.returncode != 0 or a.stdout != b.stdout or not a.stdout:
        problems.append("sweep --json not reproducible")
    report(12, "exit codes, fixture round trip, reproducible sweep reports", not problems,
           f"{len(names)} fixtures " + "; ".join(problems))
