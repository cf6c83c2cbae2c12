"""Exit criteria for the package, one test per criterion.

Each test records a PASS/FAIL line that is printed in the terminal summary.
Instance generation is seeded, so every run checks the same instances.
"""

import random
import subprocess
import sys
import time
from functools import lru_cache

import numpy as np
import pytest

from gbelief import (
    Frame,
    classical_bel,
    classical_pl,
    commitment_table,
    from_classical,
    gbel,
    gbel_table,
    gpl,
    gpl_table,
    mobius_invert,
    random_bba,
    random_cbba,
)
from gbelief.errors import FrameTooLarge
from gbelief.transforms import _require_naive, axiom3_check, gpl_direct, naive_gbel_table, tables

import oracles

SLACK = 1e-12


def _focal_count(rng, n, cap=32):
    return rng.randint(1, min((1 << n) - 1, cap))


@lru_cache(maxsize=None)
def classical_instances():
    out = []
    for i in range(1000):
        rng = random.Random(10_000 + i)
        n = 1 + i % 8
        out.append(random_bba(Frame.of_size(n), _focal_count(rng, n), rng.randrange(2**32)))
    return tuple(out)


@lru_cache(maxsize=None)
def complex_instances():
    out = []
    for i in range(500):
        rng = random.Random(20_000 + i)
        n = 1 + i % 10
        out.append(random_cbba(Frame.of_size(n), _focal_count(rng, n), rng.randrange(2**32)))
    return tuple(out)


def test_criterion_1_degeneration(record_criterion):
    start = time.perf_counter()
    worst_bel = worst_pl = 0.0
    for bba in classical_instances():
        cbba = from_classical(bba)
        bel, pl = gbel_table(cbba).values, gpl_table(cbba).values
        for b in range(1 << bba.frame.size):
            a = bba.frame.from_bits(b)
            ref_bel, ref_pl = classical_bel(bba, a), classical_pl(bba, a)
            worst_bel = max(worst_bel, abs(bel[b] - ref_bel), abs(gbel(cbba, a) - ref_bel))
            worst_pl = max(worst_pl, abs(pl[b] - ref_pl), abs(gpl(cbba, a) - ref_pl))
    elapsed = time.perf_counter() - start
    passed = worst_bel <= 1e-12 and worst_pl <= 1e-12 and elapsed < 10
    record_criterion(1, passed, f"degeneration over 1000 BBAs, max|dBel|={worst_bel:.2e} max|dPl|={worst_pl:.2e}, {elapsed:.2f}s")
    assert worst_bel <= 1e-12 and worst_pl <= 1e-12
    assert elapsed < 10


def test_criterion_2_mobius_round_trip(record_criterion):
    start = time.perf_counter()
    worst = 0.0
    for cbba in complex_instances():
        com = commitment_table(cbba).values
        back = mobius_invert(gbel_table(cbba)).values
        worst = max(worst, float(np.max(np.abs(back - com))))
    elapsed = time.perf_counter() - start
    passed = worst <= 1e-10 and elapsed < 30
    record_criterion(2, passed, f"Mobius round trip over 500 CBBAs, max error {worst:.2e}, {elapsed:.2f}s")
    assert worst <= 1e-10
    assert elapsed < 30


def test_criterion_3_axioms_1_2(record_criterion):
    generated = list(complex_instances()) + [from_classical(b) for b in classical_instances()]
    empty_exact = True
    full_gap = 0.0
    for cbba in generated:
        frame = cbba.frame
        bel = gbel_table(cbba).values
        empty_exact &= bel[0] == 0.0 and gbel(cbba, frame.empty) == 0.0
        full_gap = max(full_gap, abs(bel[-1] - 1.0), abs(gbel(cbba, frame.full) - 1.0))
    passed = bool(empty_exact) and full_gap <= 1e-9
    record_criterion(3, passed, f"Bel(empty)=0 exactly: {bool(empty_exact)}, max|Bel(full)-1|={full_gap:.2e} over {len(generated)} CBBAs")
    assert empty_exact
    assert full_gap <= 1e-9


def axiom3_instances(count=10_000):
    for i in range(count):
        rng = random.Random(1_000_000 + i)
        n = rng.randint(1, 6)
        frame = Frame.of_size(n)
        cbba = random_cbba(frame, rng.randint(1, min((1 << n) - 1, 8)), rng.randrange(2**32))
        m = rng.choice([2, 3, 4])
        sets = [frame.from_bits(rng.randrange(1 << n)) for _ in range(m)]
        yield i, cbba, sets


def test_criterion_4_axiom3_sweep(record_criterion, tmp_path_factory):
    start = time.perf_counter()
    counterexamples = []
    for i, cbba, sets in axiom3_instances():
        result = axiom3_check(cbba, sets, tolerance=1e-12, form="com")
        if not result.holds:
            counterexamples.append(
                f"instance {i}: {cbba!r} sets={[cbba.frame.labels_of(a) for a in sets]} "
                f"lhs={result.lhs!r} rhs={result.rhs!r}"
            )
    elapsed = time.perf_counter() - start
    log = tmp_path_factory.mktemp("axiom3") / "counterexamples.txt"
    log.write_text("".join(line + "\n" for line in counterexamples))
    for line in counterexamples:
        print("axiom3 counterexample:", line)
    passed = not counterexamples and elapsed < 60
    record_criterion(
        4, passed,
        f"Axiom 3 (Com form) over 10000 instances: {len(counterexamples)} counterexamples (log: {log}), {elapsed:.2f}s",
    )
    assert not counterexamples, "\n".join(counterexamples)
    assert elapsed < 60


def test_criterion_5_fast_naive_agreement(record_criterion):
    worst_bel = worst_mob = 0.0
    for n in range(1, 13):
        for seed in range(2 if n < 12 else 1):
            rng = random.Random(30_000 + 100 * n + seed)
            cbba = random_cbba(Frame.of_size(n), _focal_count(rng, n, cap=64), rng.randrange(2**32))
            fast = gbel_table(cbba)
            naive = naive_gbel_table(cbba)
            worst_bel = max(worst_bel, float(np.max(np.abs(fast.values - naive.values))))
            mob_fast = mobius_invert(fast, method="fast").values
            mob_naive = mobius_invert(fast, method="naive").values
            worst_mob = max(worst_mob, float(np.max(np.abs(mob_fast - mob_naive))))
    passed = worst_bel <= 1e-12 and worst_mob <= 1e-10
    record_criterion(5, passed, f"N<=12 zeta vs pointwise {worst_bel:.2e}, fast vs literal Mobius {worst_mob:.2e}")
    assert worst_bel <= 1e-12
    assert worst_mob <= 1e-10


def test_criterion_6_duality_and_bounds(record_criterion):
    worst_dual = 0.0
    bounds_ok = True
    for cbba in complex_instances():
        frame = cbba.frame
        com, bel, pl = (t.values for t in tables(cbba))
        worst_dual = max(worst_dual, float(np.max(np.abs(pl[1:] - (1.0 - bel[::-1][1:])))))
        bounds_ok &= bool(np.all(bel >= -SLACK) and np.all(bel <= pl + SLACK) and np.all(pl <= 1.0 + SLACK))
        if frame.size <= 6:
            for b in range(1 << frame.size):
                a = frame.from_bits(b)
                p = gpl(cbba, a)
                if a:
                    worst_dual = max(worst_dual, abs(p - (1.0 - gbel(cbba, ~a))))
                worst_dual = max(worst_dual, abs(p - gpl_direct(cbba, a)))
    passed = worst_dual <= 1e-12 and bounds_ok
    record_criterion(6, passed, f"duality max error {worst_dual:.2e}, 0<=Bel<=Pl<=1 (slack {SLACK:g}): {bounds_ok}")
    assert worst_dual <= 1e-12
    assert bounds_ok


def test_criterion_7_worked_goldens(record_criterion, worked, frame_ab):
    p = frame_ab.proposition
    com = [worked.commitment(p(s)) for s in ["a", "b", "ab"]]
    expected_com = [float(oracles.WORKED_COM[frozenset(s)]) for s in ["a", "b", "ab"]]
    assert expected_com == pytest.approx([5 / 14, 5 / 14, 2 / 7], abs=1e-15)
    errors = [abs(x - y) for x, y in zip(com, expected_com)]
    errors += [abs(gbel(worked, p("a")) - 5 / 14), abs(gpl(worked, p("a")) - 9 / 14)]
    errors += [abs(gbel_table(worked)[p("a")] - 5 / 14), abs(gpl_table(worked)[p("a")] - 9 / 14)]
    errors += list(np.abs(commitment_table(worked).values[1:] - expected_com))
    worst = max(errors)
    record_criterion(7, worst <= 1e-12, f"worked example Com/Bel/Pl max error {worst:.2e}")
    assert worst <= 1e-12


def test_criterion_8_performance(record_criterion):
    frame = Frame.of_size(20)
    cbba = random_cbba(frame, 200, 8)
    start = time.perf_counter()
    com, bel, pl = tables(cbba)
    elapsed = time.perf_counter() - start
    assert len(com) == len(bel) == len(pl) == 1 << 20
    guard = False
    try:
        naive_gbel_table(random_cbba(Frame.of_size(15), 3, 0))
    except FrameTooLarge:
        guard = True
    # the limit itself is allowed; check the guard rather than running 3**14 terms
    try:
        _require_naive(14)
        naive_ok_at_14 = True
    except FrameTooLarge:
        naive_ok_at_14 = False
    passed = elapsed < 5 and guard and naive_ok_at_14
    record_criterion(8, passed, f"N=20 com/bel/pl tables in {elapsed:.3f}s; naive path refused above N=14: {guard}")
    assert elapsed < 5
    assert guard and naive_ok_at_14


def _cli(*args):
    return subprocess.run([sys.executable, "-m", "gbelief", *map(str, args)], capture_output=True)


def test_criterion_9_cli_end_to_end(record_criterion, fixtures_dir, tmp_path):
    runs = []
    for attempt in range(2):
        d = tmp_path / f"run{attempt}"
        d.mkdir()
        v = _cli("validate", fixtures_dir / "worked.json")
        t = _cli("table", fixtures_dir / "worked.json", "--out", d / "table.csv")
        tj = _cli("table", fixtures_dir / "worked.json", "--format", "json", "--out", d / "table.json")
        i = _cli("invert", d / "table.csv", "--out", d / "com.csv")
        codes = (v.returncode, t.returncode, tj.returncode, i.returncode)
        runs.append((codes, v.stdout, (d / "table.csv").read_bytes(), (d / "table.json").read_bytes(), (d / "com.csv").read_bytes()))
    deterministic = runs[0] == runs[1]
    codes_ok = runs[0][0] == (0, 0, 0, 0)
    com_rows = [line.split(",")[1] for line in runs[0][4].decode().splitlines()[1:]]
    round_trip = np.allclose([float(x) for x in com_rows], [0, 5 / 14, 5 / 14, 2 / 7], atol=1e-10)
    degenerate = _cli("degenerate", fixtures_dir / "classical.json")
    passed = deterministic and codes_ok and round_trip and degenerate.returncode == 0
    record_criterion(
        9, passed,
        f"CLI validate/table/invert byte-identical across runs: {deterministic}, round trip: {bool(round_trip)}, "
        f"degenerate exit {degenerate.returncode}",
    )
    assert codes_ok and deterministic and round_trip
    assert degenerate.returncode == 0, degenerate.stderr
