"""Acceptance criteria 1-10. Each prints one PASS/FAIL line.

Run with pytest (lines appear in the terminal summary) or directly:
``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import itertools
import json
import random
import subprocess
import sys
import tempfile
import time
from fractions import Fraction as F
from pathlib import Path

import pytest

from torsheaf.cli import main as cli_main
from torsheaf.cones import curve_basis_pairing, curve_dot, effective_cone, interpolation_check, interpolation_criterion
from torsheaf.kclass import ChernCharacter, onedim
from torsheaf.moduli import ModuliSpace, exceptional_fiber_dimension, is_isomorphic
from torsheaf.picard import L0, same_ray
from torsheaf.report import analyze
from torsheaf.stability import (
    Destabilizer,
    StabilityPoint,
    Wall,
    bm_curve_degree,
    enumerate_rank_one_walls,
    jh_factors,
    largest_wall,
    nef_cone,
    potential_wall,
    rank_radius_bound,
)

GOLDEN = Path(__file__).parent / "golden"
NORMALIZED = [(mu, chi) for mu in range(3, 13) for chi in range(mu // 2 + 1)]
RESULTS: dict[int, tuple[bool, str]] = {}


def record(n: int, failures: list[str], ok_detail: str) -> None:
    ok = not failures
    detail = ok_detail if ok else "; ".join(failures[:5]) + (f" (+{len(failures) - 5} more)" if len(failures) > 5 else "")
    RESULTS[n] = (ok, detail)
    print(f"criterion {n:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
    assert ok, detail


def test_criterion_01_n41_goldens():
    s = ModuliSpace(4, 1)
    rep = largest_wall(s)
    fails = []
    if rep.wall != Wall(F(-5, 4), F(49, 16)):
        fails.append(f"wall {rep.wall}")
    if rep.primary_destabilizer != Destabilizer.ideal(1, 1):
        fails.append(f"destabilizer {rep.primary_destabilizer}")
    if jh_factors(s)[0].factors != (Destabilizer.ideal(1, 1), Destabilizer.shifted_line(-3)):
        fails.append("JH factors")
    if effective_cone(s).to_json()["rays"] != [[1, 0], [3, -1]]:
        fails.append(f"effective {effective_cone(s).to_json()}")
    if nef_cone(s).to_json()["rays"] != [[1, 0], [6, -1]]:
        fails.append(f"nef {nef_cone(s).to_json()}")
    if exceptional_fiber_dimension(s) != 1:
        fails.append("fiber dimension")
    record(1, fails, "N(4,1): wall -5/4 r^2 49/16, I_W(1) |W|=1, rays (3,-1)/(6,-1), fiber dim 1")


def test_criterion_02_n31():
    s = ModuliSpace(3, 1)
    rep = largest_wall(s)
    fails = []
    if not (nef_cone(s).ray_b == effective_cone(s).ray_b and (nef_cone(s).ray_b.l0, nef_cone(s).ray_b.l1) == (2, -1)):
        fails.append(f"nef {nef_cone(s).ray_b} effective {effective_cone(s).ray_b}")
    if rep.primary_destabilizer != Destabilizer.line(0):
        fails.append(f"destabilizer {rep.primary_destabilizer}")
    if rep.wall != Wall(F(-7, 6), F(49, 36)):
        fails.append(f"wall {rep.wall}")
    record(2, fails, "N(3,1): nef = effective = (2,-1), O(0), wall -7/6 r^2 49/36")


def test_criterion_03_concentricity():
    rng = random.Random(20261017)
    fails, walls = [], 0
    for mu, chi in NORMALIZED:
        c = onedim(mu, chi)
        center = F(chi, mu) - F(3, 2)
        for _ in range(200):
            e0 = rng.choice([i for i in range(-8, 9) if i])
            e = ChernCharacter(e0, rng.randint(-40, 40), F(rng.randint(-200, 200), 2))
            w = potential_wall(c, e)
            if isinstance(w, Wall):
                walls += 1
                if w.center != center:
                    fails.append(f"({mu},{chi}) e={e}: center {w.center}")
    record(3, fails, f"{walls} non-empty walls over {len(NORMALIZED)} spaces, all centered at chi/mu - 3/2")


def test_criterion_04_cone_containment():
    fails = []
    for mu, chi in NORMALIZED:
        s = ModuliSpace(mu, chi)
        eff, nef = effective_cone(s), nef_cone(s)
        if not eff.contains(nef.ray_b):
            fails.append(f"({mu},{chi}) nef {nef.ray_b.as_ray()} outside effective")
        elif mu == 3 and not same_ray(nef.ray_b, eff.ray_b):
            fails.append(f"({mu},{chi}) nef {nef.ray_b.as_ray()} != effective {eff.ray_b.as_ray()}")
        elif mu >= 4 and not eff.strictly_contains(nef.ray_b):
            fails.append(f"({mu},{chi}) nef {nef.ray_b.as_ray()} on boundary of effective")
    record(4, fails, "nef inside effective; equal rays at mu=3, strictly interior for mu>=4")


def test_criterion_05_wall_bounds():
    fails = []
    for mu, chi in NORMALIZED:
        s = ModuliSpace(mu, chi)
        top = largest_wall(s).wall.radius_sq
        for w, d in enumerate_rank_one_walls(s, F(1, 4), 2 * mu):
            if w.radius_sq > top:
                fails.append(f"({mu},{chi}) {d} r^2 {w.radius_sq} > {top}")
        if not rank_radius_bound(mu, 2) ** 2 < top:
            fails.append(f"({mu},{chi}) rank-2 bound not below {top}")
    record(5, fails, "rank-one walls never exceed the largest wall; rank-2 bound strictly below")


def test_criterion_06_boundary_case():
    fails, seen = [], []
    for mu in range(4, 13, 2):
        for chi in range(mu // 2 + 1):
            s = ModuliSpace(mu, chi)
            if not s.boundary_case:
                continue
            seen.append((mu, chi))
            rep = largest_wall(s)
            c = onedim(mu, chi)
            walls = [potential_wall(c, rep.primary_destabilizer.chern)] + [
                potential_wall(c, a.chern) for a in rep.alternates
            ]
            if len(walls) < 2 or any(w != walls[0] for w in walls) or any(w != rep.wall for w in walls):
                fails.append(f"({mu},{chi}) alternate walls differ: {walls}")
            coll = [fl.factors for fl in jh_factors(s) if fl.case == "collinear"]
            expect = (
                Destabilizer.line(s.b - 1),
                Destabilizer.shifted_line(s.b - mu),
                Destabilizer.line_on_line(s.b - mu // 2),
            )
            if coll != [expect]:
                fails.append(f"({mu},{chi}) collinear factors {coll}")
    if not seen:
        fails.append("no boundary cases found")
    record(6, fails, f"boundary cases {seen}: identical walls and three collinear factors")


def test_criterion_07_interpolation():
    fails = []
    for a in (F(0), F(1, 2), F(3, 5), F(8, 13)):
        if not interpolation_criterion(a).passes:
            fails.append(f"rejects {a}")
    f, g = 0, 1
    while g <= 100:
        if not interpolation_criterion(F(f, g)).passes:
            fails.append(f"rejects {f}/{g}")
        f, g = g, f + g
    if interpolation_criterion(F(7, 12)).passes:
        fails.append("accepts 7/12")
    if interpolation_check(ModuliSpace(12, 5)).passes:
        fails.append("N(12,5) passes")
    record(7, fails, "printed list and Fibonacci ratios accepted, 7/12 rejected")


def test_criterion_08_isomorphism():
    fails = []
    pts = [(mu, chi) for mu in range(1, 9) for chi in range(-16, 17)]
    iso = {(p, q): is_isomorphic(*p, *q).isomorphic for p in pts for q in pts if p[0] == q[0]}
    for p in pts:
        if not is_isomorphic(*p, *p).isomorphic:
            fails.append(f"not reflexive at {p}")
    for (p, q), v in iso.items():
        if iso[(q, p)] != v:
            fails.append(f"not symmetric {p} {q}")
    by_mu = {}
    for p in pts:
        by_mu.setdefault(p[0], []).append(p)
    for group in by_mu.values():
        for p, q, r in itertools.product(group, repeat=3):
            if iso[(p, q)] and iso[(q, r)] and not iso[(p, r)]:
                fails.append(f"not transitive {p} {q} {r}")
    for p in pts:
        for q in pts:
            if p[0] != q[0] and is_isomorphic(*p, *q).isomorphic:
                fails.append(f"different mu isomorphic {p} {q}")
                break
    if not is_isomorphic(3, 1, 3, 2).isomorphic:
        fails.append("(3,1) !~ (3,2)")
    if is_isomorphic(4, 1, 4, 2).isomorphic:
        fails.append("(4,1) ~ (4,2)")
    if not is_isomorphic(2, 0, 2, 1).isomorphic:
        fails.append("(2,0) !~ (2,1)")
    reports = {}
    for mu, chi in pts:
        rep = analyze(mu, chi).to_json()
        # chi and chi_normalized echo the input; everything else must agree
        rep.pop("chi")
        rep.pop("chi_normalized")
        reports[(mu, chi)] = json.dumps(rep, sort_keys=True)
    for (p, q), v in iso.items():
        if v and reports[p] != reports[q]:
            fails.append(f"reports differ on {p} ~ {q}")
    record(8, fails, f"{len(iso)} pairs: equivalence relation, examples, report invariance")


def test_criterion_09_moving_curve():
    fails = []
    for mu, chi in NORMALIZED:
        s = ModuliSpace(mu, chi)
        if not interpolation_check(s).passes:
            continue
        pairing = curve_basis_pairing(s)
        eff = effective_cone(s)
        if curve_dot(pairing, eff.ray_b) != 0:
            fails.append(f"({mu},{chi}) C.D = {curve_dot(pairing, eff.ray_b)}")
        if curve_dot(pairing, L0) != 1:
            fails.append(f"({mu},{chi}) C.L0 = {curve_dot(pairing, L0)}")
    bm = bm_curve_degree(ModuliSpace(4, 1), ChernCharacter(1, 0, 0), StabilityPoint(F(-5, 4), F(49, 16)))
    if bm != F(3, 28):
        fails.append(f"bm degree {bm}")
    record(9, fails, "C.D = 0 and C.L0 = 1 wherever interpolation holds; bm degree 3/28 at N(4,1)")


def test_criterion_10_cli_goldens():
    fails = []
    cmds = {
        "analyze_4_1.json": ["analyze", "4", "1", "--json"],
        "walls_4_1.txt": ["walls", "4", "1"],
        "iso_4_1_4_2.txt": ["iso", "4", "1", "4", "2"],
    }
    for name, args in cmds.items():
        r = subprocess.run([sys.executable, "-m", "torsheaf", *args], capture_output=True)
        if r.stdout != (GOLDEN / name).read_bytes():
            fails.append(f"{name} differs")
    with tempfile.TemporaryDirectory() as tmp:
        out = Path(tmp) / "b5.jsonl"
        cli_main(["batch", "5", "--out", str(out)])
        if out.read_bytes() != (GOLDEN / "batch_5.jsonl").read_bytes():
            fails.append("batch_5.jsonl differs")
        start = time.perf_counter()
        rc = cli_main(["batch", "12", "--out", str(Path(tmp) / "b12.jsonl")])
        elapsed = time.perf_counter() - start
    if rc != 0 or elapsed >= 5:
        fails.append(f"batch 12 rc={rc} in {elapsed:.2f}s")
    record(10, fails, f"four goldens byte-identical; batch 12 in {elapsed:.2f}s")


@pytest.fixture(scope="session", autouse=True)
def _summary():
    yield
    if RESULTS:
        print("\nacceptance summary: " + " ".join(f"{n}:{'PASS' if ok else 'FAIL'}" for n, (ok, _) in sorted(RESULTS.items())))


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_criterion_")]
    failed = 0
    for t in tests:
        try:
            t()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
