"""Acceptance gate: one test per criterion, each recording a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v``; the lines are printed in the
"acceptance criteria" section of the terminal summary.
"""

import glob
import json
import os
import random
import subprocess
import sys
import time

import pytest

from linkage import (
    PresentedModule,
    is_horizontally_linked,
    lambda_,
    local_cohomology_dual,
    quotient_ring,
    syzygies,
)
from linkage.cli import main
from linkage.generators import random_monomial_module
from linkage.groebner import postcheck_stats
from linkage.io import load_instance, load_module
from linkage.resolution import projective_dimension_S
from linkage.verify import FAIL, PASS, UNMET, Instance, verify_theorem

from conftest import CORPUS, record

sys.path.insert(0, os.path.dirname(__file__))
from test_properties import regular_sequence_depth  # noqa: E402

MODS = os.path.join(CORPUS, "modules")
INSTS = os.path.join(CORPUS, "instances")
RANDOM = [f"rand{s:02d}" for s in range(20)]


def mod(name):
    return load_module(os.path.join(MODS, name + ".mod"))


def corpus_modules():
    for path in sorted(glob.glob(os.path.join(MODS, "*.mod"))):
        yield os.path.basename(path)[:-4], load_module(path)


def cli_json(*argv, capsys):
    code = main(["--format", "json", *argv])
    out = capsys.readouterr().out
    return code, json.loads(out)


def instance(tag, name):
    t, inst = load_instance(os.path.join(INSTS, f"{tag}__{name}.toml"))
    assert t == tag
    return inst


def test_hypersurface_link(capsys):
    t0 = time.perf_counter()
    path_x = os.path.join(MODS, "hyp_x.mod")
    path_y = os.path.join(MODS, "hyp_y.mod")
    code, lam = cli_json("lambda", path_x, capsys=capsys)
    _, inv_y = cli_json("invariants", path_y, capsys=capsys)
    same = lam["betti"] == inv_y["betti"] and lam["hilbert"] == inv_y["hilbert"]
    cx, cert_x = cli_json("link-check", path_x, capsys=capsys)
    cy, cert_y = cli_json("link-check", path_y, capsys=capsys)
    M = mod("hyp_x")
    twice = lambda_(lambda_(M)).fingerprint == M.fingerprint
    dt = time.perf_counter() - t0
    ok = code == 0 and same and cx == cy == 0 and cert_x["verdict"] and cert_y["verdict"] and twice and dt < 1
    record(1, ok, f"lambda(R/x) ~ R/y over k[x,y]/(xy), both linked, lambda^2 = id; {dt:.2f}s")
    assert ok


def test_residue_field_not_linked(capsys):
    t0 = time.perf_counter()
    code, cert = cli_json("link-check", os.path.join(MODS, "k2.mod"), capsys=capsys)
    rep = verify_theorem("cor-3.2", instance("cor-3.2", "k2"))
    dt = time.perf_counter() - t0
    length = cert["obstruction"]["length"]
    ok = code == 1 and not cert["verdict"] and length == 1 and rep.verdict == PASS
    ok = ok and rep.evidence["gamma_zero"] is False and dt < 1
    record(2, ok, f"k over k[x,y]: not linked, obstruction length {length}, linkage criterion {rep.verdict}; {dt:.2f}s")
    assert ok


def test_three_way_equivalence():
    t0 = time.perf_counter()
    reps = [verify_theorem("thm-2.5", instance("thm-2.5", n)) for n in RANDOM]
    dt = time.perf_counter() - t0
    agree = all(r.verdict == PASS for r in reps)
    agree = agree and all(r.evidence["cond_i"] == r.evidence["cond_ii"] == r.evidence["cond_iii"] for r in reps)
    true_count = sum(r.evidence["cond_i"] for r in reps)
    ok = agree and len(reps) >= 20 and dt < 120
    record(3, ok, f"{len(reps)} random modules over k[x,y,z], (i)=(ii)=(iii) on all ({true_count} SDE); {dt:.1f}s")
    assert ok


def test_sequentially_cm_criteria_agree():
    t0 = time.perf_counter()
    reps = [verify_theorem("cor-2.8", instance("cor-2.8", n)) for n in RANDOM]
    same = all(r.verdict == PASS and r.evidence["seqcm_ext"] == r.evidence["seqcm_linkage"] for r in reps)
    x2xy = verify_theorem("cor-2.8", instance("cor-2.8", "x2xy"))
    from linkage import is_cm

    special = x2xy.evidence["seqcm_ext"] is True and not is_cm(mod("x2xy")).verdict
    dt = time.perf_counter() - t0
    ok = same and special and dt < 120
    record(4, ok, f"Ext and linkage criteria agree on {len(reps)}/{len(reps)}; S/(x^2,xy) seq-CM, not CM; {dt:.1f}s")
    assert ok


def test_exact_sequence_e():
    checked, bad, pieces = 0, [], 0
    for name, M in corpus_modules():
        rep = verify_theorem("seq-e", Instance(name, M))
        if rep.verdict == UNMET:
            continue
        checked += 1
        rows = rep.evidence["indices"]
        pieces += len(rows)
        if rep.verdict != PASS or not all(r["exact"] and r["hilbert_additive"] for r in rows):
            bad.append(name)
    ok = checked >= 20 and not bad
    record(5, ok, f"0 -> Ext^i -> T_i -> lambda^2 T_i -> 0 exact with additive Hilbert series on "
                  f"{checked} modules, {pieces} indices" + (f"; failures {bad}" if bad else ""))
    assert ok


def test_depth_after_linkage():
    sde, mcm_sde, bad = 0, 0, []
    for name, M in corpus_modules():
        r23 = verify_theorem("prop-2.3", Instance(name, M))
        if r23.verdict != UNMET:
            sde += 1
            if r23.verdict != PASS:
                bad.append(("depth", name))
        r24 = verify_theorem("cor-2.4", Instance(name, M))
        if r24.verdict != UNMET:
            mcm_sde += 1
            if r24.verdict != PASS:
                bad.append(("mcm", name))
    ok = sde >= 20 and mcm_sde >= 3 and not bad
    record(6, ok, f"depth(lambda M) >= min(depth M, depth R) on {sde} SDE modules; "
                  f"lambda M MCM on {mcm_sde} MCM+SDE modules" + (f"; failures {bad}" if bad else ""))
    assert ok


@pytest.mark.xfail(
    strict=True,
    reason="omega and R/(a^2, bd) over the twisted cubic are CME but have Tor_1(M, omega) != 0; "
    "CME only controls Ext^1 when d = 2, while Ext^2..4(M, R) do not vanish",
)
def test_cme_tensor_criterion_on_twisted_cubic():
    t0 = time.perf_counter()
    names = ["cubic_free", "cubic_a", "cubic_m", "cubic_omega", "cubic_rand"]
    reps = {n: verify_theorem("thm-2.11", instance("thm-2.11", n)) for n in names}
    dt = time.perf_counter() - t0
    fails = [n for n, r in reps.items() if r.verdict != PASS]
    ok = not fails and dt < 300
    detail = ", ".join(f"{n}: cme={r.evidence['cme']} rhs={r.evidence['tensor_seqcm'] and all(r.evidence['tor_vanishing'])}"
                       for n, r in reps.items())
    record(7, ok, f"twisted cubic, {len(names)} modules [{detail}]; {dt:.1f}s" +
           (f"; counterexamples {fails}" if fails else ""))
    assert ok


def test_duality_shadow():
    names = ["ci_planes", "m3", "cubic_m", "triangles", "sr_free", "sr_over_hyp4"]
    reps = {n: verify_theorem("thm-3.3", instance("thm-3.3", n)) for n in names}
    passed = [n for n, r in reps.items() if r.verdict == PASS]
    failed = [n for n, r in reps.items() if r.verdict == FAIL]
    # non-CM modules among the passing ones
    non_cm = [n for n in passed if any(row["H_i_tensor"] for row in reps[n].evidence["indices"])]
    ok = len(passed) >= 3 and not failed and "triangles" in non_cm
    unmet = [n for n, r in reps.items() if r.verdict == UNMET]
    record(8, ok, f"H^i(M(x)omega) = reversed H^(d-i)(lambda M) on {passed} (non-CM: {non_cm}); "
                  f"hypotheses not met: {unmet}")
    assert ok


def test_lambda_local_cohomology():
    reps = []
    for name, M in corpus_modules():
        r = verify_theorem("cor-3.4", Instance(name, M))
        if r.verdict != UNMET:
            reps.append((name, r))
    ok = len(reps) >= 3 and all(r.verdict == PASS and r.evidence["lambda_gcm"] for _, r in reps)
    record(9, ok, f"H^i(lambda M) = Ext^i(M,R) and lambda M generalized CM on {[n for n, _ in reps]}")
    assert ok


def test_biduality_four_term_sequence():
    reps = []
    for name, M in corpus_modules():
        r = verify_theorem("prop-3.1", Instance(name, M))
        if r.verdict != UNMET:
            reps.append((name, r))
    bad = [n for n, r in reps if r.verdict != PASS]
    nontrivial = [n for n, r in reps if r.evidence.get("kernel") or r.evidence.get("cokernel")]
    ok = len(reps) >= 3 and not bad and nontrivial
    record(10, ok, f"0 -> Gamma(M) -> M -> M^vv -> H^1(M) -> 0 exact on {len(reps)} modules "
                   f"(nonzero ends on {nontrivial})" + (f"; failures {bad}" if bad else ""))
    assert ok


def _random_matrix(rng, ring):
    from test_properties import monomials
    from linkage import GradedMatrix

    amb = ring.ambient
    r, c = rng.randint(1, 2), rng.randint(1, 3)
    source = [rng.randint(1, 2) for _ in range(c)]
    cols = []
    for j in range(c):
        col = {}
        lead = rng.randrange(r)
        for i in range(r):
            mons = monomials(amb.n, source[j])
            k = rng.randint(1 if i == lead else 0, 3)
            for e in rng.sample(mons, k):
                col[amb.key(e, i)] = amb.coef(rng.choice([-3, -2, -1, 1, 2, 3]))
        cols.append(col)
    return GradedMatrix(amb, [0] * r, source, cols)


def test_engine_soundness():
    t0 = time.perf_counter()
    before = postcheck_stats()["bases"]
    rng = random.Random(20240611)
    S = quotient_ring("x y z")
    syz_ok = 0
    for _ in range(50):
        f = _random_matrix(rng, S)
        if f.compose(syzygies(f, S)).is_zero():
            syz_ok += 1
    ab_ok = gr_ok = 0
    mods = [PresentedModule(S, _random_matrix(rng, S)) for _ in range(20)]
    for M in mods:
        if M.is_zero() or regular_sequence_depth(M) + projective_dimension_S(M) == 3:
            ab_ok += 1
    for seed in range(100, 120):
        M = random_monomial_module(seed, S, 3, 4)
        nz = [i for i in range(4) if not local_cohomology_dual(i, M).is_zero()]
        if min(nz) == regular_sequence_depth(M) and max(nz) == M.dim:
            gr_ok += 1
    checked = postcheck_stats()["bases"] - before
    dt = time.perf_counter() - t0
    ok = syz_ok == 50 and ab_ok == 20 and gr_ok == 20 and checked > 0 and dt < 180
    record(11, ok, f"f*syz(f)=0 {syz_ok}/50, depth+pd=n {ab_ok}/20, Grothendieck bounds {gr_ok}/20, "
                   f"S-pair post-check on every basis ({postcheck_stats()['bases']} so far); {dt:.1f}s")
    assert ok


def test_corpus_run_is_deterministic():
    cmd = [sys.executable, "-m", "linkage.cli", "--format", "json", "--seed", "0", "verify", "--all", INSTS]
    outs = []
    for hashseed in ("1", "2"):
        env = dict(os.environ, PYTHONHASHSEED=hashseed)
        env.pop("LINKAGE_POSTCHECK", None)
        p = subprocess.run(cmd, capture_output=True, env=env)
        outs.append(p)
    a, b = outs
    same = a.stdout == b.stdout and len(a.stdout) > 0
    summary = json.loads(a.stdout)["summary"] if same else {}
    count = json.loads(a.stdout)["count"] if same else 0
    ok = same and a.returncode == b.returncode
    record(12, ok, f"two 'lk verify --all' runs over {count} instances byte-identical "
                   f"({len(a.stdout)} bytes; {summary})")
    assert ok
