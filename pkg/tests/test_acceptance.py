"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line (collected again in the
pytest terminal summary).  Run standalone with ``python3 tests/test_acceptance.py``.
"""
from __future__ import annotations

import json
import subprocess
import sys
import time

import numpy as np

from fd2p.algebra import AlgebraContext
from fd2p.constructions import ldu_subspaces, log_span, symmetric_basis, unitary_basis
from fd2p.identities import all_identities, failures
from fd2p import structure as S

try:
    from conftest import ACCEPTANCE_LINES
except ImportError:  # standalone run
    ACCEPTANCE_LINES = []

GRID = [(p, n) for p in (3, 5, 7, 11, 13) for n in (1, 2)]


def report(num: str, title: str, ok: bool, detail: str, elapsed: float, limit: float | None = None):
    within = limit is None or elapsed < limit
    status = "PASS" if ok and within else "FAIL"
    lim = f" (limit {limit:g}s)" if limit is not None else ""
    line = f"{status} criterion {num}: {title}: {detail} [{elapsed:.2f}s{lim}]"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line
    assert within, line


def test_criterion_1_unitary_units_of_one_plus_gamma():
    t0 = time.perf_counter()
    ctx = AlgebraContext.create(3, 1)
    found = S.enumerate_unitary_in_one_plus_gamma(ctx)
    gen = S.closure(unitary_basis(ctx))
    candidates = S.one_plus_gamma_size(ctx)
    ok = candidates == 81 and found.order == 3 and found.elements == gen.elements
    report("1", "unitary units of 1+Gamma(A) by exhaustion, p=3 n=1", ok,
           f"{candidates} candidates, {found.order} unitary, equal to <a>: {found.elements == gen.elements}",
           time.perf_counter() - t0, 1.0)


def test_criterion_2_unitary_units_of_whole_algebra():
    t0 = time.perf_counter()
    ctx = AlgebraContext.create(3, 1)
    us, _ = S.scan_algebra(ctx, count_units=False)
    decs = [S.unitary_decompose(u) for u in us]
    vs = {d.v for d in decs}
    unique = len(set(decs)) == len(us)
    ok = len(us) == 12 and unique and vs == {ctx.one, ctx.a, ctx.a ** 2}
    report("2", "unitary units of F D_6 by exhaustion, p=3 n=1", ok,
           f"{3 ** ctx.dim} elements scanned, {len(us)} unitary, unique v b^e (-1)^d: {unique}, "
           f"v in {{1, a, a^2}}: {vs == {ctx.one, ctx.a, ctx.a ** 2}}", time.perf_counter() - t0, 120.0)


def test_criterion_2b_full_scan_of_3_pow_12_elements():
    # F_9 D_6 is the algebra with 3^12 elements; its unitary count is 4 * 3^2
    t0 = time.perf_counter()
    ctx = AlgebraContext.create(3, 2)
    us, _ = S.scan_algebra(ctx, count_units=False)
    decs = {S.unitary_decompose(u) for u in us}
    ok = len(us) == 36 and len(decs) == 36
    report("2b", "3^12-element scan (p=3 n=2)", ok, f"{3 ** ctx.dim} elements scanned, {len(us)} unitary = 4*3^2",
           time.perf_counter() - t0, 120.0)


def test_criterion_3_order_of_unitary_subgroup():
    t0 = time.perf_counter()
    bad = []
    for p, n in GRID:
        ctx = AlgebraContext.create(p, n)
        r = log_span(ctx, unitary_basis(ctx)).dim
        if r != n * (p - 1) // 2:
            bad.append((p, n, r))
    report("3", "log rank of z_ik = n(p-1)/2 on the grid", not bad, f"{len(GRID) - len(bad)}/{len(GRID)} match",
           time.perf_counter() - t0, 5.0)


def test_criterion_4_center():
    t0 = time.perf_counter()
    bad = []
    for p, n in GRID:
        ctx = AlgebraContext.create(p, n)
        h = S.center_of_one_plus_gamma(ctx)
        if h.subspace.dim != n * (ctx.l + 1):
            bad.append((p, n))
    ctx = AlgebraContext.create(3, 1)
    center = S.brute_force_group_center(ctx)
    sym = S.closure(symmetric_basis(ctx)).elements
    line = {ctx.one + ctx.reflection_class_sum * c for c in range(3)}
    equal = center == {x * y for x in sym for y in line}
    ok = not bad and equal and len(center) == 9
    report("4", "center dimension n(l+1) on the grid; brute-force center at p=3", ok,
           f"{len(GRID) - len(bad)}/{len(GRID)} dims, p=3 center order {len(center)}, = S_* x (1+F A^b): {equal}",
           time.perf_counter() - t0)


def test_criterion_5_quotient_unitary_units():
    t0 = time.perf_counter()
    sizes = []
    for p in (3, 5, 7):
        for n in (1, 2):
            sizes.append(len(S.quotient_unitary_units(AlgebraContext.create(p, n))))
    report("5", "unitary units of F C_2 on {3,5,7}x{1,2}", sizes == [4] * 6, f"counts {sizes}",
           time.perf_counter() - t0)


def test_criterion_6_factorization_and_general_product():
    t0 = time.perf_counter()
    rng = np.random.default_rng(0)
    exact = {}
    balanced = True
    for p in (5, 7):
        for n in (1, 2):
            ctx = AlgebraContext.create(p, n)
            ldu = ldu_subspaces(ctx, over="Fp")
            hits = 0
            for _ in range(1000):
                v = ctx.one + S.random_gamma_element(ctx, rng)
                hits += S.factorization_ok(v, S.pavesic_factorize(v), ldu)
            exact[(p, n)] = hits
            acc = S.general_product_accounting(ctx)
            balanced &= acc.balanced and acc.meet_is_center and acc.w_dim == 3 * n * ctx.l
    cover = S.exhaustive_general_product(AlgebraContext.create(3, 1))
    ok = all(v == 1000 for v in exact.values()) and balanced and cover
    report("6", "Pavesic round trips, order equation, p=3 coverage", ok,
           f"exact {list(exact.values())} of 1000, order equation: {balanced}, W C(a) = 1+Gamma(A): {cover}",
           time.perf_counter() - t0, 30.0)


def test_criterion_7_identity_suites():
    t0 = time.perf_counter()
    total, bad = 0, []
    for p in (5, 7, 11, 13):
        for n in (1, 2):
            for name, ids in all_identities(AlgebraContext.create(p, n)).items():
                total += len(ids)
                bad += [(p, n, name, lab) for lab in failures(ids)]
    report("7", "identity suites on {5,7,11,13}x{1,2}", not bad, f"{total - len(bad)}/{total} identities exact",
           time.perf_counter() - t0)


def test_criterion_8_exponent_and_nilpotency():
    t0 = time.perf_counter()
    rng = np.random.default_rng(8)
    pow_bad = nil_bad = 0
    for p, n in GRID:
        ctx = AlgebraContext.create(p, n)
        for _ in range(256):
            pow_bad += (ctx.one + S.random_gamma_element(ctx, rng)) ** p != ctx.one
        for _ in range(16):
            prod = ctx.one
            for _ in range(p):
                prod = prod * S.random_gamma_element(ctx, rng)
            nil_bad += not prod.is_zero()
    report("8", "v^p = 1 (256 per config) and Gamma(A)^p = 0", pow_bad == 0 and nil_bad == 0,
           f"{pow_bad} exponent violations, {nil_bad} nonzero p-fold products over {len(GRID)} configs",
           time.perf_counter() - t0)


def test_criterion_9_cli_contract():
    t0 = time.perf_counter()
    cmd = [sys.executable, "-m", "fd2p", "verify", "--p", "7", "--n", "1", "--seed", "0", "--report", "-", "--quiet"]
    a = subprocess.run(cmd + ["--no-timings"], capture_output=True)
    b = subprocess.run(cmd + ["--no-timings"], capture_output=True)
    c = subprocess.run(cmd, capture_output=True)
    doc = json.loads(a.stdout)

    def strip(raw):
        d = json.loads(raw)
        for r in d["records"]:
            r["elapsed_ms"] = 0.0
        return d

    same = a.stdout == b.stdout
    same_mod_time = strip(c.stdout) == doc
    passes = doc["summary"]["pass"]
    ok = a.returncode == 0 and c.returncode == 0 and passes >= 20 and same and same_mod_time
    report("9", "verify --p 7 --n 1", ok,
           f"exit {a.returncode}, {passes} pass records, byte-identical: {same}, identical modulo timings: "
           f"{same_mod_time}", time.perf_counter() - t0)


if __name__ == "__main__":
    failed = 0
    for name, fn in list(globals().items()):
        if name.startswith("test_criterion"):
            try:
                fn()
            except AssertionError:
                failed += 1
    sys.exit(1 if failed else 0)
