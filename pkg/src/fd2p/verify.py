"""Check registry and JSON report for one (p, n, f) configuration.

Every check gets its own generator seeded from (seed, check_id), so skipping
or reordering checks never changes the samples another check sees.
"""
from __future__ import annotations

import json
import time
import zlib
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from . import __version__
from .algebra import (AlgebraContext, QuotientElement, in_gamma_A, invert_unit, is_symmetric, is_unitary,
                      psi, theta)
from .constructions import (BasisCatalog, center_basis, d_block_basis, gamma_basis, ldu_subspaces,
                            log_span, omega, omega_prime, span_f, span_fp, symmetric_basis, truncated_log,
                            unitary_basis)
from .errors import BoundExceeded
from .fields import is_irreducible
from .identities import all_identities, failures
from .linalg import kernel
from . import structure as st

# Python-level loops over whole groups (pairwise commutation, per-element
# factorization) are far slower than the compiled scans; keep them small.
PY_LOOP_BOUND = 10 ** 4


class Skip(Exception):
    """Raised by a check that does not apply at this scale."""


@dataclass
class Session:
    ctx: AlgebraContext
    seed: int = 0
    bound: int = st.GROUP_BOUND
    algebra_bound: int = st.ALGEBRA_BOUND
    samples: int = 256
    factorizations: int = 200
    cache: dict = field(default_factory=dict)

    def rng(self, check_id: str) -> np.random.Generator:
        return np.random.default_rng([self.seed, zlib.crc32(check_id.encode())])

    def memo(self, key: str, fn: Callable):
        if key not in self.cache:
            self.cache[key] = fn()
        return self.cache[key]


@dataclass
class CheckRecord:
    check_id: str
    paper_ref: str
    params: dict
    status: str
    reason: str | None
    expected: str
    actual: str
    elapsed_ms: float

    def to_dict(self) -> dict:
        return dict(self.__dict__)


@dataclass
class CheckReport:
    params: dict
    seed: int
    records: list[CheckRecord]
    version: str = __version__

    @property
    def summary(self) -> dict:
        counts = {"pass": 0, "fail": 0, "skipped": 0}
        for r in self.records:
            counts[r.status] += 1
        counts["total"] = len(self.records)
        return counts

    @property
    def ok(self) -> bool:
        return self.summary["fail"] == 0

    def to_dict(self) -> dict:
        return {"tool": "fd2p", "version": self.version, "seed": self.seed, "params": self.params,
                "summary": self.summary, "records": [r.to_dict() for r in self.records]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    def failed(self) -> list[CheckRecord]:
        return [r for r in self.records if r.status == "fail"]


Check = Callable[[Session], tuple]
REGISTRY: list[tuple[str, str, Check]] = []


def check(check_id: str, paper_ref: str):
    def deco(fn: Check) -> Check:
        REGISTRY.append((check_id, paper_ref, fn))
        return fn
    return deco


def _need(size: int, bound: int, what: str):
    if size > bound:
        raise Skip(f"{what}: {size} exceeds bound {bound}")


# -- field and algebra ---------------------------------------------------------

@check("field.irreducible", "Introduction")
def _field(s: Session):
    fp = s.ctx.field
    return "f irreducible of degree n", f"degree {len(fp.f) - 1}, irreducible={is_irreducible(fp.f, fp.p)}", \
        len(fp.f) - 1 == fp.n and is_irreducible(fp.f, fp.p)


@check("algebra.presentation", "D_2p presentation")
def _presentation(s: Session):
    c = s.ctx
    a, b = c.a, c.b
    group = {c.group_element(i, j) for i in range(c.p) for j in range(2)}
    ok = a ** c.p == c.one and b ** 2 == c.one and invert_unit(b) * a * b == invert_unit(a) and len(group) == 2 * c.p
    return f"a^p = b^2 = 1, b^-1 a b = a^-1, |G| = {2 * c.p}", f"{len(group)} distinct group elements", ok


@check("algebra.involution", "Introduction")
def _involution(s: Session):
    c, rng = s.ctx, s.rng("algebra.involution")
    bad = 0
    for _ in range(s.samples // 4):
        x = c.from_vector(rng.integers(0, c.p, c.dim))
        y = c.from_vector(rng.integers(0, c.p, c.dim))
        bad += (x * y).star() != y.star() * x.star() or x.star().star() != x
    return "(xy)* = y*x*, x** = x", f"{bad} violations", bad == 0


@check("algebra.theta_kernel", "Unit group")
def _theta(s: Session):
    c, rng = s.ctx, s.rng("algebra.theta_kernel")
    bad = 0
    for _ in range(s.samples // 4):
        x = c.from_vector(rng.integers(0, c.p, c.dim))
        y = c.from_vector(rng.integers(0, c.p, c.dim))
        t = theta(x)
        bad += theta(x * y) != t * theta(y)
        bad += in_gamma_A(x) != (t == QuotientElement(c, 0, 0))
        bad += theta(psi(t)) != t
    return "theta multiplicative, kernel Gamma(A), psi a section", f"{bad} violations", bad == 0


# -- Gamma(A) ------------------------------------------------------------------

@check("gamma.basis_rank", "Lemma 6")
def _gamma_rank(s: Session):
    c = s.ctx
    over_f = span_f(c, gamma_basis(c)).dim
    over_fp = span_fp(c, gamma_basis(c)).dim
    return f"rank {4 * c.l} over F, {4 * c.n * c.l} over F_p", f"{over_f} over F, {over_fp} over F_p", \
        over_f == 4 * c.l and over_fp == 4 * c.n * c.l


@check("gamma.nilpotent", "Introduction")
def _nilpotent(s: Session):
    c, rng = s.ctx, s.rng("gamma.nilpotent")
    nonzero = 0
    for _ in range(s.samples // 8):
        prod = c.one
        for _ in range(c.p):
            prod = prod * st.random_gamma_element(c, rng)
        nonzero += not prod.is_zero()
    return "every product of p elements of Gamma(A) is 0", f"{nonzero} nonzero products", nonzero == 0


@check("gamma.exponent", "Introduction")
def _exponent(s: Session):
    c, rng = s.ctx, s.rng("gamma.exponent")
    bad = sum((c.one + st.random_gamma_element(c, rng)) ** c.p != c.one for _ in range(s.samples))
    return f"v^p = 1 for {s.samples} samples", f"{bad} violations", bad == 0


@check("gamma.omega_products", "Lemma 6 proof")
def _products(s: Session):
    ids = all_identities(s.ctx)["products"]
    bad = failures(ids)
    return f"{len(ids)} identities hold", f"{len(ids) - len(bad)} hold; failing {bad[:3]}", not bad


@check("gamma.change_of_basis", "Lemma 6")
def _cob(s: Session):
    ids = all_identities(s.ctx)["change_of_basis"]
    bad = failures(ids)
    return f"{len(ids)} reconstructions exact", f"{len(ids) - len(bad)} exact; failing {bad[:3]}", not bad


@check("center.omega_identities", "Theorem 7 proof")
def _center_ids(s: Session):
    ids = all_identities(s.ctx)["center_proof"]
    bad = failures(ids)
    return f"{len(ids)} identities hold", f"{len(ids) - len(bad)} hold; failing {bad[:3]}", not bad


@check("d_block.expansions", "Lemma 10")
def _dblock_ids(s: Session):
    ids = all_identities(s.ctx)["d_block"]
    bad = failures(ids)
    return f"{len(ids)} expansions exact", f"{len(ids) - len(bad)} exact; failing {bad[:3]}", not bad


@check("basis.catalog", "Lemma 6")
def _catalog(s: Session):
    ok = BasisCatalog.build(s.ctx).check_membership()
    return "every family lies in its ambient set", f"membership={ok}", ok


# -- unitary and symmetric units ---------------------------------------------

@check("unitary.gamma_exhaustive", "Lemma 2")
def _unitary_gamma(s: Session):
    c = s.ctx
    try:
        h = st.enumerate_unitary_in_one_plus_gamma(c, s.bound)
    except BoundExceeded as e:
        raise Skip(f"|1 + Gamma(A)| = {e.count} exceeds bound {s.bound}")
    b_free = all(x.b_part.is_zero() for x in h.elements)
    return f"{h.predicted_order} unitary units, all in FA, equal to <z_ik>", \
        f"{h.order} found, b-part zero={b_free}", h.consistent() and b_free


@check("unitary.skew_rank", "Lemma 2")
def _unitary_skew(s: Session):
    c = s.ctx
    skew = st.skew_subspace_of_gamma(c)
    in_fa = all(c.from_vector(r).b_part.is_zero() for r in skew.basis)
    logs = log_span(c, unitary_basis(c))
    ok = skew.dim == c.n * c.l and in_fa and skew.equals(logs)
    return f"skew part of Gamma(A) has F_p-dim {c.n * c.l}, lies in FA, equals log V_*", \
        f"dim {skew.dim}, in FA={in_fa}, equals logs={skew.equals(logs)}", ok


@check("unitary.log_rank", "Lemma 3")
def _unitary_log(s: Session):
    c = s.ctx
    basis = unitary_basis(c)
    unit_ok = all(is_unitary(z) and z.in_fa() and in_gamma_A(z - 1) for z in basis)
    r = log_span(c, basis).dim
    return f"log rank {c.n * c.l}, generators unitary in V(FA)", f"log rank {r}, generators ok={unit_ok}", \
        r == c.n * c.l and unit_ok


@check("unitary.closure_order", "Lemma 3")
def _unitary_closure(s: Session):
    c = s.ctx
    pred = c.p ** (c.n * c.l)
    _need(pred, s.bound, "|V_*(FA)|")
    h = st.closure(unitary_basis(c), s.bound, "V_*(FA)")
    return f"|<z_ik>| = {pred}", f"{h.order}", h.order == pred


@check("symmetric.log_rank", "Lemma 5")
def _symmetric_log(s: Session):
    c = s.ctx
    basis = symmetric_basis(c)
    sym_ok = all(is_symmetric(z) and z.in_fa() for z in basis)
    r = log_span(c, basis).dim
    return f"log rank {c.n * c.l}, generators symmetric in FA", f"log rank {r}, generators ok={sym_ok}", \
        r == c.n * c.l and sym_ok


@check("quotient.unitary_units", "Lemma 4")
def _quotient(s: Session):
    c = s.ctx
    _need(c.p ** (2 * c.n), s.bound, "|F C_2|")
    got = st.quotient_unitary_units(c, s.bound)
    want = {QuotientElement(c, 1, 0), QuotientElement(c, -1, 0), QuotientElement(c, 0, 1),
            QuotientElement(c, 0, -1)}
    return "{1, -1, x, -x}", "{" + ", ".join(sorted(q.render() for q in got)) + "}", got == want


@check("unitary.algebra_exhaustive", "Theorem 1")
def _unitary_algebra(s: Session):
    c = s.ctx
    size = c.p ** c.dim
    _need(size, s.algebra_bound, "|F D_2p|")
    us, _ = s.memo("scan", lambda: st.scan_algebra(c, s.algebra_bound, size <= s.bound))
    decs = [st.unitary_decompose(u) for u in us]
    rebuilt = all(d.v * c.b ** d.eps * (-1) ** d.delta == u for d, u in zip(decs, us))
    vs = {d.v for d in decs}
    unique = len({(d.v, d.eps, d.delta) for d in decs}) == len(us)
    want = 4 * c.p ** (c.n * c.l)
    ok = len(us) == want and rebuilt and unique and len(vs) == c.p ** (c.n * c.l)
    return f"{want} unitary units, each v b^e (-1)^d uniquely", \
        f"{len(us)} found, {len(vs)} distinct v, rebuilt={rebuilt}, injective={unique}", ok


@check("unitary.decompose_sampled", "Theorem 1")
def _unitary_sampled(s: Session):
    c, rng = s.ctx, s.rng("unitary.decompose_sampled")
    gens = unitary_basis(c)
    bad = 0
    for _ in range(s.samples // 4):
        v = c.one
        for z in gens:
            v = v * z ** int(rng.integers(0, c.p))
        eps, delta = int(rng.integers(0, 2)), int(rng.integers(0, 2))
        u = v * c.b ** eps * (-1) ** delta
        d = st.unitary_decompose(u)
        bad += not is_unitary(u) or d != (v, eps, delta)
    return "sampled v b^e (-1)^d decompose back", f"{bad} mismatches", bad == 0


@check("unitary.klein_four", "Theorem 1")
def _klein(s: Session):
    c = s.ctx
    h = st.closure([c.b, -c.one], s.bound, "<b, -1>")
    ex2 = all(x * x == c.one for x in h.elements)
    comm = all(x * y == y * x for x in h.elements for y in h.elements)
    return "order 4, exponent 2, abelian", f"order {h.order}, exponent 2={ex2}, abelian={comm}", \
        h.order == 4 and ex2 and comm


@check("unitary.normal", "Theorem 1")
def _unitary_normal(s: Session):
    c = s.ctx
    V = log_span(c, unitary_basis(c))
    b_inv = invert_unit(c.b)
    ok = all(V.contains(truncated_log(c.b * z * b_inv).v) for z in unitary_basis(c))
    return "b V_* b^-1 = V_*", f"conjugates in V_*={ok}", ok


@check("unitary.full_closure_order", "Theorem 1")
def _unitary_full(s: Session):
    c = s.ctx
    pred = 4 * c.p ** (c.n * c.l)
    _need(pred, s.bound, "|U_*|")
    h = st.closure(unitary_basis(c) + [c.b, -c.one], s.bound, "U_*")
    return f"order {pred}", f"order {h.order}", h.order == pred


# -- center, centralizer ------------------------------------------------------

@check("center.dimension", "Theorem 7")
def _center(s: Session):
    c = s.ctx
    h = st.center_of_one_plus_gamma(c)
    return f"F_p-dim {c.n * (c.l + 1)}, spanned by C_i^ - 2 and A^ b", f"F_p-dim {h.subspace.dim}", \
        h.subspace.dim == c.n * (c.l + 1)


@check("center.linear_system", "Theorem 7 proof")
def _center_system(s: Session):
    c = s.ctx
    F = c.ext
    gb = gamma_basis(c)
    blocks = [np.array([(g * w - w * g).to_field_vector() for g in gb]).T for w in gb]
    K = kernel(np.vstack(blocks), F)
    return f"solution space of dimension {c.l + 1} over F", f"dimension {K.dim}", K.dim == c.l + 1


@check("center.generators", "Theorem 7")
def _center_gens(s: Session):
    c = s.ctx
    gb = gamma_basis(c)
    comm = all(z * w == w * z for z in center_basis(c) for w in gb)
    r = log_span(c, center_basis(c)).dim
    return f"generators central, log rank {c.n * (c.l + 1)}", f"central={comm}, log rank {r}", \
        comm and r == c.n * (c.l + 1)


@check("center.brute_force", "Theorem 7")
def _center_bf(s: Session):
    c = s.ctx
    size = st.one_plus_gamma_size(c)
    _need(size * size, min(s.bound, PY_LOOP_BOUND ** 2), "pairwise products in 1 + Gamma(A)")
    center = st.brute_force_group_center(c, size)
    S = st.closure(symmetric_basis(c), s.bound, "S_*(FA)").elements
    line = {c.one + c.reflection_class_sum * x for x in c.field.elements()}
    prod = {x * y for x in S for y in line}
    pred = c.p ** (c.n * (c.l + 1))
    ok = center == prod and len(center) == pred
    return f"center = S_*(FA) x (1 + F A^ b), order {pred}", f"order {len(center)}, equal={center == prod}", ok


@check("product.centralizer", "Theorem 9 proof")
def _centralizer(s: Session):
    c = s.ctx
    h = st.centralizer_of_a(c)
    return f"C(a) = V_* x Z of order p^{c.n * c.p}", f"F_p-dim {h.subspace.dim}", h.subspace.dim == c.n * c.p


# -- LDU and the general product ----------------------------------------------

@check("ldu.dimensions", "Theorem 9 proof")
def _ldu(s: Session):
    c = s.ctx
    L, D, U = ldu_subspaces(c)
    got = (L.dim, D.dim, U.dim)
    return f"({c.l}, {2 * c.l}, {c.l}) over F", str(got), got == (c.l, 2 * c.l, c.l)


@check("ldu.examples", "Theorem 8")
def _ldu_examples(s: Session):
    c = s.ctx
    tr1 = st.pavesic_factorize(c.one)
    ok1 = all(x.is_zero() for x in tr1)
    w1p = omega_prime(c, 1)
    ok2 = tuple(st.pavesic_factorize(c.one + w1p)) == (w1p, c.zero, c.zero)
    parts = (w1p, omega(c, 1) * w1p, omega(c, c.l))
    v = (c.one + parts[0]) * (c.one + parts[1]) * (c.one + parts[2])
    ok3 = tuple(st.pavesic_factorize(v)) == parts
    return "1 -> (0,0,0); 1+w1' -> (w1',0,0); product round trip", f"{ok1}, {ok2}, {ok3}", ok1 and ok2 and ok3


@check("ldu.round_trip", "Theorem 8")
def _ldu_round_trip(s: Session):
    c, rng = s.ctx, s.rng("ldu.round_trip")
    ldu = ldu_subspaces(c, over="Fp")
    bad = 0
    for _ in range(s.factorizations):
        v = c.one + st.random_gamma_element(c, rng)
        bad += not st.factorization_ok(v, st.pavesic_factorize(v), ldu)
    return f"{s.factorizations} exact reconstructions", f"{s.factorizations - bad} exact", bad == 0


@check("ldu.unique", "Theorem 8")
def _ldu_unique(s: Session):
    c = s.ctx
    size = st.one_plus_gamma_size(c)
    _need(size, min(s.bound, PY_LOOP_BOUND), "|1 + Gamma(A)|")
    L, D, U = ldu_subspaces(c, over="Fp")
    ex = {st.FactorizationTriple(l, d, u).reconstruct()
          for l in st.elements_of_span(c, L) for d in st.elements_of_span(c, D) for u in st.elements_of_span(c, U)}
    ok = len(ex) == size and all(st.factorization_ok(v, st.pavesic_factorize(v), (L, D, U))
                                 for v in st.iter_one_plus_gamma(c, size))
    return f"L x D x U -> 1 + Gamma(A) bijective ({size})", f"{len(ex)} distinct products", ok


@check("product.w_order", "Theorem 9")
def _w(s: Session):
    acc = s.memo("acc", lambda: st.general_product_accounting(s.ctx))
    c = s.ctx
    return f"|W| = p^{3 * c.n * c.l}", f"p^{acc.w_dim}", acc.w_dim == 3 * c.n * c.l


@check("product.w_affine", "Theorem 9")
def _w_aff(s: Session):
    ok = st.w_set_is_affine(s.ctx, s.rng("product.w_affine"), s.samples // 4)
    return "(1 + L)(1 + D) = 1 + (L + D)", f"{ok}", ok


@check("product.meet", "Theorem 9")
def _meet(s: Session):
    acc = s.memo("acc", lambda: st.general_product_accounting(s.ctx))
    return f"W n C(a) = Z, of order p^{acc.z_dim}", f"order p^{acc.meet_dim}, equal={acc.meet_is_center}", \
        acc.meet_is_center


@check("product.order_equation", "Theorem 9")
def _order_eq(s: Session):
    acc = s.memo("acc", lambda: st.general_product_accounting(s.ctx))
    got = acc.w_dim + acc.c_dim - acc.meet_dim
    return f"exponent {acc.total_dim}", f"{acc.w_dim} + {acc.c_dim} - {acc.meet_dim} = {got}", acc.balanced


@check("product.normalizes", "Theorem 9 proof")
def _norm(s: Session):
    ok = st.d_normalizes_l(s.ctx)
    return "d (1 + L) d^-1 = 1 + L for d in the D-block basis", f"{ok}", ok


@check("product.coverage", "Theorem 9")
def _cover(s: Session):
    c = s.ctx
    size = st.one_plus_gamma_size(c)
    _need(size, min(s.bound, PY_LOOP_BOUND), "|1 + Gamma(A)|")
    ok = st.exhaustive_general_product(c, size)
    return f"W C(a) covers all {size} elements (not uniquely)", f"{ok}", ok


@check("d_block.generators", "Lemma 10")
def _dblock(s: Session):
    c = s.ctx
    basis = d_block_basis(c)
    _, D, _ = ldu_subspaces(c, over="Fp")
    inside = all(D.contains((d - 1).v) for d in basis)
    r = log_span(c, basis).dim
    return f"generators in 1 + D, log rank {2 * c.n * c.l}", f"in 1 + D={inside}, log rank {r}", \
        inside and r == 2 * c.n * c.l


# -- the global split ---------------------------------------------------------

@check("unit_group.split", "Unit group")
def _split(s: Session):
    c, rng = s.ctx, s.rng("unit_group.split")
    bad = sum(not st.split_holds(st.random_unit(c, rng)) for _ in range(s.samples))
    return f"{s.samples} units split through psi(theta(u))", f"{bad} failures", bad == 0


@check("unit_group.count", "Unit group")
def _count(s: Session):
    c = s.ctx
    size = c.p ** c.dim
    _need(size, min(s.bound, s.algebra_bound), "unit count over |F D_2p|")
    _, units = s.memo("scan", lambda: st.scan_algebra(c, s.algebra_bound, True))
    want = (c.field.q - 1) ** 2 * st.one_plus_gamma_size(c)
    return f"{want} units", f"{units}", units == want


@check("handles.predicted_orders", "Theorem 7")
def _handles(s: Session):
    c = s.ctx
    checked = []
    for label, gens, pred in (("Z", center_basis(c), c.p ** (c.n * (c.l + 1))),
                              ("S_*", symmetric_basis(c), c.p ** (c.n * c.l))):
        if pred <= s.bound:
            checked.append(st.closure(gens, s.bound, label).order == pred)
    if not checked:
        raise Skip(f"every predicted order exceeds bound {s.bound}")
    return "enumerated orders match predictions", f"{sum(checked)}/{len(checked)} match", all(checked)


# -- driver ---------------------------------------------------------------------

def run_suite(ctx: AlgebraContext, seed: int = 0, bound: int = st.GROUP_BOUND,
              algebra_bound: int = st.ALGEBRA_BOUND, timings: bool = True,
              only: list[str] | None = None, progress: Callable[[CheckRecord], None] | None = None) -> CheckReport:
    s = Session(ctx, seed, bound, algebra_bound)
    params = {"p": ctx.p, "n": ctx.n, "f": list(ctx.field.f)}
    records = []
    for check_id, ref, fn in REGISTRY:
        if only is not None and check_id not in only:
            continue
        t0 = time.perf_counter()
        reason = None
        try:
            expected, actual, ok = fn(s)
            status = "pass" if ok else "fail"
        except Skip as e:
            expected, actual, status, reason = "", "", "skipped", str(e)
        except Exception as e:  # a crash is a failed check, reported not raised
            expected, actual, status = "no error", f"{type(e).__name__}: {e}", "fail"
        ms = round((time.perf_counter() - t0) * 1000, 3) if timings else 0.0
        rec = CheckRecord(check_id, ref, params, status, reason, str(expected), str(actual), ms)
        records.append(rec)
        if progress:
            progress(rec)
    return CheckReport(params, seed, records)


def check_ids() -> list[str]:
    return [cid for cid, _, _ in REGISTRY]
