"""Registry of invariant suites; single source of truth for verification.

Each suite callable takes the qubit count and returns a SuiteResult.  The
CLI `verify` subcommand and the acceptance tests both run these, so the
numbers asserted here (sample sizes, tolerances) are the contract.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import UnsupportedDimensionError
from .ffield import GF2m
from .nets import (
    build_net,
    classify_nets,
    detect_product_structure,
    enumerate_nets,
    net_context,
)
from .phasespace import PhaseSpace, Point
from .reduction import KeepSet, shortcut_reduce, reduce_dwf, reduction_map
from .stokes import (
    conjugation_matrix,
    hadamard_matrix,
    spinflip_matrix,
    stokes_from_rho,
)
from .translations import TranslationTable, build_eigensystems
from .wigner import (
    DensityState,
    dwf_from_rho,
    line_probability,
    purity_from_dwf,
    random_density,
    random_pure,
    rho_from_dwf,
)

SEED = 20240901


@dataclass
class SuiteResult:
    name: str
    n: int
    checks: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def expect(self, condition: bool, message: str) -> None:
        self.checks += 1
        if not condition:
            self.failures.append(message)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = "" if self.ok else f" [{'; '.join(self.failures[:3])}]"
        return f"{status} {self.name} (n={self.n}): {self.checks} checks{extra}"


def _net_ids(ctx, sample_large: int = 100):
    """All ids for N <= 4, a deterministic sample above."""
    if ctx.order <= 4:
        return list(enumerate_nets(ctx))
    return list(enumerate_nets(ctx, sample=sample_large))


def suite_field_axioms(n: int) -> SuiteResult:
    r = SuiteResult("field-axioms", n)
    f = GF2m(n)
    elems = list(f.elements())
    for x in elems:
        for y in elems:
            r.expect(f.add(x, y) == f.add(y, x), f"add not commutative at {x},{y}")
            r.expect(f.mul(x, y) == f.mul(y, x), f"mul not commutative at {x},{y}")
            for z in elems:
                r.expect(
                    f.mul(x, f.add(y, z)) == f.add(f.mul(x, y), f.mul(x, z)),
                    f"distributivity fails at {x},{y},{z}",
                )
                r.expect(
                    f.mul(f.mul(x, y), z) == f.mul(x, f.mul(y, z)),
                    f"mul not associative at {x},{y},{z}",
                )
    for x in elems[1:]:
        r.expect(f.mul(x, f.inv(x)) == 1, f"inverse fails at {x}")
    for i in range(f.m):
        for j in range(f.m):
            r.expect(
                f.trace(f.mul(f.basis[i], f.dual_basis[j])) == (1 if i == j else 0),
                f"basis duality fails at {i},{j}",
            )
    for x in elems:
        for y in elems:
            dot = sum(
                a & b for a, b in zip(f.expand(x), f.expand(y, dual=True))
            ) % 2
            r.expect(dot == f.trace(f.mul(x, y)), f"trace pairing fails at {x},{y}")
        r.expect(f.compose(f.expand(x)) == x, f"primal round trip fails at {x}")
        r.expect(
            f.compose(f.expand(x, dual=True), dual=True) == x,
            f"dual round trip fails at {x}",
        )
    return r


def suite_phase_geometry(n: int) -> SuiteResult:
    r = SuiteResult("phase-geometry", n)
    space = PhaseSpace(GF2m(n))
    nn = space.order
    all_lines = [ln for st in space.striations for ln in st.lines]
    r.expect(len(space.striations) == nn + 1, "striation count != N+1")
    r.expect(len(all_lines) == nn * (nn + 1), "line count != N(N+1)")
    for i, la in enumerate(all_lines):
        for lb in all_lines[i + 1 :]:
            common = set(la.points) & set(lb.points)
            if la.striation_id == lb.striation_id:
                r.expect(not common, "parallel lines intersect")
            else:
                r.expect(len(common) == 1, "cross-striation lines miss unique point")
    for pt in space.points:
        through = space.lines_through(pt)
        r.expect(len(through) == nn + 1, f"point {pt} not on N+1 lines")
        r.expect(
            all(pt in ln.points for ln in through), f"lines_through wrong at {pt}"
        )
    for st in space.striations:
        for ln in st.lines:
            for beta in space.points:
                shifted = sorted(
                    space.point_index(space.translate_point(p, beta))
                    for p in ln.points
                )
                match = any(
                    shifted
                    == sorted(space.point_index(p) for p in other.points)
                    for other in st.lines
                )
                r.expect(match, "translated line leaves its striation")
    return r


def suite_translations(n: int) -> SuiteResult:
    r = SuiteResult("translations", n)
    ctx = net_context(n)
    space, table = ctx.space, ctx.table
    nn = ctx.order
    for es in ctx.eigensystems:
        for i, u in enumerate(es.ops):
            for v in es.ops[i + 1 :]:
                r.expect(
                    np.max(np.abs(u @ v - v @ u)) < 1e-10,
                    f"striation {es.striation_id} ops do not commute",
                )
        for state in es.states:
            for u in es.ops:
                r.expect(
                    np.max(np.abs(u @ state @ u.conj().T - state)) < 1e-10,
                    f"striation {es.striation_id} state not invariant",
                )
    for i, ea in enumerate(ctx.eigensystems):
        for eb in ctx.eigensystems[i + 1 :]:
            for sa in ea.states:
                for sb in eb.states:
                    r.expect(
                        abs(np.trace(sa @ sb).real - 1.0 / nn) < 1e-10,
                        "bases not mutually unbiased",
                    )
    for p1 in space.points:
        for p2 in space.points:
            prod = table[p1] @ table[p2]
            target = table[space.translate_point(p1, p2)]
            r.expect(
                np.max(np.abs(prod - target)) < 1e-12
                or np.max(np.abs(prod + target)) < 1e-12,
                "translations do not compose up to sign",
            )
    return r


def suite_net_traces(n: int) -> SuiteResult:
    r = SuiteResult("net-traces", n)
    ctx = net_context(n)
    nn = ctx.order
    eye = nn * np.eye(nn * nn)
    for net_id in _net_ids(ctx):
        ops = build_net(ctx, net_id).ops_array
        gram = np.einsum("aij,bji->ab", ops, ops)
        r.expect(
            np.max(np.abs(gram - eye)) < 1e-9,
            f"net {net_id} violates Tr(A_a A_b) = N delta",
        )
    return r


def suite_net_structure(n: int) -> SuiteResult:
    """Covariance of line projectors and the line-sum identity."""
    r = SuiteResult("net-structure", n)
    ctx = net_context(n)
    space, table = ctx.space, ctx.table
    nn = ctx.order
    ids = _net_ids(ctx, sample_large=10)
    if nn == 4:
        ids = ids[::37] + [1023]  # covariance is O(N^4) per net; sample
    for net_id in ids:
        net = build_net(ctx, net_id)
        for st in space.striations:
            for ln in st.lines:
                q = net.projector(ln)
                r.expect(
                    abs(np.trace(q).real - 1.0) < 1e-10
                    and np.max(np.abs(q @ q - q)) < 1e-9,
                    f"net {net_id} line projector not a rank-one projector",
                )
                sigma = sum(net.point_op(pt) for pt in ln.points)
                r.expect(
                    np.max(np.abs(sigma - nn * q)) < 1e-9,
                    f"net {net_id} violates line-sum identity",
                )
                for beta in space.points:
                    c2 = space.line_offset(
                        st.striation_id, space.translate_point(ln.points[0], beta)
                    )
                    lhs = net.projectors[(st.striation_id, c2)]
                    t = table[beta]
                    r.expect(
                        np.max(np.abs(lhs - t @ q @ t.conj().T)) < 1e-9,
                        f"net {net_id} violates translational covariance",
                    )
        total = net.ops_array.sum(axis=0)
        r.expect(
            np.max(np.abs(total - nn * np.eye(nn))) < 1e-9,
            f"net {net_id} violates sum A = N I",
        )
    return r


def suite_net_census(n: int) -> SuiteResult:
    r = SuiteResult("net-census", n)
    ctx = net_context(n)
    nn = ctx.order
    if nn > 4:
        raise UnsupportedDimensionError("census suite is defined for N <= 4")
    ids = list(enumerate_nets(ctx))
    r.expect(len(ids) == nn ** (nn + 1), "net count != N^(N+1)")
    orbits = classify_nets(ctx)
    r.expect(
        len(orbits) == nn ** (nn - 1), f"orbit count {len(orbits)} != N^(N-1)"
    )
    r.expect(
        all(len(v) == nn * nn for v in orbits.values()),
        "orbit sizes != N^2",
    )
    if n == 2:
        forms = {"eq6": 0, "eq7": 0, "none": 0}
        for net_id in ids:
            forms[detect_product_structure(build_net(ctx, net_id)).form] += 1
        r.expect(
            forms["eq6"] == 16 and forms["eq7"] == 16,
            f"product census {forms} != 16/16",
        )
    return r


def suite_wigner_roundtrip(n: int) -> SuiteResult:
    r = SuiteResult("wigner-roundtrip", n)
    ctx = net_context(n)
    nn = ctx.order
    rng = np.random.default_rng(SEED)
    net_ids = _net_ids(ctx, sample_large=20)
    if len(net_ids) > 64:
        net_ids = net_ids[:: len(net_ids) // 64]
    states = [random_density(n, rng) for _ in range(10)]
    for net_id in net_ids:
        net = build_net(ctx, net_id)
        for st in states:
            w = dwf_from_rho(st, net)
            r.expect(abs(w.w.sum() - 1.0) < 1e-10, "normalization fails")
            back = rho_from_dwf(w, net)
            r.expect(
                np.max(np.abs(back.rho - st.rho)) < 1e-10, "round trip fails"
            )
            true_purity = float(np.trace(st.rho @ st.rho).real)
            r.expect(
                abs(purity_from_dwf(w) - true_purity) < 1e-10,
                "purity identity fails",
            )
            for striation in ctx.space.striations:
                probs = [line_probability(w, ln) for ln in striation.lines]
                r.expect(
                    abs(sum(probs) - 1.0) < 1e-10,
                    "striation probabilities do not sum to 1",
                )
                for ln, prob in zip(striation.lines, probs):
                    direct = float(np.trace(net.projector(ln) @ st.rho).real)
                    r.expect(
                        abs(prob - direct) < 1e-10, "line probability mismatch"
                    )
    net = build_net(ctx, net_ids[0])
    a, b = states[0], states[1]
    for lam in (0.25, 0.5, 0.9):
        mix = DensityState(n, lam * a.rho + (1 - lam) * b.rho)
        blend = lam * dwf_from_rho(a, net).w + (1 - lam) * dwf_from_rho(b, net).w
        r.expect(
            np.max(np.abs(dwf_from_rho(mix, net).w - blend)) < 1e-12,
            "transform not linear",
        )
    for _ in range(10):
        pure = random_pure(n, rng)
        w = dwf_from_rho(pure, build_net(ctx, net_ids[-1]))
        r.expect(abs(purity_from_dwf(w) - 1.0) < 1e-9, "pure state purity != 1")
    return r


def suite_hadamard_bridge(n: int, states: int = 50) -> SuiteResult:
    r = SuiteResult("hadamard-bridge", n)
    ctx = net_context(n)
    nn = ctx.order
    rng = np.random.default_rng(SEED)
    fixed = [random_density(n, rng) for _ in range(states)]
    stokes = [stokes_from_rho(st) for st in fixed]
    eye = (nn * nn) * np.eye(nn * nn, dtype=np.int64)
    for net_id in _net_ids(ctx):
        net = build_net(ctx, net_id)
        h = hadamard_matrix(net)
        r.expect(
            np.array_equal(h.h @ h.h.T, eye), f"net {net_id}: H H^T != N^2 I"
        )
        hf = h.h.astype(float)
        for st, s in zip(fixed, stokes):
            w = dwf_from_rho(st, net)
            r.expect(
                np.max(np.abs(hf @ w.w - s.s)) < 1e-9,
                f"net {net_id}: S != H W",
            )
            r.expect(
                np.max(np.abs(h.inverse @ s.s - w.w)) < 1e-9,
                f"net {net_id}: W != H^-1 S",
            )
    return r


def suite_conjugation(n: int) -> SuiteResult:
    r = SuiteResult("conjugation", n)
    ctx = net_context(n)
    rng = np.random.default_rng(SEED)
    eye = np.eye(4**n)
    reference = None
    for net_id in _net_ids(ctx):
        net = build_net(ctx, net_id)
        f = conjugation_matrix(net)
        g = spinflip_matrix(net)
        if reference is None:
            reference = np.round(f, 12)
        r.expect(
            np.array_equal(np.round(f, 12), reference),
            f"net {net_id}: F differs between nets",
        )
        r.expect(np.max(np.abs(f @ f - eye)) < 1e-10, "F^2 != I")
        r.expect(np.max(np.abs(g @ g - eye)) < 1e-10, "G^2 != I")
        rows = [int(np.argmax(np.abs(g[i] @ f.T))) for i in range(4**n)]
        r.expect(
            np.max(np.abs(g - f[rows])) < 1e-10 and sorted(rows) == list(range(4**n)),
            f"net {net_id}: G is not a row permutation of F",
        )
    net = build_net(ctx, _net_ids(ctx)[0])
    f = conjugation_matrix(net)
    g = spinflip_matrix(net)
    u = np.array([[1.0 + 0.0j]])
    sy = np.array([[0, -1j], [1j, 0]])
    for _ in range(n):
        u = np.kron(u, sy)
    for _ in range(10):
        st = random_density(n, rng)
        w = dwf_from_rho(st, net)
        conj_w = dwf_from_rho(DensityState(n, st.rho.conj()), net)
        r.expect(np.max(np.abs(f @ w.w - conj_w.w)) < 1e-10, "F W != W(conj rho)")
        flipped = DensityState(n, u @ st.rho.conj() @ u.conj().T)
        r.expect(
            np.max(np.abs(g @ w.w - dwf_from_rho(flipped, net).w)) < 1e-10,
            "G W != W(spin-flipped rho)",
        )
    return r


def partial_trace(rho: np.ndarray, n: int, keep) -> np.ndarray:
    """Independent density-matrix oracle used by the reduction suites."""
    t = rho.reshape([2] * (2 * n))
    for axis in sorted((i for i in range(n) if i not in keep), reverse=True):
        t = np.trace(t, axis1=axis, axis2=axis + t.ndim // 2)
    d = 2 ** len(keep)
    return t.reshape(d, d)


def _all_keep_sets(n: int):
    from itertools import combinations

    for k in range(1, n + 1):
        yield from (KeepSet(n, c) for c in combinations(range(n), k))


def suite_reduction_oracle(n: int, states: int = 25, pairs: int = 10) -> SuiteResult:
    r = SuiteResult("reduction-oracle", n)
    ctx = net_context(n)
    rng = np.random.default_rng(SEED)
    fixed = [random_density(n, rng) for _ in range(states)]
    for keep in _all_keep_sets(n):
        tctx = net_context(keep.k)
        for _ in range(pairs):
            src_id = int(rng.integers(0, ctx.net_count))
            tgt_id = int(rng.integers(0, tctx.net_count))
            src = build_net(ctx, src_id)
            tgt = build_net(tctx, tgt_id)
            rmap = reduction_map(src, tgt, keep)
            for st in fixed:
                w = reduce_dwf(dwf_from_rho(st, src), rmap)
                reduced = DensityState(
                    keep.k, partial_trace(st.rho, n, keep.keep)
                )
                oracle = dwf_from_rho(reduced, tgt)
                r.expect(
                    np.max(np.abs(w.w - oracle.w)) < 1e-10,
                    f"keep={keep.keep} nets=({src_id},{tgt_id}): oracle mismatch",
                )
    # composition and net-conversion consistency
    if n >= 2:
        src = build_net(ctx, int(rng.integers(0, ctx.net_count)))
        mid_keep = KeepSet(n, tuple(range(n - 1))) if n > 1 else None
        mid_ctx = net_context(n - 1)
        mid = build_net(mid_ctx, int(rng.integers(0, mid_ctx.net_count)))
        fin = build_net(net_context(1), int(rng.integers(0, 8)))
        two_step_a = reduction_map(src, mid, mid_keep)
        two_step_b = reduction_map(mid, fin, KeepSet(n - 1, (0,)))
        direct = reduction_map(src, fin, KeepSet(n, (0,)))
        for st in fixed[:5]:
            w = dwf_from_rho(st, src)
            stepped = reduce_dwf(reduce_dwf(w, two_step_a), two_step_b)
            r.expect(
                np.max(np.abs(stepped.w - reduce_dwf(w, direct).w)) < 1e-10,
                "nested reduction differs from direct reduction",
            )
    other = build_net(ctx, int(rng.integers(0, ctx.net_count)))
    src = build_net(ctx, int(rng.integers(0, ctx.net_count)))
    keep_all = KeepSet(n, tuple(range(n)))
    there = reduction_map(src, other, keep_all)
    back = reduction_map(other, src, keep_all)
    r.expect(
        np.max(np.abs(back.p @ there.p - np.eye(4**n))) < 1e-9,
        "net conversion round trip is not the identity",
    )
    ident = reduction_map(src, src, keep_all)
    r.expect(
        np.max(np.abs(ident.p - np.eye(4**n))) < 1e-12,
        "keep-all same-net map is not the identity",
    )
    return r


def suite_shortcut(n: int, states: int = 50) -> SuiteResult:
    if n != 2:
        raise UnsupportedDimensionError("the product-net shortcut needs n=2")
    r = SuiteResult("shortcut-reduction", n)
    ctx = net_context(2)
    rng = np.random.default_rng(SEED)
    fixed = [random_density(2, rng) for _ in range(states)]
    product_nets = [
        net
        for net in (build_net(ctx, i) for i in enumerate_nets(ctx))
        if detect_product_structure(net).is_product
    ]
    r.expect(len(product_nets) == 32, f"{len(product_nets)} product nets != 32")
    for net in product_nets:
        report = detect_product_structure(net)
        for which, tgt_id, keep in (
            ("A", report.factor_a_net, (0,)),
            ("B", report.factor_b_conj_net, (1,)),
        ):
            rmap = reduction_map(
                net, build_net(net_context(1), tgt_id), KeepSet(2, keep)
            )
            for st in fixed:
                w = dwf_from_rho(st, net)
                shortcut = shortcut_reduce(w, net, which)
                r.expect(
                    shortcut.net_id == tgt_id
                    and np.max(np.abs(shortcut.w - reduce_dwf(w, rmap).w)) < 1e-10,
                    f"net {net.net_id} subsystem {which}: shortcut disagrees",
                )
    return r


def suite_concurrence(n: int, states: int = 100, nets: int = 5) -> SuiteResult:
    if n != 2:
        raise UnsupportedDimensionError("concurrence is defined for n=2")
    from .reduction import concurrence_from_dwf

    r = SuiteResult("concurrence", n)
    ctx = net_context(2)
    rng = np.random.default_rng(SEED)
    for _ in range(states):
        v = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        v = v / np.linalg.norm(v)
        st = DensityState(2, np.outer(v, v.conj()))
        exact = 2.0 * abs(v[0] * v[3] - v[1] * v[2])
        for _ in range(nets):
            net = build_net(ctx, int(rng.integers(0, 1024)))
            c = concurrence_from_dwf(dwf_from_rho(st, net), net)
            r.expect(
                abs(c - exact) < 1e-8,
                f"net {net.net_id}: concurrence {c} != exact value {exact}",
            )
    return r


SUITES = {
    "field-axioms": suite_field_axioms,
    "phase-geometry": suite_phase_geometry,
    "translations": suite_translations,
    "net-traces": suite_net_traces,
    "net-structure": suite_net_structure,
    "net-census": suite_net_census,
    "wigner-roundtrip": suite_wigner_roundtrip,
    "hadamard-bridge": suite_hadamard_bridge,
    "conjugation": suite_conjugation,
    "reduction-oracle": suite_reduction_oracle,
    "shortcut-reduction": suite_shortcut,
    "concurrence": suite_concurrence,
}

# suites that only make sense at specific sizes
_RESTRICTED = {"net-census": {1, 2}, "shortcut-reduction": {2}, "concurrence": {2}}


def run_suites(n: int, names=None) -> list:
    """Run the named suites (default: all applicable at this n)."""
    selected = list(SUITES) if names is None else list(names)
    results = []
    for name in selected:
        if name not in SUITES:
            raise KeyError(f"unknown suite {name!r}; known: {sorted(SUITES)}")
        allowed = _RESTRICTED.get(name)
        if allowed is not None and n not in allowed:
            if names is not None:
                raise UnsupportedDimensionError(f"suite {name} not defined at n={n}")
            continue
        results.append(SUITES[name](n))
    return results
