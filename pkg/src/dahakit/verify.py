"""
Verification suites. Each suite runs a battery of exact checks over a list of
root data and returns a VerifyReport; every random sample is drawn from a
stream keyed by (seed, suite, datum, check) so failures replay exactly.
"""

from __future__ import annotations

import itertools
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable

from .afflattice import (AffCoweight, AffWeight, K_can, affine_simple_coroot, affine_simple_root, delta,
                         pair, weight_basis)
from .convolution import av_check, convolve, from_group_algebra, identity
from .daha import Daha
from .extweyl import ExtendedAffineWeylGroup
from .parahoric import enumerate_standard, from_classical_index, to_classical_index
from .polyrep import act
from .rootsys import ADJOINT, SIMPLY_CONNECTED, RootDatum, build_root_datum, parse_type
from .sampling import (random_coweight, random_daha, random_dcoset, random_element, random_poly,
                       random_weight, rng_for)

__all__ = [
    "SuiteConfig", "CheckRecord", "VerifyReport", "SUITES", "DEFAULT_TYPES", "parse_types",
    "run_suite",
]

DEFAULT_SEED = 20240601

# default datum lists per suite (type labels; flavors chosen per suite)
DEFAULT_TYPES = {
    "dcox": "A1..A4,B2..B4,C2..C4,D4,F4,G2",
    "kacmoody": "A1..A3,B2,B3,C2,C3,G2",
    "s0": "A1..A6,B2..B5,C2..C5,D4..D6,E6,E7,E8,F4,G2",
    "daha": "A1,A2,B2,C2,G2",
    "pfdaha": "A1..A6,B2..B5,C2..C5,D4..D6,E6,E7,E8,F4,G2",
    "oracle": "A1,A2,B2,G2",
    "conv": "A1,A2",
    "parahoric": "A1..A5,B2..B5,C2..C5",
    "avembed": "A1,A2",
}

# h^vee by the classical closed forms, an oracle independent of the root datum
_H_DUAL_TABLE = {
    "A": lambda n: n + 1, "B": lambda n: 2 * n - 1, "C": lambda n: n + 1, "D": lambda n: 2 * n - 2,
    "E": lambda n: {6: 12, 7: 18, 8: 30}[n], "F": lambda n: 9, "G": lambda n: 4,
}


def parse_types(text: str) -> list[tuple[str, int]]:
    """"A1..A4,D4,G2" -> [(A,1),...,(A,4),(D,4),(G,2)]."""
    out = []
    for item in filter(None, (s.strip() for s in text.split(","))):
        if ".." in item:
            lo, hi = item.split("..")
            (l1, n1), (l2, n2) = parse_type(lo), parse_type(hi)
            if l1 != l2 or n2 < n1:
                raise ValueError(f"bad type range {item!r}")
            out.extend((l1, n) for n in range(n1, n2 + 1))
        else:
            out.append(parse_type(item))
    return out


@dataclass
class SuiteConfig:
    seed: int = DEFAULT_SEED
    samples: int | None = None          # overrides the suite's default sample count
    flavors: tuple[str, ...] = (SIMPLY_CONNECTED, ADJOINT)
    threads: int | None = None          # None: DAHAKIT_THREADS or 1

    def n(self, default: int) -> int:
        return default if self.samples is None else self.samples

    def workers(self) -> int:
        if self.threads is not None:
            return max(1, self.threads)
        return max(1, int(os.environ.get("DAHAKIT_THREADS", "1") or 1))


@dataclass
class CheckRecord:
    name: str
    datum: str
    samples: int = 0
    passed: bool = True
    counterexample: dict | None = None
    info: dict = field(default_factory=dict)

    def record(self, ok: bool, **witness) -> bool:
        self.samples += 1
        if not ok and self.passed:
            self.passed = False
            self.counterexample = {"sample": self.samples - 1, **{k: str(v) for k, v in witness.items()}}
        return ok

    def to_json(self) -> dict:
        out = {"name": self.name, "datum": self.datum, "samples": self.samples, "passed": self.passed,
               "counterexample": self.counterexample}
        if self.info:
            out["info"] = self.info
        return out


@dataclass
class VerifyReport:
    suite: str
    data: list[str]
    seed: int
    checks: list[CheckRecord]
    duration: float = 0.0

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self, timing: bool = False) -> dict:
        out = {"suite": self.suite, "data": self.data, "seed": self.seed, "passed": self.passed,
               "checks": [c.to_json() for c in sorted(self.checks, key=lambda c: (c.name, c.datum))]}
        if timing:
            out["duration"] = round(self.duration, 3)
        return out


# -- suites -------------------------------------------------------------------
# each takes (datum, config) and returns a list of CheckRecords


def _dcox(d: RootDatum, cfg: SuiteConfig) -> list[CheckRecord]:
    tv = d.theta_dual
    half_norm = d.killing(tv, tv) / 2
    via_rho = 2 * (d.pair(d.rho, tv) + 1)
    c = CheckRecord("dual_coxeter_identity", d.descriptor)
    c.record(half_norm == via_rho == 2 * d.h_dual, half_norm=half_norm, rho_form=via_rho,
             h_dual=d.h_dual)
    c.info = {"h_dual": d.h_dual}
    t = CheckRecord("h_dual_closed_form", d.descriptor)
    t.record(d.h_dual == _H_DUAL_TABLE[d.cartan_type](d.rank), h_dual=d.h_dual)
    r = CheckRecord("rho_pairs_to_one", d.descriptor)
    for i, b in enumerate(d.simple_coroots):
        r.record(d.pair(d.rho, b) == 1, i=i + 1)
    return [c, t, r]


def _kacmoody(d: RootDatum, cfg: SuiteConfig) -> list[CheckRecord]:
    W = ExtendedAffineWeylGroup(d)
    n = cfg.n(200)
    checks = {k: CheckRecord(k, d.descriptor) for k in
              ("action_law_weight", "action_law_coweight", "pairing_invariance", "fixes_delta",
               "fixes_K_can")}
    rng = rng_for(cfg.seed, "kacmoody", d.descriptor)
    dl, kc = delta(d), K_can(d)
    for _ in range(n):
        a, b = random_element(W, rng, 5), random_element(W, rng, 5)
        xi, eta = random_weight(rng, d.rank), random_coweight(rng, d.rank)
        ab = W.mul(a, b)
        checks["action_law_weight"].record(
            W.act_on_weight(ab, xi) == W.act_on_weight(a, W.act_on_weight(b, xi)), a=a, b=b, xi=xi)
        checks["action_law_coweight"].record(
            W.act_on_coweight(ab, eta) == W.act_on_coweight(a, W.act_on_coweight(b, eta)),
            a=a, b=b, eta=eta)
        checks["pairing_invariance"].record(
            pair(d, W.act_on_weight(a, xi), W.act_on_coweight(a, eta)) == pair(d, xi, eta),
            a=a, xi=xi, eta=eta)
        checks["fixes_delta"].record(W.act_on_weight(a, dl) == dl, a=a)
        checks["fixes_K_can"].record(W.act_on_coweight(a, kc) == kc, a=a)
    return list(checks.values())


def _s0(d: RootDatum, cfg: SuiteConfig) -> list[CheckRecord]:
    W = ExtendedAffineWeylGroup(d)
    s0 = W.simple_reflection(0)
    a0, a0v = affine_simple_root(d, 0), affine_simple_coroot(d, 0)
    w = CheckRecord("s0_reflects_weights", d.descriptor)
    for xi in weight_basis(d):
        w.record(W.act_on_weight(s0, xi) == xi - pair(d, xi, a0v) * a0, xi=xi)
    cw = CheckRecord("s0_reflects_coweights", d.descriptor)
    spanning = [AffCoweight(1, (0,) * d.rank, 0), AffCoweight(0, (0,) * d.rank, 1)]
    spanning += [AffCoweight.finite(b) for b in d.simple_coroots]
    for eta in spanning:
        cw.record(W.act_on_coweight(s0, eta) == eta - pair(d, a0, eta) * a0v, eta=eta)
    inv = CheckRecord("s0_involution", d.descriptor)
    inv.record(W.mul(s0, s0) == W.identity)
    w.info = {"sign": W.s0_sign, "s0": {"lambda": [str(x) for x in s0.lam]}}
    return [w, cw, inv]


def _daha(d: RootDatum, cfg: SuiteConfig) -> list[CheckRecord]:
    H = Daha(d)
    W = H.group
    n = cfg.n(100)
    rng = rng_for(cfg.seed, "daha", d.descriptor)
    assoc = CheckRecord("associativity", d.descriptor)
    for _ in range(n):
        # polynomial degree <= 2, i.e. degree <= 4 in the grading deg u = deg xi = 2
        a, b, c = (random_daha(H, rng, max_degree=2) for _ in range(3))
        assoc.record((a * b) * c == a * (b * c), a=a, b=b, c=c)
    sq = CheckRecord("simple_reflection_squares", d.descriptor)
    for i in range(d.rank + 1):
        sq.record(H.s(i) * H.s(i) == H.one, i=i)
    cen = CheckRecord("u_delta_central", d.descriptor)
    u, dl = H.poly(H.u), H.weight(delta(d))
    for _ in range(max(1, n // 5)):
        a = random_daha(H, rng, max_degree=2)
        cen.record(a * u == u * a and a * dl == dl * a, a=a)
    rel3 = CheckRecord("cross_relation", d.descriptor)
    samples = list(weight_basis(d)) + [random_weight(rng, d.rank) for _ in range(5)]
    for i in range(d.rank + 1):
        s = W.simple_reflection(i)
        for xi in samples:
            lhs = H.s(i) * H.weight(xi) - H.weight(W.act_on_weight(s, xi)) * H.s(i)
            rhs = H.poly(H.u) * pair(d, xi, affine_simple_coroot(d, i))
            rel3.record(lhs == rhs, i=i, xi=xi)
    rel4 = CheckRecord("omega_relation", d.descriptor)
    for om in W.omega_elements:
        for xi in samples:
            rel4.record(H.group_elt(om) * H.weight(xi) == H.weight(W.act_on_weight(om, xi)) * H.group_elt(om),
                        omega=W.omega_id(om), xi=xi)
    assoc.info = {"omega_order": len(W.omega_elements)}
    return [assoc, sq, cen, rel3, rel4]


def _pfdaha(d: RootDatum, cfg: SuiteConfig) -> list[CheckRecord]:
    H = Daha(d)
    pairing = CheckRecord("pairing_vanishes", d.descriptor)
    commute = CheckRecord("reflection_commutes", d.descriptor)
    base = AffWeight(1, tuple(2 * x for x in d.rho), 0)
    for i in range(d.rank + 1):
        xi = base - affine_simple_root(d, i)
        pairing.record(pair(d, xi, affine_simple_coroot(d, i)) == 0, i=i, xi=xi)
        x = H.weight(xi)
        commute.record(H.s(i) * x == x * H.s(i), i=i)
    return [pairing, commute]


def _oracle(d: RootDatum, cfg: SuiteConfig) -> list[CheckRecord]:
    H = Daha(d)
    n = cfg.n(100)
    rng = rng_for(cfg.seed, "oracle", d.descriptor)
    hom = CheckRecord("polyrep_homomorphism", d.descriptor)
    for _ in range(n):
        a = random_daha(H, rng, max_degree=1, max_word=3)
        b = random_daha(H, rng, max_degree=1, max_word=3)
        p = random_poly(H, rng, max_degree=3)
        hom.record(act(H, a * b, p) == act(H, a, act(H, b, p)), a=a, b=b, p=p.as_expr())
    return [hom]


def _conv(d: RootDatum, cfg: SuiteConfig) -> list[CheckRecord]:
    W = ExtendedAffineWeylGroup(d)
    types = [frozenset(P.subset) for P in enumerate_standard(d)]
    rng = rng_for(cfg.seed, "conv", d.descriptor)
    max_len = 6
    assoc = CheckRecord("associativity", d.descriptor)
    for P, Q, R, S in itertools.product(types, repeat=4):
        f1 = random_dcoset(W, P, Q, rng, max_len, 1)
        f2 = random_dcoset(W, Q, R, rng, max_len, 1)
        f3 = random_dcoset(W, R, S, rng, max_len, 1)
        ok = convolve(convolve(f1, f2), f3) == convolve(f1, convolve(f2, f3))
        assoc.record(ok, P=sorted(P), Q=sorted(Q), R=sorted(R), S=sorted(S))
    unit = CheckRecord("unit_laws", d.descriptor)
    for P, Q in itertools.product(types, repeat=2):
        f = random_dcoset(W, P, Q, rng, max_len, 2)
        unit.record(convolve(identity(W, P), f) == f == convolve(f, identity(W, Q)),
                    P=sorted(P), Q=sorted(Q))
    grp = CheckRecord("iwahori_matches_group_algebra", d.descriptor)
    for _ in range(cfg.n(50)):
        f1 = {random_element(W, rng, max_len): Fraction(rng.randint(1, 5)) for _ in range(3)}
        f2 = {random_element(W, rng, max_len): Fraction(rng.randint(1, 5)) for _ in range(3)}
        direct: dict = {}
        for (x, c), (y, e) in itertools.product(f1.items(), f2.items()):
            xy = W.mul(x, y)
            direct[xy] = direct.get(xy, 0) + c * e
        got = convolve(from_group_algebra(W, f1), from_group_algebra(W, f2))
        grp.record(got == from_group_algebra(W, direct), f1=f1, f2=f2)
    assoc.info = {"types": len(types), "max_length": max_len}
    return [assoc, unit, grp]


def _parahoric(d: RootDatum, cfg: SuiteConfig) -> list[CheckRecord]:
    types = enumerate_standard(d)
    expected = 2 ** (d.rank + 1) - 1
    cnt = CheckRecord("type_count", d.descriptor)
    cnt.record(len(types) == expected == len({P.subset for P in types}), got=len(types), expected=expected)
    cnt.info = {"count": len(types)}
    rt = CheckRecord("classical_round_trip", d.descriptor)
    seen = set()
    for P in types:
        seq = to_classical_index(P)
        seen.add(seq)
        rt.record(from_classical_index(d, seq) == P, subset=sorted(P.subset), seq=seq)
    anchors = CheckRecord("classical_anchors", d.descriptor)
    anchors.record(to_classical_index(types[0]) == tuple(range(d.rank + 1)), which="iwahori")
    maximal_at_0 = from_classical_index(d, (0,))
    anchors.record(maximal_at_0.subset == frozenset(range(1, d.rank + 1)), which="G(O)")
    rt.record(len(seen) == len(types), which="injective")
    return [cnt, rt, anchors]


def _coweights_up_to(W: ExtendedAffineWeylGroup, max_length: int) -> list[tuple[Fraction, ...]]:
    """Cocharacters lam with l(t^lam) <= max_length."""
    d = W.datum
    basis = d.cochar_basis
    out = set()
    box = range(-max_length, max_length + 1)
    for coeffs in itertools.product(box, repeat=d.rank):
        lam = tuple(sum(c * b[k] for c, b in zip(coeffs, basis)) for k in range(d.rank))
        if W.length(W.translation(lam)) <= max_length:
            out.add(lam)
    return sorted(out)


def _avembed(d: RootDatum, cfg: SuiteConfig, max_length: int = 2, extended: int = 4) -> list[CheckRecord]:
    W = ExtendedAffineWeylGroup(d)
    out = []
    for P in enumerate_standard(d):
        if not P.subset:
            continue
        for label, L in (("av_normalization", max_length), ("av_normalization_extended", extended)):
            lams = _coweights_up_to(W, L)
            name = f"{label}[P={','.join(map(str, sorted(P.subset)))}]"
            c = CheckRecord(name, d.descriptor)
            consts, structural = set(), False
            for lam, mu in itertools.product(lams, repeat=2):
                res = av_check(W, P.subset, lam, mu)
                structural |= res.structural
                if res.normalization is not None:
                    consts.add(res.normalization)
                # one constant per P must explain everything unless the defect is structural
                c.record(structural or len(consts) <= 1, lam=lam, mu=mu, constants=sorted(consts))
            c.info = {"P": sorted(P.subset), "max_length": L, "coweights": len(lams),
                      "normalization": str(consts.pop()) if len(consts) == 1 and not structural else None,
                      "structural": structural}
            out.append(c)
    return out


SuiteFn = Callable[[RootDatum, SuiteConfig], list[CheckRecord]]

SUITES: dict[str, tuple[SuiteFn, bool]] = {
    # name -> (per-datum function, run both flavors)
    "dcox": (_dcox, False),
    "kacmoody": (_kacmoody, True),
    "s0": (_s0, True),
    "daha": (_daha, True),
    "pfdaha": (_pfdaha, True),
    "oracle": (_oracle, True),
    "conv": (_conv, False),
    "parahoric": (_parahoric, False),
    "avembed": (_avembed, True),
}


def _data_for(suite: str, types: Iterable[tuple[str, int]], cfg: SuiteConfig) -> list[RootDatum]:
    both = SUITES[suite][1]
    flavors = cfg.flavors if both else (SIMPLY_CONNECTED,)
    return [build_root_datum(letter, n, fl) for letter, n in types for fl in flavors]


def run_suite(suite: str, types: str | Iterable[tuple[str, int]] | None = None,
              config: SuiteConfig | None = None) -> VerifyReport:
    """Run one suite (or "all") over the given types; default types depend on the suite."""
    cfg = config or SuiteConfig()
    start = time.perf_counter()
    if suite == "all":
        checks: list[CheckRecord] = []
        names: list[str] = []
        for name in SUITES:
            rep = run_suite(name, types, cfg)
            checks += [CheckRecord(f"{name}.{c.name}", c.datum, c.samples, c.passed, c.counterexample, c.info)
                       for c in rep.checks]
            names += [x for x in rep.data if x not in names]
        return VerifyReport("all", names, cfg.seed, checks, time.perf_counter() - start)
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)} or all")
    if types is None:
        types = DEFAULT_TYPES[suite]
    if isinstance(types, str):
        types = parse_types(types)
    data = _data_for(suite, types, cfg)
    fn = SUITES[suite][0]
    workers = cfg.workers()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(lambda d: fn(d, cfg), data))
    else:
        results = [fn(d, cfg) for d in data]
    checks = [c for r in results for c in r]
    return VerifyReport(suite, [d.descriptor for d in data], cfg.seed, checks, time.perf_counter() - start)
