"""Reproducible checks of the quantitative claims, grouped by scope.

Each check returns a :class:`CheckResult`; the CLI prints them as a table
and the acceptance tests assert on them.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .galgebra import GElement, delta_i_u, delta_ij, gmul, witness_eval
from .hwv import Partition, free_multiplicity, hwv_basis, hwv_coordinates, is_hwv, m_formula, raise21, two_row_partitions
from .lattice import build_graph, distributivity_report
from .poly import Monomial, Poly
from .tideal import VarietySpec, character_codimension, default_engine, oracle_codimension
from .varieties import (
    REPRESENTATIVES,
    AlphaCase,
    BetaCase,
    b_spec,
    expected_cocharacter_U,
    expected_cocharacter_V,
    expected_survivors_U,
    expected_survivors_V,
    reference_consequence_table,
    u_spec,
    v_spec,
)

__all__ = ["CheckResult", "SCOPES", "run_scope", "run_all", "property_checks", "random_element"]

DEFAULT_SEED = 1234
PROPERTY_INSTANCES = 200


@dataclass
class CheckResult:
    scope: str
    claim: str
    passed: bool
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        flag = "PASS" if self.passed else "FAIL"
        extra = f"  {self.detail}" if self.detail else ""
        return f"{flag}  [{self.scope}] {self.claim} ({self.seconds:.2f}s){extra}"


def _timed(scope: str, claim: str, fn: Callable[[], tuple]) -> CheckResult:
    t0 = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failed claim, not a crashed run
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return CheckResult(scope, claim, bool(ok), detail, time.perf_counter() - t0)


def _row_text(row: dict) -> str:
    return "{" + ", ".join(f"{lam}:{m}" for lam, m in row.items() if m) + "}"


# free algebra


def check_free_multiplicities(max_n: int = 8) -> list:
    def run():
        bad = []
        spec = b_spec()
        for n in range(2, max_n + 1):
            for lam in two_row_partitions(n):
                got = default_engine().multiplicity(spec, lam)
                if got != m_formula(lam):
                    bad.append(f"{lam}: {got} != {m_formula(lam)}")
        return not bad, "; ".join(bad)

    return [_timed("free-multiplicity", f"m(lambda) of the free algebra for 2 <= n <= {max_n}", run)]


def check_codimension(max_n: int = 10) -> list:
    out = []
    spec = b_spec()
    for n in range(2, max_n + 1):
        def run(n=n):
            oracle = oracle_codimension(spec, n)
            row = {lam: m_formula(lam) for lam in two_row_partitions(n)}
            char = character_codimension(row)
            want = 2**n - 2
            return oracle == want and char == want, f"oracle={oracle} character={char} expected={want}"

        out.append(_timed("codimension", f"c_{n} = 2^{n}-2", run))
    return out


# cocharacters


def check_u_degree4() -> list:
    out = []
    for case in AlphaCase:
        spec = u_spec(*REPRESENTATIVES[case.value])

        def run(spec=spec, case=case):
            got = default_engine().cocharacter(spec, 4)
            want = expected_cocharacter_U(case, 4)
            return got == want, f"got {_row_text(got)} expected {_row_text(want)}"

        out.append(_timed("u-degree4", f"degree-4 cocharacter of U at {case.value}", run))
    return out


def check_v_degree4() -> list:
    out = []
    for case in BetaCase:
        spec = v_spec(*REPRESENTATIVES[case.value])

        def run(spec=spec, case=case):
            got = default_engine().cocharacter(spec, 4)
            want = expected_cocharacter_V(case, 4)
            return got == want, f"got {_row_text(got)} expected {_row_text(want)}"

        out.append(_timed("v-degree4", f"degree-4 cocharacter of V at {case.value}", run))
    return out


def _cocharacter_checks(scope, kind, cases, expected, survivors, lo=4, hi=7) -> list:
    out = []
    for case in cases:
        spec = (u_spec if kind == "U" else v_spec)(*REPRESENTATIVES[case.value])
        for n in range(lo, hi + 1):
            def run(spec=spec, case=case, n=n):
                eng = default_engine()
                got = eng.cocharacter(spec, n)
                want = expected(case, n)
                if got != want:
                    return False, f"got {_row_text(got)} expected {_row_text(want)}"
                for lam, vecs in survivors(case, n).items():
                    if not eng.quotient_spanned_by(spec, lam, vecs):
                        return False, f"stated generators do not span the surviving space at {lam}"
                return True, _row_text(got)

            out.append(_timed(scope, f"{kind} at {case.value}, n={n}", run))
    return out


def check_u_cocharacters() -> list:
    cases = [c for c in AlphaCase if c is not AlphaCase.GENERIC]
    return _cocharacter_checks("u-cocharacter", "U", cases, expected_cocharacter_U, expected_survivors_U)


def check_v_cocharacters() -> list:
    cases = list(BetaCase)
    return _cocharacter_checks("v-cocharacter", "V", cases, expected_cocharacter_V, expected_survivors_V)


# consequence tables


def _case_sample(rng: random.Random, case, kind: str) -> tuple:
    """A random coefficient pair in the given case stratum."""
    while True:
        a = Fraction(rng.randint(-40, 40), rng.randint(1, 9))
        if a == 0:
            continue
        if case.value == "Generic":
            b = Fraction(rng.randint(-40, 40), rng.randint(1, 9))
            if a * b * (a + b) * (a - b) != 0:
                return (a, b)
            continue
        return {
            "Alpha2Zero": (a, 0),
            "Beta2Zero": (a, 0),
            "Alpha1Zero": (0, a),
            "Beta1Zero": (0, a),
            "SumZero": (a, -a),
            "DiffZero": (a, a),
        }[case.value]


def check_consequence_tables(samples: int = 5, seed: int = DEFAULT_SEED) -> list:
    rng = random.Random(seed)
    out = []
    for kind, cases in (("U", AlphaCase), ("V", BetaCase)):
        table = reference_consequence_table(kind)
        for case in cases:
            pairs = [_case_sample(rng, case, kind) for _ in range(samples)]

            def run(table=table, pairs=pairs):
                bad = []
                for c1, c2 in pairs:
                    for entry in table:
                        el = entry.build(c1, c2)
                        got = tuple(hwv_coordinates(el.square, entry.partition))
                        if got != tuple(entry.coords(c1, c2)):
                            bad.append(f"{entry.name} at ({c1},{c2})")
                return not bad, "; ".join(bad)

            out.append(_timed("consequence-tables", f"{kind} table at {case.value}, {samples} samples", run))
    return out


# graphs


def check_figures(seed: int | None = None) -> list:
    from .figures import FIGURES, legend

    out = []
    for fig in FIGURES.values():
        def run(fig=fig):
            spec = (u_spec if fig.kind == "U" else v_spec)(*fig.coeffs)
            verts, links = legend(fig.kind, fig.case, fig.max_degree + 2)
            kwargs = {} if seed is None else {"seed": seed}
            g = build_graph(spec, fig.max_degree + 1, verts, links, **kwargs)
            top = {v.name for v in g.vertices if v.degree <= fig.max_degree}
            got = {(a, b) for a, b in g.edge_names() if a in top and b in top}
            want = fig.golden()
            if got != want:
                return False, f"missing {sorted(want - got)} extra {sorted(got - want)}"
            bad_sinks = [s for s in fig.sinks if g.out_degree(s) != 0]
            if bad_sinks:
                return False, f"not sinks: {bad_sinks}"
            return True, f"{len(got)} edges, sinks {list(fig.sinks)}"

        out.append(_timed("figures", f"edge list of {fig.id}", run))
    return out


def _combined_specs() -> list:
    out = []
    for a in AlphaCase:
        for b in BetaCase:
            spec = u_spec(*REPRESENTATIVES[a.value]).union(v_spec(*REPRESENTATIVES[b.value]))
            out.append((spec, True))
    out.append((b_spec(), False))
    out += [(u_spec(*REPRESENTATIVES[a.value]), False) for a in AlphaCase]
    out += [(v_spec(*REPRESENTATIVES[b.value]), False) for b in BetaCase]
    return out


def check_distributivity(max_degree: int = 6) -> list:
    out = []
    for spec, want in _combined_specs():
        def run(spec=spec, want=want):
            rep = distributivity_report(spec, max_degree)
            ok = rep["exhaustive"] == want and rep["certificate"] == rep["exhaustive"]
            return ok, f"distributive={rep['exhaustive']} certificate={rep['certificate']} expected={want}"

        out.append(_timed("distributivity", f"{spec.label}", run))
    return out


# randomized properties


def random_element(rng: random.Random, d: int, max_deg: int = 3, terms: int = 3, linear: bool = True) -> GElement:
    lin = [Fraction(rng.randint(-3, 3)) for _ in range(d)] if linear else [Fraction(0)] * d
    sq = {}
    for _ in range(rng.randint(0, terms)):
        deg = rng.randint(2, max_deg)
        while True:
            ys = [0] * d
            zs = [0] * d
            ny = rng.randint(1, deg - 1)
            for _ in range(ny):
                ys[rng.randrange(d)] += 1
            for _ in range(deg - ny):
                zs[rng.randrange(d)] += 1
            break
        m = Monomial(tuple(ys), tuple(zs))
        sq[m] = sq.get(m, 0) + Fraction(rng.randint(-4, 4), rng.randint(1, 3))
    return GElement(d, tuple(lin), Poly(d, sq))


def _random_hwv(rng: random.Random, lam: Partition) -> Poly:
    basis = hwv_basis(lam).vectors
    while True:
        cs = [Fraction(rng.randint(-3, 3)) for _ in basis]
        if any(cs):
            p = Poly.zero(2)
            for c, b in zip(cs, basis):
                p = p + b.scale(c)
            return p


def _prop_bicommutativity(rng):
    d = rng.randint(1, 3)
    a, b, c = (random_element(rng, d) for _ in range(3))
    return gmul(gmul(a, b), c) == gmul(gmul(a, c), b) and gmul(a, gmul(b, c)) == gmul(b, gmul(a, c))


def _prop_leibniz(rng):
    d = rng.randint(2, 3)
    a, b = random_element(rng, d), random_element(rng, d)
    i, j = rng.sample(range(1, d + 1), 2)
    ok = delta_ij(gmul(a, b), i, j) == gmul(delta_ij(a, i, j), b) + gmul(a, delta_ij(b, i, j))
    a2, b2 = random_element(rng, d, linear=False), random_element(rng, d, linear=False)
    u = random_element(rng, d, max_deg=2, linear=False)
    ok2 = delta_i_u(gmul(a2, b2), i, u) == gmul(delta_i_u(a2, i, u), b2) + gmul(a2, delta_i_u(b2, i, u))
    wit = witness_eval(gmul(a2, b2)) == witness_eval(a2) * witness_eval(b2)
    return ok and ok2 and wit


def _prop_hwv_kernel(rng):
    n = rng.randint(2, 9)
    lam = rng.choice(two_row_partitions(n))
    p = _random_hwv(rng, lam)
    return raise21(p).is_zero() and is_hwv(p) and len(hwv_basis(lam).vectors) == m_formula(lam)


def _random_spec(rng) -> VarietySpec:
    kind = rng.choice("UV")
    while True:
        c = (Fraction(rng.randint(-3, 3)), Fraction(rng.randint(-3, 3)))
        if c != (0, 0):
            break
    return (u_spec if kind == "U" else v_spec)(*c)


def _prop_monotonicity(rng):
    spec = _random_spec(rng)
    eng = default_engine()
    k = rng.randint(3, 4)
    extra_lam = rng.choice([lam for lam in two_row_partitions(k) if lam.n > 1])
    extra = GElement.from_poly(_random_hwv(rng, extra_lam))
    bigger = spec.with_generators([extra])
    n = rng.randint(2, 6)
    lam = rng.choice(two_row_partitions(n))
    m0, m1 = eng.multiplicity(spec, lam), eng.multiplicity(bigger, lam)
    return m1 <= m0 <= free_multiplicity(lam)


def _prop_vanishing(rng):
    # a nonzero hwv of shape lam kills every shape mu with mu2 >= lam1
    n0 = rng.randint(2, 4)
    lam = rng.choice(two_row_partitions(n0))
    f = GElement.from_poly(_random_hwv(rng, lam))
    spec = VarietySpec((f,), "f")
    mus = [mu for n in range(2, 9) for mu in two_row_partitions(n) if mu.l2 >= lam.l1]
    mu = rng.choice(mus)
    return default_engine().multiplicity(spec, mu) == 0


PROPERTIES = {
    "bicommutativity": _prop_bicommutativity,
    "leibniz": _prop_leibniz,
    "hwv-kernel": _prop_hwv_kernel,
    "monotonicity": _prop_monotonicity,
    "vanishing": _prop_vanishing,
}


def property_checks(instances: int = PROPERTY_INSTANCES, seed: int = DEFAULT_SEED) -> list:
    out = []
    for name, prop in PROPERTIES.items():
        rng = random.Random(f"{seed}-{name}")

        def run(prop=prop, rng=rng):
            failures = sum(1 for _ in range(instances) if not prop(rng))
            return failures == 0, f"{failures} failures in {instances} instances"

        out.append(_timed("properties", f"{name} on {instances} random instances", run))
    return out


SCOPES = {
    "free-multiplicity": check_free_multiplicities,
    "codimension": check_codimension,
    "u-degree4": check_u_degree4,
    "u-cocharacter": check_u_cocharacters,
    "v-degree4": check_v_degree4,
    "v-cocharacter": check_v_cocharacters,
    "consequence-tables": check_consequence_tables,
    "figures": check_figures,
    "distributivity": check_distributivity,
    "properties": property_checks,
}


def run_scope(scope: str) -> list:
    if scope not in SCOPES:
        raise KeyError(scope)
    return SCOPES[scope]()


def run_all() -> list:
    out = []
    for fn in SCOPES.values():
        out.extend(fn())
    return out
