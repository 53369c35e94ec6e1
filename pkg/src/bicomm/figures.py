"""Vertex legends and reference edge lists for the drawn consequence graphs.

Each figure is stored as the arrows actually drawn (arrows ending on a
family line are expanded to every vertex on that line), the extra edges
forced by span closure, and corrections where the drawing omits an edge
that the engine proves.  The reference graph is the union.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .galgebra import x
from .lattice import VertexSpec, family, fixed
from .tideal import VarietySpec
from .varieties import AlphaCase, BetaCase, REPRESENTATIVES, classify_alpha, classify_beta, u_generator, v_generator, w

__all__ = ["Figure", "FIGURES", "legend", "legend_for_spec", "figure_for_case", "spec_case"]


@dataclass(frozen=True)
class Figure:
    id: str
    kind: str  # "U" or "V"
    case: str
    max_degree: int
    drawn: tuple
    closure: tuple = ()
    corrections: tuple = ()
    sinks: tuple = ()
    notes: tuple = field(default_factory=tuple)

    @property
    def coeffs(self) -> tuple:
        return REPRESENTATIVES[self.case]

    def golden(self) -> set:
        return set(self.drawn) | set(self.closure) | set(self.corrections)


def _e(text: str) -> tuple:
    """'a->b,c' -> (('a','b'), ('a','c'))"""
    src, dst = text.split("->")
    return tuple((src.strip(), d.strip()) for d in dst.split(","))


def _edges(*items) -> tuple:
    out = []
    for it in items:
        out.extend(_e(it))
    return tuple(out)


def _sum_nonzero(g1, g2):
    return g1 + g2 != 0


def _sum_and_second_nonzero(g1, g2):
    return (g1 + g2) * g2 != 0


def _both_nonzero(g1, g2):
    return g1 * g2 != 0


def _vertex_names(kind: str, case: str, n: int) -> list:
    return [s.name for s in _legend_degree(kind, case, n)]


def _legend_degree(kind: str, case: str, n: int) -> list:
    """Vertex recipes of degree n for the named case."""
    if n == 1:
        return [fixed("f1", (1,), x(1, 2))]
    if n == 2:
        return [fixed("f2", (2,), w((2,), 1)), fixed("g2" if kind == "U" else "h2", (1, 1), w((1, 1), 0))]
    return _legend_U(case, n) if kind == "U" else _legend_V(case, n)


def _k3(tag_case: str) -> VertexSpec:
    return family(
        "k3",
        (2, 1),
        w((2, 1), 1),
        w((2, 1), 0),
        _both_nonzero,
        "b1*w21^(1)+b2*w21^(0), b1*b2!=0",
    )


def _legend_U(case: str, n: int) -> list:
    case = AlphaCase(case)
    if case is AlphaCase.GENERIC:
        if n == 3:
            return [fixed("f3", (3,), w((3,), 2)), fixed("g3", (2, 1), w((2, 1), 1)), fixed("h3", (2, 1), w((2, 1), 0))]
        return []
    if case in (AlphaCase.ALPHA2_ZERO, AlphaCase.ALPHA1_ZERO):
        # the Alpha1Zero legend is the mirror image y <-> z of the Alpha2Zero one
        jf, jg, jh = (1, 0, 1) if case is AlphaCase.ALPHA2_ZERO else (n - 1, n - 2, 0)
        out = [fixed(f"f{n}", (n,), w((n,), jf)), fixed(f"g{n}", (n - 1, 1), w((n - 1, 1), jg))]
        if n == 3:
            out += [fixed("h3", (2, 1), w((2, 1), jh)), _k3(case.value)]
        return out
    if case is AlphaCase.SUM_ZERO:
        out = [fixed(f"f{n}", (n,), w((n,), 1))]
        if n == 3:
            out += [fixed("g3", (2, 1), w((2, 1), 1)), fixed("h3", (2, 1), w((2, 1), 0)), _k3(case.value)]
        if n == 4:
            out.append(fixed("p4", (2, 2), w((2, 2), 0)))
        return out
    # DiffZero
    if n == 3:
        return [
            fixed("f3", (3,), w((3,), 2)),
            fixed("g3", (2, 1), w((2, 1), 1)),
            fixed("h3", (2, 1), w((2, 1), 0)),
            _k3(case.value),
        ]
    if n == 4:
        return [fixed("g4", (3, 1), w((3, 1), 2))]
    return []


def _legend_V(case: str, n: int) -> list:
    case = BetaCase(case)
    if case in (BetaCase.GENERIC, BetaCase.DIFF_ZERO):
        jf, jg, jh, cond = n - 1, n - 2, n - 2, _sum_nonzero
        columns = n in (3, 4)
        with_h = n == 3
    else:
        if case is BetaCase.BETA2_ZERO:
            jf, jg, jh = 2, 1, 0
        elif case is BetaCase.BETA1_ZERO:
            # mirror image of Beta2Zero
            jf, jg, jh = n - 2, n - 1, n - 2
        else:
            jf, jg, jh = n - 1, n - 2, n - 2
        cond = _sum_and_second_nonzero
        columns = with_h = True
    f = w((n,), jf)
    if not columns:
        return [fixed(f"f{n}", (n,), f)]
    g = w((n,), jg)
    out = [
        family(f"j{n}", (n,), f, g, cond, f"g1*f{n}+g2*g{n}"),
        fixed(f"f{n}", (n,), f),
        fixed(f"i{n}", (n,), f - g),
        fixed(f"g{n}", (n,), g),
    ]
    if with_h:
        out.append(fixed(f"h{n}", (n - 1, 1), w((n - 1, 1), jh)))
    return out


def _links(kind: str, case: str, n: int) -> list:
    names = _vertex_names(kind, case, n)
    if kind == "U":
        return [("g3", "h3")] if n == 3 and "g3" in names and "h3" in names else []
    row = [c + str(n) for c in "jfig" if c + str(n) in names]
    return list(zip(row, row[1:]))


def legend(kind: str, case: str, max_degree: int) -> tuple:
    """(vertex recipes, family links) up to max_degree."""
    verts, links = [], []
    for n in range(1, max_degree + 1):
        verts += _legend_degree(kind, case, n)
        links += _links(kind, case, n)
    return verts, links


def spec_case(spec: VarietySpec):
    """('U'|'V', case value, coefficients) for a one-generator builtin spec, else None."""
    if len(spec.generators) != 1:
        return None
    g = spec.generators[0]
    if g.d != 2 or g.has_linear():
        return None
    from .poly import Monomial

    c = g.square.terms
    a1 = c.get(Monomial((2, 0), (1, 0)), Fraction(0))
    a2 = c.get(Monomial((1, 0), (2, 0)), Fraction(0))
    if (a1 or a2) and g == u_generator(a1, a2):
        return "U", classify_alpha(a1, a2).value, (a1, a2)
    b1 = c.get(Monomial((2, 0), (0, 1)), Fraction(0))
    b2 = c.get(Monomial((1, 0), (1, 1)), Fraction(0))
    if (b1 or b2) and g == v_generator(b1, b2):
        return "V", classify_beta(b1, b2).value, (b1, b2)
    return None


def legend_for_spec(spec: VarietySpec, max_degree: int):
    found = spec_case(spec)
    if found is None:
        return None
    kind, case, _ = found
    return legend(kind, case, max_degree)


def _per_degree(template: list, degrees) -> list:
    out = []
    for n in degrees:
        for t in template:
            out.append(t.format(n=n, m=n + 1))
    return out


_V_STEP_CASE2 = [
    "f{n}->f{m}",
    "j{n}->j{m},g{m},h{m}",
    "i{n}->i{m},h{m}",
    "g{n}->g{m},h{m},j{m},f{m}",
    "h{n}->h{m},i{m}",
]

FIGURES = {
    f.id: f
    for f in [
        Figure(
            "u-case1",
            "U",
            AlphaCase.GENERIC.value,
            3,
            _edges("f1->f2,g2", "f2->f3,g3,h3", "g2->g3,f3,h3"),
            sinks=("f3", "g3", "h3"),
        ),
        Figure(
            "u-case2",
            "U",
            AlphaCase.ALPHA2_ZERO.value,
            4,
            _edges("f1->f2,g2", "f2->f3,g3,h3", "f3->f4,g4", "g2->g3,h3,f3", "g3->g4,f4", "k3->g4"),
            closure=_edges("f2->k3", "g2->k3"),
            corrections=_edges("k3->f4"),
            sinks=("h3",),
            notes=("k3->f4 is drawn as a line without an arrow head",),
        ),
        Figure(
            "u-case4",
            "U",
            AlphaCase.SUM_ZERO.value,
            5,
            _edges("f1->f2,g2", "f2->f3,g3,h3", "f3->f4,p4", "f4->f5", "g2->g3,h3", "g3->p4", "h3->p4", "k3->p4"),
            closure=_edges("f2->k3", "g2->k3"),
            sinks=("p4",),
        ),
        Figure(
            "u-case5",
            "U",
            AlphaCase.DIFF_ZERO.value,
            4,
            _edges("f1->f2,g2", "f2->f3,g3,h3", "f3->g4", "g2->g3,h3,f3", "g3->g4", "h3->g4", "k3->g4"),
            closure=_edges("f2->k3", "g2->k3"),
            sinks=("g4",),
            notes=("the horizontal arrow g3 -> h3 joins vertices of equal degree and is read as a family link",),
        ),
        Figure(
            "v-case1",
            "V",
            BetaCase.GENERIC.value,
            6,
            _edges(
                "f1->f2,h2",
                "f2->j3,f3,i3,g3,h3",
                "h2->i3,h3",
                "j3->j4,f4,i4,g4",
                "f3->j4,f4,i4,g4",
                "g3->j4,f4,i4,g4",
                "i3->i4",
                "h3->i4",
                "j4->f5",
                "f4->f5",
                "g4->f5",
                "f5->f6",
            ),
            sinks=("i4",),
        ),
        Figure(
            "v-case2",
            "V",
            BetaCase.BETA2_ZERO.value,
            5,
            _edges("f1->f2,h2", "f2->j3,f3,i3,g3,h3", "h2->i3,h3", *_per_degree(_V_STEP_CASE2, (3, 4))),
            closure=_edges(*_per_degree(["j{n}->f{m},i{m}", "g{n}->i{m}"], (3, 4))),
        ),
        Figure(
            "v-case4",
            "V",
            BetaCase.SUM_ZERO.value,
            5,
            _edges(
                "f1->f2,h2",
                "f2->j3,f3,i3,g3,h3",
                "h2->i3,h3",
                *_per_degree(_V_STEP_CASE2 + ["f{n}->j{m},i{m},g{m}"], (3, 4)),
            ),
            closure=_edges(*_per_degree(["j{n}->f{m},i{m}", "g{n}->i{m}"], (3, 4))),
            corrections=_edges(*_per_degree(["f{n}->h{m}"], (3, 4))),
        ),
        Figure(
            "v-case5",
            "V",
            BetaCase.DIFF_ZERO.value,
            6,
            _edges(
                "f1->f2,h2",
                "f2->j3,f3,i3,g3,h3",
                "h2->i3,h3",
                "j3->j4,f4,i4,g4",
                "f3->j4,f4,i4,g4",
                "g3->j4,f4,i4,g4",
                "i3->i4",
                "j4->f5",
                "f4->f5",
                "g4->f5",
                "f5->f6",
            ),
            corrections=_edges("h3->i4"),
            sinks=("i4",),
        ),
    ]
}


def figure_for_case(kind: str, case: str):
    for f in FIGURES.values():
        if f.kind == kind and f.case == case:
            return f
    return None
