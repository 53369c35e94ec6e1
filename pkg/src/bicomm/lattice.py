"""Consequence graphs of identities and the distributivity test.

Vertices are highest weight vectors that survive in the relatively free
algebra.  An edge u -> v joins degree n to degree n+1 and is present when v
lies in the T-ideal generated by the variety's identities together with u.

A vertex is either a fixed vector or a one-parameter family
``g1*a + g2*b`` restricted by an open condition on (g1, g2).  Families are
checked at several sampled parameter values and every sample must give the
same answer.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .galgebra import GElement
from .hwv import Partition, hwv_basis, hwv_coordinates, normalize_line, two_row_partitions
from .poly import Poly, format_rational
from .tideal import Engine, VarietySpec, default_engine

__all__ = [
    "FamilySampleError",
    "EngineDefect",
    "VertexSpec",
    "IdentityVertex",
    "ConsequenceGraph",
    "fixed",
    "family",
    "sample_family",
    "auto_vertices",
    "build_graph",
    "subgraph",
    "is_distributive",
    "distributivity_report",
    "graph_union",
    "graph_intersection",
    "to_dot",
    "to_json",
]

DEFAULT_SEED = 20240601
N_RANDOM_SAMPLES = 3
_WITNESSES = [(1, 2), (2, 1), (2, 3), (3, 2), (1, 3), (3, 1), (1, -2), (2, -1), (1, 1), (1, 0), (0, 1)]


class FamilySampleError(RuntimeError):
    """Sampled members of a family disagree on an edge decision."""


class EngineDefect(RuntimeError):
    """Two routes to the same answer disagree."""


@dataclass(frozen=True)
class VertexSpec:
    """Recipe for a vertex: a fixed vector, or a family g1*a + g2*b."""

    name: str
    degree: int
    partition: Partition
    vector: object = None  # Poly or GElement for fixed vertices
    basis: tuple = ()  # (a, b) for families
    condition: Callable | None = None
    tag: str = ""

    @property
    def is_family(self) -> bool:
        return self.vector is None


def fixed(name: str, lam, vector) -> VertexSpec:
    lam = Partition.of(lam)
    return VertexSpec(name, lam.n, lam, vector=vector)


def family(name: str, lam, a: Poly, b: Poly, condition: Callable, tag: str) -> VertexSpec:
    lam = Partition.of(lam)
    return VertexSpec(name, lam.n, lam, basis=(a, b), condition=condition, tag=tag)


def _random_pair(rng: random.Random):
    def q():
        return Fraction(rng.randint(-30, 30), rng.randint(1, 9))

    return q(), q()


def sample_family(spec: VertexSpec, rng: random.Random, count: int = N_RANDOM_SAMPLES) -> list:
    """Random parameter pairs satisfying the condition, then one integer witness."""
    cond = spec.condition
    out = []
    tries = 0
    while len(out) < count:
        tries += 1
        if tries > 10000:
            raise RuntimeError(f"cannot sample family {spec.name}")
        g = _random_pair(rng)
        if g != (0, 0) and cond(*g):
            out.append(g)
    for g in _WITNESSES:
        g = (Fraction(g[0]), Fraction(g[1]))
        if cond(*g):
            out.append(g)
            break
    return out


@dataclass
class IdentityVertex:
    name: str
    degree: int
    partition: Partition
    coords: tuple | None  # normalized hwv coordinates, None for families
    tag: str = ""
    samples: tuple = ()  # concrete representatives (GElement)
    params: tuple = ()  # sampled parameter pairs for families

    @property
    def is_family(self) -> bool:
        return self.coords is None

    def key(self) -> tuple:
        return (self.degree, self.partition.rows, self.coords if self.coords is not None else self.tag)

    def record(self) -> dict:
        return {
            "name": self.name,
            "degree": self.degree,
            "lambda": [self.partition.l1, self.partition.l2],
            "coords": [format_rational(c) for c in self.coords] if self.coords is not None else self.tag,
        }


@dataclass
class ConsequenceGraph:
    ambient: str
    max_degree: int
    vertices: list
    edges: list  # (i, j) index pairs, directed
    links: list = field(default_factory=list)  # undirected same-family links (i, j)
    continues: list = field(default_factory=list)  # indices with consequences above max_degree

    def index(self, name: str) -> int:
        for i, v in enumerate(self.vertices):
            if v.name == name:
                return i
        raise KeyError(name)

    def vertex(self, name: str) -> IdentityVertex:
        return self.vertices[self.index(name)]

    def edge_names(self) -> set:
        return {(self.vertices[i].name, self.vertices[j].name) for i, j in self.edges}

    def out_degree(self, name: str) -> int:
        i = self.index(name)
        return sum(1 for a, _ in self.edges if a == i)

    def sinks(self) -> list:
        """Vertices below the top degree without outgoing edges."""
        out = []
        for i, v in enumerate(self.vertices):
            if v.degree < self.max_degree and not any(a == i for a, _ in self.edges):
                out.append(v.name)
        return out

    def by_degree(self) -> dict:
        out: dict = {}
        for v in self.vertices:
            out.setdefault(v.degree, []).append(v)
        return out


def _as_element(v) -> GElement:
    if isinstance(v, GElement):
        return v
    return GElement.from_poly(v)


def _realize(spec: VertexSpec, rng: random.Random) -> IdentityVertex:
    if not spec.is_family:
        el = _as_element(spec.vector)
        if spec.degree == 1:
            coords = (Fraction(1),)
        else:
            coords = normalize_line(hwv_coordinates(el.square, spec.partition))
        return IdentityVertex(spec.name, spec.degree, spec.partition, coords, "", (el,))
    params = sample_family(spec, rng)
    a, b = spec.basis
    samples = tuple(GElement.from_poly(a.scale(g1) + b.scale(g2)) for g1, g2 in params)
    return IdentityVertex(spec.name, spec.degree, spec.partition, None, spec.tag, samples, tuple(params))


def auto_vertices(spec: VarietySpec, max_degree: int, engine: Engine | None = None, rng=None) -> list:
    """Vertex recipes from the surviving highest weight spaces.

    For each shape: the basis vectors that stay independent modulo the ideal,
    plus a generic family through the first two of them when the surviving
    space has dimension at least 2.
    """
    engine = engine or default_engine()
    out = []
    for n in range(1, max_degree + 1):
        for lam in two_row_partitions(n):
            m = engine.multiplicity(spec, lam)
            if m == 0:
                continue
            if n == 1:
                out.append(fixed("x1", lam, hwv_basis(lam).elements[0]))
                continue
            chosen = []
            for j, vec in enumerate(hwv_basis(lam).vectors):
                if engine.quotient_independent(spec, lam, chosen + [vec]):
                    chosen.append(vec)
                if len(chosen) == m:
                    break
            for vec in chosen:
                coords = normalize_line(hwv_coordinates(vec, lam))
                out.append(fixed(_line_name(lam, coords), lam, vec))
            if m >= 2:
                a, b = chosen[0], chosen[1]
                out.append(
                    family(
                        f"L({_lam_text(lam)},generic)",
                        lam,
                        a,
                        b,
                        lambda g1, g2: g1 * g2 != 0,
                        "g1*u+g2*v, g1*g2!=0",
                    )
                )
    return out


def _lam_text(lam: Partition) -> str:
    return ",".join(str(r) for r in lam.rows)


def _line_name(lam: Partition, coords) -> str:
    return f"L({_lam_text(lam)};{','.join(format_rational(c) for c in coords)})"


def _decide(engine: Engine, spec: VarietySpec, u: IdentityVertex, v: IdentityVertex) -> bool:
    answers = set()
    for su in u.samples:
        for sv in v.samples:
            answers.add(engine.implies(spec, su, sv))
            if len(answers) > 1:
                raise FamilySampleError(
                    f"samples of {u.name} -> {v.name} disagree; the family is not uniform"
                )
    return answers.pop()


def build_graph(
    spec: VarietySpec,
    max_degree: int,
    vertices: Sequence[VertexSpec] | None = None,
    links: Sequence[tuple] = (),
    seed: int = DEFAULT_SEED,
    engine: Engine | None = None,
) -> ConsequenceGraph:
    """Decide every edge between adjacent degrees.

    With ``vertices`` omitted, a figure legend is used when ``spec`` is one of
    the builtin one-generator families, and the automatic enumeration
    otherwise.  Recipes above ``max_degree`` are used only to decide whether
    the top level continues.
    """
    if max_degree < 2:
        raise ValueError("max_degree must be at least 2")
    engine = engine or default_engine()
    rng = random.Random(seed)
    if vertices is None:
        from .figures import legend_for_spec

        found = legend_for_spec(spec, max_degree + 1)
        if found is not None:
            vertices, links = found
        else:
            vertices = auto_vertices(spec, max_degree + 1, engine)
            links = ()
    real = [_realize(s, rng) for s in vertices if s.degree <= max_degree + 1]
    for v in real:
        for s in v.samples:
            if engine.contains(spec, [], s):
                raise EngineDefect(f"vertex {v.name} is an identity of the variety")
    inside = [v for v in real if v.degree <= max_degree]
    above = [v for v in real if v.degree == max_degree + 1]
    index = {v.name: i for i, v in enumerate(inside)}
    edges = []
    for i, u in enumerate(inside):
        for j, v in enumerate(inside):
            if v.degree == u.degree + 1 and _decide(engine, spec, u, v):
                edges.append((i, j))
    continues = []
    for i, u in enumerate(inside):
        if u.degree == max_degree and any(_decide(engine, spec, u, v) for v in above):
            continues.append(i)
    link_idx = [(index[a], index[b]) for a, b in links if a in index and b in index]
    return ConsequenceGraph(spec.label, max_degree, inside, edges, link_idx, continues)


def subgraph(graph: ConsequenceGraph, ambient: VarietySpec, sub: VarietySpec, engine: Engine | None = None) -> set:
    """Names of vertices whose identities hold in the subvariety defined by ``sub``."""
    engine = engine or default_engine()
    extra = list(sub.generators)
    out = set()
    for v in graph.vertices:
        if all(engine.contains(ambient, extra, s) for s in v.samples):
            out.add(v.name)
    return out


def distributivity_report(spec: VarietySpec, max_degree: int = 6, engine: Engine | None = None) -> dict:
    if max_degree < 3:
        raise ValueError("max_degree must be at least 3")
    engine = engine or default_engine()
    worst = {}
    for n in range(1, max_degree + 1):
        for lam in two_row_partitions(n):
            worst[lam] = engine.multiplicity(spec, lam)
    scan = all(m <= 1 for m in worst.values())
    cert = worst[Partition.of(3)] <= 1 and worst[Partition.of(2, 1)] <= 1
    return {"exhaustive": scan, "certificate": cert, "multiplicities": worst}


def is_distributive(spec: VarietySpec, max_degree: int = 6, engine: Engine | None = None) -> bool:
    rep = distributivity_report(spec, max_degree, engine)
    if rep["exhaustive"] != rep["certificate"]:
        raise EngineDefect("degree-3 certificate disagrees with the exhaustive scan")
    return rep["exhaustive"]


def _check_ambient(g1: ConsequenceGraph, g2: ConsequenceGraph) -> None:
    if g1.ambient != g2.ambient or g1.max_degree != g2.max_degree:
        raise ValueError("graphs are built over different ambient varieties or degree ranges")


def _combine(g1: ConsequenceGraph, g2: ConsequenceGraph, keep_vertex, keep_edge) -> ConsequenceGraph:
    _check_ambient(g1, g2)
    k1 = {v.key(): v for v in g1.vertices}
    k2 = {v.key(): v for v in g2.vertices}
    keys = [k for k in list(k1) + [k for k in k2 if k not in k1] if keep_vertex(k in k1, k in k2)]
    verts = [k1.get(k) or k2.get(k) for k in keys]
    pos = {k: i for i, k in enumerate(keys)}

    def ekeys(g):
        return {(g.vertices[a].key(), g.vertices[b].key()) for a, b in g.edges}

    e1, e2 = ekeys(g1), ekeys(g2)
    edges = sorted(
        (pos[a], pos[b]) for a, b in e1 | e2 if keep_edge((a, b) in e1, (a, b) in e2) and a in pos and b in pos
    )
    return ConsequenceGraph(g1.ambient, g1.max_degree, verts, edges)


def graph_union(g1: ConsequenceGraph, g2: ConsequenceGraph) -> ConsequenceGraph:
    return _combine(g1, g2, lambda a, b: a or b, lambda a, b: a or b)


def graph_intersection(g1: ConsequenceGraph, g2: ConsequenceGraph) -> ConsequenceGraph:
    return _combine(g1, g2, lambda a, b: a and b, lambda a, b: a and b)


def _q(name: str) -> str:
    return '"' + name.replace('"', r"\"") + '"'


def to_dot(g: ConsequenceGraph) -> str:
    lines = ["digraph {", "  rankdir=BT;", "  node [shape=circle, fontsize=10];"]
    levels = g.by_degree()
    for n in range(1, g.max_degree + 1):
        names = " ".join(_q(v.name) + ";" for v in levels.get(n, []))
        lines.append(f"  {{ rank=same; {names} }}" if names else f"  // degree {n}: no vertices")
    for v in g.vertices:
        label = v.name if not v.is_family else f"{v.name}\\n{v.tag}"
        lines.append(f"  {_q(v.name)} [label={_q(label)}];")
    for a, b in g.edges:
        lines.append(f"  {_q(g.vertices[a].name)} -> {_q(g.vertices[b].name)};")
    for a, b in g.links:
        lines.append(f"  {_q(g.vertices[a].name)} -> {_q(g.vertices[b].name)} [dir=none, style=dashed];")
    for i in g.continues:
        more = g.vertices[i].name + "..."
        lines.append(f"  {_q(more)} [label=\"...\", shape=plaintext];")
        lines.append(f"  {_q(g.vertices[i].name)} -> {_q(more)} [style=dotted];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(g: ConsequenceGraph) -> str:
    return json.dumps(
        {
            "vertices": [v.record() for v in g.vertices],
            "edges": [list(e) for e in g.edges],
            "links": [list(e) for e in g.links],
            "continues": list(g.continues),
        },
        indent=2,
    )
