"""Gelfand-Zetlin tables of types A and C, equation faces and diagrams.

Cells are ``(i, j)`` with row ``i >= 1``.  Row 0 holds the constants
``lambda_1 > ... > lambda_{n+1}``.  A cell's upper neighbours are ``(i-1, j)``
(upper left) and ``(i-1, j+1)`` (upper right); interlacing reads
``upper_left >= cell >= upper_right``.

* type A_n: row ``i`` has ``n-i+1`` cells, ``i = 1..n``; ``d = n(n+1)/2``.
* type C_n: row ``2k-1`` has ``n-k+1`` cells and row ``2k`` has ``n-k`` cells,
  rows ``1..2n-1``; the missing upper-right neighbour of the last cell of row
  ``2k+1`` is a virtual constant 0 sitting at ``(2k, n-k+1)``; ``d = n^2``.

Equations: ``A_{i,j}`` is ``upper_left = cell``; ``B_{i,j}`` is
``cell = upper_right``.  Faces of a GZ polytope are given by sets of such
equations, and `close_and_measure` decides feasibility, dimension and the full
set of implied equations by a strongly-connected-component computation on the
interlacing order graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable

import networkx as nx

from geomitosis import pipedream
from geomitosis.errors import DomainError, FormatError
from geomitosis.polykernel import FaceHandle, HPolytope
from geomitosis.pipedream import PipeDream

Cell = tuple[int, int]

FLAVORS = ("kogan", "symplectic", "dual")


@dataclass(frozen=True)
class GZShape:
    kind: str
    n: int

    def __post_init__(self):
        kind = self.kind.upper()
        if kind not in ("A", "C"):
            raise DomainError(f"unknown GZ type {self.kind!r}")
        if self.n < 1:
            raise DomainError("n must be >= 1")
        object.__setattr__(self, "kind", kind)

    @property
    def nrows(self) -> int:
        return self.n if self.kind == "A" else 2 * self.n - 1

    def row_length(self, i: int) -> int:
        if not 1 <= i <= self.nrows:
            return 0
        if self.kind == "A":
            return self.n - i + 1
        k = (i + 1) // 2
        return self.n - k + 1 if i % 2 else self.n - k

    @cached_property
    def cells(self) -> tuple[Cell, ...]:
        """Row-major order; this is also the coordinate order of the polytope."""
        return tuple((i, j) for i in range(1, self.nrows + 1) for j in range(1, self.row_length(i) + 1))

    @cached_property
    def index(self) -> dict[Cell, int]:
        return {c: k for k, c in enumerate(self.cells)}

    @property
    def d(self) -> int:
        return len(self.cells)

    def has_cell(self, cell: Cell) -> bool:
        return cell in self.index

    def neighbour(self, cell: Cell, side: str) -> tuple[str, object]:
        """Upper neighbour of ``cell`` (side "A" = left, "B" = right).

        Returns ``("cell", (i, j))``, ``("lambda", j)`` for a top constant, or
        ``("zero", None)`` for a virtual zero of type C.
        """
        i, j = cell
        jj = j if side == "A" else j + 1
        if i == 1:
            return ("lambda", jj)
        if self.has_cell((i - 1, jj)):
            return ("cell", (i - 1, jj))
        if self.kind == "C" and (i - 1) % 2 == 0 and jj == self.row_length(i - 1) + 1:
            return ("zero", None)
        raise DomainError(f"cell {cell} has no {side}-neighbour")


@dataclass(frozen=True)
class Weight:
    lam: tuple[Fraction, ...]

    @classmethod
    def of(cls, values: Iterable) -> "Weight":
        return cls(tuple(Fraction(v) for v in values))

    @classmethod
    def rho(cls, n: int) -> "Weight":
        return cls.of(range(n, -1, -1))

    def check(self, shape: GZShape) -> "Weight":
        if len(self.lam) != shape.n + 1:
            raise DomainError(f"weight needs {shape.n + 1} entries")
        if any(a <= b for a, b in zip(self.lam, self.lam[1:])):
            raise DomainError("weight must be strictly decreasing")
        if shape.kind == "C" and self.lam[-1] != 0:
            raise DomainError("type C weight must end with 0")
        return self

    def value(self, ref: tuple[str, object]) -> Fraction:
        tag, where = ref
        return self.lam[where - 1] if tag == "lambda" else Fraction(0)


@dataclass(frozen=True, order=True)
class Equation:
    i: int
    j: int
    kind: str

    def __post_init__(self):
        if self.kind not in ("A", "B"):
            raise DomainError(f"equation kind must be A or B, got {self.kind!r}")

    @property
    def cell(self) -> Cell:
        return (self.i, self.j)

    @property
    def label(self) -> str:
        return f"{self.kind}{self.i},{self.j}"

    @classmethod
    def parse(cls, text: str) -> "Equation":
        text = text.strip()
        try:
            i, j = text[1:].split(",")
            return cls(int(i), int(j), text[0].upper())
        except (ValueError, IndexError) as exc:
            raise FormatError(f"cannot parse equation {text!r}") from exc

    def to_json(self) -> dict:
        return {"kind": self.kind, "i": self.i, "j": self.j}

    def __str__(self) -> str:
        return self.label


def A(i: int, j: int) -> Equation:
    return Equation(i, j, "A")


def B(i: int, j: int) -> Equation:
    return Equation(i, j, "B")


def all_equations(shape: GZShape) -> tuple[Equation, ...]:
    return tuple(Equation(i, j, k) for (i, j) in shape.cells for k in ("A", "B"))


def _check_eqs(shape: GZShape, eqs: Iterable[Equation]) -> frozenset[Equation]:
    eqs = frozenset(eqs)
    for e in eqs:
        if not shape.has_cell(e.cell):
            raise DomainError(f"equation {e} refers to a cell outside the {shape.kind}{shape.n} table")
    return eqs


@dataclass(frozen=True)
class Closure:
    eqs: frozenset[Equation]  # every equation implied by the input
    classes: tuple[frozenset, ...]  # equality classes of cells and constants
    feasible: bool
    dim: int


@dataclass(frozen=True)
class EquationFace:
    shape: GZShape
    eqs: frozenset[Equation]
    weight: Weight = None

    def __post_init__(self):
        object.__setattr__(self, "eqs", _check_eqs(self.shape, self.eqs))
        if self.weight is None:
            object.__setattr__(self, "weight", Weight.rho(self.shape.n))
        self.weight.check(self.shape)

    def closure(self) -> Closure:
        return close_and_measure(self)

    @property
    def dim(self) -> int:
        return self.closure().dim

    @property
    def feasible(self) -> bool:
        return self.closure().feasible

    def closed(self) -> "EquationFace":
        return EquationFace(self.shape, self.closure().eqs, self.weight)

    def with_eqs(self, eqs: Iterable[Equation]) -> "EquationFace":
        return EquationFace(self.shape, frozenset(eqs), self.weight)

    def sort_key(self) -> tuple:
        return tuple((e.i, e.j, e.kind) for e in sorted(self.eqs))

    def labels(self) -> list[str]:
        return [e.label for e in sorted(self.eqs)]

    def to_json(self) -> dict:
        return {"type": self.shape.kind, "n": self.shape.n, "eqs": [e.to_json() for e in sorted(self.eqs)]}

    @classmethod
    def from_json(cls, data: dict | str) -> "EquationFace":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise FormatError(str(exc)) from exc
        try:
            shape = GZShape(data["type"], int(data["n"]))
            return cls(shape, frozenset(Equation(int(e["i"]), int(e["j"]), e["kind"]) for e in data["eqs"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"bad face JSON: {exc}") from exc

    def __str__(self) -> str:
        return "{" + ", ".join(self.labels()) + "}"


def canonical_faces(faces: Iterable[EquationFace]) -> list[EquationFace]:
    return sorted(set(faces), key=EquationFace.sort_key)


# ---------------------------------------------------------------------------
# closure


def _node(shape: GZShape, weight: Weight, ref) -> object:
    # constants are keyed by value so that every zero is one node
    tag, where = ref
    return ("const", weight.value(ref)) if tag != "cell" else where


def _is_const(node) -> bool:
    return node[0] == "const"


@lru_cache(maxsize=200_000)
def _close(shape: GZShape, weight: Weight, eqs: frozenset[Equation]) -> Closure:
    graph = nx.DiGraph()  # edge x -> y means x >= y
    graph.add_nodes_from(shape.cells)
    consts = sorted({("const", v) for v in weight.lam} | ({("const", Fraction(0))} if shape.kind == "C" else set()))
    graph.add_edges_from(zip(reversed(consts), list(reversed(consts))[1:]))
    for c in shape.cells:
        graph.add_edge(_node(shape, weight, shape.neighbour(c, "A")), c)
        graph.add_edge(c, _node(shape, weight, shape.neighbour(c, "B")))
    for e in eqs:
        other = _node(shape, weight, shape.neighbour(e.cell, e.kind))
        graph.add_edge(*((e.cell, other) if e.kind == "A" else (other, e.cell)))
    comps = [frozenset(c) for c in nx.strongly_connected_components(graph)]

    comp_of = {x: k for k, comp in enumerate(comps) for x in comp}
    feasible = all(sum(1 for x in comp if _is_const(x)) <= 1 for comp in comps)
    dim = sum(1 for comp in comps if not any(_is_const(x) for x in comp))
    implied = frozenset(
        e
        for e in all_equations(shape)
        if comp_of[e.cell] == comp_of[_node(shape, weight, shape.neighbour(e.cell, e.kind))]
    )
    classes = tuple(sorted(comps, key=lambda c: sorted(map(str, c))))
    return Closure(implied, classes, feasible, dim if feasible else -1)


def close_and_measure(face: EquationFace) -> Closure:
    """Implied equations, equality classes, feasibility and dimension of a face.

    Every point of the polytope satisfies ``upper_left >= cell >= upper_right``;
    each equation adds the reverse edge.  Nodes in one strongly connected
    component are forced equal; the face is empty iff some component contains
    two distinct constants, and otherwise its dimension is the number of
    components without a constant.
    """
    return _close(face.shape, face.weight, face.eqs)


# ---------------------------------------------------------------------------
# polytope, vertices


def gz_polytope(shape: GZShape, weight: Weight | None = None) -> HPolytope:
    """Interlacing inequalities, one A-row and one B-row per cell (labels "A1,2", "B1,2")."""
    weight = (weight or Weight.rho(shape.n)).check(shape)
    d = shape.d
    rows = []
    for c in shape.cells:
        k = shape.index[c]
        for side in ("A", "B"):
            a = [Fraction(0)] * d
            b = Fraction(0)
            ref = shape.neighbour(c, side)
            sign = 1 if side == "A" else -1  # A: x_c - x_ul <= 0 ; B: x_ur - x_c <= 0
            a[k] += sign
            if ref[0] == "cell":
                a[shape.index[ref[1]]] -= sign
            else:
                b += sign * weight.value(ref)
            rows.append((a, b, Equation(c[0], c[1], side).label))
    return HPolytope.from_rows(d, rows)


def flavor_kind(flavor: str, row: int) -> str:
    if flavor == "kogan":
        return "A"
    if flavor == "symplectic":
        return "A" if row % 2 else "B"
    if flavor == "dual":
        return "B" if row % 2 else "A"
    raise DomainError(f"unknown flavor {flavor!r}; expected one of {FLAVORS}")


def _check_flavor(shape: GZShape, flavor: str) -> None:
    ok = (shape.kind == "A" and flavor == "kogan") or (shape.kind == "C" and flavor in ("symplectic", "dual"))
    if not ok:
        raise DomainError(f"flavor {flavor!r} does not apply to type {shape.kind}")


def default_flavor(shape: GZShape) -> str:
    return "kogan" if shape.kind == "A" else "symplectic"


def flavor_equation(flavor: str, cell: Cell) -> Equation:
    return Equation(cell[0], cell[1], flavor_kind(flavor, cell[0]))


def vertex_equations(shape: GZShape, flavor: str) -> frozenset[Equation]:
    _check_flavor(shape, flavor)
    return frozenset(flavor_equation(flavor, c) for c in shape.cells)


def kogan_vertex(shape: GZShape, weight: Weight | None = None) -> EquationFace:
    """Kogan vertex (type A) or symplectic Kogan vertex (type C)."""
    return EquationFace(shape, vertex_equations(shape, default_flavor(shape)), weight)


def dual_kogan_vertex(n: int, weight: Weight | None = None) -> EquationFace:
    shape = GZShape("C", n)
    return EquationFace(shape, vertex_equations(shape, "dual"), weight)


def point_of(face: EquationFace) -> tuple[Fraction, ...]:
    """Coordinates of a zero-dimensional face (row-major cell order)."""
    cl = face.closure()
    if not cl.feasible or cl.dim != 0:
        raise DomainError("face is not a vertex")
    value = {}
    for comp in cl.classes:
        const = next(x[1] for x in comp if _is_const(x))
        for x in comp:
            value[x] = const
    return tuple(value[c] for c in face.shape.cells)


def face_handle(H: HPolytope, face: EquationFace) -> FaceHandle | None:
    from geomitosis import polykernel

    return polykernel.face_of(H, [e.label for e in face.eqs])


def face_from_handle(shape: GZShape, H: HPolytope, handle: FaceHandle, weight: Weight | None = None) -> EquationFace:
    return EquationFace(shape, frozenset(Equation.parse(H.rows[r].label) for r in handle.tight), weight)


# ---------------------------------------------------------------------------
# diagrams


@dataclass(frozen=True)
class Diagram:
    shape: GZShape
    filled: frozenset[Cell] = field(default_factory=frozenset)

    def __post_init__(self):
        filled = frozenset(tuple(c) for c in self.filled)
        bad = [c for c in filled if not self.shape.has_cell(c)]
        if bad:
            raise DomainError(f"cells {sorted(bad)} are outside the table")
        object.__setattr__(self, "filled", filled)

    def sort_key(self) -> tuple:
        return tuple(sorted(self.filled))

    def to_json(self) -> list:
        return [list(c) for c in sorted(self.filled)]

    def monomial_exponent(self) -> tuple[int, ...]:
        """Type A: a + in cell (i, j) contributes x_j (row j of the transposed pipe dream)."""
        exp = [0] * (self.shape.n + 1)
        for _, j in self.filled:
            exp[j - 1] += 1
        return tuple(exp)

    def render(self, flavor: str | None = None, weight: Weight | None = None) -> str:
        """Staggered table; row i is indented by i half-cells, constants on a dashed header."""
        lam = (weight or Weight.rho(self.shape.n)).lam
        lines = ["-".join(str(x) for x in lam)]
        for i in range(1, self.shape.nrows + 1):
            marks = []
            for j in range(1, self.shape.row_length(i) + 1):
                if (i, j) in self.filled:
                    marks.append(flavor_kind(flavor, i) if flavor in ("symplectic", "dual") else "+")
                else:
                    marks.append(".")
            lines.append(" " * i + " ".join(marks))
        return "\n".join(lines)


def diagram_of(face: EquationFace, flavor: str | None = None) -> Diagram:
    """Cells whose flavor equation holds on the face."""
    flavor = flavor or default_flavor(face.shape)
    _check_flavor(face.shape, flavor)
    implied = face.closure().eqs
    return Diagram(face.shape, frozenset(c for c in face.shape.cells if flavor_equation(flavor, c) in implied))


def face_of_diagram(shape: GZShape, diagram: Diagram | Iterable[Cell], flavor: str | None = None,
                    weight: Weight | None = None) -> EquationFace:
    flavor = flavor or default_flavor(shape)
    _check_flavor(shape, flavor)
    if not isinstance(diagram, Diagram):
        diagram = Diagram(shape, frozenset(diagram))
    if diagram.shape != shape:
        raise DomainError("diagram and shape disagree")
    return EquationFace(shape, frozenset(flavor_equation(flavor, c) for c in diagram.filled), weight)


# ---------------------------------------------------------------------------
# bijections with (skew) pipe dreams


def pd_to_gz_A(n: int, cell: Cell) -> Cell:
    k, c = cell
    if not (k >= 1 and c >= 1 and k + c <= n + 1):
        raise DomainError(f"{cell} is outside the type A{n} staircase")
    return (c, k)


def gz_to_pd_A(n: int, cell: Cell) -> Cell:
    i, j = cell
    if not GZShape("A", n).has_cell(cell):
        raise DomainError(f"{cell} is not a cell of the type A{n} table")
    return (j, i)


def pd_to_gz_C(n: int, cell: Cell) -> Cell:
    k, c = cell
    if not (1 <= k <= c and k + c <= 2 * n):
        raise DomainError(f"{cell} is outside the type C{n} skew region")
    if c <= n:
        return (2 * k - 1, c - k + 1)
    return (2 * k, 2 * n + 1 - k - c)


def gz_to_pd_C(n: int, cell: Cell) -> Cell:
    i, j = cell
    if not GZShape("C", n).has_cell(cell):
        raise DomainError(f"{cell} is not a cell of the type C{n} table")
    if i % 2:
        k = (i + 1) // 2
        return (k, j + k - 1)
    k = i // 2
    return (k, 2 * n + 1 - k - j)


def diagram_to_pipe_dream(diagram: Diagram) -> PipeDream:
    shape = diagram.shape
    if shape.kind == "A":
        return pipedream.PipeDreamA(shape.n, (gz_to_pd_A(shape.n, c) for c in diagram.filled))
    return pipedream.SkewPipeDreamC(shape.n, (gz_to_pd_C(shape.n, c) for c in diagram.filled))


def pipe_dream_to_diagram(D: PipeDream) -> Diagram:
    shape = GZShape(D.kind, D.n)
    conv = pd_to_gz_A if D.kind == "A" else pd_to_gz_C
    return Diagram(shape, frozenset(conv(D.n, c) for c in D.crosses))


def is_reduced_face(face: EquationFace) -> bool:
    """A type-A Kogan face is reduced when its transposed diagram is a reduced pipe dream."""
    if face.shape.kind != "A":
        raise DomainError("reducedness is only defined for type A Kogan faces")
    return pipedream.is_reduced(diagram_to_pipe_dream(diagram_of(face)))


def is_kogan_face(face: EquationFace, flavor: str | None = None) -> bool:
    """True when the face contains the flavor's vertex (its equations hold there)."""
    flavor = flavor or default_flavor(face.shape)
    vertex = EquationFace(face.shape, vertex_equations(face.shape, flavor), face.weight)
    return face.feasible and face.closure().eqs <= vertex.closure().eqs


# ---------------------------------------------------------------------------
# subwords of the long word and dual Kogan faces


def inscription(n: int) -> tuple[Cell, ...]:
    """GZ cell of each letter of the long word, position 1 first.

    Rows are filled from the bottom row up; odd rows right to left, even rows
    left to right.
    """
    shape = GZShape("C", n)
    order = []
    for i in range(shape.nrows, 0, -1):
        cols = range(1, shape.row_length(i) + 1)
        order.extend((i, j) for j in (reversed(cols) if i % 2 else cols))
    return tuple(order)


def dual_subword_face(n: int, positions: Iterable[int], weight: Weight | None = None) -> EquationFace:
    """Dual Kogan face of a subword: a kept letter at cell (i, j) gives B_{i,j} (odd i) or A_{i,j} (even i)."""
    cells = inscription(n)
    positions = sorted(set(int(p) for p in positions))
    if any(not 1 <= p <= len(cells) for p in positions):
        raise DomainError(f"subword positions must lie in 1..{len(cells)}")
    shape = GZShape("C", n)
    return EquationFace(shape, frozenset(flavor_equation("dual", cells[p - 1]) for p in positions), weight)
