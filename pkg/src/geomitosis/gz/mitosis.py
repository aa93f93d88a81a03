"""Geometric mitosis on Kogan-type faces of GZ polytopes.

All three Kogan-type vertices (Kogan, symplectic Kogan, dual Kogan) are simple,
so the faces through such a vertex ``v`` correspond to subsets of its ``d``
equations: a subset ``S`` spans a face of dimension ``d - |S|`` and inclusion
of faces is reverse inclusion of subsets.  In that lattice every ``v``-face of
``P`` is admissible with ``exp(F) = F - {p}``, and only the test
``E & Q <= exp(F) & Q`` needs real work, which `close_and_measure` provides.

Each operator has two interchangeable routes:

* ``method="combinatorial"``: the subset lattice plus the closure calculus;
* ``method="geometric"``: the exact polytope kernel on the H-description.

Results are Kogan-type faces written as their set of vertex equations.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable, Iterable

from geomitosis import polykernel as pk
from geomitosis.errors import CapacityError, DomainError
from geomitosis.gz.tables import (
    A,
    B,
    Equation,
    EquationFace,
    GZShape,
    Weight,
    _close,
    canonical_faces,
    face_handle,
    face_from_handle,
    gz_polytope,
    is_reduced_face,
    point_of,
    vertex_equations,
)

METHODS = ("combinatorial", "geometric")

# largest table handled by the geometric route (d <= 9 keeps vertex enumeration quick)
GEOMETRIC_MAX_D = 9

_EMPTY = pk.FaceHandle(frozenset(), frozenset(), -1)


def _vertex_closure(shape: GZShape, weight: Weight, flavor: str) -> frozenset[Equation]:
    V = vertex_equations(shape, flavor)
    cl = _close(shape, weight, V)
    if cl.dim != 0 or cl.eqs != V:
        raise DomainError(f"the {flavor} vertex is not a simple vertex for this weight")
    return V


def kogan_part(face: EquationFace, flavor: str) -> frozenset[Equation]:
    """The vertex equations holding on ``face``; raises if the face misses the vertex."""
    V = _vertex_closure(face.shape, face.weight, flavor)
    cl = face.closure()
    if not cl.feasible or not cl.eqs <= V:
        raise DomainError(f"{face} does not contain the {flavor} vertex")
    return cl.eqs


def equation_mitosis(
    shape: GZShape,
    weight: Weight,
    flavor: str,
    F: frozenset[Equation],
    p: Equation,
    q: Iterable[Equation],
    ambient: frozenset[Equation] = frozenset(),
) -> list[frozenset[Equation]]:
    """Mitosis at the flavor's vertex, computed in the subset lattice.

    ``F`` and ``ambient`` are subsets of the vertex equations, the facet ``P``
    is ``ambient + {p}`` and ``Q`` is ``ambient + q``.
    """
    V = _vertex_closure(shape, weight, flavor)
    q = frozenset(q) | ambient
    if not (ambient <= F <= V and p in V):
        raise DomainError("F must be a vertex face inside the ambient face")
    if p not in F:
        raise DomainError("F is not contained in P")
    if _close(shape, weight, q).eqs <= V:
        raise DomainError("the vertex lies on Q")

    def meet_q(S: frozenset[Equation]) -> frozenset[Equation] | None:
        cl = _close(shape, weight, S | q)
        return cl.eqs if cl.feasible else None

    exp = F - {p}
    exp_q = meet_q(exp)
    free = sorted(V - ambient - {p})
    out = []
    for extra in combinations(free, len(F) - 1 - len(ambient)):
        E = ambient | frozenset(extra)
        eq = meet_q(E)
        # an empty intersection with Q is contained in anything
        if eq is None or (exp_q is not None and eq >= exp_q):
            out.append(E)
    assert exp in out, "the expansion of F is always an offspring"
    return sorted(out, key=sorted)


def geometric_equation_mitosis(
    shape: GZShape,
    weight: Weight,
    flavor: str,
    F: frozenset[Equation],
    p: Equation,
    q: Iterable[Equation],
    ambient: frozenset[Equation] = frozenset(),
) -> list[frozenset[Equation]]:
    """Same contract as `equation_mitosis`, run through the exact polytope kernel."""
    if shape.d > GEOMETRIC_MAX_D:
        raise CapacityError(f"geometric route limited to d <= {GEOMETRIC_MAX_D}, got d = {shape.d}")
    V = _vertex_closure(shape, weight, flavor)
    H = gz_polytope(shape, weight)
    base = EquationFace(shape, ambient, weight)
    within = face_handle(H, base) if ambient else None
    P = face_handle(H, base.with_eqs(ambient | {p}))
    Q = face_handle(H, base.with_eqs(ambient | frozenset(q))) or _EMPTY
    Fh = face_handle(H, base.with_eqs(F))
    v = point_of(EquationFace(shape, V, weight))
    out = []
    for E in pk.geometric_mitosis(H, P, Q, v, Fh, within):
        out.append(face_from_handle(shape, H, E, weight).closure().eqs & V)
    return sorted(out, key=sorted)


def _run(method: str) -> Callable:
    if method == "combinatorial":
        return equation_mitosis
    if method == "geometric":
        return geometric_equation_mitosis
    raise DomainError(f"unknown method {method!r}; expected one of {METHODS}")


def _faces(shape, weight, sets) -> list[EquationFace]:
    return canonical_faces(EquationFace(shape, S, weight) for S in sets)


def _check_index(shape: GZShape, i: int) -> None:
    if not 1 <= i <= shape.n:
        raise DomainError(f"mitosis index {i} out of range 1..{shape.n}")


# ---------------------------------------------------------------------------
# plain mitosis M^v_i: P = {x^1_i = lambda_i}, Q = {x^1_i = lambda_{i+1}}


def kogan_mitosis(i: int, F: EquationFace, *, method: str = "combinatorial") -> list[EquationFace]:
    """M^v_i at the Kogan (type A) or symplectic Kogan (type C) vertex."""
    shape = F.shape
    _check_index(shape, i)
    flavor = "kogan" if shape.kind == "A" else "symplectic"
    S = kogan_part(F, flavor)
    return _faces(shape, F.weight, _run(method)(shape, F.weight, flavor, S, A(1, i), [B(1, i)]))


# ---------------------------------------------------------------------------
# adapted type-A mitosis


def envelope(i: int, S: frozenset[Equation]) -> frozenset[Equation]:
    """Equations A_{k,i}, A_{k,i+1} for every k where both belong to ``S``."""
    out = set()
    for k in range(1, max((e.i for e in S), default=0) + 1):
        if A(k, i) in S and A(k, i + 1) in S:
            out |= {A(k, i), A(k, i + 1)}
    return frozenset(out)


def adapted_data(i: int, F: EquationFace) -> tuple[frozenset[Equation], Equation, Equation]:
    """``(env(F), p, q)`` where ``P^F = env + {p}`` and ``Q^F = env + {q}``."""
    S = kogan_part(F, "kogan")
    env = envelope(i, S)
    s = 1
    while A(s, i) in env:
        s += 1
    return env, A(s, i), B(s, i)


def adapted_mitosis_A(i: int, F: EquationFace, *, method: str = "combinatorial") -> list[EquationFace]:
    """Adapted mitosis on a reduced Kogan face; mitosis runs inside ``env(F)``."""
    shape = F.shape
    if shape.kind != "A":
        raise DomainError("adapted mitosis is defined for type A")
    _check_index(shape, i)
    if not is_reduced_face(F):
        raise DomainError(f"{F} is not a reduced Kogan face")
    S = kogan_part(F, "kogan")
    env, p, q = adapted_data(i, F)
    if p not in S:
        return []
    return _faces(shape, F.weight, _run(method)(shape, F.weight, "kogan", S, p, [q], env))


# ---------------------------------------------------------------------------
# dual Kogan mitosis (type C): P and Q trade places


def dual_facets(n: int, i: int, *, adapted: bool = False, swap: bool = True) -> tuple[Equation, Equation]:
    """``(p, q)`` for the dual operator.

    Plain: ``P = {x^1_i = lambda_{i+1}}`` (B_{1,i}), ``Q = {x^1_i = lambda_i}``
    (A_{1,i}).  Adapted (``i = n`` only): the same split on the bottom row,
    ``P = {x^{2n-1}_1 = 0}`` (B_{2n-1,1}) and ``Q`` given by A_{2n-1,1}.
    ``swap=False`` keeps the Kogan-side orientation (a deliberate mutation).
    """
    if adapted:
        if i != n:
            raise DomainError("the adapted dual operator exists for i = n only")
        p, q = B(2 * n - 1, 1), A(2 * n - 1, 1)
    else:
        p, q = B(1, i), A(1, i)
    return (p, q) if swap else (q, p)


def dual_mitosis_C(
    i: int,
    F: EquationFace,
    *,
    adapted: bool = False,
    swap: bool = True,
    method: str = "combinatorial",
) -> list[EquationFace]:
    """M^{v*}_i on a dual Kogan face lying in ``P``."""
    shape = F.shape
    if shape.kind != "C":
        raise DomainError("dual mitosis is defined for type C")
    _check_index(shape, i)
    p, q = dual_facets(shape.n, i, adapted=adapted, swap=swap)
    S = kogan_part(F, "dual")
    if p not in S:
        raise DomainError(f"{F} is not contained in the facet {p}")
    return _faces(shape, F.weight, _run(method)(shape, F.weight, "dual", S, p, [q]))


def in_dual_facet(F: EquationFace, i: int, *, adapted: bool = False, swap: bool = True) -> bool:
    p, _ = dual_facets(F.shape.n, i, adapted=adapted, swap=swap)
    return p in F.closure().eqs


def apply_to_set(op: Callable[[EquationFace], list[EquationFace]], faces: Iterable[EquationFace],
                 applies: Callable[[EquationFace], bool] = lambda F: True) -> list[EquationFace]:
    """Union of ``op`` over the faces it applies to (faces outside ``P`` are skipped)."""
    out: set[EquationFace] = set()
    for F in faces:
        if applies(F):
            out.update(op(F))
    return canonical_faces(out)
