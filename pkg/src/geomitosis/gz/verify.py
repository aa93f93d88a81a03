"""Exhaustive sweeps comparing geometric mitosis with the combinatorial operators."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from geomitosis import pipedream
from geomitosis.errors import CapacityError
from geomitosis.gz.mitosis import GEOMETRIC_MAX_D, adapted_mitosis_A, kogan_mitosis
from geomitosis.gz.tables import (
    Diagram,
    EquationFace,
    GZShape,
    Weight,
    canonical_faces,
    default_flavor,
    diagram_of,
    diagram_to_pipe_dream,
    face_handle,
    face_of_diagram,
    gz_polytope,
    is_reduced_face,
    pipe_dream_to_diagram,
    vertex_equations,
)


@dataclass
class Report:
    checked: int = 0
    mismatches: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_json(self) -> dict:
        return {"checked": self.checked, "mismatches": self.mismatches}

    def summary(self) -> str:
        return f"checked: {self.checked}, mismatches: {len(self.mismatches)}"


def kogan_faces(shape: GZShape, flavor: str, weight: Weight | None = None) -> list[EquationFace]:
    """Every face through the flavor's vertex, by subsets of its equations."""
    V = sorted(vertex_equations(shape, flavor))
    return [EquationFace(shape, frozenset(S), weight) for k in range(len(V) + 1) for S in combinations(V, k)]


def _diagrams(faces, flavor) -> list[list[list[int]]]:
    return sorted(diagram_of(F, flavor).to_json() for F in faces)


def _combinatorial(i_pd: int, D: Diagram, restrict_to_prefix: bool) -> list[list[list[int]]]:
    op = pipedream.mitosis_A if D.shape.kind == "A" else pipedream.mitosis_C
    return sorted(pipe_dream_to_diagram(E).to_json()
                  for E in op(i_pd, diagram_to_pipe_dream(D), restrict_to_prefix=restrict_to_prefix))


def _check_geometric_budget(shape: GZShape) -> None:
    if shape.d > GEOMETRIC_MAX_D:
        raise CapacityError(f"geometric sweep limited to d <= {GEOMETRIC_MAX_D}, got d = {shape.d}")


def hypothesis_main(D: Diagram, i: int) -> bool:
    """+ in (1, i) and column i+1 empty."""
    return (1, i) in D.filled and not any(j == i + 1 for _, j in D.filled)


def verify_theorem_main(n: int, *, mutate: bool = False, method: str = "geometric") -> Report:
    """Geometric M^v_i versus MA_i on GZ tables over every qualifying Kogan face.

    ``mutate=True`` drops the prefix bound of two-row mitosis on the
    combinatorial side, which must make the sweep fail.
    """
    shape = GZShape("A", n)
    if method == "geometric":
        _check_geometric_budget(shape)
    report = Report()
    for F in kogan_faces(shape, "kogan"):
        D = diagram_of(F)
        for i in range(1, n + 1):
            if not hypothesis_main(D, i):
                continue
            report.checked += 1
            geo = _diagrams(kogan_mitosis(i, F, method=method), "kogan")
            comb = _combinatorial(i, D, not mutate)
            if geo != comb:
                report.mismatches.append({"face": F.labels(), "i": i, "geometric": geo, "combinatorial": comb})
    return report


def hypothesis_C(D: Diagram, i: int) -> bool:
    n = D.shape.n
    if (1, i) not in D.filled:
        return False
    if i == n:
        cells = [(2 * k, n - k) for k in range(1, n)]
    else:
        cells = [(2 * k + 1, i - k + 1) for k in range(0, n)] + [(2 * k, i - k) for k in range(1, n)]
    return not any(c in D.filled for c in cells)


def verify_theorem_C(n: int, *, mutate: bool = False, method: str = "geometric") -> Report:
    """Geometric M^v_i at the symplectic Kogan vertex versus M^C_{n-i+1}."""
    shape = GZShape("C", n)
    if method == "geometric":
        _check_geometric_budget(shape)
    report = Report()
    for F in kogan_faces(shape, "symplectic"):
        D = diagram_of(F, "symplectic")
        for i in range(1, n + 1):
            if not hypothesis_C(D, i):
                continue
            report.checked += 1
            geo = _diagrams(kogan_mitosis(i, F, method=method), "symplectic")
            comb = _combinatorial(n - i + 1, D, not mutate)
            if geo != comb:
                report.mismatches.append({"face": F.labels(), "i": i, "geometric": geo, "combinatorial": comb})
    return report


def verify_adapted_A(n: int, *, method: str = "combinatorial", mutate: bool = False) -> Report:
    """Adapted mitosis versus MA_i through the transpose bijection, every reduced Kogan face."""
    shape = GZShape("A", n)
    if method == "geometric":
        _check_geometric_budget(shape)
    report = Report()
    for F in kogan_faces(shape, "kogan"):
        if not is_reduced_face(F):
            continue
        D = diagram_of(F)
        for i in range(1, n + 1):
            report.checked += 1
            got = _diagrams(adapted_mitosis_A(i, F, method=method), "kogan")
            want = _combinatorial(i, D, not mutate)
            if got != want:
                report.mismatches.append({"face": F.labels(), "i": i, "adapted": got, "combinatorial": want})
    return report


def reduced_kogan_faces(n: int) -> list[EquationFace]:
    shape = GZShape("A", n)
    out = []
    for dreams in pipedream.all_reduced_pipe_dreams(n).values():
        out.extend(face_of_diagram(shape, pipe_dream_to_diagram(D)) for D in dreams)
    return canonical_faces(out)


def check_dimension_oracle(shape: GZShape, flavor: str | None = None) -> Report:
    """Closure dimension versus exact affine dimension, every subset of vertex equations."""
    flavor = flavor or default_flavor(shape)
    _check_geometric_budget(shape)
    H = gz_polytope(shape)
    report = Report()
    for F in kogan_faces(shape, flavor):
        report.checked += 1
        handle = face_handle(H, F)
        geo = handle.dim if handle is not None else -1
        if geo != F.dim:
            report.mismatches.append({"face": F.labels(), "closure": F.dim, "polytope": geo})
    return report


__all__ = [
    "Report",
    "check_dimension_oracle",
    "hypothesis_C",
    "hypothesis_main",
    "kogan_faces",
    "reduced_kogan_faces",
    "verify_adapted_A",
    "verify_theorem_C",
    "verify_theorem_main",
]
