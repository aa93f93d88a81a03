"""Schubert polynomials and the face sets that mitosis produces.

Conventions (fixed once, checked by the tests):

* ``schubert_polynomial(n, w)`` starts from ``x_1^n x_2^(n-1) ... x_n`` for the
  longest element and applies ``delta_a`` along a reduced word ``a`` of
  ``w0 w``, first letter first, so that ``S_{w s_i} = delta_i S_w`` whenever
  ``s_i`` is a descent of ``w``.
* a pipe dream contributes ``prod x_i^(crosses in row i)``; a Kogan face
  contributes the monomial of its transposed diagram, i.e. ``x_j`` per ``+`` in
  GZ cell ``(i, j)``.

With these choices the sum over the reduced pipe dreams of ``w`` is
``S_w`` and the faces produced from the Kogan vertex along a reduced word of
``w`` sum to ``S_{w0 w}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from geomitosis import gz, pipedream, weyl
from geomitosis.errors import DomainError
from geomitosis.gz.tables import EquationFace, GZShape
from geomitosis.polynomial import IntPolynomial, divided_difference

__all__ = [
    "IntPolynomial",
    "divided_difference",
    "staircase_monomial",
    "schubert_polynomial",
    "pipe_dream_monomial",
    "pipe_dream_sum",
    "diagram_monomial",
    "face_sum",
    "generate_Sw",
    "dual_face_count",
    "DUAL_CHAINS",
    "compare_dual_chain_vs_subwords",
    "generate_Sw_C_experimental",
    "pipe_dream_chain",
    "verify_schubert",
]


def staircase_monomial(n: int) -> IntPolynomial:
    return IntPolynomial.monomial(range(n, -1, -1))


def schubert_polynomial(n: int, w: Sequence[int], word: Sequence[int] | None = None) -> IntPolynomial:
    """Schubert polynomial of ``w`` in ``S_{n+1}`` by divided differences.

    ``word`` may pin the reduced word of ``w0 w`` to use; the result does not
    depend on it.
    """
    w = weyl.check_element("A", n, w)
    u = weyl.multiply(weyl.longest("A", n), w)
    if word is None:
        word = weyl.reduced_words("A", n, u)[0]
    word = weyl.check_word("A", n, word)
    if weyl.evaluate("A", n, word) != u or not weyl.is_reduced("A", n, word):
        raise DomainError(f"{list(word)} is not a reduced word for w0*w = {u}")
    f = staircase_monomial(n)
    for a in word:
        f = divided_difference(a, f)
    return f


def pipe_dream_monomial(D: pipedream.PipeDream) -> IntPolynomial:
    exp = [0] * (D.n + 1)
    for i, _ in D.crosses:
        exp[i - 1] += 1
    return IntPolynomial.monomial(exp)


def pipe_dream_sum(n: int, w: Sequence[int]) -> IntPolynomial:
    total = IntPolynomial.zero(n + 1)
    for D in pipedream.enumerate_reduced_pipe_dreams(n, w):
        total = total + pipe_dream_monomial(D)
    return total


def diagram_monomial(face: EquationFace) -> IntPolynomial:
    return IntPolynomial.monomial(gz.diagram_of(face).monomial_exponent())


def face_sum(faces: Iterable[EquationFace], n: int) -> IntPolynomial:
    total = IntPolynomial.zero(n + 1)
    for F in faces:
        total = total + diagram_monomial(F)
    return total


def generate_Sw(n: int, word: Sequence[int], *, method: str = "combinatorial") -> list[EquationFace]:
    """Faces obtained from the Kogan vertex by adapted mitosis along ``word`` (first letter first)."""
    word = weyl.check_word("A", n, word)
    if not weyl.is_reduced("A", n, word):
        raise DomainError(f"{list(word)} is not a reduced word")
    faces = [gz.kogan_vertex(GZShape("A", n))]
    for i in word:
        faces = gz.apply_to_set(lambda F, i=i: gz.adapted_mitosis_A(i, F, method=method), faces)
    return faces


def pipe_dream_chain(n: int, word: Sequence[int], *, restrict_to_prefix: bool = True) -> list[pipedream.PipeDream]:
    """The same chain on pipe dreams: MA along ``word`` from the full staircase."""
    dreams = [pipedream.PipeDreamA(n, pipedream.staircase(n))]
    for i in weyl.check_word("A", n, word):
        dreams = pipedream.mitosis_on_set(i, dreams, restrict_to_prefix=restrict_to_prefix)
    return dreams


# ---------------------------------------------------------------------------
# dual Kogan faces in type C


def dual_face_count(n: int, w: Sequence[int]) -> tuple[int, list[EquationFace]]:
    """Dual Kogan faces of the reduced subwords of the long word that evaluate to ``w0 w``."""
    if not 1 <= n <= 4:
        raise DomainError("dual face counts are supported for 1 <= n <= 4")
    w = weyl.check_element("C", n, w)
    target = weyl.multiply(weyl.longest("C", n), w)
    subs = weyl.reduced_subwords("C", n, weyl.w0_bar(n), target)
    faces = gz.canonical_faces(gz.dual_subword_face(n, S) for S in subs)
    return len(faces), faces


# Dual mitosis chains in type C_2: (mitosis index, adapted?) per step.  Index i acts as
# the generator s_{n-i+1}; the adapted step is the bottom-row operator.
DUAL_CHAINS: dict[str, tuple[tuple[int, bool], ...]] = {
    "id": (),
    "s2": ((1, False),),
    "s2s1": ((1, False), (2, False)),
    "s2s1s2": ((1, False), (2, False), (1, False)),
    "s2s1s2s1": ((1, False), (2, False), (1, False), (2, False)),
    "s1": ((2, True),),
    "s1s2": ((2, True), (1, False)),
    "s1s2s1": ((2, True), (1, False), (2, False)),
}


def chain_element(n: int, steps: Sequence[tuple[int, bool]]) -> weyl.Element:
    return weyl.evaluate("C", n, [n - i + 1 for i, _ in steps])


def _dual_step(faces: list[EquationFace], i: int, adapted: bool, swap: bool) -> list[EquationFace]:
    return gz.apply_to_set(
        lambda F: gz.dual_mitosis_C(i, F, adapted=adapted, swap=swap),
        faces,
        lambda F: gz.in_dual_facet(F, i, adapted=adapted, swap=swap),
    )


@dataclass
class DualChainReport:
    mode: str
    rows: list[dict] = field(default_factory=list)

    @property
    def missing(self) -> dict[str, int]:
        return {r["name"]: len(r["missing"]) for r in self.rows if r["missing"]}

    @property
    def extra(self) -> dict[str, int]:
        return {r["name"]: len(r["extra"]) for r in self.rows if r["extra"]}

    @property
    def as_expected(self) -> bool:
        """Exactly one face missing at s2s1, nothing else differs."""
        return self.missing == {"s2s1": 1} and not self.extra

    def to_json(self) -> dict:
        return {"mode": self.mode, "rows": self.rows, "missing": self.missing, "extra": self.extra}


def compare_dual_chain_vs_subwords(n: int = 2, *, mode: str = "stepwise", swap: bool = True) -> DualChainReport:
    """Run the C_2 dual mitosis chains and diff them against the subword faces.

    ``mode="stepwise"`` applies each step to the full subword set of the
    previous element; ``mode="chained"`` feeds each step its own previous
    output, so a missing face propagates.  ``swap=False`` is the mutation with
    P and Q left in their Kogan-side roles.
    """
    if n != 2:
        raise DomainError("the dual chain comparison is defined for n = 2")
    if mode not in ("stepwise", "chained"):
        raise DomainError(f"unknown mode {mode!r}")
    vstar = gz.dual_kogan_vertex(n)
    chained: dict[tuple, list[EquationFace]] = {(): [vstar]}
    report = DualChainReport(mode)
    for name, steps in sorted(DUAL_CHAINS.items(), key=lambda kv: (len(kv[1]), kv[0])):
        w = chain_element(n, steps)
        if steps:
            i, adapted = steps[-1]
            if mode == "stepwise":
                base = dual_face_count(n, chain_element(n, steps[:-1]))[1]
            else:
                base = chained[steps[:-1]]
            faces = _dual_step(base, i, adapted, swap)
        else:
            faces = [vstar]
        chained[steps] = faces
        expected = dual_face_count(n, w)[1]
        got = {tuple(F.labels()) for F in faces}
        want = {tuple(F.labels()) for F in expected}
        report.rows.append({
            "name": name,
            "w": list(w),
            "steps": [[i, adapted] for i, adapted in steps],
            "chain": sorted(map(list, got)),
            "subwords": sorted(map(list, want)),
            "missing": sorted(map(list, want - got)),
            "extra": sorted(map(list, got - want)),
            "dims": sorted(F.dim for F in faces),
        })
    return report


def generate_Sw_C_experimental(n: int, word: Sequence[int], *, reverse: bool = False) -> list[EquationFace]:
    """Experimental: plain M^v_{n-g+1} at the symplectic Kogan vertex for each letter ``g``.

    Letters are consumed first to last, or last to first with ``reverse``; the
    correct order is not settled.  The operator is not adapted, so this is not
    expected to produce Schubert classes in general.
    """
    word = weyl.check_word("C", n, word)
    if not weyl.is_reduced("C", n, word):
        raise DomainError(f"{list(word)} is not a reduced word")
    faces = [gz.kogan_vertex(GZShape("C", n))]
    for g in (reversed(word) if reverse else word):
        i = n - g + 1
        faces = gz.apply_to_set(
            lambda F, i=i: gz.kogan_mitosis(i, F),
            faces,
            lambda F, i=i: gz.A(1, i) in F.closure().eqs,
        )
    return faces


# ---------------------------------------------------------------------------
# sweeps


def verify_schubert(n: int, *, mutate: bool = False) -> gz.Report:
    """Schubert identities over all of ``S_{n+1}`` and every reduced word.

    Checks word independence of the polynomials and of the face sets, the
    pipe-dream sum, ``|S_w| = |RP(w0 w)|``, the face sum against
    ``S_{w0 w}``, and that the same chain on pipe dreams (MA along the word)
    gives the transposed diagrams.  ``mutate`` drops the prefix bound of
    two-row mitosis in that last comparison.
    """
    report = gz.Report()
    w0 = weyl.longest("A", n)
    for w in weyl.elements("A", n):
        u = weyl.multiply(w0, w)
        polys = {schubert_polynomial(n, w, a) for a in weyl.reduced_words("A", n, u)}
        poly = schubert_polynomial(n, w)
        report.checked += 1
        if len(polys) != 1:
            report.mismatches.append({"w": list(w), "check": "schubert word independence"})
        if pipe_dream_sum(n, w) != poly:
            report.mismatches.append({"w": list(w), "check": "pipe dream sum"})
        target = schubert_polynomial(n, u)
        rp = pipedream.enumerate_reduced_pipe_dreams(n, u)
        face_sets = set()
        for word in weyl.reduced_words("A", n, w):
            report.checked += 1
            faces = generate_Sw(n, word)
            face_sets.add(tuple(F.sort_key() for F in faces))
            if len(faces) != len(rp):
                report.mismatches.append({"w": list(w), "word": list(word), "check": "|S_w| = |RP(w0 w)|"})
            if face_sum(faces, n) != target:
                report.mismatches.append({"w": list(w), "word": list(word), "check": "face sum"})
            dreams = pipe_dream_chain(n, word, restrict_to_prefix=not mutate)
            if sorted(gz.diagram_to_pipe_dream(gz.diagram_of(F)) for F in faces) != sorted(dreams):
                report.mismatches.append({"w": list(w), "word": list(word), "check": "pipe dream chain"})
        if len(face_sets) > 1:
            report.mismatches.append({"w": list(w), "check": "S_w word independence"})
    return report
