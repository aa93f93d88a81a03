"""Pipe dreams (type A), skew pipe dreams (type C) and their mitosis operators.

Everything reduces to `two_row_mitosis`, which acts on a *basic* pipe dream:
a row ``a`` of ``ell+1`` squares over a row ``b`` of ``ell`` squares.  The
type-A and type-C operators only differ in which table cells they label as
``a1..a(ell+1)`` and ``b1..b(ell)``.

Cells are 1-based ``(row, column)`` pairs.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

from geomitosis import weyl
from geomitosis.errors import DomainError, FormatError

Cell = tuple[int, int]


@dataclass(frozen=True)
class BasicPipeDream:
    ell: int
    a_row: tuple[bool, ...]
    b_row: tuple[bool, ...]

    def __post_init__(self):
        if self.ell < 0 or len(self.a_row) != self.ell + 1 or len(self.b_row) != self.ell:
            raise DomainError(f"basic pipe dream needs {self.ell + 1} a-squares and {self.ell} b-squares")

    @classmethod
    def from_filled(cls, ell: int, a: Iterable[int] = (), b: Iterable[int] = ()) -> "BasicPipeDream":
        """Build from 1-based indices of filled squares."""
        a, b = set(a), set(b)
        if any(not 1 <= j <= ell + 1 for j in a) or any(not 1 <= j <= ell for j in b):
            raise DomainError("square index out of range")
        return cls(ell, tuple(j in a for j in range(1, ell + 2)), tuple(j in b for j in range(1, ell + 1)))

    @property
    def a_filled(self) -> tuple[int, ...]:
        return tuple(j for j, f in enumerate(self.a_row, start=1) if f)

    @property
    def b_filled(self) -> tuple[int, ...]:
        return tuple(j for j, f in enumerate(self.b_row, start=1) if f)

    @property
    def size(self) -> int:
        return sum(self.a_row) + sum(self.b_row)

    def to_json(self) -> dict:
        return {"ell": self.ell, "a": list(self.a_filled), "b": list(self.b_filled)}

    def render(self) -> str:
        top = " ".join("+" if f else "." for f in self.a_row)
        bottom = " ".join("+" if f else "." for f in self.b_row)
        return f"{top}\n{bottom}".rstrip()


@dataclass(frozen=True)
class TwoRowResult:
    r: int
    J: tuple[int, ...]
    offsprings: tuple[BasicPipeDream, ...]


def two_row_mitosis(D: BasicPipeDream, *, restrict_to_prefix: bool = True) -> TwoRowResult:
    """Two-row mitosis.  Offsprings come back in ascending order of the erased index.

    ``restrict_to_prefix=False`` drops the ``j <= r_D`` condition; it exists
    only as a mutation for exercising the verification harnesses.
    """
    if not D.a_row[0]:
        return TwoRowResult(0, (), ())
    r = 0
    while r < D.ell + 1 and D.a_row[r]:
        r += 1
    bound = r if restrict_to_prefix else D.ell + 1
    J = tuple(
        j
        for j in range(1, bound + 1)
        if D.a_row[j - 1] and (j == D.ell + 1 or not D.b_row[j - 1])
    )
    offsprings = []
    for p in J:
        a, b = list(D.a_row), list(D.b_row)
        a[p - 1] = False
        for j in J:
            if j < p:
                a[j - 1] = False
                b[j - 1] = True
        offsprings.append(BasicPipeDream(D.ell, tuple(a), tuple(b)))
    return TwoRowResult(r, J, tuple(offsprings))


# ---------------------------------------------------------------------------
# tables


def staircase(n: int) -> tuple[Cell, ...]:
    """Cells allowed in a type-A_n pipe dream: i + j <= n + 1."""
    return tuple((i, j) for i in range(1, n + 1) for j in range(1, n + 2 - i))


def skew_region(n: int) -> tuple[Cell, ...]:
    """Cells allowed in a type-C_n skew pipe dream: i <= j and i + j <= 2n."""
    return tuple((i, j) for i in range(1, n + 1) for j in range(i, 2 * n + 1 - i))


@dataclass(frozen=True)
class PipeDream:
    """A (skew) pipe dream: ``kind`` is "A" for the staircase, "C" for the skew region."""

    kind: str
    n: int
    crosses: frozenset[Cell]

    def __post_init__(self):
        if self.kind not in ("A", "C"):
            raise DomainError(f"unknown pipe dream type {self.kind!r}")
        if self.n < 1:
            raise DomainError("n must be >= 1")
        object.__setattr__(self, "crosses", frozenset((int(i), int(j)) for i, j in self.crosses))
        allowed = set(self.region)
        bad = sorted(c for c in self.crosses if c not in allowed)
        if bad:
            raise DomainError(f"cells {bad} lie outside the type-{self.kind}{self.n} region")

    @property
    def region(self) -> tuple[Cell, ...]:
        return staircase(self.n) if self.kind == "A" else skew_region(self.n)

    @property
    def size(self) -> int:
        return len(self.crosses)

    def sort_key(self) -> tuple:
        return (self.kind, self.n, tuple(sorted(self.crosses)))

    def __lt__(self, other: "PipeDream") -> bool:
        return self.sort_key() < other.sort_key()

    def row_counts(self) -> tuple[int, ...]:
        counts = [0] * self.n
        for i, _ in self.crosses:
            counts[i - 1] += 1
        return tuple(counts)

    def to_json(self) -> dict:
        return {"type": self.kind, "n": self.n, "crosses": [list(c) for c in sorted(self.crosses)]}

    @classmethod
    def from_json(cls, data: dict | str) -> "PipeDream":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise FormatError(str(exc)) from exc
        try:
            return cls(str(data["type"]).upper(), int(data["n"]), frozenset(tuple(c) for c in data["crosses"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"bad pipe dream JSON: {exc}") from exc

    def __str__(self) -> str:
        return render(self)


def PipeDreamA(n: int, crosses: Iterable[Cell] = ()) -> PipeDream:
    return PipeDream("A", n, frozenset(crosses))


def SkewPipeDreamC(n: int, crosses: Iterable[Cell] = ()) -> PipeDream:
    return PipeDream("C", n, frozenset(crosses))


def canonical(dreams: Iterable[PipeDream]) -> list[PipeDream]:
    """Deduplicate and sort lexicographically on sorted cross lists."""
    return sorted(set(dreams))


def _splice(D: PipeDream, a_cells: list[Cell], b_cells: list[Cell], restrict_to_prefix: bool) -> list[PipeDream]:
    basic = BasicPipeDream(
        len(b_cells),
        tuple(c in D.crosses for c in a_cells),
        tuple(c in D.crosses for c in b_cells),
    )
    touched = set(a_cells) | set(b_cells)
    rest = D.crosses - touched
    out = []
    for child in two_row_mitosis(basic, restrict_to_prefix=restrict_to_prefix).offsprings:
        cells = set(rest)
        cells.update(c for c, f in zip(a_cells, child.a_row) if f)
        cells.update(c for c, f in zip(b_cells, child.b_row) if f)
        out.append(PipeDream(D.kind, D.n, frozenset(cells)))
    return out


def labels_A(n: int, i: int) -> tuple[list[Cell], list[Cell]]:
    """a- and b-squares used by MA_i."""
    if not 1 <= i <= n:
        raise DomainError(f"mitosis index {i} out of range 1..{n}")
    a = [(i, j) for j in range(1, n - i + 2)]
    b = [(i + 1, j) for j in range(1, n - i + 1)]
    return a, b


def labels_C(n: int, i: int) -> tuple[list[Cell], list[Cell]]:
    """a- and b-squares used by MC_i (i = 1 uses the middle column pair)."""
    if not 1 <= i <= n:
        raise DomainError(f"mitosis index {i} out of range 1..{n}")
    if i == 1:
        a = [(k, n) for k in range(1, n + 1)]
        b = [(k, n + 1) for k in range(1, n)]
        return a, b
    a, b = [], []
    for k in range(1, n - i + 2):
        a += [(k, n - i + 1), (k, n + i - 1)]
        b.append((k, n - i + 2))
        if k <= n - i:
            b.append((k, n + i))
    return a, b


def mitosis_A(i: int, D: PipeDream, *, restrict_to_prefix: bool = True) -> list[PipeDream]:
    """Knutson-Miller mitosis MA_i: two-row mitosis on rows i and i+1."""
    if D.kind != "A":
        raise DomainError("mitosis_A needs a type-A pipe dream")
    a, b = labels_A(D.n, i)
    return canonical(_splice(D, a, b, restrict_to_prefix))


def mitosis_C(i: int, D: PipeDream, *, restrict_to_prefix: bool = True) -> list[PipeDream]:
    """Mitosis MC_i on skew pipe dreams."""
    if D.kind != "C":
        raise DomainError("mitosis_C needs a skew pipe dream")
    a, b = labels_C(D.n, i)
    return canonical(_splice(D, a, b, restrict_to_prefix))


def mitosis_on_set(i: int, dreams: Iterable[PipeDream], **kw) -> list[PipeDream]:
    out: set[PipeDream] = set()
    for D in dreams:
        out.update(mitosis_A(i, D, **kw) if D.kind == "A" else mitosis_C(i, D, **kw))
    return canonical(out)


# ---------------------------------------------------------------------------
# words and enumeration (type A only)


def reading_word(D: PipeDream) -> weyl.Word:
    # rows top to bottom, each row right to left; cross (i, j) -> s_{i+j-1}
    if D.kind != "A":
        raise DomainError("reading words are defined for type-A pipe dreams only")
    return tuple(i + j - 1 for i, j in sorted(D.crosses, key=lambda c: (c[0], -c[1])))


def word_of(D: PipeDream) -> tuple[weyl.Word, bool]:
    word = reading_word(D)
    return word, weyl.is_reduced("A", D.n, word)


def permutation_of(D: PipeDream) -> weyl.Element:
    return weyl.evaluate("A", D.n, reading_word(D))


def is_reduced(D: PipeDream) -> bool:
    return word_of(D)[1]


def enumerate_reduced_pipe_dreams(n: int, w) -> list[PipeDream]:
    """All reduced pipe dreams for ``w`` by exhaustive scan of the staircase."""
    w = weyl.check_element("A", n, w)
    size = weyl.length("A", w)
    cells = staircase(n)
    out = []
    for chosen in combinations(cells, size):
        D = PipeDream("A", n, frozenset(chosen))
        word = reading_word(D)
        if weyl.evaluate("A", n, word) == w:
            # the word has exactly length(w) letters, so evaluating to w means reduced
            out.append(D)
    return canonical(out)


def all_reduced_pipe_dreams(n: int) -> dict[weyl.Element, list[PipeDream]]:
    """Reduced pipe dreams grouped by permutation, one pass over all subsets."""
    groups: dict[weyl.Element, list[PipeDream]] = {w: [] for w in weyl.elements("A", n)}
    cells = staircase(n)
    for size in range(len(cells) + 1):
        for chosen in combinations(cells, size):
            D = PipeDream("A", n, frozenset(chosen))
            word, reduced = word_of(D)
            if reduced:
                groups[weyl.evaluate("A", n, word)].append(D)
    return {w: canonical(ds) for w, ds in groups.items()}


def km_failures(n: int, *, restrict_to_prefix: bool = True) -> tuple[int, list[dict]]:
    """Check that MA_i maps RP(w) onto RP(w s_i) for every w and descent i.

    Returns ``(checked, failures)``.
    """
    rp = all_reduced_pipe_dreams(n)
    checked, failures = 0, []
    for w, dreams in rp.items():
        for i in weyl.descents("A", n, w):
            checked += 1
            got = mitosis_on_set(i, dreams, restrict_to_prefix=restrict_to_prefix)
            want = rp[weyl.apply_generator("A", w, i)]
            if got != want:
                failures.append({"w": list(w), "i": i, "got": len(got), "want": len(want)})
    return checked, failures


# ---------------------------------------------------------------------------
# text rendering


def _width(kind: str, n: int) -> int:
    return n if kind == "A" else 2 * n - 1


def render(D: PipeDream) -> str:
    """ASCII grid: '+' cross, '.' empty allowed cell, ' ' outside the region."""
    allowed = set(D.region)
    lines = []
    for i in range(1, D.n + 1):
        cells = []
        for j in range(1, _width(D.kind, D.n) + 1):
            if (i, j) not in allowed:
                cells.append(" ")
            else:
                cells.append("+" if (i, j) in D.crosses else ".")
        lines.append(" ".join(cells).rstrip())
    return "\n".join(lines)


def parse(text: str, kind: str) -> PipeDream:
    """Inverse of `render`; the type is needed because a 1x1 grid is ambiguous."""
    kind = kind.upper()
    if kind not in ("A", "C"):
        raise FormatError(f"unknown pipe dream type {kind!r}")
    lines = [ln.rstrip() for ln in text.strip("\n").split("\n")]
    n = len(lines)
    if n == 0 or not lines[0]:
        raise FormatError("empty pipe dream text")
    allowed = set(staircase(n) if kind == "A" else skew_region(n))
    crosses = set()
    for i, line in enumerate(lines, start=1):
        if len(line) > 2 * _width(kind, n) - 1:
            raise FormatError(f"row {i} is too long")
        for pos, ch in enumerate(line):
            if pos % 2 == 1:
                if ch != " ":
                    raise FormatError(f"row {i}: expected a separator at offset {pos}")
                continue
            cell = (i, pos // 2 + 1)
            if ch == " ":
                if cell in allowed:
                    raise FormatError(f"cell {cell} is inside the region but blank")
            elif ch in "+.":
                if cell not in allowed:
                    raise FormatError(f"cell {cell} lies outside the region")
                if ch == "+":
                    crosses.add(cell)
            else:
                raise FormatError(f"unexpected character {ch!r} in row {i}")
        expected = [j for (r, j) in allowed if r == i]
        if expected and len(line) < 2 * max(expected) - 1:
            raise FormatError(f"row {i} is truncated")
    return PipeDream(kind, n, frozenset(crosses))


def parse_cells(text: str) -> list[Cell]:
    """Parse ``"1,1;1,2;2,3"`` into cells."""
    text = text.strip()
    if not text:
        return []
    try:
        return [tuple(int(x) for x in part.split(",")) for part in text.split(";") if part.strip()]
    except ValueError as exc:
        raise FormatError(f"cannot parse cells {text!r}") from exc
