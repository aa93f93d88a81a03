"""Coxeter combinatorics for S_{n+1} (type A_n) and signed permutations B_n (type C_n).

Group elements are tuples in one-line notation: ``w[k-1] = w(k)``.  Signed
permutations satisfy ``w(-k) = -w(k)``.

Generators act on the right, i.e. on positions:

* type A: ``s_i`` swaps positions ``i`` and ``i+1`` (``1 <= i <= n``);
* type C: ``s_1`` negates position 1, ``s_i`` swaps positions ``i-1`` and ``i``
  (``2 <= i <= n``).

So ``evaluate(kind, n, [i, j])`` is the product ``s_i s_j`` as functions:
start from the identity, apply ``s_i`` to positions, then ``s_j``.

>>> evaluate("A", 2, [1, 2, 1])
(3, 2, 1)
>>> evaluate("C", 2, [1])
(-1, 2)
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations, product
from typing import Iterable, Sequence

from geomitosis.errors import DomainError, FormatError

Element = tuple[int, ...]
Word = tuple[int, ...]

KINDS = ("A", "C")


def _check_kind(kind: str) -> str:
    kind = kind.upper()
    if kind not in KINDS:
        raise DomainError(f"unknown Coxeter type {kind!r}; expected 'A' or 'C'")
    return kind


def degree(kind: str, n: int) -> int:
    """Length of the one-line notation: n+1 for A_n, n for C_n."""
    return n + 1 if _check_kind(kind) == "A" else n


def identity(kind: str, n: int) -> Element:
    return tuple(range(1, degree(kind, n) + 1))


def check_element(kind: str, n: int, w: Sequence[int]) -> Element:
    w = tuple(int(x) for x in w)
    m = degree(kind, n)
    if kind.upper() == "A":
        ok = sorted(w) == list(range(1, m + 1))
    else:
        ok = len(w) == m and 0 not in w and sorted(abs(x) for x in w) == list(range(1, m + 1))
    if not ok:
        raise DomainError(f"{w} is not an element of type {kind}{n}")
    return w


def check_word(kind: str, n: int, word: Iterable[int]) -> Word:
    word = tuple(int(i) for i in word)
    for i in word:
        if not 1 <= i <= n:
            raise DomainError(f"letter {i} out of range 1..{n}")
    return word


def apply_generator(kind: str, w: Element, i: int) -> Element:
    """Return ``w * s_i``."""
    out = list(w)
    if kind == "A":
        out[i - 1], out[i] = out[i], out[i - 1]
    elif i == 1:
        out[0] = -out[0]
    else:
        out[i - 2], out[i - 1] = out[i - 1], out[i - 2]
    return tuple(out)


def evaluate(kind: str, n: int, word: Iterable[int]) -> Element:
    kind = _check_kind(kind)
    w = identity(kind, n)
    for i in check_word(kind, n, word):
        w = apply_generator(kind, w, i)
    return w


def multiply(u: Element, w: Element) -> Element:
    """Composition ``(u w)(k) = u(w(k))``; works for signed permutations too."""
    return tuple(u[x - 1] if x > 0 else -u[-x - 1] for x in w)


def inverse(w: Element) -> Element:
    out = [0] * len(w)
    for pos, x in enumerate(w, start=1):
        out[abs(x) - 1] = pos if x > 0 else -pos
    return tuple(out)


def length(kind: str, w: Sequence[int]) -> int:
    """Coxeter length: inversions (A) or signed inversions (C).

    For B_n with the sign change at position 1 this is
    ``inv(w) + #{i : w(i) < 0} + #{i < j : w(i) + w(j) < 0}``.
    """
    kind = _check_kind(kind)
    m = len(w)
    inv = sum(1 for a in range(m) for b in range(a + 1, m) if w[a] > w[b])
    if kind == "A":
        return inv
    neg = sum(1 for x in w if x < 0)
    nsp = sum(1 for a in range(m) for b in range(a + 1, m) if w[a] + w[b] < 0)
    return inv + neg + nsp


def is_reduced(kind: str, n: int, word: Iterable[int]) -> bool:
    word = check_word(kind, n, word)
    return length(kind, evaluate(kind, n, word)) == len(word)


def longest(kind: str, n: int) -> Element:
    m = degree(kind, n)
    if _check_kind(kind) == "A":
        return tuple(range(m, 0, -1))
    return tuple(-k for k in range(1, m + 1))


def w0_bar(n: int) -> Word:
    """The reduced word (s1)(s2 s1 s2)(s3 s2 s1 s2 s3)... for the longest element of B_n."""
    if n < 1:
        raise DomainError("n must be >= 1")
    word: list[int] = []
    for k in range(1, n + 1):
        word.extend(range(k, 0, -1))
        word.extend(range(2, k + 1))
    return tuple(word)


def elements(kind: str, n: int) -> list[Element]:
    """All group elements, sorted by (length, one-line)."""
    kind = _check_kind(kind)
    m = degree(kind, n)
    if kind == "A":
        elems = [tuple(p) for p in permutations(range(1, m + 1))]
    else:
        elems = [
            tuple(s * x for s, x in zip(signs, p))
            for p in permutations(range(1, m + 1))
            for signs in product((1, -1), repeat=m)
        ]
    return sorted(elems, key=lambda w: (length(kind, w), w))


def descents(kind: str, n: int, w: Element) -> list[int]:
    """Right descents: generators ``i`` with ``length(w s_i) < length(w)``."""
    lw = length(kind, w)
    return [i for i in range(1, n + 1) if length(kind, apply_generator(kind, w, i)) < lw]


@lru_cache(maxsize=None)
def _reduced_words(kind: str, n: int, w: Element) -> tuple[Word, ...]:
    if length(kind, w) == 0:
        return ((),)
    out = []
    for i in descents(kind, n, w):
        for prefix in _reduced_words(kind, n, apply_generator(kind, w, i)):
            out.append(prefix + (i,))
    return tuple(sorted(out))


def reduced_words(kind: str, n: int, w: Sequence[int]) -> list[Word]:
    """Every reduced word for ``w``, sorted lexicographically."""
    kind = _check_kind(kind)
    return list(_reduced_words(kind, n, check_element(kind, n, w)))


def reduced_subwords(kind: str, n: int, host: Iterable[int], target: Sequence[int]) -> list[tuple[int, ...]]:
    """Position sets (1-based, sorted) of reduced subwords of ``host`` that evaluate to ``target``.

    Depth-first over the 2^|host| subsets, pruned to reduced prefixes.
    """
    kind = _check_kind(kind)
    host = check_word(kind, n, host)
    target = check_element(kind, n, target)
    goal = length(kind, target)
    found: list[tuple[int, ...]] = []

    def walk(pos: int, w: Element, lw: int, chosen: list[int]) -> None:
        if lw == goal:
            if w == target:
                found.append(tuple(chosen))
            return
        if goal - lw > len(host) - pos:
            return
        for nxt in range(pos, len(host)):
            if goal - lw > len(host) - nxt:
                break
            u = apply_generator(kind, w, host[nxt])
            if length(kind, u) == lw + 1:
                chosen.append(nxt + 1)
                walk(nxt + 1, u, lw + 1, chosen)
                chosen.pop()

    walk(0, identity(kind, n), 0, [])
    return sorted(found)


def parse_word(text: str) -> Word:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(t) for t in text.split(","))
    except ValueError as exc:
        raise FormatError(f"cannot parse word {text!r}") from exc
