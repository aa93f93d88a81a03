"""Sparse multivariate polynomials with integer coefficients."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from geomitosis.errors import DomainError, FormatError

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial in ``nvars`` variables x_1..x_nvars; zero coefficients are never stored."""

    nvars: int
    terms: Mapping[Exponent, int] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for exp, co in dict(self.terms).items():
            exp = tuple(int(e) for e in exp)
            if len(exp) != self.nvars or min(exp, default=0) < 0:
                raise DomainError(f"bad exponent {exp} for {self.nvars} variables")
            if co:
                clean[exp] = clean.get(exp, 0) + int(co)
        object.__setattr__(self, "terms", {e: c for e, c in sorted(clean.items()) if c})

    # construction ---------------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "IntPolynomial":
        return cls(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c: int) -> "IntPolynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exp: Iterable[int], co: int = 1) -> "IntPolynomial":
        exp = tuple(exp)
        return cls(len(exp), {exp: co})

    @classmethod
    def var(cls, nvars: int, i: int) -> "IntPolynomial":
        exp = [0] * nvars
        exp[i - 1] = 1
        return cls(nvars, {tuple(exp): 1})

    # arithmetic -----------------------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, tuple(self.terms.items())))

    def __bool__(self):
        return bool(self.terms)

    def _check(self, other: "IntPolynomial"):
        if self.nvars != other.nvars:
            raise DomainError("polynomials live in different rings")

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return IntPolynomial(self.nvars, out)

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial(self.nvars, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return IntPolynomial(self.nvars, out)

    __rmul__ = __mul__

    def swap(self, i: int) -> "IntPolynomial":
        """Exchange x_i and x_{i+1}."""
        out = {}
        for e, c in self.terms.items():
            e = list(e)
            e[i - 1], e[i] = e[i], e[i - 1]
            out[tuple(e)] = c
        return IntPolynomial(self.nvars, out)

    def evaluate(self, point: Iterable[int]) -> int:
        point = tuple(point)
        total = 0
        for e, c in self.terms.items():
            term = c
            for x, k in zip(point, e):
                term *= x**k
            total += term
        return total

    def degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    # io -------------------------------------------------------------------

    def to_json(self) -> dict:
        return {"vars": self.nvars, "terms": [{"exp": list(e), "co": c} for e, c in self.terms.items()]}

    @classmethod
    def from_json(cls, data: dict) -> "IntPolynomial":
        try:
            return cls(int(data["vars"]), {tuple(t["exp"]): int(t["co"]) for t in data["terms"]})
        except (KeyError, TypeError, ValueError) as exc:
            raise FormatError(f"bad polynomial JSON: {exc}") from exc

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        # highest exponents first reads more naturally
        for e, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(f"x{i}" if k == 1 else f"x{i}^{k}" for i, k in enumerate(e, start=1) if k)
            if not mono:
                parts.append(str(c))
            elif c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append("-" + mono)
            else:
                parts.append(f"{c}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"IntPolynomial({self.nvars}, {str(self)!r})"


def divided_difference(i: int, f: IntPolynomial) -> IntPolynomial:
    """``(f - s_i f) / (x_i - x_{i+1})``, computed monomial by monomial.

    For ``x_i^a x_{i+1}^b`` with ``a > b`` the quotient is
    ``(x_i x_{i+1})^b * sum_{k < a-b} x_i^k x_{i+1}^{a-b-1-k}``; ``a < b`` is the
    negative of the swapped case and ``a == b`` gives zero.
    """
    if not 1 <= i < f.nvars:
        raise DomainError(f"divided difference index {i} out of range 1..{f.nvars - 1}")
    out: dict[Exponent, int] = {}
    for e, c in f.terms.items():
        a, b = e[i - 1], e[i]
        if a == b:
            continue
        sign = 1 if a > b else -1
        lo, gap = min(a, b), abs(a - b)
        for k in range(gap):
            new = list(e)
            new[i - 1] = lo + k
            new[i] = lo + gap - 1 - k
            new = tuple(new)
            out[new] = out.get(new, 0) + sign * c
    return IntPolynomial(f.nvars, out)
