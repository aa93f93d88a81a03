"""Exact-rational polyhedral kernel.

An `HPolytope` is a system ``a . x <= b`` over `fractions.Fraction`.  Faces are
identified by their vertex sets (equivalently by their closed sets of tight
rows), so no floating point geometry is involved anywhere.

Vertex enumeration is brute force over d-subsets of rows; the convex hull of a
point set (needed for Cayley sums) uses the double description method on the
homogenised polar cone.  Both are meant for desk-scale inputs only.

Mitosis
-------
For a polytope ``Delta`` with facets ``P`` and ``Q`` (given as row labels or
row indices) and a vertex ``v`` of ``P``:

* a face ``F`` of ``P`` is *admissible* when exactly one face ``G != F`` of
  ``Delta`` satisfies ``G & P == F``; that face is ``expand(F)``;
* the offsprings of an admissible ``v``-face ``F`` are the ``v``-faces ``E``
  with ``dim E = dim F + 1``, ``E`` inside neither ``P`` nor ``Q``, and
  ``E & Q`` contained in ``expand(F) & Q``.

Every operation accepts ``within=<face>`` to run inside a face of the polytope
instead of the whole polytope.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd
from typing import Iterable, Sequence

from geomitosis.errors import CapacityError, DomainError, FormatError, NotAdmissibleError

Point = tuple[Fraction, ...]

MAX_DIM = 12
MAX_ROWS = 24
MAX_SUBSETS = 400_000


def to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, str)):
        try:
            return Fraction(x)
        except (ValueError, ZeroDivisionError) as exc:
            raise FormatError(f"not a rational number: {x!r}") from exc
    if isinstance(x, float) and x.is_integer():
        return Fraction(int(x))
    raise FormatError(f"not an exact rational: {x!r}")


# ---------------------------------------------------------------------------
# exact linear algebra


def _lcm(a: int, b: int) -> int:
    return a * b // gcd(a, b)


def primitive(vec: Sequence[Fraction]) -> tuple[int, ...]:
    """Positive rescaling of ``vec`` to coprime integers."""
    den = 1
    for x in vec:
        den = _lcm(den, Fraction(x).denominator)
    ints = [int(Fraction(x) * den) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    return tuple(x // g for x in ints) if g else tuple(ints)


def rank(rows: Iterable[Sequence[Fraction]]) -> int:
    mat = [list(map(Fraction, r)) for r in rows]
    if not mat:
        return 0
    ncols = len(mat[0])
    rk = 0
    for col in range(ncols):
        piv = next((r for r in range(rk, len(mat)) if mat[r][col] != 0), None)
        if piv is None:
            continue
        mat[rk], mat[piv] = mat[piv], mat[rk]
        p = mat[rk][col]
        for r in range(rk + 1, len(mat)):
            if mat[r][col] != 0:
                f = mat[r][col] / p
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[rk])]
        rk += 1
        if rk == len(mat):
            break
    return rk


def affine_dim(points: Sequence[Sequence[Fraction]]) -> int:
    """Dimension of the affine hull; -1 for the empty set."""
    if not points:
        return -1
    base = points[0]
    return rank([[x - y for x, y in zip(p, base)] for p in points[1:]]) if len(points) > 1 else 0


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{y : rows . y = 0}``."""
    mat = [list(map(Fraction, r)) for r in rows]
    pivots: list[int] = []
    rk = 0
    for col in range(ncols):
        piv = next((r for r in range(rk, len(mat)) if mat[r][col] != 0), None)
        if piv is None:
            continue
        mat[rk], mat[piv] = mat[piv], mat[rk]
        p = mat[rk][col]
        mat[rk] = [x / p for x in mat[rk]]
        for r in range(len(mat)):
            if r != rk and mat[r][col] != 0:
                f = mat[r][col]
                mat[r] = [x - f * y for x, y in zip(mat[r], mat[rk])]
        pivots.append(col)
        rk += 1
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for r, pc in enumerate(pivots):
            vec[pc] = -mat[r][free]
        basis.append(vec)
    return basis


def _solve_square(mat: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> list[Fraction] | None:
    n = len(mat)
    aug = [list(map(Fraction, r)) + [Fraction(b)] for r, b in zip(mat, rhs)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [x / p for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    return [aug[r][n] for r in range(n)]


def extreme_rays(constraints: Sequence[Sequence[Fraction]]) -> list[tuple[int, ...]]:
    """Extreme rays of the pointed cone ``{y : c . y <= 0 for c in constraints}``.

    Double description method with the combinatorial adjacency test.  Rays are
    returned as primitive integer vectors, sorted.
    """
    cons = [list(map(Fraction, c)) for c in constraints]
    if not cons:
        raise DomainError("a cone with no constraints is not pointed")
    dim = len(cons[0])
    # greedy choice of dim independent constraints for the initial simplicial cone
    chosen: list[int] = []
    for k, c in enumerate(cons):
        if rank([cons[j] for j in chosen] + [c]) > len(chosen):
            chosen.append(k)
            if len(chosen) == dim:
                break
    if len(chosen) < dim:
        raise DomainError("cone is not pointed (constraints do not have full rank)")

    def zero_set(ray, processed):
        mask = 0
        for k in processed:
            if sum(a * b for a, b in zip(cons[k], ray)) == 0:
                mask |= 1 << k
        return mask

    rays: list[list[Fraction]] = []
    for k in range(dim):
        rhs = [Fraction(-1) if j == k else Fraction(0) for j in range(dim)]
        rays.append(_solve_square([cons[j] for j in chosen], rhs))
    processed = list(chosen)
    zs = [zero_set(r, processed) for r in rays]

    for k in range(len(cons)):
        if k in chosen:
            continue
        c = cons[k]
        vals = [sum(a * b for a, b in zip(c, r)) for r in rays]
        pos = [i for i, x in enumerate(vals) if x > 0]
        neg = [i for i, x in enumerate(vals) if x < 0]
        zer = [i for i, x in enumerate(vals) if x == 0]
        new_rays = [rays[i] for i in neg + zer]
        new_zs = [zs[i] for i in neg] + [zs[i] | (1 << k) for i in zer]
        for i in pos:
            for j in neg:
                common = zs[i] & zs[j]
                if bin(common).count("1") < dim - 2:
                    continue
                if any(t not in (i, j) and common & zs[t] == common for t in range(len(rays))):
                    continue
                ray = [vals[i] * y - vals[j] * x for x, y in zip(rays[i], rays[j])]
                ray = [Fraction(x) for x in primitive(ray)]
                new_rays.append(ray)
                new_zs.append(common | (1 << k))
        rays, zs = new_rays, new_zs
        processed.append(k)
    return sorted(set(primitive(r) for r in rays))


# ---------------------------------------------------------------------------
# H-polytopes


@dataclass(frozen=True)
class Row:
    a: tuple[Fraction, ...]
    b: Fraction
    label: str | None = None

    def value(self, x: Sequence[Fraction]) -> Fraction:
        return sum((ai * xi for ai, xi in zip(self.a, x)), Fraction(0))

    def normalized(self) -> tuple[tuple[int, ...], int]:
        """Positive rescaling to coprime integers (the direction of the inequality is kept)."""
        ints = primitive(list(self.a) + [self.b])
        return ints[:-1], ints[-1]


@dataclass(frozen=True)
class HPolytope:
    dim: int
    rows: tuple[Row, ...]

    @classmethod
    def from_rows(cls, dim: int, rows: Iterable) -> "HPolytope":
        """Build from ``(a, b)`` or ``(a, b, label)`` triples meaning ``a . x <= b``.

        Rows are rescaled to coprime integer coefficients.
        """
        out = []
        for spec in rows:
            a, b, *rest = spec
            a = tuple(to_fraction(x) for x in a)
            if len(a) != dim:
                raise DomainError(f"row {spec!r} has {len(a)} coefficients, expected {dim}")
            row = Row(a, to_fraction(b), rest[0] if rest else None)
            ia, ib = row.normalized()
            out.append(Row(tuple(Fraction(x) for x in ia), Fraction(ib), row.label))
        return cls(dim, tuple(out))

    def row_index(self, key) -> int:
        if isinstance(key, int):
            if not 0 <= key < len(self.rows):
                raise DomainError(f"row index {key} out of range")
            return key
        for k, row in enumerate(self.rows):
            if row.label == key:
                return k
        raise DomainError(f"no row labelled {key!r}")

    def contains(self, x: Sequence[Fraction]) -> bool:
        return all(r.value(x) <= r.b for r in self.rows)

    def to_json(self) -> dict:
        rows = []
        for r in self.rows:
            item = {"a": [str(x) for x in r.a], "b": str(r.b)}
            if r.label is not None:
                item["label"] = r.label
            rows.append(item)
        return {"dim": self.dim, "rows": rows}

    @classmethod
    def from_json(cls, data: dict | str) -> "HPolytope":
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise FormatError(str(exc)) from exc
        try:
            rows = [(r["a"], r["b"], r.get("label")) for r in data["rows"]]
            return cls.from_rows(int(data["dim"]), rows)
        except (KeyError, TypeError) as exc:
            raise FormatError(f"bad polytope JSON: {exc}") from exc


@dataclass(frozen=True)
class FaceHandle:
    """A face: closed set of tight rows, its vertex indices, and its dimension."""

    tight: frozenset[int]
    vertex_ids: frozenset[int]
    dim: int

    def to_json(self) -> dict:
        return {"tight": sorted(self.tight), "dim": self.dim}

    def sort_key(self):
        return (self.dim, tuple(sorted(self.tight)))

    def __le__(self, other: "FaceHandle") -> bool:
        # face inclusion
        return self.vertex_ids <= other.vertex_ids


def _check_budget(H: HPolytope) -> None:
    if H.dim > MAX_DIM or len(H.rows) > MAX_ROWS or comb(len(H.rows), H.dim) > MAX_SUBSETS:
        raise CapacityError(
            f"vertex enumeration over C({len(H.rows)}, {H.dim}) row subsets exceeds the desk-scale budget"
        )


def _brute_force_vertices(H: HPolytope) -> list[Point]:
    d, rows = H.dim, H.rows
    m = len(rows)
    found: set[Point] = set()

    # depth-first over row subsets, keeping the chosen rows in reduced row echelon form
    def walk(start: int, basis: list[tuple[int, list[Fraction], Fraction]]) -> None:
        if len(basis) == d:
            x = [Fraction(0)] * d
            for pc, _, rhs in basis:
                x[pc] = rhs
            if H.contains(x):
                found.add(tuple(x))
            return
        for k in range(start, m - (d - len(basis)) + 1):
            vec, rhs = list(rows[k].a), rows[k].b
            for pc, bvec, brhs in basis:
                f = vec[pc]
                if f:
                    vec = [x - f * y for x, y in zip(vec, bvec)]
                    rhs -= f * brhs
            pc = next((c for c in range(d) if vec[c] != 0), None)
            if pc is None:
                continue
            p = vec[pc]
            vec = [x / p for x in vec]
            rhs /= p
            new_basis = []
            for opc, bvec, brhs in basis:
                f = bvec[pc]
                if f:
                    bvec = [x - f * y for x, y in zip(bvec, vec)]
                    brhs -= f * rhs
                new_basis.append((opc, bvec, brhs))
            new_basis.append((pc, vec, rhs))
            walk(k + 1, new_basis)

    walk(0, [])
    return sorted(found)


def is_bounded(H: HPolytope) -> bool:
    """Bounded iff the homogenised cone has no extreme ray at infinity."""
    if rank([r.a for r in H.rows]) < H.dim:
        return False
    cons = [list(r.a) + [-r.b] for r in H.rows] + [[Fraction(0)] * H.dim + [Fraction(-1)]]
    return all(ray[-1] > 0 for ray in extreme_rays(cons))


class _Lattice:
    """Vertex/row incidence of one polytope plus memoised face closures."""

    def __init__(self, H: HPolytope):
        _check_budget(H)
        if not is_bounded(H):
            raise CapacityError("polytope is unbounded")
        self.H = H
        self.vertices = tuple(_brute_force_vertices(H))
        if not self.vertices:
            raise DomainError("polytope is empty")
        self.index = {v: k for k, v in enumerate(self.vertices)}
        self.incidence = tuple(
            frozenset(r for r, row in enumerate(H.rows) if row.value(v) == row.b) for v in self.vertices
        )
        self.row_vertices = tuple(
            frozenset(k for k, inc in enumerate(self.incidence) if r in inc) for r in range(len(H.rows))
        )
        self.all_ids = frozenset(range(len(self.vertices)))
        self._faces: dict[frozenset[int], FaceHandle] = {}

    def face_from_vertices(self, vids: frozenset[int]) -> FaceHandle:
        vids = frozenset(vids)
        if not vids:
            raise DomainError("empty face")
        face = self._faces.get(vids)
        if face is not None:
            return face
        tight = frozenset.intersection(*(self.incidence[k] for k in vids))
        closed = self.vertices_of_rows(tight)
        face = self._faces.get(closed)
        if face is None:
            face = FaceHandle(tight, closed, affine_dim([self.vertices[k] for k in sorted(closed)]))
            self._faces[closed] = face
        self._faces[vids] = face
        return face

    def vertices_of_rows(self, rows: Iterable[int]) -> frozenset[int]:
        out = self.all_ids
        for r in rows:
            out = out & self.row_vertices[r]
        return out

    def face_from_rows(self, rows: Iterable[int]) -> FaceHandle | None:
        vids = self.vertices_of_rows(rows)
        return self.face_from_vertices(vids) if vids else None

    def faces_containing(self, face: FaceHandle, within: FaceHandle | None = None) -> list[FaceHandle]:
        top = within.vertex_ids if within is not None else self.all_ids
        if not face.vertex_ids <= top:
            raise DomainError("face is not inside the ambient face")
        family = {top}
        for r in sorted(face.tight):
            family |= {s & self.row_vertices[r] for s in family}
        faces = {self.face_from_vertices(s) for s in family}
        return sorted(faces, key=FaceHandle.sort_key)


@lru_cache(maxsize=64)
def _lattice(H: HPolytope) -> _Lattice:
    return _Lattice(H)


def vertices(H: HPolytope) -> list[Point]:
    """All vertices, sorted lexicographically."""
    return list(_lattice(H).vertices)


def vertex_index(H: HPolytope, v) -> int:
    if isinstance(v, int):
        return v
    key = tuple(to_fraction(x) for x in v)
    try:
        return _lattice(H).index[key]
    except KeyError:
        raise DomainError(f"{v} is not a vertex") from None


def whole(H: HPolytope) -> FaceHandle:
    lat = _lattice(H)
    return lat.face_from_vertices(lat.all_ids)


def face_of(H: HPolytope, rows: Iterable = (), within: FaceHandle | None = None) -> FaceHandle | None:
    """Face cut out by making ``rows`` (indices or labels) tight, or None if empty."""
    lat = _lattice(H)
    idx = {H.row_index(r) for r in rows}
    if within is not None:
        idx |= within.tight
    return lat.face_from_rows(idx)


def face_of_vertices(H: HPolytope, vids: Iterable[int]) -> FaceHandle:
    return _lattice(H).face_from_vertices(frozenset(vids))


def vertex_face(H: HPolytope, v) -> FaceHandle:
    return face_of_vertices(H, [vertex_index(H, v)])


def face_vertices(H: HPolytope, face: FaceHandle) -> list[Point]:
    lat = _lattice(H)
    return [lat.vertices[k] for k in sorted(face.vertex_ids)]


def faces_through(H: HPolytope, v, within: FaceHandle | None = None) -> list[FaceHandle]:
    """Every face containing vertex ``v`` (the vertex itself and the polytope included)."""
    lat = _lattice(H)
    return lat.faces_containing(vertex_face(H, v), within)


def faces_containing(H: HPolytope, face: FaceHandle, within: FaceHandle | None = None) -> list[FaceHandle]:
    return _lattice(H).faces_containing(face, within)


def all_faces(H: HPolytope) -> list[FaceHandle]:
    """The full face lattice minus the empty face."""
    lat = _lattice(H)
    family = {lat.all_ids}
    for r in range(len(H.rows)):
        family |= {s & lat.row_vertices[r] for s in family}
    family.discard(frozenset())
    return sorted({lat.face_from_vertices(s) for s in family}, key=FaceHandle.sort_key)


def euler_characteristic(H: HPolytope) -> int:
    return sum((-1) ** f.dim for f in all_faces(H))


def facets(H: HPolytope) -> list[Row]:
    """Irredundant rows: one per facet, normalised, first label kept."""
    lat = _lattice(H)
    full = affine_dim(list(lat.vertices))
    seen: dict[frozenset[int], Row] = {}
    for r, row in enumerate(H.rows):
        vids = lat.row_vertices[r]
        if vids and vids != lat.all_ids and vids not in seen:
            if affine_dim([lat.vertices[k] for k in sorted(vids)]) == full - 1:
                seen[vids] = row
    return sorted(seen.values(), key=lambda row: row.normalized())


def canonical_form(H: HPolytope) -> frozenset[tuple[tuple[int, ...], int]]:
    """Normalised facet rows; equal for two full-dimensional polytopes iff they coincide."""
    return frozenset(row.normalized() for row in facets(H))


def _as_face(H: HPolytope, key, within: FaceHandle | None) -> FaceHandle:
    if isinstance(key, FaceHandle):
        return key
    face = face_of(H, [key], within)
    if face is None:
        raise DomainError(f"row {key!r} does not meet the ambient face")
    return face


# ---------------------------------------------------------------------------
# Cayley sums


def convex_hull(points: Sequence[Sequence[Fraction]], labels: dict | None = None) -> HPolytope:
    """Facet description of a full-dimensional point configuration.

    ``labels`` maps normalised ``(a, b)`` rows to a label for that facet.
    """
    pts = [tuple(to_fraction(x) for x in p) for p in points]
    if not pts:
        raise DomainError("no points")
    dim = len(pts[0])
    if affine_dim(pts) != dim:
        raise DomainError("point configuration is not full-dimensional")
    # polar cone: (a, b) with a . p - b <= 0 for every point p
    cons = [list(p) + [Fraction(-1)] for p in pts]
    rows = []
    for ray in extreme_rays(cons):
        a, b = ray[:-1], ray[-1]
        key = (tuple(a), b)
        rows.append((a, b, (labels or {}).get(key)))
    rows.sort(key=lambda r: (r[2] is None, r[2] or "", r[0], r[1]))
    return HPolytope.from_rows(dim, rows)


def cayley_sum(P: HPolytope, Q: HPolytope) -> HPolytope:
    """conv((P x 0) u (Q x 1)); the facets t = 0 and t = 1 are labelled "P" and "Q"."""
    if P.dim != Q.dim:
        raise DomainError(f"dimension mismatch: {P.dim} vs {Q.dim}")
    d = P.dim
    pts = [tuple(v) + (Fraction(0),) for v in vertices(P)] + [tuple(v) + (Fraction(1),) for v in vertices(Q)]
    labels = {
        ((0,) * d + (-1,), 0): "P",
        ((0,) * d + (1,), 1): "Q",
    }
    return convex_hull(pts, labels)


def is_cayley_decomposition(H: HPolytope, p, q) -> bool:
    """Every vertex lies on facet ``p`` or on facet ``q``, and the two are disjoint."""
    P, Q = _as_face(H, p, None), _as_face(H, q, None)
    lat = _lattice(H)
    return not (P.vertex_ids & Q.vertex_ids) and (P.vertex_ids | Q.vertex_ids) == lat.all_ids


# ---------------------------------------------------------------------------
# admissible faces and mitosis


def expand(H: HPolytope, p, F: FaceHandle, within: FaceHandle | None = None) -> FaceHandle | None:
    """The unique face ``G != F`` with ``G & P == F``, or None when ``F`` is not admissible."""
    P = _as_face(H, p, within)
    if not F.vertex_ids <= P.vertex_ids:
        raise DomainError("face is not contained in P")
    hits = [
        G
        for G in faces_containing(H, F, within)
        if G.vertex_ids != F.vertex_ids and G.vertex_ids & P.vertex_ids == F.vertex_ids
    ]
    if len(hits) != 1:
        return None
    (G,) = hits
    assert G.dim == F.dim + 1, "expansion must raise the dimension by one"
    return G


def is_admissible(H: HPolytope, p, F: FaceHandle, within: FaceHandle | None = None) -> bool:
    return expand(H, p, F, within) is not None


def geometric_mitosis(
    H: HPolytope, p, q, v, F: FaceHandle, within: FaceHandle | None = None
) -> list[FaceHandle]:
    """Offsprings of the admissible ``v``-face ``F`` of the facet ``p`` (sorted)."""
    P, Q = _as_face(H, p, within), _as_face(H, q, within)
    vid = vertex_index(H, v)
    if vid not in F.vertex_ids:
        raise DomainError("F does not contain the vertex v")
    if not F.vertex_ids <= P.vertex_ids:
        raise DomainError("F is not contained in P")
    exp = expand(H, P, F, within)
    if exp is None:
        raise NotAdmissibleError("F is not admissible")
    exp_q = exp.vertex_ids & Q.vertex_ids
    out = []
    for E in faces_through(H, vid, within):
        if E.dim != F.dim + 1:
            continue
        if E.vertex_ids <= P.vertex_ids or E.vertex_ids <= Q.vertex_ids:
            continue
        if E.vertex_ids & Q.vertex_ids <= exp_q:
            out.append(E)
    assert exp in out, "the expansion of F is always an offspring"
    return out
