"""Points, subspaces, and point sets of GF(q)^n.

A point (x_1, ..., x_n) is encoded as the integer sum x_i * q^(i-1), so x_1
is the least significant digit and the nonzero points of the space are
exactly the encodings 1..q^n-1 in order. Subspaces are enumerated through
canonical reduced-row-echelon bases, one per subspace, ordered first by
pivot-column set (lexicographic) and then by the free entries.
"""

from __future__ import annotations

import itertools
from pathlib import Path
from typing import Iterable, Optional

import numpy as np

from .bulk import ops_for
from .errors import DimensionOutOfRange, ParseError, ZeroNormal
from .field import Field, field_from_order

_DIGIT_CACHE_LIMIT = 1 << 22


def gaussian_binomial(n: int, d: int, q: int) -> int:
    """Number of d-dimensional subspaces of GF(q)^n, exact integer."""
    if d < 0 or d > n:
        return 0
    num = 1
    den = 1
    for i in range(d):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


class RowReducer:
    """Incremental Gaussian elimination over a field; tracks a reduced basis."""

    def __init__(self, field: Field):
        self.field = field
        self.rows = []  # (pivot index, coeff tuple) with unit pivot

    def reduce(self, vec) -> list:
        f = self.field
        v = list(vec)
        for pivot, row in self.rows:
            c = v[pivot]
            if c:
                for j in range(pivot, len(v)):
                    v[j] = f.sub(v[j], f.mul(c, row[j]))
        return v

    def absorb(self, vec) -> bool:
        """Add vec to the span; True if it was independent."""
        f = self.field
        v = self.reduce(vec)
        for pivot, c in enumerate(v):
            if c:
                inv = f.inv(c)
                row = tuple(f.mul(inv, x) for x in v)
                self.rows.append((pivot, row))
                self.rows.sort(key=lambda r: r[0])
                return True
        return False

    @property
    def rank(self) -> int:
        return len(self.rows)

    def contains(self, vec) -> bool:
        return not any(self.reduce(vec))


class Space:
    """The ambient space GF(q)^n with the digit point-encoding."""

    def __init__(self, field: Field, n: int):
        if n < 1:
            raise ValueError(f"ambient dimension must be >= 1, got {n}")
        self.field = field
        self.n = n
        self.q = field.q
        self.size = field.q**n
        self._digit_cols = None
        self._proj_encodings = None
        self._proj_mask = None

    # point encoding -------------------------------------------------------
    def encode(self, coords) -> int:
        if len(coords) != self.n:
            raise ValueError(f"expected {self.n} coordinates, got {len(coords)}")
        e = 0
        for x in reversed(coords):
            if not 0 <= x < self.q:
                raise ValueError(f"coordinate {x} outside 0..{self.q - 1}")
            e = e * self.q + x
        return e

    def decode(self, e: int) -> tuple:
        if not 0 <= e < self.size:
            raise ValueError(f"encoding {e} outside 0..{self.size - 1}")
        out = []
        for _ in range(self.n):
            out.append(e % self.q)
            e //= self.q
        return tuple(out)

    def digit_columns(self) -> np.ndarray:
        """size x n array; column i holds coordinate x_(i+1) of every point."""
        if self._digit_cols is not None:
            return self._digit_cols
        ops = ops_for(self.field)
        enc = np.arange(self.size, dtype=np.int64)
        cols = np.empty((self.size, self.n), dtype=ops.dtype)
        for i in range(self.n):
            cols[:, i] = (enc // self.q**i) % self.q
        if self.size <= _DIGIT_CACHE_LIMIT:
            self._digit_cols = cols
        return cols

    def encode_block(self, digits: np.ndarray) -> np.ndarray:
        weights = np.array([self.q**i for i in range(self.n)], dtype=np.int64)
        return digits.astype(np.int64) @ weights

    # enumeration ----------------------------------------------------------
    def num_affine_points(self) -> int:
        return self.size - 1

    def num_projective_points(self) -> int:
        return (self.size - 1) // (self.q - 1)

    def affine_point_encodings(self) -> np.ndarray:
        """All nonzero points, in encoding order."""
        return np.arange(1, self.size, dtype=np.int64)

    def affine_points(self):
        for e in range(1, self.size):
            yield self.decode(e)

    def canonical_representative(self, coords) -> tuple:
        f = self.field
        for x in coords:
            if x:
                inv = f.inv(x)
                return tuple(f.mul(inv, c) for c in coords)
        raise ZeroNormal("the origin has no projective representative")

    def projective_mask(self) -> np.ndarray:
        """Boolean over encodings: canonical representatives (first nonzero digit 1)."""
        if self._proj_mask is not None:
            return self._proj_mask
        cols = self.digit_columns()
        first = np.zeros(self.size, dtype=np.int64)
        found = np.zeros(self.size, dtype=bool)
        for i in range(self.n):
            sel = ~found & (cols[:, i] != 0)
            first[sel] = cols[sel, i]
            found |= sel
        mask = found & (first == 1)
        if self.size <= _DIGIT_CACHE_LIMIT:
            self._proj_mask = mask
        return mask

    def projective_point_encodings(self) -> np.ndarray:
        if self._proj_encodings is None:
            enc = np.nonzero(self.projective_mask())[0]
            assert enc.size == self.num_projective_points()
            self._proj_encodings = enc
        return self._proj_encodings

    def projective_points(self):
        for e in self.projective_point_encodings():
            yield self.decode(int(e))

    # bilinear form --------------------------------------------------------
    def dot(self, u, v) -> int:
        f = self.field
        acc = 0
        for a, b in zip(u, v):
            acc = f.add(acc, f.mul(a, b))
        return acc

    def dot_all(self, v) -> np.ndarray:
        """v . x for every encoding x, vectorized."""
        ops = ops_for(self.field)
        cols = self.digit_columns()
        acc = np.zeros(self.size, dtype=ops.dtype)
        for i, vi in enumerate(v):
            if vi:
                acc = ops.add(acc, ops.mul_scalar(int(vi), cols[:, i]))
        return acc

    def hyperplane(self, v, punctured: bool = True) -> "PointSet":
        """{x : v . x = 0}, origin removed unless punctured=False."""
        if not any(v):
            raise ZeroNormal("hyperplane normal must be nonzero")
        bits = self.dot_all(v) == 0
        if punctured:
            bits = bits.copy()
            bits[0] = False
        return PointSet(self, bits)

    # subspaces ------------------------------------------------------------
    def subspace_count(self, d: int) -> int:
        if d < 0 or d > self.n:
            raise DimensionOutOfRange(f"dimension {d} outside 0..{self.n}")
        return gaussian_binomial(self.n, d, self.q)

    def subspaces(self, d: int):
        """All d-dimensional subspaces as canonical RREF bases, fixed order."""
        if d < 0 or d > self.n:
            raise DimensionOutOfRange(f"dimension {d} outside 0..{self.n}")
        n, q = self.n, self.q
        if d == 0:
            yield SubspaceBasis(self, (), ())
            return
        for pivots in itertools.combinations(range(n), d):
            pivot_set = set(pivots)
            free = [
                (i, c)
                for i in range(d)
                for c in range(pivots[i] + 1, n)
                if c not in pivot_set
            ]
            for assignment in itertools.product(range(q), repeat=len(free)):
                rows = [[0] * n for _ in range(d)]
                for i, p in enumerate(pivots):
                    rows[i][p] = 1
                for (i, c), val in zip(free, assignment):
                    rows[i][c] = val
                yield SubspaceBasis(self, tuple(tuple(r) for r in rows), pivots)

    def span_dim(self, vectors) -> int:
        red = RowReducer(self.field)
        for v in vectors:
            red.absorb(v)
            if red.rank == self.n:
                break
        return red.rank

    def __eq__(self, other):
        return (
            isinstance(other, Space)
            and self.field == other.field
            and self.n == other.n
        )

    def __hash__(self):
        return hash((self.field, self.n))

    def __repr__(self):
        return f"Space(GF({self.q})^{self.n})"


class SubspaceBasis:
    """A subspace given by its canonical RREF basis rows."""

    __slots__ = ("space", "rows", "pivots")

    def __init__(self, space: Space, rows: tuple, pivots: tuple):
        self.space = space
        self.rows = rows
        self.pivots = pivots

    @property
    def dim(self) -> int:
        return len(self.rows)

    def contains(self, coords) -> bool:
        f = self.space.field
        v = list(coords)
        for i, p in enumerate(self.pivots):
            c = v[p]
            if c:
                row = self.rows[i]
                for j in range(p, len(v)):
                    v[j] = f.sub(v[j], f.mul(c, row[j]))
        return not any(v)

    def point_encodings(self) -> np.ndarray:
        """Encodings of all q^dim points of the subspace, sorted."""
        space = self.space
        ops = ops_for(space.field)
        pts = np.zeros((1, space.n), dtype=ops.dtype)
        for row in self.rows:
            row_arr = ops.asarray(row)
            layers = [
                ops.add(pts, ops.mul_scalar(lam, row_arr)[None, :])
                for lam in range(space.q)
            ]
            pts = np.concatenate(layers, axis=0)
        enc = space.encode_block(pts)
        enc.sort()
        return enc

    def point_set(self, punctured: bool = False) -> "PointSet":
        bits = np.zeros(self.space.size, dtype=bool)
        bits[self.point_encodings()] = True
        if punctured:
            bits[0] = False
        return PointSet(self.space, bits)

    def normal(self) -> tuple:
        """Canonical normal vector; only defined for hyperplanes."""
        space = self.space
        if self.dim != space.n - 1:
            raise DimensionOutOfRange("normal vector is only defined for hyperplanes")
        f = space.field
        free_cols = [c for c in range(space.n) if c not in set(self.pivots)]
        j0 = free_cols[0]
        v = [0] * space.n
        v[j0] = 1
        for i, p in enumerate(self.pivots):
            v[p] = f.neg(self.rows[i][j0])
        for x in v:
            if x:
                inv = f.inv(x)
                return tuple(f.mul(inv, c) for c in v)
        raise AssertionError("hyperplane normal cannot vanish")

    def as_lists(self) -> list:
        return [list(r) for r in self.rows]

    def __eq__(self, other):
        return isinstance(other, SubspaceBasis) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"SubspaceBasis(dim={self.dim}, rows={self.as_lists()})"


class PointSet:
    """A subset of GF(q)^n as a boolean bitmap indexed by point encoding."""

    __slots__ = ("space", "bits", "_count")

    def __init__(self, space: Space, bits: np.ndarray):
        if bits.shape != (space.size,) or bits.dtype != np.bool_:
            raise ValueError("bits must be a boolean array over all encodings")
        self.space = space
        self.bits = bits
        self._count = None

    @classmethod
    def empty(cls, space: Space) -> "PointSet":
        return cls(space, np.zeros(space.size, dtype=bool))

    @classmethod
    def from_encodings(cls, space: Space, encodings) -> "PointSet":
        bits = np.zeros(space.size, dtype=bool)
        if not isinstance(encodings, np.ndarray):
            encodings = list(encodings)
        enc = np.asarray(encodings, dtype=np.int64)
        if enc.size:
            if enc.min() < 0 or enc.max() >= space.size:
                raise ValueError("encoding outside the space")
            bits[enc] = True
        return cls(space, bits)

    @classmethod
    def from_points(cls, space: Space, points) -> "PointSet":
        return cls.from_encodings(space, [space.encode(p) for p in points])

    def __len__(self) -> int:
        if self._count is None:
            self._count = int(self.bits.sum())
        return self._count

    def __contains__(self, e: int) -> bool:
        return bool(self.bits[e])

    def contains_point(self, coords) -> bool:
        return bool(self.bits[self.space.encode(coords)])

    def encodings(self) -> np.ndarray:
        return np.nonzero(self.bits)[0]

    def points(self):
        for e in self.encodings():
            yield self.space.decode(int(e))

    def union(self, other: "PointSet") -> "PointSet":
        return PointSet(self.space, self.bits | other.bits)

    def intersection(self, other: "PointSet") -> "PointSet":
        return PointSet(self.space, self.bits & other.bits)

    def difference(self, other: "PointSet") -> "PointSet":
        return PointSet(self.space, self.bits & ~other.bits)

    def subset_of(self, other: "PointSet") -> bool:
        return bool((~self.bits | other.bits).all())

    def has_origin(self) -> bool:
        return bool(self.bits[0])

    def without_origin(self) -> "PointSet":
        if not self.bits[0]:
            return self
        bits = self.bits.copy()
        bits[0] = False
        return PointSet(self.space, bits)

    def __eq__(self, other):
        return (
            isinstance(other, PointSet)
            and self.space == other.space
            and bool(np.array_equal(self.bits, other.bits))
        )

    def __repr__(self):
        return f"PointSet({len(self)} points in GF({self.space.q})^{self.space.n})"


# file format: header "q n [modulus coeffs, constant first]", then one point
# per line as n space-separated element codes. '#' starts a comment.
def _data_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _parse_header(line: str, lineno: int):
    parts = line.split()
    if len(parts) < 2:
        raise ParseError(f"line {lineno}: header needs at least 'q n'")
    try:
        vals = [int(x) for x in parts]
    except ValueError as exc:
        raise ParseError(f"line {lineno}: non-integer in header") from exc
    q, n = vals[0], vals[1]
    modulus = tuple(vals[2:]) or None
    if n < 1:
        raise ParseError(f"line {lineno}: n must be >= 1")
    try:
        field = field_from_order(q, modulus)
    except ValueError as exc:
        raise ParseError(f"line {lineno}: {exc}") from exc
    return Space(field, n)


def parse_point_set(text: str):
    space = None
    bits = None
    seen = 0
    for lineno, line in _data_lines(text):
        if space is None:
            space = _parse_header(line, lineno)
            bits = np.zeros(space.size, dtype=bool)
            continue
        parts = line.split()
        if len(parts) != space.n:
            raise ParseError(f"line {lineno}: expected {space.n} coordinates")
        try:
            coords = tuple(int(x) for x in parts)
        except ValueError as exc:
            raise ParseError(f"line {lineno}: non-integer coordinate") from exc
        try:
            e = space.encode(coords)
        except ValueError as exc:
            raise ParseError(f"line {lineno}: {exc}") from exc
        if bits[e]:
            raise ParseError(f"line {lineno}: duplicate point {coords}")
        bits[e] = True
        seen += 1
    if space is None:
        raise ParseError("empty point-set file")
    return space, PointSet(space, bits)


def load_point_set(path):
    return parse_point_set(Path(path).read_text())


def format_point_set(pset: PointSet) -> str:
    space = pset.space
    head = f"{space.q} {space.n}"
    if space.field.m > 1:
        head += " " + " ".join(str(c) for c in space.field.modulus)
    lines = [head]
    for coords in pset.points():
        lines.append(" ".join(str(c) for c in coords))
    return "\n".join(lines) + "\n"


def save_point_set(path, pset: PointSet):
    Path(path).write_text(format_point_set(pset))
