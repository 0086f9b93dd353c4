"""Exact linear algebra over F_q and F_{q^m}.

Matrices are immutable row tuples of integer element codes tagged with the
field they live over.  Everything is computed exactly; there is no floating
point anywhere in this package.

Subspaces are always identified with their unique reduced row echelon basis,
which gives canonical equality testing.  ``enumerate_subspaces`` walks all
subspaces of a given dimension as RREF representatives, ordered by pivot
column set (lexicographic) and then by free entries in row-major canonical
element order; the count always equals the Gaussian binomial coefficient and
is checked against the enumeration budget up front.

For the base field F_2, rows flatten to machine integers (bit j = column j)
and rank/echelon work runs on XOR; the generic path covers every other
field.  Both paths are exercised against each other in the test suite.
"""

from __future__ import annotations

import bisect
import itertools
from typing import Iterable, Iterator, Sequence

from .errors import BudgetError, DomainError
from .fields import Field

DEFAULT_BUDGET = 10_000_000


# ---------------------------------------------------------------------------
# matrices
# ---------------------------------------------------------------------------

class Mat:
    """Dense matrix over a single field, stored row-major."""

    __slots__ = ("field", "rows", "nrows", "ncols")

    def __init__(self, field: Field, rows: Iterable[Iterable[int]],
                 ncols: int | None = None):
        rows = tuple(tuple(r) for r in rows)
        if rows:
            ncols = len(rows[0])
            for r in rows:
                if len(r) != ncols:
                    raise DomainError("ragged rows")
                for x in r:
                    field.check_element(x)
        elif ncols is None:
            raise DomainError("empty matrix needs an explicit column count")
        self.field = field
        self.rows = rows
        self.nrows = len(rows)
        self.ncols = ncols

    @classmethod
    def identity(cls, field: Field, n: int) -> "Mat":
        return cls(field, [[1 if i == j else 0 for j in range(n)]
                           for i in range(n)])

    @classmethod
    def zero(cls, field: Field, nrows: int, ncols: int) -> "Mat":
        return cls(field, [[0] * ncols for _ in range(nrows)], ncols=ncols)

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(r[j] for r in self.rows)

    def transpose(self) -> "Mat":
        return Mat(self.field,
                   [self.col(j) for j in range(self.ncols)],
                   ncols=self.nrows)

    def stack(self, other: "Mat") -> "Mat":
        if other.ncols != self.ncols:
            raise DomainError("column count mismatch in stack")
        return Mat(self.field, self.rows + other.rows, ncols=self.ncols)

    def __eq__(self, other):
        return (isinstance(other, Mat) and self.rows == other.rows
                and self.ncols == other.ncols)

    def __hash__(self):
        return hash((self.rows, self.ncols))

    def __repr__(self):
        return f"Mat({self.nrows}x{self.ncols} over {self.field!r})"


def matmul(A: Mat, B: Mat) -> Mat:
    if A.ncols != B.nrows:
        raise DomainError("shape mismatch in matmul")
    F = A.field
    cols = [B.col(j) for j in range(B.ncols)]
    out = []
    for r in A.rows:
        row = []
        for c in cols:
            acc = 0
            for x, y in zip(r, c):
                if x and y:
                    acc = F.add(acc, F.mul(x, y))
            row.append(acc)
        out.append(row)
    return Mat(F, out, ncols=B.ncols)


def vec_mat(v: Sequence[int], M: Mat) -> tuple[int, ...]:
    """Row vector times matrix."""
    if len(v) != M.nrows:
        raise DomainError("shape mismatch in vec_mat")
    F = M.field
    out = [0] * M.ncols
    for x, row in zip(v, M.rows):
        if x:
            for j, y in enumerate(row):
                if y:
                    out[j] = F.add(out[j], F.mul(x, y))
    return tuple(out)


# ---------------------------------------------------------------------------
# echelon cores
# ---------------------------------------------------------------------------

def _rref_rows(field: Field, rows: list[list[int]]) -> tuple[list, list[int]]:
    """In-place Gauss-Jordan; returns (reduced nonzero rows, pivot cols)."""
    if not rows:
        return [], []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = field.inv(rows[r][c])
        if inv != 1:
            rows[r] = [field.mul(inv, x) for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [field.sub(x, field.mul(f, y))
                           for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rref(M: Mat) -> tuple[Mat, int, tuple[int, ...]]:
    """Unique reduced row echelon form, rank and pivot columns."""
    rows, pivots = _rref_rows(M.field, [list(r) for r in M.rows])
    R = Mat(M.field, rows, ncols=M.ncols)
    return R, len(pivots), tuple(pivots)


def rank(M: Mat) -> int:
    return rref(M)[1]


def kernel(M: Mat) -> Mat:
    """Basis of the right null space, one row per free column of rref(M).

    The basis is in standard form: row for free column j has a 1 in
    position j and -R[i][j] in pivot position p_i.  For a full-row-rank
    matrix in systematic form this reproduces the textbook parity-check
    construction.
    """
    F = M.field
    R, rk, pivots = rref(M)
    free = [j for j in range(M.ncols) if j not in set(pivots)]
    out = []
    for j in free:
        v = [0] * M.ncols
        v[j] = 1
        for i, p in enumerate(pivots):
            v[p] = F.neg(R.rows[i][j])
        out.append(v)
    return Mat(F, out, ncols=M.ncols)


class Echelon:
    """Incremental row echelon structure over a field, used by the scan
    loops.  For F_2 the rows are bit-packed integers (bit j = column j);
    otherwise they are coefficient tuples reduced on insert.
    """

    __slots__ = ("field", "ncols", "packed", "rows", "dim")

    def __init__(self, field: Field, ncols: int):
        self.field = field
        self.ncols = ncols
        self.packed = field.order == 2
        # packed: dict pivot bit -> int row; generic: dict pivot -> tuple row
        self.rows: dict[int, object] = {}
        self.dim = 0

    def copy(self) -> "Echelon":
        e = Echelon.__new__(Echelon)
        e.field = self.field
        e.ncols = self.ncols
        e.packed = self.packed
        e.rows = dict(self.rows)
        e.dim = self.dim
        return e

    def insert(self, row) -> bool:
        """Reduce row against the current basis; keep it if independent.
        Returns True when the dimension grew."""
        if self.packed:
            rows = self.rows
            v = row
            while v:
                p = v.bit_length() - 1
                other = rows.get(p)
                if other is None:
                    rows[p] = v
                    self.dim += 1
                    return True
                v ^= other
            return False
        F = self.field
        sub, mul = F.sub, F.mul
        rows = self.rows
        v = list(row)
        n = self.ncols
        j = 0
        while j < n:
            x = v[j]
            if x:
                other = rows.get(j)
                if other is None:
                    if x != 1:
                        inv = F.inv(x)
                        v = [mul(inv, y) for y in v]
                    rows[j] = tuple(v)
                    self.dim += 1
                    return True
                for t in range(j, n):
                    o = other[t]
                    if o:
                        v[t] = sub(v[t], mul(x, o))
            j += 1
        return False

    def insert_vec(self, row: Sequence[int]) -> bool:
        """Insert a coefficient-tuple row, packing it first if needed."""
        if self.packed:
            return self.insert(pack_gf2_row(row))
        return self.insert(row)

    def insert_all(self, rows) -> int:
        added = 0
        for r in rows:
            if self.insert_vec(r):
                added += 1
        return added


def pack_gf2_row(row: Sequence[int]) -> int:
    v = 0
    for j, x in enumerate(row):
        if x:
            v |= 1 << j
    return v


def unpack_gf2_row(v: int, ncols: int) -> tuple[int, ...]:
    return tuple((v >> j) & 1 for j in range(ncols))


def span_dim(field: Field, rows: Iterable[Sequence[int]], ncols: int) -> int:
    ech = Echelon(field, ncols)
    if ech.packed:
        for r in rows:
            ech.insert(pack_gf2_row(r))
    else:
        ech.insert_all(rows)
    return ech.dim


# ---------------------------------------------------------------------------
# rank-metric primitives expressed through flattening
# ---------------------------------------------------------------------------

def flatten_rows(tower, rows: Iterable[Sequence[int]]) -> list[tuple[int, ...]]:
    """Flatten vectors over F_{q^m} to F_q-rows of width m * L."""
    return [tower.flatten(r) for r in rows]


def fq_span_dim(tower, vectors: Iterable[Sequence[int]]) -> int:
    """Dimension over F_q of the F_q-span of vectors in F_{q^m}^L."""
    vectors = list(vectors)
    if not vectors:
        return 0
    width = tower.m * len(vectors[0])
    return span_dim(tower.base, flatten_rows(tower, vectors), width)


def intersect_fq(A: Mat, B: Mat) -> Mat:
    """RREF basis of the intersection of two F_q-row spaces (Zassenhaus).

    The dimension satisfies dim(A & B) = dim A + dim B - dim(A + B).
    """
    if A.ncols != B.ncols:
        raise DomainError(
            f"ambient mismatch: {A.ncols} vs {B.ncols} columns")
    F = A.field
    n = A.ncols
    block = [list(r) + list(r) for r in A.rows]
    block += [list(r) + [0] * n for r in B.rows]
    reduced, _ = _rref_rows(F, block)
    inter = [row[n:] for row in reduced if not any(row[:n])]
    rows, _ = _rref_rows(F, inter)
    return Mat(F, rows, ncols=n)


# ---------------------------------------------------------------------------
# subspace enumeration
# ---------------------------------------------------------------------------

def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of F_q^n (exact integer)."""
    if k < 0 or k > n:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    assert num % den == 0
    return num // den


class SubspaceIter:
    """Canonical enumeration of dim-d subspaces of F^n as RREF bases.

    Representatives are ordered by pivot column set (lexicographic), then by
    the values of the free entries, filled in row-major position order with
    the last free position varying fastest.  The iterator is splittable and
    supports random access, so enumeration ranges can be partitioned across
    workers and merged deterministically.
    """

    def __init__(self, ambient: int, dim: int, field: Field,
                 budget: int | None = None,
                 start: int = 0, stop: int | None = None,
                 _shared=None):
        if not 0 <= dim <= ambient:
            raise DomainError(
                f"need 0 <= dim <= ambient, got dim={dim}, ambient={ambient}")
        self.ambient = ambient
        self.dim = dim
        self.field = field
        if _shared is None:
            count = gaussian_binomial(ambient, dim, field.order)
            limit = DEFAULT_BUDGET if budget is None else budget
            if count > limit:
                raise BudgetError(
                    f"enumerating {count} subspaces of dimension {dim} in "
                    f"F^{ambient} exceeds the budget {limit}")
            combos = list(itertools.combinations(range(ambient), dim))
            offsets = [0]
            q = field.order
            for piv in combos:
                nfree = self._free_count(piv, ambient)
                offsets.append(offsets[-1] + q ** nfree)
            assert offsets[-1] == count
            _shared = (combos, offsets, count)
        self._combos, self._offsets, self.count = _shared
        self.start = start
        self.stop = self.count if stop is None else stop

    @staticmethod
    def _free_count(pivots: Sequence[int], ambient: int) -> int:
        pset = set(pivots)
        return sum(1 for p in pivots for j in range(p + 1, ambient)
                   if j not in pset)

    @staticmethod
    def _free_slots(pivots: Sequence[int], ambient: int) -> list[tuple[int, int]]:
        pset = set(pivots)
        return [(i, j) for i, p in enumerate(pivots)
                for j in range(p + 1, ambient) if j not in pset]

    def __len__(self) -> int:
        return self.stop - self.start

    def split(self, parts: int) -> list["SubspaceIter"]:
        """Partition the index range into contiguous chunks."""
        total = len(self)
        shared = (self._combos, self._offsets, self.count)
        bounds = [self.start + (total * i) // parts for i in range(parts + 1)]
        return [SubspaceIter(self.ambient, self.dim, self.field,
                             start=a, stop=b, _shared=shared)
                for a, b in zip(bounds, bounds[1:])]

    def _build(self, pivots: Sequence[int], slots, values) -> Mat:
        rows = [[0] * self.ambient for _ in range(self.dim)]
        for i, p in enumerate(pivots):
            rows[i][p] = 1
        for (i, j), v in zip(slots, values):
            rows[i][j] = v
        return Mat(self.field, rows, ncols=self.ambient)

    def subspace_at(self, index: int) -> Mat:
        if not 0 <= index < self.count:
            raise DomainError("subspace index out of range")
        ci = bisect.bisect_right(self._offsets, index) - 1
        pivots = self._combos[ci]
        slots = self._free_slots(pivots, self.ambient)
        rem = index - self._offsets[ci]
        q = self.field.order
        values = [0] * len(slots)
        for t in range(len(slots) - 1, -1, -1):
            rem, values[t] = divmod(rem, q)
        return self._build(pivots, slots, values)

    def __iter__(self) -> Iterator[Mat]:
        q = self.field.order
        for ci, pivots in enumerate(self._combos):
            lo, hi = self._offsets[ci], self._offsets[ci + 1]
            if hi <= self.start or lo >= self.stop:
                continue
            slots = self._free_slots(pivots, self.ambient)
            if self.start <= lo and hi <= self.stop:
                for values in itertools.product(range(q), repeat=len(slots)):
                    yield self._build(pivots, slots, values)
            else:
                for index in range(max(lo, self.start), min(hi, self.stop)):
                    yield self.subspace_at(index)


def enumerate_subspaces(ambient: int, dim: int, field: Field,
                        budget: int | None = None) -> SubspaceIter:
    """All dim-dimensional subspaces of F^ambient as canonical RREF bases."""
    return SubspaceIter(ambient, dim, field, budget=budget)
