"""Exact dense linear algebra over Q and over prime fields F_p.

All arithmetic is exact (fractions.Fraction, or canonical residues mod p)
and all elimination is deterministic: the pivot is always the first
nonzero entry in column order, so ranks, echelon forms and kernel bases
are reproducible across runs, platforms and parallelism settings.

Matrices are immutable by convention; every operation returns a fresh
array.  Prime-field matrices are int64 numpy arrays with entries in
[0, p); rational matrices are object arrays of Fraction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np


class LinAlgError(ValueError):
    pass


class FieldMismatch(LinAlgError):
    pass


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


class RationalField:
    """The field Q; elements are Fraction in lowest terms."""

    kind = "rational"
    dtype = object
    zero = Fraction(0)
    one = Fraction(1)

    def from_int(self, n):
        return Fraction(n)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return Fraction(1) / a

    def is_zero(self, a):
        return a == 0

    def parse(self, s):
        if isinstance(s, bool):
            raise LinAlgError(f"not a rational scalar: {s!r}")
        if isinstance(s, int):
            return Fraction(s)
        try:
            return Fraction(str(s))
        except (ValueError, ZeroDivisionError) as e:
            raise LinAlgError(f"not a rational scalar: {s!r}") from e

    def fmt(self, a):
        return str(a)

    def reduce_array(self, arr):
        return arr

    def empty(self, shape):
        a = np.empty(shape, dtype=object)
        a[...] = Fraction(0)
        return a

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("rational")

    def __repr__(self):
        return "Q"


@dataclass(frozen=True)
class PrimeField:
    """The field F_p; elements are plain ints in [0, p)."""

    p: int

    kind = "prime"
    dtype = np.int64
    zero = 0
    one = 1

    def __post_init__(self):
        if not _is_prime(self.p):
            raise LinAlgError(f"modulus {self.p} is not prime")
        if self.p >= 2**31:
            raise LinAlgError(f"modulus {self.p} too large for int64 arithmetic")

    def from_int(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        a = int(a) % self.p
        if a == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def is_zero(self, a):
        return a % self.p == 0

    def parse(self, s):
        if isinstance(s, bool):
            raise LinAlgError(f"not a prime-field scalar: {s!r}")
        if isinstance(s, int):
            return s % self.p
        try:
            return int(str(s), 10) % self.p
        except ValueError as e:
            raise LinAlgError(f"not a prime-field scalar: {s!r}") from e

    def fmt(self, a):
        return str(int(a) % self.p)

    def reduce_array(self, arr):
        return arr % self.p

    def empty(self, shape):
        return np.zeros(shape, dtype=np.int64)

    def __repr__(self):
        return f"F{self.p}"


def field_from_spec(spec):
    """Parse a field description: "rational", "p:<prime>", or an int prime."""
    if isinstance(spec, RationalField) or isinstance(spec, PrimeField):
        return spec
    if isinstance(spec, int):
        return PrimeField(spec)
    if isinstance(spec, dict) and "prime" in spec:
        return PrimeField(int(spec["prime"]))
    if isinstance(spec, str):
        s = spec.strip().lower()
        if s in ("rational", "q"):
            return RationalField()
        if s.startswith("p:"):
            return PrimeField(int(s[2:]))
        if s.isdigit():
            return PrimeField(int(s))
    raise LinAlgError(f"unrecognised field spec: {spec!r}")


class Matrix:
    """Dense matrix over a fixed field, wrapping a canonical numpy array."""

    __slots__ = ("field", "a")

    def __init__(self, field, a):
        self.field = field
        self.a = a

    @classmethod
    def zeros(cls, field, rows, cols):
        return cls(field, field.empty((rows, cols)))

    @classmethod
    def identity(cls, field, n):
        a = field.empty((n, n))
        for i in range(n):
            a[i, i] = field.one
        return cls(field, a)

    @classmethod
    def from_rows(cls, field, rows):
        rows = [list(r) for r in rows]
        if not rows:
            return cls.zeros(field, 0, 0)
        ncols = len(rows[0])
        for r in rows:
            if len(r) != ncols:
                raise LinAlgError("ragged rows")
        a = field.empty((len(rows), ncols))
        for i, r in enumerate(rows):
            for j, v in enumerate(r):
                a[i, j] = v
        return cls(field, field.reduce_array(a))

    @classmethod
    def from_entries(cls, field, rows, cols, entries):
        a = field.empty((rows, cols))
        for (i, j), v in entries.items():
            a[i, j] = v
        return cls(field, field.reduce_array(a))

    @classmethod
    def from_columns(cls, field, ambient, columns):
        a = field.empty((ambient, len(columns)))
        for j, col in enumerate(columns):
            if len(col) != ambient:
                raise LinAlgError(
                    f"vector length {len(col)} does not match ambient {ambient}"
                )
            for i, v in enumerate(col):
                a[i, j] = v
        return cls(field, field.reduce_array(a))

    @property
    def shape(self):
        return self.a.shape

    @property
    def rows(self):
        return self.a.shape[0]

    @property
    def cols(self):
        return self.a.shape[1]

    def _check(self, other):
        if self.field != other.field:
            raise FieldMismatch(f"mixed fields {self.field} and {other.field}")

    def __matmul__(self, other):
        self._check(other)
        if self.cols != other.rows:
            raise LinAlgError(f"shape mismatch {self.shape} @ {other.shape}")
        f = self.field
        if f.kind == "prime" and (f.p - 1) ** 2 * max(self.cols, 1) >= 2**62:
            # int64 would overflow; fall back to Python ints
            prod = np.dot(self.a.astype(object), other.a.astype(object))
            return Matrix(f, (prod % f.p).astype(np.int64))
        return Matrix(f, f.reduce_array(self.a @ other.a))

    def __add__(self, other):
        self._check(other)
        return Matrix(self.field, self.field.reduce_array(self.a + other.a))

    def __sub__(self, other):
        self._check(other)
        return Matrix(self.field, self.field.reduce_array(self.a - other.a))

    def __neg__(self):
        return Matrix(self.field, self.field.reduce_array(-self.a))

    def __eq__(self, other):
        if not isinstance(other, Matrix) or self.field != other.field:
            return False
        return self.shape == other.shape and bool(np.array_equal(self.a, other.a))

    def is_zero(self):
        if self.a.size == 0:
            return True
        return not np.any(self.a != self.field.zero)

    def transpose(self):
        return Matrix(self.field, self.a.T.copy())

    def col(self, j):
        return self.a[:, j].copy()

    def hstack(self, other):
        self._check(other)
        return Matrix(self.field, np.hstack([self.a, other.a]))

    def echelon(self, reduced=True):
        """Return (echelon array, pivot columns); first-nonzero pivoting."""
        a = self.a.copy()
        piv = _eliminate(self.field, a, reduced=reduced)
        return a, piv

    def rank(self):
        if self.a.size == 0:
            return 0
        a = self.a.copy()
        return len(_eliminate(self.field, a, reduced=False))

    def rref(self):
        return self.echelon(reduced=True)

    def kernel_basis(self):
        """Basis of the right null space as 1-D arrays, one per free column."""
        f = self.field
        if self.cols == 0:
            return []
        if self.rows == 0:
            r, piv = f.empty((0, self.cols)), []
        else:
            r, piv = self.rref()
        pivset = set(piv)
        out = []
        for free in range(self.cols):
            if free in pivset:
                continue
            v = f.empty((self.cols,))
            v[free] = f.one
            for j, pc in enumerate(piv):
                v[pc] = f.neg(r[j, free])
            out.append(v)
        return out

    def solve(self, rhs):
        """Solve self @ X = rhs (free variables set to zero); raise if inconsistent."""
        self._check(rhs)
        if self.rows != rhs.rows:
            raise LinAlgError("solve: row mismatch")
        f = self.field
        aug = self.hstack(rhs)
        r, piv = aug.echelon(reduced=True)
        for pc in piv:
            if pc >= self.cols:
                raise LinAlgError("solve: inconsistent system")
        x = f.empty((self.cols, rhs.cols))
        for j, pc in enumerate(piv):
            x[pc, :] = r[j, self.cols:]
        return Matrix(f, x)

    def __repr__(self):
        return f"Matrix({self.field}, {self.rows}x{self.cols})"


def _eliminate(field, a, reduced):
    """In-place row elimination; returns the pivot column list."""
    rows, cols = a.shape
    r = 0
    piv = []
    for c in range(cols):
        if r >= rows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        pivval = a[r, c]
        if pivval != field.one:
            a[r] = field.reduce_array(a[r] * field.inv(pivval))
        lo = 0 if reduced else r + 1
        idx = lo + np.nonzero(a[lo:, c])[0]
        idx = idx[idx != r]
        if idx.size:
            a[idx] = field.reduce_array(a[idx] - np.outer(a[idx, c], a[r]))
        piv.append(c)
        r += 1
    return piv


def rank(m):
    return m.rank()


def kernel_basis(m):
    return m.kernel_basis()


def quotient_dim(field, ambient, sub):
    """dim of (ambient space) / span(sub) = ambient - rank of the span."""
    sub = list(sub)
    if not sub:
        return ambient
    m = Matrix.from_columns(field, ambient, sub)
    return ambient - m.rank()


class EchelonBasis:
    """Incremental reduced echelon basis for sparse row vectors.

    Rows are dicts {coordinate: coefficient} with pivot coefficient 1 and
    mutually reduced supports.  Used both for spanning sets (quotient
    presentations) and for constraint sets (joint kernels); either way the
    pivot/free coordinate split determines the presentation.
    """

    def __init__(self, field, ambient):
        self.field = field
        self.ambient = ambient
        self.rows = {}  # pivot coordinate -> row dict

    def reduce(self, vec):
        f = self.field
        v = {k: c for k, c in vec.items() if not f.is_zero(c)}
        for k in sorted(v):
            if k in self.rows and k in v:
                c = v.pop(k)
                for kk, cc in self.rows[k].items():
                    if kk == k:
                        continue
                    nv = f.sub(v.get(kk, f.zero), f.mul(c, cc))
                    if f.is_zero(nv):
                        v.pop(kk, None)
                    else:
                        v[kk] = nv
        return v

    def add(self, vec):
        f = self.field
        v = self.reduce(vec)
        if not v:
            return False
        pivot = min(v)
        inv = f.inv(v[pivot])
        v = {k: f.mul(c, inv) for k, c in v.items()}
        for row in self.rows.values():
            if pivot in row:
                c = row.pop(pivot)
                for kk, cc in v.items():
                    if kk == pivot:
                        continue
                    nv = f.sub(row.get(kk, f.zero), f.mul(c, cc))
                    if f.is_zero(nv):
                        row.pop(kk, None)
                    else:
                        row[kk] = nv
        self.rows[pivot] = v
        return True

    @property
    def rank(self):
        return len(self.rows)

    def pivots(self):
        return sorted(self.rows)

    def free_coords(self):
        pivset = self.rows.keys()
        return [i for i in range(self.ambient) if i not in pivset]

    def contains(self, vec):
        return not self.reduce(vec)

    def quotient_maps(self):
        """(P, S) with P a projection onto quotient coordinates and S its
        section; P kills exactly the row span and P @ S = identity."""
        f = self.field
        free = self.free_coords()
        P = f.empty((len(free), self.ambient))
        S = f.empty((self.ambient, len(free)))
        pos = {c: k for k, c in enumerate(free)}
        for k, c in enumerate(free):
            P[k, c] = f.one
            S[c, k] = f.one
        for pc, row in self.rows.items():
            for kk, cc in row.items():
                if kk in pos:
                    P[pos[kk], pc] = f.neg(cc)
        return Matrix(f, P), Matrix(f, S)

    def kernel_matrix(self):
        """Columns spanning the joint solution space of the rows read as
        linear constraints; one column per free coordinate."""
        f = self.field
        free = self.free_coords()
        V = f.empty((self.ambient, len(free)))
        pos = {c: k for k, c in enumerate(free)}
        for k, c in enumerate(free):
            V[c, k] = f.one
        for pc, row in self.rows.items():
            for kk, cc in row.items():
                if kk in pos:
                    V[pc, pos[kk]] = f.neg(cc)
        return Matrix(f, V)
