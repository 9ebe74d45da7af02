"""Exact arithmetic over the Gaussian rationals Q(i).

Matrices are stored sparsely (only nonzero entries) since the Kemmer
matrices are mostly zero; this keeps the exhaustive identity checks fast.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Iterator, Mapping, Union

Scalar = Union["ExactComplex", int, Fraction]


class ExactComplex:
    """Complex number with exact rational real and imaginary parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: int | Fraction = 0, im: int | Fraction = 0):
        if not isinstance(re, Rational) or not isinstance(im, Rational):
            raise TypeError("ExactComplex parts must be int or Fraction")
        self.re = Fraction(re)
        self.im = Fraction(im)

    @classmethod
    def coerce(cls, value: Scalar) -> "ExactComplex":
        if isinstance(value, ExactComplex):
            return value
        if isinstance(value, Rational):
            return cls(value)
        raise TypeError(f"cannot convert {value!r} to ExactComplex")

    def __add__(self, other: Scalar) -> "ExactComplex":
        o = ExactComplex.coerce(other)
        return ExactComplex(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other: Scalar) -> "ExactComplex":
        o = ExactComplex.coerce(other)
        return ExactComplex(self.re - o.re, self.im - o.im)

    def __rsub__(self, other: Scalar) -> "ExactComplex":
        return ExactComplex.coerce(other) - self

    def __mul__(self, other: Scalar) -> "ExactComplex":
        if isinstance(other, ExactMatrix):
            return NotImplemented
        o = ExactComplex.coerce(other)
        return ExactComplex(self.re * o.re - self.im * o.im,
                            self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other: Scalar) -> "ExactComplex":
        o = ExactComplex.coerce(other)
        den = o.re * o.re + o.im * o.im
        if den == 0:
            raise ZeroDivisionError("division by exact zero")
        num = self * o.conjugate()
        return ExactComplex(num.re / den, num.im / den)

    def __neg__(self) -> "ExactComplex":
        return ExactComplex(-self.re, -self.im)

    def conjugate(self) -> "ExactComplex":
        return ExactComplex(self.re, -self.im)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, ExactComplex):
            return self.re == other.re and self.im == other.im
        if isinstance(other, Rational):
            return self.im == 0 and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.re, self.im))

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __complex__(self) -> complex:
        return complex(float(self.re), float(self.im))

    def is_gaussian_integer(self) -> bool:
        return self.re.denominator == 1 and self.im.denominator == 1

    def __str__(self) -> str:
        sign = "-" if self.im < 0 else "+"
        return f"{self.re}{sign}{abs(self.im)}i"

    def __repr__(self) -> str:
        return f"ExactComplex({self})"


ZERO = ExactComplex(0)
ONE = ExactComplex(1)
I = ExactComplex(0, 1)


class ExactMatrix:
    """Immutable sparse matrix over Q(i).

    ``ExactMatrix10`` in the docs is simply an ``ExactMatrix`` of shape (10, 10).
    """

    __slots__ = ("shape", "_entries")

    def __init__(self, shape: tuple[int, int],
                 entries: Mapping[tuple[int, int], Scalar] | None = None):
        self.shape = (int(shape[0]), int(shape[1]))
        store: dict[tuple[int, int], ExactComplex] = {}
        for (r, c), v in (entries or {}).items():
            if not (0 <= r < self.shape[0] and 0 <= c < self.shape[1]):
                raise IndexError(f"entry {(r, c)} outside shape {self.shape}")
            v = ExactComplex.coerce(v)
            if v:
                store[(r, c)] = v
        self._entries = store

    # construction helpers

    @classmethod
    def zeros(cls, n: int, m: int | None = None) -> "ExactMatrix":
        return cls((n, n if m is None else m))

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls((n, n), {(i, i): 1 for i in range(n)})

    @classmethod
    def from_rows(cls, rows: Iterable[Iterable[Scalar]]) -> "ExactMatrix":
        rows = [list(r) for r in rows]
        ncol = len(rows[0]) if rows else 0
        if any(len(r) != ncol for r in rows):
            raise ValueError("ragged rows")
        return cls((len(rows), ncol),
                   {(i, j): v for i, r in enumerate(rows) for j, v in enumerate(r)})

    @classmethod
    def from_blocks(cls, shape: tuple[int, int],
                    blocks: Mapping[tuple[int, int], "ExactMatrix"]) -> "ExactMatrix":
        """Place sub-matrices with their top-left corners at the given offsets."""
        entries: dict[tuple[int, int], ExactComplex] = {}
        for (r0, c0), blk in blocks.items():
            for (r, c), v in blk.items():
                entries[(r0 + r, c0 + c)] = v
        return cls(shape, entries)

    # access

    def __getitem__(self, idx: tuple[int, int]) -> ExactComplex:
        r, c = idx
        if not (0 <= r < self.shape[0] and 0 <= c < self.shape[1]):
            raise IndexError(idx)
        return self._entries.get((r, c), ZERO)

    def items(self) -> Iterator[tuple[tuple[int, int], ExactComplex]]:
        return iter(sorted(self._entries.items()))

    def nnz(self) -> int:
        return len(self._entries)

    def is_zero(self) -> bool:
        return not self._entries

    def rows(self) -> list[list[ExactComplex]]:
        return [[self[i, j] for j in range(self.shape[1])] for i in range(self.shape[0])]

    # arithmetic

    def _check_same(self, other: "ExactMatrix") -> None:
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other: "ExactMatrix") -> "ExactMatrix":
        self._check_same(other)
        out = dict(self._entries)
        for k, v in other._entries.items():
            out[k] = out.get(k, ZERO) + v
        return ExactMatrix(self.shape, out)

    def __sub__(self, other: "ExactMatrix") -> "ExactMatrix":
        return self + (-other)

    def __neg__(self) -> "ExactMatrix":
        return ExactMatrix(self.shape, {k: -v for k, v in self._entries.items()})

    def scale(self, s: Scalar) -> "ExactMatrix":
        s = ExactComplex.coerce(s)
        return ExactMatrix(self.shape, {k: s * v for k, v in self._entries.items()})

    def __rmul__(self, s: Scalar) -> "ExactMatrix":
        return self.scale(s)

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.shape[1] != other.shape[0]:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        by_row: dict[int, list[tuple[int, ExactComplex]]] = {}
        for (k, j), v in other._entries.items():
            by_row.setdefault(k, []).append((j, v))
        out: dict[tuple[int, int], ExactComplex] = {}
        for (i, k), a in self._entries.items():
            for j, b in by_row.get(k, ()):
                out[(i, j)] = out.get((i, j), ZERO) + a * b
        return ExactMatrix((self.shape[0], other.shape[1]), out)

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            return self @ other
        return self.scale(other)

    def __pow__(self, n: int) -> "ExactMatrix":
        if self.shape[0] != self.shape[1] or n < 0:
            raise ValueError("power needs a square matrix and n >= 0")
        result = ExactMatrix.identity(self.shape[0])
        for _ in range(n):
            result = result @ self
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and self._entries == other._entries

    def __hash__(self) -> int:
        return hash((self.shape, frozenset(self._entries.items())))

    def conjugate_transpose(self) -> "ExactMatrix":
        return ExactMatrix((self.shape[1], self.shape[0]),
                           {(c, r): v.conjugate() for (r, c), v in self._entries.items()})

    @property
    def H(self) -> "ExactMatrix":
        return self.conjugate_transpose()

    def trace(self) -> ExactComplex:
        t = ZERO
        for (r, c), v in self._entries.items():
            if r == c:
                t = t + v
        return t

    def rank(self) -> int:
        """Rank by exact Gaussian elimination."""
        rows = self.rows()
        nrow, ncol = self.shape
        rank = 0
        for col in range(ncol):
            pivot = next((r for r in range(rank, nrow) if rows[r][col]), None)
            if pivot is None:
                continue
            rows[rank], rows[pivot] = rows[pivot], rows[rank]
            p = rows[rank][col]
            for r in range(nrow):
                if r != rank and rows[r][col]:
                    f = rows[r][col] / p
                    rows[r] = [a - f * b for a, b in zip(rows[r], rows[rank])]
            rank += 1
            if rank == nrow:
                break
        return rank

    def to_complex(self):
        import numpy as np
        out = np.zeros(self.shape, dtype=complex)
        for (r, c), v in self._entries.items():
            out[r, c] = complex(v)
        return out

    def dump(self) -> list[list[str]]:
        """Debug dump: nested lists of exact ``"a+bi"`` strings."""
        return [[str(v) for v in row] for row in self.rows()]

    def __repr__(self) -> str:
        return f"ExactMatrix(shape={self.shape}, nnz={self.nnz()})"


def commutator(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    """``ab - ba``, exactly."""
    return a @ b - b @ a
