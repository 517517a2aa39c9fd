"""Square matrices over a :class:`FiniteField`, stored as integer codes."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from ..numtheory import factorize
from .fields import FiniteField, FieldElement

DEFAULT_ORDER_CAP = 10**6


def matmul(field: FiniteField, a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Product of code matrices; batches broadcast over leading axes."""
    if field.k == 1:
        return (a.astype(np.int64) @ b.astype(np.int64)) % field.p
    mul, add = field.mul_table, field.add_table
    n = a.shape[-1]
    out = mul[a[..., :, 0, None], b[..., None, 0, :]]
    for k in range(1, n):
        out = add[out, mul[a[..., :, k, None], b[..., None, k, :]]]
    return out


@dataclass(frozen=True, eq=False)
class MatrixElement:
    field: FiniteField
    entries: np.ndarray

    def __post_init__(self):
        arr = np.asarray(self.entries, dtype=np.int64)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {arr.shape}")
        if arr.min(initial=0) < 0 or arr.max(initial=0) >= self.field.order:
            raise ValueError(f"entries must be codes of {self.field!r}")
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)

    @classmethod
    def identity(cls, field: FiniteField, n: int) -> "MatrixElement":
        return cls(field, np.eye(n, dtype=np.int64))

    @classmethod
    def from_elements(cls, rows) -> "MatrixElement":
        rows = [list(r) for r in rows]
        field = rows[0][0].field
        return cls(field, np.array([[x.value for x in r] for r in rows]))

    @property
    def dimension(self) -> int:
        return self.entries.shape[0]

    def __getitem__(self, ij) -> FieldElement:
        return FieldElement(self.field, int(self.entries[ij]))

    def __matmul__(self, other: "MatrixElement") -> "MatrixElement":
        if other.field is not self.field:
            raise ValueError("matrices over different fields")
        return MatrixElement(self.field, matmul(self.field, self.entries, other.entries))

    __mul__ = __matmul__

    def __pow__(self, n: int) -> "MatrixElement":
        if n < 0:
            raise ValueError("negative powers are not supported")
        result = MatrixElement.identity(self.field, self.dimension)
        base = self
        while n:
            if n & 1:
                result = result @ base
            base = base @ base
            n >>= 1
        return result

    def __eq__(self, other):
        return (
            isinstance(other, MatrixElement)
            and other.field is self.field
            and np.array_equal(self.entries, other.entries)
        )

    def __hash__(self):
        return hash((id(self.field), self.entries.tobytes()))

    def is_identity(self) -> bool:
        return np.array_equal(self.entries, np.eye(self.dimension, dtype=np.int64))

    def determinant(self) -> int:
        """Determinant code, by Gaussian elimination over the field."""
        f = self.field
        m = [[int(x) for x in row] for row in self.entries]
        n = len(m)
        det = 1
        for col in range(n):
            pivot = next((r for r in range(col, n) if m[r][col]), None)
            if pivot is None:
                return 0
            if pivot != col:
                m[col], m[pivot] = m[pivot], m[col]
                det = f.neg(det)
            det = f.mul(det, m[col][col])
            inv = f.inv(m[col][col])
            for r in range(col + 1, n):
                if m[r][col]:
                    c = f.mul(m[r][col], inv)
                    m[r] = [f.sub(x, f.mul(c, y)) for x, y in zip(m[r], m[col])]
        return det

    def key(self) -> bytes:
        return self.entries.astype(np.uint32 if self.field.order > 255 else np.uint8).tobytes()


def element_order(m: MatrixElement, multiple: int | None = None, cap: int = DEFAULT_ORDER_CAP) -> int:
    """Order of an invertible matrix.

    With ``multiple`` (any exponent known to kill ``m``, e.g. a group
    order) the order is found by stripping prime factors from it; otherwise
    ``m`` is powered step by step until the identity or ``cap``.
    """
    if m.determinant() == 0:
        raise ValueError("singular matrix has no order")
    if multiple is not None:
        if not (m**multiple).is_identity():
            raise ValueError(f"{multiple} is not a multiple of the element order")
        n = multiple
        for p, _ in factorize(multiple):
            while n % p == 0 and (m ** (n // p)).is_identity():
                n //= p
        return n
    power = m
    for n in range(1, cap + 1):
        if power.is_identity():
            return n
        power = power @ m
    raise RuntimeError(f"element order exceeds cap {cap}")


def batch_orders(field: FiniteField, mats: np.ndarray, cap: int, targets=None, chunk: int = 20000) -> np.ndarray:
    """Orders of a stack of matrices by simultaneous powering.

    ``targets`` is a list of matrices that count as "identity" (for example
    ``I`` and ``-I`` when working modulo the centre); it defaults to ``[I]``.
    """
    n = mats.shape[-1]
    if targets is None:
        targets = [np.eye(n, dtype=np.int64)]
    small = np.int16 if field.k == 1 and n * (field.p - 1) ** 2 < 2**15 else np.int64
    out = np.zeros(len(mats), dtype=np.int64)
    for start in range(0, len(mats), chunk):
        x = mats[start : start + chunk].astype(small)
        power = x.copy()
        orders = np.zeros(len(x), dtype=np.int64)
        live = np.arange(len(x))
        for step in range(1, cap + 1):
            hit = np.zeros(len(live), dtype=bool)
            for t in targets:
                hit |= (power == t).all(axis=(-2, -1))
            orders[live[hit]] = step
            keep = ~hit
            live, power = live[keep], power[keep]
            if not len(live):
                break
            if field.k == 1:
                power = (power @ x[live]) % field.p
            else:
                power = matmul(field, power, x[live])
        else:
            raise RuntimeError(f"element order exceeds cap {cap}")
        out[start : start + chunk] = orders
    return out
