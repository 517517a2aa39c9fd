"""Exhaustive enumeration of ``PSL2(q) = SL2(q)/{+-I}``."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from ..spectra import SpectrumSet, normalize_mu
from .fields import field_of_order
from .matrices import batch_orders

MAX_Q = 64


@dataclass(frozen=True)
class Enumeration:
    """Result of enumerating a finite group: its size and element orders."""

    order: int
    spectrum: SpectrumSet
    order_counts: dict

    def __iter__(self):
        # allows ``spectrum, order = enumerate_...()``
        return iter((self.spectrum, self.order))


def sl2_elements(q: int) -> np.ndarray:
    """All determinant-one 2x2 matrices over GF(q), shape ``(N, 2, 2)``."""
    f = field_of_order(q)
    mul, add, neg, inv = f.mul_table, f.add_table, f.neg_table, f.inv_table
    codes = np.arange(q)
    # a != 0: d = (1 + b c) / a
    a, b, c = np.meshgrid(codes[1:], codes, codes, indexing="ij")
    a, b, c = a.ravel(), b.ravel(), c.ravel()
    d = mul[add[1, mul[b, c]], inv[a]]
    first = np.stack([a, b, c, d], axis=1)
    # a == 0: b c = -1, d free
    b, d = np.meshgrid(codes[1:], codes, indexing="ij")
    b, d = b.ravel(), d.ravel()
    c = neg[inv[b]]
    second = np.stack([np.zeros_like(b), b, c, d], axis=1)
    return np.concatenate([first, second]).reshape(-1, 2, 2)


def canonical_psl2(q: int, mats: np.ndarray) -> np.ndarray:
    """Representative of each coset ``{M, -M}``: the one whose first nonzero
    entry has the smaller code than its negative."""
    f = field_of_order(q)
    if f.p == 2:
        return mats
    neg = f.neg_table
    flat = mats.reshape(len(mats), 4)
    lead = np.where(flat[:, 0] != 0, flat[:, 0], flat[:, 1])
    flip = neg[lead] < lead
    out = flat.copy()
    out[flip] = neg[flat[flip]]
    return out.reshape(-1, 2, 2)


def enumerate_psl2(q: int) -> Enumeration:
    """Size and element-order spectrum of ``PSL2(q)`` by brute force."""
    if not 4 <= q <= MAX_Q:
        raise ValueError(f"q must lie in [4, {MAX_Q}], got {q}")
    f = field_of_order(q)
    reps = canonical_psl2(q, sl2_elements(q))
    packed = ((reps[:, 0, 0] * q + reps[:, 0, 1]) * q + reps[:, 1, 0]) * q + reps[:, 1, 1]
    _, idx = np.unique(packed, return_index=True)
    reps = reps[np.sort(idx)]
    eye = np.eye(2, dtype=np.int64)
    minus = np.where(eye == 1, f.neg_table[1], 0)
    orders = batch_orders(f, reps, cap=2 * q + 2, targets=[eye, minus])
    counts = Counter(orders.tolist())
    return Enumeration(len(reps), normalize_mu(counts), dict(sorted(counts.items())))
