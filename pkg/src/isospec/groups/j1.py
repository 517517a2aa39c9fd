"""The Janko group J1 as a matrix group in GL(7, 11), enumerated by closure."""

from __future__ import annotations

from collections import Counter
from importlib import resources
from pathlib import Path
from typing import Sequence

import numpy as np

from ..spectra import normalize_mu
from .fields import build_field
from .linear import Enumeration
from .matrices import MatrixElement, batch_orders, element_order, matmul

CLOSURE_LIMIT = 200_000
ORDER_CAP = 1000
CHUNK = 8192
# ATLAS conditions: a in class 2A, b in 3A, o(ab) = 7, o(abab^2) = 19
STANDARD_RELATIONS = {"a": 2, "b": 3, "ab": 7, "abab^2": 19}


class GeneratorFileError(ValueError):
    """Malformed or inconsistent generator data."""


def default_data_path() -> Path:
    return Path(str(resources.files("isospec") / "data" / "j1_standard.txt"))


def load_generator_file(path) -> list[MatrixElement]:
    """Parse a generator file.

    Format: ``GF p`` then ``DIM n`` then the matrices row by row, ``n``
    integers in ``[0, p)`` per line; blank lines and ``#`` comments are
    ignored. Errors cite the offending line number.
    """
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise GeneratorFileError(f"{path}: cannot read generator file: {exc}") from exc

    p = dim = None
    rows: list[list[int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        where = f"{path}:{lineno}"
        words = line.split()
        if p is None:
            if len(words) != 2 or words[0] != "GF" or not words[1].isdigit():
                raise GeneratorFileError(f"{where}: expected 'GF <prime>', got {line!r}")
            p = int(words[1])
            continue
        if dim is None:
            if len(words) != 2 or words[0] != "DIM" or not words[1].isdigit():
                raise GeneratorFileError(f"{where}: expected 'DIM <n>', got {line!r}")
            dim = int(words[1])
            continue
        try:
            row = [int(w) for w in words]
        except ValueError:
            raise GeneratorFileError(f"{where}: non-integer entry in {line!r}") from None
        if len(row) != dim:
            raise GeneratorFileError(f"{where}: expected {dim} entries, got {len(row)}")
        if any(not 0 <= x < p for x in row):
            raise GeneratorFileError(f"{where}: entries must lie in [0, {p - 1}]")
        rows.append(row)

    if p is None or dim is None:
        raise GeneratorFileError(f"{path}: missing GF/DIM header")
    if not rows or len(rows) % dim:
        raise GeneratorFileError(f"{path}: {len(rows)} matrix rows is not a multiple of {dim}")
    try:
        field = build_field(p, 1)
    except ValueError as exc:
        raise GeneratorFileError(f"{path}: {exc}") from None
    return [MatrixElement(field, np.array(rows[i : i + dim])) for i in range(0, len(rows), dim)]


def check_standard_generators(a: MatrixElement, b: MatrixElement) -> dict[str, int]:
    """Orders of the words in ``STANDARD_RELATIONS``; raises on mismatch."""
    ab = a @ b
    words = {"a": a, "b": b, "ab": ab, "abab^2": ab @ ab @ b}
    found = {}
    for name, expected in STANDARD_RELATIONS.items():
        found[name] = element_order(words[name], cap=ORDER_CAP)
        if found[name] != expected:
            raise GeneratorFileError(
                f"sanity check failed: o({name}) = {found[name]}, expected {expected}"
            )
    return found


def load_j1_generators(path=None) -> list[MatrixElement]:
    """Load and validate the standard generators (defaults to bundled data)."""
    path = default_data_path() if path is None else Path(path)
    gens = load_generator_file(path)
    if len(gens) != 2:
        raise GeneratorFileError(f"{path}: expected 2 matrices, found {len(gens)}")
    a, b = gens
    if a.field.p != 11 or a.dimension != 7:
        raise GeneratorFileError(f"{path}: J1 data must be 7x7 over GF(11)")
    check_standard_generators(a, b)
    return gens


def closure(generators: Sequence[MatrixElement], limit: int = CLOSURE_LIMIT) -> np.ndarray:
    """All products of the generators, by breadth-first search.

    Elements are hashed as packed byte strings; the result is the stack of
    matrices (``uint8`` codes) in discovery order.
    """
    if not generators:
        raise ValueError("need at least one generator")
    field = generators[0].field
    n = generators[0].dimension
    if field.k != 1 or field.p > 256:
        raise ValueError("closure works over prime fields of at most 256 elements")
    gens = [g.entries for g in generators]
    identity = np.eye(n, dtype=np.int64)
    seen = {identity.astype(np.uint8).tobytes()}
    found = [identity[None].astype(np.uint8)]
    frontier = identity[None].astype(np.uint8)
    while len(frontier):
        fresh = []
        for g in gens:
            products = (
                matmul(field, frontier[i : i + CHUNK], g).astype(np.uint8)
                for i in range(0, len(frontier), CHUNK)
            )
            for m in (m for block in products for m in block):
                key = m.tobytes()
                if key not in seen:
                    seen.add(key)
                    fresh.append(m)
                    if len(seen) > limit:
                        raise RuntimeError(
                            f"closure exceeded {limit} elements; generators are probably wrong"
                        )
        frontier = np.array(fresh, dtype=np.uint8).reshape(-1, n, n)
        found.append(frontier)
    return np.concatenate(found)


def enumerate_j1(generators: Sequence[MatrixElement] | None = None) -> Enumeration:
    """Order and element-order spectrum of the group the generators span."""
    if generators is None:
        generators = load_j1_generators()
    elements = closure(generators)
    orders = batch_orders(generators[0].field, elements, cap=ORDER_CAP)
    counts = Counter(orders.tolist())
    return Enumeration(len(elements), normalize_mu(counts), dict(sorted(counts.items())))


def standard_field():
    return build_field(11, 1)
