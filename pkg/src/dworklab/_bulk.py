"""Vectorized enumeration kernels.

Everything here works on tables of zero-sum residue vectors for a given
modulus N, encoded as base-N integers so that numeric order equals
lexicographic order on the vectors.  The public modules keep small per-class
operations in plain Python; these kernels exist for the bulk jobs (class
enumeration, repeated-weight scans) where a full table has N^(N-1) rows.

When some coordinate j has gcd(w_j, N) = 1, every coset contains exactly one
vector with v_j = 0, so the classes are enumerated directly from the
N^(N-2)-row transversal {v : v_j = 0}; otherwise the kernels fall back to
the full table and deduplicate.
"""

from functools import lru_cache
from math import gcd

import numpy as np

# full-table fallback ceiling: N = 8 -> ~17M rows is the practical limit
MAX_TABLE_ROWS = 25_000_000


def table_rows(modulus: int) -> int:
    return modulus ** (modulus - 1)


def check_table_budget(modulus: int, max_rows: int = MAX_TABLE_ROWS) -> None:
    rows = table_rows(modulus)
    if rows > max_rows:
        raise ValueError(
            f"bulk enumeration for modulus {modulus} needs {rows} rows, "
            f"over the limit of {max_rows}; raise max_rows to force it"
        )


def _sum_constrained_rows(modulus: int, positions: list[int], dep: int) -> np.ndarray:
    """Rows over {0..N-1}^N sweeping `positions` freely, with the `dep`
    coordinate forced by the zero-sum condition and all others zero."""
    n = modulus
    count = n ** len(positions)
    idx = np.arange(count, dtype=np.int64)
    rows = np.zeros((count, n), dtype=np.int8)
    acc = np.zeros(count, dtype=np.int64)
    for rank, i in enumerate(positions):
        col = (idx // (n ** (len(positions) - 1 - rank))) % n
        rows[:, i] = col
        acc += col
    rows[:, dep] = (-acc) % n
    return rows


@lru_cache(maxsize=6)
def zero_sum_table(modulus: int) -> np.ndarray:
    """All vectors in {0..N-1}^N with zero coordinate sum mod N, in lex order."""
    n = modulus
    check_table_budget(n)
    return _sum_constrained_rows(n, list(range(n - 1)), n - 1)


@lru_cache(maxsize=16)
def _transversal_table(modulus: int, zero_at: int) -> np.ndarray:
    """Zero-sum vectors with coordinate `zero_at` equal to 0 (N^(N-2) rows)."""
    n = modulus
    dep = n - 1 if zero_at != n - 1 else n - 2
    free = [i for i in range(n) if i not in (zero_at, dep)]
    return _sum_constrained_rows(n, free, dep)


def _transversal_position(modulus: int, weight: tuple[int, ...]) -> int | None:
    for j, w in enumerate(weight):
        if gcd(w, modulus) == 1:
            return j
    return None


def _encode(rows: np.ndarray, modulus: int) -> np.ndarray:
    code = np.zeros(rows.shape[0], dtype=np.int64)
    for i in range(rows.shape[1]):
        code *= modulus
        code += rows[:, i]
    return code


def encode_rows(rows: np.ndarray, modulus: int) -> np.ndarray:
    return _encode(rows, modulus)


def decode(code: int, modulus: int) -> tuple[int, ...]:
    n = modulus
    return tuple(int(code // n ** (n - 1 - i)) % n for i in range(n))


def decode_many(codes: np.ndarray, modulus: int) -> list[tuple[int, ...]]:
    n = modulus
    rows = np.empty((len(codes), n), dtype=np.int64)
    for i in range(n):
        rows[:, i] = (codes // n ** (n - 1 - i)) % n
    return [tuple(r) for r in rows.tolist()]


def encode_one(entries: tuple[int, ...], modulus: int) -> int:
    code = 0
    for e in entries:
        code = code * modulus + e
    return code


def _shifted(rows: np.ndarray, k: int, weight: tuple[int, ...], modulus: int) -> np.ndarray:
    shift = np.array([(k * w) % modulus for w in weight], dtype=np.int16)
    out = rows.astype(np.int16) + shift
    out[out >= modulus] -= modulus
    return out


def _class_rows(modulus: int, weight: tuple[int, ...], max_rows: int):
    """(rows, canon) with one row per class; canon[i] is the lex-least coset
    member code of row i.  Rows are not themselves canonical in general."""
    n = modulus
    j = _transversal_position(n, weight)
    if j is not None and n >= 3:
        if n ** (n - 2) > max_rows:
            raise ValueError(
                f"class enumeration for modulus {n} needs {n ** (n - 2)} rows, "
                f"over the limit of {max_rows}"
            )
        rows = _transversal_table(n, j)
        canon = _encode(rows, n)
        for k in range(1, n):
            np.minimum(canon, _encode(_shifted(rows, k, weight, n), n), out=canon)
        return rows, canon
    # fallback: dedupe the full table
    check_table_budget(n, max_rows)
    rows = zero_sum_table(n)
    own = _encode(rows, n)
    canon = own.copy()
    for k in range(1, n):
        np.minimum(canon, _encode(_shifted(rows, k, weight, n), n), out=canon)
    keep = own == canon
    return rows[keep], canon[keep]


@lru_cache(maxsize=8)
def canonical_class_codes(
    modulus: int, weight: tuple[int, ...], max_rows: int = MAX_TABLE_ROWS
) -> np.ndarray:
    """Sorted codes of the lex-least coset representatives, one per class."""
    _, canon = _class_rows(modulus, weight, max_rows)
    return np.sort(canon)


@lru_cache(maxsize=8)
def class_weight_stats(modulus: int, weight: tuple[int, ...], max_rows: int = MAX_TABLE_ROWS):
    """Per-class arrays used by the repeated-weight scan.

    Returns (codes, tnz, ht, member) where codes is the sorted array of
    canonical representative codes and the other three have shape
    (N, n_classes): entry [k, j] describes the k-th coset member of class j
    (totally-nonzero flag, weight value, member code).
    """
    n = modulus
    rows, canon = _class_rows(n, weight, max_rows)
    order = np.argsort(canon)
    rows = rows[order]
    codes = canon[order]

    count = rows.shape[0]
    tnz = np.empty((n, count), dtype=bool)
    ht = np.empty((n, count), dtype=np.int32)
    member = np.empty((n, count), dtype=np.int64)
    for k in range(n):
        shifted = _shifted(rows, k, weight, n)
        tnz[k] = shifted.all(axis=1)
        ht[k] = shifted.sum(axis=1, dtype=np.int32) // n - 1
        member[k] = _encode(shifted, n)
    return codes, tnz, ht, member


def repeated_weight_codes(
    modulus: int, weight: tuple[int, ...], indexed: bool, max_rows: int = MAX_TABLE_ROWS
) -> np.ndarray:
    """Codes of the classes whose weight multiset contains a repeat.

    Under indexed semantics the N coset members are counted with
    multiplicity, so coinciding members with equal weights count as a
    repeat; under set semantics the two members must differ.
    """
    n = modulus
    codes, tnz, ht, member = class_weight_stats(modulus, weight, max_rows)
    flag = np.zeros(codes.shape[0], dtype=bool)
    for i in range(n):
        for j in range(i + 1, n):
            pair = tnz[i] & tnz[j] & (ht[i] == ht[j])
            if not indexed:
                pair &= member[i] != member[j]
            flag |= pair
    return codes[flag]


def totally_nonzero_count(modulus: int) -> int:
    rows = zero_sum_table(modulus)
    return int(rows.all(axis=1).sum())
