"""Eigenspace dimensions, Hodge-Tate weight multisets, and repeated-weight
witnesses.

The recipe: given a class [v], list its coset elements v + kW, keep the
totally nonzero ones, and for each such u with canonical lifts u_i set

    ht(u) = (sum_i u_i) / N - 1,

an integer in {0,...,N-2} (the lift sum of a totally nonzero zero-sum vector
is a positive multiple of N).  The eigenspace dimension is the number of
totally nonzero coset elements and the weight multiset is {ht(u)} over them.

Two semantics are exposed.  ``set`` counts distinct coset elements; this is
the eigenspace dimension.  ``indexed`` runs k through all of Z/N and keeps
duplicates, which is the right notion for the pigeonhole argument behind the
repeated-weight witnesses: when ord(W) < N the same element is counted
N/ord(W) times.  The two agree whenever ord(W) = N, in particular for the
classical weight.
"""

from dataclasses import dataclass
from math import gcd
from typing import Literal

import numpy as np

from . import _bulk
from .characters import (
    CharClass,
    ResidueVector,
    WeightVector,
    class_of,
    classical_weight,
    coset_elements,
    coset_elements_indexed,
    is_totally_nonzero,
    negate,
    scale_class,
)

__all__ = [
    "Semantics",
    "HodgeData",
    "WitnessReport",
    "WitnessConstructionError",
    "ht_of_vector",
    "totally_nonzero_representatives",
    "hodge_data",
    "semantics_divergent",
    "dual_class",
    "relabel_invariance_report",
    "total_dimension",
    "classical_repeat_class",
    "construct_repeat_witness",
    "repeated_ht_scan",
    "repeated_class_representatives",
    "scan_contains",
]

Semantics = Literal["set", "indexed"]


@dataclass(frozen=True, slots=True)
class HodgeData:
    """Dimension and weight multiset of one eigenspace (weights sorted)."""

    modulus: int
    dimension: int
    weights: tuple[int, ...]
    semantics: str

    def __post_init__(self):
        if self.semantics not in ("set", "indexed"):
            raise ValueError(f"semantics must be 'set' or 'indexed', got {self.semantics!r}")
        if self.dimension != len(self.weights):
            raise ValueError("dimension must equal the number of weights")
        if any(not (0 <= w <= self.modulus - 2) for w in self.weights):
            raise ValueError(f"weights must lie in 0..{self.modulus - 2}: {self.weights}")

    def repeated_values(self) -> tuple[int, ...]:
        return tuple(sorted({w for w in self.weights if self.weights.count(w) >= 2}))


@dataclass(frozen=True, slots=True)
class WitnessReport:
    """A class whose weight multiset contains a repeated value."""

    char_class: CharClass
    hodge: HodgeData
    repeated_value: int
    multiplicity: int
    semantics_divergent: bool

    def __post_init__(self):
        if self.multiplicity < 2:
            raise ValueError("a witness needs multiplicity >= 2")
        if self.hodge.weights.count(self.repeated_value) != self.multiplicity:
            raise ValueError("stated multiplicity does not match the weight multiset")


class WitnessConstructionError(ValueError):
    """The gcd recipe cannot produce a repeated-weight class for this weight."""


def ht_of_vector(vector: ResidueVector) -> int:
    """(sum of canonical lifts)/N - 1 for a totally nonzero vector."""
    if not is_totally_nonzero(vector):
        raise ValueError(f"vector has a zero entry: {vector}")
    return sum(vector.entries) // vector.modulus - 1


def totally_nonzero_representatives(cls: CharClass) -> tuple[ResidueVector, ...]:
    """The totally nonzero coset elements, sorted (set semantics)."""
    return tuple(m for m in coset_elements(cls) if is_totally_nonzero(m))


def hodge_data(cls: CharClass, semantics: Semantics = "set") -> HodgeData:
    if semantics == "set":
        members = coset_elements(cls)
    elif semantics == "indexed":
        members = tuple(m for _, m in coset_elements_indexed(cls))
    else:
        raise ValueError(f"semantics must be 'set' or 'indexed', got {semantics!r}")
    weights = tuple(sorted(ht_of_vector(m) for m in members if is_totally_nonzero(m)))
    return HodgeData(cls.modulus, len(weights), weights, semantics)


def semantics_divergent(cls: CharClass) -> bool:
    """True when the set and indexed weight multisets differ (needs ord(W) < N)."""
    return hodge_data(cls, "set").weights != hodge_data(cls, "indexed").weights


def dual_class(cls: CharClass) -> CharClass:
    """The class of the entrywise negation; an involution.

    Combinatorial shadow of the duality pairing: weights of the dual are
    {N - 2 - w} and the dimension is unchanged.
    """
    return class_of(negate(cls.representative), cls.weight)


def relabel_invariance_report(cls: CharClass, semantics: Semantics = "set") -> bool:
    """Whether every unit rescaling u*[v] leaves the weight multiset unchanged."""
    n = cls.modulus
    base = hodge_data(cls, semantics).weights
    return all(
        hodge_data(scale_class(cls, u), semantics).weights == base
        for u in range(1, n)
        if gcd(u, n) == 1
    )


def total_dimension(modulus: int, weight: WeightVector | None = None) -> int:
    """Sum of set-semantics dimensions over all classes.

    Equals the number of totally nonzero zero-sum vectors, since each lies in
    exactly one coset; in particular the value does not depend on W.
    """
    weight = classical_weight(modulus) if weight is None else weight
    if weight.modulus != modulus:
        raise ValueError("weight modulus does not match")
    return _bulk.totally_nonzero_count(modulus)


def _witness_from_class(cls: CharClass, semantics: Semantics) -> WitnessReport | None:
    data = hodge_data(cls, semantics)
    repeats = data.repeated_values()
    if not repeats:
        return None
    value = repeats[0]
    return WitnessReport(
        char_class=cls,
        hodge=data,
        repeated_value=value,
        multiplicity=data.weights.count(value),
        semantics_divergent=semantics_divergent(cls),
    )


def classical_repeat_class(modulus: int) -> WitnessReport:
    """The known repeated-weight class of the classical family.

    Defined for N = 6 (class of (0,0,0,2,2,2)) and N >= 8 (class of
    (4, N-2, N-2, 0,...,0)).  For N >= 8 the representatives v + W and
    v + 3W are totally nonzero with lift sums 3N, so the weight 2 occurs at
    least twice.  The repeated value is computed by the recipe, never
    hard-coded.
    """
    n = modulus
    if n == 6:
        seed = (0, 0, 0, 2, 2, 2)
    elif n >= 8:
        seed = (4, n - 2, n - 2) + (0,) * (n - 3)
    else:
        raise ValueError(f"no constructed repeated-weight class for N = {n}; need N = 6 or N >= 8")
    cls = class_of(seed, classical_weight(n))
    report = _witness_from_class(cls, "set")
    assert report is not None, "constructed class lost its repeated weight"
    return report


def construct_repeat_witness(modulus: int, weight: WeightVector) -> WitnessReport:
    """Witness class with a repeated indexed weight, for non-classical W.

    Construction: pick the first index with w_i = 0 as pivot; elsewhere set
    v_i = 0 when gcd(w_i, N) = 1 and v_i = 1 otherwise; the pivot entry is
    forced by the zero-sum condition.  Then v + kW is totally nonzero for
    every k != 0 and its weight lies in {1,...,N-2}, so the N-1 values cannot
    all be distinct.

    Raises WitnessConstructionError when the forced pivot entry is 0 (this
    happens exactly for permutations of (0,2,1,...,1) with N odd): every
    coset element then has a zero at the pivot and the recipe produces no
    witness at all.  For N = 3 no class of such a weight has a repeated
    weight, so no witness exists; for larger odd N a scan can still find one.
    """
    n = modulus
    if n < 3:
        raise ValueError(f"need N >= 3, got {n}")
    if weight.modulus != n:
        raise ValueError("weight modulus does not match")
    if weight.classical:
        raise ValueError("the construction applies to non-classical weights only")

    pivot = weight.entries.index(0)
    entries = [0] * n
    for i, w in enumerate(weight.entries):
        if i == pivot:
            continue
        entries[i] = 0 if gcd(w, n) == 1 else 1
    entries[pivot] = (-sum(entries)) % n

    cls = class_of(entries, weight)
    if entries[pivot] == 0:
        raise WitnessConstructionError(
            f"the recipe for W = {weight.entries} forces pivot entry 0 at index {pivot}; "
            f"every element of the coset {cls.representative} + <W> vanishes there, so the "
            "constructed class has no totally nonzero representative"
        )

    report = _witness_from_class(cls, "indexed")
    # guaranteed: N-1 nonzero-k members are totally nonzero with weights in 1..N-2
    assert report is not None, f"pigeonhole failed for W = {weight.entries}"
    return report


def repeated_ht_scan(
    modulus: int,
    weight: WeightVector | None = None,
    semantics: Semantics = "indexed",
    max_rows: int = _bulk.MAX_TABLE_ROWS,
) -> tuple[WitnessReport, ...]:
    """Every class whose weight multiset has a repeat, by exhaustive scan.

    Ordered by canonical representative.  Independent of the witness
    constructions above: it enumerates the full table of zero-sum vectors.
    """
    weight = classical_weight(modulus) if weight is None else weight
    if weight.modulus != modulus:
        raise ValueError("weight modulus does not match")
    if semantics not in ("set", "indexed"):
        raise ValueError(f"semantics must be 'set' or 'indexed', got {semantics!r}")
    codes = _bulk.repeated_weight_codes(modulus, weight.entries, semantics == "indexed", max_rows)
    reports = []
    for code in codes:
        cls = CharClass(weight, ResidueVector(modulus, _bulk.decode(int(code), modulus)))
        report = _witness_from_class(cls, semantics)
        assert report is not None, "scan flagged a class without a repeat"
        reports.append(report)
    return tuple(reports)


def repeated_class_representatives(
    modulus: int,
    weight: WeightVector | None = None,
    semantics: Semantics = "indexed",
    max_rows: int = _bulk.MAX_TABLE_ROWS,
) -> tuple[tuple[int, ...], ...]:
    """Canonical representatives of the classes a scan would report (cheap form)."""
    weight = classical_weight(modulus) if weight is None else weight
    if weight.modulus != modulus:
        raise ValueError("weight modulus does not match")
    codes = _bulk.repeated_weight_codes(modulus, weight.entries, semantics == "indexed", max_rows)
    return tuple(_bulk.decode_many(codes, modulus))


def scan_contains(
    cls: CharClass,
    semantics: Semantics = "indexed",
    max_rows: int = _bulk.MAX_TABLE_ROWS,
) -> bool:
    """Whether the exhaustive repeated-weight scan reports this class.

    Runs the same scan as repeated_ht_scan but answers membership by binary
    search on the flagged canonical codes instead of materializing reports.
    """
    codes = _bulk.repeated_weight_codes(
        cls.modulus, cls.weight.entries, semantics == "indexed", max_rows
    )
    code = _bulk.encode_one(cls.representative.entries, cls.modulus)
    i = int(np.searchsorted(codes, code))
    return i < len(codes) and int(codes[i]) == code
