"""Independent verification paths for the lattice generator.

Three routes that never touch the recursive pairing construction:

* exhaustive truth-table enumeration of monotone Boolean functions (n <= 4);
* the closed-form double-product count, a sum of 2^(2^n) indicator terms
  (n <= 4, n = 5 behind an explicit long-running flag);
* the storage-size arithmetic for frames up to n = 8, using the published
  counts.

Agreement of all three with the generator's cardinality is the main
correctness argument for the construction.
"""

from dataclasses import dataclass
from typing import NamedTuple

from .errors import CapacityError
from .hyperpowerset import known_cardinality
from .venn import Frame, VennMask


class TruthTable(NamedTuple):
    """A Boolean function of n inputs; bit x of ``bits`` is f(x)."""

    n: int
    bits: int

    def value(self, x: int) -> int:
        return self.bits >> x & 1


class MbfResult(NamedTuple):
    count: int
    tables: list[TruthTable]


@dataclass(frozen=True)
class MemRow:
    """One line of the storage-size report for a frame of n atoms."""

    n: int
    bytes_per_elem: int
    elem_count: int
    total_bytes: int
    refined_powerset_size: int

    @property
    def human_size(self) -> str:
        return render_size(self.total_bytes)


def _is_monotone(bits: int, n: int) -> bool:
    # single-bit covers suffice: raising one input may never drop the output
    for x in range(1 << n):
        if not bits >> x & 1:
            continue
        for i in range(n):
            if not x >> i & 1:
                if not bits >> (x | 1 << i) & 1:
                    return False
    return True


def brute_force_mbf(n: int) -> MbfResult:
    """Enumerate every monotone truth table of n inputs; count equals d(n)."""
    if n > 4:
        raise CapacityError(
            f"brute force scans 2^(2^n) = {2 ** 2 ** n} candidate tables;"
            f" capped at n=4",
            element_count=2 ** 2 ** n,
        )
    tables = [
        TruthTable(n, bits)
        for bits in range(1 << (1 << n))
        if _is_monotone(bits, n)
    ]
    return MbfResult(len(tables), tables)


def table_to_mask(table: TruthTable, frame: Frame) -> VennMask:
    """Restrict a table with f(0)=0 to nonzero inputs, as a region mask.

    Input x and region code x coincide, so this is a pure reindexing into
    the canonical bit layout (region r at bit 2^n - 1 - r).
    """
    if table.n != frame.n:
        raise ValueError(f"table over {table.n} inputs, frame has {frame.n} atoms")
    if table.bits & 1:
        raise ValueError("table maps the all-zeros input to 1; not a lattice element")
    R = frame.num_regions
    bits = 0
    for x in range(1, R + 1):
        if table.bits >> x & 1:
            bits |= 1 << (R - x)
    return VennMask(frame, bits)


def _floor_bit(k: int, i: int) -> int:
    """Bit i of k, written as floor(k/2^i) - 2*floor(k/2^(i+1))."""
    return k // (1 << i) - 2 * (k // (1 << (i + 1)))


def kisielewicz_d(n: int, allow_long: bool = False) -> int:
    """The closed-form monotone-function count, evaluated term by term.

    d(n) is a sum over k = 1..2^(2^n) whose summands are all 0 or 1: the
    double product over index pairs i < j penalizes exactly the tables
    (bits of k) that violate monotonicity on a comparable pair.  The inner
    product over m = 0..floor(log2 i) is k-free (it decides whether input
    i precedes input j) and is hoisted out of the k loop unchanged.
    """
    if n > 5:
        raise CapacityError(
            f"closed-form count sums 2^(2^n) = {2 ** 2 ** n} terms; capped at n=5",
            element_count=2 ** 2 ** n,
        )
    if n == 5 and not allow_long:
        raise CapacityError(
            "n=5 sums 2^32 terms (hours of runtime); pass allow_long=True",
            element_count=2 ** 32,
        )
    pairs = []
    for j in range(1, (1 << n)):
        for i in range(j):
            l_i = 0 if i == 0 else i.bit_length() - 1
            sub = 1
            for m in range(l_i + 1):
                factor = 1 - _floor_bit(i, m) * (1 - _floor_bit(j, m))
                assert factor in (0, 1)
                sub *= factor
            if sub == 1:
                pairs.append((i, j))
    total = 0
    for k in range(1, (1 << (1 << n)) + 1):
        term = 1
        for i, j in pairs:
            factor = 1 - _floor_bit(k, i) * (1 - _floor_bit(k, j))
            assert factor in (0, 1)
            if factor == 0:
                term = 0
                break
        assert term in (0, 1)
        total += term
    return total


def render_size(num_bytes: int) -> str:
    """Size with power-of-two units (bytes/Kb/Mb/Gb), 2 significant digits.

    Whole-byte counts below 100 stay in bytes; larger sizes use the
    smallest unit that keeps the value under 1024 (Gb is unbounded).
    """
    if num_bytes < 100:
        return f"{num_bytes} bytes"
    for unit, factor in (("Kb", 1024), ("Mb", 1024 ** 2), ("Gb", 1024 ** 3)):
        if num_bytes < factor * 1024 or unit == "Gb":
            return f"{num_bytes / factor:.2g} {unit}"
    raise AssertionError("unreachable")


def memsize_report(n_min: int = 2, n_max: int = 8) -> list[MemRow]:
    """Storage needs per frame size: bytes/element, element count, total.

    Elements are 2^n - 1 bit strings padded to whole bytes; the empty set
    is not stored, so the count is d(n) - 2.  The last column is the size
    of the powerset a fully refined frame would need, 2^(2^n - 1).
    """
    if n_min < 0 or n_min > n_max:
        raise ValueError(f"bad range {n_min}..{n_max}")
    known_cardinality(n_max)  # refuse n > 8 before emitting partial rows
    rows = []
    for n in range(n_min, n_max + 1):
        bytes_per = max(1, ((1 << n) - 1 + 7) // 8)
        count = known_cardinality(n) - 2
        rows.append(
            MemRow(
                n=n,
                bytes_per_elem=bytes_per,
                elem_count=count,
                total_bytes=bytes_per * count,
                refined_powerset_size=1 << ((1 << n) - 1),
            )
        )
    return rows
