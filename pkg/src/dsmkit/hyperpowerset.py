"""Materialization of the full composition lattice and minimal-DNF conversion.

The lattice elements for a frame of n atoms are exactly the upward-closed
region sets, equivalently the monotone Boolean functions of n inputs that
map the all-zeros input to 0.  They are built bottom-up: a monotone function
of k inputs is a pair (f0, f1) of monotone functions of k-1 inputs with
f0 <= f1 pointwise (f0 = restriction to "last input 0", f1 to "last input
1").  Each level stores whole truth tables as integers, the value at input v
sitting at bit (2^k - 1 - v), so concatenation is a shift-or and the integer
value of a table is its canonical ordering key.  Iterating pairs in
ascending order therefore emits each level already sorted.

The final level keeps the all-zeros input column implicitly: it is 0 for
every element except the constant-1 table, which duplicates the union of
all atoms once that column is dropped and is removed (it is the only row
whose integer value has the top bit set, hence the last row).
"""

import warnings
from typing import Callable, Iterable, Iterator

import numpy as np

from .errors import CapacityError, RegionRangeError, UnknownCardinalityError
from .venn import Frame, VennMask, require_isotone, to_bitstring

Antichain = frozenset[frozenset[int]]

GENERATION_CAP = 6

# Published monotone-function counts for n = 0..8.  Enumeration past n=6 is
# out of reach (the n=7 lattice alone needs tens of terabytes), so these are
# constants, cross-checked against the enumeration oracles where feasible.
_KNOWN_COUNTS = (
    2,
    3,
    6,
    20,
    168,
    7581,
    7828354,
    2414682040998,
    56130437228687557907788,
)


class NonMinimalMemberWarning(UserWarning):
    """A DNF member was dropped because another member is contained in it."""


def known_cardinality(n: int) -> int:
    """The published monotone-function count d(n), for 0 <= n <= 8."""
    if not 0 <= n <= 8:
        raise UnknownCardinalityError(
            f"d({n}) has no published value (known only for n <= 8)"
        )
    return _KNOWN_COUNTS[n]


_level_cache: dict[int, np.ndarray] = {}


def _complete_tables(k: int) -> np.ndarray:
    """All monotone truth tables of k inputs, as sorted uint64 keys."""
    if k in _level_cache:
        return _level_cache[k]
    if k == 0:
        tables = np.array([0, 1], dtype=np.uint64)
    else:
        prev = _complete_tables(k - 1)
        half = 1 << (k - 1)
        chunks = []
        for a in prev.tolist():
            upper = prev[(a & ~prev) == 0]
            chunks.append(np.uint64(a << half) | upper)
        tables = np.concatenate(chunks)
    if k <= 5:
        _level_cache[k] = tables
    return tables


def _refuse_capacity(n: int) -> CapacityError:
    bytes_per = max(1, ((1 << n) - 1 + 7) // 8)
    if n <= 8:
        count = known_cardinality(n) - 1
        need = bytes_per * count
        return CapacityError(
            f"generation capped at n={GENERATION_CAP}: n={n} has {count} elements"
            f" needing ~{need} bytes ({need / 2 ** 30:.3g} Gb)",
            element_count=count,
            total_bytes=need,
        )
    floor_count = known_cardinality(8) - 1
    return CapacityError(
        f"generation capped at n={GENERATION_CAP}: n={n} exceeds"
        f" {floor_count} elements (count unknown past n=8)",
        element_count=None,
        total_bytes=None,
    )


class HyperPowerset:
    """All lattice elements of a frame, in canonical ascending order.

    Behaves as an immutable sequence of :class:`VennMask`; membership and
    :meth:`index` are binary searches over the sorted key array.
    """

    def __init__(self, frame: Frame, keys: np.ndarray):
        self.frame = frame
        self._keys = keys

    def __len__(self) -> int:
        return len(self._keys)

    def __getitem__(self, i: int) -> VennMask:
        return VennMask(self.frame, int(self._keys[i]))

    def __iter__(self) -> Iterator[VennMask]:
        for key in self._keys.tolist():
            yield VennMask(self.frame, key)

    def __contains__(self, mask: object) -> bool:
        if not isinstance(mask, VennMask) or mask.frame != self.frame:
            return False
        i = int(np.searchsorted(self._keys, mask.bits))
        return i < len(self._keys) and int(self._keys[i]) == mask.bits

    def index(self, mask: VennMask) -> int:
        """Canonical position of ``mask``; raises ValueError if absent."""
        if mask in self:
            return int(np.searchsorted(self._keys, mask.bits))
        raise ValueError(f"{to_bitstring(mask)} is not a lattice element")


def generate(frame: Frame) -> HyperPowerset:
    """Materialize the whole lattice for ``frame`` (n <= 6).

    Cardinality is d(n) - 1; the zero mask comes first and the union of all
    atoms last.  n=6 yields 7,828,353 elements (~63 Mb of keys); larger
    frames are refused with the size estimate that motivates the cap.
    """
    if frame.n > GENERATION_CAP:
        raise _refuse_capacity(frame.n)
    return HyperPowerset(frame, _complete_tables(frame.n)[:-1])


def generate_stream(frame: Frame, visitor: Callable[[VennMask], None]) -> int:
    """Visit every lattice element in canonical order without storing them.

    Returns the element count, d(n) - 1.  Peak memory is one level-(n-1)
    table plus one pairing block, regardless of the output size.
    """
    if frame.n > GENERATION_CAP:
        raise _refuse_capacity(frame.n)
    if frame.n == 0:
        visitor(VennMask(frame, 0))
        return 1
    prev = _complete_tables(frame.n - 1)
    half = 1 << (frame.n - 1)
    tautology = (1 << (1 << frame.n)) - 1
    count = 0
    for a in prev.tolist():
        upper = prev[(a & ~prev) == 0]
        for key in (np.uint64(a << half) | upper).tolist():
            if key != tautology:
                visitor(VennMask(frame, key))
                count += 1
    return count


def to_dnf(a: VennMask) -> Antichain:
    """Minimal-DNF form: the inclusion-minimal region codes present in ``a``.

    Requires an upward-closed mask.  A present region is minimal iff no
    single-atom-removed predecessor is present (sufficient by closure).
    """
    require_isotone(a)
    R = a.frame.num_regions
    terms = []
    for r in range(1, R + 1):
        if not a.bits >> (R - r) & 1:
            continue
        minimal = True
        for i in a.frame.atoms:
            p = r & ~(1 << (i - 1))
            if p != r and p != 0 and a.bits >> (R - p) & 1:
                minimal = False
                break
        if minimal:
            terms.append(frozenset(i for i in a.frame.atoms if r >> (i - 1) & 1))
    return frozenset(terms)


def from_antichain(members: Iterable[Iterable[int]], frame: Frame) -> VennMask:
    """Upward closure of a set of atom-subsets: the mask of their DNF.

    Members containing another member are redundant by absorption; they are
    dropped with a :class:`NonMinimalMemberWarning`.
    """
    codes = set()
    for member in members:
        atoms = frozenset(member)
        if not atoms:
            raise ValueError("DNF members must be nonempty atom sets")
        for i in atoms:
            if not 1 <= i <= frame.n:
                raise RegionRangeError(f"atom {i} out of range 1..{frame.n}")
        codes.add(sum(1 << (i - 1) for i in atoms))
    minimal = {c for c in codes if not any(o != c and o & c == o for o in codes)}
    if minimal != codes:
        warnings.warn(
            "dropped DNF members absorbed by smaller ones",
            NonMinimalMemberWarning,
            stacklevel=2,
        )
    R = frame.num_regions
    bits = 0
    for r in range(1, R + 1):
        if any(c & r == c for c in minimal):
            bits |= 1 << (R - r)
    return VennMask(frame, bits)


def render_expr(c: Antichain) -> str:
    """Deterministic DNF text: terms by (size, lexicographic), "0" for empty."""
    if not c:
        return "0"
    terms = sorted((len(t), tuple(sorted(t))) for t in c)
    return "|".join("&".join(f"t{i}" for i in atoms) for _, atoms in terms)


def dnf_of_mask(a: VennMask) -> str:
    """Shorthand for ``render_expr(to_dnf(a))``."""
    return render_expr(to_dnf(a))
