"""Segment multisets, aperiodicity and the greedy decomposition into Maya tuples."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from .partitions import (
    ChargedMaya,
    DomainError,
    YoungDiagram,
    maya_leq,
    maya_shift,
    residue,
)


@dataclass(frozen=True, order=True)
class Segment:
    lo: int
    hi: int

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError(f"empty segment ({self.lo},{self.hi})")

    @property
    def length(self) -> int:
        return self.hi - self.lo + 1

    def translate(self, r: int) -> "Segment":
        return Segment(self.lo + r, self.hi + r)

    def vertices(self) -> range:
        return range(self.lo, self.hi + 1)


def canonical_segment(seg: Segment, n: Optional[int]) -> Segment:
    """Representative of the translation class: lo moved into [0, n]."""
    if n is None:
        return seg
    return seg.translate(seg.lo % (n + 1) - seg.lo)


@dataclass(frozen=True)
class SegmentMultiset:
    """Finitely supported multiplicity function on segments.

    ``n is None`` is the A_infinity mode; otherwise segments are taken up to
    translation by multiples of n+1 and stored with ``0 <= lo <= n``.
    """

    mult: tuple[tuple[Segment, int], ...] = ()
    n: Optional[int] = None

    def __post_init__(self):
        counts: Counter = Counter()
        for seg, k in self.mult:
            if k < 0:
                raise ValueError("negative multiplicity")
            counts[canonical_segment(seg, self.n)] += k
        object.__setattr__(
            self, "mult", tuple(sorted((s, k) for s, k in counts.items() if k > 0))
        )

    @classmethod
    def of(cls, segments: Iterable, n: Optional[int] = None) -> "SegmentMultiset":
        """Build from an iterable of segments or (lo, hi) pairs, counting repeats."""
        segs = [s if isinstance(s, Segment) else Segment(*s) for s in segments]
        return cls(tuple((s, 1) for s in segs), n)

    @property
    def mode(self) -> str:
        return "inf" if self.n is None else "cyclic"

    def as_counter(self) -> Counter:
        return Counter(dict(self.mult))

    def __len__(self) -> int:
        return sum(k for _, k in self.mult)

    def __iter__(self) -> Iterator[Segment]:
        for seg, k in self.mult:
            for _ in range(k):
                yield seg

    @property
    def total_dim(self) -> int:
        return sum(seg.length * k for seg, k in self.mult)

    def __add__(self, other: "SegmentMultiset") -> "SegmentMultiset":
        if self.n != other.n:
            raise ValueError("mode mismatch")
        return SegmentMultiset(self.mult + other.mult, self.n)


@dataclass(frozen=True)
class MayaTuple:
    entries: tuple[ChargedMaya, ...]
    n: Optional[int] = None

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(self.entries))

    @classmethod
    def of(cls, pairs: Iterable, n: Optional[int] = None) -> "MayaTuple":
        """From (parts, charge) pairs or ChargedMaya values."""
        entries = []
        for p in pairs:
            if isinstance(p, ChargedMaya):
                entries.append(p)
            else:
                parts, charge = p
                entries.append(ChargedMaya(YoungDiagram(tuple(parts)), charge))
        return cls(tuple(entries), n)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[ChargedMaya]:
        return iter(self.entries)

    def __getitem__(self, j: int) -> ChargedMaya:
        return self.entries[j]

    def __repr__(self) -> str:
        return "(" + ",".join(repr(m) for m in self.entries) + ")"

    @property
    def charges(self) -> tuple[int, ...]:
        return tuple(m.charge for m in self.entries)

    @property
    def size(self) -> int:
        return sum(m.shape.size for m in self.entries)

    @property
    def bound(self) -> int:
        return max((m.bound for m in self.entries), default=0)


def is_chain(M: MayaTuple) -> bool:
    """m_1 <= ... <= m_l, and m_l <= m_1[n+1] in cyclic mode."""
    ms = M.entries
    if any(not maya_leq(ms[j], ms[j + 1]) for j in range(len(ms) - 1)):
        return False
    if M.n is not None and ms:
        return maya_leq(ms[-1], maya_shift(ms[0], M.n + 1))
    return True


def segments_of_charged_young(Y: YoungDiagram, gamma: int, n: Optional[int] = None) -> SegmentMultiset:
    return SegmentMultiset.of(
        (Segment(gamma + 1 - i, gamma + Y.part(i) - i) for i in range(1, len(Y) + 1)), n
    )


def segments_of_tuple(M: MayaTuple) -> SegmentMultiset:
    out = SegmentMultiset((), M.n)
    for m in M.entries:
        out = out + segments_of_charged_young(m.shape, m.charge, M.n)
    return out


def is_aperiodic(f: SegmentMultiset) -> bool:
    if f.n is None:
        raise DomainError("aperiodicity is only defined in cyclic mode")
    by_length: dict[int, set[int]] = {}
    for seg, _ in f.mult:
        by_length.setdefault(seg.length, set()).add(seg.lo)
    return all(len(los) < f.n + 1 for los in by_length.values())


def dim_vector(f: SegmentMultiset) -> dict[int, int]:
    out: dict[int, int] = {} if f.n is None else {k: 0 for k in range(f.n + 1)}
    for seg, k in f.mult:
        for r in seg.vertices():
            key = residue(r, f.n)
            out[key] = out.get(key, 0) + k
    return out


def canonical_tuple(f: SegmentMultiset, charges: Sequence[int]) -> Optional[MayaTuple]:
    """Greedy decomposition of ``f`` into a chain-ordered Maya tuple.

    Charges are visited cyclically in the given order.  On the p-th visit a
    charge g takes the longest remaining segment whose leftmost vertex is
    g - (p-1) (mod n+1 in cyclic mode); a charge with no such segment drops
    out.  Returns None if segments are left over or some charge collects
    strings of increasing length.
    """
    charges = list(charges)
    if any(charges[j] > charges[j + 1] for j in range(len(charges) - 1)):
        raise ValueError(f"charges must be weakly increasing: {charges}")
    n = f.n
    if n is not None and charges and charges[-1] - charges[0] > n:
        raise DomainError(f"cyclic charges must lie within a window of width {n}: {charges}")
    pool: dict[int, list[int]] = {}
    for seg, k in f.mult:
        pool.setdefault(residue(seg.lo, n), []).extend([seg.length] * k)
    for lengths in pool.values():
        lengths.sort()

    rows: list[list[int]] = [[] for _ in charges]
    alive = list(range(len(charges)))
    p = 0
    while alive:
        survivors = []
        for j in alive:
            bucket = pool.get(residue(charges[j] - p, n))
            if bucket:
                rows[j].append(bucket.pop())
                survivors.append(j)
        alive = survivors
        p += 1
    if any(pool.values()):
        return None
    if any(r[i] < r[i + 1] for r in rows for i in range(len(r) - 1)):
        return None
    M = MayaTuple(
        tuple(ChargedMaya(YoungDiagram(tuple(r)), g) for r, g in zip(rows, charges)), n
    )
    if not is_chain(M):
        raise AssertionError(f"greedy decomposition violated the chain condition: {M}")
    return M


def row_multiset(M: MayaTuple) -> Counter:
    """Counter of (top-edge height, row length) over all rows of all entries."""
    out: Counter = Counter()
    for m in M.entries:
        for i, li in enumerate(m.shape.parts, start=1):
            out[(m.charge - i + 1, li)] += 1
    return out


def find_full_run(rows: Mapping[tuple[int, int], int], n: int) -> Optional[tuple[int, int]]:
    """Smallest (length, k) such that rows (k..k+n, length) are all present."""
    for (k, length) in sorted(rows, key=lambda kl: (kl[1], kl[0])):
        if all(rows.get((k + i, length), 0) > 0 for i in range(n + 1)):
            return k, length
    return None


def is_n_reduced_tuple(M: MayaTuple) -> bool:
    if M.n is None:
        raise DomainError("n-reduction needs cyclic mode")
    return find_full_run(row_multiset(M), M.n) is None


def multisegments_upto(segments: Sequence[Segment], max_dim: int, n: Optional[int] = None) -> Iterator[SegmentMultiset]:
    """All multisets over ``segments`` with total dimension <= max_dim."""
    segments = sorted(set(segments))

    def rec(idx: int, budget: int) -> Iterator[list[tuple[Segment, int]]]:
        if idx == len(segments):
            yield []
            return
        seg = segments[idx]
        for k in range(budget // seg.length + 1):
            for rest in rec(idx + 1, budget - k * seg.length):
                yield ([(seg, k)] if k else []) + rest

    for mult in rec(0, max_dim):
        yield SegmentMultiset(tuple(mult), n)


def segments_in_window(lo: int, hi: int, max_length: Optional[int] = None) -> list[Segment]:
    out = []
    for a in range(lo, hi + 1):
        for b in range(a, hi + 1):
            if max_length is None or b - a + 1 <= max_length:
                out.append(Segment(a, b))
    return out


def cyclic_segments(n: int, max_length: int) -> list[Segment]:
    return [Segment(lo, lo + L - 1) for L in range(1, max_length + 1) for lo in range(n + 1)]
