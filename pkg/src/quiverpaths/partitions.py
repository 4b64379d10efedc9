"""Young diagrams, charged Maya diagrams, basic paths and level-1 weights.

A charged Maya diagram is stored as a pair ``(shape, charge)``.  Its values
are produced on demand::

    m(j) = charge + j - #{i : l_i > j}        (j >= 0)
    m(-i) = charge + l_i - i                  (i >= 1)

so ``m`` is a bijection of the integers by construction and agrees with
``j + charge`` as soon as ``j >= l_1`` or ``-j > s``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence


class DomainError(ValueError):
    """Raised when an operation is called outside its domain."""


def residue(k: int, n: Optional[int]) -> int:
    """Vertex label of the integer ``k``: itself for A_infinity, else k mod n+1."""
    return k if n is None else k % (n + 1)


def kron(k: int, l: int, n: Optional[int]) -> int:
    """delta(k, l): 1 iff k == l (A_infinity) or k == l mod n+1."""
    if n is None:
        return int(k == l)
    return int((k - l) % (n + 1) == 0)


def cartan(k: int, l: int, n: Optional[int]) -> int:
    """Cartan integer a_kl = 2 delta(k,l) - delta(k,l+1) - delta(k,l-1)."""
    return 2 * kron(k, l, n) - kron(k, l + 1, n) - kron(k, l - 1, n)


@dataclass(frozen=True, order=True)
class YoungDiagram:
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")

    @classmethod
    def from_parts(cls, parts: Sequence[int]) -> "YoungDiagram":
        """Build a diagram, silently dropping zero parts."""
        return cls(tuple(p for p in parts if p != 0))

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __repr__(self) -> str:
        return f"Y{list(self.parts)}"

    def part(self, i: int) -> int:
        """l_i with 1-based index; zero beyond the last row."""
        return self.parts[i - 1] if 1 <= i <= len(self.parts) else 0

    @property
    def size(self) -> int:
        return sum(self.parts)

    def conjugate(self) -> "YoungDiagram":
        if not self.parts:
            return self
        return YoungDiagram(
            tuple(sum(1 for p in self.parts if p > c) for c in range(self.parts[0]))
        )

    def cells(self) -> Iterator[tuple[int, int]]:
        """(row, column) pairs, both 1-based."""
        for i, li in enumerate(self.parts, start=1):
            for c in range(1, li + 1):
                yield i, c

    def contents(self) -> Counter:
        """Multiset of box contents column - row."""
        return Counter(c - i for i, c in self.cells())

    def addable_contents(self) -> list[int]:
        out = []
        prev = None
        for i in range(1, len(self.parts) + 2):
            li = self.part(i)
            if prev is None or li < prev:
                out.append(li + 1 - i)
            prev = li
        return out

    def removable_contents(self) -> list[int]:
        s = len(self.parts)
        return [
            self.parts[i - 1] - i
            for i in range(1, s + 1)
            if self.part(i) > self.part(i + 1)
        ]

    def add_box(self, content: int) -> Optional["YoungDiagram"]:
        """Diagram with one more box of the given content, or None."""
        parts = list(self.parts)
        for i in range(1, len(parts) + 2):
            li = self.part(i)
            if li + 1 - i == content:
                if i > 1 and self.part(i - 1) <= li:
                    return None
                if i == len(parts) + 1:
                    parts.append(1)
                else:
                    parts[i - 1] += 1
                return YoungDiagram(tuple(parts))
        return None

    def remove_box(self, content: int) -> Optional["YoungDiagram"]:
        parts = list(self.parts)
        for i in range(1, len(parts) + 1):
            li = parts[i - 1]
            if li - i == content:
                if self.part(i + 1) >= li:
                    return None
                parts[i - 1] -= 1
                return YoungDiagram.from_parts(parts)
        return None


EMPTY = YoungDiagram(())


@dataclass(frozen=True, order=True)
class ChargedMaya:
    shape: YoungDiagram
    charge: int = 0

    def __call__(self, j: int) -> int:
        return maya_eval(self, j)

    def __repr__(self) -> str:
        return f"({list(self.shape.parts)},{self.charge})"

    @property
    def bound(self) -> int:
        """First j >= 0 from which m(j) = j + charge."""
        return self.shape.part(1)

    def values(self, length: int) -> list[int]:
        return [maya_eval(self, j) for j in range(length)]


def maya_eval(m: ChargedMaya, j: int) -> int:
    """Value m(j) of the Maya diagram.

    For j >= 0 this integrates the signature rule r_j = m(j) - m(j-1) - 1
    from the stable tail; the negative branch is the increasing enumeration
    of the complement, which has the closed form charge + l_i - i.
    """
    parts = m.shape.parts
    if j >= 0:
        return m.charge + j - sum(1 for p in parts if p > j)
    i = -j
    return m.charge + m.shape.part(i) - i


def maya_from_values(values: Sequence[int], charge: int) -> ChargedMaya:
    """Inverse of ``m.values``: rebuild (shape, charge) from m(0), m(1), ...

    The sequence must be strictly increasing with the last entry equal to
    ``len(values) - 1 + charge``.
    """
    if any(values[j] >= values[j + 1] for j in range(len(values) - 1)):
        raise ValueError("Maya values must be strictly increasing")
    if values and values[-1] != len(values) - 1 + charge:
        raise ValueError("Maya values do not reach the stable tail")
    column_heights = [charge + j - v for j, v in enumerate(values)]
    return ChargedMaya(YoungDiagram.from_parts(column_heights).conjugate(), charge)


def maya_shift(m: ChargedMaya, r: int) -> ChargedMaya:
    return ChargedMaya(m.shape, m.charge + r)


def _column_bottom(m: ChargedMaya, x: int) -> int:
    # lowest y of column x in the infinite diagram: quadrant above the charge
    # line plus the finite diagram hanging below it
    return m.charge - sum(1 for p in m.shape.parts if p > x)


def _infinite_diagram_contains(big: ChargedMaya, small: ChargedMaya) -> bool:
    width = max(big.bound, small.bound) + 1
    return all(_column_bottom(big, x) <= _column_bottom(small, x) for x in range(width))


def maya_leq(m: ChargedMaya, m2: ChargedMaya) -> bool:
    """Partial order m <= m2: pointwise comparison of m(j) for j >= 0."""
    horizon = max(m.bound, m2.bound) + 1
    result = all(maya_eval(m, j) <= maya_eval(m2, j) for j in range(horizon))
    assert result == _infinite_diagram_contains(m, m2)
    return result


def maya_leq_by_charge_shift(m: ChargedMaya, m2: ChargedMaya) -> bool:
    """Second characterization of the order, through the negative branch."""
    g, g2 = m.charge, m2.charge
    if g > g2:
        return False
    low = -max(len(m.shape), len(m2.shape)) - 1 + g
    return all(maya_eval(m, j - g) >= maya_eval(m2, j - g2) for j in range(low, g))


@dataclass(frozen=True)
class BasicPath:
    """Eventually periodic sequence of residues, stored as a trimmed prefix.

    Beyond ``prefix`` the entries are ``(j + offset) mod (n+1)``; ``offset``
    is the charge of the Maya diagram the path came from (0 for P_b).
    """

    n: int
    prefix: tuple[int, ...]
    offset: int = 0

    def __post_init__(self):
        prefix = tuple(self.prefix)
        while prefix and prefix[-1] == (len(prefix) - 1 + self.offset) % (self.n + 1):
            prefix = prefix[:-1]
        object.__setattr__(self, "prefix", prefix)

    @property
    def bound(self) -> int:
        return len(self.prefix)

    def __getitem__(self, j: int) -> int:
        if j < len(self.prefix):
            return self.prefix[j]
        return (j + self.offset) % (self.n + 1)

    @classmethod
    def ground(cls, n: int) -> "BasicPath":
        return cls(n, ())


def basic_path(m: ChargedMaya, n: int) -> BasicPath:
    return BasicPath(n, tuple(maya_eval(m, j) % (n + 1) for j in range(m.bound)), m.charge)


def is_n_reduced(Y: YoungDiagram, n: int) -> bool:
    if n < 1:
        raise DomainError("n must be at least 1")
    return all(Y.part(i) > Y.part(i + n) for i in range(1, len(Y) + 1))


def dim_vector_level1(Y: YoungDiagram, n: Optional[int], charge: int = 0) -> dict[int, int]:
    """Box counts per vertex; a box in row i, column c sits at charge + c - i.

    For finite ``n`` every residue 0..n is present in the result (possibly 0).
    """
    out: dict[int, int] = {} if n is None else {k: 0 for k in range(n + 1)}
    for i in range(1, len(Y) + 1):
        for r in range(charge + 1 - i, charge + Y.part(i) - i + 1):
            key = residue(r, n)
            out[key] = out.get(key, 0) + 1
    return out


def delta_weight(Y: YoungDiagram, n: int, k: int) -> int:
    s = len(Y)
    total = kron(k, -s, n)
    for i in range(1, s + 1):
        li = Y.part(i)
        total += kron(k, li - i + 1, n) - kron(k, li - i, n)
    return total


@dataclass(frozen=True, order=True)
class AffineWeight:
    """Eigenvalues of H_0..H_n together with the eigenvalue of d."""

    h: tuple[int, ...]
    deg: int = 0

    def __post_init__(self):
        object.__setattr__(self, "h", tuple(int(x) for x in self.h))

    @property
    def level(self) -> int:
        return sum(self.h)

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.h) + f";{self.deg}"


def level1_weight(Y: YoungDiagram, n: int) -> AffineWeight:
    """Weight of the basis vector indexed by Y in the basic representation."""
    return AffineWeight(
        tuple(delta_weight(Y, n, k) for k in range(n + 1)),
        -dim_vector_level1(Y, n)[0],
    )


def step_energy(lam: int, mu: int) -> int:
    """Level-1 H(lambda, mu): 1 if lambda >= mu else 0."""
    return int(lam >= mu)


def energy_level1(Y: YoungDiagram, n: int) -> int:
    """omega(Y) = sum_{k>=1} k (H(p_{k-1}, p_k) - H(g_{k-1}, g_k)).

    The pairing (p_{k-1}, p_k) with weight k is the convention under which
    the energy equals the number of boxes of residue 0.
    """
    if not is_n_reduced(Y, n):
        raise DomainError(f"{Y} is not {n}-reduced")
    p = basic_path(ChargedMaya(Y, 0), n)
    g = BasicPath.ground(n)
    total = 0
    for k in range(1, p.bound + 1):
        total += k * (step_energy(p[k - 1], p[k]) - step_energy(g[k - 1], g[k]))
    return total


def young_diagrams(size: int) -> Iterator[YoungDiagram]:
    """All Young diagrams with exactly ``size`` boxes, in reverse lex order."""

    def rec(remaining: int, cap: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    for parts in rec(size, size):
        yield YoungDiagram(parts)


def young_diagrams_upto(max_size: int) -> Iterator[YoungDiagram]:
    for size in range(max_size + 1):
        yield from young_diagrams(size)
