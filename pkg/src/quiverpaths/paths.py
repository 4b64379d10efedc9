"""Level-l paths, the energy function, path weights, lifts and n-reduction.

A step of a path is a sorted tuple of ``l`` residues in ``0..n``.  Paths
are stored as the prefix that differs from the ground path of the highest
weight; everything after the prefix is ground.
"""

from __future__ import annotations

import itertools
import warnings
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional, Sequence

import numpy as np
from scipy.optimize import linear_sum_assignment

from .multisegments import (
    MayaTuple,
    SegmentMultiset,
    canonical_tuple,
    dim_vector,
    find_full_run,
    is_chain,
    is_n_reduced_tuple,
    row_multiset,
    segments_of_tuple,
)
from .partitions import (
    AffineWeight,
    ChargedMaya,
    DomainError,
    YoungDiagram,
    cartan,
    kron,
    maya_eval,
    maya_from_values,
    maya_leq,
)

Step = tuple[int, ...]

EXHAUSTIVE_LIMIT = 8


@dataclass(frozen=True)
class HighestWeight:
    """Lambda = Lambda_{g_1} + ... + Lambda_{g_l} for A_n^(1).

    Charges are kept as integers because lifts live in M[g_1] x ... x M[g_l];
    they must be weakly increasing and span at most n.
    """

    n: int
    charges: tuple[int, ...]

    def __post_init__(self):
        charges = tuple(int(g) for g in self.charges)
        object.__setattr__(self, "charges", charges)
        if self.n < 1:
            raise DomainError("rank n must be at least 1")
        if not charges:
            raise DomainError("a highest weight needs at least one charge")
        if any(charges[j] > charges[j + 1] for j in range(len(charges) - 1)):
            raise DomainError(f"charges must be weakly increasing: {charges}")
        if charges[-1] - charges[0] > self.n:
            raise DomainError(f"charges must span at most n={self.n}: {charges}")

    @property
    def level(self) -> int:
        return len(self.charges)

    def w(self) -> tuple[int, ...]:
        """Multiplicity of each residue among the charges."""
        counts = Counter(g % (self.n + 1) for g in self.charges)
        return tuple(counts[k] for k in range(self.n + 1))

    def weight(self) -> AffineWeight:
        return AffineWeight(self.w(), 0)

    def ground_step(self, k: int) -> Step:
        return tuple(sorted((g + k) % (self.n + 1) for g in self.charges))

    def steps(self) -> list[Step]:
        """All possible steps: sorted l-multisets of residues."""
        return list(itertools.combinations_with_replacement(range(self.n + 1), self.level))


@dataclass(frozen=True)
class LevelPath:
    lam: HighestWeight
    prefix: tuple[Step, ...] = ()

    def __post_init__(self):
        prefix = tuple(tuple(sorted(int(x) % (self.lam.n + 1) for x in s)) for s in self.prefix)
        if any(len(s) != self.lam.level for s in prefix):
            raise ValueError("every step must have exactly l residues")
        while prefix and prefix[-1] == self.lam.ground_step(len(prefix) - 1):
            prefix = prefix[:-1]
        object.__setattr__(self, "prefix", prefix)

    @property
    def n(self) -> int:
        return self.lam.n

    @property
    def bound(self) -> int:
        """Every step from this index on is ground."""
        return len(self.prefix)

    def __getitem__(self, k: int) -> Step:
        if k < len(self.prefix):
            return self.prefix[k]
        return self.lam.ground_step(k)

    def __repr__(self) -> str:
        return f"LevelPath({list(self.lam.charges)}, n={self.n}, {[list(s) for s in self.prefix]})"


def _theta(mu: int) -> int:
    return 1 if mu >= 0 else 0


@lru_cache(maxsize=None)
def _h_exhaustive(alpha: Step, beta: Step) -> int:
    return min(
        sum(_theta(a - b) for a, b in zip(alpha, perm))
        for perm in set(itertools.permutations(beta))
    )


def _h_assignment(alpha: Step, beta: Step) -> int:
    cost = np.array([[_theta(a - b) for b in beta] for a in alpha])
    rows, cols = linear_sum_assignment(cost)
    return int(cost[rows, cols].sum())


def h_energy(alpha: Sequence[int], beta: Sequence[int], n: int) -> int:
    """min over permutations s of sum_i theta(alpha_i - beta_s(i))."""
    if len(alpha) != len(beta):
        raise ValueError("steps must have the same size")
    if any(not 0 <= x <= n for x in (*alpha, *beta)):
        raise ValueError(f"residues must lie in [0, {n}]")
    a, b = tuple(sorted(alpha)), tuple(sorted(beta))
    if len(a) <= EXHAUSTIVE_LIMIT:
        return _h_exhaustive(a, b)
    return _h_assignment(a, b)


def ground_path(lam: HighestWeight) -> LevelPath:
    return LevelPath(lam, ())


def _ground_h(lam: HighestWeight, k: int) -> int:
    return h_energy(lam.ground_step(k - 1), lam.ground_step(k), lam.n)


def path_energy(eta: LevelPath) -> int:
    lam = eta.lam
    total = sum(
        k * (h_energy(eta[k - 1], eta[k], lam.n) - _ground_h(lam, k))
        for k in range(1, eta.bound + 1)
    )
    if total < 0:
        warnings.warn(f"negative energy {total} for {eta}", RuntimeWarning)
    return total


def path_weight(eta: LevelPath) -> AffineWeight:
    lam = eta.lam
    n = lam.n
    diff: Counter = Counter()
    for k in range(eta.bound):
        diff.update(eta[k])
        diff.subtract(lam.ground_step(k))
    h = []
    for k in range(n + 1):
        shift = sum(c * (kron(k, mu + 1, n) - kron(k, mu, n)) for mu, c in diff.items())
        h.append(lam.w()[k] - shift)
    return AffineWeight(tuple(h), -path_energy(eta))


def _require_cyclic(M: MayaTuple) -> int:
    if M.n is None:
        raise DomainError("paths need a cyclic Maya tuple")
    return M.n


def highest_weight_of(M: MayaTuple) -> HighestWeight:
    return HighestWeight(_require_cyclic(M), M.charges)


def path_of_tuple(M: MayaTuple) -> LevelPath:
    lam = highest_weight_of(M)
    n = lam.n
    prefix = tuple(
        tuple(sorted(maya_eval(m, k) % (n + 1) for m in M.entries)) for k in range(M.bound)
    )
    return LevelPath(lam, prefix)


def geometric_weight(M: MayaTuple) -> AffineWeight:
    """(w - C v, -v_0) for the component indexed by M."""
    lam = highest_weight_of(M)
    n = lam.n
    v = dim_vector(segments_of_tuple(M))
    w = lam.w()
    h = tuple(w[k] - sum(cartan(k, l, n) * v[l] for l in range(n + 1)) for k in range(n + 1))
    return AffineWeight(h, -v[0])


def is_lift(M: MayaTuple, eta: LevelPath) -> bool:
    if M.charges != eta.lam.charges:
        raise ValueError("charges of the tuple and the path differ")
    return is_chain(M) and path_of_tuple(M) == eta


def tuple_leq(M: MayaTuple, M2: MayaTuple) -> bool:
    if M.charges != M2.charges:
        raise ValueError("tuples with different charges are not comparable")
    return all(maya_leq(a, b) for a, b in zip(M.entries, M2.entries))


def remove_run(M: MayaTuple, k: int, length: int) -> MayaTuple:
    """Drop the rows (k..k+n, length) and rebuild the tuple greedily."""
    n = _require_cyclic(M)
    f = segments_of_tuple(M).as_counter()
    for i in range(n + 1):
        lo = (k + i) % (n + 1)
        seg = next(s for s in f if s.lo == lo and s.length == length and f[s] > 0)
        f[seg] -= 1
    reduced = canonical_tuple(SegmentMultiset(tuple(f.items()), n), M.charges)
    if reduced is None:
        raise AssertionError(f"removing a run from {M} left no decomposition")
    return reduced


def n_reduce(M: MayaTuple) -> MayaTuple:
    n = _require_cyclic(M)
    while True:
        run = find_full_run(row_multiset(M), n)
        if run is None:
            return M
        M = remove_run(M, *run)


def _max_feasible_step(upper: list[int], step: Step, n: int) -> list[int]:
    """Componentwise largest v <= upper with residues ``step`` and chain order.

    Chain order at one index: v_1 <= ... <= v_l <= v_1 + n + 1.
    """
    low = upper[0] - n
    target = Counter(step)
    best: Optional[list[int]] = None
    feasible = []
    for v in itertools.product(*(range(low, u + 1) for u in upper)):
        if any(v[j] > v[j + 1] for j in range(len(v) - 1)) or v[-1] > v[0] + n + 1:
            continue
        if Counter(x % (n + 1) for x in v) != target:
            continue
        feasible.append(v)
        best = list(v) if best is None else [max(a, b) for a, b in zip(best, v)]
    if best is None or tuple(best) not in feasible:
        raise AssertionError(f"no largest lift step for {step} under {upper}")
    return best


def highest_lift(eta: LevelPath) -> MayaTuple:
    """The unique largest lift of ``eta``, built from the tail downwards.

    At each index the values m_j(k) are taken as large as the residues,
    the chain order and m_j(k) < m_j(k+1) allow; lifts of a fixed path form
    a lattice under componentwise max, so this dominates every lift.
    """
    lam = eta.lam
    n = lam.n
    K = eta.bound
    cols: list[list[int]] = [[] for _ in lam.charges]
    nxt = [K + g for g in lam.charges]
    for k in range(K - 1, -1, -1):
        upper = [min(k + g, x - 1) for g, x in zip(lam.charges, nxt)]
        nxt = _max_feasible_step(upper, eta[k], n)
        for j, x in enumerate(nxt):
            cols[j].append(x)
    entries = []
    for col, g in zip(cols, lam.charges):
        values = col[::-1] + [K + g]
        entries.append(maya_from_values(values, g))
    M = n_reduce(MayaTuple(tuple(entries), n))
    assert is_lift(M, eta), (M, eta)
    return M


def _energy_tables(lam: HighestWeight):
    states = lam.steps()
    period = lam.n + 1
    ground_h = [_ground_h(lam, k) for k in range(1, period + 1)]

    def g_h(k: int) -> int:
        return ground_h[(k - 1) % period]

    def h(a: Step, b: Step) -> int:
        return h_energy(a, b, lam.n)

    return states, g_h, h


def min_energy_with_support(lam: HighestWeight, K: int) -> Optional[int]:
    """Least energy of a path whose last non-ground step is at index K-1."""
    if K == 0:
        return 0
    states, g_h, h = _energy_tables(lam)
    best = {s: 0 for s in states}
    for j in range(1, K):
        best = {s: min(best[t] + j * (h(t, s) - g_h(j)) for t in states) for s in states}
    ground_prev = lam.ground_step(K - 1)
    ground_last = lam.ground_step(K)
    candidates = [
        best[s] + K * (h(s, ground_last) - g_h(K)) for s in states if s != ground_prev
    ]
    return min(candidates) if candidates else None


def path_support_bound(lam: HighestWeight, max_energy: int, patience: int = 2) -> int:
    """Largest K such that some path with support [0, K) has energy <= max_energy.

    K grows until ``patience`` consecutive lengths admit no such path.
    """
    last, misses, K = 0, 0, 1
    while misses < patience:
        m = min_energy_with_support(lam, K)
        if m is not None and m <= max_energy:
            last, misses = K, 0
        else:
            misses += 1
        K += 1
    return last


def enumerate_paths(lam: HighestWeight, max_energy: int, patience: int = 2) -> list[LevelPath]:
    if max_energy < 0:
        raise ValueError("max_energy must be nonnegative")
    K = path_support_bound(lam, max_energy, patience)
    if K == 0:
        return [ground_path(lam)]
    states, g_h, h = _energy_tables(lam)
    ground_last = lam.ground_step(K)
    # suffix[k][s]: least value of the terms k..K given step k-1 equals s
    suffix: dict[int, dict[Step, int]] = {K: {s: K * (h(s, ground_last) - g_h(K)) for s in states}}
    for k in range(K - 1, 0, -1):
        suffix[k] = {
            s: min(k * (h(s, t) - g_h(k)) + suffix[k + 1][t] for t in states) for s in states
        }

    found: dict[LevelPath, int] = {}

    def dfs(prefix: list[Step], partial: int) -> None:
        k = len(prefix)
        if k == K:
            total = partial + K * (h(prefix[-1], ground_last) - g_h(K))
            if total <= max_energy:
                found[LevelPath(lam, tuple(prefix))] = total
            return
        for t in states:
            cost = partial if k == 0 else partial + k * (h(prefix[-1], t) - g_h(k))
            if cost + suffix[k + 1][t] > max_energy:
                continue
            prefix.append(t)
            dfs(prefix, cost)
            prefix.pop()

    dfs([], 0)
    return sorted(found, key=lambda p: (found[p], p.prefix))


def _young_by_zero_count(charge: int, n: int, budget: int) -> Iterator[tuple[YoungDiagram, int]]:
    """Young diagrams whose boxes (at vertex charge + c - i) hit residue 0 at most ``budget`` times."""

    def zeros(lo: int, hi: int) -> int:
        return (hi // (n + 1)) - ((lo - 1) // (n + 1))

    def rec(row: int, cap: int, used: int, parts: list[int]) -> Iterator[tuple[YoungDiagram, int]]:
        yield YoungDiagram(tuple(parts)), used
        start = charge + 1 - row
        for length in range(1, cap + 1):
            z = zeros(start, start + length - 1)
            if used + z > budget:
                break
            parts.append(length)
            yield from rec(row + 1, length, used + z, parts)
            parts.pop()

    # rows of length > (budget + 1) * (n + 1) always exceed the budget
    yield from rec(1, (budget + 1) * (n + 1), 0, [])


def tuple_sort_key(M: MayaTuple):
    return tuple((m.charge, m.shape.parts) for m in M.entries)


def enumerate_components(lam: HighestWeight, max_energy: int, reduced: bool = True) -> list[MayaTuple]:
    """Chain-ordered tuples with v_0 <= max_energy, n-reduced when ``reduced``."""
    n = lam.n
    per_charge = {
        g: list(_young_by_zero_count(g, n, max_energy)) for g in sorted(set(lam.charges))
    }
    out: list[tuple[int, MayaTuple]] = []

    def rec(j: int, used: int, chosen: list[ChargedMaya]) -> None:
        if j == lam.level:
            M = MayaTuple(tuple(chosen), n)
            if is_chain(M) and (not reduced or is_n_reduced_tuple(M)):
                out.append((used, M))
            return
        g = lam.charges[j]
        for Y, z in per_charge[g]:
            if used + z > max_energy:
                continue
            m = ChargedMaya(Y, g)
            if chosen and not maya_leq(chosen[-1], m):
                continue
            chosen.append(m)
            rec(j + 1, used + z, chosen)
            chosen.pop()

    rec(0, 0, [])
    out.sort(key=lambda e: (e[0], tuple_sort_key(e[1])))
    return [M for _, M in out]
