"""Explicit representations of the doubled cyclic or linear quiver.

Everything is exact: matrices are nested lists of Fractions and all ranks,
kernels and null spaces come from :mod:`quiverpaths.linalg`.

Edges are named by orientation and source vertex.  ``("a", i)`` is the
arrow i -> i-1 of the orientation Omega, ``("b", i)`` is the reversed
arrow i -> i+1.  ``eps`` is +1 on Omega and -1 on its reverse.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Sequence

from . import linalg
from .linalg import Matrix
from .multisegments import SegmentMultiset, canonical_tuple, is_aperiodic
from .partitions import residue

Edge = tuple[str, int]


@dataclass
class QuiverRep:
    """Graded space with one matrix per edge of the doubled quiver.

    ``n is None`` means type A_infinity restricted to the finite window of
    vertices listed in ``dims``; edges leaving the window are absent.
    """

    n: Optional[int]
    dims: dict[int, int]
    maps: dict[Edge, Matrix] = field(default_factory=dict)

    def __post_init__(self):
        self.dims = dict(sorted(self.dims.items()))
        for h in self.edges():
            rows, cols = self.dims[self.inc(h)], self.dims[self.out(h)]
            m = self.maps.get(h)
            if m is None:
                self.maps[h] = linalg.zeros(rows, cols)
            elif len(m) != rows or any(len(r) != cols for r in m):
                raise ValueError(f"edge {h}: expected {rows}x{cols} matrix")
        extra = set(self.maps) - set(self.edges())
        if extra:
            raise ValueError(f"maps on unknown edges: {sorted(extra)}")

    @property
    def vertices(self) -> list[int]:
        return list(self.dims)

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def vertex(self, k: int) -> int:
        return residue(k, self.n)

    def out(self, h: Edge) -> int:
        return h[1]

    def inc(self, h: Edge) -> int:
        kind, i = h
        return self.vertex(i - 1 if kind == "a" else i + 1)

    def edges(self, kind: Optional[str] = None) -> list[Edge]:
        out = []
        for i in self.dims:
            for k, step in (("a", -1), ("b", 1)):
                if kind not in (None, k):
                    continue
                if self.n is not None or i + step in self.dims:
                    out.append((k, i))
        return out

    @staticmethod
    def bar(h: Edge) -> Edge:
        kind, i = h
        return ("b", i - 1) if kind == "a" else ("a", i + 1)

    def bar_in(self, h: Edge) -> Edge:
        kind, i = self.bar(h)
        return kind, self.vertex(i)

    @staticmethod
    def eps(h: Edge) -> int:
        return 1 if h[0] == "a" else -1

    def omega_part(self) -> "QuiverRep":
        return QuiverRep(self.n, self.dims, {h: m for h, m in self.maps.items() if h[0] == "a"})

    def coordinates(self, kind: str) -> list[tuple[Edge, int, int]]:
        """Matrix entries of all edges of one orientation, in a fixed order."""
        return [
            (h, r, c)
            for h in self.edges(kind)
            for r in range(self.dims[self.inc(h)])
            for c in range(self.dims[self.out(h)])
        ]


def framing(charges: Sequence[int], n: Optional[int]) -> dict[int, int]:
    """w_i = number of charges sitting at vertex i."""
    w: dict[int, int] = {}
    for g in charges:
        w[residue(g, n)] = w.get(residue(g, n), 0) + 1
    return w


def build_rep(f: SegmentMultiset, window: Optional[tuple[int, int]] = None) -> QuiverRep:
    """Direct sum of string representations, one per segment copy.

    In A_infinity mode the vertex window defaults to the segment support
    widened by one on each side; ``window`` may enlarge it.
    """
    n = f.n
    segs = list(f)
    if n is None:
        lo = min((s.lo for s in segs), default=0) - 1
        hi = max((s.hi for s in segs), default=0) + 1
        if window is not None:
            lo, hi = min(lo, window[0]), max(hi, window[1])
        dims = {v: 0 for v in range(lo, hi + 1)}
    else:
        dims = {v: 0 for v in range(n + 1)}

    index: dict[tuple[int, int], int] = {}
    for c, seg in enumerate(segs):
        for r in seg.vertices():
            v = residue(r, n)
            index[(c, r)] = dims[v]
            dims[v] += 1

    x = QuiverRep(n, dims)
    for c, seg in enumerate(segs):
        for r in range(seg.lo + 1, seg.hi + 1):
            h = ("a", residue(r, n))
            x.maps[h][index[(c, r - 1)]][index[(c, r)]] = Fraction(1)
    return x


def moment_map(x: QuiverRep) -> dict[int, Matrix]:
    """psi_i = sum over edges h into i of eps(h) x_h x_hbar."""
    psi = {i: linalg.zeros(d, d) for i, d in x.dims.items()}
    for h in x.edges():
        hb = x.bar_in(h)
        if hb not in x.maps:
            continue
        i = x.inc(h)
        prod = linalg.matmul(x.maps[h], x.maps[hb], x.dims[x.out(h)], x.dims[i])
        psi[i] = linalg.add(psi[i], prod, x.eps(h))
    return psi


def moment_map_vanishes(x: QuiverRep) -> bool:
    return all(linalg.is_zero(m) for m in moment_map(x).values())


def lie_action(a: Mapping[int, Matrix], x: QuiverRep) -> dict[Edge, Matrix]:
    """Infinitesimal action of a in gl_V: (a.x)_h = a_inc x_h - x_h a_out."""
    out = {}
    for h, m in x.maps.items():
        i, o = x.inc(h), x.out(h)
        left = linalg.matmul(a[i], m, x.dims[i], x.dims[o])
        right = linalg.matmul(m, a[o], x.dims[o], x.dims[o])
        out[h] = linalg.add(left, right, -1)
    return out


def symplectic_form(x: Mapping[Edge, Matrix], y: Mapping[Edge, Matrix], rep: QuiverRep) -> Fraction:
    """<x, y> = sum_h eps(h) tr(x_h y_hbar)."""
    total = Fraction(0)
    for h in rep.edges():
        hb = rep.bar_in(h)
        if hb not in y:
            continue
        xm, ym = x[h], y[hb]
        for r in range(len(xm)):
            for k in range(len(ym)):
                total += rep.eps(h) * xm[r][k] * ym[k][r]
    return total


def _unit_pairing(t: Mapping[Edge, Matrix], rep: QuiverRep, coord: tuple[Edge, int, int]) -> Fraction:
    # <t, E> for E the matrix unit at (r, c) on edge e; only h = bar(e) survives
    e, r, c = coord
    h = rep.bar_in(e)
    return rep.eps(h) * t[h][c][r]


def gl_basis(rep: QuiverRep) -> Iterator[dict[int, Matrix]]:
    """Matrix units of gl_V, one vertex at a time."""
    for i, d in rep.dims.items():
        for p in range(d):
            for q in range(d):
                a = {j: linalg.zeros(e, e) for j, e in rep.dims.items()}
                a[i][p][q] = Fraction(1)
                yield a


def unit_action(x: QuiverRep, i: int, p: int, q: int) -> dict[Edge, Matrix]:
    """lie_action of the matrix unit E_pq at vertex i, built directly.

    E_pq x_h copies row q of x_h into row p; x_h E_pq copies column p of
    x_h into column q.
    """
    out = {}
    for h, m in x.maps.items():
        t = linalg.zeros(len(m), x.dims[x.out(h)])
        if x.inc(h) == i:
            t[p] = list(m[q])
        if x.out(h) == i:
            for r in range(len(m)):
                if m[r][p]:
                    t[r][q] -= m[r][p]
        out[h] = t
    return out


def orbit_tangent(x: QuiverRep) -> list[dict[Edge, Matrix]]:
    """[a, x] for a running over the matrix units of gl_V."""
    return [unit_action(x, i, p, q) for i, d in x.dims.items() for p in range(d) for q in range(d)]


def _flatten(t: Mapping[Edge, Matrix], coords: Sequence[tuple[Edge, int, int]]) -> list[Fraction]:
    return [t[h][r][c] for h, r, c in coords]


def orbit_tangent_dim(x: QuiverRep) -> int:
    coords = x.coordinates("a")
    rows = [_flatten(t, coords) for t in orbit_tangent(x)]
    return linalg.rank(rows, len(coords))


class ConormalFiber:
    """Conormal directions x'' at a point x' of E_Omega.

    The fiber is the null space of the linear forms x'' -> <[a, x'], x''>
    with a running over matrix units of gl_V.
    """

    def __init__(self, x_omega: QuiverRep):
        if any(not linalg.is_zero(m) for h, m in x_omega.maps.items() if h[0] == "b"):
            raise ValueError("conormal fiber needs a point with zero reverse part")
        self.base = x_omega
        self.coords = x_omega.coordinates("b")
        self.constraints = [
            [_unit_pairing(t, x_omega, c) for c in self.coords] for t in orbit_tangent(x_omega)
        ]
        self.basis = linalg.nullspace(self.constraints, len(self.coords))

    @property
    def dim(self) -> int:
        return len(self.basis)

    def point(self, coeffs: Sequence[Fraction]) -> QuiverRep:
        x = self.base
        maps = {h: [list(r) for r in m] for h, m in x.maps.items()}
        for k, (h, r, c) in enumerate(self.coords):
            maps[h][r][c] = sum((a * v[k] for a, v in zip(coeffs, self.basis)), Fraction(0))
        return QuiverRep(x.n, x.dims, maps)

    def sample(self, seed: int, spread: int = 50) -> QuiverRep:
        rng = random.Random(seed)
        coeffs = [Fraction(rng.randint(-spread, spread), rng.randint(1, 5)) for _ in self.basis]
        return self.point(coeffs)


def conormal_sample(x_omega: QuiverRep, seed: int) -> QuiverRep:
    return ConormalFiber(x_omega).sample(seed)


def image_chain(x: QuiverRep, steps: int) -> dict[int, Matrix]:
    """Row bases of S_steps, where S_0 = V and S_{k+1} = sum_h x_h(S_k)."""
    span = {i: linalg.identity(d) for i, d in x.dims.items()}
    for _ in range(steps):
        new: dict[int, Matrix] = {i: [] for i in x.dims}
        for h, m in x.maps.items():
            i, o = x.inc(h), x.out(h)
            for vec in span[o]:
                new[i].append([sum((a * v for a, v in zip(row, vec) if a and v), Fraction(0)) for row in m])
        span = {}
        for i, rows in new.items():
            R, piv = linalg.rref(rows, x.dims[i])
            span[i] = R[: len(piv)]
        if all(not rows for rows in span.values()):
            break
    return span


def is_nilpotent(x: QuiverRep, N: int) -> bool:
    """True iff every composable product of N edge maps vanishes.

    Tracks the span of all length-k images rather than powers of the total
    matrix, whose entries can cancel between different paths.
    """
    if N < 1:
        raise ValueError("N must be at least 1")
    return all(not rows for rows in image_chain(x, N).values())


def kernel_excess(x: QuiverRep, w: Mapping[int, int]) -> dict[int, int]:
    """dim(ker x_(a,i) cap ker x_(b,i)) - w_i at every vertex."""
    out = {}
    for i, d in x.dims.items():
        rows = []
        for h in (("a", i), ("b", i)):
            if h in x.maps:
                rows.extend(x.maps[h])
        out[i] = d - linalg.rank(rows, d) - w.get(i, 0)
    return out


def stability_test(x: QuiverRep, w: Mapping[int, int]) -> bool:
    return all(e <= 0 for e in kernel_excess(x, w).values())


@dataclass
class StabilityVote:
    """Outcome of sampled stability for one multisegment and one framing."""

    predicted: bool
    votes: int
    seeds: int

    @property
    def majority(self) -> bool:
        return 2 * self.votes > self.seeds

    @property
    def agrees(self) -> bool:
        return self.majority == self.predicted

    @property
    def unanimous_disagreement(self) -> bool:
        return self.votes == (0 if self.predicted else self.seeds)


def predicted_component(f: SegmentMultiset, charges: Sequence[int], gl: bool = True) -> bool:
    """Combinatorial side: greedy success, plus aperiodicity unless gl."""
    if canonical_tuple(f, sorted(charges)) is None:
        return False
    return gl or f.n is None or is_aperiodic(f)


def sampled_component(x: QuiverRep, w: Mapping[int, int], gl: bool = True, nilpotent: Optional[bool] = None) -> bool:
    """Geometric side at one sample: stability, plus nilpotency unless gl."""
    if not stability_test(x, w):
        return False
    if gl or x.n is None:
        return True
    return is_nilpotent(x, x.total_dim + 1) if nilpotent is None else nilpotent


def stability_votes(
    f: SegmentMultiset,
    charge_sets: Iterable[Sequence[int]],
    seeds: Iterable[int],
    gl: bool = True,
) -> dict[tuple[int, ...], StabilityVote]:
    charge_sets = [tuple(sorted(c)) for c in charge_sets]
    window = None
    if f.n is None:
        flat = [g for cs in charge_sets for g in cs]
        window = (min(flat, default=0), max(flat, default=0))
    fiber = ConormalFiber(build_rep(f, window))
    samples = [fiber.sample(s) for s in seeds]
    nil = [None] * len(samples)
    if not gl and f.n is not None:
        nil = [is_nilpotent(x, x.total_dim + 1) for x in samples]
    out = {}
    for cs in charge_sets:
        w = framing(cs, f.n)
        votes = sum(sampled_component(x, w, gl, nz) for x, nz in zip(samples, nil))
        out[cs] = StabilityVote(predicted_component(f, cs, gl), votes, len(samples))
    return out


def rep_to_json(x: QuiverRep) -> dict:
    return {
        "n": x.n,
        "dims": {str(i): d for i, d in x.dims.items()},
        "maps": [
            {"edge": h[0], "source": h[1], "matrix": linalg.to_strings(m)}
            for h, m in sorted(x.maps.items())
        ],
    }


def rep_from_json(data: Mapping) -> QuiverRep:
    dims = {int(k): int(v) for k, v in data["dims"].items()}
    maps = {(e["edge"], int(e["source"])): linalg.from_strings(e["matrix"]) for e in data["maps"]}
    return QuiverRep(data["n"], dims, maps)
