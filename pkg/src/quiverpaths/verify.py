"""Named property checks with brute-force oracles.

Each check returns a :class:`CheckResult` with the number of cases examined
and, on failure, the first counterexample.  ``faults`` switches on
deliberate corruptions so the suite can demonstrate that it catches them.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable, Iterable, Optional, Sequence

from . import fock, quiverlab
from .multisegments import (
    MayaTuple,
    SegmentMultiset,
    canonical_tuple,
    cyclic_segments,
    is_aperiodic,
    is_chain,
    is_n_reduced_tuple,
    multisegments_upto,
    segments_in_window,
    segments_of_charged_young,
)
from .partitions import (
    AffineWeight,
    ChargedMaya,
    YoungDiagram,
    cartan,
    delta_weight,
    dim_vector_level1,
    energy_level1,
    is_n_reduced,
    kron,
    young_diagrams_upto,
)
from .paths import (
    HighestWeight,
    enumerate_components,
    enumerate_paths,
    geometric_weight,
    highest_lift,
    n_reduce,
    path_energy,
    path_of_tuple,
    path_weight,
    tuple_leq,
)

FAULTS = ("delta-sign", "fock-sign", "skip-reduce")


@dataclass
class CheckResult:
    name: str
    passed: bool
    count: int
    counterexample: Any = None
    notes: list[str] = field(default_factory=list)

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        text = f"{status} {self.name} ({self.count} cases)"
        if self.counterexample is not None:
            text += f": {self.counterexample}"
        return text


class _Tally:
    def __init__(self, name: str):
        self.name = name
        self.count = 0
        self.bad: Any = None
        self.notes: list[str] = []

    def check(self, ok: bool, example: Callable[[], Any]) -> None:
        self.count += 1
        if not ok and self.bad is None:
            self.bad = example()

    def result(self) -> CheckResult:
        return CheckResult(self.name, self.bad is None, self.count, self.bad, self.notes)


def _delta(faults: Iterable[str]) -> Callable[[YoungDiagram, int, int], int]:
    if "delta-sign" not in faults:
        return delta_weight

    def corrupted(Y: YoungDiagram, n: int, k: int) -> int:
        s = len(Y)
        return kron(k, -s, n) - sum(
            kron(k, Y.part(i) - i + 1, n) - kron(k, Y.part(i) - i, n) for i in range(1, s + 1)
        )

    return corrupted


def _reduced_diagrams(n: int, max_size: int) -> list[YoungDiagram]:
    return [Y for Y in young_diagrams_upto(max_size) if is_n_reduced(Y, n)]


def check_energy(ns: Sequence[int] = (1, 2, 3), max_size: int = 16) -> CheckResult:
    t = _Tally("energy_equals_v0")
    for n in ns:
        for Y in _reduced_diagrams(n, max_size):
            w, v0 = energy_level1(Y, n), dim_vector_level1(Y, n)[0]
            t.check(w == v0, lambda: {"n": n, "Y": list(Y.parts), "omega": w, "v0": v0})
    return t.result()


def check_delta(ns: Sequence[int] = (1, 2, 3), max_size: int = 16, faults: Iterable[str] = ()) -> CheckResult:
    t = _Tally("delta_equals_w_minus_cv")
    delta = _delta(faults)
    for n in ns:
        for Y in _reduced_diagrams(n, max_size):
            v = dim_vector_level1(Y, n)
            for k in range(n + 1):
                expected = kron(k, 0, n) - sum(cartan(k, l, n) * v[l] for l in range(n + 1))
                got = delta(Y, n, k)
                t.check(got == expected, lambda: {"n": n, "Y": list(Y.parts), "k": k, "delta": got, "expected": expected})
            t.check(sum(delta(Y, n, k) for k in range(n + 1)) == 1, lambda: {"n": n, "Y": list(Y.parts), "level": "!= 1"})
    return t.result()


def _f(faults: Iterable[str]):
    if "fock-sign" not in faults:
        return fock.f_op
    return lambda k, v: -fock.f_op(k, v) if k == 0 else fock.f_op(k, v)


def check_fock(max_size: int = 10, span: int = 6, faults: Iterable[str] = ()) -> list[CheckResult]:
    comm = _Tally("fock_ef_commutator")
    hcar = _Tally("fock_h_cartan")
    f_op = _f(faults)
    ks = range(-span, span + 1)
    for Y in young_diagrams_upto(max_size):
        v = fock.FockVector.basis(Y)
        for k in ks:
            hk = fock.h_op(k, v)
            for l in ks:
                lhs = fock.e_op(k, f_op(l, v)) - f_op(l, fock.e_op(k, v))
                rhs = hk if k == l else fock.FockVector()
                comm.check(lhs == rhs, lambda: {"Y": list(Y.parts), "k": k, "l": l, "got": repr(lhs)})
                a = fock.cartan_inf(k, l)
                for name, op, sign in (("E", fock.e_op, 1), ("F", f_op, -1)):
                    got = fock.h_op(k, op(l, v)) - op(l, hk)
                    want = (sign * a) * op(l, v)
                    hcar.check(got == want, lambda: {"Y": list(Y.parts), "k": k, "l": l, "op": name})
    return [comm.result(), hcar.result()]


def check_fock_weights(max_size: int = 12) -> CheckResult:
    t = _Tally("fock_weight_injective")
    seen: dict[tuple, YoungDiagram] = {}
    for Y in young_diagrams_upto(max_size):
        key = tuple(sorted(fock.weight_inf(Y).items()))
        t.check(key not in seen, lambda: {"Y": list(Y.parts), "clash": list(seen[key].parts)})
        seen[key] = Y
    return t.result()


def check_classification(ns: Sequence[int] = (1, 2), max_dim: int = 10, window: int = 2) -> list[CheckResult]:
    """Single-charge greedy success versus membership in {A_Y}.

    Cyclic mode is exhaustive over all multisets of total dimension
    ``max_dim``; A_infinity is exhaustive over segments inside
    [-window, window] and over every A_Y with |Y| <= max_dim.
    """
    out = []
    t = _Tally("level1_classification_inf")
    diagrams = list(young_diagrams_upto(max_dim))
    a_sets = {segments_of_charged_young(Y, 0): Y for Y in diagrams}
    for f, Y in a_sets.items():
        M = canonical_tuple(f, (0,))
        t.check(M is not None and M[0].shape == Y, lambda: {"Y": list(Y.parts), "got": repr(M)})
    for f in multisegments_upto(segments_in_window(-window, window), max_dim):
        M = canonical_tuple(f, (0,))
        t.check((M is not None) == (f in a_sets), lambda: {"f": repr(f.mult), "greedy": repr(M)})
    out.append(t.result())

    for n in ns:
        t = _Tally(f"level1_classification_n{n}")
        cyc = {segments_of_charged_young(Y, 0, n): Y for Y in diagrams}
        for f in multisegments_upto(cyclic_segments(n, max_dim), max_dim, n):
            M = canonical_tuple(f, (0,))
            Y = cyc.get(f)
            ok_gl = (M is not None) == (Y is not None) and (M is None or M[0].shape == Y)
            sl = M is not None and is_n_reduced(M[0].shape, n)
            ok_sl = sl == (Y is not None and is_n_reduced(Y, n))
            t.check(ok_gl and ok_sl, lambda: {"n": n, "f": repr(f.mult), "greedy": repr(M)})
            if Y is not None:
                t.check(is_aperiodic(f) == is_n_reduced(Y, n), lambda: {"n": n, "Y": list(Y.parts)})
        out.append(t.result())
    return out


def chain_tuples(lam: HighestWeight, max_size: int) -> list[MayaTuple]:
    """Every chain-ordered tuple of total size <= max_size (oracle)."""
    ys = list(young_diagrams_upto(max_size))
    out = []
    for combo in itertools.product(ys, repeat=lam.level):
        if sum(Y.size for Y in combo) > max_size:
            continue
        M = MayaTuple(tuple(ChargedMaya(Y, g) for Y, g in zip(combo, lam.charges)), lam.n)
        if is_chain(M):
            out.append(M)
    return out


def check_lifts(n: int, charges: Sequence[int], max_energy: int, max_size: int = 12, faults: Iterable[str] = ()) -> CheckResult:
    lam = HighestWeight(n, tuple(charges))
    t = _Tally(f"lift_calculus_{'_'.join(map(str, charges))}_n{n}")
    lifts: dict = {}
    for M in chain_tuples(lam, max_size):
        lifts.setdefault(path_of_tuple(M), []).append(M)
    reduce_ = (lambda M: M) if "skip-reduce" in faults else n_reduce
    for eta in enumerate_paths(lam, max_energy):
        found = lifts.get(eta, [])
        t.check(bool(found), lambda: {"path": repr(eta), "problem": "no lift within size bound"})
        if not found:
            continue
        top = [M for M in found if all(tuple_leq(M2, M) for M2 in found)]
        H = highest_lift(eta)
        t.check(len(top) == 1, lambda: {"path": repr(eta), "maxima": [repr(M) for M in top]})
        t.check(top[:1] == [H], lambda: {"path": repr(eta), "brute": repr(top), "highest_lift": repr(H)})
        t.check(is_chain(H) and is_n_reduced_tuple(H), lambda: {"path": repr(eta), "highest_lift": repr(H)})
        for M in found:
            R = reduce_(M)
            t.check(
                path_of_tuple(R) == eta and tuple_leq(M, R) and is_n_reduced_tuple(R),
                lambda: {"lift": repr(M), "reduced": repr(R)},
            )
    return t.result()


def check_isomorphism(n: int, charges: Sequence[int], max_energy: int) -> CheckResult:
    lam = HighestWeight(n, tuple(charges))
    t = _Tally(f"weight_isomorphism_{'_'.join(map(str, charges))}_n{n}")
    paths = enumerate_paths(lam, max_energy)
    comps = enumerate_components(lam, max_energy, reduced=True)
    by_path = Counter(path_weight(p) for p in paths)
    by_tuple = Counter(geometric_weight(M) for M in comps)
    t.check(by_path == by_tuple, lambda: {"paths_only": repr(by_path - by_tuple), "tuples_only": repr(by_tuple - by_path)})
    t.check(
        sorted(map(repr, paths)) == sorted(repr(path_of_tuple(M)) for M in comps),
        lambda: {"problem": "path_of_tuple is not a bijection"},
    )
    for eta in paths:
        H = highest_lift(eta)
        pw, gw = path_weight(eta), geometric_weight(H)
        t.check(pw == gw, lambda: {"path": repr(eta), "path_weight": str(pw), "geometric": str(gw)})
        t.check(path_energy(eta) >= 0, lambda: {"path": repr(eta), "energy": path_energy(eta)})
    return t.result()


def check_gl(n: int, charges: Sequence[int], max_energy: int, max_size: int = 14) -> CheckResult:
    """Unreduced enumeration against every chain tuple up to a size bound.

    The bound is accepted only if the two largest sizes contribute no tuple
    within the energy budget.
    """
    lam = HighestWeight(n, tuple(charges))
    t = _Tally(f"gl_enumeration_{'_'.join(map(str, charges))}_n{n}")
    brute = [M for M in chain_tuples(lam, max_size) if -geometric_weight(M).deg <= max_energy]
    sizes = {M.size for M in brute}
    t.check(not sizes & {max_size, max_size - 1}, lambda: {"problem": "size bound not saturated", "sizes": sorted(sizes)})
    listed = enumerate_components(lam, max_energy, reduced=False)
    got = Counter(geometric_weight(M) for M in listed)
    want = Counter(geometric_weight(M) for M in brute)
    for w in sorted(set(got) | set(want)):
        t.check(got[w] == want[w], lambda: {"weight": str(w), "enumerated": got[w], "brute": want[w]})
    t.check(len(set(listed)) == len(listed), lambda: {"problem": "duplicates"})
    return t.result()


@lru_cache(maxsize=None)
def conormal_samples(f: SegmentMultiset, seeds: tuple[int, ...], window: Optional[tuple[int, int]] = None):
    fiber = quiverlab.ConormalFiber(quiverlab.build_rep(f, window))
    return fiber, tuple(fiber.sample(s) for s in seeds)


def _quiver_families(max_dim: int, ns: Sequence[int], window: int):
    for n in ns:
        yield n, list(multisegments_upto(cyclic_segments(n, max_dim), max_dim, n))
    if window is not None:
        yield None, list(multisegments_upto(segments_in_window(-window, window), max_dim))


def check_moment_map(max_dim: int = 7, ns: Sequence[int] = (1, 2), window: int = 2, seeds: int = 20) -> list[CheckResult]:
    psi = _Tally("moment_map_vanishes")
    nil = _Tally("nilpotent_iff_aperiodic")
    rank = _Tally("conormal_rank_nullity")
    seed_list = tuple(range(seeds))
    for n, family in _quiver_families(max_dim, ns, window):
        for f in family:
            fiber, xs = conormal_samples(f, seed_list, (-1, 1) if n is None else None)
            rank.check(
                fiber.dim == len(fiber.coords) - quiverlab.orbit_tangent_dim(fiber.base),
                lambda: {"f": repr(f.mult), "n": n},
            )
            for seed, x in zip(seed_list, xs):
                psi.check(quiverlab.moment_map_vanishes(x), lambda: {"f": repr(f.mult), "n": n, "seed": seed})
            if n is None:
                continue
            flags = [quiverlab.is_nilpotent(x, x.total_dim + 1) for x in xs]
            ap = is_aperiodic(f)
            # aperiodic: every sample nilpotent; periodic: some sample is not
            nil.check(all(flags) if ap else not all(flags), lambda: {"f": repr(f.mult), "n": n, "aperiodic": ap, "nilpotent_samples": sum(flags)})
    return [psi.result(), nil.result(), rank.result()]


def _charge_sets(n: Optional[int], levels: Sequence[int], span: int = 1) -> list[tuple[int, ...]]:
    pool = range(-span, span + 1) if n is None else range(n + 1)
    out = []
    for l in levels:
        for cs in itertools.combinations_with_replacement(pool, l):
            if n is None or cs[-1] - cs[0] <= n:
                out.append(cs)
    return out


def check_stability(
    max_dim: int = 7,
    ns: Sequence[int] = (1,),
    window: int = 2,
    seeds: int = 20,
    levels: Sequence[int] = (1, 2),
) -> list[CheckResult]:
    results = []
    seed_list = tuple(range(seeds))
    for n, family in _quiver_families(max_dim, ns, window):
        modes = (True,) if n is None else (True, False)
        charge_sets = _charge_sets(n, levels)
        win = (-1, 1) if n is None else None
        for gl in modes:
            label = "inf" if n is None else f"n{n}_{'gl' if gl else 'sl'}"
            t = _Tally(f"stability_consistency_{label}")
            split = 0
            for f in family:
                _, xs = conormal_samples(f, seed_list, win)
                nil = [None] * len(xs)
                if not gl:
                    nil = [quiverlab.is_nilpotent(x, x.total_dim + 1) for x in xs]
                for cs in charge_sets:
                    w = quiverlab.framing(cs, n)
                    votes = sum(quiverlab.sampled_component(x, w, gl, z) for x, z in zip(xs, nil))
                    vote = quiverlab.StabilityVote(quiverlab.predicted_component(f, cs, gl), votes, len(xs))
                    split += 0 < votes < len(xs)
                    t.check(vote.agrees and not vote.unanimous_disagreement, lambda: {"f": repr(f.mult), "charges": cs, "predicted": vote.predicted, "votes": votes})
            t.notes.append(f"{split} (multiset, charges) pairs had non-unanimous samples")
            results.append(t.result())
    return results


GROUPS = ("energy", "delta", "fock", "classification", "lifts", "isomorphism", "gl", "moment", "stability")


def run_all(bounds: Optional[dict] = None, faults: Iterable[str] = (), only: Optional[Iterable[str]] = None) -> list[CheckResult]:
    """Default verification suite; ``bounds`` may shrink or enlarge it."""
    b = {"max_size": 12, "fock_size": 8, "max_dim": 8, "max_energy": 3, "quiver_dim": 5, "seeds": 10}
    b.update(bounds or {})
    faults = tuple(faults)
    groups = set(GROUPS if only is None else only)
    unknown = groups - set(GROUPS)
    if unknown:
        raise ValueError(f"unknown check groups: {sorted(unknown)}")
    out: list[CheckResult] = []
    if "energy" in groups:
        out.append(check_energy(max_size=b["max_size"]))
    if "delta" in groups:
        out.append(check_delta(max_size=b["max_size"], faults=faults))
    if "fock" in groups:
        out += check_fock(max_size=b["fock_size"], faults=faults)
        out.append(check_fock_weights(max_size=b["max_size"]))
    if "classification" in groups:
        out += check_classification(max_dim=b["max_dim"])
    for charges in ((0, 0), (0, 1)):
        if "lifts" in groups:
            out.append(check_lifts(1, charges, b["max_energy"], faults=faults))
        if "isomorphism" in groups:
            out.append(check_isomorphism(1, charges, b["max_energy"]))
    if "gl" in groups:
        out.append(check_gl(1, (0,), b["max_energy"]))
    if "moment" in groups:
        out += check_moment_map(max_dim=b["quiver_dim"], seeds=b["seeds"])
    if "stability" in groups:
        out += check_stability(max_dim=b["quiver_dim"], seeds=b["seeds"])
    return out
