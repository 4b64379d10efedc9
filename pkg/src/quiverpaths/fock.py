"""Level-1 Fock representation of type A_infinity on Young diagrams.

F_k adds the box of content k, E_k removes it, and H_k is diagonal.  All
structure constants are 1, so the coefficients stay integral, but they are
kept as Fractions so that commutators can be formed freely.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Iterable, Iterator, Mapping, Sequence

from .partitions import EMPTY, YoungDiagram


class FockVector:
    """Finitely supported map from Young diagrams to rationals."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[YoungDiagram, object] | Iterable = ()):
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        c: dict[YoungDiagram, Fraction] = {}
        for Y, a in items:
            c[Y] = c.get(Y, Fraction(0)) + Fraction(a)
        self._c = {Y: a for Y, a in c.items() if a != 0}

    @classmethod
    def basis(cls, Y: YoungDiagram = EMPTY) -> "FockVector":
        return cls({Y: 1})

    @classmethod
    def vacuum(cls) -> "FockVector":
        return cls.basis(EMPTY)

    def items(self):
        return sorted(self._c.items(), key=lambda kv: (kv[0].size, kv[0].parts))

    def coeff(self, Y: YoungDiagram) -> Fraction:
        return self._c.get(Y, Fraction(0))

    def support(self) -> set[YoungDiagram]:
        return set(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, int) and other == 0:
            return not self._c
        return isinstance(other, FockVector) and self._c == other._c

    def __hash__(self):
        return hash(frozenset(self._c.items()))

    def __add__(self, other: "FockVector") -> "FockVector":
        return FockVector(list(self._c.items()) + list(other._c.items()))

    def __sub__(self, other: "FockVector") -> "FockVector":
        return self + (-1) * other

    def __rmul__(self, scalar) -> "FockVector":
        s = Fraction(scalar)
        return FockVector({Y: s * a for Y, a in self._c.items()})

    def __neg__(self) -> "FockVector":
        return (-1) * self

    def __repr__(self) -> str:
        if not self._c:
            return "0"
        return " + ".join(f"{a}*{list(Y.parts)}" for Y, a in self.items())


def _linear(action: Callable[[YoungDiagram], Iterable[tuple[YoungDiagram, object]]]):
    def op(v: FockVector) -> FockVector:
        terms = []
        for Y, a in v._c.items():
            for Z, b in action(Y):
                terms.append((Z, a * Fraction(b)))
        return FockVector(terms)

    return op


def content_vector(Y: YoungDiagram) -> dict[int, int]:
    return dict(Y.contents())


def weight_inf(Y: YoungDiagram) -> dict[int, int]:
    """u_k(Y) = delta(k,0) - 2 v_k + v_(k-1) + v_(k+1), zeros dropped."""
    v = content_vector(Y)
    keys = {0} | {k + d for k in v for d in (-1, 0, 1)}
    out = {}
    for k in sorted(keys):
        u = int(k == 0) - 2 * v.get(k, 0) + v.get(k - 1, 0) + v.get(k + 1, 0)
        if u:
            out[k] = u
    return out


def f_op(k: int, v: FockVector) -> FockVector:
    return _linear(lambda Y: [] if (Z := Y.add_box(k)) is None else [(Z, 1)])(v)


def e_op(k: int, v: FockVector) -> FockVector:
    return _linear(lambda Y: [] if (Z := Y.remove_box(k)) is None else [(Z, 1)])(v)


def h_op(k: int, v: FockVector) -> FockVector:
    return _linear(lambda Y: [(Y, weight_inf(Y).get(k, 0))])(v)


OPERATORS = {"F": f_op, "E": e_op, "H": h_op}


def apply_word(word: Sequence[tuple[str, int]], v: FockVector | None = None) -> FockVector:
    """Apply a word of operators; the rightmost letter acts first."""
    v = FockVector.vacuum() if v is None else v
    for name, k in reversed(list(word)):
        v = OPERATORS[name](k, v)
    return v


def parse_word(text: str) -> list[tuple[str, int]]:
    """Parse e.g. "F-1 F1 F0" or "E0,F0" into [(op, k), ...]."""
    word = []
    for tok in text.replace(",", " ").split():
        name, rest = tok[0].upper(), tok[1:]
        if name not in OPERATORS or not rest.lstrip("-").isdigit():
            raise ValueError(f"malformed operator {tok!r}")
        word.append((name, int(rest)))
    if not word:
        raise ValueError("empty operator word")
    return word


def commutator(x: Callable[[FockVector], FockVector], y: Callable[[FockVector], FockVector], v: FockVector) -> FockVector:
    return x(y(v)) - y(x(v))


def cartan_inf(k: int, l: int) -> int:
    return 2 if k == l else (-1 if abs(k - l) == 1 else 0)


def ad_power(k: int, l: int, power: int, v: FockVector, op=e_op) -> FockVector:
    """(ad X_k)^power X_l applied to v, with X = E or F."""
    # (ad X)^p Y = sum_j (-1)^j C(p, j) X^(p-j) Y X^j
    from math import comb

    total = FockVector()
    for j in range(power + 1):
        w = v
        for _ in range(j):
            w = op(k, w)
        w = op(l, w)
        for _ in range(power - j):
            w = op(k, w)
        total = total + ((-1) ** j * comb(power, j)) * w
    return total


def fock_to_json(v: FockVector) -> list[dict]:
    return [
        {"diagram": list(Y.parts), "coeff": f"{a.numerator}/{a.denominator}"}
        for Y, a in v.items()
    ]


def fock_from_json(rows: Iterable[Mapping]) -> FockVector:
    return FockVector([(YoungDiagram(tuple(r["diagram"])), Fraction(r["coeff"])) for r in rows])


def f_generated(depth: int, contents: Iterable[int]) -> Iterator[FockVector]:
    """All F-words of length <= depth applied to the vacuum, nonzero only."""
    contents = list(contents)
    frontier = [FockVector.vacuum()]
    yield frontier[0]
    for _ in range(depth):
        nxt = []
        for v in frontier:
            for k in contents:
                w = f_op(k, v)
                if w:
                    nxt.append(w)
                    yield w
        frontier = nxt
