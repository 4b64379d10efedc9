"""JSON encodings shared by the library and the command line."""

from __future__ import annotations

from typing import Any, Mapping, Optional, Sequence

from .multisegments import MayaTuple, Segment, SegmentMultiset
from .partitions import AffineWeight, BasicPath, ChargedMaya, YoungDiagram
from .paths import HighestWeight, LevelPath


def young_to_json(Y: YoungDiagram) -> list[int]:
    return list(Y.parts)


def young_from_json(data: Sequence[int]) -> YoungDiagram:
    return YoungDiagram(tuple(data))


def maya_to_json(m: ChargedMaya) -> dict:
    return {"parts": list(m.shape.parts), "charge": m.charge}


def maya_from_json(data: Mapping) -> ChargedMaya:
    return ChargedMaya(YoungDiagram(tuple(data["parts"])), int(data["charge"]))


def basic_path_to_json(p: BasicPath) -> dict:
    return {"n": p.n, "prefix": list(p.prefix)}


def multiset_to_json(f: SegmentMultiset) -> dict:
    return {
        "mode": f.mode,
        "n": f.n,
        "segments": [{"lo": s.lo, "hi": s.hi, "mult": k} for s, k in f.mult],
    }


def multiset_from_json(data: Mapping) -> SegmentMultiset:
    n = data.get("n")
    if data.get("mode", "inf" if n is None else "cyclic") == "inf":
        n = None
    elif n is None:
        raise ValueError("cyclic multiset needs n")
    return SegmentMultiset(
        tuple((Segment(int(r["lo"]), int(r["hi"])), int(r.get("mult", 1))) for r in data["segments"]),
        n,
    )


def tuple_to_json(M: MayaTuple) -> list[dict]:
    return [maya_to_json(m) for m in M.entries]


def tuple_from_json(data: Sequence[Mapping], n: Optional[int]) -> MayaTuple:
    return MayaTuple(tuple(maya_from_json(d) for d in data), n)


def path_to_json(eta: LevelPath) -> dict:
    return {"n": eta.n, "charges": list(eta.lam.charges), "prefix": [list(s) for s in eta.prefix]}


def path_from_json(data: Mapping) -> LevelPath:
    lam = HighestWeight(int(data["n"]), tuple(data["charges"]))
    return LevelPath(lam, tuple(tuple(s) for s in data.get("prefix", [])))


def weight_to_json(w: AffineWeight) -> dict:
    return {"h": list(w.h), "deg": w.deg}


def weight_from_json(data: Mapping) -> AffineWeight:
    return AffineWeight(tuple(data["h"]), int(data["deg"]))


def tuple_text(M: MayaTuple) -> str:
    """Compact TSV rendering: parts|charge joined by ';'."""
    return ";".join(",".join(map(str, m.shape.parts)) + "|" + str(m.charge) for m in M.entries)


def path_text(eta: LevelPath) -> str:
    return ";".join("".join(map(str, s)) for s in eta.prefix)


def normalize(obj: Any) -> Any:
    """Sort dictionary keys recursively so serialisation is canonical."""
    if isinstance(obj, Mapping):
        return {str(k): normalize(obj[k]) for k in sorted(obj, key=str)}
    if isinstance(obj, (list, tuple)):
        return [normalize(x) for x in obj]
    return obj
