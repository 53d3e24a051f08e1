"""Text and JSON rendering of decompositions and reports.

Text output uses the ASCII direct-sum notation "F_4 (+) M3(F_2)"; JSON
output has a fixed field order and sorted blocks so that re-serializing a
parsed document is byte-identical.
"""

from __future__ import annotations

import json
from typing import Any

from .decompose import Decomposition
from .orbits import classify_case


def field_name(ell: int, d: int) -> str:
    return f"F_{ell**d}"


def block_name(ell: int, n: int, d: int) -> str:
    if n == 1:
        return field_name(ell, d)
    return f"M{n}({field_name(ell, d)})"


def decomposition_text(dec: Decomposition) -> str:
    """One-line direct sum, commutative fields first then matrix blocks."""
    parts = [field_name(dec.ell, d) for d in dec.commutative]
    parts.extend(block_name(dec.ell, b.n, b.d) for b in dec.sorted_blocks())
    return " (+) ".join(parts)


def dimension_identity(dec: Decomposition) -> str:
    terms = [str(d) for d in dec.commutative]
    terms.extend(str(b.dim) for b in dec.sorted_blocks())
    return f"{' + '.join(terms)} = {dec.dimension}"


def decomposition_dict(dec: Decomposition, verified: bool | None = None) -> dict[str, Any]:
    """The canonical JSON document for one decomposition."""
    return {
        "p": dec.p,
        "m": dec.m,
        "ell": dec.ell,
        "r": dec.r,
        "lambda": dec.lam,
        "class_index": dec.class_index,
        "f": dec.f,
        "orbits": [
            {
                "t": o.t,
                "h": o.h,
                "k": o.k,
                "s": o.s,
                "d": o.d,
                "r_mat": o.r_mat,
                "case": classify_case(o, dec.m),
            }
            for o in dec.orbits
        ],
        "commutative": list(dec.commutative),
        "blocks": [{"n": b.n, "d": b.d} for b in dec.sorted_blocks()],
        "dimension": dec.dimension,
        "verified": verified,
    }


def to_json(obj: Any) -> str:
    """Canonical single-line JSON: fixed key order, compact separators."""
    return json.dumps(obj, separators=(",", ":"))
