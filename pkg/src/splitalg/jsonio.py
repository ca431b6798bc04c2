"""JSON envelopes for the workbench's objects.

Every file is one JSON object with a ``kind`` tag; scalars are exact and
travel as fraction strings ("-3/2"), never floats.  Kinds:

graph         vertices count + weighted arcs
algebra       structure constants, optional unit vector and basis labels
operator      a square matrix, columns holding the images of basis vectors
coproduct     sparse legs: c * e_j (x) e_k inside the coproduct of e_i
operations    a named identity family with parameter t and one tensor per
              generating operation
presentation  generators, named composites, and identities — coefficients
              are polynomials in t, stored as coefficient-string lists
report        the outcome of a verification run

Writers sort keys and indent, so files are stable under round-trips and
diff cleanly.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Iterable, Mapping

from .algebra_core import CoalgebraData, FiniteAlgebra
from .exactlin import LinearOperator, Scalar, Tensor3, rat
from .graphalg import WeightedDigraph
from .relations import AxiomSystem, Relation, Term, TPoly
from .report import Report


# ---------------------------------------------------------------------------
# scalars and polynomials
# ---------------------------------------------------------------------------


def scalar_to_json(value: Scalar) -> str:
    return str(rat(value))


def scalar_from_json(text: Any) -> Fraction:
    if isinstance(text, bool) or isinstance(text, float):
        raise ValueError(f"scalars must be exact fraction strings, got {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, str):
        return Fraction(text)
    raise ValueError(f"cannot read a scalar from {text!r}")


def tpoly_to_json(poly: TPoly) -> list[str]:
    return [scalar_to_json(c) for c in poly]


def tpoly_from_json(data: Any) -> TPoly:
    if not isinstance(data, list):
        raise ValueError("a t-polynomial must be a list of coefficient strings")
    return TPoly([scalar_from_json(c) for c in data])


def tensor_to_json(tensor: Tensor3) -> list[list[Any]]:
    return [
        [i, j, k, scalar_to_json(c)] for i, j, k, c in sorted(tensor.nonzeros())
    ]


def tensor_from_json(dim: int, items: Any) -> Tensor3:
    return Tensor3.from_sparse(
        dim, ((i, j, k, scalar_from_json(c)) for i, j, k, c in items)
    )


# ---------------------------------------------------------------------------
# envelopes
# ---------------------------------------------------------------------------


def _expect_kind(data: Mapping[str, Any], kind: str) -> None:
    found = data.get("kind")
    if found != kind:
        raise ValueError(f"expected a {kind!r} envelope, found kind={found!r}")


def graph_to_json(graph: WeightedDigraph) -> dict[str, Any]:
    return {
        "kind": "graph",
        "vertices": graph.vertices,
        "arcs": [
            {"src": arc.src, "dst": arc.dst, "weight": scalar_to_json(arc.weight)}
            for arc in graph.arcs
        ],
    }


def graph_from_json(data: Mapping[str, Any]) -> WeightedDigraph:
    _expect_kind(data, "graph")
    return WeightedDigraph.build(
        data["vertices"],
        [
            (arc["src"], arc["dst"], scalar_from_json(arc.get("weight", "1")))
            for arc in data["arcs"]
        ],
    )


def algebra_to_json(algebra: FiniteAlgebra) -> dict[str, Any]:
    out: dict[str, Any] = {
        "kind": "algebra",
        "dim": algebra.dim,
        "mult": tensor_to_json(algebra.mult),
    }
    if algebra.unit is not None:
        out["unit"] = [scalar_to_json(c) for c in algebra.unit]
    if algebra.labels is not None:
        out["labels"] = list(algebra.labels)
    return out


def algebra_from_json(data: Mapping[str, Any]) -> FiniteAlgebra:
    _expect_kind(data, "algebra")
    dim = data["dim"]
    unit = data.get("unit")
    labels = data.get("labels")
    return FiniteAlgebra(
        tensor_from_json(dim, data["mult"]),
        unit=None if unit is None else tuple(scalar_from_json(c) for c in unit),
        labels=None if labels is None else tuple(labels),
    )


def operator_to_json(op: LinearOperator) -> dict[str, Any]:
    return {
        "kind": "operator",
        "dim": op.dim,
        "matrix": [
            [scalar_to_json(op.matrix.entries[i][j]) for j in range(op.dim)]
            for i in range(op.dim)
        ],
    }


def operator_from_json(data: Mapping[str, Any]) -> LinearOperator:
    _expect_kind(data, "operator")
    rows = [[scalar_from_json(c) for c in row] for row in data["matrix"]]
    if len(rows) != data["dim"] or any(len(row) != data["dim"] for row in rows):
        raise ValueError("operator matrix shape does not match dim")
    return LinearOperator(rows)


def coproduct_to_json(delta: CoalgebraData) -> dict[str, Any]:
    return {
        "kind": "coproduct",
        "dim": delta.dim,
        "items": [[i, j, k, scalar_to_json(c)] for i, j, k, c in delta.items()],
    }


def coproduct_from_json(data: Mapping[str, Any]) -> CoalgebraData:
    _expect_kind(data, "coproduct")
    return CoalgebraData.from_items(
        data["dim"],
        ((i, j, k, scalar_from_json(c)) for i, j, k, c in data["items"]),
    )


def operations_to_json(
    family: str, t: Scalar, ops: Mapping[str, Tensor3]
) -> dict[str, Any]:
    """Envelope for one concrete structure: family name, parameter, tensors."""
    dims = {tensor.dim for tensor in ops.values()}
    if len(dims) != 1:
        raise ValueError("all operation tensors must share one dimension")
    return {
        "kind": "operations",
        "family": family,
        "t": scalar_to_json(t),
        "dim": dims.pop(),
        "ops": {name: tensor_to_json(tensor) for name, tensor in sorted(ops.items())},
    }


def operations_from_json(
    data: Mapping[str, Any],
) -> tuple[str, Fraction, dict[str, Tensor3]]:
    _expect_kind(data, "operations")
    dim = data["dim"]
    ops = {
        name: tensor_from_json(dim, items) for name, items in data["ops"].items()
    }
    return data["family"], scalar_from_json(data["t"]), ops


def system_for_family(family: str) -> AxiomSystem:
    """Identity table for a family name used in an operations envelope."""
    from .operad import builtin_presentations

    presets = builtin_presentations()
    if family not in presets:
        known = ", ".join(sorted(presets))
        raise ValueError(f"unknown family {family!r}; known: {known}")
    return presets[family]


def _terms_to_json(terms: Iterable[Term]) -> list[list[Any]]:
    return [
        [tpoly_to_json(coeff), inner, outer] for coeff, inner, outer in terms
    ]


def _terms_from_json(data: Any) -> tuple[Term, ...]:
    return tuple(
        Term(tpoly_from_json(coeff), inner, outer) for coeff, inner, outer in data
    )


def system_to_json(system: AxiomSystem) -> dict[str, Any]:
    return {
        "kind": "presentation",
        "name": system.name,
        "generators": list(system.generators),
        "composites": {
            name: [[tpoly_to_json(poly), gen] for poly, gen in parts]
            for name, parts in system.composites.items()
        },
        "relations": [
            {
                "name": relation.name,
                "lhs": _terms_to_json(relation.lhs),
                "rhs": _terms_to_json(relation.rhs),
            }
            for relation in system.relations
        ],
    }


def system_from_json(data: Mapping[str, Any]) -> AxiomSystem:
    _expect_kind(data, "presentation")
    return AxiomSystem(
        name=data["name"],
        generators=tuple(data["generators"]),
        composites={
            name: tuple((tpoly_from_json(poly), gen) for poly, gen in parts)
            for name, parts in data.get("composites", {}).items()
        },
        relations=tuple(
            Relation(
                name=rel["name"],
                lhs=_terms_from_json(rel["lhs"]),
                rhs=_terms_from_json(rel["rhs"]),
            )
            for rel in data["relations"]
        ),
    )


def report_to_json(report: Report) -> dict[str, Any]:
    return {
        "kind": "report",
        "title": report.title,
        "passed": report.passed,
        "checks_run": report.checks_run,
        "skipped_undefined": report.skipped_undefined,
        "witnesses": [
            {
                "context": w.context,
                "args": list(w.args),
                "lhs": _json_value(w.lhs),
                "rhs": _json_value(w.rhs),
            }
            for w in report.witnesses
        ],
        "notes": list(report.notes),
    }


def _json_value(value: Any) -> Any:
    """Exact rendering of witness payloads (scalars, vectors, maps)."""
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (tuple, list)):
        return [_json_value(v) for v in value]
    if isinstance(value, dict):
        return {str(k): _json_value(v) for k, v in sorted(value.items())}
    return value


# ---------------------------------------------------------------------------
# files
# ---------------------------------------------------------------------------


def dump_json(data: Mapping[str, Any]) -> str:
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def save(path: str, data: Mapping[str, Any]) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(dump_json(data))


def load(path: str) -> dict[str, Any]:
    with open(path, "r", encoding="utf-8") as handle:
        data = json.load(handle)
    if not isinstance(data, dict) or "kind" not in data:
        raise ValueError(f"{path} does not hold a kind-tagged JSON object")
    return data
