"""Instance files: the JSON surface of the package.

Every scalar is a string in the exact grammar ("1/2-3*i" for Q(i),
"a + 2*i*pi" for period values); nothing in an instance file is ever a
float. The ground mode is implied by the kind: "derham" instances are
real-complexified, "dolbeault" instances are complex.

Structural problems raise InstanceParseError (CLI exit code 2);
mathematical violations are reported by validate_instance (exit code 1).
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path
from typing import Optional

from .cecomplex import Weight
from .errors import InstanceParseError, ValidationFailure
from .liealg import (
    MODE_COMPLEX,
    MODE_REAL,
    LieAlgebraData,
    RepresentationData,
    ValidationIssue,
    ValidationReport,
    adjoint_representation,
    trivial_representation,
    validate_algebra,
    validate_representation,
)
from .lattice import LatticeData, validate_lattice
from .linalg import ExactMatrix
from .periods import (
    PeriodBasisSymbol,
    SymbolTable,
    format_period,
    parse_period,
)
from .scalars import ZERO, GaussianRational, format_gaussian, parse_gaussian
from .weights import WeightAssignment, infer_weights, validate_weight_assignment

KIND_DERHAM = "derham"
KIND_DOLBEAULT = "dolbeault"


@dataclass(frozen=True)
class RepresentationSpec:
    kind: str  # "trivial" | "adjoint" | "explicit"
    m: int = 1
    matrices: tuple[ExactMatrix, ...] = ()
    weights: Optional[tuple[Weight, ...]] = None


@dataclass(frozen=True)
class WeightsSpec:
    infer: bool
    algebra: Optional[tuple[Weight, ...]] = None
    representation: Optional[tuple[Weight, ...]] = None


@dataclass(frozen=True)
class InstanceFile:
    name: str
    kind: str
    algebra: LieAlgebraData
    representation: RepresentationSpec
    weights: WeightsSpec
    lattice: LatticeData


def _expect(mapping, key, context):
    if not isinstance(mapping, dict) or key not in mapping:
        raise InstanceParseError(f"missing {key!r} in {context}")
    return mapping[key]


def _name_index(basis: tuple[str, ...], name, context) -> int:
    if name not in basis:
        raise InstanceParseError(f"unknown basis name {name!r} in {context}")
    return basis.index(name)


def _parse_weight(
    data, complement: tuple[int, ...], basis: tuple[str, ...], context
) -> Weight:
    if not isinstance(data, dict):
        raise InstanceParseError(f"weight covector in {context} must be an object")
    coords = [ZERO] * len(complement)
    by_name = {basis[j]: pos for pos, j in enumerate(complement)}
    for name, text in data.items():
        if name not in by_name:
            raise InstanceParseError(
                f"{name!r} is not a complement coordinate in {context}"
            )
        coords[by_name[name]] = parse_gaussian(str(text))
    return tuple(coords)


def parse_instance(data: dict) -> InstanceFile:
    if not isinstance(data, dict):
        raise InstanceParseError("instance file must be a JSON object")
    kind = _expect(data, "kind", "instance")
    if kind not in (KIND_DERHAM, KIND_DOLBEAULT):
        raise InstanceParseError(f"unknown kind {kind!r}")
    name = str(data.get("name", ""))

    alg = _expect(data, "algebra", "instance")
    dim = _expect(alg, "dim", "algebra")
    basis = tuple(str(b) for b in _expect(alg, "basis", "algebra"))
    if not isinstance(dim, int) or len(basis) != dim:
        raise InstanceParseError("algebra dim and basis list disagree")
    brackets = []
    for entry in alg.get("brackets", ()):
        if not isinstance(entry, (list, tuple)) or len(entry) != 4:
            raise InstanceParseError(f"bad bracket entry {entry!r}")
        i = _name_index(basis, entry[0], "brackets")
        j = _name_index(basis, entry[1], "brackets")
        k = _name_index(basis, entry[2], "brackets")
        brackets.append((i, j, k, parse_gaussian(str(entry[3]))))
    nilradical = [
        _name_index(basis, b, "nilradical") for b in _expect(alg, "nilradical", "algebra")
    ]
    complement = [
        _name_index(basis, b, "complement") for b in _expect(alg, "complement", "algebra")
    ]
    conjugation = None
    if "conjugation" in alg:
        raw = alg["conjugation"]
        if not isinstance(raw, dict):
            raise InstanceParseError("conjugation must be an object")
        sigma: dict[int, int] = {}
        for a, b in raw.items():
            ia = _name_index(basis, a, "conjugation")
            ib = _name_index(basis, b, "conjugation")
            for x, y in ((ia, ib), (ib, ia)):
                if sigma.setdefault(x, y) != y:
                    raise InstanceParseError(
                        f"conjugation maps {basis[x]} inconsistently"
                    )
        for i in range(dim):
            sigma.setdefault(i, i)
        conjugation = sigma
    mode = MODE_REAL if kind == KIND_DERHAM else MODE_COMPLEX
    try:
        algebra = LieAlgebraData(
            dim, basis, brackets, nilradical, complement, conjugation, mode
        )
    except ValidationFailure as exc:
        raise InstanceParseError(str(exc)) from exc

    rep_spec = _parse_representation(
        data.get("representation", {"trivial": True}), algebra
    )
    weights_spec = _parse_weights(data.get("weights", {"infer": True}), algebra)
    lattice = _parse_lattice(_expect(data, "lattice", "instance"), algebra)
    return InstanceFile(name, kind, algebra, rep_spec, weights_spec, lattice)


def _parse_representation(data, g: LieAlgebraData) -> RepresentationSpec:
    if not isinstance(data, dict):
        raise InstanceParseError("representation block must be an object")
    if data.get("trivial"):
        return RepresentationSpec("trivial")
    if data.get("adjoint"):
        return RepresentationSpec("adjoint", m=g.dim)
    m = _expect(data, "dim", "representation")
    if not isinstance(m, int) or m < 1:
        raise InstanceParseError("representation dim must be a positive integer")
    raw = data.get("matrices", {})
    matrices = []
    for j in range(g.dim):
        rows = raw.get(g.basis[j])
        if rows is None:
            matrices.append(ExactMatrix.zero(m, m))
            continue
        if len(rows) != m or any(len(r) != m for r in rows):
            raise InstanceParseError(
                f"matrix for {g.basis[j]} must be {m}x{m}"
            )
        matrices.append(
            ExactMatrix(
                m, m, [[parse_gaussian(str(e)) for e in row] for row in rows]
            )
        )
    weights = None
    if "weights" in data:
        weights = tuple(
            _parse_weight(wd, g.complement, g.basis, "representation weights")
            for wd in data["weights"]
        )
        if len(weights) != m:
            raise InstanceParseError("need one representation weight per basis vector")
    return RepresentationSpec("explicit", m, tuple(matrices), weights)


def _parse_weights(data, g: LieAlgebraData) -> WeightsSpec:
    if not isinstance(data, dict):
        raise InstanceParseError("weights block must be an object")
    if data.get("infer"):
        return WeightsSpec(infer=True)
    alg_raw = _expect(data, "algebra", "weights")
    weights = []
    for i in range(g.dim):
        weights.append(
            _parse_weight(
                alg_raw.get(g.basis[i], {}), g.complement, g.basis, "algebra weights"
            )
        )
    rep_weights = None
    if "representation" in data:
        rep_weights = tuple(
            _parse_weight(wd, g.complement, g.basis, "representation weights")
            for wd in data["representation"]
        )
    return WeightsSpec(False, tuple(weights), rep_weights)


def _parse_lattice(data, g: LieAlgebraData) -> LatticeData:
    if not isinstance(data, dict):
        raise InstanceParseError("lattice block must be an object")
    try:
        decls = [
            PeriodBasisSymbol(
                str(_expect(sd, "name", "symbol declaration")),
                str(_expect(sd, "parity", "symbol declaration")),
            )
            for sd in data.get("symbols", ())
        ]
        table = SymbolTable.from_declarations(decls)
    except ValidationFailure as exc:
        raise InstanceParseError(str(exc)) from exc
    generators = []
    for gen in data.get("generators", ()):
        if not isinstance(gen, dict):
            raise InstanceParseError("each generator must be an object")
        coords = []
        for j in g.complement:
            text = gen.get(g.basis[j], "0")
            coords.append(parse_period(str(text), table))
        for key in gen:
            if key not in {g.basis[j] for j in g.complement}:
                raise InstanceParseError(
                    f"generator coordinate {key!r} is not a complement name"
                )
        generators.append(tuple(coords))
    return LatticeData(table, tuple(generators))


# ---------------------------------------------------------------------------
# Emission (canonical form; parse . emit == identity on instances).


def emit_instance(inst: InstanceFile) -> dict:
    g = inst.algebra
    out: dict = {"name": inst.name, "kind": inst.kind}
    brackets = []
    for (i, j), row in sorted(g.bracket_table().items()):
        for k, c in row:
            brackets.append([g.basis[i], g.basis[j], g.basis[k], format_gaussian(c)])
    alg: dict = {
        "dim": g.dim,
        "basis": list(g.basis),
        "brackets": brackets,
        "nilradical": [g.basis[i] for i in sorted(g.nilradical)],
        "complement": [g.basis[i] for i in g.complement],
    }
    if g.conjugation is not None:
        alg["conjugation"] = {
            g.basis[i]: g.basis[g.conjugation[i]] for i in range(g.dim)
        }
    out["algebra"] = alg

    rep = inst.representation
    if rep.kind == "trivial":
        out["representation"] = {"trivial": True}
    elif rep.kind == "adjoint":
        out["representation"] = {"adjoint": True}
    else:
        mats = {}
        for j, mat in enumerate(rep.matrices):
            if not mat.is_zero():
                mats[g.basis[j]] = [
                    [format_gaussian(e) for e in row] for row in mat.rows
                ]
        block = {"dim": rep.m, "matrices": mats}
        if rep.weights is not None:
            block["weights"] = [_emit_weight(wt, g) for wt in rep.weights]
        out["representation"] = block

    if inst.weights.infer:
        out["weights"] = {"infer": True}
    else:
        walg = {}
        for i in range(g.dim):
            wt = inst.weights.algebra[i]
            if any(c for c in wt):
                walg[g.basis[i]] = _emit_weight(wt, g)
        block = {"algebra": walg}
        if inst.weights.representation is not None:
            block["representation"] = [
                _emit_weight(wt, g) for wt in inst.weights.representation
            ]
        out["weights"] = block

    lat = inst.lattice
    symbols = [
        {"name": base, "parity": "real"} for base in lat.table.user_base_names
    ]
    generators = []
    for gen in lat.generators:
        entry = {}
        for pos, j in enumerate(g.complement):
            if not gen[pos].is_zero():
                entry[g.basis[j]] = format_period(gen[pos])
        generators.append(entry)
    out["lattice"] = {"symbols": symbols, "generators": generators}
    return out


def _emit_weight(wt: Weight, g: LieAlgebraData) -> dict:
    return {
        g.basis[j]: format_gaussian(c)
        for j, c in zip(g.complement, wt)
        if c
    }


def load_instance(path: str | Path) -> InstanceFile:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InstanceParseError(f"cannot read {path}: {exc}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceParseError(f"invalid JSON in {path}: {exc}") from exc
    return parse_instance(data)


# ---------------------------------------------------------------------------
# Resolution into pipeline objects.


def build_representation(inst: InstanceFile) -> RepresentationData:
    spec = inst.representation
    if spec.kind == "trivial":
        return trivial_representation(inst.algebra)
    if spec.kind == "adjoint":
        return adjoint_representation(inst.algebra)
    return RepresentationData(spec.m, spec.matrices, spec.weights)


def build_weight_assignment(
    inst: InstanceFile, rep: RepresentationData
) -> WeightAssignment:
    g = inst.algebra
    spec = inst.weights
    if spec.infer:
        return infer_weights(g, rep)
    rep_weights = spec.representation
    if rep_weights is None:
        if inst.representation.kind == "adjoint":
            rep_weights = spec.algebra
        elif inst.representation.kind == "trivial":
            rep_weights = (tuple(ZERO for _ in g.complement),)
        elif rep.rep_weights is not None:
            rep_weights = rep.rep_weights
        else:
            raise InstanceParseError(
                "explicit weights for an explicit representation need a "
                "'representation' weight list"
            )
    return WeightAssignment(spec.algebra, rep_weights, g.complement)


def validate_instance(inst: InstanceFile) -> ValidationReport:
    """All structural validators, merged into one report."""
    issues: list = []
    report = validate_algebra(inst.algebra)
    issues.extend(report.issues)
    rep_ok = True
    try:
        rep = build_representation(inst)
    except ValidationFailure as exc:
        issues.append(ValidationIssue("rep-shape", str(exc)))
        rep_ok = False
    if rep_ok:
        issues.extend(validate_representation(inst.algebra, rep).issues)
        if not inst.weights.infer:
            try:
                w = build_weight_assignment(inst, rep)
                issues.extend(
                    validate_weight_assignment(inst.algebra, rep, w).issues
                )
            except (ValidationFailure, InstanceParseError) as exc:
                issues.append(ValidationIssue("weights-shape", str(exc)))
    issues.extend(validate_lattice(inst.algebra, inst.lattice).issues)
    return ValidationReport(tuple(issues))
