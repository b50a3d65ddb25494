"""
Parsing, validation and serialization of algebra documents.

parse_document is strict: JSON syntax errors carry line and column, and every
semantic problem (missing dimension, unknown or missing tensor, index out of
range, duplicate entry, bad rational) carries the path of the offending field.
"""

import hashlib
import itertools
import json
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from pydantic import ValidationError

from algebra_core import (
    AssociativeAlgebra, BilinearMap, Dialgebra, LeibnizAlgebra, PoissonAlgebra, PoissonDialgebra,
    TrilinearMap,
)
from constructions import LMObject, PoissonLMObject
from exact_linalg import Matrix, Subspace, format_rational, to_fraction
from graded import FilteredDialgebra, GradedAlgebraStructure
from homotopy import TwoTermAssoc, TwoTermHomotopyPoisson, TwoTermLie

from .errors import DocumentSemanticError, DocumentSyntaxError
from .models import AlgebraDocument, MatrixSpec

logger = logging.getLogger(__name__)

SQUARE_KINDS = ("associative", "dialgebra", "leibniz", "poisson", "poisson_dialgebra", "filtered_dialgebra")
LM_KINDS = ("lm_object", "poisson_lm_object")
TWO_TERM_KINDS = ("two_term_associative", "two_term_lie", "two_term_homotopy_poisson")


@dataclass
class Layout:
    """Tensor and operator shapes a document of some kind must provide."""
    bilinear: Dict[str, Tuple[int, int, int]] = field(default_factory=dict)
    trilinear: Dict[str, Tuple[int, int, int, int]] = field(default_factory=dict)
    operators: Dict[str, Tuple[int, int]] = field(default_factory=dict)
    optional_operators: Dict[str, Tuple[int, int]] = field(default_factory=dict)
    tensors_optional: bool = False


def _path(loc: Iterable) -> str:
    out = ""
    for part in loc:
        out += f"[{part}]" if isinstance(part, int) else (f".{part}" if out else str(part))
    return out or "$"


def _required_dims(doc: AlgebraDocument) -> Sequence[str]:
    if doc.kind in LM_KINDS:
        return ("dimension", "module_dim")
    if doc.kind in TWO_TERM_KINDS:
        return ("dimension", "degree_one_dim")
    if doc.kind == "graded_dialgebra":
        return ("component_dims", "degree")
    return ("dimension",)


def layout(doc: AlgebraDocument) -> Layout:
    """The shapes required by doc's kind and dimensions."""
    for name in _required_dims(doc):
        if getattr(doc, name) is None:
            raise DocumentSemanticError(name, f"required for kind {doc.kind}")

    kind, n = doc.kind, doc.dimension
    sq = (n, n, n)
    if kind == "associative":
        return Layout({"product": sq})
    if kind in ("dialgebra", "filtered_dialgebra"):
        ops = {"phi_prime": (n, n)} if kind == "dialgebra" else {}
        return Layout({"left": sq, "right": sq}, optional_operators=ops)
    if kind == "leibniz":
        return Layout({"bracket": sq})
    if kind == "poisson":
        return Layout({"product": sq, "bracket": sq}, optional_operators={"d": (n, n), "alpha": (n, n)})
    if kind == "poisson_dialgebra":
        return Layout({"left": sq, "right": sq, "bracket": sq}, optional_operators={"phi_prime": (n, n)})
    if kind in LM_KINDS:
        m = doc.module_dim
        bilinear = {"product": sq, "left_action": (n, m, m), "right_action": (m, n, m)}
        if kind == "poisson_lm_object":
            bilinear.update({"bracket": sq, "bracket_action": (n, m, m)})
        return Layout(bilinear, operators={"f": (n, m)})
    if kind in TWO_TERM_KINDS:
        m = doc.degree_one_dim
        if kind == "two_term_associative":
            return Layout({"mu2_00": sq, "mu2_01": (n, m, m), "mu2_10": (m, n, m)},
                          {"mu3": (n, n, n, m)}, {"mu1": (n, m)})
        bilinear = {"l2_00": sq, "l2_01": (n, m, m)}
        if kind == "two_term_homotopy_poisson":
            bilinear.update({"mu_00": sq, "mu_01": (n, m, m), "mu_10": (m, n, m)})
        return Layout(bilinear, {"l3": (n, n, n, m)}, {"l1": (n, m)})

    # graded_dialgebra
    dims, degree = doc.component_dims, doc.degree
    if not dims:
        raise DocumentSemanticError("component_dims", "needs at least one component")
    for index, d in enumerate(dims):
        if d < 0:
            raise DocumentSemanticError(f"component_dims[{index}]", "dimension must be non-negative")
    top = len(dims) - 1
    bilinear = {}
    for i, j in itertools.product(range(top + 1), repeat=2):
        if i + j <= top:
            bilinear[f"left_{i}_{j}"] = (dims[i], dims[j], dims[i + j])
            bilinear[f"right_{i}_{j}"] = (dims[i], dims[j], dims[i + j])
        if 0 <= i + j - degree <= top:
            bilinear[f"bracket_{i}_{j}"] = (dims[i], dims[j], dims[i + j - degree])
    return Layout(bilinear, tensors_optional=True)


def _check_entries(path: str, entries: Sequence[Tuple], shape: Sequence[int]) -> None:
    seen = set()
    for row, entry in enumerate(entries):
        indices = tuple(entry[:-1])
        for axis, (index, bound) in enumerate(zip(indices, shape)):
            if not 0 <= index < bound:
                raise DocumentSemanticError(f"{path}[{row}][{axis}]",
                                            f"index {index} out of range 0..{bound - 1}")
        if indices in seen:
            raise DocumentSemanticError(f"{path}[{row}]", f"duplicate entry for indices {list(indices)}")
        seen.add(indices)


def validate_semantics(doc: AlgebraDocument) -> Layout:
    """
    Check doc against the layout of its kind.

    Returns:
        Layout: The validated layout

    Raises:
        DocumentSemanticError: With the path of the first offending field
    """
    spec = layout(doc)

    for group, given, expected in (("tensors", doc.tensors, spec.bilinear),
                                   ("trilinear", doc.trilinear, spec.trilinear)):
        for name in given:
            if name not in expected:
                raise DocumentSemanticError(f"{group}.{name}", f"not a tensor of kind {doc.kind}")
        for name, shape in expected.items():
            if name not in given:
                if not spec.tensors_optional:
                    raise DocumentSemanticError(f"{group}.{name}", f"missing tensor for kind {doc.kind}")
                continue
            _check_entries(f"{group}.{name}", given[name], shape)

    allowed = {**spec.optional_operators, **spec.operators}
    for name, matrix in doc.operators.items():
        if name not in allowed:
            raise DocumentSemanticError(f"operators.{name}", f"not an operator of kind {doc.kind}")
        rows, cols = allowed[name]
        if (matrix.rows, matrix.cols) != (rows, cols):
            raise DocumentSemanticError(f"operators.{name}",
                                        f"expected a {rows}x{cols} matrix, got {matrix.rows}x{matrix.cols}")
        _check_entries(f"operators.{name}.entries", matrix.entries, (rows, cols))
    for name in spec.operators:
        if name not in doc.operators:
            raise DocumentSemanticError(f"operators.{name}", f"missing operator for kind {doc.kind}")

    if doc.kind == "filtered_dialgebra":
        if not doc.filtration:
            raise DocumentSemanticError("filtration", "filtered_dialgebra needs at least one step")
        for s, step in enumerate(doc.filtration):
            for v, vec in enumerate(step):
                if len(vec) != doc.dimension:
                    raise DocumentSemanticError(f"filtration[{s}][{v}]",
                                                f"vector has length {len(vec)}, expected {doc.dimension}")
    elif doc.filtration is not None:
        raise DocumentSemanticError("filtration", f"not used by kind {doc.kind}")

    if doc.has_unit is not None and doc.kind != "two_term_homotopy_poisson":
        raise DocumentSemanticError("has_unit", f"not used by kind {doc.kind}")
    if doc.basis is not None:
        expected_labels = sum(doc.component_dims) if doc.kind == "graded_dialgebra" else doc.dimension
        if len(doc.basis) != expected_labels:
            raise DocumentSemanticError("basis", f"expected {expected_labels} labels, got {len(doc.basis)}")
    return spec


def parse_document(text: str) -> AlgebraDocument:
    """
    Parse and validate a JSON algebra document.

    Raises:
        DocumentSyntaxError: If text is not valid JSON
        DocumentSemanticError: If the document is inconsistent
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise DocumentSyntaxError(e.msg, e.lineno, e.colno) from e
    if not isinstance(data, dict):
        raise DocumentSemanticError("$", "expected a JSON object")

    try:
        doc = AlgebraDocument.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        raise DocumentSemanticError(_path(first["loc"]), first["msg"]) from e

    validate_semantics(doc)
    logger.debug(f"Parsed document {doc.name!r} of kind {doc.kind}")
    return doc


def serialize(doc: AlgebraDocument) -> str:
    """Canonical JSON text: sorted keys, no null fields, trailing newline."""
    return json.dumps(doc.model_dump(mode="json", exclude_none=True), indent=2, sort_keys=True) + "\n"


def document_digest(doc: AlgebraDocument) -> str:
    """SHA-256 of the canonical serialization."""
    return hashlib.sha256(serialize(doc).encode("utf-8")).hexdigest()


# --- document → structure --------------------------------------------------

def _bilinear(doc: AlgebraDocument, spec: Layout, name: str) -> BilinearMap:
    return BilinearMap.from_entries(spec.bilinear[name], doc.tensors.get(name, ()))


def _trilinear(doc: AlgebraDocument, spec: Layout, name: str) -> TrilinearMap:
    return TrilinearMap.from_entries(spec.trilinear[name], doc.trilinear.get(name, ()))


def matrix_from_spec(spec: MatrixSpec) -> Matrix:
    return Matrix.from_entries(spec.rows, spec.cols, spec.entries)


def operator(doc: AlgebraDocument, name: str) -> Optional[Matrix]:
    """The named operator matrix, or None if the document has none."""
    spec = doc.operators.get(name)
    return matrix_from_spec(spec) if spec is not None else None


def to_structure(doc: AlgebraDocument):
    """
    Build the structure object a document describes.

    Returns:
        One of AssociativeAlgebra, Dialgebra, LeibnizAlgebra, PoissonAlgebra,
        PoissonDialgebra, LMObject, PoissonLMObject, FilteredDialgebra,
        GradedAlgebraStructure, TwoTermAssoc, TwoTermLie, TwoTermHomotopyPoisson
    """
    spec = validate_semantics(doc)
    kind, n = doc.kind, doc.dimension

    def b(name):
        return _bilinear(doc, spec, name)

    if kind == "associative":
        return AssociativeAlgebra(n, b("product"))
    if kind == "dialgebra":
        return Dialgebra(n, b("left"), b("right"))
    if kind == "leibniz":
        return LeibnizAlgebra(n, b("bracket"))
    if kind == "poisson":
        return PoissonAlgebra(n, b("product"), b("bracket"))
    if kind == "poisson_dialgebra":
        return PoissonDialgebra(n, b("left"), b("right"), b("bracket"))
    if kind == "filtered_dialgebra":
        base = Dialgebra(n, b("left"), b("right"))
        steps = [[tuple(to_fraction(x) for x in vec) for vec in step] for step in doc.filtration]
        return FilteredDialgebra(base, tuple(Subspace.from_spanning(n, vectors) for vectors in steps))
    if kind == "lm_object":
        return LMObject(doc.module_dim, AssociativeAlgebra(n, b("product")), operator(doc, "f"),
                        b("left_action"), b("right_action"))
    if kind == "poisson_lm_object":
        return PoissonLMObject(doc.module_dim, PoissonAlgebra(n, b("product"), b("bracket")), operator(doc, "f"),
                               b("left_action"), b("right_action"), b("bracket_action"))
    if kind == "two_term_associative":
        return TwoTermAssoc(n, doc.degree_one_dim, operator(doc, "mu1"), b("mu2_00"), b("mu2_01"), b("mu2_10"),
                            _trilinear(doc, spec, "mu3"))
    if kind in ("two_term_lie", "two_term_homotopy_poisson"):
        lie = TwoTermLie(n, doc.degree_one_dim, operator(doc, "l1"), b("l2_00"), b("l2_01"),
                         _trilinear(doc, spec, "l3"))
        if kind == "two_term_lie":
            return lie
        return TwoTermHomotopyPoisson(lie, b("mu_00"), b("mu_01"), b("mu_10"), bool(doc.has_unit))

    # graded_dialgebra
    tables: Dict[str, Dict[Tuple[int, int], BilinearMap]] = {"left": {}, "right": {}, "bracket": {}}
    for name in spec.bilinear:
        prefix, i, j = name.split("_")
        tables[prefix][(int(i), int(j))] = b(name)
    return GradedAlgebraStructure(tuple(doc.component_dims), doc.degree,
                                  tables["left"], tables["right"], tables["bracket"])


# --- structure → document --------------------------------------------------

def _entries(m: BilinearMap) -> List[Tuple[int, int, int, str]]:
    return [(i, j, k, format_rational(v)) for i, j, k, v in m.entries()]


def _trilinear_entries(m: TrilinearMap) -> List[Tuple[int, int, int, int, str]]:
    return [(i, j, k, l, format_rational(v)) for i, j, k, l, v in m.entries()]


def matrix_spec(m: Matrix) -> MatrixSpec:
    return MatrixSpec(rows=m.rows, cols=m.cols,
                      entries=[(r, c, format_rational(v)) for r, c, v in m.nonzero_entries()])


def from_structure(obj, name: str = "unnamed", operators: Optional[Dict[str, Matrix]] = None,
                   basis: Optional[List[str]] = None) -> AlgebraDocument:
    """
    Describe a structure object as a document.

    Args:
        obj: Any structure accepted by to_structure's return type
        name: Document name
        operators: Extra named matrices (d, alpha, phi_prime)
        basis: Optional basis labels

    Raises:
        TypeError: For an object with no document kind
    """
    fields = {"name": name, "basis": basis,
              "operators": {k: matrix_spec(v) for k, v in (operators or {}).items()}}

    if isinstance(obj, AssociativeAlgebra):
        fields.update(kind="associative", dimension=obj.dim, tensors={"product": _entries(obj.product)})
    elif isinstance(obj, PoissonDialgebra):
        fields.update(kind="poisson_dialgebra", dimension=obj.dim,
                      tensors={"left": _entries(obj.left), "right": _entries(obj.right),
                               "bracket": _entries(obj.bracket)})
    elif isinstance(obj, Dialgebra):
        fields.update(kind="dialgebra", dimension=obj.dim,
                      tensors={"left": _entries(obj.left), "right": _entries(obj.right)})
    elif isinstance(obj, LeibnizAlgebra):
        fields.update(kind="leibniz", dimension=obj.dim, tensors={"bracket": _entries(obj.bracket)})
    elif isinstance(obj, PoissonAlgebra):
        fields.update(kind="poisson", dimension=obj.dim,
                      tensors={"product": _entries(obj.product), "bracket": _entries(obj.bracket)})
    elif isinstance(obj, FilteredDialgebra):
        fields.update(kind="filtered_dialgebra", dimension=obj.base.dim,
                      tensors={"left": _entries(obj.base.left), "right": _entries(obj.base.right)},
                      filtration=[[[format_rational(x) for x in v] for v in step.vectors()] for step in obj.steps])
    elif isinstance(obj, PoissonLMObject):
        p = obj.downstairs
        fields.update(kind="poisson_lm_object", dimension=p.dim, module_dim=obj.upstairs_dim,
                      tensors={"product": _entries(p.product), "bracket": _entries(p.bracket),
                               "left_action": _entries(obj.left_action),
                               "right_action": _entries(obj.right_action),
                               "bracket_action": _entries(obj.bracket_action)})
        fields["operators"]["f"] = matrix_spec(obj.f)
    elif isinstance(obj, LMObject):
        fields.update(kind="lm_object", dimension=obj.downstairs.dim, module_dim=obj.upstairs_dim,
                      tensors={"product": _entries(obj.downstairs.product),
                               "left_action": _entries(obj.left_action),
                               "right_action": _entries(obj.right_action)})
        fields["operators"]["f"] = matrix_spec(obj.f)
    elif isinstance(obj, TwoTermAssoc):
        fields.update(kind="two_term_associative", dimension=obj.dim0, degree_one_dim=obj.dim1,
                      tensors={"mu2_00": _entries(obj.mu2_00), "mu2_01": _entries(obj.mu2_01),
                               "mu2_10": _entries(obj.mu2_10)},
                      trilinear={"mu3": _trilinear_entries(obj.mu3)})
        fields["operators"]["mu1"] = matrix_spec(obj.mu1)
    elif isinstance(obj, (TwoTermLie, TwoTermHomotopyPoisson)):
        lie = obj if isinstance(obj, TwoTermLie) else obj.lie
        tensors = {"l2_00": _entries(lie.l2_00), "l2_01": _entries(lie.l2_01)}
        if isinstance(obj, TwoTermHomotopyPoisson):
            tensors.update({"mu_00": _entries(obj.mu_00), "mu_01": _entries(obj.mu_01),
                            "mu_10": _entries(obj.mu_10)})
            fields.update(kind="two_term_homotopy_poisson", has_unit=obj.has_unit)
        else:
            fields.update(kind="two_term_lie")
        fields.update(dimension=lie.dim0, degree_one_dim=lie.dim1, tensors=tensors,
                      trilinear={"l3": _trilinear_entries(lie.l3)})
        fields["operators"]["l1"] = matrix_spec(lie.l1)
    elif isinstance(obj, GradedAlgebraStructure):
        tensors = {}
        for prefix, table in (("left", obj.left), ("right", obj.right), ("bracket", obj.bracket)):
            for (i, j), m in sorted(table.items()):
                tensors[f"{prefix}_{i}_{j}"] = _entries(m)
        fields.update(kind="graded_dialgebra", component_dims=list(obj.component_dims), degree=obj.degree,
                      tensors=tensors)
    else:
        raise TypeError(f"No document kind for {type(obj).__name__}")

    doc = AlgebraDocument(**fields)
    validate_semantics(doc)
    return doc
