"""
Command runners behind the CLI: check, construct, generate and explore-compat.

Each runner takes parsed documents and returns a ReportDocument (or a list
of generated documents). Runners never print; exit statuses are part of the
report: 0 when every check passed and no guard fired, 1 otherwise.
"""

import logging
from typing import Callable, Dict, List, Optional, Tuple

from algebra_core import (
    AxiomReport, GuardFailure, InvalidStructureError, LinearOperator, StructureKind, check_associative,
    check_dialgebra, check_homomorphism, check_leibniz, check_poisson_algebra, check_poisson_dialgebra,
)
from constructions import (
    InstanceGenerator, annihilator_J, associativization, check_adjoint_factorization, check_averaging,
    check_derivation, check_lm_object, check_poisson_adjoint_factorization, check_poisson_lm_object,
    dialgebra_from_lm_object, ideal_I, induced_leibniz, induced_poisson_dialgebra, lm_object_from_dialgebra,
    poisson_dialgebra_from_averaging, poisson_dialgebra_from_bimodule_map, poisson_dialgebra_from_differential,
    poisson_lm_object_from_poisson_dialgebra, poissonization, right_center,
)
from exact_linalg import Matrix, format_rational
from graded import (
    associated_graded, check_filtration, check_graded_poisson_dialgebra, gerstenhaber_from_filtered,
    power_filtration,
)
from homotopy import (
    associative_2_algebra_from_dialgebra, check_associative_2_algebra, check_homotopy_poisson,
    check_lie_2_algebra, explore_compatibility, homotopy_pair_from_poisson_dialgebra,
    homotopy_poisson_from_reduced, lie_2_algebra_from_leibniz,
)
from settings import ToolkitConfig, get_toolkit_config

from .codec import document_digest, from_structure, matrix_spec, operator, to_structure
from .errors import DocumentSemanticError, InapplicableOperationError, UnknownFamilyError
from .models import (
    AlgebraDocument, AxiomRecord, CheckRecord, ConstructionOutput, GuardRecord, ReportDocument, ViolationRecord,
)

logger = logging.getLogger(__name__)

TOOL_VERSION = "1.0.0"

FAMILIES = ("assoc-as-dialgebra", "bimodule-map", "differential", "averaging", "filtered")

# Construction name → document kinds it accepts
OPERATIONS: Dict[str, Tuple[str, ...]] = {
    "associativization": ("dialgebra",),
    "poissonization": ("poisson_dialgebra", "poisson"),
    "induced-leibniz": ("dialgebra",),
    "induced-poisson": ("dialgebra",),
    "ideals": ("dialgebra", "poisson_dialgebra", "leibniz"),
    "lm-object": ("dialgebra",),
    "poisson-lm-object": ("poisson_dialgebra",),
    "dialgebra-from-lm": ("lm_object",),
    "poisson-dialgebra-from-lm": ("poisson_lm_object",),
    "adjoint-factorization": ("dialgebra",),
    "poisson-adjoint-factorization": ("poisson_dialgebra",),
    "differential": ("poisson",),
    "averaging": ("poisson",),
    "power-filtration": ("dialgebra",),
    "associated-graded": ("filtered_dialgebra",),
    "gerstenhaber": ("filtered_dialgebra",),
    "associative-2": ("dialgebra",),
    "lie-2": ("leibniz", "dialgebra"),
    "homotopy-pair": ("poisson_dialgebra", "dialgebra"),
    "homotopy-poisson": ("poisson_dialgebra", "poisson"),
}


# --- report assembly -------------------------------------------------------

def check_record(report: AxiomReport, prefix: int) -> CheckRecord:
    """Summarize a report, listing at most prefix violations per axiom."""
    axioms = []
    for axiom in report.axioms:
        violations = report.violations_for(axiom)
        axioms.append(AxiomRecord(
            axiom=axiom,
            passed=not violations,
            violation_count=len(violations),
            violations=[
                ViolationRecord(indices=list(v.indices), lhs=[format_rational(x) for x in v.lhs],
                                rhs=[format_rational(x) for x in v.rhs], detail=v.detail)
                for v in violations[:prefix]
            ],
        ))
    return CheckRecord(kind=report.kind, passed=report.passed, axioms=axioms)


def _finish(report: ReportDocument) -> ReportDocument:
    failed = any(not c.passed for c in report.checks) or bool(report.guard_failures)
    report.exit_status = 1 if failed else 0
    return report


def enforce_max_dim(doc: AlgebraDocument, max_dim: int) -> None:
    """Reject documents whose dimensions exceed max_dim."""
    for name in ("dimension", "module_dim", "degree_one_dim"):
        value = getattr(doc, name)
        if value is not None and value > max_dim:
            raise DocumentSemanticError(name, f"{value} exceeds max_dim {max_dim}")
    if doc.component_dims is not None and sum(doc.component_dims) > max_dim:
        raise DocumentSemanticError("component_dims", f"total {sum(doc.component_dims)} exceeds max_dim {max_dim}")


# --- check -----------------------------------------------------------------

def check_reports(doc: AlgebraDocument) -> List[AxiomReport]:
    """Run the axiom suite appropriate to the document kind."""
    obj = to_structure(doc)
    kind = doc.kind
    if kind == "associative":
        return [check_associative(obj.dim, obj.product)]
    if kind == "dialgebra":
        return [check_dialgebra(obj)]
    if kind == "leibniz":
        return [check_leibniz(obj)]
    if kind == "poisson":
        reports = [check_poisson_algebra(obj.dim, obj.product, obj.bracket)]
        d, alpha = operator(doc, "d"), operator(doc, "alpha")
        if d is not None:
            reports.append(check_derivation(obj.dim, obj.product, obj.bracket, LinearOperator.from_matrix(d)))
        if alpha is not None:
            reports.append(check_averaging(obj.dim, obj.product, obj.bracket, LinearOperator.from_matrix(alpha)))
        return reports
    if kind == "poisson_dialgebra":
        return [check_poisson_dialgebra(obj)]
    if kind == "lm_object":
        return [check_lm_object(obj)]
    if kind == "poisson_lm_object":
        return [check_poisson_lm_object(obj)]
    if kind == "filtered_dialgebra":
        return [check_dialgebra(obj.base), check_filtration(obj)]
    if kind == "graded_dialgebra":
        return [check_graded_poisson_dialgebra(obj, doc.degree)]
    if kind == "two_term_associative":
        return [check_associative_2_algebra(obj)]
    if kind == "two_term_lie":
        return [check_lie_2_algebra(obj)]
    return [check_homotopy_poisson(obj)]


def run_check(doc: AlgebraDocument, config: Optional[ToolkitConfig] = None) -> ReportDocument:
    """
    Check every axiom of the document's kind.

    Returns:
        ReportDocument: exit_status 0 iff all axioms hold
    """
    config = config or get_toolkit_config()
    enforce_max_dim(doc, config.max_dim)
    report = ReportDocument(tool_version=TOOL_VERSION, command="check", input_digest=document_digest(doc))
    for axiom_report in check_reports(doc):
        logger.info(axiom_report.summary())
        report.checks.append(check_record(axiom_report, config.violation_prefix))
    return _finish(report)


# --- construct -------------------------------------------------------------

class _Construction:
    """Collects the outputs, checks and subspace dimensions of one construction."""

    def __init__(self, doc: AlgebraDocument, op: str):
        self.doc = doc
        self.op = op
        self.outputs: List[ConstructionOutput] = []
        self.reports: List[AxiomReport] = []
        self.subspaces: Dict[str, int] = {}

    def emit(self, role: str, obj, operators: Optional[Dict[str, Matrix]] = None) -> None:
        name = f"{self.doc.name}-{self.op}" if role == "result" else f"{self.doc.name}-{self.op}-{role}"
        self.outputs.append(ConstructionOutput(role=role, document=from_structure(obj, name, operators)))

    def emit_matrix(self, role: str, m: Matrix) -> None:
        self.outputs.append(ConstructionOutput(role=role, matrix=matrix_spec(m)))


def _poisson_dialgebra_of(doc: AlgebraDocument, obj):
    if doc.kind == "dialgebra":
        return induced_poisson_dialgebra(obj)
    if doc.kind == "poisson":
        return obj.as_poisson_dialgebra()
    return obj


def _require_operator(doc: AlgebraDocument, name: str, op: str) -> Matrix:
    m = operator(doc, name)
    if m is None:
        raise InapplicableOperationError(f"{op} needs operator '{name}' in the document")
    return m


def _construct(c: _Construction, obj, options: Dict[str, int]) -> None:
    doc, op = c.doc, c.op

    if op == "associativization":
        algebra, q = associativization(obj)
        c.emit("result", algebra)
        c.emit_matrix("projection", q.projection)
        c.reports.append(check_associative(algebra.dim, algebra.product))
        c.reports.append(check_homomorphism(q.projection, obj, algebra.as_dialgebra(), StructureKind.DIALGEBRA))
        c.subspaces.update(kernel=q.kernel.dim, quotient=q.quotient_dim)
    elif op == "poissonization":
        p = _poisson_dialgebra_of(doc, obj)
        algebra, q = poissonization(p)
        c.emit("result", algebra)
        c.emit_matrix("projection", q.projection)
        c.reports.append(check_poisson_algebra(algebra.dim, algebra.product, algebra.bracket))
        c.reports.append(check_homomorphism(q.projection, p, algebra.as_poisson_dialgebra(),
                                            StructureKind.POISSON_DIALGEBRA))
        c.subspaces.update(kernel=q.kernel.dim, quotient=q.quotient_dim)
    elif op == "induced-leibniz":
        l = induced_leibniz(obj)
        c.emit("result", l)
        c.reports.append(check_leibniz(l))
    elif op == "induced-poisson":
        p = induced_poisson_dialgebra(obj)
        c.emit("result", p)
        c.reports.append(check_poisson_dialgebra(p))
    elif op == "ideals":
        if doc.kind == "leibniz":
            c.subspaces["Z"] = right_center(obj).dim
        else:
            p = _poisson_dialgebra_of(doc, obj)
            c.subspaces.update(I=ideal_I(p.dialgebra).dim, Z=right_center(p.leibniz).dim, J=annihilator_J(p).dim)
    elif op == "lm-object":
        o = lm_object_from_dialgebra(obj)
        c.emit("result", o)
        c.reports.append(check_lm_object(o))
    elif op == "poisson-lm-object":
        o = poisson_lm_object_from_poisson_dialgebra(obj)
        c.emit("result", o)
        c.reports.append(check_poisson_lm_object(o))
    elif op == "dialgebra-from-lm":
        d = dialgebra_from_lm_object(obj)
        c.emit("result", d)
        c.reports.append(check_dialgebra(d))
    elif op == "poisson-dialgebra-from-lm":
        p = poisson_dialgebra_from_bimodule_map(obj)
        c.emit("result", p)
        c.reports.append(check_poisson_dialgebra(p))
    elif op in ("adjoint-factorization", "poisson-adjoint-factorization"):
        phi_prime = operator(doc, "phi_prime")
        if phi_prime is None:
            phi_prime = Matrix.identity(obj.dim)
        if op == "adjoint-factorization":
            o = lm_object_from_dialgebra(obj)
            phi, report = check_adjoint_factorization(obj, o, phi_prime)
        else:
            o = poisson_lm_object_from_poisson_dialgebra(obj)
            phi, report = check_poisson_adjoint_factorization(obj, o, phi_prime)
        c.emit("target", o)
        c.emit_matrix("phi", phi)
        c.reports.append(report)
    elif op in ("differential", "averaging"):
        name = "d" if op == "differential" else "alpha"
        m = LinearOperator.from_matrix(_require_operator(doc, name, op))
        build = poisson_dialgebra_from_differential if op == "differential" else poisson_dialgebra_from_averaging
        p = build(obj.dim, obj.product, obj.bracket, m)
        c.emit("result", p)
        c.reports.append(check_poisson_dialgebra(p))
    elif op == "power-filtration":
        fd = power_filtration(obj, options.get("levels", 2))
        c.emit("result", fd)
        c.reports.append(check_filtration(fd))
    elif op == "associated-graded":
        g = associated_graded(obj)
        c.emit("result", g)
        c.reports.append(check_graded_poisson_dialgebra(g, g.degree))
    elif op == "gerstenhaber":
        g = gerstenhaber_from_filtered(obj)
        c.emit("result", g)
        c.reports.append(check_graded_poisson_dialgebra(g, g.degree))
    elif op == "associative-2":
        t = associative_2_algebra_from_dialgebra(obj)
        c.emit("result", t)
        c.reports.append(check_associative_2_algebra(t))
        c.subspaces["I"] = t.dim1
    elif op == "lie-2":
        l = induced_leibniz(obj) if doc.kind == "dialgebra" else obj
        t = lie_2_algebra_from_leibniz(l)
        c.emit("result", t)
        c.reports.append(check_lie_2_algebra(t))
        c.subspaces["Z"] = t.dim1
    elif op == "homotopy-pair":
        assoc, lie = homotopy_pair_from_poisson_dialgebra(_poisson_dialgebra_of(doc, obj))
        c.emit("associative", assoc)
        c.emit("lie", lie)
        c.reports.extend([check_associative_2_algebra(assoc), check_lie_2_algebra(lie)])
        c.subspaces["J"] = assoc.dim1
    elif op == "homotopy-poisson":
        h = homotopy_poisson_from_reduced(_poisson_dialgebra_of(doc, obj))
        c.emit("result", h)
        c.reports.append(check_homotopy_poisson(h))
        c.subspaces["J"] = h.lie.dim1


def run_construct(doc: AlgebraDocument, op: str, options: Optional[Dict[str, int]] = None,
                  config: Optional[ToolkitConfig] = None) -> ReportDocument:
    """
    Run one named construction on a document.

    Guard failures and invalid inputs are reported, not raised.

    Raises:
        InapplicableOperationError: If op is unknown or does not apply to doc's kind
    """
    config = config or get_toolkit_config()
    enforce_max_dim(doc, config.max_dim)
    if op not in OPERATIONS:
        raise InapplicableOperationError(f"Unknown construction '{op}'; choose from {', '.join(OPERATIONS)}")
    if doc.kind not in OPERATIONS[op]:
        raise InapplicableOperationError(
            f"Construction '{op}' needs a document of kind {' or '.join(OPERATIONS[op])}, got {doc.kind}")

    report = ReportDocument(tool_version=TOOL_VERSION, command=f"construct {op}", input_digest=document_digest(doc))
    c = _Construction(doc, op)
    try:
        _construct(c, to_structure(doc), options or {})
    except GuardFailure as e:
        logger.error(f"Guard {e.guard} failed: {e.detail}")
        report.guard_failures.append(GuardRecord(guard=e.guard, detail=e.detail or ""))
    except InvalidStructureError as e:
        logger.error(f"{e}")
        c.reports.append(e.report)

    report.outputs = c.outputs
    report.subspaces = c.subspaces
    report.checks = [check_record(r, config.violation_prefix) for r in c.reports]
    return _finish(report)


# --- generate --------------------------------------------------------------

def _generated(family: str, gen: InstanceGenerator, name: str) -> AlgebraDocument:
    if family == "assoc-as-dialgebra":
        return from_structure(gen.dialgebra(), name)
    if family == "bimodule-map":
        return from_structure(gen.bimodule_map_dialgebra(), name)
    if family == "differential":
        p, d = gen.differential()
        return from_structure(p, name, operators={"d": d.matrix})
    if family == "averaging":
        p, alpha = gen.averaging()
        return from_structure(p, name, operators={"alpha": alpha.matrix})
    levels = gen.rng.randint(1, 3)
    return from_structure(power_filtration(gen.dialgebra(), levels), name)


def run_generate(family: str, max_dim: int, seed: int, count: int,
                 config: Optional[ToolkitConfig] = None) -> List[AlgebraDocument]:
    """
    Generate count valid documents from a construction family.

    The same (family, max_dim, seed, count) always yields the same documents.

    Raises:
        UnknownFamilyError: If family is not one of FAMILIES
    """
    if family not in FAMILIES:
        raise UnknownFamilyError(f"Unknown family '{family}'; choose from {', '.join(FAMILIES)}")
    config = config or get_toolkit_config()
    gen = InstanceGenerator(seed, max_dim=max_dim, max_attempts=config.generate_max_attempts)
    docs = [_generated(family, gen, f"{family}-{seed}-{index}") for index in range(count)]
    logger.info(f"Generated {len(docs)} {family} document(s) with seed {seed}")
    return docs


# --- explore-compat --------------------------------------------------------

COMPAT_KINDS = ("poisson_dialgebra", "dialgebra", "poisson")


def run_explore_compat(doc: AlgebraDocument, config: Optional[ToolkitConfig] = None) -> ReportDocument:
    """
    Report candidate compatibility residuals on P ⊕ J.

    The report asserts no law: exit_status is 0 unless the input is invalid.
    """
    config = config or get_toolkit_config()
    enforce_max_dim(doc, config.max_dim)
    if doc.kind not in COMPAT_KINDS:
        raise InapplicableOperationError(f"explore-compat needs one of {', '.join(COMPAT_KINDS)}, got {doc.kind}")

    report = ReportDocument(tool_version=TOOL_VERSION, command="explore-compat", input_digest=document_digest(doc))
    try:
        compat = explore_compatibility(_poisson_dialgebra_of(doc, to_structure(doc)))
    except InvalidStructureError as e:
        report.checks.append(check_record(e.report, config.violation_prefix))
        return _finish(report)
    report.exploration = compat.to_dict()
    report.subspaces["J"] = compat.j_dim
    return _finish(report)


RUNNERS: Dict[str, Callable] = {
    "check": run_check,
    "construct": run_construct,
    "generate": run_generate,
    "explore-compat": run_explore_compat,
}
