"""
Algebra objects in the category of linear maps.

An associative algebra object is a bimodule map f: M → A over an associative
algebra A; a Poisson algebra object is a Poisson-bimodule map over a Poisson
algebra. This module converts between these objects and (Poisson) dialgebras.
"""

import itertools
import logging
from dataclasses import dataclass

from algebra_core import (
    AssociativeAlgebra, AssociativeBimodule, AxiomReport, BilinearMap, Dialgebra, GuardFailure,
    InvalidStructureError, PoissonAlgebra, PoissonBimodule, PoissonDialgebra, ReportBuilder,
    ShapeMismatchError, check_associative, check_associative_bimodule, check_poisson_algebra,
    check_poisson_bimodule,
)
from exact_linalg import Matrix, basis_vector

from .quotients import associativization, poissonization

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LMObject:
    """
    Bimodule map f: M → A over an associative algebra A.

    Attributes:
        upstairs_dim: dim M
        downstairs: The algebra A
        f: A-dim × M-dim matrix
        left_action: a·m, shape (A, M, M)
        right_action: m·a, shape (M, A, M)
    """
    upstairs_dim: int
    downstairs: AssociativeAlgebra
    f: Matrix
    left_action: BilinearMap
    right_action: BilinearMap

    def __post_init__(self):
        a, m = self.downstairs.dim, self.upstairs_dim
        if (self.f.rows, self.f.cols) != (a, m):
            raise ShapeMismatchError(f"f must be {a}x{m}, got {self.f.rows}x{self.f.cols}")
        if self.left_action.shape != (a, m, m) or self.right_action.shape != (m, a, m):
            raise ShapeMismatchError("Action tensors do not fit the LM object dimensions")

    @property
    def bimodule(self) -> AssociativeBimodule:
        return AssociativeBimodule(self.upstairs_dim, self.left_action, self.right_action)

    @classmethod
    def regular(cls, a: AssociativeAlgebra) -> "LMObject":
        """M = A with multiplication actions and f = identity."""
        return cls(a.dim, a, Matrix.identity(a.dim), a.product, a.product)


@dataclass(frozen=True)
class PoissonLMObject:
    """
    Poisson-bimodule map f: M → P.

    bracket_action stores ν′(x, m) for x ∈ P, m ∈ M, shape (P, M, M).
    """
    upstairs_dim: int
    downstairs: PoissonAlgebra
    f: Matrix
    left_action: BilinearMap
    right_action: BilinearMap
    bracket_action: BilinearMap

    def __post_init__(self):
        p, m = self.downstairs.dim, self.upstairs_dim
        if self.bracket_action.shape != (p, m, m):
            raise ShapeMismatchError(f"Bracket action must have shape {(p, m, m)}")
        # Remaining shapes are checked by the underlying LMObject
        self.lm_object

    @property
    def lm_object(self) -> LMObject:
        return LMObject(self.upstairs_dim, self.downstairs.associative, self.f,
                        self.left_action, self.right_action)

    @property
    def bimodule(self) -> PoissonBimodule:
        return PoissonBimodule(self.lm_object.bimodule, self.bracket_action)

    @classmethod
    def regular(cls, p: PoissonAlgebra) -> "PoissonLMObject":
        return cls(p.dim, p, Matrix.identity(p.dim), p.product, p.product, p.bracket)


def _check_bimodule_map(builder: ReportBuilder, o, include_bracket: bool) -> None:
    f = o.f
    a_dim, m_dim = o.downstairs.dim, o.upstairs_dim
    product = o.downstairs.product
    builder.declare("bimodule-map-left", "bimodule-map-right")
    if include_bracket:
        builder.declare("bimodule-map-bracket")
    for a, m in itertools.product(range(a_dim), range(m_dim)):
        ea = basis_vector(a_dim, a)
        fm = f.column(m)
        builder.compare("bimodule-map-left", (a, m),
                        f.apply(o.left_action.product(a, m)), product.evaluate(ea, fm))
        builder.compare("bimodule-map-right", (a, m),
                        f.apply(o.right_action.product(m, a)), product.evaluate(fm, ea))
        if include_bracket:
            builder.compare("bimodule-map-bracket", (a, m),
                            f.apply(o.bracket_action.product(a, m)),
                            o.downstairs.bracket.evaluate(ea, fm))


def check_lm_object(o: LMObject) -> AxiomReport:
    """Associative downstairs, associative bimodule upstairs, f a bimodule map."""
    builder = ReportBuilder("lm_object")
    builder.extend(check_associative(o.downstairs.dim, o.downstairs.product))
    builder.extend(check_associative_bimodule(o.downstairs, o.bimodule))
    _check_bimodule_map(builder, o, include_bracket=False)
    return builder.build()


def check_poisson_lm_object(o: PoissonLMObject) -> AxiomReport:
    """Poisson downstairs, Poisson bimodule upstairs, f a Poisson-bimodule map."""
    builder = ReportBuilder("poisson_lm_object")
    builder.extend(check_poisson_algebra(o.downstairs.dim, o.downstairs.product, o.downstairs.bracket))
    builder.extend(check_poisson_bimodule(o.downstairs, o.bimodule))
    _check_bimodule_map(builder, o, include_bracket=True)
    return builder.build()


def _diproducts(o) -> Dialgebra:
    m_dim = o.upstairs_dim
    images = [o.f.column(j) for j in range(m_dim)]
    units = [basis_vector(m_dim, i) for i in range(m_dim)]
    left = BilinearMap.from_function((m_dim, m_dim, m_dim),
                                     lambda i, j: o.right_action.evaluate(units[i], images[j]))
    right = BilinearMap.from_function((m_dim, m_dim, m_dim),
                                      lambda i, j: o.left_action.evaluate(images[i], units[j]))
    return Dialgebra(m_dim, left, right)


def dialgebra_from_lm_object(o: LMObject, validate: bool = True) -> Dialgebra:
    """
    The dialgebra on M with m⊣n := m·f(n) and m⊢n := f(m)·n.

    Raises:
        InvalidStructureError: If validate is set and o fails check_lm_object
    """
    if validate:
        report = check_lm_object(o)
        if not report.passed:
            raise InvalidStructureError("lm_object", report)
    return _diproducts(o)


def poisson_dialgebra_from_bimodule_map(o: PoissonLMObject, validate: bool = True) -> PoissonDialgebra:
    """
    The Poisson dialgebra on M from a Poisson-bimodule map.

    Products as in dialgebra_from_lm_object; bracket [m, n]_M := [m, f(n)],
    where P acts on M through ν′, so [m, f(n)] = −ν′(f(n), m).

    Raises:
        InvalidStructureError: If validate is set and o fails check_poisson_lm_object
    """
    if validate:
        report = check_poisson_lm_object(o)
        if not report.passed:
            raise InvalidStructureError("poisson_lm_object", report)
    d = _diproducts(o)
    m_dim = o.upstairs_dim
    images = [o.f.column(j) for j in range(m_dim)]
    units = [basis_vector(m_dim, i) for i in range(m_dim)]
    bracket = BilinearMap.from_function(
        (m_dim, m_dim, m_dim),
        lambda i, j: tuple(-v for v in o.bracket_action.evaluate(images[j], units[i])),
    )
    return PoissonDialgebra(m_dim, d.left, d.right, bracket)


poisson_dialgebra_from_poisson_lm_object = poisson_dialgebra_from_bimodule_map


def _verify_representative_free(guard: str, d_dim: int, kernel_vectors, checks) -> None:
    for k in kernel_vectors:
        for m in range(d_dim):
            em = basis_vector(d_dim, m)
            for name, fn in checks:
                if any(fn(k, em)):
                    raise GuardFailure(guard, f"{name} depends on the section representative")


def lm_object_from_dialgebra(d: Dialgebra, validate: bool = True) -> LMObject:
    """
    The associative algebra object D → D_As.

    Actions ā·m := s(ā)⊢m and m·ā := m⊣s(ā); f is the projection.

    Raises:
        GuardFailure: "lm-action-well-defined" if an action depends on the
            section representative
    """
    algebra, q = associativization(d, validate)
    _verify_representative_free("lm-action-well-defined", d.dim, q.kernel.vectors(), [
        ("left action", lambda k, m: d.right.evaluate(k, m)),
        ("right action", lambda k, m: d.left.evaluate(m, k)),
    ])
    lifts = [q.section.column(t) for t in range(q.quotient_dim)]
    units = [basis_vector(d.dim, i) for i in range(d.dim)]
    left_action = BilinearMap.from_function((q.quotient_dim, d.dim, d.dim),
                                            lambda a, m: d.right.evaluate(lifts[a], units[m]))
    right_action = BilinearMap.from_function((d.dim, q.quotient_dim, d.dim),
                                             lambda m, a: d.left.evaluate(units[m], lifts[a]))
    o = LMObject(d.dim, algebra, q.projection, left_action, right_action)
    logger.debug(f"LM object over a {algebra.dim}-dim algebra with {d.dim}-dim upstairs")
    return o


def poisson_lm_object_from_poisson_dialgebra(p: PoissonDialgebra, validate: bool = True) -> PoissonLMObject:
    """
    The Poisson algebra object P → P_Poiss.

    Actions as in lm_object_from_dialgebra and ν′(x̄, m) := −[m, s(x̄)].

    Raises:
        GuardFailure: "poisson-lm-action-well-defined" if an action depends on
            the section representative
    """
    algebra, q = poissonization(p, validate)
    _verify_representative_free("poisson-lm-action-well-defined", p.dim, q.kernel.vectors(), [
        ("left action", lambda k, m: p.right.evaluate(k, m)),
        ("right action", lambda k, m: p.left.evaluate(m, k)),
        ("bracket action", lambda k, m: p.bracket.evaluate(m, k)),
    ])
    lifts = [q.section.column(t) for t in range(q.quotient_dim)]
    units = [basis_vector(p.dim, i) for i in range(p.dim)]
    n, r = p.dim, q.quotient_dim
    left_action = BilinearMap.from_function((r, n, n), lambda a, m: p.right.evaluate(lifts[a], units[m]))
    right_action = BilinearMap.from_function((n, r, n), lambda m, a: p.left.evaluate(units[m], lifts[a]))
    bracket_action = BilinearMap.from_function(
        (r, n, n), lambda a, m: tuple(-v for v in p.bracket.evaluate(units[m], lifts[a])))
    return PoissonLMObject(n, algebra, q.projection, left_action, right_action, bracket_action)
