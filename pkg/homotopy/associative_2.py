"""
The associative 2-algebra D ⊕ I of a dialgebra.

μ1 is the inclusion of the bar ideal, μ2(x,y) = ½(x⊣y + x⊢y) and
μ3(x,y,z) = ¼((x⊣y)⊢z − x⊣(y⊢z)), the associator of μ2.
"""

import itertools
import logging
from fractions import Fraction

from algebra_core import AxiomReport, BilinearMap, Dialgebra, GuardFailure, ReportBuilder, TrilinearMap
from constructions import ideal_I, require_dialgebra
from exact_linalg import Subspace, Vector, add, basis_vector, scale, sub
from graded import combine

from .two_term import TwoTermAssoc

logger = logging.getLogger(__name__)

HALF = Fraction(1, 2)
QUARTER = Fraction(1, 4)

ASSOCIATIVE_2_AXIOMS = (
    "identity-i", "identity-ii", "identity-iii", "identity-iv",
    "identity-v", "identity-vi", "identity-vii",
)


def mu2_value(d: Dialgebra, u: Vector, v: Vector) -> Vector:
    """½(u⊣v + u⊢v) in ambient coordinates."""
    return scale(HALF, add(d.left.evaluate(u, v), d.right.evaluate(u, v)))


def mu3_value(d: Dialgebra, u: Vector, v: Vector, w: Vector) -> Vector:
    """¼((u⊣v)⊢w − u⊣(v⊢w)) in ambient coordinates."""
    return scale(QUARTER, sub(d.right.evaluate(d.left.evaluate(u, v), w),
                              d.left.evaluate(u, d.right.evaluate(v, w))))


def two_term_assoc_over(d: Dialgebra, degree_one: Subspace, guard: str) -> TwoTermAssoc:
    """
    Build (D ⊕ V, μ1, μ2, μ3) for a subspace V that should absorb the mixed
    μ2 placements and all μ3 values.

    Args:
        d: The dialgebra
        degree_one: V, expressed in its canonical basis
        guard: Guard name raised when a value leaves V

    Raises:
        GuardFailure: If a mixed μ2 value or a μ3 value is not in V
    """
    n, m = d.dim, degree_one.dim
    basis = [basis_vector(n, i) for i in range(n)]
    lifted = degree_one.vectors()

    def into(v: Vector, what: str) -> Vector:
        if not degree_one.contains(v):
            raise GuardFailure(guard, f"{what} is not in the degree-1 subspace")
        return degree_one.coordinates(v)

    mu2_00 = BilinearMap.from_function((n, n, n), lambda i, j: mu2_value(d, basis[i], basis[j]))
    mu2_01 = BilinearMap.from_function(
        (n, m, m), lambda i, s: into(mu2_value(d, basis[i], lifted[s]), f"mu2(e{i}, c{s})"))
    mu2_10 = BilinearMap.from_function(
        (m, n, m), lambda s, i: into(mu2_value(d, lifted[s], basis[i]), f"mu2(c{s}, e{i})"))
    mu3 = TrilinearMap.from_function(
        (n, n, n, m),
        lambda i, j, k: into(mu3_value(d, basis[i], basis[j], basis[k]), f"mu3(e{i}, e{j}, e{k})"))
    return TwoTermAssoc(n, m, degree_one.inclusion(), mu2_00, mu2_01, mu2_10, mu3)


def associative_2_algebra_from_dialgebra(d: Dialgebra, validate: bool = True) -> TwoTermAssoc:
    """
    The associative 2-algebra on D ⊕ I.

    Args:
        d: A dialgebra
        validate: Check the dialgebra axioms first

    Returns:
        TwoTermAssoc: With A_1 = ideal_I(d) in its canonical coordinates

    Raises:
        InvalidStructureError: If validate is set and d is not a dialgebra
        GuardFailure: "i-membership" if a mixed μ2 or a μ3 value leaves I
    """
    if validate:
        require_dialgebra(d)
    t = two_term_assoc_over(d, ideal_I(d), "i-membership")
    logger.info(f"Associative 2-algebra on D ⊕ I with dims ({t.dim0}, {t.dim1})")
    return t


def check_associative_2_algebra(t: TwoTermAssoc) -> AxiomReport:
    """
    Evaluate the seven associative 2-algebra identities on basis tuples.

    x, y, z, w run over the degree-0 basis and a, b over the degree-1 basis.
    Identities valued in A_1 are compared in A_1 coordinates, the others in A_0.

    - (i)   μ1μ2(x,a) = μ2(x,μ1a), μ1μ2(a,x) = μ2(μ1a,x)
    - (ii)  μ2(μ1a,b) = μ2(a,μ1b)
    - (iii) μ2(μ2(x,y),z) − μ2(x,μ2(y,z)) = μ1μ3(x,y,z)
    - (iv)  μ2(μ2(a,x),y) − μ2(a,μ2(x,y)) = μ3(μ1a,x,y)
    - (v)   μ2(μ2(x,a),y) − μ2(x,μ2(a,y)) = μ3(x,μ1a,y)
    - (vi)  μ2(μ2(x,y),a) − μ2(x,μ2(y,a)) = μ3(x,y,μ1a)
    - (vii) μ3(μ2(x,y),z,w) − μ3(x,μ2(y,z),w) + μ3(x,y,μ2(z,w))
            = μ2(μ3(x,y,z),w) + μ2(x,μ3(y,z,w))
    """
    builder = ReportBuilder("associative_2_algebra", ASSOCIATIVE_2_AXIOMS)
    m1, m2, m3 = t.m1, t.m2, t.m3
    xs, cs = t.space.basis(0), t.space.basis(1)

    def check(axiom, index, lhs, rhs):
        builder.compare(axiom, index, lhs.vec, rhs.vec)

    for (s, x), (p, a) in itertools.product(enumerate(xs), enumerate(cs)):
        check("identity-i", (0, s, p), m1(m2(x, a)), m2(x, m1(a)))
        check("identity-i", (1, p, s), m1(m2(a, x)), m2(m1(a), x))

    for (p, a), (q, b) in itertools.product(enumerate(cs), repeat=2):
        check("identity-ii", (p, q), m2(m1(a), b), m2(a, m1(b)))

    for (s, x), (t_, y), (u, z) in itertools.product(enumerate(xs), repeat=3):
        check("identity-iii", (s, t_, u),
              combine((1, m2(m2(x, y), z)), (-1, m2(x, m2(y, z)))), m1(m3(x, y, z)))

    for (s, x), (t_, y), (p, a) in itertools.product(enumerate(xs), enumerate(xs), enumerate(cs)):
        check("identity-iv", (p, s, t_),
              combine((1, m2(m2(a, x), y)), (-1, m2(a, m2(x, y)))), m3(m1(a), x, y))
        check("identity-v", (s, p, t_),
              combine((1, m2(m2(x, a), y)), (-1, m2(x, m2(a, y)))), m3(x, m1(a), y))
        check("identity-vi", (s, t_, p),
              combine((1, m2(m2(x, y), a)), (-1, m2(x, m2(y, a)))), m3(x, y, m1(a)))

    for (s, x), (t_, y), (u, z), (v, w) in itertools.product(enumerate(xs), repeat=4):
        lhs = combine((1, m3(m2(x, y), z, w)), (-1, m3(x, m2(y, z), w)), (1, m3(x, y, m2(z, w))))
        rhs = combine((1, m2(m3(x, y, z), w)), (1, m2(x, m3(y, z, w))))
        check("identity-vii", (s, t_, u, v), lhs, rhs)

    return builder.build()
