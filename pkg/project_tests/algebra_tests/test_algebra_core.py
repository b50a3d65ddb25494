"""
Algebra Core Tests

This module tests structure constants and the axiom checkers including:
- BilinearMap construction, evaluation and shape errors
- Dialgebra checks on N2, T3 and a pinned failing fixture
- Formulation cross-check between the two dialgebra axiom systems
- Leibniz, Lie and Poisson checkers with pinned negative controls
- Homomorphism and bimodule checks
- Induced Leibniz and Poisson dialgebra structures on generated dialgebras
"""

import sys
from fractions import Fraction
from pathlib import Path

# Fix Unicode encoding for Windows terminal
if sys.platform == "win32":
    sys.stdout.reconfigure(encoding='utf-8')
    sys.stderr.reconfigure(encoding='utf-8')

# Add the project root to the path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from hypothesis import given, settings, strategies as st

from algebra_core import (
    BilinearMap, Dialgebra, LeibnizAlgebra, ShapeMismatchError, StructureKind, check_associative,
    check_dialgebra, check_dialgebra_alternative, check_dialgebra_bimodule, check_homomorphism, check_leibniz,
    check_lie_algebra, check_poisson_algebra, check_poisson_bimodule, check_poisson_dialgebra,
    check_associative_bimodule, check_poisson_dialgebra_bimodule, PoissonDialgebraBimodule,
    regular_associative_bimodule, regular_dialgebra_bimodule, regular_poisson_bimodule,
    regular_poisson_dialgebra_bimodule,
)
from constructions import (
    InstanceGenerator, induced_leibniz, induced_poisson_dialgebra, n2_dialgebra, sl2_lie, t3_algebra,
    t3_dialgebra, truncated_polynomial,
)
from exact_linalg import Matrix


def n2_bad() -> Dialgebra:
    """N2 with the extra entry x⊢y = x."""
    d = n2_dialgebra()
    return Dialgebra(2, d.left, BilinearMap.from_entries((2, 2, 2), [(0, 1, 0, 1)]))


def test_bilinear_maps():
    """Test structure-constant tensors."""
    print("🔍 TESTING BILINEAR MAPS")
    print("-" * 50)

    m = BilinearMap.from_entries((2, 2, 2), [(0, 1, 1, "1/2"), (1, 1, 0, 3)])
    assert m.evaluate((1, 0), (0, 1)) == (0, Fraction(1, 2))
    assert m.evaluate((1, 1), (1, 1)) == (3, Fraction(1, 2))
    assert m.entries() == [(0, 1, 1, Fraction(1, 2)), (1, 1, 0, Fraction(3))]
    assert m.dim == 2
    print("✅ Sparse entries build and evaluate exactly")

    try:
        BilinearMap.from_entries((2, 2, 2), [(0, 0, 2, 1)])
        assert False, "Expected ShapeMismatchError"
    except ShapeMismatchError:
        pass
    try:
        m.evaluate((1, 0, 0), (1, 0))
        assert False, "Expected ShapeMismatchError"
    except ShapeMismatchError:
        pass
    print("✅ Out-of-range entries and bad arguments rejected")


def test_dialgebra_checks():
    """Test the dialgebra checker on fixtures."""
    print("🔍 TESTING DIALGEBRA CHECKS")
    print("-" * 50)

    for name, d in (("N2", n2_dialgebra()), ("T3", t3_dialgebra()), ("zero", Dialgebra.zero(3))):
        report = check_dialgebra(d)
        assert report.passed, f"{name}: {report.summary()}"
        assert check_dialgebra_alternative(d).passed
    print("✅ N2, T3 and the zero dialgebra pass both formulations")

    report = check_dialgebra(n2_bad())
    assert not report.passed
    first = report.first_violation
    assert first.axiom == "left-absorbs-right"
    assert first.indices == (0, 0, 1)
    assert first.lhs == (0, 0) and first.rhs == (0, 1)
    assert "formulation-defect" not in report.failed_axioms()
    print(f"✅ Pinned failing fixture: {report.summary()}")

    again = check_dialgebra(n2_bad())
    assert again == report
    print("✅ Reports are deterministic")


def test_bracket_checks():
    """Test Leibniz, Lie and Poisson checkers."""
    print("🔍 TESTING BRACKET CHECKS")
    print("-" * 50)

    sl2 = sl2_lie()
    assert check_lie_algebra(sl2.dim, sl2.bracket).passed
    assert check_leibniz(LeibnizAlgebra(3, sl2.bracket)).passed
    assert check_poisson_algebra(sl2.dim, sl2.product, sl2.bracket).passed
    print("✅ sl2 passes Lie, Leibniz and Poisson checks")

    # [e0,e0] = e1, [e1,e0] = e0 fails the Leibniz identity first at (0,1,0)
    bad = LeibnizAlgebra(2, BilinearMap.from_entries((2, 2, 2), [(0, 0, 1, 1), (1, 0, 0, 1)]))
    report = check_leibniz(bad)
    assert not report.passed
    assert report.first_violation.axiom == "leibniz-identity"
    assert report.first_violation.indices == (0, 1, 0)
    assert report.first_violation.lhs == (0, 0)
    assert report.first_violation.rhs == (0, 1)
    print("✅ Pinned Leibniz violation reported")

    symmetric = BilinearMap.from_entries((2, 2, 2), [(0, 1, 0, 1), (1, 0, 0, 1)])
    lie = check_lie_algebra(2, symmetric)
    assert "antisymmetry" in lie.failed_axioms()
    assert lie.first_violation.indices == (0, 1)
    print("✅ Symmetric bracket fails antisymmetry")

    assert check_associative(3, t3_algebra().product).passed
    assert check_associative(3, truncated_polynomial(3).product).passed
    # x·x = y, y·x = x is not associative
    nonassoc = BilinearMap.from_entries((2, 2, 2), [(0, 0, 1, 1), (1, 0, 0, 1)])
    assert not check_associative(2, nonassoc).passed
    print("✅ Associativity checker separates fixtures")


def test_homomorphisms_and_bimodules():
    """Test homomorphism and bimodule checks."""
    print("🔍 TESTING HOMOMORPHISMS AND BIMODULES")
    print("-" * 50)

    d = n2_dialgebra()
    assert check_homomorphism(Matrix.identity(2), d, d, StructureKind.DIALGEBRA).passed
    assert check_homomorphism(Matrix.zeros(2, 2), d, d, "dialgebra").passed
    swap = Matrix.from_rows([[0, 1], [1, 0]])
    assert not check_homomorphism(swap, d, d, StructureKind.DIALGEBRA).passed
    print("✅ Identity and zero maps preserve N2; the swap does not")

    try:
        check_homomorphism(Matrix.identity(3), d, d, StructureKind.DIALGEBRA)
        assert False, "Expected ShapeMismatchError"
    except ShapeMismatchError:
        pass
    print("✅ Wrong-sized maps rejected")

    assert check_dialgebra_bimodule(d, regular_dialgebra_bimodule(d)).passed
    assert check_poisson_bimodule(sl2_lie(), regular_poisson_bimodule(sl2_lie())).passed
    assert check_associative_bimodule(t3_algebra(), regular_associative_bimodule(t3_algebra())).passed
    p = induced_poisson_dialgebra(d)
    assert check_poisson_dialgebra_bimodule(p, regular_poisson_dialgebra_bimodule(p)).passed
    assert check_poisson_dialgebra_bimodule(p, regular_poisson_dialgebra_bimodule(p), strict=True).passed
    print("✅ Regular bimodules pass")

    sl2 = sl2_lie().as_poisson_dialgebra()
    regular = regular_poisson_dialgebra_bimodule(sl2)
    negated = PoissonDialgebraBimodule(regular.dialgebra_part, sl2.bracket.scaled(-1), sl2.bracket.scaled(-1))
    assert not check_poisson_dialgebra_bimodule(sl2, negated).passed
    print("✅ Negated bracket action on sl2 rejected")


def test_induced_structures():
    """Test the induced bracket on fixtures."""
    print("🔍 TESTING INDUCED STRUCTURES")
    print("-" * 50)

    d = n2_dialgebra()
    l = induced_leibniz(d)
    # [x,x] = x⊣x − x⊢x = y
    assert l.bracket.product(0, 0) == (0, 1)
    assert check_leibniz(l).passed
    p = induced_poisson_dialgebra(d)
    assert check_poisson_dialgebra(p).passed
    print("✅ N2 induces a Leibniz algebra and a Poisson dialgebra")


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10_000))
def test_induced_structures_on_generated(seed):
    """Every generated dialgebra induces a Leibniz algebra and a Poisson dialgebra."""
    d = InstanceGenerator(seed, max_dim=4).dialgebra()
    assert check_dialgebra(d).passed
    assert check_leibniz(induced_leibniz(d)).passed
    assert check_poisson_dialgebra(induced_poisson_dialgebra(d)).passed


def main():
    """Run all algebra core tests."""
    print("🧪 ALGEBRA CORE TESTS")
    print("=" * 70)

    try:
        test_bilinear_maps()
        test_dialgebra_checks()
        test_bracket_checks()
        test_homomorphisms_and_bimodules()
        test_induced_structures()
        print("🔍 TESTING GENERATED DIALGEBRAS (hypothesis)")
        print("-" * 50)
        test_induced_structures_on_generated()
        print("✅ Induced structures valid on generated dialgebras")

        print("\n🎉 ALL ALGEBRA CORE TESTS PASSED!")
    except Exception as e:
        print(f"\n❌ Test failed: {e}")
        import traceback
        traceback.print_exc()
        sys.exit(1)


if __name__ == "__main__":
    main()
