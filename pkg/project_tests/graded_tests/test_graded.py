"""
Graded Structures Tests

This module tests filtrations and the graded constructions including:
- Power and trivial filtrations, and pinned filtration failures
- The associated graded of the degree filtration on span{t, t², t³}
- The graded checker on a deliberately broken structure
- The Gerstenhaber bracket and its guards
- Property tests on generated filtered dialgebras (hypothesis)
"""

import sys
from pathlib import Path

# Fix Unicode encoding for Windows terminal
if sys.platform == "win32":
    sys.stdout.reconfigure(encoding='utf-8')
    sys.stderr.reconfigure(encoding='utf-8')

# Add the project root to the path
sys.path.insert(0, str(Path(__file__).parent.parent.parent))

from hypothesis import given, settings, strategies as st

from algebra_core import BilinearMap, GuardFailure
from constructions import InstanceGenerator, t3_dialgebra, truncated_polynomial
from graded import (
    FilteredDialgebra, GradedAlgebraStructure, associated_graded, check_filtration,
    check_graded_poisson_dialgebra, gerstenhaber_from_filtered, is_gr_commutative, power_filtration,
    trivial_filtration,
)


def degree_filtration() -> FilteredDialgebra:
    """D_i = span{t^k : k ≤ i} on span{t, t², t³}."""
    d = truncated_polynomial(3).as_dialgebra()
    return FilteredDialgebra.from_spans(d, [
        [],
        [(1, 0, 0)],
        [(1, 0, 0), (0, 1, 0)],
        [(1, 0, 0), (0, 1, 0), (0, 0, 1)],
    ])


def test_filtrations():
    """Test filtration construction and checking."""
    print("🔍 TESTING FILTRATIONS")
    print("-" * 50)

    fd = power_filtration(t3_dialgebra(), 2)
    assert [s.dim for s in fd.steps] == [0, 1, 3]
    assert check_filtration(fd).passed
    assert check_filtration(trivial_filtration(t3_dialgebra())).passed
    assert check_filtration(degree_filtration()).passed
    print("✅ Power, trivial and degree filtrations pass")

    # D_0 = span{a, b} is not closed: a·b = c
    d = t3_dialgebra()
    bad = FilteredDialgebra.from_spans(d, [[(1, 0, 0), (0, 1, 0)], [(1, 0, 0), (0, 1, 0), (0, 0, 1)]])
    report = check_filtration(bad)
    assert report.first_violation.axiom == "left-containment"
    assert report.first_violation.indices == (0, 0, 0, 1)
    print("✅ Pinned containment failure reported")

    short = FilteredDialgebra.from_spans(d, [[(0, 0, 1)]])
    assert "top-is-full" in check_filtration(short).failed_axioms()
    print("✅ Proper top step rejected")


def test_associated_graded():
    """Test Gr of the degree filtration."""
    print("🔍 TESTING ASSOCIATED GRADED")
    print("-" * 50)

    g = associated_graded(degree_filtration())
    assert g.component_dims == (0, 1, 1, 1)
    assert g.degree == 0
    # t̄·t̄ = t̄² and [t̄, t̄] = t̄t̄ + t̄t̄ in degree 2
    assert g.left[(1, 1)].product(0, 0) == (1,)
    assert g.bracket[(1, 1)].product(0, 0) == (2,)
    assert is_gr_commutative(g)
    report = check_graded_poisson_dialgebra(g, 0)
    assert report.passed, report.summary()
    print("✅ Gr is a graded Poisson dialgebra of degree 0")

    assert not check_graded_poisson_dialgebra(g, 1).passed
    assert check_graded_poisson_dialgebra(g, 1).failed_axioms() == ["degree-bookkeeping"]
    print("✅ Wrong degree caught by bookkeeping")


def test_broken_graded_structure():
    """Test that the graded checker catches a non-associative product."""
    print("🔍 TESTING BROKEN GRADED STRUCTURE")
    print("-" * 50)

    # x·x = y, y·x = x in a single degree
    product = BilinearMap.from_entries((2, 2, 2), [(0, 0, 1, 1), (1, 0, 0, 1)])
    g = GradedAlgebraStructure((2,), 0, {(0, 0): product}, {(0, 0): product}, {})
    report = check_graded_poisson_dialgebra(g, 0)
    assert "left-associative" in report.failed_axioms()
    assert "graded-leibniz" not in report.failed_axioms()
    print("✅ Non-associative graded product rejected")


def test_gerstenhaber():
    """Test the degree −1 bracket on Gr."""
    print("🔍 TESTING GERSTENHABER BRACKET")
    print("-" * 50)

    g = gerstenhaber_from_filtered(power_filtration(truncated_polynomial(3).as_dialgebra(), 2))
    assert g.degree == 1
    assert g.component_dims == (1, 1, 1)
    assert check_graded_poisson_dialgebra(g, 1).passed
    print("✅ Power filtration of span{t, t², t³} gives a degree-1 structure")

    try:
        gerstenhaber_from_filtered(trivial_filtration(t3_dialgebra()))
        assert False, "Expected the gr-commutative guard"
    except GuardFailure as e:
        assert e.guard == "gr-commutative"
    print("✅ Non-commutative Gr rejected")

    try:
        gerstenhaber_from_filtered(degree_filtration())
        assert False, "Expected a representative-change guard"
    except GuardFailure as e:
        assert e.guard == "gerstenhaber-bracket-degree-well-defined"
    print("✅ Bracket depending on representatives rejected")


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 3))
def test_generated_filtrations(seed, levels):
    """Power filtrations of generated dialgebras give degree-0 graded structures."""
    fd = power_filtration(InstanceGenerator(seed, max_dim=4).dialgebra(), levels)
    assert check_filtration(fd).passed
    g = associated_graded(fd)
    assert sum(g.component_dims) == fd.base.dim
    assert check_graded_poisson_dialgebra(g, 0).passed


def main():
    """Run all graded structure tests."""
    print("🧪 GRADED STRUCTURES TESTS")
    print("=" * 70)

    try:
        test_filtrations()
        test_associated_graded()
        test_broken_graded_structure()
        test_gerstenhaber()
        print("🔍 TESTING GENERATED FILTRATIONS (hypothesis)")
        print("-" * 50)
        test_generated_filtrations()
        print("✅ Associated graded valid on generated filtrations")

        print("\n🎉 ALL GRADED STRUCTURES TESTS PASSED!")
    except Exception as e:
        print(f"\n❌ Test failed: {e}")
        import traceback
        traceback.print_exc()
        sys.exit(1)


if __name__ == "__main__":
    main()
