"""
Exact Linear Algebra Tests

This module tests the rational linear algebra layer including:
- Rational literal parsing and canonical formatting
- Vector arithmetic and ambient-dimension checks
- Row reduction, rank and particular solutions
- Kernels, intersections, sums and quotients of subspaces
- Property tests (hypothesis) for rank-nullity and quotient laws
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

from exact_linalg import (
    AmbientMismatchError, Matrix, RationalParseError, Subspace, add, basis_vector, format_rational, intersect,
    is_zero, kernel, linear_combination, parse_rational, quotient_data, rank, rref, scale, solve_particular,
    subspace_sum, to_fraction,
)


def small_matrices(max_rows: int = 4, max_cols: int = 4):
    """Matrices with small integer entries."""
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(-3, 3), min_size=c, max_size=c), min_size=r, max_size=r)
        )
    ).map(Matrix.from_rows)


def test_rationals():
    """Test rational parsing and formatting."""
    print("🔍 TESTING RATIONAL LITERALS")
    print("-" * 50)

    assert parse_rational("3") == Fraction(3)
    assert parse_rational("-1/2") == Fraction(-1, 2)
    assert parse_rational("4/6") == Fraction(2, 3)
    assert format_rational(Fraction(4, 6)) == "2/3"
    assert format_rational(Fraction(-5)) == "-5"
    print("✅ Literals parse and format canonically")

    for bad in ("1/0", "abc", "1.5", ""):
        try:
            parse_rational(bad)
            assert False, f"Expected RationalParseError for {bad!r}"
        except RationalParseError:
            pass
    print("✅ Malformed literals and zero denominators rejected")

    assert to_fraction("7/2") == Fraction(7, 2)
    assert to_fraction(3) == Fraction(3)
    try:
        to_fraction(0.5)
        assert False, "Floats must be refused"
    except TypeError:
        pass
    print("✅ Coercion accepts ints and literals, refuses floats")


def test_vectors():
    """Test vector arithmetic."""
    print("🔍 TESTING VECTORS")
    print("-" * 50)

    e0, e1 = basis_vector(2, 0), basis_vector(2, 1)
    assert add(e0, e1) == (1, 1)
    assert scale(Fraction(1, 2), e1) == (0, Fraction(1, 2))
    assert linear_combination(2, [(2, e0), (-1, e1)]) == (2, -1)
    assert linear_combination(3, []) == (0, 0, 0)
    assert is_zero(linear_combination(2, [(1, e0), (-1, e0)]))
    print("✅ Sums, scalings and combinations exact")

    try:
        add(e0, basis_vector(3, 0))
        assert False, "Expected AmbientMismatchError"
    except AmbientMismatchError:
        pass
    print("✅ Mismatched ambient dimensions rejected")


def test_row_reduction():
    """Test RREF, rank and particular solutions."""
    print("🔍 TESTING ROW REDUCTION")
    print("-" * 50)

    m = Matrix.from_rows([[1, 2], [2, 4]])
    reduced, pivots = rref(m)
    assert pivots == (0,)
    assert reduced.row(0) == (1, 2)
    assert reduced.row(1) == (0, 0)
    assert rank(m) == 1
    assert rank(Matrix.zeros(3, 2)) == 0
    assert rank(Matrix.identity(3)) == 3
    print("✅ RREF and rank correct")

    x = solve_particular(Matrix.from_rows([[1, 1], [1, -1]]), (3, 1))
    assert x == (2, 1)
    try:
        solve_particular(m, (1, 0))
        assert False, "Expected an inconsistent system"
    except ValueError:
        pass
    print("✅ Particular solutions and inconsistency detection")


def test_subspaces():
    """Test kernels, intersections and quotients."""
    print("🔍 TESTING SUBSPACES")
    print("-" * 50)

    k = kernel(Matrix.from_rows([[1, 2], [2, 4]]))
    assert k.dim == 1
    assert k.contains((-2, 1))
    assert not k.contains((1, 0))
    print("✅ Kernel computed")

    s1 = Subspace.from_spanning(3, [(1, 0, 0), (0, 1, 0)])
    s2 = Subspace.from_spanning(3, [(0, 1, 0), (0, 0, 1)])
    meet = intersect(s1, s2)
    assert meet.dim == 1 and meet.contains((0, 5, 0))
    assert subspace_sum(s1, s2).dim == 3
    assert Subspace.from_spanning(3, []).dim == 0
    assert s1.coordinates((2, 3, 0)) == (2, 3)
    print("✅ Intersections, sums and coordinates")

    q = quotient_data(3, Subspace.from_spanning(3, [(1, 1, 0)]))
    assert q.quotient_dim == 2
    assert q.project((1, 1, 0)) == (0, 0)
    assert q.projection.compose(q.section) == Matrix.identity(2)
    print("✅ Quotient projection kills the kernel and splits")


@settings(max_examples=60, deadline=None)
@given(small_matrices())
def test_rank_nullity(m):
    """rank + nullity = number of columns, and kernel vectors are killed."""
    k = kernel(m)
    assert rank(m) + k.dim == m.cols
    for v in k.vectors():
        assert is_zero(m.apply(v))


@settings(max_examples=60, deadline=None)
@given(small_matrices(3, 4))
def test_quotient_laws(m):
    """The projection of a quotient kills the kernel and has the section as right inverse."""
    space = Subspace.from_spanning(m.cols, m.row_vectors())
    q = quotient_data(m.cols, space)
    assert q.quotient_dim + space.dim == m.cols
    for v in space.vectors():
        assert is_zero(q.project(v))
    assert q.projection.compose(q.section) == Matrix.identity(q.quotient_dim)


def main():
    """Run all exact linear algebra tests."""
    print("🧪 EXACT LINEAR ALGEBRA TESTS")
    print("=" * 70)

    try:
        test_rationals()
        test_vectors()
        test_row_reduction()
        test_subspaces()
        print("🔍 TESTING PROPERTIES (hypothesis)")
        print("-" * 50)
        test_rank_nullity()
        test_quotient_laws()
        print("✅ Rank-nullity and quotient laws hold")

        print("\n🎉 ALL EXACT LINEAR ALGEBRA TESTS PASSED!")
    except Exception as e:
        print(f"\n❌ Test failed: {e}")
        import traceback
        traceback.print_exc()
        sys.exit(1)


if __name__ == "__main__":
    main()
