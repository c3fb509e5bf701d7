import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from centralizer.arith import GF, QQ, ZZ
from centralizer.core import semicirculant_basis
from centralizer.frobenius import (GroupSpec, build_Eij, check_frobenius_system,
                                   check_separability, cycle_type, dimension_obstruction,
                                   find_free_point, group_split_witness, group_trace_system,
                                   jordan_trace_system, parse_cycles, perm_free_point_criterion,
                                   permutation_matrix, semisimple_predicate,
                                   separability_element, split_predicate, split_solver)
from centralizer.jordan import JordanType
from centralizer.linalg import DenseMatrix, matrix_unit

from conftest import jordan_types


def unit(ring, r, c, rows, cols):
    return DenseMatrix.from_entries(ring, rows, cols, {(r - 1, c - 1): 1})


def test_parse_cycles():
    assert parse_cycles("(1 2 3)(4 5)") == [(1, 2, 3), (4, 5)]
    assert parse_cycles("(1,2)") == [(1, 2)]
    assert parse_cycles("()") == []
    for bad in ("(1 2", "(1 1)", "(1 2)(2 3)", "(a b)", "x(1 2)"):
        with pytest.raises(ValueError):
            parse_cycles(bad)


def test_permutation_matrix_convention():
    m = permutation_matrix(QQ, (2, 3, 1))
    assert m == matrix_unit(QQ, 3, 1, 2) + matrix_unit(QQ, 3, 2, 3) + matrix_unit(QQ, 3, 3, 1)
    assert cycle_type((2, 1, 4, 5, 3)) == [3, 2]


def test_group_closure():
    g = GroupSpec.from_permutations(QQ, ["(1 2 3)", "(1 2)"])
    assert g.order == 6 and g.elements[0] == DenseMatrix.identity(QQ, 3)
    assert GroupSpec.from_permutations(QQ, ["(1 2)"], degree=4).n == 4
    with pytest.raises(ValueError):
        GroupSpec.from_permutations(QQ, ["(1 5)"], degree=3)


def test_from_matrices_validation():
    swap = permutation_matrix(QQ, (2, 1))
    ident = DenseMatrix.identity(QQ, 2)
    assert GroupSpec.from_matrices(QQ, [swap, ident]).elements[0] == ident
    cyc = permutation_matrix(QQ, (2, 3, 1))
    with pytest.raises(ValueError, match="closed"):
        GroupSpec.from_matrices(QQ, [DenseMatrix.identity(QQ, 3), cyc])
    with pytest.raises(ValueError, match="identity"):
        GroupSpec.from_matrices(QQ, [swap])
    with pytest.raises(ValueError, match="invertible"):
        GroupSpec.from_matrices(QQ, [DenseMatrix.zeros(QQ, 2)])


def test_free_points():
    assert find_free_point(GroupSpec.from_permutations(QQ, ["(1 2 3)"])) == 1
    assert find_free_point(GroupSpec.from_permutations(QQ, ["(2 3)"])) == 2
    assert find_free_point(GroupSpec.from_permutations(QQ, ["(1 2)(3 4 5)"])) is None
    assert find_free_point(GroupSpec.from_permutations(QQ, ["(1 2 3)", "(1 2)"])) is None
    assert perm_free_point_criterion([2, 2, 1])
    assert perm_free_point_criterion([6, 3, 2])
    assert not perm_free_point_criterion([2, 3])
    with pytest.raises(ValueError):
        perm_free_point_criterion([])


@given(st.lists(st.integers(1, 6), min_size=1, max_size=3))
def test_free_point_criterion_matches_search(parts):
    cycles, start = "", 1
    for k in parts:
        if k > 1:
            cycles += "(" + " ".join(map(str, range(start, start + k))) + ")"
        start += k
    g = GroupSpec.from_permutations(QQ, [cycles or "()"], degree=sum(parts))
    assert perm_free_point_criterion(parts) == (find_free_point(g) is not None)


def test_order_two_trace():
    g = GroupSpec.from_permutations(QQ, ["(1 2)"])
    sys_ = group_trace_system(g)
    assert sys_.apply(matrix_unit(QQ, 2, 1, 1)) == DenseMatrix.identity(QQ, 2)
    assert check_frobenius_system(sys_).passed
    z, ok = group_split_witness(g, sys_)
    assert ok and z == DenseMatrix.identity(QQ, 2).scale(QQ.coerce("1/2"))


def test_trivial_group():
    g = GroupSpec.from_permutations(QQ, ["()"], degree=3)
    sys_ = group_trace_system(g)
    assert len(sys_.subalgebra) == 9
    assert check_frobenius_system(sys_).passed
    assert group_split_witness(g, sys_)[1]


@pytest.mark.parametrize("ring,unit_order", [(QQ, True), (GF(2), True), (GF(3), False), (ZZ, False)])
def test_three_cycle(ring, unit_order):
    g = GroupSpec.from_permutations(ring, ["(1 2 3)"])
    sys_ = group_trace_system(g)
    assert len(g.fixed_algebra_basis()) == 3
    assert check_frobenius_system(sys_).passed
    w = group_split_witness(g, sys_)
    assert (w is not None and w[1]) if unit_order else w is None


def test_no_free_point_refused():
    g = GroupSpec.from_permutations(QQ, ["(1 2)(3 4 5)"])
    with pytest.raises(ValueError, match="free point"):
        group_trace_system(g)
    with pytest.raises(ValueError, match="not free"):
        group_trace_system(GroupSpec.from_permutations(QQ, ["(2 3)"]), point=1)


def test_symmetric_group_mod_three():
    g = GroupSpec.from_permutations(GF(3), ["(1 2 3)", "(1 2)"])
    assert len(g.fixed_algebra_basis()) == 2
    for pt in (1, 2, 3):
        assert not check_frobenius_system(group_trace_system(g, pt, require_free=False)).passed
    assert dimension_obstruction(g.ring, g.fixed_algebra_basis(), 3)
    # over Q the fixed algebra is a product of two fields, so no obstruction
    q = GroupSpec.from_permutations(QQ, ["(1 2 3)", "(1 2)"])
    assert dimension_obstruction(QQ, q.fixed_algebra_basis(), 3) is None


def test_eij_single_block():
    jt = JordanType.single([4])
    e11 = build_Eij(jt, 1, 1, 1)
    g = semicirculant_basis(4, 4, QQ)
    assert e11(unit(QQ, 4, 1, 4, 4)) == g[3]
    assert e11(unit(QQ, 1, 1, 4, 4)) == g[0]
    assert e11(unit(QQ, 2, 1, 4, 4)) == g[1]
    assert e11(unit(QQ, 3, 1, 4, 4)) == g[2]
    assert e11(unit(QQ, 1, 2, 4, 4)).is_zero()


def test_eij_rectangular_values():
    jt = JordanType.single([3, 2])
    e12 = build_Eij(jt, 1, 1, 2)
    g = semicirculant_basis(3, 2, QQ)
    assert e12.rho == 2
    assert e12(unit(QQ, 3, 2, 3, 2)) == g[0]
    assert e12(unit(QQ, 2, 1, 3, 2)) == g[0]
    assert e12(unit(QQ, 3, 1, 3, 2)) == g[1]
    for r, c in ((1, 1), (1, 2), (2, 2)):
        assert e12(unit(QQ, r, c, 3, 2)).is_zero()
    e22 = build_Eij(JordanType.single([3, 1]), 1, 2, 2)
    assert e22.rho < 1 and e22(unit(QQ, 1, 1, 1, 1)).is_zero()


@pytest.mark.parametrize("ring", [QQ, GF(7), ZZ])
def test_jordan_systems_examples(ring):
    for jt in (JordanType.single([3, 2], ring=ring),
               JordanType(ring, [(0, [2, 1]), (1, [1, 1])]),
               JordanType.single([1], [3], ring=ring)):
        sys_ = jordan_trace_system(jt)
        assert check_frobenius_system(sys_).passed
        assert check_separability(jt, sys_, separability_element(jt)).passed


def _dual_identity(sys_, a):
    # sum_i x_i E(y_i a) computed with dense products, apart from the checker
    acc = DenseMatrix.zeros(sys_.ring, sys_.n)
    for x, y in zip(sys_.x, sys_.y):
        acc = acc + x @ sys_.apply(y @ a)
    return acc


@given(jordan_types(rings=(QQ, ZZ, GF(3)), max_n=6), st.integers(0, 10 ** 6))
def test_jordan_system_dual_bases(jt, seed):
    sys_ = jordan_trace_system(jt)
    rng = random.Random(seed)
    a = DenseMatrix(jt.ring, [[jt.ring.coerce(rng.randint(-3, 3)) for _ in range(jt.n)]
                              for _ in range(jt.n)])
    assert _dual_identity(sys_, a) == a
    b = sys_.subalgebra[rng.randrange(len(sys_.subalgebra))]
    assert sys_.apply(b @ a) == b @ sys_.apply(a)
    assert sys_.apply(a @ b) == sys_.apply(a) @ b


def test_broken_system_detected():
    jt = JordanType.single([2, 1])
    sys_ = jordan_trace_system(jt)
    sys_.images[(0, 0)] = {(0, 0): 1}
    rep = check_frobenius_system(sys_)
    assert not rep.passed and rep.counterexample


def test_separability_element_shape():
    d = separability_element(JordanType.single([2, 1]))
    assert d == DenseMatrix(QQ, [[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    wrong = DenseMatrix.identity(QQ, 3)
    jt = JordanType.single([2, 1])
    assert not check_separability(jt, jordan_trace_system(jt), wrong).passed


def test_split_examples():
    assert split_solver(JordanType.single([1], [3])).witness is not None
    assert split_solver(JordanType(QQ, [(0, [1, 1]), (2, [(1, 1)])])).agree
    res = split_solver(JordanType.single([2]))
    assert res.witness is None and not res.predicate and res.agree
    assert not split_predicate(JordanType(QQ, [(0, [1]), (1, [2])]))
    with pytest.raises(ValueError):
        split_solver(JordanType.single([1], ring=ZZ))


def test_semisimple_examples():
    assert semisimple_predicate(JordanType.single([1], [4]))
    assert not semisimple_predicate(JordanType.single([2, 1]))
    with pytest.raises(ValueError):
        semisimple_predicate(JordanType.single([1], ring=ZZ))
