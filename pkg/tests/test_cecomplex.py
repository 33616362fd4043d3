import pytest

from solvcohom import (
    FiniteComplex,
    adjoint_representation,
    build_invariant_complex,
    cohomology,
    infer_weights,
    nilshadow,
    restrict_complex,
    trivial_representation,
)
from solvcohom.cecomplex import (
    ModuleAction,
    ce_differential,
    ce_image,
    degree_basis,
    module_basis_names,
    monomial_label,
    subset_position,
    wedge_insert_sign,
)
from solvcohom.errors import NilshadowError, SelectionClosureError, ValidationFailure
from solvcohom.linalg import ExactMatrix
from solvcohom.scalars import MINUS_ONE, ONE, ZERO, gauss


def test_degree_basis_lex_order():
    assert degree_basis(3, 0) == ((),)
    assert degree_basis(3, 1) == ((0,), (1,), (2,))
    assert degree_basis(3, 2) == ((0, 1), (0, 2), (1, 2))
    assert degree_basis(4, 4) == ((0, 1, 2, 3),)
    pos = subset_position(4, 2)
    assert pos[(0, 1)] == 0
    assert pos[(2, 3)] == len(degree_basis(4, 2)) - 1


def test_wedge_insert_sign():
    # x2 into x0^x1 passes two factors: sign +1 at the end.
    assert wedge_insert_sign(2, (0, 1)) == 1
    assert wedge_insert_sign(0, (1, 2)) == 1
    assert wedge_insert_sign(1, (0, 2)) == -1
    assert wedge_insert_sign(5, ()) == 1


def plain_action(g):
    return ModuleAction(g, trivial_representation(g), None)


def test_heisenberg_one_form_differential(heisenberg):
    # dz* = -x*^y*; dx* = dy* = 0.
    d1 = ce_differential(heisenberg, plain_action(heisenberg), 1)
    # Degree-2 rows in lex order: x^y, x^z, y^z.
    assert d1.entry(0, 2) == MINUS_ONE
    assert all(
        d1.entry(r, c) == ZERO for r in range(3) for c in range(3) if (r, c) != (0, 2)
    )


def test_split_3d_one_form_signs(split_3d):
    # de2* = -e1*^e2*, de3* = +e1*^e3*.
    d1 = ce_differential(split_3d, plain_action(split_3d), 1)
    assert d1.entry(0, 1) == MINUS_ONE
    assert d1.entry(1, 2) == ONE
    assert d1.entry(2, 0) == ZERO


def test_ce_image_action_term(split_3d):
    # Twist by mu = (1): d(1 (x) v) gains a mu(e1) e1* term.
    action = ModuleAction(split_3d, trivial_representation(split_3d), (ONE,))
    image = ce_image(split_3d, action, (), 0)
    assert image[((0,), 0)] == ONE


def test_heisenberg_ce_betti(heisenberg):
    rep = trivial_representation(heisenberg)
    w = infer_weights(heisenberg, rep)
    ic = build_invariant_complex(heisenberg, rep, w)
    assert ic.complex.dims == (1, 3, 3, 1)
    res = cohomology(ic.complex)
    assert res.betti == (1, 2, 2, 1)
    assert res.euler_characteristic() == 0


def test_heisenberg_representatives(heisenberg):
    rep = trivial_representation(heisenberg)
    ic = build_invariant_complex(heisenberg, rep, infer_weights(heisenberg, rep))
    res = cohomology(ic.complex, representatives=True)
    # z* is not closed, so H^1 is spanned by x* and y*.
    d1 = ic.complex.differentials[1]
    for vec in res.representatives[1]:
        assert all(c == ZERO for c in d1.apply(vec))
        assert vec[2] == ZERO


def plain_ce_complex(g):
    """Untwisted Chevalley-Eilenberg complex with trivial coefficients."""
    action = plain_action(g)
    dims = [len(degree_basis(g.dim, p)) for p in range(g.dim + 1)]
    diffs = [ce_differential(g, action, p) for p in range(g.dim)]
    return FiniteComplex(dims, diffs)


def test_split_3d_plain_ce_betti(split_3d):
    # Untwisted: the +-1 weight lines cancel, leaving (1, 1, 1, 1).
    res = cohomology(plain_ce_complex(split_3d))
    assert res.betti == (1, 1, 1, 1)


def test_split_3d_invariant_complex_betti(split_3d):
    # Per-tag twisting makes every block contribute: (1, 3, 3, 1).
    rep = trivial_representation(split_3d)
    ic = build_invariant_complex(split_3d, rep, infer_weights(split_3d, rep))
    res = cohomology(ic.complex)
    assert res.betti == (1, 3, 3, 1)


def test_adjoint_complex_squares_to_zero(split_6d):
    rep = adjoint_representation(split_6d)
    ic = build_invariant_complex(split_6d, rep, infer_weights(split_6d, rep))
    ic.complex.check_complex()  # raises on failure
    assert ic.complex.dims == (6, 36, 90, 120, 90, 36, 6)


def test_finite_complex_shape_checks():
    with pytest.raises(ValidationFailure):
        FiniteComplex((1, 2), ())
    with pytest.raises(ValidationFailure):
        FiniteComplex((1, 2), (ExactMatrix.zero(3, 1),))
    fc = FiniteComplex((2, 1), (ExactMatrix.zero(1, 2),), labels=[("a", "b"), ("c",)])
    assert fc.top_degree == 1
    assert fc.euler_characteristic() == 1


def test_check_complex_catches_bad_differential():
    d0 = ExactMatrix.from_rows([[ONE]])
    d1 = ExactMatrix.from_rows([[ONE]])
    fc = FiniteComplex((1, 1, 1), (d0, d1))
    with pytest.raises(ValidationFailure, match="degree 0"):
        fc.check_complex()


def test_restrict_complex_closure(split_3d):
    fc = plain_ce_complex(split_3d)
    # Keeping e2* in degree 1 but dropping e1*^e2* in degree 2 is not
    # closed: d(e2*) = -e1*^e2*.
    bad_keep = [(0,), (1,), (2,), ()]
    with pytest.raises(SelectionClosureError, match="degree 1"):
        restrict_complex(fc, bad_keep)
    # The zero-weight block {1, e1*, e2*^e3*, e1*^e2*^e3*} is closed.
    good_keep = [(0,), (0,), (2,), (0,)]
    sub = restrict_complex(fc, good_keep)
    assert sub.dims == (1, 1, 1, 1)
    assert cohomology(sub).betti == (1, 1, 1, 1)


def test_labels(heisenberg):
    rep = trivial_representation(heisenberg)
    names = module_basis_names(heisenberg, rep)
    assert names == ("1",)
    assert monomial_label(heisenberg, (0, 2), 0, names) == "x*^z* (x) 1"
    assert monomial_label(heisenberg, (), 0, names) == "1 (x) 1"
    ad_names = module_basis_names(heisenberg, adjoint_representation(heisenberg))
    assert ad_names == ("x", "y", "z")


def test_nilshadow_flattens_split_algebras(split_3d, split_6d):
    for g in (split_3d, split_6d):
        rep = trivial_representation(g)
        w = infer_weights(g, rep)
        shadow = nilshadow(g, w.algebra_weights)
        assert shadow.dim == g.dim
        assert shadow.bracket_table() == {}  # abelian
        assert shadow.nilradical == frozenset(range(g.dim))


def test_nilshadow_fixes_nilpotent_input(heisenberg):
    rep = trivial_representation(heisenberg)
    w = infer_weights(heisenberg, rep)
    shadow = nilshadow(heisenberg, w.algebra_weights)
    assert shadow.bracket_table() == heisenberg.bracket_table()
    assert shadow.basis == heisenberg.basis


def test_nilshadow_idempotent(split_6d):
    rep = trivial_representation(split_6d)
    w = infer_weights(split_6d, rep)
    shadow = nilshadow(split_6d, w.algebra_weights)
    zero_w = tuple(() for _ in range(shadow.dim))
    again = nilshadow(shadow, zero_w)
    assert again.bracket_table() == shadow.bracket_table()


def test_nilshadow_rejects_inconsistent_weights(split_3d):
    # Wrong sign on the e3 weight leaves [e1, e3] = -2 e3 in the shadow.
    bad = ((ZERO,), (ONE,), (ONE,))
    with pytest.raises(NilshadowError):
        nilshadow(split_3d, bad)
    with pytest.raises(ValidationFailure):
        nilshadow(split_3d, ((ZERO,),))  # arity


def test_cohomology_of_zero_complex():
    fc = FiniteComplex((2,), ())
    res = cohomology(fc)
    assert res.betti == (2,)
