"""Weight covectors, Jordan-Chevalley splitting, and the invariant complex.

Weights are additive covectors on the complement coordinates: each basis
vector X_i of the algebra carries lambda_i, each module basis vector v_k
carries lambda'_k. The weight tag of a basis monomial x_I (x) v_k is

    mu_{I,k} = sum_{i in I} lambda_i - lambda'_k.

The invariant complex has one basis element per (I, k); its differential
applies the Chevalley-Eilenberg formula in the module twisted by the
column's own tag. That the result never crosses between distinct tags is
verified entry by entry and is exactly weight additivity of the input
data; a violation raises WeightGradingError.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .cecomplex import (
    FiniteComplex,
    ModuleAction,
    Weight,
    ce_image,
    degree_basis,
    module_basis_names,
    monomial_label,
    subset_position,
    _one_form_differentials,
)
from .errors import (
    ExtendScalarsError,
    ValidationFailure,
    WeightGradingError,
    WeightInferenceError,
)
from .liealg import (
    LieAlgebraData,
    RepresentationData,
    ValidationIssue,
    ValidationReport,
)
from .linalg import ExactMatrix, matrix_inverse
from .scalars import ONE, ZERO, GaussianRational

Poly = tuple[GaussianRational, ...]  # ascending coefficients, no top zeros


# ---------------------------------------------------------------------------
# Exact polynomial arithmetic over Q(i), used by the Jordan splitting.


def poly_trim(coeffs: Sequence[GaussianRational]) -> Poly:
    cs = list(coeffs)
    while cs and not cs[-1]:
        cs.pop()
    return tuple(cs)


def poly_mul(a: Poly, b: Poly) -> Poly:
    if not a or not b:
        return ()
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, ca in enumerate(a):
        if not ca:
            continue
        for j, cb in enumerate(b):
            if cb:
                out[i + j] = out[i + j] + ca * cb
    return poly_trim(out)


def poly_sub(a: Poly, b: Poly) -> Poly:
    n = max(len(a), len(b))
    out = []
    for i in range(n):
        ca = a[i] if i < len(a) else ZERO
        cb = b[i] if i < len(b) else ZERO
        out.append(ca - cb)
    return poly_trim(out)


def poly_divmod(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(a)
    quot = [ZERO] * max(len(a) - len(b) + 1, 0)
    inv_lead = b[-1].inverse()
    while len(rem) >= len(b) and poly_trim(rem):
        rem = list(poly_trim(rem))
        if len(rem) < len(b):
            break
        shift = len(rem) - len(b)
        factor = rem[-1] * inv_lead
        quot[shift] = quot[shift] + factor
        for i, cb in enumerate(b):
            rem[shift + i] = rem[shift + i] - factor * cb
    return poly_trim(quot), poly_trim(rem)


def poly_gcd_monic(a: Poly, b: Poly) -> Poly:
    while b:
        a, b = b, poly_divmod(a, b)[1]
    if not a:
        return ()
    inv = a[-1].inverse()
    return tuple(c * inv for c in a)


def poly_derivative(a: Poly) -> Poly:
    return poly_trim(
        [GaussianRational(Fraction(i)) * c for i, c in enumerate(a)][1:]
    )


def poly_eval_matrix(a: Poly, M: ExactMatrix) -> ExactMatrix:
    n = M.nrows
    result = ExactMatrix.zero(n, n)
    for c in reversed(a):
        result = result @ M
        if c:
            result = result + ExactMatrix.identity(n).scale(c)
    return result


def char_poly(M: ExactMatrix) -> Poly:
    """Monic characteristic polynomial via Faddeev-LeVerrier."""
    if M.nrows != M.ncols:
        raise ValidationFailure("characteristic polynomial of a non-square matrix")
    n = M.nrows
    coeffs = [ONE]  # descending: x^n + c_1 x^{n-1} + ...
    Mk = M
    for k in range(1, n + 1):
        ck = Mk.trace() * GaussianRational(Fraction(-1, k))
        coeffs.append(ck)
        if k < n:
            Mk = M @ (Mk + ExactMatrix.identity(n).scale(ck))
    return poly_trim(tuple(reversed(coeffs)))


def _factor_linear_over_q_i(poly: Poly) -> list[tuple[GaussianRational, int]]:
    """Roots with multiplicities; raises naming any irreducible factor.

    Factorization over Q(i) is delegated to sympy's gaussian domain; the
    rest of the splitting stays on the package's own exact types.
    """
    from sympy import I as sym_i
    from sympy import Poly as SymPoly
    from sympy import Rational, symbols

    x = symbols("x")
    expr = sum(
        (Rational(c.re.numerator, c.re.denominator)
         + Rational(c.im.numerator, c.im.denominator) * sym_i) * x**i
        for i, c in enumerate(poly)
    )
    _, factors = SymPoly(expr, x, gaussian=True).factor_list()
    roots: list[tuple[GaussianRational, int]] = []
    for factor, mult in factors:
        coeffs = factor.all_coeffs()
        if len(coeffs) != 2:
            raise ExtendScalarsError(str(factor.as_expr()))
        const = coeffs[1]
        re_part, im_part = const.as_real_imag()
        root = -GaussianRational(
            Fraction(re_part.p, re_part.q), Fraction(im_part.p, im_part.q)
        )
        roots.append((root, int(mult)))
    roots.sort(key=lambda rm: rm[0].sort_key())
    return roots


def jordan_chevalley_additive(M: ExactMatrix) -> tuple[ExactMatrix, ExactMatrix]:
    """M = S + N with S diagonalizable over Q(i), N nilpotent, SN = NS.

    S is found twice, by Newton iteration on the squarefree part of the
    characteristic polynomial and by summing generalized eigenprojections,
    and the two answers are asserted equal. Both are polynomials in M.
    """
    if M.nrows != M.ncols:
        raise ValidationFailure("Jordan splitting needs a square matrix")
    n = M.nrows
    if n == 0:
        return M, M
    p = char_poly(M)
    roots = _factor_linear_over_q_i(p)
    assert sum(m for _, m in roots) == n

    # Route 1: Newton iteration A <- A - q(A) q'(A)^{-1} on the squarefree q.
    q: Poly = (ONE,)
    for root, _ in roots:
        q = poly_mul(q, (-root, ONE))
    dq = poly_derivative(q)
    A = M
    for _ in range(n + 1):
        qA = poly_eval_matrix(q, A)
        if qA.is_zero():
            break
        A = A - qA @ matrix_inverse(poly_eval_matrix(dq, A))
    assert poly_eval_matrix(q, A).is_zero(), "Newton iteration did not converge"

    # Route 2: generalized eigenprojections P_i = (u_i g_i)(M) with
    # u_i g_i = 1 mod (x - root_i)^{mult_i}.
    projections = []
    identity = ExactMatrix.identity(n)
    S2 = ExactMatrix.zero(n, n)
    for root, mult in roots:
        power: Poly = (ONE,)
        for _ in range(mult):
            power = poly_mul(power, (-root, ONE))
        g_i = poly_divmod(p, power)[0]
        u_i = _inverse_mod(g_i, power)
        P = poly_eval_matrix(poly_mul(u_i, g_i), M)
        projections.append(P)
        S2 = S2 + P.scale(root)
    total = ExactMatrix.zero(n, n)
    for P in projections:
        assert (P @ P) == P, "eigenprojection is not idempotent"
        total = total + P
    assert total == identity, "eigenprojections do not sum to the identity"
    assert A == S2, "Newton route and projection route disagree"

    S = S2
    N = M - S
    assert (S @ N) == (N @ S)
    assert N.is_nilpotent()
    check = identity
    for root, _ in roots:
        check = check @ (S - identity.scale(root))
    assert check.is_zero(), "semisimple part is not diagonalizable over Q(i)"
    return S, N


def _inverse_mod(a: Poly, modulus: Poly) -> Poly:
    """Inverse of a modulo a coprime polynomial, by extended Euclid."""
    r0, r1 = modulus, poly_divmod(a, modulus)[1]
    s0: Poly = ()
    s1: Poly = (ONE,)
    while r1:
        quot, rem = poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, poly_sub(s0, poly_mul(quot, s1))
    if len(r0) != 1:
        raise ValidationFailure("polynomials are not coprime")
    inv_lead = r0[0].inverse()
    return poly_divmod(tuple(c * inv_lead for c in s0), modulus)[1]


# ---------------------------------------------------------------------------
# Weight assignments.


class WeightAssignment:
    """One covector per algebra basis vector and per module basis vector."""

    __slots__ = ("algebra_weights", "rep_weights", "complement")

    def __init__(
        self,
        algebra_weights: Sequence[Weight],
        rep_weights: Sequence[Weight],
        complement: Sequence[int],
    ):
        comp = tuple(complement)
        alg = tuple(tuple(w) for w in algebra_weights)
        rw = tuple(tuple(w) for w in rep_weights)
        width = len(comp)
        if any(len(w) != width for w in alg) or any(len(w) != width for w in rw):
            raise ValidationFailure("weight covector width != complement size")
        object.__setattr__(self, "algebra_weights", alg)
        object.__setattr__(self, "rep_weights", rw)
        object.__setattr__(self, "complement", comp)

    def __setattr__(self, name, value):
        raise AttributeError("WeightAssignment is immutable")

    def __eq__(self, other):
        if not isinstance(other, WeightAssignment):
            return NotImplemented
        return (
            self.algebra_weights == other.algebra_weights
            and self.rep_weights == other.rep_weights
            and self.complement == other.complement
        )

    def zero(self) -> Weight:
        return tuple(ZERO for _ in self.complement)

    def tag(self, I: Sequence[int], k: int) -> Weight:
        acc = list(self.zero())
        for i in I:
            for pos, c in enumerate(self.algebra_weights[i]):
                acc[pos] = acc[pos] + c
        for pos, c in enumerate(self.rep_weights[k]):
            acc[pos] = acc[pos] - c
        return tuple(acc)


def weight_is_zero(w: Weight) -> bool:
    return all(not c for c in w)


def weight_sort_key(w: Weight):
    return tuple((c.re, c.im) for c in w)


def format_weight(w: Weight) -> str:
    return "(" + ", ".join(str(c) for c in w) + ")"


def _diagonal_split(mat: ExactMatrix) -> tuple[list[GaussianRational], ExactMatrix]:
    diag = [mat.entry(i, i) for i in range(mat.nrows)]
    residue = mat - ExactMatrix.from_entries(
        mat.nrows, mat.ncols, {(i, i): d for i, d in enumerate(diag) if d}
    )
    return diag, residue


def infer_weights(g: LieAlgebraData, rep: RepresentationData) -> WeightAssignment:
    """Read weights off operator diagonals over the complement.

    For every complement index j, ad(X_j) and R(X_j) must split as
    diagonal + nilpotent in the supplied basis; the diagonals are the
    weights. A non-nilpotent residue means the basis does not align the
    generalized eigenspaces and inference is refused.
    """
    n_alg = [[ZERO] * len(g.complement) for _ in range(g.dim)]
    n_rep = [[ZERO] * len(g.complement) for _ in range(rep.m)]
    for pos, j in enumerate(g.complement):
        diag, residue = _diagonal_split(g.ad_matrix(j))
        if not residue.is_nilpotent():
            raise WeightInferenceError(
                f"ad({g.basis[j]}) minus its diagonal is not nilpotent; "
                "supply an adapted basis or explicit weights"
            )
        for i in range(g.dim):
            n_alg[i][pos] = diag[i]
        diag_r, residue_r = _diagonal_split(rep.matrices[j])
        if not residue_r.is_nilpotent():
            raise WeightInferenceError(
                f"R({g.basis[j]}) minus its diagonal is not nilpotent; "
                "supply an adapted basis or explicit weights"
            )
        for k in range(rep.m):
            n_rep[k][pos] = diag_r[k]
    return WeightAssignment(n_alg, n_rep, g.complement)


def validate_weight_assignment(
    g: LieAlgebraData, rep: RepresentationData, w: WeightAssignment
) -> ValidationReport:
    """Diagonal match plus nilpotent residues for ad and rep matrices."""
    issues: list[ValidationIssue] = []
    if w.complement != g.complement:
        issues.append(
            ValidationIssue("weights-complement", "weight complement order mismatch")
        )
        return ValidationReport(tuple(issues))
    for pos, j in enumerate(g.complement):
        diag, residue = _diagonal_split(g.ad_matrix(j))
        if any(w.algebra_weights[i][pos] != diag[i] for i in range(g.dim)):
            issues.append(
                ValidationIssue(
                    "weights-ad-diagonal",
                    f"algebra weights disagree with the diagonal of ad({g.basis[j]})",
                    (j,),
                )
            )
        if not residue.is_nilpotent():
            issues.append(
                ValidationIssue(
                    "weights-ad-residue",
                    f"ad({g.basis[j]}) minus its diagonal is not nilpotent",
                    (j,),
                )
            )
        diag_r, residue_r = _diagonal_split(rep.matrices[j])
        if any(w.rep_weights[k][pos] != diag_r[k] for k in range(rep.m)):
            issues.append(
                ValidationIssue(
                    "weights-rep-diagonal",
                    f"rep weights disagree with the diagonal of R({g.basis[j]})",
                    (j,),
                )
            )
        if not residue_r.is_nilpotent():
            issues.append(
                ValidationIssue(
                    "weights-rep-residue",
                    f"R({g.basis[j]}) minus its diagonal is not nilpotent",
                    (j,),
                )
            )
    return ValidationReport(tuple(issues))


# ---------------------------------------------------------------------------
# The invariant complex.


@dataclass(frozen=True)
class InvariantComplex:
    """Finite complex on basis labels (I, k) with one weight tag each."""

    complex: FiniteComplex
    element_labels: tuple[tuple[tuple[tuple[int, ...], int], ...], ...]
    element_tags: tuple[tuple[Weight, ...], ...]
    algebra: LieAlgebraData
    representation: RepresentationData
    weights: WeightAssignment

    def distinct_tags(self) -> tuple[Weight, ...]:
        seen: dict[tuple, Weight] = {}
        for per_degree in self.element_tags:
            for tag in per_degree:
                seen.setdefault(weight_sort_key(tag), tag)
        return tuple(seen[k] for k in sorted(seen))

    def indices_with_tag(self, tag: Weight) -> tuple[tuple[int, ...], ...]:
        return tuple(
            tuple(i for i, t in enumerate(per_degree) if t == tag)
            for per_degree in self.element_tags
        )


def build_invariant_complex(
    g: LieAlgebraData, rep: RepresentationData, w: WeightAssignment
) -> InvariantComplex:
    """Assemble the invariant complex and verify its weight grading.

    Each column (I, k) is differentiated in the module twisted by its own
    tag mu_{I,k}; any nonzero coefficient reaching a basis element with a
    different tag is a weight-grading violation and raises.
    """
    n, m = g.dim, rep.m
    names = module_basis_names(g, rep)
    dx_table = _one_form_differentials(g)

    labels: list[tuple[tuple[tuple[int, ...], int], ...]] = []
    tags: list[tuple[Weight, ...]] = []
    label_strings: list[tuple[str, ...]] = []
    for p in range(n + 1):
        per = []
        per_tags = []
        per_str = []
        for I in degree_basis(n, p):
            for k in range(m):
                per.append((I, k))
                per_tags.append(w.tag(I, k))
                per_str.append(monomial_label(g, I, k, names))
        labels.append(tuple(per))
        tags.append(tuple(per_tags))
        label_strings.append(tuple(per_str))

    actions: dict[tuple, ModuleAction] = {}

    def action_for(tag: Weight) -> ModuleAction:
        key = weight_sort_key(tag)
        if key not in actions:
            actions[key] = ModuleAction(g, rep, tag)
        return actions[key]

    differentials = []
    dims = [len(per) for per in labels]
    for p in range(n):
        target_pos = subset_position(n, p + 1)
        tag_lookup = tags[p + 1]
        entries: dict[tuple[int, int], GaussianRational] = {}
        for col, (I, k) in enumerate(labels[p]):
            tag = tags[p][col]
            image = ce_image(g, action_for(tag), I, k, dx_table)
            for (J, l), coeff in image.items():
                row = target_pos[J] * m + l
                if tag_lookup[row] != tag:
                    raise WeightGradingError(
                        "weight grading violated: d("
                        f"{label_strings[p][col]}) hits {label_strings[p+1][row]} "
                        f"across tags {format_weight(tag)} -> "
                        f"{format_weight(tag_lookup[row])}; invalid weight data"
                    )
                entries[(row, col)] = coeff
        differentials.append(
            ExactMatrix.from_entries(dims[p + 1], dims[p], entries)
        )

    fc = FiniteComplex(dims, differentials, label_strings)
    return InvariantComplex(fc, tuple(labels), tuple(tags), g, rep, w)
