"""Bar construction: differentials, coalgebra structure, twisting cochains,
cofree extension, shuffles, and the homotopy adjunction."""

from fractions import Fraction

import pytest

from bartor.fields import QQ
from bartor.graded import Lin, koszul_sign
from bartor.dg import (
    UNIT,
    FreeAssociative,
    FreeGradedCommutative,
    Hom,
    TensorCoalgebra,
    TensorDga,
    check_dgc_axioms,
    dgc_homotopy_check,
    exterior_dga,
    generator_images_map,
    polynomial_dga,
    unit_counit_hom,
)
from bartor.bar import (
    BarCoalgebra,
    bar_map,
    extend_to_dgc_map,
    gauge_transform,
    homotopy_adjunction,
    is_twisting_cochain,
    reconstruct_dgc_homotopy,
    shuffle_map,
    shuffle_product_tokens,
    tautological_cochain,
)

X = (1,)  # the monomial x in k[x]


def kx():
    return polynomial_dga(QQ, [("x", 2)])


def test_word_degrees_and_basis():
    A = kx()
    bar = BarCoalgebra(A, length_bound=6)
    assert bar.degree(()) == 0
    assert bar.deg((X,)) == 1
    assert bar.deg((X, X)) == 2
    assert bar.deg(((2,),)) == 3  # |x^2| - 1
    assert set(bar.basis(2)) == {(X, X)}
    assert set(bar.basis(3)) == {((2,),), (X, X, X)}


def test_differential_of_short_words():
    A = kx()
    bar = BarCoalgebra(A)
    assert bar.diff(()).is_zero()
    assert bar.diff((X,)).is_zero()  # d_A = 0
    # derived by hand from id (x) s^{-1} mu s^{(x)2} with the sign oracle:
    # the operator evaluation sign on [x|x] is (-1)^{prefix=0} and s^{(x)2}
    # contributes (-1)^{|x|-1} = -1, so d[x|x] = -[x^2]
    assert bar.diff((X, X)).terms == {((2,),): Fraction(-1)}


def test_differential_length_three():
    A = kx()
    bar = BarCoalgebra(A)
    # first pair: prefix 0, sign -1; second pair: prefix |x|-1 = 1, sign +1
    got = bar.diff((X, X, X))
    assert got.terms == {((2,), X): Fraction(-1), (X, (2,)): Fraction(1)}
    assert bar.diff_lin(got).is_zero()


@pytest.mark.parametrize(
    "algebra,top,min_count",
    [
        (polynomial_dga(QQ, [("x", 2)]), 12, 50),
        (polynomial_dga(QQ, [("x", 2), ("y", 4)]), 12, 50),
        (exterior_dga(QQ, [("u", 3)]), 12, 5),
    ],
)
def test_d_squared_zero_exhaustive(algebra, top, min_count):
    bar = BarCoalgebra(algebra, length_bound=6)
    count = 0
    for n in range(top + 1):
        for w in bar.basis(n):
            assert bar.diff_lin(bar.diff(w)).is_zero(), w
            count += 1
    assert count > min_count


def test_deconcatenation():
    A = kx()
    bar = BarCoalgebra(A)
    assert bar.comult(()).terms == {((), ()): Fraction(1)}
    assert bar.comult((X,)).terms == {((), (X,)): Fraction(1), ((X,), ()): Fraction(1)}
    y = (2,)
    got = bar.comult((X, y))
    assert got.terms == {
        ((), (X, y)): Fraction(1),
        ((X,), (y,)): Fraction(1),
        ((X, y), ()): Fraction(1),
    }


def test_bar_is_dgc():
    A = polynomial_dga(QQ, [("x", 2), ("y", 4)])
    bar = BarCoalgebra(A, length_bound=5)
    check_dgc_axioms(bar, 8)


def test_comult_is_coderivation():
    # Delta d = (d (x) id + id (x) d) Delta, exhaustive to length 4
    A = polynomial_dga(QQ, [("x", 2), ("y", 4)])
    bar = BarCoalgebra(A, length_bound=4)
    for n in range(9):
        for w in bar.basis(n, length_bound=4):
            lhs = bar.comult_lin(bar.diff(w))
            rhs = Lin(QQ)
            for (w1, w2), c in bar.comult(w).terms.items():
                for t, c2 in bar.diff(w1).terms.items():
                    rhs.add_term((t, w2), QQ.mul(c, c2))
                sgn = -1 if bar.degree(w1) % 2 else 1
                for t, c2 in bar.diff(w2).terms.items():
                    cc = QQ.mul(c, c2)
                    rhs.add_term((w1, t), cc if sgn == 1 else QQ.neg(cc))
            assert lhs.terms == rhs.terms, w


def test_concatenation_is_internal_cochain_map():
    # d_int(w1 w2) = d_int(w1) w2 + (-1)^{|w1|} w1 d_int(w2); with zero
    # algebra differential both sides vanish, so use the exterior algebra
    # where d_int is still zero but degrees are odd, then a cochain algebra
    # is exercised in the simplicial tests.  Here check the tensor identity
    # via the full differential minus its external part on k[x].
    A = kx()
    bar = BarCoalgebra(A, length_bound=6)
    # With d_A = 0 the internal differential vanishes; the identity reduces
    # to 0 = 0 on concatenations, so instead check that deconcatenation of a
    # concatenation recovers the expected splits (rebracketing sanity).
    w1, w2 = (X,), (X, (2,))
    cat = w1 + w2
    splits = bar.comult(cat)
    assert ((X,), (X, (2,))) in splits.terms


def test_tautological_cochain_is_twisting():
    A = polynomial_dga(QQ, [("x", 2), ("y", 4)])
    bar = BarCoalgebra(A, length_bound=5)
    t = tautological_cochain(bar)
    tokens = [w for n in range(10) for w in bar.basis(n, length_bound=5)]
    assert is_twisting_cochain(t, tokens)


def test_shuffle_cochain_is_twisting_iff_commutative():
    A = polynomial_dga(QQ, [("x", 2)])
    barA = BarCoalgebra(A, length_bound=3)
    TT = TensorCoalgebra(barA, barA)
    tA = tautological_cochain(barA)

    def t_nabla_fn(pair):
        w, v = pair
        if v == ():
            return tA.apply_token(w)
        if w == ():
            return tA.apply_token(v)
        return Lin(QQ)

    t_nabla = Hom(TT, A, 1, t_nabla_fn)
    tokens = [(w, v) for n1 in range(5) for w in barA.basis(n1) for n2 in range(5) for v in barA.basis(n2)]
    assert is_twisting_cochain(t_nabla, tokens)

    N = FreeAssociative(QQ, [("a", 1), ("b", 1)])
    barN = BarCoalgebra(N, length_bound=3)
    TN = TensorCoalgebra(barN, barN)
    tN = tautological_cochain(barN)

    def t_nabla_nc(pair):
        w, v = pair
        if v == ():
            return tN.apply_token(w)
        if w == ():
            return tN.apply_token(v)
        return Lin(QQ)

    t_nc = Hom(TN, N, 1, t_nabla_nc)
    tokens_nc = [(w, v) for n1 in range(4) for w in barN.basis(n1) for n2 in range(4) for v in barN.basis(n2)]
    assert not is_twisting_cochain(t_nc, tokens_nc)


def test_zero_twisting_cochain():
    A = FreeAssociative(QQ, [("a", 1)])
    bar = BarCoalgebra(A, length_bound=3)
    z = Hom(bar, A, 1, lambda w: Lin(QQ))
    tokens = [w for n in range(4) for w in bar.basis(n)]
    assert is_twisting_cochain(z, tokens)


def test_extension_of_tautological_cochain_is_identity():
    A = polynomial_dga(QQ, [("x", 2), ("y", 4)])
    bar = BarCoalgebra(A, length_bound=4)
    t = tautological_cochain(bar)
    F = extend_to_dgc_map(t, bar)
    for n in range(9):
        for w in bar.basis(n, length_bound=4):
            assert F.apply_token(w).terms == {w: Fraction(1)}
    assert F.apply_token(()).terms == {(): Fraction(1)}


def test_extension_of_composed_map_is_bar_map():
    A = polynomial_dga(QQ, [("x", 4)])
    B = polynomial_dga(QQ, [("t", 2)])
    f = generator_images_map(A, B, [B.mul_lin(B.generator("t"), B.generator("t"))])
    barA = BarCoalgebra(A, length_bound=4)
    barB = BarCoalgebra(B, length_bound=8)
    tB = tautological_cochain(barB)

    def f_t_fn(w):
        if len(w) == 1:
            return f.apply_token(w[0])
        return Lin(QQ)

    f_t = Hom(barA, B, 1, f_t_fn)
    F = extend_to_dgc_map(f_t, barB)
    Bf = bar_map(f, barA, barB)
    for n in range(10):
        for w in barA.basis(n, length_bound=4):
            assert F.apply_token(w).terms == Bf.apply_token(w).terms


def test_shuffle_map_values():
    A = polynomial_dga(QQ, [("x", 2)])
    B = polynomial_dga(QQ, [("y", 4)])
    barA = BarCoalgebra(A)
    barB =  BarCoalgebra(B)
    T = TensorDga(A, B)
    barT = BarCoalgebra(T)
    TT = TensorCoalgebra(barA, barB)
    nabla = shuffle_map(TT, barT)
    y = (1,)
    got = nabla.apply_token(((X,), (y,)))
    sign = koszul_sign((2, 1), (1, 3))  # (|x|-1)(|y|-1) = 3 odd products
    assert got.terms == {
        ((X, UNIT), (UNIT, y)): Fraction(1),
        ((UNIT, y), (X, UNIT)): Fraction(sign),
    }
    # empty left factor: letters map to 1 (x) b
    got = nabla.apply_token(((), (y, y)))
    assert got.terms == {((UNIT, y), (UNIT, y)): Fraction(1)}


def test_shuffle_map_is_coalgebra_map():
    A = polynomial_dga(QQ, [("x", 2)])
    B = exterior_dga(QQ, [("u", 3)])
    barA = BarCoalgebra(A, length_bound=3)
    barB = BarCoalgebra(B, length_bound=3)
    T = TensorDga(A, B)
    barT = BarCoalgebra(T)
    TT = TensorCoalgebra(barA, barB)
    nabla = shuffle_map(TT, barT)
    pairs = [
        (w, v)
        for n1 in range(5)
        for w in barA.basis(n1, length_bound=3)
        for n2 in range(5)
        for v in barB.basis(n2, length_bound=2)
    ]
    for pair in pairs:
        lhs = barT.comult_lin(nabla.apply_token(pair))
        rhs = Lin(QQ)
        for (p1, p2), c in TT.comult(pair).terms.items():
            for u1, c1 in nabla.apply_token(p1).terms.items():
                for u2, c2 in nabla.apply_token(p2).terms.items():
                    rhs.add_term((u1, u2), QQ.mul(c, QQ.mul(c1, c2)))
        assert lhs.terms == rhs.terms, pair


def test_shuffle_map_is_cochain_map():
    # nabla commutes with the bar differentials (DGC map between bars)
    A = polynomial_dga(QQ, [("x", 2)])
    B = exterior_dga(QQ, [("u", 3)])
    barA = BarCoalgebra(A, length_bound=3)
    barB = BarCoalgebra(B, length_bound=3)
    T = TensorDga(A, B)
    barT = BarCoalgebra(T)
    TT = TensorCoalgebra(barA, barB)
    nabla = shuffle_map(TT, barT)
    D = nabla.hom_differential()
    for n in range(7):
        for w in barA.basis(n, length_bound=3):
            for m in range(7):
                for v in barB.basis(m, length_bound=2):
                    assert D.apply_token((w, v)).is_zero(), (w, v)


def test_shuffle_product_unit_and_square():
    A = kx()
    bar = BarCoalgebra(A)
    assert shuffle_product_tokens(bar, (), (X,)).terms == {(X,): Fraction(1)}
    assert shuffle_product_tokens(bar, (X,), ()).terms == {(X,): Fraction(1)}
    # [x]*[x] = 0 for even |x|: the two shuffles cancel
    assert shuffle_product_tokens(bar, (X,), (X,)).is_zero()


def test_shuffle_product_two_variables():
    A = polynomial_dga(QQ, [("x", 2), ("y", 4)])
    bar = BarCoalgebra(A)
    x, y = (1, 0), (0, 1)
    got = shuffle_product_tokens(bar, (x,), (y,))
    assert got.terms == {(x, y): Fraction(1), (y, x): Fraction(-1)}


def test_shuffle_product_associative_and_commutative():
    A = polynomial_dga(QQ, [("x", 2), ("y", 4)])
    bar = BarCoalgebra(A)
    x, y = (1, 0), (0, 1)
    words = [(), (x,), (y,), (x, y), (x, x)]

    def star(l1, l2):
        out = Lin(QQ)
        for w1, c1 in l1.terms.items():
            for w2, c2 in l2.terms.items():
                out.add_into(shuffle_product_tokens(bar, w1, w2), QQ.mul(c1, c2))
        return out

    for w1 in words:
        l1 = Lin.single(QQ, w1)
        for w2 in words:
            l2 = Lin.single(QQ, w2)
            # graded commutativity
            ab = star(l1, l2)
            ba = star(l2, l1)
            sgn = -1 if (bar.degree(w1) % 2 and bar.degree(w2) % 2) else 1
            assert ab.terms == ba.scale(QQ(sgn)).terms
            for w3 in words:
                l3 = Lin.single(QQ, w3)
                assert star(star(l1, l2), l3).terms == star(l1, star(l2, l3)).terms


def test_shuffle_product_requires_commutative():
    N = FreeAssociative(QQ, [("a", 1), ("b", 1)])
    bar = BarCoalgebra(N)
    with pytest.raises(ValueError):
        shuffle_product_tokens(bar, ((0,),), ((1,),))


def test_shuffle_product_equals_bar_mu_after_shuffle_map():
    # mu_nabla = B(mu) o nabla for a commutative algebra
    A = polynomial_dga(QQ, [("x", 2), ("y", 4)])
    barA = BarCoalgebra(A)
    T = TensorDga(A, A)
    barT = BarCoalgebra(T)
    TT = TensorCoalgebra(barA, barA)
    nabla = shuffle_map(TT, barT)
    mu = bar_map(
        # multiplication A (x) A -> A as a DgaMap
        __import__("bartor.dg", fromlist=["DgaMap"]).DgaMap(
            T, A, lambda tok: A.mul(tok[0], tok[1]), name="mu"
        ),
        barT,
        barA,
    )
    x, y = (1, 0), (0, 1)
    for w in [(), (x,), (x, y)]:
        for v in [(), (y,), (x, x)]:
            via_nabla = mu(nabla.apply_token((w, v)))
            direct = shuffle_product_tokens(barA, w, v)
            assert via_nabla.terms == direct.terms, (w, v)


def mixed_algebra():
    return FreeGradedCommutative(QQ, [("x", 2), ("u", 3)])


def make_gauge_data():
    """A nontrivial gauge h on B(k[x](x)Lambda(u)) and the transformed cochain."""
    A = mixed_algebra()
    bar = BarCoalgebra(A, length_bound=4)
    t = tautological_cochain(bar)
    unit = unit_counit_hom(bar, A)
    u_tok = (0, 1)

    def pert(w):
        # degree-0 perturbation supported on [u]: h[u] = x would need degree
        # |[u]| = 2 -> x; use it
        if w == ((u_tok),):
            pass
        if w == ((0, 1),):
            return Lin.single(QQ, (1, 0))
        return Lin(QQ)

    h = unit.add(Hom(bar, A, 0, pert))
    t_prime = gauge_transform(t, h)
    return A, bar, t, h, t_prime


def test_gauge_transform_is_twisting_cochain():
    A, bar, t, h, t_prime = make_gauge_data()
    tokens = [w for n in range(9) for w in bar.basis(n, length_bound=4)]
    assert is_twisting_cochain(t_prime, tokens)
    # and it differs from t (nontrivial gauge)
    assert any(t_prime.apply_token(w).terms != t.apply_token(w).terms for w in tokens)


def test_gauge_homotopy_conditions():
    # D h = t' cup h - h cup t, eps h = eps, h eta = eta
    A, bar, t, h, t_prime = make_gauge_data()
    Dh = h.hom_differential()
    want = t_prime.cup(h).sub(h.cup(t))
    for n in range(9):
        for w in bar.basis(n, length_bound=4):
            assert Dh.apply_token(w).terms == want.apply_token(w).terms, w
    assert h.apply_token(()).terms == {UNIT: Fraction(1)}


def test_homotopy_adjunction_roundtrip():
    A, bar, t, h, t_prime = make_gauge_data()
    F = extend_to_dgc_map(t_prime, bar)
    G = extend_to_dgc_map(t, bar)
    H = reconstruct_dgc_homotopy(h, F, G, bar)
    tokens = [w for n in range(7) for w in bar.basis(n, length_bound=3)]
    assert dgc_homotopy_check(H, F, G, tokens)
    # adjunction recovers h
    h_back = homotopy_adjunction(H)
    for w in tokens:
        assert h_back.apply_token(w).terms == h.apply_token(w).terms


def test_trivial_homotopy_adjunction():
    A = kx()
    bar = BarCoalgebra(A, length_bound=3)
    zero_H = Hom(bar, bar, -1, lambda w: Lin(QQ))
    h = homotopy_adjunction(zero_H)
    unit = unit_counit_hom(bar, A)
    for n in range(5):
        for w in bar.basis(n):
            assert h.apply_token(w).terms == unit.apply_token(w).terms
    # D(eta eps) = t cup eta eps - eta eps cup t = 0
    t = tautological_cochain(bar)
    want = t.cup(h).sub(h.cup(t))
    for n in range(5):
        for w in bar.basis(n):
            assert want.apply_token(w).is_zero()
            assert h.hom_differential().apply_token(w).is_zero()
