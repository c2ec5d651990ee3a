"""The product on the two-sided bar construction of a span of homotopy
Gerstenhaber maps, computed two independent ways:

* `mu_tilde` implements the explicit two-term decomposition formula, with
  the named combinators T0, T1 assembled from Koszul data;
* `mu_tilde_oracle` composes the definitional pipeline: the permutation Pi,
  the shuffle embedding into the bar of the square, and the triple map of
  the structure maps Phi.

Alongside live the evaluation map xi and the homotopy h certifying that xi
is multiplicative in cohomology.
"""

from .graded import Lin, koszul_sign
from .dg import UNIT, Hom, TensorDga, tensor_dga_map
from .bar import BarCoalgebra, bar_map, tautological_cochain
from .twisted import BarTripleMap, TwistedComplex, strict_two_sided_bar, bar_word_image
from .hga import phi_dgc_map


class HgaTriple:
    """HGA structures on A' <- A -> A'' along HGA homomorphisms f', f''."""

    def __init__(self, hga_left, hga, hga_right, f_left, f_right, length_bound=6):
        self.hga_left = hga_left
        self.hga = hga
        self.hga_right = hga_right
        self.f_left = f_left
        self.f_right = f_right
        self.length_bound = length_bound
        self.complex = strict_two_sided_bar(
            hga_left.algebra, hga.algebra, hga_right.algebra, f_left, f_right, length_bound
        )
        self.field = hga.algebra.field
        self._oracle = None

    def check_hga_maps(self, degree_bound=4, word_length=2):
        """f', f'' must be DGA maps distributing over the EE operations."""
        A = self.hga.algebra
        for f, target in ((self.f_left, self.hga_left), (self.f_right, self.hga_right)):
            f.check(degree_bound)
            for da in range(degree_bound + 1):
                for a in A.ideal_basis(da):
                    for w in self.hga.bar.basis_all(degree_bound, word_length):
                        if len(w) < 1:
                            continue
                        lhs = f(self.hga.ee(a, w))
                        rhs = Lin(self.field)
                        for fw, c in bar_word_image(f, w, self.field).terms.items():
                            rhs.add_into(target.ee_lin(f.apply_token(a), fw), c)
                        if lhs.terms != rhs.terms:
                            raise AssertionError(f"not an HGA map at {a}, {w}")
        return True

    def pi_sign(self, t1, t2):
        """Koszul sign of the tensor permutation (2 3 5 4) on
        a' (x) [a] (x) a'' (x) b' (x) [b] (x) b''."""
        a, aw, app = t1
        b, bw, bpp = t2
        degs = (
            self.hga_left.algebra.degree(a),
            self.complex.coalg.degree(aw),
            self.hga_right.algebra.degree(app),
            self.hga_left.algebra.degree(b),
            self.complex.coalg.degree(bw),
            self.hga_right.algebra.degree(bpp),
        )
        return koszul_sign((1, 3, 5, 2, 4, 6), degs)

    def ee_right(self, app_token, word, bpp_token):
        """EE(a''[f'' b_(3)]) b'' as a Lin over A''."""
        App = self.hga_right.algebra
        out = Lin(self.field)
        for fw, c in bar_word_image(self.f_right, word, self.field).terms.items():
            out.add_into(self.hga_right.ee(app_token, fw), c)
        return App.mul_lin(out, App.element(bpp_token))

    def assemble(self, left_lin, words_lin, right_lin):
        out = Lin(self.field)
        for a, ca in left_lin.terms.items():
            for w, cw in words_lin.terms.items():
                for b, cb in right_lin.terms.items():
                    out.add_term((a, w, b), self.field.mul(ca, self.field.mul(cw, cb)))
        return out


def mu_tilde(triple, t1, t2):
    """The explicit formula for the product on B(A', A, A'')."""
    field = triple.field
    Ap = triple.hga_left.algebra
    bar = triple.hga.bar
    a, aw, app = t1
    b, bw, bpp = t2
    pi = triple.pi_sign(t1, t2)
    out = Lin(field)
    d_app = triple.hga_right.algebra.degree(app)

    # first term: a'b' (x) [a] * [b_(2)] (x) EE(a''[f'' b_(3)]) b''
    left = Ap.mul(a, b)
    if not left.is_zero():
        for p in range(len(bw) + 1):
            v2, v3 = bw[:p], bw[p:]
            right = triple.ee_right(app, v3, bpp)
            if right.is_zero():
                continue
            star = triple.hga.bar_product(aw, v2)
            if star.is_zero():
                continue
            sgn = pi * (-1 if (bar.deg(v3) * d_app) % 2 else 1)
            out.add_into(triple.assemble(left, star, right), field(sgn))

    # second term: a' EE(f'a_1 [b'|f'b_(1)]) (x) [a_(2)] * [b_(2)] (x) ...
    if aw and b != UNIT:
        a1, arest = aw[0], aw[1:]
        d_a1 = triple.hga.algebra.deg(a1)
        d_b = Ap.deg(b)
        t11 = -1 if ((d_a1 - 1) * (d_b + 1)) % 2 else 1
        fa1 = triple.f_left.apply_token(a1)
        if not fa1.is_zero():
            for p in range(len(bw) + 1):
                v1 = bw[:p]
                interleave = -1 if (bar.deg(v1) * bar.deg(arest)) % 2 else 1
                head = Lin(field)
                for fw, c in bar_word_image(triple.f_left, v1, field).terms.items():
                    head.add_into(triple.hga_left.ee_lin(fa1, (b,) + fw), c)
                if head.is_zero():
                    continue
                left2 = Ap.mul_lin(Ap.element(a), head)
                if left2.is_zero():
                    continue
                for q in range(p, len(bw) + 1):
                    v2, v3 = bw[p:q], bw[q:]
                    right = triple.ee_right(app, v3, bpp)
                    if right.is_zero():
                        continue
                    star = triple.hga.bar_product(arest, v2)
                    if star.is_zero():
                        continue
                    sgn = pi * t11 * interleave * (-1 if (bar.deg(v3) * d_app) % 2 else 1)
                    out.add_into(triple.assemble(left2, star, right), field(sgn))
    return out


def mu_tilde_lin(triple, l1, l2):
    out = Lin(triple.field)
    for t1, c1 in l1.terms.items():
        for t2, c2 in l2.terms.items():
            out.add_into(mu_tilde(triple, t1, t2), triple.field.mul(c1, c2))
    return out


class MuTildeOracle:
    """The definitional composite B(Phi', Phi, Phi'') (id (x) nabla (x) id) Pi."""

    def __init__(self, triple):
        self.triple = triple
        A = triple.hga.algebra
        Ap = triple.hga_left.algebra
        App = triple.hga_right.algebra
        L = triple.length_bound
        self.TAA = TensorDga(A, A)
        self.TApAp = TensorDga(Ap, Ap)
        self.TAppApp = TensorDga(App, App)
        self.barTAA = BarCoalgebra(self.TAA, L)
        self.barTApAp = BarCoalgebra(self.TApAp, L)
        self.barTAppApp = BarCoalgebra(self.TAppApp, L)
        ff_left = tensor_dga_map(triple.f_left, triple.f_left, self.TAA, self.TApAp)
        ff_right = tensor_dga_map(triple.f_right, triple.f_right, self.TAA, self.TAppApp)
        FL = bar_map(ff_left, self.barTAA, self.barTApAp)
        FR = bar_map(ff_right, self.barTAA, self.barTAppApp)
        self.Phi_left = phi_dgc_map(triple.hga_left, self.barTApAp)
        self.Phi = phi_dgc_map(triple.hga, self.barTAA)
        self.Phi_right = phi_dgc_map(triple.hga_right, self.barTAppApp)
        zero_left = Hom(self.barTAA, self.TApAp, 1, lambda w: Lin(triple.field))
        zero_right = Hom(self.barTAA, self.TAppApp, 1, lambda w: Lin(triple.field))
        source = TwistedComplex(self.TApAp, self.barTAA, self.TAppApp, zero_left, zero_right)
        self.triple_map = BarTripleMap(
            source, triple.complex, self.Phi_left, self.Phi, self.Phi_right, FL, FR
        )
        self._nabla_cache = {}

    def nabla(self, aw, bw):
        """Shuffle embedding B A (x) B A -> B(A (x) A) on a word pair."""
        key = (aw, bw)
        got = self._nabla_cache.get(key)
        if got is not None:
            return got
        from .graded import enumerate_shuffles, permute_tuple

        A = self.triple.hga.algebra
        field = self.triple.field
        p, q = len(aw), len(bw)
        degs = [A.deg(x) - 1 for x in aw] + [A.deg(y) - 1 for y in bw]
        letters = [(x, UNIT) for x in aw] + [(UNIT, y) for y in bw]
        out = Lin(field)
        for sh in enumerate_shuffles(p, q):
            sgn = koszul_sign(sh, degs)
            out.add_term(permute_tuple(sh, letters), field(sgn))
        self._nabla_cache[key] = out
        return out

    def __call__(self, t1, t2):
        field = self.triple.field
        a, aw, app = t1
        b, bw, bpp = t2
        pi = self.triple.pi_sign(t1, t2)
        from .dg import pair_token

        left = pair_token(a, b)
        right = pair_token(app, bpp)
        out = Lin(field)
        for word, c in self.nabla(aw, bw).terms.items():
            out.add_into(self.triple_map.apply_token((left, word, right)), c)
        return out.sign(pi)


def make_oracle(triple):
    if triple._oracle is None:
        triple._oracle = MuTildeOracle(triple)
    return triple._oracle


def xi_map(triple, g_left, g_right, check_bound=None):
    """xi: B(A', A, A'') -> ~A given HGA maps g', g'' with g'f' = g''f''.

    Sends a'[a_*]a'' to g'(a') g''(a'') when the word is empty, else 0.
    """
    Atilde = g_left.target
    field = triple.field
    if check_bound is not None:
        A = triple.hga.algebra
        for n in range(check_bound + 1):
            for t in A.basis(n):
                lhs = g_left(triple.f_left.apply_token(t))
                rhs = g_right(triple.f_right.apply_token(t))
                if lhs.terms != rhs.terms:
                    raise ValueError(f"xi square does not commute at {t}")

    def fn(token):
        a, w, b = token
        if w != ():
            return Lin(field)
        return Atilde.mul_lin(g_left.apply_token(a), g_right.apply_token(b))

    return fn


def xi_is_cochain_map(triple, xi, target, degree_bound, length_bound=None):
    """Check D xi = 0, i.e. xi o d = d_target o xi on the basis."""
    for token in triple.complex.basis_all(degree_bound, length_bound):
        lhs = Lin(triple.field)
        for t2, c in triple.complex.diff(token).terms.items():
            lhs.add_into(xi(t2), c)
        rhs = target.diff_lin(xi(token))
        if lhs.terms != rhs.terms:
            return token
    return None


def homotopy_h(triple, t1, t2):
    """h = mu^(4) (id (x) eps (x) EE(id (x) s^{-1} (x) id) (x) id) on the
    reduced triple A = A' = A'' with identity structure maps."""
    field = triple.field
    A = triple.hga.algebra
    a, aw, app = t1
    b, bw, bpp = t2
    if aw != ():
        return Lin(field)
    sgn = -1 if (A.degree(a) + A.degree(app)) % 2 else 1
    word = (b,) + bw if b != UNIT else None
    if word is None:
        return Lin(field)
    mid = triple.hga.ee(app, word)
    if mid.is_zero():
        return Lin(field)
    out = A.mul_lin(A.element(a), A.mul_lin(mid, A.element(bpp)))
    return out.sign(sgn)


def naturality_check(triple0, triple1, g_left, g, g_right, pairs):
    """B(g', g, g'') mu~ = mu~ (B(g',g,g'')^{(x)2}) on the given token pairs."""
    from .twisted import triple_map_from_dga_maps

    slot = triple_map_from_dga_maps(triple0.complex, triple1.complex, g_left, g, g_right)
    for t1, t2 in pairs:
        lhs = Lin(triple0.field)
        for tok, c in mu_tilde(triple0, t1, t2).terms.items():
            lhs.add_into(slot(tok), c)
        rhs = Lin(triple0.field)
        for ta, ca in slot(t1).terms.items():
            for tb, cb in slot(t2).terms.items():
                rhs.add_into(mu_tilde(triple1, ta, tb), triple0.field.mul(ca, cb))
        if lhs.terms != rhs.terms:
            return (t1, t2)
    return None
