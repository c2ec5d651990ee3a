"""Twisted tensor products and the two-sided bar construction.

Tokens of A' (x)_t' C (x)_t'' A'' are triples (a, c, b); the differential is
the tensor differential plus the left cap minus the right cap, the sign
convention whose correctness the d^2 = 0 suites adjudicate.
"""

from .graded import Lin
from .dg import UNIT, Hom, base_field_dga
from .bar import BarCoalgebra, bar_map, tautological_cochain


class TwistedComplex:
    """A' (x)_{t'} C (x)_{t''} A'' with differential d_ox + cap_L - cap_R."""

    def __init__(self, left, coalg, right, t_left, t_right):
        self.left = left
        self.coalg = coalg
        self.right = right
        self.t_left = t_left
        self.t_right = t_right
        self.field = left.field
        self.name = f"{left.name} (x)t {coalg.name} (x)t {right.name}"

    def degree(self, token):
        a, c, b = token
        return self.left.degree(a) + self.coalg.degree(c) + self.right.degree(b)

    def make(self, a_lin, c_token, b_lin):
        out = Lin(self.field)
        for a, ca in a_lin.terms.items():
            for b, cb in b_lin.terms.items():
                out.add_term((a, c_token, b), self.field.mul(ca, cb))
        return out

    def cap_left(self, phi, token):
        """delta^L_phi: a (x) c (x) b -> +- a phi(c_(1)) (x) c_(2) (x) b."""
        a, c, b = token
        field = self.field
        out = Lin(field)
        sgn = -1 if (phi.degree % 2 and self.left.degree(a) % 2) else 1
        for (c1, c2), cc in self.coalg.comult(c).terms.items():
            val = phi.apply_token(c1)
            if val.is_zero():
                continue
            prod = self.left.mul_lin(Lin.single(field, a), val)
            for anew, ca in prod.terms.items():
                coeff = field.mul(cc, ca)
                out.add_term((anew, c2, b), coeff if sgn == 1 else field.neg(coeff))
        return out

    def cap_right(self, phi, token):
        """delta^R_phi: a (x) c (x) b -> +- a (x) c_(1) (x) phi(c_(2)) b."""
        a, c, b = token
        field = self.field
        out = Lin(field)
        da = self.left.degree(a)
        for (c1, c2), cc in self.coalg.comult(c).terms.items():
            val = phi.apply_token(c2)
            if val.is_zero():
                continue
            sgn = -1 if (phi.degree % 2 and (da + self.coalg.degree(c1)) % 2) else 1
            prod = self.right.mul_lin(val, Lin.single(field, b))
            for bnew, cb in prod.terms.items():
                coeff = field.mul(cc, cb)
                out.add_term((a, c1, bnew), coeff if sgn == 1 else field.neg(coeff))
        return out

    def tensor_diff(self, token):
        a, c, b = token
        field = self.field
        out = Lin(field)
        for t, cc in self.left.diff(a).terms.items():
            out.add_term((t, c, b), cc)
        sgn = -1 if self.left.degree(a) % 2 else 1
        for t, cc in self.coalg.diff(c).terms.items():
            out.add_term((a, t, b), cc if sgn == 1 else field.neg(cc))
        sgn = -1 if (self.left.degree(a) + self.coalg.degree(c)) % 2 else 1
        for t, cc in self.right.diff(b).terms.items():
            out.add_term((a, c, t), cc if sgn == 1 else field.neg(cc))
        return out

    def diff(self, token):
        out = self.tensor_diff(token)
        out.add_into(self.cap_left(self.t_left, token))
        out.add_into(self.cap_right(self.t_right, token), self.field.neg(self.field.one))
        return out

    def diff_lin(self, lin):
        out = Lin(self.field)
        for t, c in lin.terms.items():
            out.add_into(self.diff(t), c)
        return out

    def basis(self, degree, length_bound=None):
        """Basis tokens of one total degree (bar-coalgebra middles only)."""
        bar = self.coalg
        L = bar.length_bound if length_bound is None else length_bound
        out = []
        lo = -L
        for da in range(0, degree - lo + 1):
            if self.left.max_degree is not None and da > self.left.max_degree:
                break
            for a in self.left.basis(da):
                for dc in range(lo, degree - da + 1):
                    db = degree - da - dc
                    if db < 0:
                        continue
                    if self.right.max_degree is not None and db > self.right.max_degree:
                        continue
                    words = bar.basis(dc, length_bound=L)
                    if not words:
                        continue
                    bs = self.right.basis(db)
                    for w in words:
                        for b in bs:
                            out.append((a, w, b))
        return out

    def basis_all(self, degree_bound, length_bound=None):
        out = []
        L = self.coalg.length_bound if length_bound is None else length_bound
        for n in range(-L, degree_bound + 1):
            out.extend(self.basis(n, length_bound=L))
        return list(dict.fromkeys(out))

    def check_d_squared(self, degree_bound, length_bound=None):
        for token in self.basis_all(degree_bound, length_bound):
            if not self.diff_lin(self.diff(token)).is_zero():
                raise AssertionError(f"d^2 != 0 at {token}")
        return True


def two_sided_bar(left, algebra, right, t_left, t_right, length_bound=6):
    """B(A', A, A'') for twisting cochains t' = t_{A'} F', t'' = t_{A''} F''."""
    bar = BarCoalgebra(algebra, length_bound=length_bound)
    return TwistedComplex(left, bar, right, t_left, t_right)


def strict_two_sided_bar(left, algebra, right, f_left, f_right, length_bound=6):
    """The classical case F' = B f', F'' = B f'' for DGA maps f', f''."""
    bar = BarCoalgebra(algebra, length_bound=length_bound)
    t = tautological_cochain(bar)

    def tl(word):
        return f_left(t.apply_token(word))

    def tr(word):
        return f_right(t.apply_token(word))

    return TwistedComplex(
        left,
        bar,
        right,
        Hom(bar, left, 1, tl, name="f' t"),
        Hom(bar, right, 1, tr, name="f'' t"),
    )


def one_sided_bar(algebra_left, algebra, t_left, length_bound=6):
    """A' (x)_{t'} B A as a two-sided complex with trivial right factor."""
    k = base_field_dga(algebra.field)
    bar = BarCoalgebra(algebra, length_bound=length_bound)
    zero = Hom(bar, k, 1, lambda w: Lin(algebra.field), name="0")
    return TwistedComplex(algebra_left, bar, k, t_left, zero)


class BarTripleMap:
    """B(G', G, G''): the cochain map of two-sided bar constructions induced
    by a strictly commuting diagram of DGC maps.

    `F_left0`/`F_right0` are the structure maps of the source complex (as
    DGC maps B A_0 -> B A'_0 and B A_0 -> B A''_0), G', G, G'' the verticals.
    """

    def __init__(self, source, target, Gp, G, Gpp, F_left0, F_right0):
        self.source = source
        self.target = target
        self.Gp = Gp
        self.G = G
        self.Gpp = Gpp
        self.F_left0 = F_left0
        self.F_right0 = F_right0
        self.field = source.field
        self._t_left1 = tautological_cochain(Gp.target)
        self._t_right1 = tautological_cochain(Gpp.target)
        self._cache = {}

    def check_commuting(self, F_left1, F_right1, tokens):
        """Verify F'_1 G = G' F'_0 and F''_1 G = G'' F''_0 on bar tokens."""
        for w in tokens:
            lhs = F_left1(self.G.apply_token(w))
            rhs = self.Gp(self.F_left0.apply_token(w))
            if lhs.terms != rhs.terms:
                raise ValueError(f"left square does not commute at {w}")
            lhs = F_right1(self.G.apply_token(w))
            rhs = self.Gpp(self.F_right0.apply_token(w))
            if lhs.terms != rhs.terms:
                raise ValueError(f"right square does not commute at {w}")
        return True

    def upsilon_left(self, a_token, word):
        """Upsilon': k (x) B A_0 by the counit, ideal (x) B A_0 through G'."""
        A1 = self.Gp.target.algebra
        if a_token == UNIT:
            if word == ():
                return A1.unit_lin()
            return Lin(self.field)
        out = Lin(self.field)
        for w, c in self.F_left0.apply_token(word).terms.items():
            out.add_into(self._t_left1(self.Gp.apply_token((a_token,) + w)), c)
        return out

    def upsilon_right(self, word, b_token):
        """Upsilon'': with the Koszul sign of s^{-1} moving past the word."""
        A1 = self.Gpp.target.algebra
        if b_token == UNIT:
            if word == ():
                return A1.unit_lin()
            return Lin(self.field)
        sgn = -1 if self.source.coalg.degree(word) % 2 else 1
        out = Lin(self.field)
        for w, c in self.F_right0.apply_token(word).terms.items():
            out.add_into(self._t_right1(self.Gpp.apply_token(w + (b_token,))), c)
        return out.sign(sgn)

    def apply_token(self, token):
        got = self._cache.get(token)
        if got is not None:
            return got
        a, word, b = token
        field = self.field
        out = Lin(field)
        for parts, c in self.source.coalg.iterated_comult(3, word).terms.items():
            w1, w2, w3 = parts
            left = self.upsilon_left(a, w1)
            if left.is_zero():
                continue
            mid = self.G.apply_token(w2)
            if mid.is_zero():
                continue
            right = self.upsilon_right(w3, b)
            if right.is_zero():
                continue
            for ta, ca in left.terms.items():
                for tw, cw in mid.terms.items():
                    for tb, cb in right.terms.items():
                        out.add_term(
                            (ta, tw, tb),
                            field.mul(c, field.mul(ca, field.mul(cw, cb))),
                        )
        self._cache[token] = out
        return out

    def __call__(self, lin_or_token):
        if isinstance(lin_or_token, Lin):
            out = Lin(self.field)
            for t, c in lin_or_token.terms.items():
                out.add_into(self.apply_token(t), c)
            return out
        return self.apply_token(lin_or_token)

    def check_cochain_map(self, degree_bound, length_bound=None):
        for token in self.source.basis_all(degree_bound, length_bound):
            lhs = self(self.source.diff(token))
            rhs = self.target.diff_lin(self.apply_token(token))
            if lhs.terms != rhs.terms:
                raise AssertionError(f"triple map fails to be a cochain map at {token}")
        return True


def triple_map_from_dga_maps(source, target, g_left, g, g_right):
    """The triple map when all three verticals are B of DGA maps; equals
    g' (x) B g (x) g'' and is used as the oracle against BarTripleMap."""
    field = source.field

    def fn(token):
        a, word, b = token
        out = Lin(field)
        mid = bar_word_image(g, word, field)
        for ta, ca in g_left.apply_token(a).terms.items():
            for tw, cw in mid.terms.items():
                for tb, cb in g_right.apply_token(b).terms.items():
                    out.add_term((ta, tw, tb), field.mul(ca, field.mul(cw, cb)))
        return out

    return fn


def bar_word_image(g, word, field):
    partials = [((), field.one)]
    for x in word:
        img = g.apply_token(x)
        new = []
        for w, c in partials:
            for y, cy in img.terms.items():
                if y != UNIT:
                    new.append((w + (y,), field.mul(c, cy)))
        partials = new
        if not partials:
            break
    out = Lin(field)
    for w, c in partials:
        out.add_term(w, c)
    return out


def gamma_map(one_sided_source, one_sided_target, F, G):
    """The one-sided concatenation map Gamma: B (x)_{tF} B A -> X (x)_{tGF} B A
    for DGC maps B A -F-> B B -G-> B X."""
    field = one_sided_source.field
    tX = tautological_cochain(G.target)

    def fn(token):
        b, word, unit = token
        out = Lin(field)
        if b == UNIT:
            out.add_term((UNIT, word, UNIT), field.one)
            return out
        for p in range(len(word) + 1):
            w1, w2 = word[:p], word[p:]
            head = Lin(field)
            for w, c in F.apply_token(w1).terms.items():
                head.add_into(tX(G.apply_token((b,) + w)), c)
            for t, c in head.terms.items():
                out.add_term((t, w2, UNIT), c)
        return out

    return fn


def conjugation_iso(complex0, complex1, h_left, h_right):
    """(delta^L_{h'} (x) id)(id (x) delta^R_{h''}) as a map of twisted
    complexes, for twisting-cochain homotopies h': t'_0 => t'_1 and
    h'': t''_1 => t''_0 (note the direction)."""

    def fn(token):
        mid = complex0.cap_right(h_right, token)
        out = Lin(complex0.field)
        for t, c in mid.terms.items():
            out.add_into(complex1.cap_left(h_left, t), c)
        return out

    return fn


def check_homotopy_conditions(h, t0, t1, tokens):
    """eps h = eps, h(1) = 1, D h = t0 cup h - h cup t1 on the tokens."""
    A = h.target
    C = h.source
    if h.apply_token(C.unit_token).terms != {UNIT: A.field.one}:
        return False
    want = t0.cup(h).sub(h.cup(t1))
    Dh = h.hom_differential()
    for w in tokens:
        if Dh.apply_token(w).terms != want.apply_token(w).terms:
            return False
        val = h.apply_token(w)
        eps = A.aug(val)
        expect = C.counit(w)
        if not A.field.is_zero(A.field.sub(eps, expect)):
            return False
    return True
