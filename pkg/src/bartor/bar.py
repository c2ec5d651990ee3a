"""The bar construction B A of an augmented DGA, as a DG coalgebra.

Words are tuples of augmentation-ideal tokens of A; the empty tuple is the
unit word.  A word [x_1|...|x_n] has total degree sum(|x_j| - 1); all signs
come from the Koszul rule applied to the desuspended letters.
"""

from .dg import UNIT, Coalgebra, Hom, unit_counit_hom, cup_inverse
from .graded import Lin, koszul_sign, enumerate_shuffles, permute_tuple


class BarCoalgebra(Coalgebra):
    """B A with deconcatenation comultiplication and the bar differential."""

    unit_token = ()

    def __init__(self, algebra, length_bound=6):
        self.algebra = algebra
        self.field = algebra.field
        self.length_bound = length_bound
        self.name = f"B({algebra.name})"

    def deg(self, word):
        d = self.algebra.deg
        return sum(d(x) - 1 for x in word)

    def word_degree(self, word):
        return self.deg(word)

    def counit(self, token):
        return self.field.one if token == () else self.field.zero

    def comult(self, word):
        out = Lin(self.field)
        for p in range(len(word) + 1):
            out.add_term((word[:p], word[p:]), self.field.one)
        return out

    def nilpotence_bound(self, word):
        return len(word) + 1

    def diff_token(self, word):
        """Internal plus external differential."""
        A = self.algebra
        field = self.field
        out = Lin(field)
        prefix = 0  # degree of the desuspended prefix
        for j, x in enumerate(word):
            dx = A.diff(x)
            if not dx.is_zero():
                # d(s^{-1}x) = -s^{-1}dx, moved past the prefix
                sgn = -1 if (prefix + 1) % 2 else 1
                for t, c in dx.terms.items():
                    out.add_term(
                        word[:j] + (t,) + word[j + 1 :],
                        c if sgn == 1 else field.neg(c),
                    )
            prefix += A.deg(x) - 1
        prefix = 0
        for j in range(len(word) - 1):
            x, y = word[j], word[j + 1]
            # evaluation sign (-1)^prefix for the degree-1 operator, times
            # (-1)^{|x|-1} from s^{(x)2} hitting s^{-1}x
            sgn = -1 if (prefix + A.deg(x) + 1) % 2 else 1
            prod = A.mul(x, y)
            if UNIT in prod.terms:
                raise AssertionError(f"product of ideal elements hit the unit: {x} * {y}")
            for t, c in prod.terms.items():
                out.add_term(
                    word[:j] + (t,) + word[j + 2 :],
                    c if sgn == 1 else field.neg(c),
                )
            prefix += A.deg(x) - 1
        return out

    def basis(self, n, length_bound=None):
        """All words of total degree n with at most length_bound letters."""
        L = self.length_bound if length_bound is None else length_bound
        A = self.algebra
        out = []

        def rec(remaining, slots, acc):
            if remaining == 0:
                out.append(tuple(acc))
            if slots == 0:
                return
            # a letter of degree d contributes d - 1; later letters >= -1 each
            top = remaining + (slots - 1) + 1
            if A.max_degree is not None:
                top = min(top, A.max_degree)
            for d in range(0, top + 1):
                if remaining - (d - 1) < -(slots - 1):
                    break
                for x in A.ideal_basis(d):
                    acc.append(x)
                    rec(remaining - (d - 1), slots - 1, acc)
                    acc.pop()

        rec(n, L, [])
        return tuple(out)

    def basis_all(self, degree_bound, length_bound=None):
        L = self.length_bound if length_bound is None else length_bound
        out = []
        for n in range(-L, degree_bound + 1):
            out.extend(self.basis(n, L))
        return out


def concatenate(word1, word2):
    return word1 + word2


def tautological_cochain(bar):
    """t_A: B A -> A, nonzero only on one-letter words."""
    A = bar.algebra

    def fn(word):
        if len(word) == 1:
            return Lin.single(A.field, word[0])
        return Lin(A.field)

    return Hom(bar, A, 1, fn, name="t")


def is_twisting_cochain(t, tokens):
    """Check eps t = 0, t(1) = 0 and the Maurer-Cartan identity on tokens."""
    A = t.target
    if not t.apply_token(t.source.unit_token).is_zero():
        return False
    mc = t.hom_differential().sub(t.cup(t))
    for token in tokens:
        val = t.apply_token(token)
        if not A.field.is_zero(A.aug(val)):
            return False
        if not mc.apply_token(token).is_zero():
            return False
    return True


def extend_to_dgc_map(t, target_bar, name=None):
    """Cofree extension of a degree-1 map t: C -> ideal(A) to C -> B A.

    The n-letter component concatenates the one-letter words t(c_(i)) over
    the n-fold reduced comultiplication; no Koszul signs arise because each
    factor s^{-1} t has degree 0.
    """
    C = t.source
    A = target_bar.algebra
    field = A.field

    def fn(token):
        out = Lin(field)
        c0 = C.counit(token)
        if not field.is_zero(c0):
            out.add_term((), c0)
        for n in range(1, C.nilpotence_bound(token)):
            for parts, c in C.iterated_reduced_comult(n, token).terms.items():
                partials = [((), c)]
                dead = False
                for part in parts:
                    letter = t.apply_token(part)
                    if letter.is_zero():
                        dead = True
                        break
                    new = []
                    for word, cc in partials:
                        for x, cx in letter.terms.items():
                            if x == UNIT:
                                raise AssertionError("twisting cochain hit the unit")
                            new.append((word + (x,), field.mul(cc, cx)))
                    partials = new
                if dead:
                    continue
                for word, cc in partials:
                    out.add_term(word, cc)
        return out

    return Hom(C, target_bar, 0, fn, name=name)


def bar_map(f, source_bar, target_bar):
    """B f for a DGA map f, acting letterwise."""
    field = target_bar.field

    def fn(word):
        partials = [((), field.one)]
        for x in word:
            img = f.apply_token(x)
            new = []
            for w, c in partials:
                for y, cy in img.terms.items():
                    if y == UNIT:
                        raise AssertionError("DGA map not augmentation-preserving")
                    new.append((w + (y,), field.mul(c, cy)))
            partials = new
            if not partials:
                break
        out = Lin(field)
        for w, c in partials:
            out.add_term(w, c)
        return out

    return Hom(source_bar, target_bar, 0, fn, name=f"B({f.name})")


def shuffle_map(bars_tensor, bar_tensor):
    """The shuffle DGC map B A (x) B B -> B(A (x) B).

    `bars_tensor` is a TensorCoalgebra of two bar constructions, `bar_tensor`
    the bar construction of the TensorDga.
    """
    A = bars_tensor.left.algebra
    B = bars_tensor.right.algebra
    field = bar_tensor.field

    def fn(pair):
        w, v = pair
        p, q = len(w), len(v)
        degs = [A.deg(x) - 1 for x in w] + [B.deg(y) - 1 for y in v]
        letters = [(x, UNIT) for x in w] + [(UNIT, y) for y in v]
        out = Lin(field)
        for sh in enumerate_shuffles(p, q):
            sgn = koszul_sign(sh, degs)
            word = permute_tuple(sh, letters)
            out.add_term(word, field.one if sgn == 1 else field.neg(field.one))
        return out

    return Hom(bars_tensor, bar_tensor, 0, fn, name="shuffle")


def shuffle_product_tokens(bar, w, v):
    """The commutative shuffle product of two words in B A."""
    A = bar.algebra
    if not A.commutative:
        raise ValueError("shuffle product needs a commutative algebra")
    field = bar.field
    p, q = len(w), len(v)
    degs = [A.deg(x) - 1 for x in w] + [A.deg(y) - 1 for y in v]
    letters = list(w) + list(v)
    out = Lin(field)
    for sh in enumerate_shuffles(p, q):
        sgn = koszul_sign(sh, degs)
        out.add_term(permute_tuple(sh, letters), field.one if sgn == 1 else field.neg(field.one))
    return out


def homotopy_adjunction(H):
    """Twisting-cochain homotopy h = eta eps + t_A H from a DGC homotopy H."""
    bar = H.target
    t = tautological_cochain(bar)
    C = H.source
    A = bar.algebra
    eta_eps = unit_counit_hom(C, A)

    def fn(token):
        out = Lin(A.field, dict(eta_eps.apply_token(token).terms))
        return out.add_into(t(H.apply_token(token)))

    return Hom(C, A, 0, fn, name="adjoint homotopy")


def reconstruct_dgc_homotopy(h, F, G, target_bar):
    """Rebuild the DGC homotopy H with t_A H = h - eta eps, Delta H = (F (x) H
    + H (x) G) Delta; inverse of `homotopy_adjunction`."""
    C = h.source
    A = target_bar.algebra
    field = A.field
    tF = tautological_cochain(target_bar)

    def t_of(M):
        def fn(token):
            return tF(M.apply_token(token))

        return Hom(C, A, 1, fn)

    t_left = t_of(F)
    t_right = t_of(G)
    eta_eps = unit_counit_hom(C, A)
    h_bar = h.sub(eta_eps)

    def fn(token):
        out = Lin(field)
        bound = C.nilpotence_bound(token)
        for n in range(1, bound):
            for parts, c in C.iterated_reduced_comult(n, token).terms.items():
                for slot in range(n):
                    # (s^{-1}t_left)^{(x)slot} (x) s^{-1}h_bar (x) (s^{-1}t_right)^{...}
                    # the middle factor has degree -1, giving a Koszul sign over
                    # the degrees of the first `slot` parts
                    sgn_exp = sum(C.degree(p) for p in parts[:slot])
                    partials = [((), field.one if sgn_exp % 2 == 0 else field.neg(field.one))]
                    dead = False
                    for i, part in enumerate(parts):
                        factor = t_left if i < slot else (h_bar if i == slot else t_right)
                        letter = factor.apply_token(part)
                        letter = A.reduce(letter) if factor is h_bar else letter
                        if letter.is_zero():
                            dead = True
                            break
                        new = []
                        for word, cc in partials:
                            for x, cx in letter.terms.items():
                                if x != UNIT:
                                    new.append((word + (x,), field.mul(cc, cx)))
                        partials = new
                    if dead:
                        continue
                    for word, cc in partials:
                        out.add_term(word, field.mul(c, cc))
        return out

    return Hom(C, target_bar, -1, fn, name="reconstructed homotopy")


def gauge_transform(t, h):
    """The twisting cochain (Dh + h cup t) cup h^{cup -1}, homotopic to t via h.

    h must be degree 0 with h(1) = 1; this is the standard way of producing
    twisting cochains (hence DGC self-maps of B A) that are not of the form
    B f."""
    hinv = cup_inverse(h)
    return h.hom_differential().add(h.cup(t)).cup(hinv)
