"""Finite simplicial sets, normalized cochain algebras, and the interval-cut
(surjection) operations: cup-i products and the homotopy Gerstenhaber family.

Simplices are canonical forms (degens, name) with degens a strictly
decreasing tuple of degeneracy indices applied to a nondegenerate simplex.
"""

from functools import lru_cache

from .fields import QQ
from .graded import Lin, koszul_sign
from .dg import UNIT, Dga, DgaMap
from .linalg import cohomology_data


def face_of_form(X, i, form):
    """The i-th face of a canonical simplex form."""
    degens, name = form
    if not degens:
        return X.faces[name][i]
    j = degens[0]
    rest = (degens[1:], name)
    if i < j:
        return degenerate(face_of_form(X, i, rest), j - 1)
    if i in (j, j + 1):
        return rest
    return degenerate(face_of_form(X, i - 1, rest), j)


def degenerate(form, j):
    """Apply s_j and recanonicalize (s_j s_d = s_{d+1} s_j for j <= d)."""
    degens, name = form
    new = [d + 1 if d >= j else d for d in degens]
    new.append(j)
    new.sort(reverse=True)
    return (tuple(new), name)


class FiniteSimplicialSet:
    """Nondegenerate simplices with face maps; degeneracies handled formally.

    `simplices` maps name -> dimension; `faces` maps name -> tuple of
    canonical forms of the faces (length dim + 1).
    """

    def __init__(self, name, simplices, faces, basepoint):
        self.name = name
        self.simplices = dict(simplices)
        self.faces = {k: tuple(v) for k, v in faces.items()}
        self.basepoint = basepoint
        if UNIT in self.simplices:
            raise ValueError(f"simplex name {UNIT!r} is reserved for the unit cochain")
        if basepoint not in self.simplices or self.simplices[basepoint] != 0:
            raise ValueError(f"basepoint {basepoint!r} is not a vertex")
        self.dimension = max(self.simplices.values(), default=0)
        self.validate()

    def nondegenerate(self, dim):
        return tuple(sorted(n for n, d in self.simplices.items() if d == dim))

    def dim_of(self, form):
        degens, name = form
        return self.simplices[name] + len(degens)

    def validate(self):
        for name, dim in self.simplices.items():
            if dim == 0:
                if name in self.faces and self.faces[name]:
                    raise ValueError(f"vertex {name} has faces")
                continue
            fs = self.faces.get(name)
            if fs is None or len(fs) != dim + 1:
                raise ValueError(f"simplex {name} of dimension {dim} needs {dim + 1} faces")
            for f in fs:
                degens, base = f
                if base not in self.simplices:
                    raise ValueError(f"face of {name} references unknown simplex {base}")
                if self.dim_of(f) != dim - 1:
                    raise ValueError(f"face of {name} has wrong dimension: {f}")
        # simplicial identities d_i d_j = d_{j-1} d_i for i < j
        for name, dim in self.simplices.items():
            if dim < 2:
                continue
            form = ((), name)
            for j in range(1, dim + 1):
                for i in range(j):
                    lhs = face_of_form(self, i, face_of_form(self, j, form))
                    rhs = face_of_form(self, j - 1, face_of_form(self, i, form))
                    if lhs != rhs:
                        raise ValueError(f"simplicial identity fails on {name}: d_{i} d_{j}")

    def restrict(self, name, vertices, ambient_dim=None):
        """The face of a nondegenerate simplex on a sorted tuple of vertex
        positions; may be degenerate."""
        n = self.simplices[name] if ambient_dim is None else ambient_dim
        form = ((), name)
        for i in range(n, -1, -1):
            if i not in vertices:
                form = face_of_form(self, i, form)
        return form

    def __repr__(self):
        return f"<SimplicialSet {self.name}>"


def standard_simplex(n, name=None):
    """Delta^n as a simplicial complex on vertices 0..n."""
    simplices = {}
    faces = {}
    import itertools

    for k in range(n + 1):
        for verts in itertools.combinations(range(n + 1), k + 1):
            nm = "s" + "".join(str(v) for v in verts)
            simplices[nm] = k
            if k > 0:
                faces[nm] = tuple(
                    ((), "s" + "".join(str(v) for j, v in enumerate(verts) if j != i))
                    for i in range(k + 1)
                )
    return FiniteSimplicialSet(name or f"Delta{n}", simplices, faces, "s0")


def boundary_simplex(n, name=None):
    """The boundary of Delta^n (all proper faces)."""
    full = standard_simplex(n)
    top = "s" + "".join(str(v) for v in range(n + 1))
    simplices = {k: v for k, v in full.simplices.items() if k != top}
    faces = {k: v for k, v in full.faces.items() if k != top}
    return FiniteSimplicialSet(name or f"dDelta{n}", simplices, faces, "s0")


def minimal_circle(name="S1"):
    """One vertex, one edge."""
    return FiniteSimplicialSet(
        name,
        {"v": 0, "e": 1},
        {"e": (((), "v"), ((), "v"))},
        "v",
    )


def product_space(X, Y, name=None):
    """Degreewise product; nondegenerate simplices are the pairs of forms
    with disjoint degeneracy index sets."""
    simplices = {}
    faces = {}
    pair_names = {}

    def forms_of_dim(Z, n):
        out = []
        for base, d in Z.simplices.items():
            k = n - d
            if k < 0:
                continue
            for degs in descending_degens(k, d):
                out.append((degs, base))
        return out

    top = X.dimension + Y.dimension
    for n in range(top + 1):
        for fx in forms_of_dim(X, n):
            for fy in forms_of_dim(Y, n):
                if set(fx[0]) & set(fy[0]):
                    continue
                nm = f"({form_name(fx)},{form_name(fy)})"
                simplices[nm] = n
                pair_names[(fx, fy)] = nm
    for (fx, fy), nm in pair_names.items():
        n = simplices[nm]
        if n == 0:
            continue
        fs = []
        for i in range(n + 1):
            gx = face_of_form(X, i, fx)
            gy = face_of_form(Y, i, fy)
            fs.append(product_canonical(gx, gy, pair_names))
        faces[nm] = tuple(fs)
    base = pair_names[(((), X.basepoint), ((), Y.basepoint))]
    return FiniteSimplicialSet(name or f"{X.name}x{Y.name}", simplices, faces, base)


def descending_degens(k, base_dim):
    """Strictly decreasing degeneracy tuples of length k on a base_dim simplex."""
    if k == 0:
        return [()]
    out = []

    def rec(remaining, max_allowed, acc):
        if remaining == 0:
            out.append(tuple(acc))
            return
        # after applying `len(acc)` more degeneracies below, the intermediate
        # dimension when s_j is applied is base_dim + remaining - 1, so
        # j <= base_dim + remaining - 1
        for j in range(min(max_allowed, base_dim + remaining - 1), -1, -1):
            acc.append(j)
            rec(remaining - 1, j - 1, acc)
            acc.pop()

    rec(k, base_dim + k - 1, [])
    return out


def form_name(form):
    degens, name = form
    return "".join(f"s{j}" for j in degens) + name


def product_canonical(fx, fy, pair_names):
    """Canonical form of a pair of forms inside the product."""
    degens = []
    while True:
        common = set(fx[0]) & set(fy[0])
        if not common:
            break
        j = max(common)
        fx = strip_degeneracy(fx, j)
        fy = strip_degeneracy(fy, j)
        degens.append(j)
    degens.sort(reverse=True)
    # re-apply shared degeneracies on the product simplex name
    form = ((), pair_names[(fx, fy)])
    for j in sorted(degens):
        form = degenerate(form, j)
    return form


def strip_degeneracy(form, j):
    """Inverse of `degenerate(-, j)` on a canonical form containing j."""
    degens, name = form
    out = [d - 1 if d > j else d for d in degens if d != j]
    return (tuple(out), name)


class CochainDga(Dga):
    """Normalized cochains of a finite simplicial set, over a chosen field.

    Tokens are names of nondegenerate simplices; in degree zero the duals of
    the non-basepoint vertices together with the unit give the adapted basis.
    """

    def __init__(self, space, field=QQ):
        self.space = space
        self.field = field
        self.name = f"C({space.name})"
        self.max_degree = space.dimension
        self.commutative = False
        self._vertices = space.nondegenerate(0)
        self._diff_cache = {}
        self._mul_cache = {}

    def ideal_basis(self, n):
        if n == 0:
            return tuple(v for v in self._vertices if v != self.space.basepoint)
        if n < 0 or n > self.space.dimension:
            return ()
        return self.space.nondegenerate(n)

    def deg(self, token):
        return self.space.simplices[token]

    def _adapted(self, lin_over_simplices):
        """Rewrite a degree-0 part: basepoint dual -> 1 - sum of the others."""
        out = Lin(self.field)
        bp = self.space.basepoint
        for t, c in lin_over_simplices.terms.items():
            if t == bp:
                out.add_term(UNIT, c)
                for v in self._vertices:
                    if v != bp:
                        out.add_term(v, self.field.neg(c))
            else:
                out.add_term(t, c)
        return out

    def eval_on_form(self, token, form):
        """Value of the dual basis cochain on a possibly degenerate simplex."""
        degens, name = form
        if degens:
            return self.field.zero
        return self.field.one if name == token else self.field.zero

    def unit_value_on(self, form):
        """Value of the unit cochain (1 on every vertex)."""
        degens, name = form
        if self.space.simplices[name] + len(degens) == 0:
            return self.field.one
        return self.field.zero

    def value_on_form(self, lin, form):
        """Evaluate an adapted-basis element on a simplex form."""
        total = self.field.zero
        for t, c in lin.terms.items():
            v = self.unit_value_on(form) if t == UNIT else self.eval_on_form(t, form)
            total = self.field.add(total, self.field.mul(c, v))
        return total

    def diff_token(self, token):
        got = self._diff_cache.get(token)
        if got is not None:
            return got
        n = self.deg(token)
        out = Lin(self.field)
        for sigma in self.space.nondegenerate(n + 1):
            total = self.field.zero
            sgn = 1
            for i in range(n + 2):
                f = face_of_form(self.space, i, ((), sigma))
                val = self.eval_on_form(token, f)
                if not self.field.is_zero(val):
                    total = self.field.add(total, val if sgn == 1 else self.field.neg(val))
                sgn = -sgn
            out.add_term(sigma, total)
        out = self._adapted(out) if n == 0 else out
        # d of a vertex dual lands in degree 1; no adapted rewrite needed there
        self._diff_cache[token] = out
        return out

    def mul_tokens(self, t1, t2):
        key = (t1, t2)
        got = self._mul_cache.get(key)
        if got is not None:
            return got
        out = self._interval_cut_tokens((1, 2), (t1, t2))
        self._mul_cache[key] = out
        return out

    def _interval_cut_tokens(self, seq, arg_tokens):
        """Interval-cut operation on dual-basis cochains, as a Lin over the
        adapted basis; see `interval_cut` for the conventions."""
        n_out = sum(self.deg(t) for t in arg_tokens) - (len(seq) - len(set(seq)))
        out = Lin(self.field)
        if n_out < 0:
            return out
        for sigma in self.space.nondegenerate(n_out):
            c = interval_cut_value(self, seq, arg_tokens, sigma)
            if not self.field.is_zero(c):
                out.add_term(sigma, c)
        if n_out == 0:
            out = self._adapted(out)
        return out


def _cuts(m, n):
    """All cut tuples 0 = c_0 <= ... <= c_m = n of length m + 1."""
    out = []

    def rec(k, last, acc):
        if k == m:
            out.append(tuple(acc) + (n,))
            return
        for c in range(last, n + 1):
            acc.append(c)
            rec(k + 1, c, acc)
            acc.pop()

    rec(1, 0, [0])
    return out


@lru_cache(maxsize=None)
def _cut_data(seq, n):
    """Precomputed cut combinatorics for a surjection sequence on an
    n-simplex: list of (sign, vertex tuples per value)."""
    m = len(seq)
    r = max(seq)
    last_occurrence = {v: max(i for i, s in enumerate(seq) if s == v) for v in set(seq)}
    data = []
    for cut in _cuts(m, n):
        # cut = (c_0 .. c_m); interval k spans [c_{k-1}, c_k]
        degrees = []
        pieces = []
        position_exp = 0
        ok = True
        for k in range(1, m + 1):
            lo, hi = cut[k - 1], cut[k]
            caesura = last_occurrence[seq[k - 1]] != k - 1
            degrees.append(hi - lo + (1 if caesura else 0))
            pieces.append((seq[k - 1], tuple(range(lo, hi + 1))))
            if caesura:
                position_exp += hi + 1
        # group pieces by value, keeping per-value order
        order = sorted(range(m), key=lambda k: (pieces[k][0], k))
        perm = [0] * m
        for target, k in enumerate(order):
            perm[k] = target + 1
        sgn = koszul_sign(tuple(perm), degrees)
        if position_exp % 2:
            sgn = -sgn
        groups = []
        for v in range(1, r + 1):
            verts = []
            for k in range(m):
                if pieces[k][0] == v:
                    verts.extend(pieces[k][1])
            if len(set(verts)) != len(verts):
                ok = False
                break
            groups.append(tuple(verts))
        if ok:
            data.append((sgn, tuple(groups)))
    return data


def interval_cut_value(A, seq, arg_tokens, sigma):
    """Value of the interval-cut operation for `seq` on dual-basis cochains
    `arg_tokens`, evaluated on the nondegenerate simplex `sigma`.

    Conventions: intervals overlap at their endpoints; a repeated vertex in
    the simplex assigned to one argument kills the term (normalization); the
    sign of each cut is the Koszul sign of sorting the intervals by argument,
    an interval graded by its edge count plus one if it is a caesura (a
    non-final occurrence of its argument).
    """
    field = A.field
    n = A.deg(sigma)
    space = A.space
    total = field.zero
    degs = tuple(A.deg(t) for t in arg_tokens)
    for sgn, groups in _cut_data(tuple(seq), n):
        val = field.one if sgn == 1 else field.neg(field.one)
        dead = False
        for token, verts, want in zip(arg_tokens, groups, degs):
            if len(verts) - 1 != want:
                dead = True
                break
            face = space.restrict(sigma, verts)
            v = A.eval_on_form(token, face)
            if field.is_zero(v):
                dead = True
                break
            val = field.mul(val, v)
        if not dead:
            total = field.add(total, val)
    return total


def interval_cut(A, seq, args):
    """Interval-cut operation applied to adapted-basis elements of the
    normalized cochain algebra A; multilinear in the args."""
    seq = tuple(seq)
    if max(seq) != len(args):
        raise ValueError(f"sequence {seq} has arity {max(seq)}, got {len(args)} arguments")
    if any(a == b for a, b in zip(seq, seq[1:])):
        raise ValueError(f"degenerate sequence {seq}")
    field = A.field
    out = Lin(field)

    def token_args(tokens, coeff):
        out.add_into(A._interval_cut_tokens(seq, tokens), coeff)

    def expand(i, tokens, coeff):
        if i == len(args):
            token_args(tuple(tokens), coeff)
            return
        for t, c in args[i].terms.items():
            if t == UNIT:
                # the unit is the sum of all vertex duals
                for v in A._vertices:
                    tokens.append(v)
                    expand(i + 1, tokens, field.mul(coeff, c))
                    tokens.pop()
            else:
                tokens.append(t)
                expand(i + 1, tokens, field.mul(coeff, c))
                tokens.pop()

    expand(0, [], field.one)
    return out


def cup_i_sequence(i):
    return tuple(1 if k % 2 == 0 else 2 for k in range(i + 2))


def cup_i(A, i, a, b):
    """Steenrod cup-i product of adapted-basis elements."""
    if i < 0:
        raise ValueError("cup-i needs i >= 0")
    return interval_cut(A, cup_i_sequence(i), [a, b])


def e_sequence(ell):
    """(1, 2, 1, 3, 1, ..., 1, ell+1, 1)."""
    seq = [1]
    for j in range(2, ell + 2):
        seq.extend((j, 1))
    return tuple(seq)


def f_sequence(p, q):
    """The extended-HGA sequences giving F_{p,q}."""
    seq = []
    for j in range(1, q + 1):
        seq.extend((1, p + j))
    for i in range(1, p + 1):
        seq.extend((i, p + q))
    return tuple(seq)


def e_op(A, ell, a, bs):
    """The homotopy Gerstenhaber operation E_ell(a; b_1, ..., b_ell)."""
    if ell == 0:
        return a
    if len(bs) != ell:
        raise ValueError("arity mismatch")
    return interval_cut(A, e_sequence(ell), [a] + list(bs))


def f_pq(A, p, q, bs, cs):
    """The operation F_{p,q}(b_1..b_p; c_1..c_q); provided for inspection."""
    if len(bs) != p or len(cs) != q:
        raise ValueError("arity mismatch")
    return interval_cut(A, f_sequence(p, q), list(bs) + list(cs))


def simplicial_map_cochains(f_vertices, Y, X, CX, CY):
    """Pullback DgaMap CX -> CY of a simplicial map Y -> X given on
    nondegenerate simplices (name in Y -> form in X)."""

    def fn(token):
        n = CX.deg(token)
        out = Lin(CX.field)
        for tau in Y.nondegenerate(n):
            val = CX.eval_on_form(token, f_vertices[tau])
            if not CX.field.is_zero(val):
                out.add_term(tau, val)
        if n == 0:
            out = CY._adapted(out)
        return out

    return DgaMap(CX, CY, fn, name="pullback")


def space_cohomology(A, top=None):
    """Cohomology ranks of a normalized cochain algebra, by exact elimination."""
    top = A.space.dimension if top is None else top
    tokens = {n: list(A.basis(n)) for n in range(top + 1)}
    data = cohomology_data(A.field, tokens, lambda t: A.diff(t), range(top + 1))
    return {n: data[n].rank for n in range(top + 1)}
