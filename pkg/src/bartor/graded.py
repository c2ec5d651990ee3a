"""Graded linear algebra substrate: Koszul signs, shuffles, sparse linear
combinations, and signed application of tensor products of graded maps.

Every sign in the package routes through `koszul_sign` or through
`apply_factors`, which implements the rule

    (f_1 (x) ... (x) f_k)(x_1 (x) ... (x) x_k)
        = (-1)^{sum_{i<j} |f_j||x_i|}  f_1(x_1) (x) ... (x) f_k(x_k).
"""

from itertools import combinations


def koszul_sign(perm, degrees):
    """Sign of rearranging graded symbols by a permutation.

    `perm` lists the 1-based target position of each factor; `degrees` the
    degrees of the factors in source order.  The sign is the product of
    (-1)^{d_i d_j} over all inverted pairs i < j, perm[i] > perm[j].
    """
    n = len(perm)
    if len(degrees) != n:
        raise ValueError("permutation and degree list have different lengths")
    if sorted(perm) != list(range(1, n + 1)):
        raise ValueError(f"not a permutation of 1..{n}: {perm}")
    exp = 0
    for i in range(n):
        di = degrees[i]
        if di % 2 == 0:
            continue
        pi = perm[i]
        for j in range(i + 1, n):
            if pi > perm[j] and degrees[j] % 2 != 0:
                exp += 1
    return -1 if exp % 2 else 1


def permute_tuple(perm, items):
    """Rearrange `items` so the i-th lands at target position perm[i]."""
    out = [None] * len(items)
    for i, p in enumerate(perm):
        out[p - 1] = items[i]
    return tuple(out)


def compose_perms(sigma, tau):
    """Target positions of first applying tau, then sigma."""
    return tuple(sigma[t - 1] for t in tau)


def enumerate_shuffles(p, q):
    """All (p,q)-shuffles as target-position tuples of length p+q."""
    if p < 0 or q < 0:
        raise ValueError("shuffle block sizes must be nonnegative")
    n = p + q
    shuffles = []
    for first_block in combinations(range(1, n + 1), p):
        rest = [k for k in range(1, n + 1) if k not in first_block]
        shuffles.append(tuple(first_block) + tuple(rest))
    return shuffles


def binomial_sign(n):
    """(-1)^{n(n-1)/2}, the sign of (s^{-1})^{(x)n} s^{(x)n}."""
    return -1 if (n * (n - 1) // 2) % 2 else 1


def iterated_shift_sign(op_degree, degrees):
    """Sign of applying op^{(x)n} (op of odd degree `op_degree`) to a pure
    tensor with the given factor degrees."""
    exp = 0
    if op_degree % 2:
        run = 0
        for d in reversed(degrees):
            exp += run * d
            run += 1
    return -1 if exp % 2 else 1


class Lin:
    """Sparse linear combination of hashable basis tokens over a Field.

    Zero coefficients are never stored, so equality is dict equality.
    """

    __slots__ = ("field", "terms")

    def __init__(self, field, terms=None):
        self.field = field
        self.terms = {} if terms is None else terms

    @classmethod
    def single(cls, field, token, coeff=None):
        c = field.one if coeff is None else coeff
        if field.is_zero(c):
            return cls(field)
        return cls(field, {token: c})

    def add_term(self, token, coeff):
        terms = self.terms
        if token in terms:
            c = self.field.add(terms[token], coeff)
            if self.field.is_zero(c):
                del terms[token]
            else:
                terms[token] = c
        elif not self.field.is_zero(coeff):
            terms[token] = coeff

    def add_into(self, other, coeff=None):
        if coeff is not None and self.field.is_zero(coeff):
            return self
        for token, c in other.terms.items():
            self.add_term(token, c if coeff is None else self.field.mul(coeff, c))
        return self

    def __add__(self, other):
        out = Lin(self.field, dict(self.terms))
        return out.add_into(other)

    def __sub__(self, other):
        out = Lin(self.field, dict(self.terms))
        return out.add_into(other, self.field.neg(self.field.one))

    def __neg__(self):
        neg = self.field.neg
        return Lin(self.field, {t: neg(c) for t, c in self.terms.items()})

    def scale(self, coeff):
        if self.field.is_zero(coeff):
            return Lin(self.field)
        mul = self.field.mul
        return Lin(self.field, {t: mul(coeff, c) for t, c in self.terms.items()})

    def sign(self, sgn):
        return self if sgn == 1 else -self

    def map_tokens(self, fn):
        """Linear extension of a token-level map fn(token) -> Lin."""
        out = Lin(self.field)
        for token, c in self.terms.items():
            out.add_into(fn(token), c)
        return out

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, Lin) and self.field == other.field and self.terms == other.terms

    def __iter__(self):
        return iter(self.terms.items())

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = [f"{self.field.format(c)}*{t!r}" for t, c in sorted(self.terms.items(), key=lambda kv: repr(kv[0]))]
        return " + ".join(bits)


def zero(field):
    return Lin(field)


def apply_factors(field, pieces, parts, part_degrees):
    """Evaluate a tensor product of graded maps on a pure tensor.

    `pieces` is a sequence of (degree, fn) with fn(token) -> Lin over new
    tokens; `parts` the factor tokens; `part_degrees` their degrees.  Returns
    a Lin over tuples of new tokens, with the Koszul evaluation sign.
    """
    exp = 0
    below = 0
    for (pdeg, _), d in zip(pieces, part_degrees):
        if pdeg % 2:
            exp += below
        below += d
    sgn = -1 if exp % 2 else 1

    prefixes = [((), field.one if sgn == 1 else field.neg(field.one))]
    for (_, fn), token in zip(pieces, parts):
        image = fn(token)
        if image.is_zero():
            return Lin(field)
        new_prefixes = []
        for prefix, c in prefixes:
            for tok, c2 in image.terms.items():
                new_prefixes.append((prefix + (tok,), field.mul(c, c2)))
        prefixes = new_prefixes
    out = Lin(field)
    for parts_out, c in prefixes:
        out.add_term(parts_out, c)
    return out
