"""Tor of a polynomial algebra with coefficients in two module algebras,
computed two independent ways: as the cohomology of the two-sided bar
construction (with its product), and via the Koszul resolution.

All inputs are cohomology-ring presentations: polynomial algebras on
even-degree generators and degree-preserving algebra maps.
"""

from fractions import Fraction

from .fields import QQ
from .graded import Lin
from .dg import UNIT, DgaMap, base_field_dga, generator_images_map, polynomial_dga
from .hga import trivial_hga
from .linalg import DegreeCohomology, Solver, cohomology_data
from .twisted import strict_two_sided_bar
from .barproduct import HgaTriple, mu_tilde_lin


class AlgebraPresentation:
    """A polynomial algebra on named generators of even positive degree."""

    def __init__(self, name, generators, field=QQ):
        for g, d in generators:
            if d % 2 or d < 2:
                raise ValueError(f"generator {g} must have even degree >= 2, got {d}")
        names = [g for g, _ in generators]
        if len(set(names)) != len(names):
            raise ValueError("duplicate generator names")
        self.name = name
        self.generators = list(generators)
        self.field = field
        self.algebra = polynomial_dga(field, generators, name=name) if generators else base_field_dga(field)

    def parse(self, text):
        return parse_polynomial(self, text)

    def format_element(self, lin):
        if lin.is_zero():
            return "0"
        bits = []
        for token, c in sorted(lin.terms.items(), key=lambda kv: str(kv[0])):
            mono = self.algebra.format_token(token) if token != UNIT else "1"
            coeff = self.field.format(c)
            if coeff == "1" and mono != "1":
                bits.append(mono)
            elif coeff == "-1" and mono != "1":
                bits.append(f"-{mono}")
            elif mono == "1":
                bits.append(coeff)
            else:
                bits.append(f"{coeff}*{mono}")
        out = bits[0]
        for b in bits[1:]:
            out += " - " + b[1:] if b.startswith("-") else " + " + b
        return out


class AlgebraMap:
    """A degree-preserving algebra map given by generator images."""

    def __init__(self, source, target, images):
        self.source = source
        self.target = target
        self.images = dict(images)
        lins = []
        for g, d in source.generators:
            if g not in self.images:
                raise ValueError(f"missing image for generator {g}")
            img = self.images[g]
            if isinstance(img, str):
                img = target.parse(img)
            if not img.is_zero():
                degs = {target.algebra.degree(t) for t in img.terms}
                if degs != {d}:
                    raise ValueError(f"image of {g} is not homogeneous of degree {d}")
            lins.append(img)
        extra = set(self.images) - {g for g, _ in source.generators}
        if extra:
            raise ValueError(f"images given for unknown generators: {sorted(extra)}")
        self.dga_map = generator_images_map(source.algebra, target.algebra, lins, name="restriction")


def parse_polynomial(presentation, text):
    """Parse 'c*g^e*h + ... - ...' into a Lin over monomial tokens."""
    A = presentation.algebra
    field = presentation.field
    gen_index = {g: i for i, (g, _) in enumerate(presentation.generators)}
    tokens = tokenize_poly(text)
    pos = 0

    def peek():
        return tokens[pos] if pos < len(tokens) else None

    def advance():
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    def parse_factor():
        tok = peek()
        if tok is None:
            raise ValueError(f"unexpected end of polynomial in {text!r}")
        kind, val = tok
        if kind == "int":
            advance()
            return field(val), None
        if kind == "name":
            advance()
            if val not in gen_index:
                raise ValueError(f"unknown generator {val!r} in {text!r}")
            e = 1
            if peek() == ("op", "^"):
                advance()
                k2, v2 = advance() if peek() else (None, None)
                if k2 != "int" or v2 < 0:
                    raise ValueError(f"bad exponent after ^ in {text!r}")
                e = v2
            exps = [0] * len(gen_index)
            exps[gen_index[val]] = e
            return field(1), tuple(exps)
        raise ValueError(f"unexpected token {val!r} in {text!r}")

    def parse_term():
        coeff, mono = parse_factor()
        exps = list(mono) if mono else [0] * len(gen_index)
        while peek() == ("op", "*"):
            advance()
            c2, m2 = parse_factor()
            coeff = field.mul(coeff, c2)
            if m2:
                exps = [a + b for a, b in zip(exps, m2)]
        token = A.token(exps) if hasattr(A, "token") else UNIT
        return Lin.single(field, token, coeff)

    out = Lin(field)
    sign = field(1)
    if peek() == ("op", "-"):
        advance()
        sign = field(-1)
    elif peek() == ("op", "+"):
        advance()
    out.add_into(parse_term(), sign)
    while peek() is not None:
        kind, val = peek()
        if (kind, val) == ("op", "+"):
            advance()
            out.add_into(parse_term())
        elif (kind, val) == ("op", "-"):
            advance()
            out.add_into(parse_term(), field(-1))
        else:
            raise ValueError(f"unexpected {val!r} in {text!r}")
    return out


def tokenize_poly(text):
    out = []
    i = 0
    while i < len(text):
        c = text[i]
        if c.isspace():
            i += 1
        elif c in "+-*^":
            out.append(("op", c))
            i += 1
        elif c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append(("int", int(text[i:j])))
            i = j
        elif c.isalpha() or c == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            out.append(("name", text[i:j]))
            i = j
        else:
            raise ValueError(f"bad character {c!r} in polynomial {text!r}")
    if not out:
        raise ValueError("empty polynomial")
    return out


class TorResult:
    """Graded and bigraded ranks of Tor with representative-level products."""

    def __init__(self, field, degree_bound, total_ranks, bigraded, homology, complex_, triple=None):
        self.field = field
        self.degree_bound = degree_bound
        self.total_ranks = total_ranks          # {degree: rank}
        self.bigraded = bigraded                # {(length, degree): rank}
        self.homology = homology                # {degree: DegreeCohomology}
        self.complex = complex_
        self.triple = triple
        self._products = None

    @property
    def poincare(self):
        return [self.total_ranks.get(n, 0) for n in range(self.degree_bound + 1)]

    def class_names(self):
        out = []
        for n in range(self.degree_bound + 1):
            for i in range(self.total_ranks.get(n, 0)):
                out.append((n, i))
        return out

    def representative(self, n, i):
        H = self.homology[n]
        vec = H.reps[i]
        out = Lin(self.field)
        for tok, c in zip(H.tokens, vec):
            out.add_term(tok, c)
        return out

    def coordinates(self, n, lin):
        return self.homology[n].coordinates(self.homology[n].vector_of(lin))

    def products(self):
        """Pairwise products of cohomology classes, as class coordinates.

        Returns {((n1,i1),(n2,i2)): [(class, coeff), ...]} for products
        within the degree bound; requires the bar-side triple.
        """
        if self._products is not None:
            return self._products
        if self.triple is None:
            raise ValueError("products need the bar-construction result")
        table = {}
        names = self.class_names()
        for n1, i1 in names:
            r1 = self.representative(n1, i1)
            for n2, i2 in names:
                if n1 + n2 > self.degree_bound:
                    continue
                r2 = self.representative(n2, i2)
                prod = mu_tilde_lin(self.triple, r1, r2)
                coords = self.coordinates(n1 + n2, prod)
                if coords is None:
                    raise AssertionError(f"product of classes is not a cocycle at {(n1,i1),(n2,i2)}")
                entry = [((n1 + n2, j), c) for j, c in enumerate(coords) if not self.field.is_zero(c)]
                table[((n1, i1), (n2, i2))] = entry
        self._products = table
        return table


def _line_ranks(field, tokens_by_line_degree, diff_fn, bound):
    """Bigraded ranks via the anti-diagonal line decomposition: the
    differential raises degree by one and lowers word length by one."""
    out = {}
    lines = {}
    for (length, degree), toks in tokens_by_line_degree.items():
        lines.setdefault(length + degree, {})[degree] = toks
    for m, by_degree in lines.items():
        data = cohomology_data(field, by_degree, diff_fn, [n for n in by_degree if n <= bound])
        for n, H in data.items():
            if H.rank:
                out[(m - n, n)] = H.rank
    return out


def bar_tor(f_left, f_right, degree_bound, field=None):
    """Tor via the two-sided bar construction of the span, with products."""
    B = f_left.source
    if f_right.source is not B and f_right.source.generators != B.generators:
        raise ValueError("the two maps must share their source")
    field = field or B.field
    Ap = f_left.target
    App = f_right.target
    max_len = max(1, degree_bound)
    complex_ = strict_two_sided_bar(
        Ap.algebra, B.algebra, App.algebra, f_left.dga_map, f_right.dga_map, max_len
    )
    hB = trivial_hga(B.algebra, max_len)
    hAp = trivial_hga(Ap.algebra, max_len)
    hApp = trivial_hga(App.algebra, max_len)
    triple = HgaTriple(hAp, hB, hApp, f_left.dga_map, f_right.dga_map, max_len)

    tokens_by_degree = {}
    tokens_by_line = {}
    for n in range(degree_bound + 2):
        toks = complex_.basis(n, length_bound=max_len)
        tokens_by_degree[n] = toks
        for t in toks:
            tokens_by_line.setdefault((len(t[1]), n), []).append(t)
    homology = cohomology_data(field, tokens_by_degree, complex_.diff, range(degree_bound + 1))
    total = {n: homology[n].rank for n in range(degree_bound + 1)}
    bigraded = _line_ranks(field, tokens_by_line, complex_.diff, degree_bound)
    for n in range(degree_bound + 1):
        assert total.get(n, 0) == sum(r for (l, m), r in bigraded.items() if m == n), n
    return TorResult(field, degree_bound, total, bigraded, homology, complex_, triple)


def koszul_tor(f_left, f_right, degree_bound, field=None):
    """Tor via the Koszul resolution A' (x) Lambda(y_i) (x) A'',
    d y_i = f'(x_i) (x) 1 - 1 (x) f''(x_i)."""
    B = f_left.source
    field = field or B.field
    Ap = f_left.target.algebra
    App = f_right.target.algebra
    gens = B.generators
    imgs_left = [f_left.dga_map(B.algebra.generator(g)) for g, _ in gens]
    imgs_right = [f_right.dga_map(B.algebra.generator(g)) for g, _ in gens]

    def deg(token):
        a, S, b = token
        return Ap.degree(a) + sum(gens[i][1] - 1 for i in S) + App.degree(b)

    def diff(token):
        a, S, b = token
        out = Lin(field)
        for k, i in enumerate(S):
            sgn = field(1) if k % 2 == 0 else field(-1)
            S2 = S[:k] + S[k + 1 :]
            for t, c in Ap.mul_lin(Lin.single(field, a), imgs_left[i]).terms.items():
                out.add_term((t, S2, b), field.mul(sgn, c))
            for t, c in App.mul_lin(imgs_right[i], Lin.single(field, b)).terms.items():
                out.add_term((a, S2, t), field.neg(field.mul(sgn, c)))
        return out

    from itertools import combinations

    tokens_by_degree = {n: [] for n in range(degree_bound + 2)}
    tokens_by_line = {}
    for k in range(len(gens) + 1):
        for S in combinations(range(len(gens)), k):
            s_deg = sum(gens[i][1] - 1 for i in S)
            for da in range(degree_bound + 2 - s_deg + 1):
                for a in Ap.basis(da):
                    rest = degree_bound + 1 - s_deg - da
                    if rest < 0:
                        break
                    for db in range(rest + 1):
                        for b in App.basis(db):
                            n = da + s_deg + db
                            if n <= degree_bound + 1:
                                tokens_by_degree[n].append((a, S, b))
                                tokens_by_line.setdefault((k, n), []).append((a, S, b))
    homology = cohomology_data(field, tokens_by_degree, diff, range(degree_bound + 1))
    total = {n: homology[n].rank for n in range(degree_bound + 1)}
    bigraded = _line_ranks(field, tokens_by_line, diff, degree_bound)
    return TorResult(field, degree_bound, total, bigraded, homology, None, None)


class RingPresentation:
    """Generators and relations of a graded ring, valid up to a bound."""

    def __init__(self, generators, relations, degree_bound, truncation_warning):
        self.generators = generators      # [(name, degree, class)]
        self.relations = relations        # [(degree, string)]
        self.degree_bound = degree_bound
        self.truncation_warning = truncation_warning

    def describe(self):
        even = [(g, d) for g, d, _ in self.generators if d % 2 == 0]
        odd = [(g, d) for g, d, _ in self.generators if d % 2]
        bits = []
        if even:
            bits.append("k[" + ", ".join(f"{g}" for g, _ in even) + "]")
        if odd:
            bits.append("Lambda(" + ", ".join(f"{g}" for g, _ in odd) + ")")
        base = " (x) ".join(bits) if bits else "k"
        if self.relations:
            rels = ", ".join(r for _, r in self.relations)
            return f"{base} / ({rels})"
        return base


def ring_presentation(result, degree_bound=None):
    """Generators and minimal relations of the Tor ring up to the bound.

    Generators are classes outside the subalgebra generated in lower
    degrees; relations are a basis of the evaluation kernel modulo the
    ideal generated by lower-degree relations.
    """
    bound = result.degree_bound if degree_bound is None else degree_bound
    field = result.field
    products = result.products()

    gen_list = []            # (name, degree, (n, i))
    relations = []           # (degree, [(exps, coeff)]) exps over gen_list at creation
    last_event = 0
    eval_cache = {}

    def pad(m):
        return tuple(m) + (0,) * (len(gen_list) - len(m))

    def gen_degree(exps):
        return sum(e * gen_list[i][1] for i, e in enumerate(exps))

    def multiply_class_vecs(vec1, d1, vec2, d2):
        out = [field.zero] * result.total_ranks.get(d1 + d2, 0)
        for i, c1 in enumerate(vec1):
            if field.is_zero(c1):
                continue
            for j, c2 in enumerate(vec2):
                if field.is_zero(c2):
                    continue
                for (_, k), c in products[((d1, i), (d2, j))]:
                    out[k] = field.add(out[k], field.mul(field.mul(c1, c2), c))
        return out

    def eval_monomial(exps):
        exps = pad(exps)
        if not any(exps):
            return None
        if exps in eval_cache:
            return eval_cache[exps]
        i = next(j for j, e in enumerate(exps) if e)
        rest = list(exps)
        rest[i] -= 1
        d_g = gen_list[i][1]
        n_g, i_g = gen_list[i][2]
        gvec = [field.zero] * result.total_ranks[n_g]
        gvec[i_g] = field.one
        if not any(rest):
            out = gvec
        else:
            rvec = eval_monomial(tuple(rest))
            out = multiply_class_vecs(gvec, d_g, rvec, gen_degree(tuple(rest)))
        eval_cache[exps] = out
        return out

    def monomials_of_degree(n):
        out = []

        def build(i, remaining, acc):
            if i == len(gen_list):
                if remaining == 0 and any(acc):
                    out.append(tuple(acc))
                return
            d = gen_list[i][1]
            top = remaining // d if d % 2 == 0 else min(1, remaining // d)
            for e in range(top + 1):
                acc.append(e)
                build(i + 1, remaining - e * d, acc)
                acc.pop()

        build(0, n, [])
        return out

    for n in range(1, bound + 1):
        rank = result.total_ranks.get(n, 0)
        monos = monomials_of_degree(n)
        mono_vecs = [(m, eval_monomial(m)) for m in monos]
        if mono_vecs:
            from .linalg import kernel_basis

            rows = [[vec[i] for (_, vec) in mono_vecs] for i in range(rank)]
            ker = kernel_basis(field, rows, len(mono_vecs))
            mono_index = {m: i for i, (m, _) in enumerate(mono_vecs)}
            old_solver = Solver(field, len(mono_vecs))
            for rel_deg, rel_combo in relations:
                comp = n - rel_deg
                if comp < 0:
                    continue
                for mm in [()] if comp == 0 else monomials_of_degree(comp):
                    mm = pad(mm)
                    prod_vec = [field.zero] * len(mono_vecs)
                    for m2, c2 in rel_combo:
                        m2 = pad(m2)
                        merged = tuple(a + b for a, b in zip(m2, mm))
                        if any(
                            e > 1 and gen_list[i][1] % 2 for i, e in enumerate(merged)
                        ):
                            continue  # odd square is zero in the free algebra
                        prod_vec[mono_index[merged]] = field.add(
                            prod_vec[mono_index[merged]], c2
                        )
                    old_solver.add(prod_vec)
            for kv in ker:
                if old_solver.add(list(kv)):
                    combo = [
                        (m, c) for (m, _), c in zip(mono_vecs, kv) if not field.is_zero(c)
                    ]
                    lead = field.inv(combo[0][1])
                    combo = [(m, field.mul(lead, c)) for m, c in combo]
                    relations.append((n, combo))
                    last_event = n
        if rank:
            probe = Solver(field, rank)
            for _, vec in mono_vecs:
                probe.add(list(vec))
            for i in range(rank):
                unit_vec = [field.zero] * rank
                unit_vec[i] = field.one
                if probe.add(unit_vec):
                    gname = f"{'y' if n % 2 else 't'}{len(gen_list) + 1}"
                    gen_list.append((gname, n, (n, i)))
                    last_event = n

    warning = None
    if last_event >= bound - 1 and (gen_list or relations):
        warning = (
            f"presentation computed up to degree {bound}; generators or relations "
            f"found in degree {last_event} may not be final"
        )

    def fmt_relation(combo):
        bits = []
        for exps, c in combo:
            mono = "*".join(
                f"{gen_list[i][0]}" + (f"^{e}" if e > 1 else "")
                for i, e in enumerate(exps)
                if e
            )
            coeff = field.format(c)
            if coeff == "1":
                bits.append(mono)
            elif coeff == "-1":
                bits.append(f"-{mono}")
            else:
                bits.append(f"{coeff}*{mono}")
        out = bits[0]
        for b in bits[1:]:
            out += " - " + b[1:] if b.startswith("-") else " + " + b
        return out

    rels = [(n, fmt_relation(combo)) for n, combo in relations]
    gens = [(g, d, cls) for g, d, cls in gen_list]
    return RingPresentation(gens, rels, bound, warning)


def poincare_series(result):
    """Total ranks per degree, as the coefficient list of the series."""
    return result.poincare


def ranks_agree(r1, r2):
    """Exact agreement of total and bigraded ranks of two TorResults."""
    bound = min(r1.degree_bound, r2.degree_bound)
    for n in range(bound + 1):
        if r1.total_ranks.get(n, 0) != r2.total_ranks.get(n, 0):
            return (n, r1.total_ranks.get(n, 0), r2.total_ranks.get(n, 0))
    keys = {k for k in list(r1.bigraded) + list(r2.bigraded) if k[1] <= bound}
    for k in sorted(keys):
        if r1.bigraded.get(k, 0) != r2.bigraded.get(k, 0):
            return (k, r1.bigraded.get(k, 0), r2.bigraded.get(k, 0))
    return None
