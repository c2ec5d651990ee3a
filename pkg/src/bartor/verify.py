"""Named verification suites: executable identity checks for the bar
calculus, dispatched by the command line.

Every suite returns (ok, lines): `ok` False means a mathematical identity
failed exactly, and the lines name the first offending basis element with
both sides' values.
"""

from .fields import QQ
from .graded import Lin
from .dg import (
    UNIT,
    DgaMap,
    base_field_dga,
    exterior_dga,
    generator_images_map,
    identity_dga_map,
    polynomial_dga,
)
from .bar import BarCoalgebra
from .simplicial import (
    CochainDga,
    boundary_simplex,
    cup_i,
    minimal_circle,
    simplicial_map_cochains,
    standard_simplex,
)
from .hga import surjection_hga, trivial_hga, enumerate_pairs
from .barproduct import (
    HgaTriple,
    homotopy_h,
    make_oracle,
    mu_tilde,
    naturality_check,
    xi_map,
)

SUITES = ("bar-d2", "hga-mc", "steenrod", "mu-tilde-oracle", "homotopy-h", "naturality")


def algebra_example(name, field=QQ):
    if name == "poly-x2":
        return polynomial_dga(field, [("x", 2)])
    if name == "poly-xy":
        return polynomial_dga(field, [("x", 2), ("y", 4)])
    if name == "exterior-u3":
        return exterior_dga(field, [("u", 3)])
    if name in ("dDelta2", "dDelta3", "dDelta4"):
        return CochainDga(boundary_simplex(int(name[-1])), field)
    if name.startswith("delta"):
        return CochainDga(standard_simplex(int(name[-1])), field)
    if name == "s1":
        return CochainDga(minimal_circle(), field)
    raise ValueError(f"unknown algebra example {name!r}")


def triple_example(name, field=QQ, length_bound=4):
    if name == "cdga-triple":
        A = polynomial_dga(field, [("x", 2)])
        k = base_field_dga(field)
        aug = DgaMap(A, k, lambda t: Lin(field), name="aug")
        return HgaTriple(
            trivial_hga(k, length_bound), trivial_hga(A, length_bound), trivial_hga(k, length_bound),
            aug, aug, length_bound,
        )
    if name == "poly-triple":
        A = polynomial_dga(field, [("x", 4)])
        T = polynomial_dga(field, [("t", 2)])
        k = base_field_dga(field)
        f_left = generator_images_map(A, T, [T.mul_lin(T.generator("t"), T.generator("t"))])
        aug = DgaMap(A, k, lambda t: Lin(field), name="aug")
        return HgaTriple(
            trivial_hga(T, length_bound), trivial_hga(A, length_bound), trivial_hga(k, length_bound),
            f_left, aug, length_bound,
        )
    if name == "simplicial-dDelta3":
        A = CochainDga(boundary_simplex(3), field)
        h = surjection_hga(A, length_bound=length_bound)
        return HgaTriple(h, h, h, identity_dga_map(A), identity_dga_map(A), length_bound)
    raise ValueError(f"unknown triple example {name!r}")

TRIPLE_EXAMPLES = ("cdga-triple", "poly-triple", "simplicial-dDelta3")


def format_lin(lin):
    if lin.is_zero():
        return "0"
    bits = [f"{lin.field.format(c)}*{t!r}" for t, c in sorted(lin.terms.items(), key=lambda kv: repr(kv[0]))]
    return " + ".join(bits)


def two_sided_pairs(triple, pair_degree, per_side_length):
    toks = triple.complex.basis_all(pair_degree, length_bound=per_side_length)
    out = []
    for t1 in toks:
        d1 = triple.complex.degree(t1)
        for t2 in toks:
            if d1 + triple.complex.degree(t2) <= pair_degree:
                out.append((t1, t2))
    return out


def suite_bar_d2(example, degree_bound, length_bound, field=QQ):
    if example in TRIPLE_EXAMPLES:
        triple = triple_example(example, field, min(length_bound, 3) if example == "simplicial-dDelta3" else length_bound)
        C = triple.complex
        deg = min(degree_bound, 4) if example == "simplicial-dDelta3" else degree_bound
        count = 0
        for token in C.basis_all(deg, length_bound=None):
            img = C.diff_lin(C.diff(token))
            if not img.is_zero():
                return False, [f"d^2 != 0 at {token}", f"value: {format_lin(img)}"]
            count += 1
        return True, [f"d^2 = 0 on {count} two-sided basis elements of {example} (degree <= {deg})"]
    A = algebra_example(example, field)
    L = min(length_bound, 3) if isinstance(A, CochainDga) else length_bound
    bar = BarCoalgebra(A, length_bound=L)
    count = 0
    for n in range(-L, degree_bound + 1):
        for w in bar.basis(n):
            img = bar.diff_lin(bar.diff(w))
            if not img.is_zero():
                return False, [f"d^2 != 0 at {w}", f"value: {format_lin(img)}"]
            count += 1
    return True, [f"d^2 = 0 on {count} bar words of B({A.name}) (degree <= {degree_bound}, length <= {L})"]


def suite_hga_mc(example, degree_bound, length_bound, field=QQ):
    A = algebra_example(example, field)
    if not isinstance(A, CochainDga):
        raise ValueError("hga-mc expects a simplicial example (dDelta3, dDelta4)")
    hga = surjection_hga(A, length_bound=length_bound)
    pairs = enumerate_pairs(hga.bar, degree_bound, length_bounds=(2, 2))
    E = hga.twisting_cochain()
    mc = E.hom_differential().sub(E.cup(E))
    for pair in pairs:
        val = mc.apply_token(pair)
        if not val.is_zero():
            return False, [
                f"Maurer-Cartan fails at {pair}",
                f"DE - E cup E: {format_lin(val)}",
            ]
    return True, [
        f"Maurer-Cartan for E on {A.name}: {len(pairs)} pairs exact "
        f"(degree <= {degree_bound}, lengths <= 2)",
        "E vanishes on words of length >= 2 in the first slot by construction",
    ]


def suite_steenrod(example, i, field=QQ):
    """d(cup_{i+1}) = cup_i - cup_i (1 2), with the transposition acting in
    the operadic convention (1 2): a (x) b -> (-1)^{|a||b| + i} b (x) a.

    With the naive Koszul transposition the identity is provably
    unattainable at odd i: both sides differ by 2 cup_i(a (x) a) on odd
    diagonal classes while the left side vanishes there by naturality.
    """
    A = algebra_example(example, field)
    if not isinstance(A, CochainDga):
        raise ValueError("steenrod expects a simplicial example")
    top = A.max_degree
    count = 0
    for n1 in range(top + 1):
        for t1 in A.ideal_basis(n1):
            a = A.element(t1)
            for n2 in range(top + 1):
                for t2 in A.ideal_basis(n2):
                    b = A.element(t2)
                    lhs = A.diff_lin(cup_i(A, i + 1, a, b))
                    s = 1 if (i + 1) % 2 else -1
                    lhs.add_into(cup_i(A, i + 1, A.diff_lin(a), b), field(s))
                    s2 = s if n1 % 2 == 0 else -s
                    lhs.add_into(cup_i(A, i + 1, a, A.diff_lin(b)), field(s2))
                    rhs = cup_i(A, i, a, b)
                    swap = -1 if (n1 % 2 and n2 % 2) else 1
                    swap *= -1 if i % 2 else 1
                    rhs.add_into(cup_i(A, i, b, a), field(-swap))
                    if (lhs - rhs).terms:
                        return False, [
                            f"coherence fails at ({t1}, {t2})",
                            f"D(cup_{i+1}): {format_lin(lhs)}",
                            f"cup_{i} - cup_{i}(1 2): {format_lin(rhs)}",
                        ]
                    count += 1
    return True, [f"d(cup_{i+1}) = cup_{i} - cup_{i}(1 2) on {A.name}: {count} pairs exact"]


def suite_mu_tilde_oracle(example, degree_bound, length_bound, field=QQ):
    triple = triple_example(example, field, length_bound)
    oracle = make_oracle(triple)
    per_side = 1 if example == "simplicial-dDelta3" else min(length_bound, 3)
    deg = min(degree_bound, 4) if example == "simplicial-dDelta3" else degree_bound
    pairs = two_sided_pairs(triple, deg, per_side)
    for t1, t2 in pairs:
        lhs = mu_tilde(triple, t1, t2)
        rhs = oracle(t1, t2)
        if lhs.terms != rhs.terms:
            return False, [
                f"formula differs from oracle at {t1} (x) {t2}",
                f"formula: {format_lin(lhs)}",
                f"oracle : {format_lin(rhs)}",
            ]
    return True, [
        f"mu~ formula = definitional composite on {len(pairs)} basis pairs of "
        f"{example} (pair degree <= {deg}, side length <= {per_side})"
    ]


def suite_homotopy_h(example, degree_bound, length_bound, field=QQ):
    triple = triple_example(example, field, length_bound)
    A = triple.hga.algebra
    if triple.hga_left.algebra is not A or triple.hga_right.algebra is not A:
        raise ValueError("homotopy-h expects the reduced triple (simplicial-dDelta3)")
    C = triple.complex
    ident = identity_dga_map(A)
    xi = xi_map(triple, ident, ident)
    per_side = 1
    deg = min(degree_bound, 4)
    pairs = two_sided_pairs(triple, deg, per_side)
    for t1, t2 in pairs:
        lhs = A.diff_lin(homotopy_h(triple, t1, t2))
        for tok, c in C.diff(t1).terms.items():
            lhs.add_into(homotopy_h(triple, tok, t2), c)
        sgn = field(-1 if C.degree(t1) % 2 else 1)
        for tok, c in C.diff(t2).terms.items():
            lhs.add_into(homotopy_h(triple, t1, tok), field.mul(sgn, c))
        rhs = Lin(field)
        for tok, c in mu_tilde(triple, t1, t2).terms.items():
            rhs.add_into(xi(tok), c)
        rhs.add_into(A.mul_lin(xi(t1), xi(t2)), field(-1))
        if lhs.terms != rhs.terms:
            return False, [
                f"D h != xi mu~ - mu xi^2 at {t1} (x) {t2}",
                f"D h: {format_lin(lhs)}",
                f"xi mu~ - mu xi^2: {format_lin(rhs)}",
            ]
    return True, [f"D h = xi mu~ - mu xi^(x)2 on {len(pairs)} basis pairs (pair degree <= {deg})"]


def suite_naturality(example, degree_bound, length_bound, field=QQ):
    triple = triple_example("simplicial-dDelta3", field, length_bound)
    A = triple.hga.algebra
    if example == "augmentation":
        k = base_field_dga(field)
        aug = DgaMap(A, k, lambda t: Lin(field), name="aug")
        hk = trivial_hga(k, length_bound)
        target = HgaTriple(hk, hk, hk, identity_dga_map(k), identity_dga_map(k), length_bound)
        maps = (aug, aug, aug)
    elif example == "simplicial-inclusion":
        Y = boundary_simplex(2)
        CY = CochainDga(Y, field)
        images = {tau: ((), tau) for n in range(2) for tau in Y.nondegenerate(n)}
        phi = simplicial_map_cochains(images, Y, A.space, A, CY)
        hY = surjection_hga(CY, length_bound=length_bound)
        target = HgaTriple(hY, hY, hY, identity_dga_map(CY), identity_dga_map(CY), length_bound)
        maps = (phi, phi, phi)
    else:
        raise ValueError(f"unknown naturality example {example!r} (augmentation, simplicial-inclusion)")
    deg = min(degree_bound, 3)
    pairs = two_sided_pairs(triple, deg, 1)
    offender = naturality_check(triple, target, maps[0], maps[1], maps[2], pairs)
    if offender is not None:
        return False, [f"B(g',g,g'') fails to preserve mu~ at {offender}"]
    return True, [f"B(g',g,g'') preserves mu~ on {len(pairs)} pairs ({example} ladder)"]


def run_suite(suite, example, degree_bound, length_bound, i=1, field=QQ):
    if suite == "bar-d2":
        return suite_bar_d2(example or "poly-x2", degree_bound, length_bound, field)
    if suite == "hga-mc":
        return suite_hga_mc(example or "dDelta3", degree_bound, length_bound, field)
    if suite == "steenrod":
        return suite_steenrod(example or "dDelta3", i, field)
    if suite == "mu-tilde-oracle":
        return suite_mu_tilde_oracle(example or "cdga-triple", degree_bound, length_bound, field)
    if suite == "homotopy-h":
        return suite_homotopy_h(example or "simplicial-dDelta3", degree_bound, length_bound, field)
    if suite == "naturality":
        return suite_naturality(example or "augmentation", degree_bound, length_bound, field)
    raise ValueError(f"unknown suite {suite!r}; choose one of {', '.join(SUITES)}")
