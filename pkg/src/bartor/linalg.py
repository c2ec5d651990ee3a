"""Exact Gaussian elimination over the coefficient fields.

Matrices are lists of rows; rows are lists of field payloads.  Used for
cochain cohomology, Tor ranks, and expressing classes in chosen bases.
"""


def rref(field, rows, ncols):
    """Reduced row echelon form; returns (rref_rows, pivot_columns)."""
    mat = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(mat)):
            if not field.is_zero(mat[i][c]):
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = field.inv(mat[r][c])
        mat[r] = [field.mul(inv, x) for x in mat[r]]
        for i in range(len(mat)):
            if i != r and not field.is_zero(mat[i][c]):
                f = mat[i][c]
                mat[i] = [field.sub(a, field.mul(f, b)) for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return mat[:r], pivots


def rank(field, rows, ncols):
    return len(rref(field, rows, ncols)[1])


def kernel_basis(field, rows, ncols):
    """Basis of the right kernel, as vectors of length ncols."""
    red, pivots = rref(field, rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    out = []
    for fc in free:
        vec = [field.zero] * ncols
        vec[fc] = field.one
        for r, pc in enumerate(pivots):
            vec[pc] = field.neg(red[r][fc])
        out.append(vec)
    return out


class Solver:
    """Incremental column-space membership and coordinates.

    Add spanning vectors once; `express` writes a vector in terms of the
    added ones (returning coefficients) or returns None.
    """

    def __init__(self, field, dim):
        self.field = field
        self.dim = dim
        self.rows = []      # echelonized augmented rows: vector + history
        self.pivot_of_row = []
        self.nvecs = 0

    def add(self, vec):
        f = self.field
        work = list(vec) + [f.zero] * self.nvecs + [f.one]
        self.nvecs += 1
        for row, p in zip(self.rows, self.pivot_of_row):
            row.append(f.zero)
        work = self._reduce(work)
        for p in range(self.dim):
            if not f.is_zero(work[p]):
                inv = f.inv(work[p])
                self.rows.append([f.mul(inv, x) for x in work])
                self.pivot_of_row.append(p)
                return True  # independent
        return False

    def _reduce(self, work):
        f = self.field
        for row, p in zip(self.rows, self.pivot_of_row):
            if not f.is_zero(work[p]):
                c = work[p]
                for i in range(len(row)):
                    work[i] = f.sub(work[i], f.mul(c, row[i]))
        return work

    def express(self, vec):
        """Coefficients writing vec over the added vectors, or None."""
        f = self.field
        work = list(vec) + [f.zero] * self.nvecs
        work = self._reduce(work)
        if any(not f.is_zero(work[p]) for p in range(self.dim)):
            return None
        return [f.neg(x) for x in work[self.dim :]]


class DegreeCohomology:
    """Cohomology of one degree of a cochain complex, with class coordinates.

    `reps` are kernel vectors spanning the cohomology; `coordinates(vec)`
    expresses a cocycle as coefficients over `reps` modulo boundaries.
    """

    def __init__(self, field, tokens, reps, solver, rep_positions):
        self.field = field
        self.tokens = tokens
        self.index = {t: i for i, t in enumerate(tokens)}
        self.reps = reps
        self._solver = solver
        self._rep_positions = rep_positions

    @property
    def rank(self):
        return len(self.reps)

    def vector_of(self, lin):
        vec = [self.field.zero] * len(self.tokens)
        for t, c in lin.terms.items():
            if t in self.index:
                vec[self.index[t]] = c
            elif not self.field.is_zero(c):
                raise ValueError(f"token {t} outside the complex degree")
        return vec

    def coordinates(self, vec):
        coeffs = self._solver.express(vec)
        if coeffs is None:
            return None  # not a cocycle (or outside the computed span)
        return [coeffs[p] for p in self._rep_positions]


def cohomology_data(field, tokens_by_degree, diff_fn, degrees):
    """Per-degree cohomology of a cochain complex given by basis tokens and a
    token-level differential; returns {n: DegreeCohomology}."""
    index = {n: {t: i for i, t in enumerate(toks)} for n, toks in tokens_by_degree.items()}
    out = {}
    for n in degrees:
        toks = tokens_by_degree.get(n, [])
        dim = len(toks)
        next_idx = index.get(n + 1, {})
        rows = []
        for t in toks:
            img = diff_fn(t)
            row = [field.zero] * len(next_idx)
            for tt, c in img.terms.items():
                if tt in next_idx:
                    row[next_idx[tt]] = c
                elif not field.is_zero(c):
                    raise AssertionError(f"differential leaves the complex at {t} -> {tt}")
            rows.append(row)
        if next_idx and rows:
            transpose = [list(col) for col in zip(*rows)]
            cycles = kernel_basis(field, transpose, dim)
        else:
            cycles = [[field.one if i == j else field.zero for i in range(dim)] for j in range(dim)]
        solver = Solver(field, dim)
        here = index.get(n, {})
        adds = 0
        for t in tokens_by_degree.get(n - 1, []):
            vec = [field.zero] * dim
            for tt, c in diff_fn(t).terms.items():
                if tt in here:
                    vec[here[tt]] = c
            solver.add(vec)
            adds += 1
        reps = []
        rep_positions = []
        for cyc in cycles:
            if solver.add(list(cyc)):
                reps.append(list(cyc))
                rep_positions.append(adds)
            adds += 1
        out[n] = DegreeCohomology(field, list(toks), reps, solver, rep_positions)
    return out
