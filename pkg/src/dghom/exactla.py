"""Exact sparse linear algebra over the rationals and over prime fields.

All arithmetic is exact (fractions.Fraction over QQ, modular integers over
F_p); nothing here ever touches floating point.  Results that depend on a
choice (kernel bases, quotient representatives, solutions) are canonical:
they are read off the reduced row echelon form, which is unique, so repeated
runs produce identical output.  Pivot *order* during elimination is a
deterministic minimal-fill heuristic (fewest-entries row, smallest index
first) and affects speed only.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from fractions import Fraction


class InconsistentInputError(ValueError):
    """Raised when inputs violate a documented precondition (e.g. sub not in ambient)."""


class Rationals:
    """The field QQ.  Values are fractions.Fraction."""

    char = 0

    def of(self, x) -> Fraction:
        return Fraction(x)

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        return 1 / a

    def eq(self, a, b):
        return a == b

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, Rationals)

    def __hash__(self):
        return hash("QQ")


class PrimeField:
    """The field F_p for prime p.  Values are ints in [0, p)."""

    def __init__(self, p: int):
        if p < 2 or any(p % q == 0 for q in range(2, int(p**0.5) + 1)):
            raise InconsistentInputError(f"{p} is not prime")
        self.p = p
        self.char = p
        self.zero = 0
        self.one = 1

    def of(self, x):
        if isinstance(x, Fraction):
            den = x.denominator % self.p
            if den == 0:
                raise InconsistentInputError(
                    f"denominator of {x} vanishes modulo {self.p}"
                )
            return (x.numerator % self.p) * pow(den, self.p - 2, self.p) % self.p
        return int(x) % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero in F_p")
        return pow(a, self.p - 2, self.p)

    def eq(self, a, b):
        return (a - b) % self.p == 0

    def __repr__(self):
        return f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("GF", self.p))


QQ = Rationals()


@dataclass
class SparseMatrix:
    """Sparse matrix: entries maps (row, col) -> nonzero field value."""

    rows: int
    cols: int
    entries: dict = dc_field(default_factory=dict)
    field: object = QQ

    def __post_init__(self):
        for (r, c), v in list(self.entries.items()):
            if not (0 <= r < self.rows and 0 <= c < self.cols):
                raise InconsistentInputError(f"entry ({r},{c}) out of bounds")
            if v == self.field.zero:
                del self.entries[(r, c)]

    @classmethod
    def from_dense(cls, rows_list, field=QQ):
        nr = len(rows_list)
        nc = len(rows_list[0]) if nr else 0
        ent = {}
        for i, row in enumerate(rows_list):
            for j, v in enumerate(row):
                fv = field.of(v)
                if fv != field.zero:
                    ent[(i, j)] = fv
        return cls(nr, nc, ent, field)

    @classmethod
    def from_columns(cls, columns, nrows, field=QQ):
        """columns: list of dict row_index -> value."""
        ent = {}
        for j, col in enumerate(columns):
            for i, v in col.items():
                if v != field.zero:
                    ent[(i, j)] = v
        return cls(nrows, len(columns), ent, field)

    @classmethod
    def identity(cls, n, field=QQ):
        return cls(n, n, {(i, i): field.one for i in range(n)}, field)

    def column(self, j):
        return {i: v for (i, c), v in self.entries.items() if c == j}

    def columns(self):
        cols = [dict() for _ in range(self.cols)]
        for (i, j), v in self.entries.items():
            cols[j][i] = v
        return cols

    def apply(self, vec: dict) -> dict:
        """Matrix times sparse column vector (dict col_index -> value)."""
        f = self.field
        out = {}
        for (i, j), v in self.entries.items():
            x = vec.get(j)
            if x is not None:
                out[i] = f.add(out.get(i, f.zero), f.mul(v, x))
        return {i: v for i, v in out.items() if v != f.zero}

    def mul(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.cols != other.rows:
            raise InconsistentInputError("shape mismatch in matrix product")
        f = self.field
        by_row = {}
        for (i, j), v in self.entries.items():
            by_row.setdefault(i, {})[j] = v
        by_col = {}
        for (j, k), v in other.entries.items():
            by_col.setdefault(j, []).append((k, v))
        ent = {}
        for i, row in by_row.items():
            acc = {}
            for j, v in row.items():
                for k, w in by_col.get(j, ()):
                    acc[k] = f.add(acc.get(k, f.zero), f.mul(v, w))
            for k, s in acc.items():
                if s != f.zero:
                    ent[(i, k)] = s
        return SparseMatrix(self.rows, other.cols, ent, f)

    def add_scaled(self, other: "SparseMatrix", scale) -> "SparseMatrix":
        f = self.field
        ent = dict(self.entries)
        for key, v in other.entries.items():
            s = f.add(ent.get(key, f.zero), f.mul(scale, v))
            if s == f.zero:
                ent.pop(key, None)
            else:
                ent[key] = s
        return SparseMatrix(self.rows, self.cols, ent, f)

    def is_zero(self) -> bool:
        return not self.entries

    def to_row_dicts(self):
        rows = [dict() for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            rows[i][j] = v
        return rows


def _eliminate(rows, field, blocked_cols=frozenset()):
    """In-place forward+backward elimination on a list of row dicts.

    Returns list of (row_index, pivot_col).  Pivot choice: among unprocessed
    rows pick the one with fewest entries (smallest index breaks ties), then
    within it the eligible column appearing in fewest rows (smallest column
    breaks ties).  After this runs, every pivot column has a single nonzero
    entry and pivot rows are normalized to 1, i.e. the surviving rows are the
    RREF of the row space.
    """
    f = field
    n = len(rows)
    col_rows: dict = {}
    for i, row in enumerate(rows):
        for c in row:
            col_rows.setdefault(c, set()).add(i)

    def _axpy(dst, src, coeff):
        for c, v in src.items():
            cur = dst.get(c)
            nv = f.add(cur, f.mul(coeff, v)) if cur is not None else f.mul(coeff, v)
            if nv == f.zero:
                if cur is not None:
                    del dst[c]
                    col_rows[c].discard(dst_idx)
            else:
                if cur is None:
                    col_rows.setdefault(c, set()).add(dst_idx)
                dst[c] = nv

    processed = [False] * n
    pivots = []
    while True:
        best = None
        for i in range(n):
            if processed[i]:
                continue
            row = rows[i]
            if not row:
                continue
            if blocked_cols and all(c in blocked_cols for c in row):
                continue
            key = len(row)
            if best is None or key < best[0]:
                best = (key, i)
        if best is None:
            break
        pi = best[1]
        eligible = [c for c in rows[pi] if c not in blocked_cols]
        pc = min(eligible, key=lambda c: (len(col_rows.get(c, ())), c))
        processed[pi] = True
        pivots.append((pi, pc))
        prow = rows[pi]
        pval = prow[pc]
        if pval != f.one:
            inv = f.inv(pval)
            for c in list(prow):
                prow[c] = f.mul(prow[c], inv)
        for j in list(col_rows.get(pc, ())):
            if j == pi:
                continue
            coeff = f.neg(rows[j][pc])
            dst_idx = j
            _axpy(rows[j], prow, coeff)
    pivots.sort(key=lambda t: t[1])
    return pivots


def rank(m: SparseMatrix) -> int:
    rows = m.to_row_dicts()
    return len(_eliminate(rows, m.field))


def kernel_basis(m: SparseMatrix):
    """Canonical basis of ker(m), as a list of sparse column vectors.

    The vectors are the standard ones read off the unique RREF: one per free
    column, in ascending column order, with 1 in the free slot.
    """
    f = m.field
    rows = m.to_row_dicts()
    pivots = _eliminate(rows, f)
    pivot_cols = {pc: pi for pi, pc in pivots}
    basis = []
    for j in range(m.cols):
        if j in pivot_cols:
            continue
        vec = {j: f.one}
        for pi, pc in pivots:
            v = rows[pi].get(j)
            if v is not None:
                vec[pc] = f.neg(v)
        basis.append(vec)
    return basis


def solve(m: SparseMatrix, target: dict):
    """Return x with m.apply(x) == target, or None when target is not in the image.

    The returned solution is canonical (free variables set to zero in RREF).
    """
    f = m.field
    tcol = m.cols  # augmented column index
    rows = m.to_row_dicts()
    for i, v in target.items():
        if not 0 <= i < m.rows:
            raise InconsistentInputError("target index out of bounds")
        if v != f.zero:
            rows[i][tcol] = v
    pivots = _eliminate(rows, f, blocked_cols=frozenset({tcol}))
    sol = {}
    for pi, pc in pivots:
        v = rows[pi].get(tcol)
        if v is not None:
            sol[pc] = v
    for i, row in enumerate(rows):
        if tcol in row and all(c == tcol for c in row):
            return None
    return sol


def image_basis(m: SparseMatrix):
    """Canonical basis (RREF rows of the column space) of im(m), as column vectors."""
    rows = [dict(col) for col in m.columns()]
    pivots = _eliminate(rows, m.field)
    return [dict(rows[pi]) for pi, _ in pivots]


def span_echelon(vectors, field=QQ):
    """Echelonize a list of sparse vectors; returns (pivots, rows) for reuse."""
    rows = [dict(v) for v in vectors]
    pivots = _eliminate(rows, field)
    return pivots, rows


def reduce_against(vec, pivots, rows, field=QQ):
    """Reduce vec modulo the echelonized span; returns the (sparse) remainder."""
    f = field
    out = dict(vec)
    for pi, pc in pivots:
        v = out.get(pc)
        if v is None:
            continue
        coeff = f.neg(v)
        for c, w in rows[pi].items():
            cur = out.get(c, f.zero)
            nv = f.add(cur, f.mul(coeff, w))
            if nv == f.zero:
                out.pop(c, None)
            else:
                out[c] = nv
    return out


def in_span(vec, pivots, rows, field=QQ) -> bool:
    return not reduce_against(vec, pivots, rows, field)


class Echelon:
    """Incrementally maintained reduced echelon of a growing span.

    Rows are mutually reduced and keyed by pivot column, so membership tests
    and inserts stay cheap even for large spans."""

    def __init__(self, field=QQ, vectors=()):
        self.field = field
        self.rows = {}  # pivot col -> row dict (pivot entry normalized to 1)
        for v in vectors:
            self.insert(v)

    def reduce(self, vec: dict) -> dict:
        # rows are mutually reduced, so clearing one pivot column never
        # reintroduces another: a single pass over the initial hits suffices
        f = self.field
        out = dict(vec)
        for hit in [c for c in out if c in self.rows]:
            cur0 = out.get(hit)
            if cur0 is None:
                continue
            coeff = f.neg(cur0)
            for c2, w in self.rows[hit].items():
                cur = out.get(c2, f.zero)
                nv = f.add(cur, f.mul(coeff, w))
                if nv == f.zero:
                    out.pop(c2, None)
                else:
                    out[c2] = nv
        return out

    def insert(self, vec: dict):
        """Reduce and store; returns the new pivot column or None."""
        f = self.field
        rem = self.reduce(vec)
        if not rem:
            return None
        p = min(rem)
        inv = f.inv(rem[p])
        row = {c: f.mul(inv, w) for c, w in rem.items()}
        # keep mutual reduction: clear column p from every stored row
        for q, other in self.rows.items():
            v = other.get(p)
            if v is None:
                continue
            coeff = f.neg(v)
            for c2, w in row.items():
                cur = other.get(c2, f.zero)
                nv = f.add(cur, f.mul(coeff, w))
                if nv == f.zero:
                    other.pop(c2, None)
                else:
                    other[c2] = nv
        self.rows[p] = row
        return p

    def contains(self, vec: dict) -> bool:
        return not self.reduce(vec)

    @property
    def dim(self):
        return len(self.rows)


def quotient_basis(sub, ambient, field=QQ):
    """Coset representatives forming a basis of span(ambient)/span(sub).

    Representatives are chosen greedily from `ambient` in the given order, so
    the answer is deterministic.  Raises InconsistentInputError when sub is
    not contained in span(ambient).
    """
    amb = Echelon(field, ambient)
    for v in sub:
        if not amb.contains(v):
            raise InconsistentInputError("sub vector outside the ambient span")
    ech = Echelon(field, sub)
    reps = []
    for v in ambient:
        if ech.insert(v) is not None:
            reps.append(dict(v))
    return reps


def express_in_basis(vec, basis_vectors, field=QQ):
    """Coordinates of vec in span(basis_vectors), or None if outside.

    basis_vectors need not be echelonized; coordinates refer to the given list.
    """
    nrows = 0
    for v in list(basis_vectors) + [vec]:
        for i in v:
            nrows = max(nrows, i + 1)
    m = SparseMatrix.from_columns(basis_vectors, nrows, field)
    return solve(m, {i: v for i, v in vec.items() if v != field.zero})
