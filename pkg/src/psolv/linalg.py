"""Dense linear algebra over the prime field F_p with exact residues."""

from .errors import InputError


class FpMatrix:
    """Row-major matrix over F_p. Vectors are rows; maps act as ``v @ A``."""

    __slots__ = ("p", "nrows", "ncols", "rows")

    def __init__(self, p, rows, ncols=None):
        rows = [[int(x) % p for x in r] for r in rows]
        if ncols is None:
            ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise InputError("ragged matrix rows")
        self.p = p
        self.nrows = len(rows)
        self.ncols = ncols
        self.rows = rows

    @classmethod
    def identity(cls, p, n):
        return cls(p, [[int(i == j) for j in range(n)] for i in range(n)], n)

    @classmethod
    def zeros(cls, p, nrows, ncols):
        return cls(p, [[0] * ncols for _ in range(nrows)], ncols)

    def __eq__(self, other):
        return (
            isinstance(other, FpMatrix)
            and (self.p, self.ncols, self.rows) == (other.p, other.ncols, other.rows)
        )

    def __repr__(self):
        return f"FpMatrix(p={self.p}, {self.rows})"

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise InputError("shape mismatch")
        p = self.p
        cols = list(zip(*other.rows)) if other.rows else [()] * other.ncols
        return FpMatrix(
            p,
            [[sum(a * b for a, b in zip(r, c)) % p for c in cols] for r in self.rows],
            other.ncols,
        )

    def __sub__(self, other):
        return FpMatrix(
            self.p,
            [[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)],
            self.ncols,
        )

    def transpose(self):
        return FpMatrix(self.p, [list(c) for c in zip(*self.rows)] if self.rows else [], self.nrows)

    def apply(self, v):
        """Row vector times matrix."""
        p = self.p
        out = [0] * self.ncols
        for a, row in zip(v, self.rows):
            if a:
                for j, b in enumerate(row):
                    out[j] += a * b
        return [x % p for x in out]

    def echelon(self):
        """Reduced row echelon form; returns (rows, pivot columns)."""
        basis = EchelonBasis(self.p, self.ncols)
        for r in self.rows:
            basis.add(r)
        return basis.reduced()

    def rank(self):
        basis = EchelonBasis(self.p, self.ncols)
        for r in self.rows:
            basis.add(r)
        return basis.rank

    def nullspace(self):
        """Basis of {x : A x = 0} (column convention), as a list of vectors."""
        rows, pivots = self.echelon()
        free = [j for j in range(self.ncols) if j not in pivots]
        p = self.p
        out = []
        for f in free:
            x = [0] * self.ncols
            x[f] = 1
            for r, c in zip(rows, pivots):
                x[c] = (-r[f]) % p
            out.append(x)
        return out

    def is_invertible(self):
        return self.nrows == self.ncols and self.rank() == self.nrows


class EchelonBasis:
    """Incrementally maintained echelon basis of a subspace of F_p^n."""

    def __init__(self, p, n):
        self.p = p
        self.n = n
        self.pivot_rows = {}  # pivot column -> row with 1 at pivot

    @property
    def rank(self):
        return len(self.pivot_rows)

    def reduce(self, v):
        p = self.p
        v = [x % p for x in v]
        for c, r in self.pivot_rows.items():
            a = v[c]
            if a:
                for j in range(c, self.n):
                    if r[j]:
                        v[j] = (v[j] - a * r[j]) % p
        return v

    def add(self, v):
        """Insert v; return True if it enlarged the span."""
        v = self.reduce(v)
        for c, a in enumerate(v):
            if a:
                inv = pow(a, -1, self.p)
                self.pivot_rows[c] = [(x * inv) % self.p for x in v]
                return True
        return False

    def contains(self, v):
        return not any(self.reduce(v))

    def reduced(self):
        p = self.p
        pivots = sorted(self.pivot_rows)
        rows = [list(self.pivot_rows[c]) for c in pivots]
        for i, c in enumerate(pivots):
            for k in range(len(rows)):
                if k != i and rows[k][c]:
                    a = rows[k][c]
                    rows[k] = [(x - a * y) % p for x, y in zip(rows[k], rows[i])]
        return rows, pivots
