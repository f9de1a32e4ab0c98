"""Exact Gaussian elimination over the coefficient field (QQ or GF(p)).

Matrices are lists of rows; entries are elements of a sympy domain.
"""


def rref(rows, num_columns, domain):
    """Reduced row echelon form.

    Returns:

    tuple: (list of nonzero reduced rows, list of pivot columns)
    """
    m = [list(row) for row in rows]
    pivots = []
    pivot_row = 0
    for column in range(num_columns):
        for i in range(pivot_row, len(m)):
            if m[i][column]:
                break
        else:
            continue
        m[pivot_row], m[i] = m[i], m[pivot_row]
        inverse = domain.quo(domain.one, m[pivot_row][column])
        m[pivot_row] = [inverse * x for x in m[pivot_row]]
        for r in range(len(m)):
            if r != pivot_row and m[r][column]:
                factor = m[r][column]
                m[r] = [a - factor * b for a, b in zip(m[r], m[pivot_row])]
        pivots.append(column)
        pivot_row += 1
        if pivot_row == len(m):
            break
    return m[:pivot_row], pivots


def rank(rows, num_columns, domain):
    return len(rref(rows, num_columns, domain)[1])


def nullspace(rows, num_columns, domain):
    """Basis of {x : A x = 0} for A given by its rows."""
    reduced, pivots = rref(rows, num_columns, domain)
    free = [c for c in range(num_columns) if c not in pivots]
    basis = []
    for f in free:
        x = [domain.zero] * num_columns
        x[f] = domain.one
        for row, p in zip(reduced, pivots):
            x[p] = -row[f]
        basis.append(x)
    return basis


def solve(rows, rhs, num_columns, domain):
    """One solution of A x = rhs, or None when the system is inconsistent."""
    augmented = [list(row) + [b] for row, b in zip(rows, rhs)]
    reduced, pivots = rref(augmented, num_columns + 1, domain)
    if num_columns in pivots:
        return None
    x = [domain.zero] * num_columns
    for row, p in zip(reduced, pivots):
        x[p] = row[num_columns]
    return x


def is_invertible(matrix, domain):
    size = len(matrix)
    if any(len(row) != size for row in matrix):
        return False
    return rank(matrix, size, domain) == size


class IncrementalEchelon:
    """Row space grown one vector at a time; tells whether each new vector is independent."""

    def __init__(self, domain):
        self.domain = domain
        self.rows = {}

    def reduce(self, vector):
        v = dict((i, c) for i, c in vector.items() if c)
        for pivot in sorted(self.rows):
            c = v.get(pivot)
            if not c:
                continue
            for i, a in self.rows[pivot].items():
                value = v.get(i, self.domain.zero) - c * a
                if value:
                    v[i] = value
                else:
                    v.pop(i, None)
        return v

    def insert(self, vector):
        """Adds a sparse vector {coordinate: coefficient}; False if it was dependent."""
        v = self.reduce(vector)
        if not v:
            return False
        pivot = min(v)
        inverse = self.domain.quo(self.domain.one, v[pivot])
        v = {i: inverse * c for i, c in v.items()}
        for other_pivot, row in self.rows.items():
            c = row.get(pivot)
            if not c:
                continue
            for i, a in v.items():
                value = row.get(i, self.domain.zero) - c * a
                if value:
                    row[i] = value
                else:
                    row.pop(i, None)
        self.rows[pivot] = v
        return True

    def __len__(self):
        return len(self.rows)
