"""Pure-Python GF(2) column reduction, used when the compiled core is absent.

Columns are stored as Python ints used as bitsets; XOR is column addition
and ``bit_length() - 1`` is the pivot (lowest nonzero row in matrix terms).
"""


def reduce_boundary(columns, dims):
    """Reduce a filtered boundary matrix with the clearing optimisation.

    ``columns[j]`` lists the row indices of column ``j``; ``dims[j]`` is the
    dimension of simplex ``j``. Returns ``low`` where ``low[j]`` is the pivot
    row of reduced column ``j`` or -1 when the column reduces to zero.
    """
    n = len(columns)
    low = [-1] * n
    owner = {}
    reduced = [0] * n
    cleared = bytearray(n)
    order = sorted(range(n), key=lambda j: (-dims[j], j))
    for j in order:
        if cleared[j]:
            continue
        col = 0
        for i in columns[j]:
            col ^= 1 << i
        while col:
            piv = col.bit_length() - 1
            k = owner.get(piv)
            if k is None:
                owner[piv] = j
                reduced[j] = col
                low[j] = piv
                cleared[piv] = 1
                break
            col ^= reduced[k]
    return low


def gf2_rank(rows):
    """Rank over GF(2) of a matrix given as a list of int bitsets."""
    pivots = {}
    rank = 0
    for row in rows:
        while row:
            top = row.bit_length() - 1
            basis = pivots.get(top)
            if basis is None:
                pivots[top] = row
                rank += 1
                break
            row ^= basis
    return rank
