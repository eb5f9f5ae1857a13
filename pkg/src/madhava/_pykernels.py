"""Pure-Python summation kernels (fallback for the compiled module).

Every kernel sums ``round_half_even(unit * term_j)`` over a block of term
indices, where ``term_j`` is the j-th term (1-based) of the series selected
by ``kind``.  Keep in lockstep with ``_ckernels.pyx``.
"""

LEIBNIZ = 0
EQ38 = 1
EQ39 = 2
EQ40 = 3
EQ41 = 4
EQ42A = 5
EQ42B = 6
PUTUMANA = 7
SQRT12 = 8


def rhe(num, den):
    """round_half_even(num / den) for den > 0."""
    q, r = divmod(num, den)
    r2 = r + r
    if r2 > den or (r2 == den and q & 1):
        return q + 1
    return q


def term_parts(kind, j):
    """Signed numerator and positive denominator of term j."""
    if kind == LEIBNIZ:
        return (1 if j & 1 else -1), 2 * j - 1
    if kind == EQ38:
        if j == 1:
            return 3, 4
        p = 2 * j - 1
        return (-1 if j & 1 else 1), p * p * p - p
    if kind == EQ39:
        p = 2 * j - 1
        return (4 if j & 1 else -4), p**5 + 4 * p
    if kind == EQ40:
        if j == 1:
            return 7, 9
        p = 2 * j - 1
        q = p * p + 4
        return (-36 if j & 1 else 36), (p - 1) * p * (p + 1) * (q * q + 20)
    if kind == EQ41:
        if j == 1:
            return 1, 2
        e = 2 * j - 2
        return (-1 if j & 1 else 1), e * e - 1
    if kind == EQ42A:
        e = 4 * j - 2
        return 1, e * e - 1
    if kind == EQ42B:
        if j == 1:
            return 1, 2
        e = 4 * j - 4
        return -1, e * e - 1
    if kind == PUTUMANA:
        e = 2 * j
        a = 2 * e * e - 1
        return 3, 2 * (a * a - e * e)
    if kind == SQRT12:
        return (1 if j & 1 else -1), (2 * j - 1) * 3 ** (j - 1)
    raise ValueError("unknown series kind %r" % (kind,))


def block_sum(kind, j0, j1, unit):
    """Sum of rounded terms for j in [j0, j1)."""
    acc = 0
    if kind == LEIBNIZ:
        for j in range(j0, j1):
            if j & 1:
                acc += rhe(unit, 2 * j - 1)
            else:
                acc -= rhe(unit, 2 * j - 1)
        return acc
    if kind == SQRT12:
        pw = 3 ** (j0 - 1) if j0 >= 1 else 1
        for j in range(j0, j1):
            t = rhe(unit, (2 * j - 1) * pw)
            acc = acc + t if j & 1 else acc - t
            pw *= 3
        return acc
    for j in range(j0, j1):
        num, den = term_parts(kind, j)
        acc += rhe(unit * num, den)
    return acc


def block_prefix(kind, j0, j1, unit, start=0):
    """Running sums ``start + sum_{j0 <= i <= j}`` for each j in [j0, j1)."""
    out = []
    acc = start
    if kind == SQRT12:
        pw = 3 ** (j0 - 1) if j0 >= 1 else 1
        for j in range(j0, j1):
            t = rhe(unit, (2 * j - 1) * pw)
            acc = acc + t if j & 1 else acc - t
            pw *= 3
            out.append(acc)
        return out
    for j in range(j0, j1):
        num, den = term_parts(kind, j)
        acc += rhe(unit * num, den)
        out.append(acc)
    return out
