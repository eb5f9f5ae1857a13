# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled summation kernels; same contract as ``_pykernels``."""

cdef enum:
    LEIBNIZ = 0
    EQ38 = 1
    EQ39 = 2
    EQ40 = 3
    EQ41 = 4
    EQ42A = 5
    EQ42B = 6
    PUTUMANA = 7
    SQRT12 = 8


cdef inline object rhe(object num, object den):
    cdef object q, r, r2
    q, r = divmod(num, den)
    r2 = r + r
    if r2 > den or (r2 == den and (q & 1)):
        return q + 1
    return q


cpdef tuple term_parts(int kind, object j):
    cdef object p, q, e, a
    if kind == LEIBNIZ:
        return (1 if j & 1 else -1), 2 * j - 1
    if kind == EQ38:
        if j == 1:
            return 3, 4
        p = 2 * j - 1
        return (-1 if j & 1 else 1), p * p * p - p
    if kind == EQ39:
        p = 2 * j - 1
        return (4 if j & 1 else -4), p ** 5 + 4 * p
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


cdef object _leibniz(long long j0, long long j1, object unit):
    cdef long long j
    cdef object acc = 0
    cdef object q, r, r2, den
    for j in range(j0, j1):
        den = 2 * j - 1
        q, r = divmod(unit, den)
        r2 = r + r
        if r2 > den or (r2 == den and (q & 1)):
            q = q + 1
        if j & 1:
            acc = acc + q
        else:
            acc = acc - q
    return acc


cpdef object block_sum(int kind, long long j0, long long j1, object unit):
    cdef long long j
    cdef object acc = 0
    cdef object pw, t, num, den
    if kind == LEIBNIZ:
        return _leibniz(j0, j1, unit)
    if kind == SQRT12:
        pw = (<object>3) ** (j0 - 1) if j0 >= 1 else 1
        for j in range(j0, j1):
            t = rhe(unit, (2 * j - 1) * pw)
            if j & 1:
                acc = acc + t
            else:
                acc = acc - t
            pw = pw * 3
        return acc
    for j in range(j0, j1):
        num, den = term_parts(kind, j)
        acc = acc + rhe(unit * num, den)
    return acc


cpdef list block_prefix(int kind, long long j0, long long j1, object unit, object start=0):
    cdef long long j
    cdef list out = []
    cdef object acc = start
    cdef object pw, t, num, den
    if kind == SQRT12:
        pw = (<object>3) ** (j0 - 1) if j0 >= 1 else 1
        for j in range(j0, j1):
            t = rhe(unit, (2 * j - 1) * pw)
            if j & 1:
                acc = acc + t
            else:
                acc = acc - t
            pw = pw * 3
            out.append(acc)
        return out
    for j in range(j0, j1):
        num, den = term_parts(kind, j)
        acc = acc + rhe(unit * num, den)
        out.append(acc)
    return out
