# cython: language_level=3
"""Compiled arithmetic kernel; mirrors ``_kernel_py`` exactly.

Coefficients stay Python ints (arbitrary precision); the speedup comes from
static dispatch and C-level loops over the term tuples.
"""


cpdef int ord_cmp(tuple x, tuple y):
    cdef Py_ssize_t nx = len(x)
    cdef Py_ssize_t ny = len(y)
    cdef Py_ssize_t n = nx if nx < ny else ny
    cdef Py_ssize_t i
    cdef tuple tx, ty
    cdef int c
    cdef object cx, cy
    if x is y:
        return 0
    for i in range(n):
        tx = <tuple> x[i]
        ty = <tuple> y[i]
        c = ord_cmp(<tuple> tx[0], <tuple> ty[0])
        if c != 0:
            return c
        cx = tx[1]
        cy = ty[1]
        if cx != cy:
            return -1 if cx < cy else 1
    if nx == ny:
        return 0
    return -1 if nx < ny else 1


cpdef tuple ord_add(tuple x, tuple y):
    cdef Py_ssize_t k
    cdef tuple e
    cdef tuple last
    if len(y) == 0:
        return x
    if len(x) == 0:
        return y
    e = <tuple> (<tuple> y[0])[0]
    k = len(x)
    while k and ord_cmp(<tuple> (<tuple> x[k - 1])[0], e) < 0:
        k -= 1
    if k and ord_cmp(<tuple> (<tuple> x[k - 1])[0], e) == 0:
        last = <tuple> x[k - 1]
        return x[:k - 1] + ((e, last[1] + (<tuple> y[0])[1]),) + y[1:]
    return x[:k] + y


cpdef ord_sub(tuple a, tuple b):
    cdef Py_ssize_t na = len(a)
    cdef Py_ssize_t nb = len(b)
    cdef Py_ssize_t n = na if na < nb else nb
    cdef Py_ssize_t i
    cdef tuple ta, tb
    cdef int c
    cdef object ca, cb
    for i in range(n):
        ta = <tuple> a[i]
        tb = <tuple> b[i]
        c = ord_cmp(<tuple> ta[0], <tuple> tb[0])
        if c < 0:
            return None
        if c > 0:
            return a[i:]
        ca = ta[1]
        cb = tb[1]
        if ca != cb:
            if ca < cb:
                return None
            return ((<tuple> ta[0], ca - cb),) + a[i + 1:]
    if nb > na:
        return None
    return a[nb:]


cpdef tuple pair_mul(tuple a, tuple b, tuple c, tuple d):
    cdef object diff
    if ord_cmp(b, c) <= 0:
        diff = ord_sub(c, b)
        return ord_add(a, <tuple> diff), d
    diff = ord_sub(b, c)
    return a, ord_add(d, <tuple> diff)


cpdef object coeff_at(tuple x, tuple e):
    cdef Py_ssize_t i
    cdef tuple t
    cdef int c
    for i in range(len(x)):
        t = <tuple> x[i]
        c = ord_cmp(<tuple> t[0], e)
        if c == 0:
            return t[1]
        if c < 0:
            return 0
    return 0
