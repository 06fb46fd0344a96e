# cython: language_level=3
"""Compiled scan kernels.

Expression-for-expression identical to _kernels_py.py so the two backends
return bit-equal results; edit them together.  Built without fast-math or
architecture flags on purpose: reordering or contracting the float ops
would break that equality.
"""

BACKEND = "compiled"


def scan_single(double p1, double q_lo, double q_hi, Py_ssize_t resolution):
    """Min and max of p1 - q over a uniform q grid including both ends."""
    cdef double step = (q_hi - q_lo) / (resolution - 1)
    cdef double lo = p1 - q_lo
    cdef double hi = lo
    cdef double q, v
    cdef Py_ssize_t i
    for i in range(resolution):
        q = q_hi if i == resolution - 1 else q_lo + step * i
        v = p1 - q
        if v < lo:
            lo = v
        elif v > hi:
            hi = v
    return lo, hi


def scan_pair(
    double pm0,
    double pm1,
    double qm_lo,
    double qm_hi,
    double pr0,
    double pr1,
    double qr_lo,
    double qr_hi,
    Py_ssize_t resolution,
):
    """Min and max of the two-box numerator over the product grid.

    The objective is (pm1 - qm)(pr1 - qr) + (pm0 - qm)(pr0 - qr); both grid
    axes include their exact endpoints.
    """
    cdef double m_step = (qm_hi - qm_lo) / (resolution - 1)
    cdef double r_step = (qr_hi - qr_lo) / (resolution - 1)
    cdef double lo = (pm1 - qm_lo) * (pr1 - qr_lo) + (pm0 - qm_lo) * (pr0 - qr_lo)
    cdef double hi = lo
    cdef double qm, qr, am, bm, v
    cdef Py_ssize_t i, j
    for i in range(resolution):
        qm = qm_hi if i == resolution - 1 else qm_lo + m_step * i
        am = pm1 - qm
        bm = pm0 - qm
        for j in range(resolution):
            qr = qr_hi if j == resolution - 1 else qr_lo + r_step * j
            v = am * (pr1 - qr) + bm * (pr0 - qr)
            if v < lo:
                lo = v
            elif v > hi:
                hi = v
    return lo, hi
