# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled violator scan for the LP-type solver.

Objects are stored column-wise: for disks (a, b, c) = (cx, cy, r), for
halfplanes (a, b, c) = (nx, ny, offset); ``kind`` is 0 for disks, 1 for
halfplanes.  The order key of an object is (kind, r or 0, id).
"""
import numpy as np


cdef class ViolationScanner:
    cdef double[::1] a
    cdef double[::1] b
    cdef double[::1] c
    cdef unsigned char[::1] kind
    cdef long long[::1] ident
    cdef readonly double tol
    cdef readonly Py_ssize_t n

    def __init__(self, a, b, c, kind, ident, double tol):
        self.a = np.ascontiguousarray(a, dtype=np.float64)
        self.b = np.ascontiguousarray(b, dtype=np.float64)
        self.c = np.ascontiguousarray(c, dtype=np.float64)
        self.kind = np.ascontiguousarray(kind, dtype=np.uint8)
        self.ident = np.ascontiguousarray(ident, dtype=np.int64)
        self.tol = tol
        self.n = self.a.shape[0]

    cpdef Py_ssize_t first_violator(self, Py_ssize_t start, Py_ssize_t stop,
                                    double vx, double vy,
                                    int dkind, double dr, long long did):
        """Index of the first object in [start, stop) ordered before the
        destroyer key (dkind, dr, did) that misses (vx, vy); -1 if none."""
        cdef Py_ssize_t i
        cdef int k
        cdef double dx, dy, rt
        cdef double tol = self.tol
        for i in range(start, stop):
            k = self.kind[i]
            if k > dkind:
                continue
            if k == dkind:
                if k == 0:
                    if self.c[i] > dr or (self.c[i] == dr and self.ident[i] >= did):
                        continue
                elif self.ident[i] >= did:
                    continue
            if k == 0:
                dx = vx - self.a[i]
                dy = vy - self.b[i]
                rt = self.c[i] + tol
                if dx * dx + dy * dy > rt * rt:
                    return i
            elif self.a[i] * vx + self.b[i] * vy > self.c[i] + tol:
                return i
        return -1
