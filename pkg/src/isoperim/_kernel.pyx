# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled branch-and-bound kernel.

Operation-for-operation mirror of ``isoperim._kernel_py``; results must be
bit-identical (tests enforce it).  Read that module for the semantics; keep
any arithmetic change synchronized between the two.

Compiled with -ffp-contract=off: the error-free transformations below are
wrong under fused multiply-add contraction.
"""

from libc.math cimport sqrt, nextafter, INFINITY
from libc.stdlib cimport free, malloc, realloc

BACKEND = "compiled"

cdef double SPLITTER = 134217729.0

cdef inline double next_down(double x) noexcept nogil:
    return nextafter(x, -INFINITY)

cdef inline double next_up(double x) noexcept nogil:
    return nextafter(x, INFINITY)

cdef inline double _two_sum_err(double a, double b, double s) noexcept nogil:
    cdef double bb = s - a
    return (a - (s - bb)) + (b - bb)

cdef inline double add_down(double a, double b) noexcept nogil:
    cdef double s = a + b
    if _two_sum_err(a, b, s) < 0.0:
        return next_down(s)
    return s

cdef inline double add_up(double a, double b) noexcept nogil:
    cdef double s = a + b
    if _two_sum_err(a, b, s) > 0.0:
        return next_up(s)
    return s

cdef inline double sub_down(double a, double b) noexcept nogil:
    cdef double s = a - b
    if _two_sum_err(a, -b, s) < 0.0:
        return next_down(s)
    return s

cdef inline double sub_up(double a, double b) noexcept nogil:
    cdef double s = a - b
    if _two_sum_err(a, -b, s) > 0.0:
        return next_up(s)
    return s

cdef inline double _mul_err(double a, double b, double p) noexcept nogil:
    cdef double aa = SPLITTER * a
    cdef double ah = aa - (aa - a)
    cdef double al = a - ah
    cdef double bb = SPLITTER * b
    cdef double bh = bb - (bb - b)
    cdef double bl = b - bh
    return ((ah * bh - p) + ah * bl + al * bh) + al * bl

cdef inline double mul_down(double a, double b) noexcept nogil:
    cdef double p = a * b
    if _mul_err(a, b, p) < 0.0:
        return next_down(p)
    return p

cdef inline double mul_up(double a, double b) noexcept nogil:
    cdef double p = a * b
    if _mul_err(a, b, p) > 0.0:
        return next_up(p)
    return p

cdef inline double div_down(double a, double b) noexcept nogil:
    cdef double q = a / b
    cdef double p = q * b
    cdef double r = (a - p) - _mul_err(q, b, p)
    if (r < 0.0) != (b < 0.0) and r != 0.0:
        return next_down(q)
    return q

cdef inline double div_up(double a, double b) noexcept nogil:
    cdef double q = a / b
    cdef double p = q * b
    cdef double r = (a - p) - _mul_err(q, b, p)
    if (r > 0.0) == (b > 0.0) and r != 0.0:
        return next_up(q)
    return q

cdef inline double sqrt_down(double x) noexcept nogil:
    if x == 0.0:
        return 0.0
    cdef double r = sqrt(x)
    cdef double p = r * r
    cdef double d = (p - x) + _mul_err(r, r, p)
    if d > 0.0:
        return next_down(r)
    return r

cdef inline double sqrt_up(double x) noexcept nogil:
    if x == 0.0:
        return 0.0
    cdef double r = sqrt(x)
    cdef double p = r * r
    cdef double d = (p - x) + _mul_err(r, r, p)
    if d < 0.0:
        return next_up(r)
    return r

cdef double C23_LO = div_down(2.0, 3.0)
cdef double C23_HI = div_up(2.0, 3.0)

cdef inline double dmin4(double a, double b, double c, double d) noexcept nogil:
    cdef double m = a
    if b < m: m = b
    if c < m: m = c
    if d < m: m = d
    return m

cdef inline double dmax4(double a, double b, double c, double d) noexcept nogil:
    cdef double m = a
    if b > m: m = b
    if c > m: m = c
    if d > m: m = d
    return m

cdef inline void imul(double al, double ah, double bl, double bh,
                      double* rl, double* rh) noexcept nogil:
    rl[0] = dmin4(mul_down(al, bl), mul_down(al, bh), mul_down(ah, bl), mul_down(ah, bh))
    rh[0] = dmax4(mul_up(al, bl), mul_up(al, bh), mul_up(ah, bl), mul_up(ah, bh))

cdef inline void isqr(double al, double ah, double* rl, double* rh) noexcept nogil:
    cdef double u, v
    if al >= 0.0:
        rl[0] = mul_down(al, al)
        rh[0] = mul_up(ah, ah)
    elif ah <= 0.0:
        rl[0] = mul_down(ah, ah)
        rh[0] = mul_up(al, al)
    else:
        rl[0] = 0.0
        u = mul_up(al, al)
        v = mul_up(ah, ah)
        rh[0] = u if u > v else v

cdef inline void idiv_pos(double al, double ah, double bl, double bh,
                          double* rl, double* rh) noexcept nogil:
    cdef double u = div_down(al, bl)
    cdef double v = div_down(al, bh)
    rl[0] = u if u < v else v
    u = div_up(ah, bl)
    v = div_up(ah, bh)
    rh[0] = u if u > v else v

# parts layout (24 doubles):
#  0 al    1 ah    2 pl    3 ph    4 arl   5 arh   6 vl    7 vh
#  8 q1l   9 q1h  10 q2l  11 q2h  12 q3l  13 q3h
# 14 d12l 15 d12h 16 d45l 17 d45h 18 d32l 19 d32h
# 20 sl   21 sh   22 gl   23 gh
cdef void c_parts(double l1, double l2, double l3, double l4, double l5,
                  double h1, double h2, double h3, double h4, double h5,
                  double* P) noexcept nogil:
    cdef double t0l, t0h, t1l, t1h
    cdef double s0l, s0h, s1l, s1h, s2l, s2h
    cdef double s2lo, s2hi, s3lo, s3hi, v2l, v2h
    imul(l2, h2, l4, h4, &t0l, &t0h)
    imul(l1, h1, l5, h5, &t1l, &t1h)
    P[0] = sub_down(t0l, t1h)
    P[1] = sub_up(t0h, t1l)
    imul(l3, h3, l5, h5, &P[2], &P[3])
    P[4] = add_down(P[0], P[2])
    P[5] = add_up(P[1], P[3])
    imul(P[4], P[5], C23_LO, C23_HI, &P[6], &P[7])
    isqr(l1, h1, &s0l, &s0h)
    isqr(l4, h4, &s1l, &s1h)
    P[8] = add_down(s0l, s1l)
    P[9] = add_up(s0h, s1h)
    P[14] = sub_down(l1, h2)
    P[15] = sub_up(h1, l2)
    P[16] = sub_down(l4, h5)
    P[17] = sub_up(h4, l5)
    isqr(P[14], P[15], &s0l, &s0h)
    isqr(P[16], P[17], &s1l, &s1h)
    isqr(P[0], P[1], &s2l, &s2h)
    P[10] = add_down(add_down(s0l, s1l), s2l)
    P[11] = add_up(add_up(s0h, s1h), s2h)
    P[18] = sub_down(l3, h2)
    P[19] = sub_up(h3, l2)
    isqr(l5, h5, &s0l, &s0h)
    isqr(P[18], P[19], &s1l, &s1h)
    isqr(P[2], P[3], &s2l, &s2h)
    P[12] = add_down(add_down(s0l, s1l), s2l)
    P[13] = add_up(add_up(s0h, s1h), s2h)
    P[20] = add_down(add_down(2.0 * sqrt_down(P[8]), 2.0 * sqrt_down(P[10])), 2.0 * sqrt_down(P[12]))
    P[21] = add_up(add_up(2.0 * sqrt_up(P[9]), 2.0 * sqrt_up(P[11])), 2.0 * sqrt_up(P[13]))
    s2lo = mul_down(P[20], P[20])
    s2hi = mul_up(P[21], P[21])
    s3lo = mul_down(s2lo, P[20])
    s3hi = mul_up(s2hi, P[21])
    isqr(P[6], P[7], &v2l, &v2h)
    P[22] = sub_down(s3lo, mul_up(188.0, v2h))
    P[23] = sub_up(s3hi, mul_down(188.0, v2l))

cdef int c_constraints(double l1, double l2, double l3, double l4, double l5,
                       double h1, double h2, double h3, double h4, double h5,
                       double area_min, double* clo, double* chi) noexcept nogil:
    cdef double c1l, c1h, c2l, c2h, t0l, t0h, t1l, t1h, al, ah
    cdef double u0l, u0h, u1l, u1h, bl, bh, pl, ph, arl, arh
    c1l = sub_down(l2, h1)
    c1h = sub_up(h2, l1)
    if c1h < 0.0:
        clo[0] = c1l; chi[0] = c1h
        return 1
    c2l = sub_down(l3, h2)
    c2h = sub_up(h3, l2)
    if c2h < 0.0:
        clo[0] = c2l; chi[0] = c2h
        return 2
    imul(l2, h2, l4, h4, &t0l, &t0h)
    imul(l1, h1, l5, h5, &t1l, &t1h)
    al = sub_down(t0l, t1h)
    ah = sub_up(t0h, t1l)
    if ah < 0.0:
        clo[0] = al; chi[0] = ah
        return 3
    u0l = sub_down(l3, h1)
    u0h = sub_up(h3, l1)
    u1l = sub_down(l3, h2)
    u1h = sub_up(h3, l2)
    imul(u0l, u0h, l5, h5, &t0l, &t0h)
    imul(u1l, u1h, l4, h4, &t1l, &t1h)
    bl = sub_down(t0l, t1h)
    bh = sub_up(t0h, t1l)
    if bh < 0.0:
        clo[0] = bl; chi[0] = bh
        return 4
    imul(l3, h3, l5, h5, &pl, &ph)
    arl = add_down(al, pl)
    arh = add_up(ah, ph)
    if arh < area_min:
        clo[0] = arl; chi[0] = arh
        return 5
    return 0

cdef void c_grad_s(double* P, double l1, double l2, double l3, double l4, double l5,
                   double h1, double h2, double h3, double h4, double h5,
                   double* gs) noexcept nogil:
    """Interval gradient of S over the box; gs holds 10 doubles (lo,hi per var).
    Caller guarantees q1, q2, q3 bounded away from zero."""
    cdef double r1l = sqrt_down(P[8])
    cdef double r1h = sqrt_up(P[9])
    cdef double r2l = sqrt_down(P[10])
    cdef double r2h = sqrt_up(P[11])
    cdef double r3l = sqrt_down(P[12])
    cdef double r3h = sqrt_up(P[13])
    cdef double a2l = P[0] + P[0]
    cdef double a2h = P[1] + P[1]
    cdef double p2l = P[2] + P[2]
    cdef double p2h = P[3] + P[3]
    cdef double d12l = P[14], d12h = P[15]
    cdef double d45l = P[16], d45h = P[17]
    cdef double d32l = P[18], d32h = P[19]
    cdef double t0l, t0h, t1l, t1h
    cdef double g2x1l, g2x1h, g2x2l, g2x2h, g2y1l, g2y1h, g2y2l, g2y2h
    cdef double g3x3l, g3x3h, g3y2l, g3y2h
    imul(a2l, a2h, -h5, -l5, &t0l, &t0h)
    g2x1l = add_down(d12l + d12l, t0l)
    g2x1h = add_up(d12h + d12h, t0h)
    imul(a2l, a2h, l4, h4, &t0l, &t0h)
    g2x2l = add_down(-(d12h + d12h), t0l)
    g2x2h = add_up(-(d12l + d12l), t0h)
    imul(a2l, a2h, l2, h2, &t0l, &t0h)
    g2y1l = add_down(d45l + d45l, t0l)
    g2y1h = add_up(d45h + d45h, t0h)
    imul(a2l, a2h, -h1, -l1, &t0l, &t0h)
    g2y2l = add_down(-(d45h + d45h), t0l)
    g2y2h = add_up(-(d45l + d45l), t0h)
    imul(p2l, p2h, l5, h5, &t0l, &t0h)
    g3x3l = add_down(d32l + d32l, t0l)
    g3x3h = add_up(d32h + d32h, t0h)
    imul(p2l, p2h, l3, h3, &t0l, &t0h)
    g3y2l = add_down(l5 + l5, t0l)
    g3y2h = add_up(h5 + h5, t0h)
    idiv_pos(l1 + l1, h1 + h1, r1l, r1h, &t0l, &t0h)
    idiv_pos(g2x1l, g2x1h, r2l, r2h, &t1l, &t1h)
    gs[0] = add_down(t0l, t1l)
    gs[1] = add_up(t0h, t1h)
    idiv_pos(g2x2l, g2x2h, r2l, r2h, &t0l, &t0h)
    idiv_pos(-(d32h + d32h), -(d32l + d32l), r3l, r3h, &t1l, &t1h)
    gs[2] = add_down(t0l, t1l)
    gs[3] = add_up(t0h, t1h)
    idiv_pos(g3x3l, g3x3h, r3l, r3h, &gs[4], &gs[5])
    idiv_pos(l4 + l4, h4 + h4, r1l, r1h, &t0l, &t0h)
    idiv_pos(g2y1l, g2y1h, r2l, r2h, &t1l, &t1h)
    gs[6] = add_down(t0l, t1l)
    gs[7] = add_up(t0h, t1h)
    idiv_pos(g2y2l, g2y2h, r2l, r2h, &t0l, &t0h)
    idiv_pos(g3y2l, g3y2h, r3l, r3h, &t1l, &t1h)
    gs[8] = add_down(t0l, t1l)
    gs[9] = add_up(t0h, t1h)

# Hessian entry order over (x1,x2,x3,y1,y2); see the pure-Python twin.
cdef int HI_I[15]
cdef int HI_J[15]
cdef double HESS_AREA[15]
HI_I[0] = 0; HI_J[0] = 0
HI_I[1] = 0; HI_J[1] = 1
HI_I[2] = 0; HI_J[2] = 2
HI_I[3] = 0; HI_J[3] = 3
HI_I[4] = 0; HI_J[4] = 4
HI_I[5] = 1; HI_J[5] = 1
HI_I[6] = 1; HI_J[6] = 2
HI_I[7] = 1; HI_J[7] = 3
HI_I[8] = 1; HI_J[8] = 4
HI_I[9] = 2; HI_J[9] = 2
HI_I[10] = 2; HI_J[10] = 3
HI_I[11] = 2; HI_J[11] = 4
HI_I[12] = 3; HI_J[12] = 3
HI_I[13] = 3; HI_J[13] = 4
HI_I[14] = 4; HI_J[14] = 4
cdef int _n
for _n in range(15):
    HESS_AREA[_n] = 0.0
HESS_AREA[4] = -1.0
HESS_AREA[7] = 1.0
HESS_AREA[11] = 1.0

cdef void c_hess_maxabs(double* P, double* gs,
                        double l1, double l2, double l3, double l4, double l5,
                        double h1, double h2, double h3, double h4, double h5,
                        double mu, double* hmax) noexcept nogil:
    cdef double a2l = P[0] + P[0]
    cdef double a2h = P[1] + P[1]
    cdef double p2l = P[2] + P[2]
    cdef double p2h = P[3] + P[3]
    cdef double d12l = P[14], d12h = P[15]
    cdef double d45l = P[16], d45h = P[17]
    cdef double d32l = P[18], d32h = P[19]
    cdef double gq1[10]
    cdef double gq2[10]
    cdef double gq3[10]
    cdef double hq1[30]
    cdef double hq2[30]
    cdef double hq3[30]
    cdef double da[10]
    cdef double dp[10]
    cdef double darea[10]
    cdef double t0l, t0h, t1l, t1h, tl, th
    cdef int n, i, j
    for n in range(10):
        gq1[n] = 0.0
        gq2[n] = 0.0
        gq3[n] = 0.0
    for n in range(30):
        hq1[n] = 0.0
        hq2[n] = 0.0
        hq3[n] = 0.0
    gq1[0] = l1 + l1; gq1[1] = h1 + h1
    gq1[6] = l4 + l4; gq1[7] = h4 + h4
    imul(a2l, a2h, -h5, -l5, &t0l, &t0h)
    gq2[0] = add_down(d12l + d12l, t0l)
    gq2[1] = add_up(d12h + d12h, t0h)
    imul(a2l, a2h, l4, h4, &t0l, &t0h)
    gq2[2] = add_down(-(d12h + d12h), t0l)
    gq2[3] = add_up(-(d12l + d12l), t0h)
    imul(a2l, a2h, l2, h2, &t0l, &t0h)
    gq2[6] = add_down(d45l + d45l, t0l)
    gq2[7] = add_up(d45h + d45h, t0h)
    imul(a2l, a2h, -h1, -l1, &t0l, &t0h)
    gq2[8] = add_down(-(d45h + d45h), t0l)
    gq2[9] = add_up(-(d45l + d45l), t0h)
    gq3[2] = -(d32h + d32h)
    gq3[3] = -(d32l + d32l)
    imul(p2l, p2h, l5, h5, &t0l, &t0h)
    gq3[4] = add_down(d32l + d32l, t0l)
    gq3[5] = add_up(d32h + d32h, t0h)
    imul(p2l, p2h, l3, h3, &t0l, &t0h)
    gq3[8] = add_down(l5 + l5, t0l)
    gq3[9] = add_up(h5 + h5, t0h)

    hq1[0] = 2.0; hq1[1] = 2.0
    hq1[24] = 2.0; hq1[25] = 2.0

    da[0] = -h5; da[1] = -l5
    da[2] = l4; da[3] = h4
    da[4] = 0.0; da[5] = 0.0
    da[6] = l2; da[7] = h2
    da[8] = -h1; da[9] = -l1
    hq2[0] = 2.0; hq2[1] = 2.0
    hq2[2] = -2.0; hq2[3] = -2.0
    hq2[10] = 2.0; hq2[11] = 2.0
    hq2[24] = 2.0; hq2[25] = 2.0
    hq2[26] = -2.0; hq2[27] = -2.0
    hq2[28] = 2.0; hq2[29] = 2.0
    for n in range(15):
        i = HI_I[n]; j = HI_J[n]
        imul(da[2 * i], da[2 * i + 1], da[2 * j], da[2 * j + 1], &t0l, &t0h)
        tl = t0l + t0l
        th = t0h + t0h
        if n == 7:
            tl = add_down(tl, a2l)
            th = add_up(th, a2h)
        elif n == 4:
            tl = sub_down(tl, a2h)
            th = sub_up(th, a2l)
        hq2[2 * n] = add_down(hq2[2 * n], tl)
        hq2[2 * n + 1] = add_up(hq2[2 * n + 1], th)

    dp[0] = 0.0; dp[1] = 0.0
    dp[2] = 0.0; dp[3] = 0.0
    dp[4] = l5; dp[5] = h5
    dp[6] = 0.0; dp[7] = 0.0
    dp[8] = l3; dp[9] = h3
    hq3[10] = 2.0; hq3[11] = 2.0
    hq3[12] = -2.0; hq3[13] = -2.0
    hq3[18] = 2.0; hq3[19] = 2.0
    hq3[28] = 2.0; hq3[29] = 2.0
    for n in range(15):
        i = HI_I[n]; j = HI_J[n]
        imul(dp[2 * i], dp[2 * i + 1], dp[2 * j], dp[2 * j + 1], &t0l, &t0h)
        tl = t0l + t0l
        th = t0h + t0h
        if n == 11:
            tl = add_down(tl, p2l)
            th = add_up(th, p2h)
        hq3[2 * n] = add_down(hq3[2 * n], tl)
        hq3[2 * n + 1] = add_up(hq3[2 * n + 1], th)

    cdef double r1l = sqrt_down(P[8]), r1h = sqrt_up(P[9])
    cdef double inv1l, inv1h, j1l, j1h
    idiv_pos(1.0, 1.0, r1l, r1h, &inv1l, &inv1h)
    imul(P[8], P[9], r1l, r1h, &t0l, &t0h)
    idiv_pos(0.5, 0.5, t0l, t0h, &j1l, &j1h)
    cdef double r2l = sqrt_down(P[10]), r2h = sqrt_up(P[11])
    cdef double inv2l, inv2h, j2l, j2h
    idiv_pos(1.0, 1.0, r2l, r2h, &inv2l, &inv2h)
    imul(P[10], P[11], r2l, r2h, &t0l, &t0h)
    idiv_pos(0.5, 0.5, t0l, t0h, &j2l, &j2h)
    cdef double r3l = sqrt_down(P[12]), r3h = sqrt_up(P[13])
    cdef double inv3l, inv3h, j3l, j3h
    idiv_pos(1.0, 1.0, r3l, r3h, &inv3l, &inv3h)
    imul(P[12], P[13], r3l, r3h, &t0l, &t0h)
    idiv_pos(0.5, 0.5, t0l, t0h, &j3l, &j3h)

    cdef double s2lo = mul_down(P[20], P[20])
    cdef double s2hi = mul_up(P[21], P[21])
    cdef double s23l, s23h, s6l, s6h, cal, cah, cbl, cbh
    imul(3.0, 3.0, s2lo, s2hi, &s23l, &s23h)
    imul(6.0, 6.0, P[20], P[21], &s6l, &s6h)
    imul(C23_LO, C23_HI, P[6], P[7], &t0l, &t0h)
    imul(376.0, 376.0, t0l, t0h, &cal, &cah)
    imul(C23_LO, C23_HI, C23_LO, C23_HI, &t0l, &t0h)
    imul(376.0, 376.0, t0l, t0h, &cbl, &cbh)
    darea[0] = -h5; darea[1] = -l5
    darea[2] = l4; darea[3] = h4
    darea[4] = l5; darea[5] = h5
    darea[6] = l2; darea[7] = h2
    darea[8] = sub_down(l3, h1); darea[9] = sub_up(h3, l1)

    cdef double hsl, hsh, hl, hh, ha
    for n in range(15):
        i = HI_I[n]; j = HI_J[n]
        imul(hq1[2 * n], hq1[2 * n + 1], inv1l, inv1h, &t0l, &t0h)
        hsl = t0l; hsh = t0h
        imul(gq1[2 * i], gq1[2 * i + 1], gq1[2 * j], gq1[2 * j + 1], &t0l, &t0h)
        imul(t0l, t0h, j1l, j1h, &t0l, &t0h)
        hsl = sub_down(hsl, t0h); hsh = sub_up(hsh, t0l)
        imul(hq2[2 * n], hq2[2 * n + 1], inv2l, inv2h, &t0l, &t0h)
        hsl = add_down(hsl, t0l); hsh = add_up(hsh, t0h)
        imul(gq2[2 * i], gq2[2 * i + 1], gq2[2 * j], gq2[2 * j + 1], &t0l, &t0h)
        imul(t0l, t0h, j2l, j2h, &t0l, &t0h)
        hsl = sub_down(hsl, t0h); hsh = sub_up(hsh, t0l)
        imul(hq3[2 * n], hq3[2 * n + 1], inv3l, inv3h, &t0l, &t0h)
        hsl = add_down(hsl, t0l); hsh = add_up(hsh, t0h)
        imul(gq3[2 * i], gq3[2 * i + 1], gq3[2 * j], gq3[2 * j + 1], &t0l, &t0h)
        imul(t0l, t0h, j3l, j3h, &t0l, &t0h)
        hsl = sub_down(hsl, t0h); hsh = sub_up(hsh, t0l)
        imul(s23l, s23h, hsl, hsh, &t0l, &t0h)
        imul(gs[2 * i], gs[2 * i + 1], gs[2 * j], gs[2 * j + 1], &t1l, &t1h)
        imul(s6l, s6h, t1l, t1h, &t1l, &t1h)
        hl = add_down(t0l, t1l); hh = add_up(t0h, t1h)
        imul(darea[2 * i], darea[2 * i + 1], darea[2 * j], darea[2 * j + 1], &t1l, &t1h)
        imul(cbl, cbh, t1l, t1h, &t1l, &t1h)
        hl = sub_down(hl, t1h); hh = sub_up(hh, t1l)
        ha = HESS_AREA[n]
        if ha != 0.0:
            t1l = add_down(cal, mu)
            t1h = add_up(cah, mu)
            imul(t1l, t1h, ha, ha, &t1l, &t1h)
            hl = sub_down(hl, t1h); hh = sub_up(hh, t1l)
        hmax[n] = -hl if -hl > hh else hh

cdef int c_point_grad_f(double c1, double c2, double c3, double c4, double c5,
                        double mu, double* gfc) noexcept nogil:
    cdef double P[24]
    cdef double gs[10]
    cdef double s2lo, s2hi, s23l, s23h, t0l, t0h, t1l, t1h, cal, cah, cfl, cfh
    cdef double darea[10]
    cdef int i
    c_parts(c1, c2, c3, c4, c5, c1, c2, c3, c4, c5, P)
    if P[8] <= 0.0 or P[10] <= 0.0 or P[12] <= 0.0:
        return 0
    c_grad_s(P, c1, c2, c3, c4, c5, c1, c2, c3, c4, c5, gs)
    s2lo = mul_down(P[20], P[20])
    s2hi = mul_up(P[21], P[21])
    imul(3.0, 3.0, s2lo, s2hi, &s23l, &s23h)
    imul(C23_LO, C23_HI, P[6], P[7], &t0l, &t0h)
    imul(376.0, 376.0, t0l, t0h, &cal, &cah)
    cfl = add_down(cal, mu)
    cfh = add_up(cah, mu)
    darea[0] = -c5; darea[1] = -c5
    darea[2] = c4; darea[3] = c4
    darea[4] = c5; darea[5] = c5
    darea[6] = c2; darea[7] = c2
    darea[8] = sub_down(c3, c1); darea[9] = sub_up(c3, c1)
    for i in range(5):
        imul(s23l, s23h, gs[2 * i], gs[2 * i + 1], &t0l, &t0h)
        imul(cfl, cfh, darea[2 * i], darea[2 * i + 1], &t1l, &t1h)
        gfc[2 * i] = sub_down(t0l, t1h)
        gfc[2 * i + 1] = sub_up(t0h, t1l)
    return 1

cdef double c_point_f(double c1, double c2, double c3, double c4, double c5,
                      double mu, double area_min) noexcept nogil:
    cdef double P[24]
    cdef double el, eh, ql, qh
    c_parts(c1, c2, c3, c4, c5, c1, c2, c3, c4, c5, P)
    el = sub_down(P[4], area_min)
    eh = sub_up(P[5], area_min)
    imul(mu, mu, el, eh, &ql, &qh)
    return sub_down(P[22], qh)

cdef int c_curvature_lower_bound(double* P,
                                 double l1, double l2, double l3, double l4, double l5,
                                 double h1, double h2, double h3, double h4, double h5,
                                 double mu, double area_min, double* bound) noexcept nogil:
    cdef double gfc[10]
    cdef double gs[10]
    cdef double hmax[15]
    cdef double hw[5]
    cdef double lo[5]
    cdef double hi[5]
    cdef double cc[5]
    cdef double total, rl, rh, tl, th, rem, t
    cdef int i, n
    if P[8] <= 0.0 or P[10] <= 0.0 or P[12] <= 0.0:
        return 0
    cc[0] = 0.5 * (l1 + h1)
    cc[1] = 0.5 * (l2 + h2)
    cc[2] = 0.5 * (l3 + h3)
    cc[3] = 0.5 * (l4 + h4)
    cc[4] = 0.5 * (l5 + h5)
    if c_point_grad_f(cc[0], cc[1], cc[2], cc[3], cc[4], mu, gfc) == 0:
        return 0
    total = c_point_f(cc[0], cc[1], cc[2], cc[3], cc[4], mu, area_min)
    lo[0] = l1; lo[1] = l2; lo[2] = l3; lo[3] = l4; lo[4] = l5
    hi[0] = h1; hi[1] = h2; hi[2] = h3; hi[3] = h4; hi[4] = h5
    for i in range(5):
        rl = sub_down(lo[i], cc[i])
        rh = sub_up(hi[i], cc[i])
        imul(gfc[2 * i], gfc[2 * i + 1], rl, rh, &tl, &th)
        total = add_down(total, tl)
    c_grad_s(P, l1, l2, l3, l4, l5, h1, h2, h3, h4, h5, gs)
    c_hess_maxabs(P, gs, l1, l2, l3, l4, l5, h1, h2, h3, h4, h5, mu, hmax)
    for i in range(5):
        hw[i] = 0.5 * sub_up(hi[i], lo[i])
    rem = 0.0
    for n in range(15):
        t = mul_up(mul_up(hmax[n], hw[HI_I[n]]), hw[HI_J[n]])
        if HI_I[n] != HI_J[n]:
            t = t + t
        rem = add_up(rem, t)
    bound[0] = sub_down(total, mul_up(0.5, rem))
    return 1

cdef int c_classify(double* b, double area_min, double threshold, double mu,
                    int use_curvature, double* info, double* a_out, double* b_out,
                    int* dim_out) noexcept nogil:
    """b points at 10 doubles l1..l5,h1..h5. Mirrors _kernel_py.classify."""
    cdef double clo = 0.0, chi = 0.0
    cdef double P[24]
    cdef double gl, best, cb, w, wi, mu_eff
    cdef int cidx, kind, dim, i
    cidx = c_constraints(b[0], b[1], b[2], b[3], b[4], b[5], b[6], b[7], b[8], b[9],
                         area_min, &clo, &chi)
    if cidx != 0:
        info[0] = <double> cidx
        a_out[0] = clo
        b_out[0] = chi
        dim_out[0] = -1
        return 0
    c_parts(b[0], b[1], b[2], b[3], b[4], b[5], b[6], b[7], b[8], b[9], P)
    gl = P[22]
    if gl > threshold:
        info[0] = 0.0
        a_out[0] = gl
        b_out[0] = gl
        dim_out[0] = -1
        return 1
    best = gl
    kind = 0
    w = b[5] - b[0]
    for i in range(1, 5):
        wi = b[5 + i] - b[i]
        if wi > w:
            w = wi
    if use_curvature and w <= 0.5:
        # boxes fully on the feasible side of the area constraint need no
        # penalty; straddling boxes get the exact-penalty multiplier
        mu_eff = 0.0 if P[4] >= area_min else mu
        if c_curvature_lower_bound(P, b[0], b[1], b[2], b[3], b[4],
                                   b[5], b[6], b[7], b[8], b[9],
                                   mu_eff, area_min, &cb):
            if cb > best:
                best = cb
                kind = 1
        if best > threshold:
            info[0] = <double> kind
            a_out[0] = best
            b_out[0] = gl
            dim_out[0] = -1
            return 1
    w = b[5] - b[0]
    dim = 0
    for i in range(1, 5):
        wi = b[5 + i] - b[i]
        if wi > w:
            w = wi
            dim = i
    info[0] = 0.0
    a_out[0] = gl
    b_out[0] = best
    dim_out[0] = dim
    return 2


def eval_svg(double l1, double l2, double l3, double l4, double l5,
             double h1, double h2, double h3, double h4, double h5):
    cdef double P[24]
    c_parts(l1, l2, l3, l4, l5, h1, h2, h3, h4, h5, P)
    return P[20], P[21], P[6], P[7], P[22], P[23]


cdef class BnbCore:
    """Depth-first subdivision worker; see the pure-Python twin for the API."""
    cdef double* stack          # 11 doubles per entry: box(10) + depth
    cdef size_t sp              # entries on the stack
    cdef size_t cap
    cdef double area_min, threshold, mu
    cdef int use_curvature, max_depth
    cdef public long processed
    cdef public long unresolved
    cdef public int max_depth_seen

    def __cinit__(self, lo5, hi5, depth, area_min, threshold, mu, use_curvature, max_depth):
        self.cap = 1024
        self.stack = <double*> malloc(self.cap * 11 * sizeof(double))
        if self.stack == NULL:
            raise MemoryError
        cdef int i
        for i in range(5):
            self.stack[i] = <double> lo5[i]
            self.stack[5 + i] = <double> hi5[i]
        self.stack[10] = <double> depth
        self.sp = 1
        self.area_min = area_min
        self.threshold = threshold
        self.mu = mu
        self.use_curvature = 1 if use_curvature else 0
        self.max_depth = max_depth
        self.processed = 0
        self.unresolved = 0
        self.max_depth_seen = <int> depth

    def __dealloc__(self):
        if self.stack != NULL:
            free(self.stack)

    @property
    def pending(self):
        return self.sp

    cdef int _grow(self) except -1:
        cdef size_t newcap = self.cap * 2
        cdef double* p = <double*> realloc(self.stack, newcap * 11 * sizeof(double))
        if p == NULL:
            raise MemoryError
        self.stack = p
        self.cap = newcap
        return 0

    def run_chunk(self, double[:, ::1] out, long max_boxes):
        cdef long cap = out.shape[0]
        cdef long n = 0, nproc = 0
        cdef double box[10]
        cdef double info = 0.0, a = 0.0, bb = 0.0
        cdef double l, h, m
        cdef int depth, status, dim, i
        cdef double* sl
        if out.shape[1] != 14:
            raise ValueError("record buffer must be (n, 14)")
        while self.sp > 0 and nproc < max_boxes and n < cap:
            if self.sp + 2 > self.cap:
                self._grow()
            with nogil:
                while self.sp > 0 and nproc < max_boxes and n < cap and self.sp + 2 <= self.cap:
                    self.sp -= 1
                    sl = self.stack + self.sp * 11
                    for i in range(10):
                        box[i] = sl[i]
                    depth = <int> sl[10]
                    nproc += 1
                    if depth > self.max_depth_seen:
                        self.max_depth_seen = depth
                    status = c_classify(box, self.area_min, self.threshold, self.mu,
                                        self.use_curvature, &info, &a, &bb, &dim)
                    if status == 2 and depth < self.max_depth:
                        l = box[dim]
                        h = box[5 + dim]
                        m = 0.5 * (l + h)
                        if m > l and m < h:
                            # upper half first (processed second), then lower half
                            sl = self.stack + self.sp * 11
                            for i in range(10):
                                sl[i] = box[i]
                            sl[dim] = m
                            sl[10] = <double> (depth + 1)
                            self.sp += 1
                            sl = self.stack + self.sp * 11
                            for i in range(10):
                                sl[i] = box[i]
                            sl[5 + dim] = m
                            sl[10] = <double> (depth + 1)
                            self.sp += 1
                            continue
                    if status == 2:
                        self.unresolved += 1
                        info = <double> depth
                    for i in range(10):
                        out[n, i] = box[i]
                    out[n, 10] = <double> status
                    out[n, 11] = info
                    out[n, 12] = a
                    out[n, 13] = bb
                    n += 1
        self.processed += nproc
        return n, nproc, self.sp == 0

    def drain(self, double[:, ::1] out):
        cdef long cap = out.shape[0]
        cdef long n = 0
        cdef double P[24]
        cdef double* sl
        cdef int i
        if out.shape[1] != 14:
            raise ValueError("record buffer must be (n, 14)")
        with nogil:
            while self.sp > 0 and n < cap:
                self.sp -= 1
                sl = self.stack + self.sp * 11
                c_parts(sl[0], sl[1], sl[2], sl[3], sl[4],
                        sl[5], sl[6], sl[7], sl[8], sl[9], P)
                self.unresolved += 1
                for i in range(10):
                    out[n, i] = sl[i]
                out[n, 10] = 2.0
                out[n, 11] = sl[10]
                out[n, 12] = P[22]
                out[n, 13] = P[22]
                n += 1
        return n


def classify_batch(double[:, ::1] boxes, double[:, ::1] out,
                   double area_min, double threshold, double mu, use_curvature):
    cdef long n = boxes.shape[0]
    cdef long i
    cdef int j, dim, status
    cdef int ucv = 1 if use_curvature else 0
    cdef double box[10]
    cdef double info = 0.0, a = 0.0, bb = 0.0
    if boxes.shape[1] != 10 or out.shape[1] != 4 or out.shape[0] < n:
        raise ValueError("boxes must be (n, 10), out at least (n, 4)")
    with nogil:
        for i in range(n):
            for j in range(10):
                box[j] = boxes[i, j]
            status = c_classify(box, area_min, threshold, mu, ucv,
                                &info, &a, &bb, &dim)
            out[i, 0] = <double> status
            out[i, 1] = info
            out[i, 2] = a
            out[i, 3] = bb
    return n
