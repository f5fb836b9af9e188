"""Pure-Python branch-and-bound kernel.

This is the reference implementation of the certification hot loop; the
compiled extension ``isoperim._kernel`` mirrors it operation-for-operation and
must produce bit-identical results (enforced by tests).  Keep the two in sync:
any change to arithmetic *order* here is a semantic change.

Box layout everywhere: 10 doubles ``l1..l5, h1..h5`` for the coordinates
``x1, x2, x3, y1, y2``.

Leaf records are 14 doubles::

    l1..l5, h1..h5, status, info, a, b

    status 0 (infeasible):  info = violated condition index 1..5,
                            (a, b) = certifying interval of that condition
    status 1 (verified):    info = 0 plain bound / 1 curvature bound,
                            a = certified lower bound of the objective on the
                                feasible part of the box, b = plain lower bound
    status 2 (unresolved):  info = depth, a = plain lower bound, b = best bound

Condition indices: 1: x1<=x2, 2: x2<=x3, 3: x2*y1-x1*y2>=0,
4: (x3-x1)*y2-(x3-x2)*y1>=0, 5: base area >= area_min.

The verified test uses two sound lower bounds for G = S^3 - 188 V^2 on the
feasible part of a box:

* the plain natural interval extension of G, and
* a penalized second-order (Taylor) bound: with F = G - mu*(area - area_min)
  and mu >= 0, every feasible x has G(x) >= F(x), and over a box B with
  center c

      F(x) >= lo[F(c)] + sum_i lo[dF_i(c) * (B_i - c_i)]
              - 1/2 |Delta^T H_F(B) Delta|_max,

  where dF(c) is a directed point evaluation of the gradient and H_F(B) a
  natural interval extension of the Hessian.  Near the constrained minimizer
  (where mu matches the active-constraint multiplier) this converges
  quadratically while the plain extension converges only linearly.
"""

from __future__ import annotations

from ._roundops import (
    add_down,
    add_up,
    div_down,
    div_up,
    mul_down,
    mul_up,
    sqrt_down,
    sqrt_up,
    sub_down,
    sub_up,
)

BACKEND = "python"

# exact directed enclosures of the rational constants in the closed forms
C23_LO = div_down(2.0, 3.0)    # 2/3, for V = (2/3) * area
C23_HI = div_up(2.0, 3.0)

STATUS_INFEASIBLE = 0
STATUS_VERIFIED = 1
STATUS_UNRESOLVED = 2

BOUND_PLAIN = 0
BOUND_CURVATURE = 1


def _imul(al, ah, bl, bh):
    # generic interval product, directed outward
    lo = min(mul_down(al, bl), mul_down(al, bh), mul_down(ah, bl), mul_down(ah, bh))
    hi = max(mul_up(al, bl), mul_up(al, bh), mul_up(ah, bl), mul_up(ah, bh))
    return lo, hi


def _isqr(al, ah):
    # interval square with even-power reflection
    if al >= 0.0:
        return mul_down(al, al), mul_up(ah, ah)
    if ah <= 0.0:
        return mul_down(ah, ah), mul_up(al, al)
    return 0.0, max(mul_up(al, al), mul_up(ah, ah))


def _iadd(al, ah, bl, bh):
    return add_down(al, bl), add_up(ah, bh)


def _isub(al, ah, bl, bh):
    return sub_down(al, bh), sub_up(ah, bl)


def _idiv_pos(al, ah, bl, bh):
    # divide by an interval known to satisfy bl > 0
    lo = min(div_down(al, bl), div_down(al, bh))
    hi = max(div_up(ah, bl), div_up(ah, bh))
    return lo, hi


def _parts(l1, l2, l3, l4, l5, h1, h2, h3, h4, h5):
    """Shared natural-extension subexpressions of the closed forms.

    Returns a tuple
    (al, ah, pl, ph, arl, arh, vl, vh,
     q1l, q1h, q2l, q2h, q3l, q3h,
     d12l, d12h, d45l, d45h, d32l, d32h,
     sl, sh, gl, gh)."""
    # A = x2*y1 - x1*y2
    t0l, t0h = _imul(l2, h2, l4, h4)
    t1l, t1h = _imul(l1, h1, l5, h5)
    al = sub_down(t0l, t1h)
    ah = sub_up(t0h, t1l)
    # P = x3*y2
    pl, ph = _imul(l3, h3, l5, h5)
    # area = A + P ; V = (2/3) * area
    arl = add_down(al, pl)
    arh = add_up(ah, ph)
    vl, vh = _imul(arl, arh, C23_LO, C23_HI)
    # q1 = x1^2 + y1^2
    s0l, s0h = _isqr(l1, h1)
    s1l, s1h = _isqr(l4, h4)
    q1l = add_down(s0l, s1l)
    q1h = add_up(s0h, s1h)
    # q2 = (x1-x2)^2 + (y1-y2)^2 + A^2
    d12l = sub_down(l1, h2)
    d12h = sub_up(h1, l2)
    d45l = sub_down(l4, h5)
    d45h = sub_up(h4, l5)
    s0l, s0h = _isqr(d12l, d12h)
    s1l, s1h = _isqr(d45l, d45h)
    s2l, s2h = _isqr(al, ah)
    q2l = add_down(add_down(s0l, s1l), s2l)
    q2h = add_up(add_up(s0h, s1h), s2h)
    # q3 = y2^2 + (x3-x2)^2 + (x3*y2)^2
    d32l = sub_down(l3, h2)
    d32h = sub_up(h3, l2)
    s0l, s0h = _isqr(l5, h5)
    s1l, s1h = _isqr(d32l, d32h)
    s2l, s2h = _isqr(pl, ph)
    q3l = add_down(add_down(s0l, s1l), s2l)
    q3h = add_up(add_up(s0h, s1h), s2h)
    # S = 2*sqrt(q1) + 2*sqrt(q2) + 2*sqrt(q3); factor 2 is exact
    sl = add_down(add_down(2.0 * sqrt_down(q1l), 2.0 * sqrt_down(q2l)), 2.0 * sqrt_down(q3l))
    sh = add_up(add_up(2.0 * sqrt_up(q1h), 2.0 * sqrt_up(q2h)), 2.0 * sqrt_up(q3h))
    # G = S^3 - 188 V^2   (S >= 0: its terms are square roots)
    s2lo = mul_down(sl, sl)
    s2hi = mul_up(sh, sh)
    s3lo = mul_down(s2lo, sl)
    s3hi = mul_up(s2hi, sh)
    v2l, v2h = _isqr(vl, vh)
    gl = sub_down(s3lo, mul_up(188.0, v2h))
    gh = sub_up(s3hi, mul_down(188.0, v2l))
    return (al, ah, pl, ph, arl, arh, vl, vh,
            q1l, q1h, q2l, q2h, q3l, q3h,
            d12l, d12h, d45l, d45h, d32l, d32h,
            sl, sh, gl, gh)


def eval_svg(l1, l2, l3, l4, l5, h1, h2, h3, h4, h5):
    """Natural interval extension of surface S, volume V and G = S^3 - 188 V^2
    of the double-pyramid closed forms, over the given coordinate box.

    Returns (Slo, Shi, Vlo, Vhi, Glo, Ghi).
    """
    p = _parts(l1, l2, l3, l4, l5, h1, h2, h3, h4, h5)
    return p[20], p[21], p[6], p[7], p[22], p[23]


def _constraints(l1, l2, l3, l4, l5, h1, h2, h3, h4, h5, area_min):
    """Evaluate the five feasibility conditions.

    Returns (violated_index_or_0, certifying_lo, certifying_hi)."""
    # 1: x2 - x1 >= 0
    c1l = sub_down(l2, h1)
    c1h = sub_up(h2, l1)
    if c1h < 0.0:
        return 1, c1l, c1h
    # 2: x3 - x2 >= 0
    c2l = sub_down(l3, h2)
    c2h = sub_up(h3, l2)
    if c2h < 0.0:
        return 2, c2l, c2h
    # 3: A = x2*y1 - x1*y2 >= 0
    t0l, t0h = _imul(l2, h2, l4, h4)
    t1l, t1h = _imul(l1, h1, l5, h5)
    al = sub_down(t0l, t1h)
    ah = sub_up(t0h, t1l)
    if ah < 0.0:
        return 3, al, ah
    # 4: B = (x3-x1)*y2 - (x3-x2)*y1 >= 0
    u0l = sub_down(l3, h1)
    u0h = sub_up(h3, l1)
    u1l = sub_down(l3, h2)
    u1h = sub_up(h3, l2)
    t0l, t0h = _imul(u0l, u0h, l5, h5)
    t1l, t1h = _imul(u1l, u1h, l4, h4)
    bl = sub_down(t0l, t1h)
    bh = sub_up(t0h, t1l)
    if bh < 0.0:
        return 4, bl, bh
    # 5: area = A + x3*y2 >= area_min
    pl, ph = _imul(l3, h3, l5, h5)
    arl = add_down(al, pl)
    arh = add_up(ah, ph)
    if arh < area_min:
        return 5, arl, arh
    return 0, 0.0, 0.0


def _grad_s(p, l1, l2, l3, l4, l5, h1, h2, h3, h4, h5):
    """Interval gradient of S over the box, from the shared parts ``p``.

    Requires q1, q2, q3 bounded away from zero (caller checks).
    Returns ((dS/dx1)_lo, hi, ..., (dS/dy2)_lo, hi) -- 10 floats."""
    (al, ah, pl, ph, _, _, _, _,
     q1l, q1h, q2l, q2h, q3l, q3h,
     d12l, d12h, d45l, d45h, d32l, d32h,
     _, _, _, _) = p
    r1l = sqrt_down(q1l)
    r1h = sqrt_up(q1h)
    r2l = sqrt_down(q2l)
    r2h = sqrt_up(q2h)
    r3l = sqrt_down(q3l)
    r3h = sqrt_up(q3h)
    a2l, a2h = al + al, ah + ah  # 2A, exact
    p2l, p2h = pl + pl, ph + ph  # 2P, exact
    # q2 partials
    t0l, t0h = _imul(a2l, a2h, -h5, -l5)
    g2x1l = add_down(d12l + d12l, t0l)
    g2x1h = add_up(d12h + d12h, t0h)
    t0l, t0h = _imul(a2l, a2h, l4, h4)
    g2x2l = add_down(-(d12h + d12h), t0l)
    g2x2h = add_up(-(d12l + d12l), t0h)
    t0l, t0h = _imul(a2l, a2h, l2, h2)
    g2y1l = add_down(d45l + d45l, t0l)
    g2y1h = add_up(d45h + d45h, t0h)
    t0l, t0h = _imul(a2l, a2h, -h1, -l1)
    g2y2l = add_down(-(d45h + d45h), t0l)
    g2y2h = add_up(-(d45l + d45l), t0h)
    # q3 partials
    t0l, t0h = _imul(p2l, p2h, l5, h5)
    g3x3l = add_down(d32l + d32l, t0l)
    g3x3h = add_up(d32h + d32h, t0h)
    t0l, t0h = _imul(p2l, p2h, l3, h3)
    g3y2l = add_down(l5 + l5, t0l)
    g3y2h = add_up(h5 + h5, t0h)
    # dS/dt = sum_k (dqk/dt)/sqrt(qk)
    t0l, t0h = _idiv_pos(l1 + l1, h1 + h1, r1l, r1h)
    t1l, t1h = _idiv_pos(g2x1l, g2x1h, r2l, r2h)
    dsx1l, dsx1h = add_down(t0l, t1l), add_up(t0h, t1h)
    t0l, t0h = _idiv_pos(g2x2l, g2x2h, r2l, r2h)
    t1l, t1h = _idiv_pos(-(d32h + d32h), -(d32l + d32l), r3l, r3h)
    dsx2l, dsx2h = add_down(t0l, t1l), add_up(t0h, t1h)
    dsx3l, dsx3h = _idiv_pos(g3x3l, g3x3h, r3l, r3h)
    t0l, t0h = _idiv_pos(l4 + l4, h4 + h4, r1l, r1h)
    t1l, t1h = _idiv_pos(g2y1l, g2y1h, r2l, r2h)
    dsy1l, dsy1h = add_down(t0l, t1l), add_up(t0h, t1h)
    t0l, t0h = _idiv_pos(g2y2l, g2y2h, r2l, r2h)
    t1l, t1h = _idiv_pos(g3y2l, g3y2h, r3l, r3h)
    dsy2l, dsy2h = add_down(t0l, t1l), add_up(t0h, t1h)
    return (dsx1l, dsx1h, dsx2l, dsx2h, dsx3l, dsx3h,
            dsy1l, dsy1h, dsy2l, dsy2h)


# Hessian entry order: (0,0),(0,1),(0,2),(0,3),(0,4),(1,1),(1,2),(1,3),(1,4),
# (2,2),(2,3),(2,4),(3,3),(3,4),(4,4) over variables (x1,x2,x3,y1,y2).
_HESS_IDX = ((0, 0), (0, 1), (0, 2), (0, 3), (0, 4),
             (1, 1), (1, 2), (1, 3), (1, 4),
             (2, 2), (2, 3), (2, 4),
             (3, 3), (3, 4), (4, 4))

# constant Hessian of the base area A + P: nonzero at (x1,y2): -1,
# (x2,y1): +1, (x3,y2): +1
_HESS_AREA = (0.0, 0.0, 0.0, 0.0, -1.0,
              0.0, 0.0, 1.0, 0.0,
              0.0, 0.0, 1.0,
              0.0, 0.0, 0.0)


def _hess_g_maxabs(p, gs, l1, l2, l3, l4, l5, h1, h2, h3, h4, h5, mu):
    """Componentwise max-abs bound of the Hessian of
    F = G - mu*(area - area_min) over the box.

    Uses H_G = 3 S^2 H_S + 6 S (dS dS^T) - 376 ((2/3) V H_area
    + (4/9) darea darea^T) and H_F = H_G - mu H_area.  Natural extensions
    throughout; the result multiplies squared widths, so looseness here is
    third-order in the box size.  Returns 15 floats in _HESS_IDX order.

    Structural zeros are carried as exact [0, 0] intervals so the loop shape
    stays fixed (and portable to the compiled twin)."""
    (al, ah, pl, ph, _, _, vl, vh,
     q1l, q1h, q2l, q2h, q3l, q3h,
     d12l, d12h, d45l, d45h, d32l, d32h,
     sl, sh, _, _) = p

    a2l, a2h = al + al, ah + ah
    p2l, p2h = pl + pl, ph + ph

    # gradients of q1, q2, q3 per variable: flat (lo, hi) pairs, 10 floats each
    gq1 = [l1 + l1, h1 + h1, 0.0, 0.0, 0.0, 0.0, l4 + l4, h4 + h4, 0.0, 0.0]
    gq2 = [0.0] * 10
    t0l, t0h = _imul(a2l, a2h, -h5, -l5)
    gq2[0] = add_down(d12l + d12l, t0l)
    gq2[1] = add_up(d12h + d12h, t0h)
    t0l, t0h = _imul(a2l, a2h, l4, h4)
    gq2[2] = add_down(-(d12h + d12h), t0l)
    gq2[3] = add_up(-(d12l + d12l), t0h)
    t0l, t0h = _imul(a2l, a2h, l2, h2)
    gq2[6] = add_down(d45l + d45l, t0l)
    gq2[7] = add_up(d45h + d45h, t0h)
    t0l, t0h = _imul(a2l, a2h, -h1, -l1)
    gq2[8] = add_down(-(d45h + d45h), t0l)
    gq2[9] = add_up(-(d45l + d45l), t0h)
    gq3 = [0.0] * 10
    gq3[2] = -(d32h + d32h)
    gq3[3] = -(d32l + d32l)
    t0l, t0h = _imul(p2l, p2h, l5, h5)
    gq3[4] = add_down(d32l + d32l, t0l)
    gq3[5] = add_up(d32h + d32h, t0h)
    t0l, t0h = _imul(p2l, p2h, l3, h3)
    gq3[8] = add_down(l5 + l5, t0l)
    gq3[9] = add_up(h5 + h5, t0h)

    # Hessians of q1, q2, q3 as flat (lo, hi) per _HESS_IDX entry, 30 floats.
    # q1 = x1^2 + y1^2: constant.
    hq1 = [0.0] * 30
    hq1[0] = hq1[1] = 2.0    # (x1,x1)
    hq1[24] = hq1[25] = 2.0  # (y1,y1)
    # q2 = d12^2 + d45^2 + A^2 with H(A^2) = 2 dA dA^T + 2A H_A,
    # dA = (-y2, y1, 0, x2, -x1), H_A: (x2,y1) = 1, (x1,y2) = -1.
    da = (-h5, -l5, l4, h4, 0.0, 0.0, l2, h2, -h1, -l1)
    hq2 = [0.0] * 30
    hq2[0] = hq2[1] = 2.0     # (x1,x1)
    hq2[2] = hq2[3] = -2.0    # (x1,x2)
    hq2[10] = hq2[11] = 2.0   # (x2,x2)
    hq2[24] = hq2[25] = 2.0   # (y1,y1)
    hq2[26] = hq2[27] = -2.0  # (y1,y2)
    hq2[28] = hq2[29] = 2.0   # (y2,y2)
    for n in range(15):
        i, j = _HESS_IDX[n]
        t0l, t0h = _imul(da[2 * i], da[2 * i + 1], da[2 * j], da[2 * j + 1])
        tl, th = t0l + t0l, t0h + t0h
        if n == 7:   # (x2,y1): + 2A
            tl, th = _iadd(tl, th, a2l, a2h)
        elif n == 4:  # (x1,y2): - 2A
            tl, th = _isub(tl, th, a2l, a2h)
        hq2[2 * n], hq2[2 * n + 1] = _iadd(hq2[2 * n], hq2[2 * n + 1], tl, th)
    # q3 = y2^2 + d32^2 + P^2 with H(P^2) = 2 dP dP^T + 2P H_P,
    # dP = (0, 0, y2, 0, x3), H_P: (x3,y2) = 1.
    dp = (0.0, 0.0, 0.0, 0.0, l5, h5, 0.0, 0.0, l3, h3)
    hq3 = [0.0] * 30
    hq3[10] = hq3[11] = 2.0   # (x2,x2)
    hq3[12] = hq3[13] = -2.0  # (x2,x3)
    hq3[18] = hq3[19] = 2.0   # (x3,x3)
    hq3[28] = hq3[29] = 2.0   # (y2,y2)
    for n in range(15):
        i, j = _HESS_IDX[n]
        t0l, t0h = _imul(dp[2 * i], dp[2 * i + 1], dp[2 * j], dp[2 * j + 1])
        tl, th = t0l + t0l, t0h + t0h
        if n == 11:  # (x3,y2): + 2P
            tl, th = _iadd(tl, th, p2l, p2h)
        hq3[2 * n], hq3[2 * n + 1] = _iadd(hq3[2 * n], hq3[2 * n + 1], tl, th)

    # per-q factors: 1/sqrt(q) and 1/(2 q^(3/2))
    r1l, r1h = sqrt_down(q1l), sqrt_up(q1h)
    inv1l, inv1h = _idiv_pos(1.0, 1.0, r1l, r1h)
    t0l, t0h = _imul(q1l, q1h, r1l, r1h)
    j1l, j1h = _idiv_pos(0.5, 0.5, t0l, t0h)
    r2l, r2h = sqrt_down(q2l), sqrt_up(q2h)
    inv2l, inv2h = _idiv_pos(1.0, 1.0, r2l, r2h)
    t0l, t0h = _imul(q2l, q2h, r2l, r2h)
    j2l, j2h = _idiv_pos(0.5, 0.5, t0l, t0h)
    r3l, r3h = sqrt_down(q3l), sqrt_up(q3h)
    inv3l, inv3h = _idiv_pos(1.0, 1.0, r3l, r3h)
    t0l, t0h = _imul(q3l, q3h, r3l, r3h)
    j3l, j3h = _idiv_pos(0.5, 0.5, t0l, t0h)

    s2lo = mul_down(sl, sl)
    s2hi = mul_up(sh, sh)
    s23l, s23h = _imul(3.0, 3.0, s2lo, s2hi)      # 3 S^2
    s6l, s6h = _imul(6.0, 6.0, sl, sh)            # 6 S
    t0l, t0h = _imul(C23_LO, C23_HI, vl, vh)
    cal, cah = _imul(376.0, 376.0, t0l, t0h)      # 376*(2/3)*V
    t0l, t0h = _imul(C23_LO, C23_HI, C23_LO, C23_HI)
    cbl, cbh = _imul(376.0, 376.0, t0l, t0h)      # 376*(4/9)
    darea = (-h5, -l5, l4, h4, l5, h5, l2, h2,
             sub_down(l3, h1), sub_up(h3, l1))

    out = [0.0] * 15
    for n in range(15):
        i, j = _HESS_IDX[n]
        # H_S[i,j] = sum_k hqk[i,j]/sqrt(qk) - gqk_i gqk_j/(2 qk^(3/2))
        t0l, t0h = _imul(hq1[2 * n], hq1[2 * n + 1], inv1l, inv1h)
        hsl, hsh = t0l, t0h
        t0l, t0h = _imul(gq1[2 * i], gq1[2 * i + 1], gq1[2 * j], gq1[2 * j + 1])
        t0l, t0h = _imul(t0l, t0h, j1l, j1h)
        hsl, hsh = _isub(hsl, hsh, t0l, t0h)
        t0l, t0h = _imul(hq2[2 * n], hq2[2 * n + 1], inv2l, inv2h)
        hsl, hsh = _iadd(hsl, hsh, t0l, t0h)
        t0l, t0h = _imul(gq2[2 * i], gq2[2 * i + 1], gq2[2 * j], gq2[2 * j + 1])
        t0l, t0h = _imul(t0l, t0h, j2l, j2h)
        hsl, hsh = _isub(hsl, hsh, t0l, t0h)
        t0l, t0h = _imul(hq3[2 * n], hq3[2 * n + 1], inv3l, inv3h)
        hsl, hsh = _iadd(hsl, hsh, t0l, t0h)
        t0l, t0h = _imul(gq3[2 * i], gq3[2 * i + 1], gq3[2 * j], gq3[2 * j + 1])
        t0l, t0h = _imul(t0l, t0h, j3l, j3h)
        hsl, hsh = _isub(hsl, hsh, t0l, t0h)
        # H_F[i,j] = 3S^2 H_S + 6S dS_i dS_j
        #            - (376*4/9) darea_i darea_j - (376*(2/3)V + mu) H_area
        t0l, t0h = _imul(s23l, s23h, hsl, hsh)
        t1l, t1h = _imul(gs[2 * i], gs[2 * i + 1], gs[2 * j], gs[2 * j + 1])
        t1l, t1h = _imul(s6l, s6h, t1l, t1h)
        hl, hh = _iadd(t0l, t0h, t1l, t1h)
        t1l, t1h = _imul(darea[2 * i], darea[2 * i + 1], darea[2 * j], darea[2 * j + 1])
        t1l, t1h = _imul(cbl, cbh, t1l, t1h)
        hl, hh = _isub(hl, hh, t1l, t1h)
        ha = _HESS_AREA[n]
        if ha != 0.0:
            t1l, t1h = _iadd(cal, cah, mu, mu)
            t1l, t1h = _imul(t1l, t1h, ha, ha)
            hl, hh = _isub(hl, hh, t1l, t1h)
        out[n] = max(-hl, hh)
    return out


def _point_grad_f(c1, c2, c3, c4, c5, mu):
    """Directed point enclosure of the gradient of F at the box center.

    Returns 10 floats (lo, hi per variable) or None at a sqrt singularity."""
    p = _parts(c1, c2, c3, c4, c5, c1, c2, c3, c4, c5)
    if p[8] <= 0.0 or p[10] <= 0.0 or p[12] <= 0.0:
        return None
    gs = _grad_s(p, c1, c2, c3, c4, c5, c1, c2, c3, c4, c5)
    sl, sh = p[20], p[21]
    vl, vh = p[6], p[7]
    s2lo = mul_down(sl, sl)
    s2hi = mul_up(sh, sh)
    s23l, s23h = _imul(3.0, 3.0, s2lo, s2hi)
    t0l, t0h = _imul(C23_LO, C23_HI, vl, vh)
    cal, cah = _imul(376.0, 376.0, t0l, t0h)
    cfl = add_down(cal, mu)
    cfh = add_up(cah, mu)
    darea = ((-c5, -c5), (c4, c4), (c5, c5), (c2, c2),
             (sub_down(c3, c1), sub_up(c3, c1)))
    out = []
    for i in range(5):
        t0l, t0h = _imul(s23l, s23h, gs[2 * i], gs[2 * i + 1])
        t1l, t1h = _imul(cfl, cfh, darea[i][0], darea[i][1])
        dfl = sub_down(t0l, t1h)
        dfh = sub_up(t0h, t1l)
        out.append(dfl)
        out.append(dfh)
    return tuple(out)


def _point_f(c1, c2, c3, c4, c5, mu, area_min):
    """Directed point evaluation of F = G - mu*(area - area_min); returns lo."""
    p = _parts(c1, c2, c3, c4, c5, c1, c2, c3, c4, c5)
    el = sub_down(p[4], area_min)
    eh = sub_up(p[5], area_min)
    ql, qh = _imul(mu, mu, el, eh)
    return sub_down(p[22], qh)


def _curvature_lower_bound(p, l1, l2, l3, l4, l5, h1, h2, h3, h4, h5, mu, area_min):
    """Penalized Taylor lower bound for G on the feasible part of the box.

    Returns the bound or None when unusable (sqrt singularity on the box)."""
    if p[8] <= 0.0 or p[10] <= 0.0 or p[12] <= 0.0:
        return None
    c1 = 0.5 * (l1 + h1)
    c2 = 0.5 * (l2 + h2)
    c3 = 0.5 * (l3 + h3)
    c4 = 0.5 * (l4 + h4)
    c5 = 0.5 * (l5 + h5)
    gfc = _point_grad_f(c1, c2, c3, c4, c5, mu)
    if gfc is None:
        return None
    total = _point_f(c1, c2, c3, c4, c5, mu, area_min)
    # linear term: exact point gradient times centered offsets
    for i, (lo, hi, c) in enumerate(((l1, h1, c1), (l2, h2, c2), (l3, h3, c3),
                                     (l4, h4, c4), (l5, h5, c5))):
        rl = sub_down(lo, c)
        rh = sub_up(hi, c)
        tl, _ = _imul(gfc[2 * i], gfc[2 * i + 1], rl, rh)
        total = add_down(total, tl)
    # remainder: 1/2 |Delta^T H Delta| <= 1/2 sum_ij |H_ij| (w_i/2)(w_j/2)
    gs = _grad_s(p, l1, l2, l3, l4, l5, h1, h2, h3, h4, h5)
    hmax = _hess_g_maxabs(p, gs, l1, l2, l3, l4, l5, h1, h2, h3, h4, h5, mu)
    hw = (0.5 * sub_up(h1, l1), 0.5 * sub_up(h2, l2), 0.5 * sub_up(h3, l3),
          0.5 * sub_up(h4, l4), 0.5 * sub_up(h5, l5))
    rem = 0.0
    for n, (i, j) in enumerate(_HESS_IDX):
        t = mul_up(mul_up(hmax[n], hw[i]), hw[j])
        if i != j:
            t = t + t  # exact doubling for the symmetric pair
        rem = add_up(rem, t)
    return sub_down(total, mul_up(0.5, rem))


def classify(box, area_min, threshold, mu, use_curvature):
    """Classify one box. Returns (status, info, a, b, split_dim).

    split_dim is meaningful only for STATUS_UNRESOLVED: widest side, ties to
    the lowest index."""
    l1, l2, l3, l4, l5, h1, h2, h3, h4, h5 = box
    cidx, clo, chi = _constraints(l1, l2, l3, l4, l5, h1, h2, h3, h4, h5, area_min)
    if cidx:
        return STATUS_INFEASIBLE, float(cidx), clo, chi, -1
    p = _parts(l1, l2, l3, l4, l5, h1, h2, h3, h4, h5)
    gl = p[22]
    if gl > threshold:
        return STATUS_VERIFIED, float(BOUND_PLAIN), gl, gl, -1
    best = gl
    kind = BOUND_PLAIN
    if use_curvature and max(h1 - l1, h2 - l2, h3 - l3, h4 - l4, h5 - l5) <= 0.5:
        # boxes fully on the feasible side of the area constraint need no
        # penalty; straddling boxes get the exact-penalty multiplier
        mu_eff = 0.0 if p[4] >= area_min else mu
        cb = _curvature_lower_bound(p, l1, l2, l3, l4, l5, h1, h2, h3, h4, h5,
                                    mu_eff, area_min)
        if cb is not None and cb > best:
            best = cb
            kind = BOUND_CURVATURE
        if best > threshold:
            return STATUS_VERIFIED, float(kind), best, gl, -1
    w = h1 - l1
    dim = 0
    if h2 - l2 > w:
        w = h2 - l2
        dim = 1
    if h3 - l3 > w:
        w = h3 - l3
        dim = 2
    if h4 - l4 > w:
        w = h4 - l4
        dim = 3
    if h5 - l5 > w:
        w = h5 - l5
        dim = 4
    return STATUS_UNRESOLVED, 0.0, gl, best, dim


class BnbCore:
    """Depth-first subdivision worker over one root box.

    ``run_chunk`` fills a caller-provided (n, 14) float64 buffer with leaf
    records until the buffer is full, the box budget is exhausted, or the
    stack empties.  Unsplittable boxes (depth limit) are emitted with
    status 2 and processing continues.
    """

    def __init__(self, lo5, hi5, depth, area_min, threshold, mu, use_curvature, max_depth):
        self.area_min = float(area_min)
        self.threshold = float(threshold)
        self.mu = float(mu)
        self.use_curvature = bool(use_curvature)
        self.max_depth = int(max_depth)
        box = (float(lo5[0]), float(lo5[1]), float(lo5[2]), float(lo5[3]), float(lo5[4]),
               float(hi5[0]), float(hi5[1]), float(hi5[2]), float(hi5[3]), float(hi5[4]))
        self.stack = [(box, int(depth))]
        self.processed = 0
        self.max_depth_seen = int(depth)
        self.unresolved = 0

    @property
    def pending(self):
        return len(self.stack)

    def run_chunk(self, out, max_boxes):
        """Process up to ``max_boxes`` boxes, writing records into ``out``.

        Returns (n_records, n_processed, done)."""
        cap = out.shape[0]
        n = 0
        nproc = 0
        stack = self.stack
        while stack and nproc < max_boxes and n < cap:
            box, depth = stack.pop()
            nproc += 1
            if depth > self.max_depth_seen:
                self.max_depth_seen = depth
            status, info, a, b, dim = classify(
                box, self.area_min, self.threshold, self.mu, self.use_curvature)
            if status == STATUS_UNRESOLVED and depth < self.max_depth:
                l = box[dim]
                h = box[5 + dim]
                m = 0.5 * (l + h)
                if m > l and m < h:
                    hi_child = list(box)
                    hi_child[dim] = m
                    lo_child = list(box)
                    lo_child[5 + dim] = m
                    # lower half processed first: push it last
                    stack.append((tuple(hi_child), depth + 1))
                    stack.append((tuple(lo_child), depth + 1))
                    continue
                # box no longer splittable at float resolution
            if status == STATUS_UNRESOLVED:
                self.unresolved += 1
                info = float(depth)
            out[n, 0:5] = box[0:5]
            out[n, 5:10] = box[5:10]
            out[n, 10] = status
            out[n, 11] = info
            out[n, 12] = a
            out[n, 13] = b
            n += 1
        self.processed += nproc
        return n, nproc, not stack

    def drain(self, out):
        """Emit remaining stack entries as unresolved records (budget stop)."""
        cap = out.shape[0]
        n = 0
        stack = self.stack
        while stack and n < cap:
            box, depth = stack.pop()
            _, _, _, _, gl, _ = eval_svg(*box)
            self.unresolved += 1
            out[n, 0:5] = box[0:5]
            out[n, 5:10] = box[5:10]
            out[n, 10] = STATUS_UNRESOLVED
            out[n, 11] = float(depth)
            out[n, 12] = gl
            out[n, 13] = gl
            n += 1
        return n


def classify_batch(boxes, out, area_min, threshold, mu, use_curvature):
    """Classify each row of ``boxes`` (n, 10) into ``out`` (n, 4):
    columns status, info, a, b.  No splitting."""
    n = boxes.shape[0]
    for i in range(n):
        status, info, a, b, _ = classify(
            tuple(float(v) for v in boxes[i]), area_min, threshold, mu, use_curvature)
        out[i, 0] = status
        out[i, 1] = info
        out[i, 2] = a
        out[i, 3] = b
    return n
