"""Current symmetric polynomials and the identities relating them.

All objects are built from a :class:`~braidkit.yangian.contexts.Context`.
The integer ``offset`` shifts the base spectral point: for a Hecke symmetry
``offset = p`` means ``q^(-2p) u``, for an involutive one ``u - p``.  With
that convention the Hecke and involutive formulas coincide (``k_q`` becomes
``k`` and ``q`` becomes 1).
"""

from __future__ import annotations

from functools import reduce

from ..scalars import QRat
from ..tensors import LinOp, MatOverAlg
from .contexts import Context
from .series import MatSeries, PolySeries


def _prod(xs):
    return reduce(lambda a, b: a @ b, xs)


def _skew_product(ctx: Context, k: int, offset: int) -> MatSeries:
    """``P^(k) L_1bar(x_o) L_2bar(x_{o+1}) ... L_kbar(x_{o+k-1})``."""
    P = ctx.sym.skew_symmetrizer(k)
    return P @ _prod([ctx.Lbar(offset + i - 1, i, k) for i in range(1, k + 1)])


def elementary(ctx: Context, k: int, offset: int = 0) -> PolySeries:
    if k == 0:
        return PolySeries.one(ctx.order)
    return _skew_product(ctx, k, offset).r_trace(range(1, k + 1), ctx.sym.C)


def wedge_power(ctx: Context, k: int, offset: int = 0) -> MatSeries:
    if k == 1:
        return ctx.L(offset)
    return _skew_product(ctx, k, offset).r_trace(range(2, k + 1), ctx.sym.C)


def braid_string_down(ctx: Context, k: int) -> LinOp:
    out = LinOp.identity(ctx.sym.N, k)
    for j in range(k - 1, 0, -1):
        out = out @ ctx.sym.R_at(j, k)
    return out


def matrix_power(ctx: Context, k: int, offset: int = 0) -> MatSeries:
    """``Tr_R(2..k)(L_1bar(x_{o+k-1}) ... L_kbar(x_o) R_{k-1}...R_1)``; ``L^[0] = I``."""
    if k == 0:
        return ctx.identity(1)
    if k == 1:
        return ctx.L(offset)
    prod = _prod([ctx.Lbar(offset + k - i, i, k) for i in range(1, k + 1)])
    return (prod @ braid_string_down(ctx, k)).r_trace(range(2, k + 1), ctx.sym.C)


def matrix_power_product(ctx: Context, k: int, offset: int = 0) -> MatSeries:
    """``L(x_{o+k-1}) ... L(x_o)``."""
    if k == 0:
        return ctx.identity(1)
    return _prod([ctx.L(offset + k - i) for i in range(1, k + 1)])


def power_sum(ctx: Context, k: int, offset: int = 0) -> PolySeries:
    return matrix_power(ctx, k, offset).r_trace([1], ctx.sym.C)


# -- residuals: each must vanish modulo the ideal ------------------------------

def chn_residual(ctx: Context, k: int) -> MatSeries:
    """``(-1)^(k+1) k_q L^wedge k - sum_p (-q)^p L^[k-p](x_p) e_p``."""
    sym = ctx.sym
    lhs = wedge_power(ctx, k).scale(QRat((-1) ** (k + 1)) * sym.qn(k))
    rhs = None
    for p in range(k):
        t = matrix_power(ctx, k - p, p).times(elementary(ctx, p)).scale((-sym.q) ** p)
        rhs = t if rhs is None else rhs + t
    return lhs - rhs


def newton_residual(ctx: Context, k: int) -> PolySeries:
    """``k_q e_k + sum_{p=1..k} (-1)^p q^(k-p) p_p(x_{k-p}) e_{k-p}``."""
    sym = ctx.sym
    out = elementary(ctx, k).scale(sym.qn(k))
    for p in range(1, k + 1):
        t = (power_sum(ctx, p, k - p) * elementary(ctx, k - p)).scale(QRat((-1) ** p) * sym.q ** (k - p))
        out = out + t
    return out


def ch_residual(ctx: Context) -> MatSeries:
    """``sum_{p=0..m} (-q)^p L^[m-p](x_p) e_p``."""
    sym = ctx.sym
    m = sym.m
    out = None
    for p in range(m + 1):
        t = matrix_power(ctx, m - p, p).times(elementary(ctx, p)).scale((-sym.q) ** p)
        out = t if out is None else out + t
    return out


def mult_pow_residual(ctx: Context, k: int) -> MatSeries:
    return matrix_power(ctx, k) - matrix_power_product(ctx, k)


def wedge_trace_residual(ctx: Context, k: int) -> PolySeries:
    """``e_k - Tr_R L^wedge k``."""
    return elementary(ctx, k) - wedge_power(ctx, k).r_trace([1], ctx.sym.C)


def pm_det_residual(ctx: Context) -> MatSeries:
    """``P^(m) L_1bar(x_0)...L_mbar(x_{m-1}) - q^(m^2) e_m P^(m)``."""
    sym = ctx.sym
    m = sym.m
    P = sym.skew_symmetrizer(m)
    rhs = MatSeries.const(P.scale(sym.q ** (m * m)), ctx.order).times(elementary(ctx, m))
    return _skew_product(ctx, m, 0) - rhs


def pl_str_residual(ctx: Context) -> MatSeries:
    """``P^(m) L_1bar(x_0)...L_mbar(x_{m-1}) - L_1bar(x_{m-1})...L_mbar(x_0) P^(m)``."""
    m = ctx.sym.m
    P = ctx.sym.skew_symmetrizer(m)
    right = _prod([ctx.Lbar(m - i, i, m) for i in range(1, m + 1)]) @ P
    return _skew_product(ctx, m, 0) - right


def rtt_ch_with_N_residual(ctx: Context, N_op: LinOp) -> MatSeries:
    """``m_q T^wedge m - q^m e_m Z`` (plain copies of ``T``) for a single-leg ``Z``."""
    sym = ctx.sym
    m = sym.m
    lhs = wedge_power(ctx, m).scale(sym.qn(m))
    rhs = MatSeries.const(N_op.scale(sym.q ** m), ctx.order).times(elementary(ctx, m))
    return lhs - rhs
