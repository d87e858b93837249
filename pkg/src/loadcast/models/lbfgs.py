"""Limited-memory BFGS with a strong Wolfe line search.

Full-batch, deterministic, dense-vector variant: the inverse Hessian is
approximated with the standard two-loop recursion over the last
``memory`` curvature pairs, and steps satisfy the strong Wolfe
conditions (sufficient decrease plus curvature) via bracket-and-zoom.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

_C1 = 1e-4
_C2 = 0.9


@dataclass
class LbfgsResult:
    x: np.ndarray
    fun: float
    grad_norm: float
    iterations: int
    converged: bool
    line_search_failed: bool = False
    history: list = field(default_factory=list)


def _zoom(fg, x, d, f0, g0d, a_lo, a_hi, f_lo, max_iter=30):
    """Nocedal-Wright zoom: shrink [a_lo, a_hi] until strong Wolfe holds."""
    for _ in range(max_iter):
        a = 0.5 * (a_lo + a_hi)
        f, g = fg(x + a * d)
        gd = float(g @ d)
        if f > f0 + _C1 * a * g0d or f >= f_lo:
            a_hi = a
        else:
            if abs(gd) <= -_C2 * g0d:
                return a, f, g
            if gd * (a_hi - a_lo) >= 0:
                a_hi = a_lo
            a_lo, f_lo = a, f
    return None


def _line_search(fg, x, f0, g0, d, max_iter=25):
    """Strong Wolfe search along d; returns (alpha, f, g) or None."""
    g0d = float(g0 @ d)
    if g0d >= 0:
        return None
    a_prev, f_prev = 0.0, f0
    a = 1.0
    for i in range(max_iter):
        f, g = fg(x + a * d)
        gd = float(g @ d)
        if f > f0 + _C1 * a * g0d or (i > 0 and f >= f_prev):
            return _zoom(fg, x, d, f0, g0d, a_prev, a, f_prev)
        if abs(gd) <= -_C2 * g0d:
            return a, f, g
        if gd >= 0:
            return _zoom(fg, x, d, f0, g0d, a, a_prev, f)
        a_prev, f_prev = a, f
        a *= 2.0
    return None


def minimize_lbfgs(
    fun_grad,
    x0: np.ndarray,
    max_iters: int = 200,
    tolerance: float = 1e-6,
    memory: int = 10,
) -> LbfgsResult:
    """Minimize ``fun_grad`` (returning value and gradient) from ``x0``.

    Stops when the max-norm of the gradient drops below ``tolerance`` or
    after ``max_iters`` iterations. A failed line search triggers one
    steepest-descent restart; if that also fails the best iterate seen
    so far is returned with ``line_search_failed`` set.
    """
    x = np.asarray(x0, dtype=float).copy()
    f, g = fun_grad(x)
    best_x, best_f = x.copy(), f
    s_hist: list[np.ndarray] = []
    y_hist: list[np.ndarray] = []
    rho_hist: list[float] = []
    failed = False
    it = 0
    while it < max_iters:
        gnorm = float(np.abs(g).max())
        if gnorm < tolerance:
            return LbfgsResult(best_x, best_f, gnorm, it, converged=True)
        d = _two_loop(g, s_hist, y_hist, rho_hist)
        res = _line_search(fun_grad, x, f, g, d)
        if res is None:
            # restart from steepest descent once
            s_hist.clear(); y_hist.clear(); rho_hist.clear()
            d = -g / max(float(np.abs(g).max()), 1.0)
            res = _line_search(fun_grad, x, f, g, d)
            if res is None:
                failed = True
                break
        alpha, f_new, g_new = res
        s = alpha * d
        yv = g_new - g
        sy = float(s @ yv)
        if sy > 1e-10:
            s_hist.append(s)
            y_hist.append(yv)
            rho_hist.append(1.0 / sy)
            if len(s_hist) > memory:
                s_hist.pop(0); y_hist.pop(0); rho_hist.pop(0)
        x = x + s
        f, g = f_new, g_new
        if f < best_f:
            best_f, best_x = f, x.copy()
        it += 1
    gnorm = float(np.abs(g).max())
    return LbfgsResult(
        best_x, best_f, gnorm, it, converged=False, line_search_failed=failed
    )


def _two_loop(g, s_hist, y_hist, rho_hist) -> np.ndarray:
    q = g.copy()
    alphas = []
    for s, y, rho in zip(reversed(s_hist), reversed(y_hist), reversed(rho_hist)):
        a = rho * float(s @ q)
        alphas.append(a)
        q -= a * y
    if s_hist:
        gamma = float(s_hist[-1] @ y_hist[-1]) / float(y_hist[-1] @ y_hist[-1])
        q *= gamma
    for (s, y, rho), a in zip(zip(s_hist, y_hist, rho_hist), reversed(alphas)):
        b = rho * float(y @ q)
        q += (a - b) * s
    return -q
