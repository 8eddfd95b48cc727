"""Formatting utilities for exact and decimal quantities."""

from typing import Optional

from mpmath.ctx_mp import MPContext

from prymcusps.services.quadfield import QuadElem


def format_sign(eps: int) -> str:
    """
    Format a sign as "+1" or "-1".

    Args:
        eps: +1 or -1

    Returns:
        Signed string
    """
    return f"{eps:+d}"


def format_exact(x: QuadElem) -> str:
    """Exact form "a + b*sqrt(D)"; inverse of ``QuadElem.parse``."""
    return str(x)


def format_mpf(value, digits: int, ctx: Optional[MPContext] = None) -> str:
    """
    Format an mpmath real number in fixed point.

    Args:
        value: mpmath mpf
        digits: Digits after the decimal point (at least; more for |value| < 1)
        ctx: Context the value belongs to (fresh one if omitted)

    Returns:
        Fixed-point decimal string
    """
    ctx = ctx or MPContext()
    if not value:
        return "0." + "0" * digits
    magnitude = int(ctx.floor(ctx.log10(abs(value)))) + 1 if abs(value) >= 1 else 0
    # nstr counts significant digits
    return ctx.nstr(
        value,
        digits + magnitude,
        min_fixed=-10**9,
        max_fixed=10**9,
        strip_zeros=False,
    )


def format_decimal(x: QuadElem, digits: int = 15) -> str:
    """
    Format an element of Q(sqrt D) as a decimal string.

    Args:
        x: Element to format
        digits: Digits after the decimal point

    Returns:
        Fixed-point decimal string
    """
    ctx = MPContext()
    ctx.dps = digits + 10 + len(str(abs(int(float(x)))))
    return format_mpf(x.evaluate(ctx), digits, ctx)
