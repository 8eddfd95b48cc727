"""Exact identities in Q(sqrt D) for the lambda and s of every prototype."""

from prymcusps.checks.base import BaseCheck, CheckOutcome, tally
from prymcusps.models.state import SweepState
from prymcusps.services.quadfield import lambda_of, order_generator
from prymcusps.services.stablecurve import s_param


class LambdaIdentityCheck(BaseCheck):
    """lambda^2 = e lambda + 2wh; for odd D also T = lambda - (e-1)/2 and T lambda = 2wh + lambda (e+1)/2."""

    name = "lambda_identities"

    def execute(self, state: SweepState) -> CheckOutcome:
        D = state["discriminant"]
        T = order_generator(D)

        def holds(A) -> bool:
            lam = lambda_of(A.e, A.D)
            wh = A.w * A.h
            if lam * lam != A.e * lam + 2 * wh:
                return False
            if D % 2 == 0:
                return True
            half_up = (A.e + 1) // 2
            half_down = (A.e - 1) // 2
            return T == lam - half_down and T * lam == 2 * wh + lam * half_up

        return tally(state["algebraic"], holds)


class ConjugationCheck(BaseCheck):
    """conj is an involution and sign(x) sign(conj x) = sign(norm x) for lambda and s."""

    name = "conjugation_norm"

    def execute(self, state: SweepState) -> CheckOutcome:
        def holds(A) -> bool:
            for x in (lambda_of(A.e, A.D), s_param(A)):
                product = x * x.conj()
                if x.conj().conj() != x or not product.is_rational:
                    return False
                norm_sign = (product.a > 0) - (product.a < 0)
                if x.sign() * x.conj().sign() != norm_sign or (-x).sign() != -x.sign():
                    return False
            return True

        return tally(state["algebraic"], holds)
