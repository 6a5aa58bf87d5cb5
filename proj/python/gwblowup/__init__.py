"""Exact genus-zero invariants of P^n and its point blow-ups."""

import json
from fractions import Fraction

from ._gwblowup import Oracle as _Oracle
from ._gwblowup import ParseError, c1, index_minus, index_plus, index_sum, run_cli

__all__ = ["Oracle", "ParseError", "c1", "index_minus", "index_plus", "index_sum", "run_cli"]


class Oracle:
    def __init__(self):
        self._impl = _Oracle()

    def kontsevich(self, d):
        return Fraction(self._impl.kontsevich(d))

    def blowup(self, a, b):
        return Fraction(self._impl.blowup(a, b))

    def evaluate(self, manifold, cls, insertions="", points=0, genus=0):
        if not isinstance(insertions, str):
            insertions = ",".join(insertions)
        result = self._impl.evaluate(manifold, cls, insertions, points, genus)
        if result["value"] is not None:
            result["value"] = Fraction(result["value"])
        return result

    def verify(self, rule, lo=1, hi=6):
        return [json.loads(row) for row in self._impl.verify(rule, lo, hi)]

    @property
    def cache_size(self):
        return self._impl.cache_size()
