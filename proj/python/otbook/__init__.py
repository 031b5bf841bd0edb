"""Python bindings for the otbook core.

Rational numbers are returned as ``fractions.Fraction``; structured results
(diagrams, certificates, reports) are plain dicts and lists.
"""

import json
import re
from fractions import Fraction

from . import _core
from ._core import Error, IllegalMove, InvariantViolation

__all__ = [
    "Error", "IllegalMove", "InvariantViolation",
    "phi_word", "family_lens", "neg_cf_expand", "cf_evaluate", "chain_to_lens", "lens_equal",
    "presentation_for", "reduce_family_diagram", "family_script", "replay",
    "d3_family", "tight_census", "overtwisted_verdict",
    "prove_right_veering", "check_certificate", "arikan_tight", "run_family",
]

_RATIONAL = re.compile(r"-?\d+(/\d+)?")


def _frac(s):
    return Fraction(s)


def _load(text):
    return json.loads(text)


def _fractions(obj, keys):
    # Converts the named rational-string fields in place, recursively.
    if isinstance(obj, dict):
        for k, v in obj.items():
            if k in keys and isinstance(v, str) and _RATIONAL.fullmatch(v):
                obj[k] = Fraction(v)
            elif k in keys and isinstance(v, list):
                obj[k] = [Fraction(x) if isinstance(x, str) and _RATIONAL.fullmatch(x) else _fractions(x, keys) for x in v]
            else:
                _fractions(v, keys)
    elif isinstance(obj, list):
        for x in obj:
            _fractions(x, keys)
    return obj


_D3_KEYS = {"d3", "c_squared", "solution", "census_d3", "d3_values"}


def _word_json(word):
    return json.dumps([[c, int(e)] for c, e in word])


def phi_word(h, k):
    """Twist word of the monodromy as a list of (curve, exponent) pairs."""
    return [tuple(x) for x in _load(_core.phi_word(h, k))]


def family_lens(h, k):
    return _core.family_lens(h, k)


def neg_cf_expand(x):
    return _core.neg_cf_expand(str(Fraction(x)))


def cf_evaluate(coeffs):
    """Value of the negative continued fraction, or None at a pole."""
    v = _core.cf_evaluate(list(coeffs))
    return None if v is None else _frac(v)


def chain_to_lens(framings):
    return _core.chain_to_lens(list(framings))


def lens_equal(a, b, oriented=True):
    return _core.lens_equal(a[0], a[1], b[0], b[1], oriented)


def presentation_for(h, k):
    return _load(_core.presentation_for(h, k))


def reduce_family_diagram(h, k, with_log=False):
    return _load(_core.reduce_family_diagram(h, k, with_log))


def family_script(h, k):
    return _load(_core.family_script(h, k))


def replay(diagram, script):
    return _load(_core.replay(json.dumps(diagram), json.dumps(script)))


def d3_family(h, k):
    return _fractions(_load(_core.d3_family(h, k)), _D3_KEYS)


def tight_census(p, q):
    return _fractions(_load(_core.tight_census(p, q)), _D3_KEYS)


def overtwisted_verdict(h, k):
    return _fractions(_load(_core.overtwisted_verdict(h, k)), _D3_KEYS)


def prove_right_veering(word):
    """Certificate dict, or None when the prover gives up."""
    c = _core.prove_right_veering(_word_json(word))
    return None if c is None else _load(c)


def check_certificate(cert, word=None):
    return _load(_core.check_certificate(json.dumps(cert), None if word is None else _word_json(word)))


def arikan_tight(a1, a2, a3):
    return _core.arikan_tight(a1, a2, a3)


def run_family(h, k, verbose=False):
    return _fractions(_load(_core.run_family(h, k, verbose)), _D3_KEYS)
