"""Exact symbolic computations in the Schroedinger-Virasoro algebra.

The heavy lifting happens in the C++ extension ``svalgebra._core``; this
package re-exports it and adds small JSON conveniences so callers can work
with plain dicts and lists instead of JSON strings.
"""

import json as _json

from ._core import (
    act,
    bracket,
    dot_act,
    nilpotency_index,
    normal_form,
    normal_form_json,
    render_vector,
    singular_vectors,
    submodule_closure,
    verify,
    whittaker_vectors,
)

__all__ = [
    "act",
    "bracket",
    "dot_act",
    "nilpotency_index",
    "normal_form",
    "normal_form_json",
    "render_vector",
    "singular_vectors",
    "submodule_closure",
    "verify",
    "whittaker_vectors",
    "act_dict",
    "whittaker_dict",
    "singular_dict",
    "closure_dict",
    "universal",
    "quotient",
    "verma",
]


def universal(eta1="0", eta2="0", m1="0", eta3="0"):
    """Module spec JSON for the universal Whittaker module."""
    return _json.dumps(
        {"type": "universal", "psi": {"eta1": str(eta1), "eta2": str(eta2), "m1": str(m1), "eta3": str(eta3)}}
    )


def quotient(eta1="0", eta2="0", m1="0", eta3="0", xi="0"):
    """Module spec JSON for the quotient by (M_0 - xi)."""
    return _json.dumps(
        {
            "type": "quotient",
            "psi": {"eta1": str(eta1), "eta2": str(eta2), "m1": str(m1), "eta3": str(eta3)},
            "xi": str(xi),
        }
    )


def verma(xi="0", zeta="0"):
    """Module spec JSON for the Verma quotient with eigenvalues (xi, zeta)."""
    return _json.dumps({"type": "verma", "xi": str(xi), "zeta": str(zeta)})


def act_dict(expr, on="w", spec=None):
    """Like :func:`act` but returns the vector as a list of term dicts."""
    if not isinstance(on, str):
        on = _json.dumps(on)
    return _json.loads(act(expr, on, spec if spec is not None else universal()))


def whittaker_dict(spec=None, deg="3", l0=3, m0=3):
    """Like :func:`whittaker_vectors` but returns the report as a dict."""
    return _json.loads(
        whittaker_vectors(spec if spec is not None else universal(), str(deg), l0, m0)
    )


def singular_dict(spec, deg="3", l0=3, m0=3):
    """Like :func:`singular_vectors` but returns the report as a dict."""
    return _json.loads(singular_vectors(spec, str(deg), l0, m0))


def closure_dict(gens, spec=None, deg="3", l0=3, m0=3, weight_bound="4"):
    """Like :func:`submodule_closure` but takes/returns Python objects."""
    if not isinstance(gens, str):
        gens = _json.dumps(gens)
    return _json.loads(
        submodule_closure(
            gens, spec if spec is not None else universal(), str(deg), l0, m0, str(weight_bound)
        )
    )
