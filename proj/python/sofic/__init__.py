"""Python bindings for building and checking sofic certificates.

Certificates, actions, tilings and EPPA inputs are plain dicts in the same
JSON layout the ``sofic`` command line tool reads and writes.
"""

import json

from . import _core
from ._core import SoficError

__all__ = [
    "SoficError",
    "verify",
    "verify_group",
    "build_folner",
    "build_finite",
    "build_free",
    "combine_product",
    "combine_coproduct",
    "complement",
    "vertex_transform",
    "restrict",
    "measured_delta",
    "eppa",
    "tile_of",
    "invariance_defect",
    "gh_mismatch",
    "transfer",
    "wreath_check",
    "hamming",
]


def _text(obj):
    return obj if isinstance(obj, str) else json.dumps(obj)


def _load(text):
    return json.loads(text)


def verify(cert, action, jobs=1):
    return _load(_core.verify(_text(cert), _text(action), jobs))


def verify_group(cert, jobs=1):
    return _load(_core.verify_group(_text(cert), jobs))


def build_folner(action, A, F, W, epsilon="1/10"):
    return _load(_core.build_folner(_text(action), list(A), list(F), list(W), epsilon))


def build_finite(action, F, W, epsilon="1/10", group_cap=5040):
    return _load(_core.build_finite(_text(action), list(F), list(W), epsilon, group_cap))


def build_free(action, F, W, epsilon="1/10", eppa_cap=12, aut_cap=10):
    return _load(_core.build_free(_text(action), list(F), list(W), epsilon, eppa_cap, aut_cap))


def combine_product(left, right, rule="cartesian"):
    return _load(_core.combine_product(_text(left), _text(right), rule))


def combine_coproduct(left, right):
    return _load(_core.combine_coproduct(_text(left), _text(right)))


def complement(cert):
    return _load(_core.complement(_text(cert)))


def vertex_transform(cert, mode):
    return _load(_core.vertex_transform(_text(cert), mode))


def restrict(cert, W):
    return _load(_core.restrict(_text(cert), list(W)))


def measured_delta(cert):
    return _core.measured_delta(_text(cert))


def eppa(graph, partials, cap=12):
    return _load(_core.eppa(json.dumps({"graph": graph, "partials": partials}), cap))


def tile_of(tiling, element):
    return _core.tile_of(_text(tiling), element)


def invariance_defect(group, shape, K):
    return _core.invariance_defect(_text(group), list(shape), list(K))


def gh_mismatch(source, target, F):
    return _core.gh_mismatch(_text(source), _text(target), list(F))


def transfer(cert, source, target, F, W):
    return _load(_core.transfer(_text(cert), _text(source), _text(target), list(F), list(W)))


def wreath_check(cert, action, H="C_2", samples=0, seed=0, max_syllables=2):
    return _load(_core.wreath_check(_text(cert), _text(action), _text(H), samples, seed, max_syllables))


def hamming(p, q):
    return _core.hamming(list(p), list(q))
