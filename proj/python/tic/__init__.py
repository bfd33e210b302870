"""Exact hyperreal arithmetic and dual-track continuity and limit checks."""

import json

from . import _tic
from ._tic import (
    DEFAULT_ORDER,
    HyperReal,
    TicError,
    differentiate,
    eval_real,
    extend_eval,
    format,
    paraphrase_gt_sqrt2,
    run,
)

__all__ = [
    "DEFAULT_ORDER",
    "HyperReal",
    "TicError",
    "check_cont",
    "check_ucont",
    "differentiate",
    "eval_real",
    "extend_eval",
    "format",
    "limit_at",
    "limit_seq",
    "paraphrase_gt_sqrt2",
    "run",
]


def check_cont(expr, point, domain="R", track="both", order=DEFAULT_ORDER):
    """Certificates for continuity of expr at point, B track first."""
    return json.loads(_tic.check_cont(expr, str(point), domain, track, order))


def check_ucont(expr, domain="R", track="both", order=DEFAULT_ORDER):
    return json.loads(_tic.check_ucont(expr, domain, track, order))


def limit_seq(expr, limit=None, track="both", order=DEFAULT_ORDER):
    return json.loads(_tic.limit_seq(expr, None if limit is None else str(limit), track, order))


def limit_at(expr, point, limit=None, domain="R", track="both", order=DEFAULT_ORDER):
    return json.loads(_tic.limit_at(expr, str(point), None if limit is None else str(limit), domain, track, order))
