#!/usr/bin/env python
"""
Builtin instances.

Names follow the family patterns of ``data/gallery_families.json``:
l{p}-canonical-{n}, shear-2, summing-{n}, random-quadratic-{n}-{seed} and
random-polyhedral-{n}-{seed}.
"""
import math
import re

import numpy as np
import pandas as pd

from ..exceptions import InstanceError
from ..utils.settings_utils import load_data_file
from ..utils.validation import SCHEMA_TAG

SHEAR_GRAM = [[1.0, 0.5], [0.5, 1.25]]
RANDOM_QUADRATIC_SHIFT = 0.5

_PATTERNS = {
    'lp-canonical': re.compile(r'^l(inf|\d+(?:\.\d+)?)-canonical-(\d+)$'),
    'shear': re.compile(r'^shear-2$'),
    'summing': re.compile(r'^summing-(\d+)$'),
    'random-quadratic': re.compile(r'^random-quadratic-(\d+)-(\d+)$'),
    'random-polyhedral': re.compile(r'^random-polyhedral-(\d+)-(\d+)$'),
}


def list_families() -> pd.DataFrame:
    """Family descriptors indexed by family name."""
    return pd.DataFrame(load_data_file('gallery_families.json')).set_index('family')


def _document(name, dim, norm):
    return {'schema': SCHEMA_TAG, 'name': name, 'dim': dim, 'norm': norm, 'basis': 'canonical'}


def _dimension(text, name):
    n = int(text)
    if n < 1:
        raise InstanceError(f"Gallery instance '{name}' needs a dimension >= 1.")
    return n


def lp_canonical(n: int, p) -> dict:
    p_json = 'inf' if math.isinf(float(p)) else float(p)
    label = 'inf' if p_json == 'inf' else f"{float(p):g}"
    return _document(f"l{label}-canonical-{n}", n, {'type': 'lp', 'p': p_json})


def shear() -> dict:
    return _document('shear-2', 2, {'type': 'quadratic', 'G': SHEAR_GRAM})


def summing(n: int) -> dict:
    """Partial-sum functionals f_k = (1, ..., 1, 0, ..., 0) with k ones."""
    rows = np.tril(np.ones((n, n)))
    return _document(f"summing-{n}", n, {'type': 'polyhedral', 'rows': rows.tolist()})


def random_quadratic(n: int, seed: int) -> dict:
    """G = A^T A + 0.5 I with a standard normal A drawn from default_rng(seed)."""
    A = np.random.default_rng(seed).standard_normal((n, n))
    G = A.T @ A + RANDOM_QUADRATIC_SHIFT * np.eye(n)
    G = (G + G.T) / 2
    return _document(f"random-quadratic-{n}-{seed}", n, {'type': 'quadratic', 'G': G.tolist()})


def random_polyhedral(n: int, seed: int) -> dict:
    """Identity rows stacked on n standard normal rows, so the functionals span R^n."""
    F = np.random.default_rng(seed).standard_normal((n, n))
    rows = np.vstack([np.eye(n), F])
    return _document(f"random-polyhedral-{n}-{seed}", n, {'type': 'polyhedral', 'rows': rows.tolist()})


def gallery_instance(name: str) -> dict:
    """
    The instance document of a gallery name.

    Raises
    ------
    InstanceError
        If the name matches no family; the message lists the valid patterns.
    """
    for family, pattern in _PATTERNS.items():
        match = pattern.match(name)
        if match is None:
            continue
        if family == 'lp-canonical':
            p = math.inf if match.group(1) == 'inf' else float(match.group(1))
            if p < 1:
                raise InstanceError(f"Gallery instance '{name}' needs p >= 1.")
            return lp_canonical(_dimension(match.group(2), name), p)
        if family == 'shear':
            return shear()
        if family == 'summing':
            return summing(_dimension(match.group(1), name))
        if family == 'random-quadratic':
            return random_quadratic(_dimension(match.group(1), name), int(match.group(2)))
        return random_polyhedral(_dimension(match.group(1), name), int(match.group(2)))
    patterns = ', '.join(list_families()['pattern'])
    raise InstanceError(f"Unknown gallery instance '{name}'. Valid names: {patterns}")


def is_gallery_name(name: str) -> bool:
    return any(pattern.match(name) for pattern in _PATTERNS.values())
