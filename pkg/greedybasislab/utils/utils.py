#!/usr/bin/env python
import hashlib
import json
import logging
import math

import numpy as np
import pandas as pd

logger = None


def getlogger(log_level='INFO') -> logging.Logger:
    """
    Gets a pre-configured logger instance.

    Parameters
    ----------
    log_level : str, optional
        The logging level as a string, default is 'INFO'. Possible values include 'DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'.

    Returns
    -------
    logger : logging.Logger
        The configured logger instance.

    Notes
    -----
    The logger instance is globally defined and will be re-used across multiple calls to avoid re-configuration.
    Records go to stderr; stdout is reserved for JSON output of the command-line front-end.
    """
    global logger
    if logger is None:
        logger = logging.getLogger('greedybasislab')
        numeric_level = getattr(logging, str(log_level).upper(), logging.INFO)
        logging.basicConfig(
            level=numeric_level, format="%(asctime)s %(levelname)s %(message)s", datefmt="%H:%M:%S %d-%m-%Y")
        logger.setLevel(numeric_level)
    return logger


def to_jsonable(value):
    """
    Converts numpy, pandas and container values into plain JSON-compatible Python objects.

    Non-finite floats become None. Floats are kept as Python floats so that
    ``json.dumps`` emits their shortest round-trip representation.
    """
    if isinstance(value, pd.DataFrame):
        return [to_jsonable(r) for r in value.reset_index().to_dict(orient='records')]
    if isinstance(value, pd.Series):
        return to_jsonable(value.to_dict())
    if isinstance(value, np.ndarray):
        return [to_jsonable(v) for v in value.tolist()]
    if isinstance(value, dict):
        return {str(k): to_jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_jsonable(v) for v in value]
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    if hasattr(value, 'to_dict'):
        return to_jsonable(value.to_dict())
    return value


def dumps_json(obj, canonical=False) -> str:
    """
    Serialises an object to JSON text.

    Parameters
    ----------
    obj : object
        Anything accepted by `to_jsonable`.
    canonical : bool, optional
        If True, keys are sorted and separators are compact (used for digests).
        Otherwise the output is indented for humans. Both forms are byte-stable.
    """
    data = to_jsonable(obj)
    if canonical:
        return json.dumps(data, sort_keys=True, separators=(',', ':'), allow_nan=False)
    return json.dumps(data, indent=2, allow_nan=False)


def stable_digest(obj) -> str:
    """SHA-256 of the canonical JSON form of `obj`."""
    return hashlib.sha256(dumps_json(obj, canonical=True).encode('utf-8')).hexdigest()


def serialize_results(obj, keys):
    """
    Serialises the specified attributes of an object.

    Parameters
    ----------
    obj : object
        The object from which attributes will be serialized.
    keys : list
        A list of attribute names to be serialized.

    Returns
    -------
    results : dict
        A dictionary containing the serialized attributes.

    Notes
    -----
    - DataFrames are flattened into a list of records; NaN values become None.
    - Domain values exposing ``to_dict`` (estimates, verdicts, certificates) are expanded.
    """
    results = {}
    for key in keys:
        value = getattr(obj, key)
        if isinstance(value, pd.DataFrame):
            value = value.replace(np.nan, None)
        results[key] = to_jsonable(value)
    return results
