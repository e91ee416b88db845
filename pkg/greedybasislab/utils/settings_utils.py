import importlib.resources
import json
import os
from dataclasses import dataclass, fields, replace

from .utils import getlogger

logger = getlogger()

THREADS_ENV_VAR = 'GBL_THREADS'


@dataclass(frozen=True)
class AnalysisSettings:
    """
    Resolved analysis configuration.

    Attributes
    ----------
    budget : int
        Random restarts per search-based estimator.
    seed : int
        Seed of the restart generator.
    tol : float
        Relative tolerance for declaring a constant equal to 1.
    tie_tol : float
        Absolute tolerance under which coefficient magnitudes are tied.
    biorth_tol : float
        Tolerance of the biorthogonality check duals . vectors = I.
    max_condition : float
        Largest accepted condition number of a basis matrix.
    max_subset_dim : int
        Cap on n for 2^n subset enumeration.
    max_vertex_dim : int
        Cap on n for exact unit-ball vertex enumeration.
    polish_candidates : int
        Number of best restarts handed to the local polish.
    chunk_size : int
        Restarts per independently seeded chunk.
    threads : int
        Worker threads for chunk evaluation.
    """
    budget: int = 10000
    seed: int = 0
    tol: float = 1e-9
    tie_tol: float = 1e-12
    biorth_tol: float = 1e-10
    max_condition: float = 1e12
    max_subset_dim: int = 20
    max_vertex_dim: int = 6
    polish_candidates: int = 8
    chunk_size: int = 1024
    threads: int = 1

    def updated(self, **overrides):
        """Returns a copy with every non-None override applied."""
        known = {f.name: f.type for f in fields(self)}
        clean = {}
        for key, value in overrides.items():
            if value is None:
                continue
            if key not in known:
                raise KeyError(f"Unknown analysis setting '{key}'")
            clean[key] = int(value) if known[key] in (int, 'int') else float(value)
        return replace(self, **clean)


def get_data_path(filename: str) -> str:
    """
    Constructs a full file path for a given filename within the package data directory.

    Parameters
    ----------
    filename : str
        The name of the file for which the path is to be constructed.

    Returns
    -------
    str
        The absolute path to the specified file in the 'data' directory.
    """
    try:
        data_path = importlib.resources.files('greedybasislab.data') / filename
        if not data_path.exists():
            raise FileNotFoundError(filename)
        return str(data_path)
    except FileNotFoundError as e:
        raise FileNotFoundError(f"The file '{filename}' was not found in the 'data' directory.") from e


def load_data_file(filename: str):
    """Loads a packaged JSON data file."""
    with open(get_data_path(filename), 'r', encoding='utf-8') as f:
        return json.load(f)


def load_default_settings() -> AnalysisSettings:
    """
    Loads the packaged default settings, falling back to the built-in defaults when
    the data file is missing.
    """
    try:
        values = load_data_file('analysis_settings.json')
    except FileNotFoundError:
        logger.warning("Packaged analysis settings not found. Using built-in defaults.")
        return AnalysisSettings()
    return AnalysisSettings().updated(**values)


def resolve_settings(instance_overrides: dict | None = None,
                     cli_overrides: dict | None = None,
                     environ=None) -> AnalysisSettings:
    """
    Layers the configuration sources.

    Packaged defaults < instance "analysis" block < command-line flags < environment
    (GBL_THREADS caps estimator parallelism).
    """
    environ = os.environ if environ is None else environ
    settings = load_default_settings()
    settings = settings.updated(**(instance_overrides or {}))
    settings = settings.updated(**(cli_overrides or {}))
    threads = environ.get(THREADS_ENV_VAR)
    if threads:
        try:
            settings = settings.updated(threads=max(1, int(threads)))
        except ValueError:
            logger.warning(f"Ignoring non-integer {THREADS_ENV_VAR}={threads!r}")
    return settings
