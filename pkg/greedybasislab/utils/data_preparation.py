#!/usr/bin/env python
"""
Instance documents: parsing, construction and serialisation.

An instance is a JSON object::

    {"schema": "gbl/1", "name": "shear-2", "dim": 2,
     "norm": {"type": "quadratic", "G": [[1, 0.5], [0.5, 1.25]]},
     "basis": {"columns": [[1, 0], [0, 1]]},
     "analysis": {"budget": 10000, "seed": 0, "tol": 1e-9}}

`basis` defaults to the canonical basis and `analysis` to no overrides. Each
inner list of `basis.columns` is one basis vector e_i.
"""
import json
from dataclasses import dataclass, field

from ..exceptions import BasisConstructionError, InstanceError, InstanceSchemaError, NormSpecError
from ..spaces.basis import Basis, canonical_basis
from ..spaces.norm_specs import norm_spec_from_dict
from ..spaces.normed_space import NormedSpace
from .settings_utils import AnalysisSettings, resolve_settings
from .utils import getlogger
from .validation import SCHEMA_TAG, check_instance_schema

logger = getlogger()


@dataclass(frozen=True, eq=False)
class ProblemInstance:
    """
    A parsed instance.

    Attributes
    ----------
    name : str
        Instance label.
    space : NormedSpace
        The validated space.
    basis : Basis
        The validated basis.
    analysis : dict
        Analysis overrides carried by the document.
    source : str or None
        Path of the instance file, if any.
    """
    name: str
    space: NormedSpace
    basis: Basis
    analysis: dict = field(default_factory=dict)
    source: str = None

    @property
    def dim(self) -> int:
        return self.space.dim


def initialise_instance(data, source=None, name=None,
                        settings: AnalysisSettings = None) -> ProblemInstance:
    """
    Builds a ProblemInstance from a decoded instance document.

    The basis is checked against `settings.max_condition` and `settings.biorth_tol`;
    without `settings`, the packaged defaults overlaid with the document's
    `analysis` block apply.

    Raises
    ------
    InstanceSchemaError
        For structural problems and for norms or bases rejected by validation,
        naming the offending field.
    """
    check_instance_schema(data, source)
    dim = int(data['dim'])
    spec = norm_spec_from_dict(data['norm'])
    try:
        space = NormedSpace(dim, spec)
    except NormSpecError as e:
        raise InstanceSchemaError('norm', '; '.join(e.report.failures), source=source) from e
    if settings is None:
        settings = resolve_settings(data.get('analysis'), environ={})
    bounds = {'max_condition': settings.max_condition, 'biorth_tol': settings.biorth_tol}
    basis_data = data.get('basis', 'canonical')
    try:
        if basis_data == 'canonical':
            basis = canonical_basis(dim, space=space, **bounds)
        else:
            basis = Basis.from_vectors(basis_data['columns'], space=space, **bounds)
    except (BasisConstructionError, InstanceError, ValueError) as e:
        raise InstanceSchemaError('basis.columns', str(e), source=source) from e
    label = name or data.get('name') or (source or 'instance')
    return ProblemInstance(name=str(label), space=space, basis=basis,
                           analysis=dict(data.get('analysis', {})), source=source)


def load_instance_file(path) -> ProblemInstance:
    """
    Reads and builds an instance from a JSON file.

    Raises
    ------
    InstanceSchemaError
        On malformed JSON (with line and column) or schema violations.
    OSError
        If the file cannot be read.
    """
    path = str(path)
    with open(path, 'r', encoding='utf-8') as f:
        text = f.read()
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise InstanceSchemaError('<document>', f"malformed JSON: {e.msg}",
                                  line=e.lineno, column=e.colno, source=path) from e
    instance = initialise_instance(data, source=path)
    logger.debug(f"loaded instance {instance.name} (dim {instance.dim}, {instance.space.spec.kind})")
    return instance


def instance_to_dict(instance: ProblemInstance, include_analysis: bool = True) -> dict:
    """Serialises an instance back to its document form."""
    data = {'schema': SCHEMA_TAG,
            'name': instance.name,
            'dim': instance.dim,
            'norm': instance.space.spec.to_dict(),
            'basis': instance.basis.to_dict()}
    if include_analysis and instance.analysis:
        data['analysis'] = dict(instance.analysis)
    return data
