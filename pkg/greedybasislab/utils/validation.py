from numbers import Integral, Real

from ..exceptions import InstanceSchemaError

SCHEMA_TAG = 'gbl/1'
ANALYSIS_FIELDS = {'budget': Integral, 'seed': Integral, 'tol': Real,
                   'tie_tol': Real, 'biorth_tol': Real, 'max_condition': Real}
# tolerances and bounds that must be strictly positive
POSITIVE_FIELDS = ('tol', 'tie_tol', 'biorth_tol', 'max_condition')


def check_instance_schema(data, source=None):
    """
    Structural checks of an instance document, before any numerics.

    Raises InstanceSchemaError naming the offending field when:
    the document is not an object, the schema tag is not 'gbl/1', `dim` is not a
    positive integer, `norm` is missing or not an object, `basis` is neither
    'canonical' nor an object with `columns`, or `analysis` carries unknown or
    ill-typed values.
    """
    if not isinstance(data, dict):
        raise InstanceSchemaError('<document>', "expected a JSON object", source=source)

    schema = data.get('schema', SCHEMA_TAG)
    if schema != SCHEMA_TAG:
        raise InstanceSchemaError('schema', f"unsupported schema {schema!r}, expected {SCHEMA_TAG!r}", source=source)

    dim = data.get('dim')
    if dim is None:
        raise InstanceSchemaError('dim', "missing required field", source=source)
    if isinstance(dim, bool) or not isinstance(dim, Integral) or dim < 1:
        raise InstanceSchemaError('dim', f"expected a positive integer, got {dim!r}", source=source)

    if 'norm' not in data:
        raise InstanceSchemaError('norm', "missing required field", source=source)
    if not isinstance(data['norm'], dict):
        raise InstanceSchemaError('norm', "expected an object", source=source)

    basis = data.get('basis', 'canonical')
    if basis != 'canonical':
        if not isinstance(basis, dict) or 'columns' not in basis:
            raise InstanceSchemaError('basis', "expected 'canonical' or an object with 'columns'", source=source)
        columns = basis['columns']
        if not isinstance(columns, list) or len(columns) != dim:
            raise InstanceSchemaError('basis.columns', f"expected {dim} basis vectors", source=source)
        for k, column in enumerate(columns):
            if not isinstance(column, list) or len(column) != dim:
                raise InstanceSchemaError(f"basis.columns[{k}]", f"expected a vector of length {dim}", source=source)

    analysis = data.get('analysis', {})
    if not isinstance(analysis, dict):
        raise InstanceSchemaError('analysis', "expected an object", source=source)
    for key, value in analysis.items():
        if key not in ANALYSIS_FIELDS:
            raise InstanceSchemaError(f"analysis.{key}",
                                      f"unknown setting; expected one of {sorted(ANALYSIS_FIELDS)}", source=source)
        if isinstance(value, bool) or not isinstance(value, ANALYSIS_FIELDS[key]):
            raise InstanceSchemaError(f"analysis.{key}", f"ill-typed value {value!r}", source=source)
        if key in POSITIVE_FIELDS and not value > 0:
            raise InstanceSchemaError(f"analysis.{key}", f"expected a positive number, got {value!r}", source=source)
    return True
