#!/usr/bin/env python
"""
Report and certificate documents written by the command-line front-end.

Reports contain no wall-clock data: the same instance, seed and budget always
give byte-identical output. Work is reported as deterministic norm-evaluation
counts under ``timing``.
"""
from ..data_management.analysis_data_store import AnalysisDataStore
from ..theorem.certificates import none_record
from ..utils.data_preparation import ProblemInstance, instance_to_dict
from ..utils.utils import dumps_json, stable_digest, to_jsonable
from ..utils.validation import SCHEMA_TAG


def instance_digest(instance: ProblemInstance) -> str:
    """SHA-256 of the canonical JSON of the instance document."""
    return stable_digest(instance_to_dict(instance))


def certificate_record(certificate, basis=None, all_ties=False) -> dict:
    """Certificate JSON with the schema tag; with `all_ties` every valid greedy set of z is listed."""
    record = {'schema': SCHEMA_TAG, **certificate.to_dict()}
    if all_ties and basis is not None:
        record['valid_sets'] = certificate.all_valid_sets(basis)
    return record


def empty_record(status: str) -> dict:
    return {'schema': SCHEMA_TAG, **none_record(status)}


def build_report(store: AnalysisDataStore, all_ties: bool = False) -> dict:
    """
    Assembles the analysis report of a processed data store.

    Parameters
    ----------
    store : AnalysisDataStore
        Store after ConstantsPipeline and TheoremPipeline.
    all_ties : bool, optional
        List every valid greedy set next to each certificate.

    Returns
    -------
    dict
        JSON-ready report.
    """
    settings = store.settings
    verdict = store.verdict
    certificates = []
    if verdict.certificate is not None:
        certificates.append(certificate_record(verdict.certificate, store.basis, all_ties))
    for witness in store.hilbert_witnesses or []:
        record = {'schema': SCHEMA_TAG, **witness.to_dict()}
        if all_ties:
            record['certificate']['valid_sets'] = witness.certificate.all_valid_sets(store.basis)
        certificates.append(record)

    estimates = {e.name: e.to_dict() for e in (store.ksu, store.cw, store.ct, store.cqg)}
    return {
        'schema': SCHEMA_TAG,
        'kind': 'report',
        'instance': {'name': store.name, 'dim': store.space.dim, 'norm': store.space.spec.kind,
                     'digest': instance_digest(store.instance)},
        'seed': settings.seed,
        'budget': settings.budget,
        'tol': settings.tol,
        'estimates': estimates,
        'verdict': {'consistent': verdict.consistent,
                    'status': verdict.status,
                    'explanation': verdict.explanation,
                    'violation': verdict.violation.to_dict() if verdict.violation else None},
        'certificates': certificates,
        'subset_norms': to_jsonable(store.subset_norm_table) if store.subset_norm_table is not None else None,
        'timing': {'norm_evaluations': {**{e.name: e.budget_used for e in (store.ksu, store.cw, store.ct)},
                                       'verdict': verdict.cw.budget_used}},
    }


def render(document) -> str:
    """Indented JSON with shortest round-trip floats and a trailing newline."""
    return dumps_json(document) + '\n'
