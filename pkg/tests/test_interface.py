import logging
import math

import pytest

from greedybasislab.cli.gallery import gallery_instance
from greedybasislab.constants.constants_pipeline import ConstantsPipeline
from greedybasislab.data_management.analysis_data_store import AnalysisDataStore
from greedybasislab.greedybasislab_interface import GreedyBasisLabInterface
from greedybasislab.theorem.theorem_pipeline import TheoremPipeline
from greedybasislab.utils.data_preparation import initialise_instance


def test_pipeline():
    lab = GreedyBasisLabInterface(log_level='WARNING')
    store = lab.analyse(gallery_instance('summing-2'), budget=1024, seed=2)
    assert store.settings.budget == 1024 and store.settings.seed == 2
    assert store.ksu.value == pytest.approx(2.0) and store.ksu.is_exact
    assert store.verdict.consistent
    assert store.certificate.ratio == pytest.approx(2.0)
    assert store.hilbert_witnesses == []
    assert list(store.estimate_table.index) == ['ksu', 'cw', 'ct', 'cqg']
    assert store.cqg.value == max(store.cw.value, store.ct.value)

    results = lab.export_results_to_dict()
    constants = results['constants_results']
    assert {row['constant'] for row in constants['estimate_table']} == {'ksu', 'cw', 'ct', 'cqg'}
    assert constants['ksu']['method'] == 'vertex-enum'
    assert results['theorem_results']['verdict']['status'] == 'violation-certified'
    assert results['theorem_results']['certificate']['lambda'] == [2]


def test_pipeline_instance_overrides():
    doc = gallery_instance('shear-2')
    doc['analysis'] = {'budget': 256, 'seed': 9}
    store = GreedyBasisLabInterface(log_level='WARNING').analyse(doc, environ={'GBL_THREADS': '2'})
    assert (store.settings.budget, store.settings.seed, store.settings.threads) == (256, 9, 2)
    assert store.ksu.value == pytest.approx(math.sqrt(5) / 2, abs=1e-9)
    assert len(store.hilbert_witnesses) == 2


def test_renorm():
    lab = GreedyBasisLabInterface(log_level='WARNING')
    instance = initialise_instance(gallery_instance('summing-2'))
    renormed = lab.renorm(instance)
    assert renormed.name == 'summing-2-renorm'
    assert renormed.basis is instance.basis
    assert renormed.space.norm([1.0, -2.0]) == pytest.approx(2.0)


def test_export_before_analysis():
    with pytest.raises(RuntimeError):
        GreedyBasisLabInterface(log_level='WARNING').export_results_to_dict()


def test_pipeline_order_is_enforced():
    store = AnalysisDataStore()
    with pytest.raises(RuntimeError):
        ConstantsPipeline(store).calc_pipeline()
    store.initialise(initialise_instance(gallery_instance('l2-canonical-2')))
    with pytest.raises(RuntimeError):
        TheoremPipeline(store).calc_pipeline()
    assert store.export_constants_results_to_dict() is None


def test_assign_parameters():
    store = AnalysisDataStore()
    store.assign_parameters('theorem', verdict='v', certificate=None, unknown=1)
    assert store.verdict == 'v' and store.certificate is None
    assert not hasattr(store, 'unknown')
    with pytest.raises(ValueError):
        store.assign_parameters('wells', verdict='v')


def test_set_loglevel():
    lab = GreedyBasisLabInterface()
    lab.set_loglevel('ERROR')
    assert lab.logger.level == logging.ERROR
    lab.set_loglevel('WARNING')
