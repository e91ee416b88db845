import dataclasses
import json
import math

import pytest

import greedybasislab.theorem.theorem_pipeline as theorem_pipeline
from greedybasislab.cli.gallery import gallery_instance, is_gallery_name, list_families
from greedybasislab.cli.main import EXIT_INCONSISTENT, EXIT_INPUT_ERROR, EXIT_OK, main
from greedybasislab.exceptions import InstanceError

SQRT5_HALF = math.sqrt(5) / 2


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_gallery_list(capsys):
    code, out, _ = run(capsys, 'gallery', '--list')
    assert code == EXIT_OK
    families = [row['family'] for row in json.loads(out)]
    assert families == ['lp-canonical', 'shear', 'summing', 'random-quadratic', 'random-polyhedral']


def test_gallery_summing3(capsys):
    code, out, _ = run(capsys, 'gallery', 'summing-3')
    assert code == EXIT_OK
    doc = json.loads(out)
    assert doc['norm'] == {'type': 'polyhedral', 'rows': [[1.0, 0.0, 0.0], [1.0, 1.0, 0.0], [1.0, 1.0, 1.0]]}
    assert doc['schema'] == 'gbl/1' and doc['basis'] == 'canonical'


def test_gallery_shear(capsys):
    _, out, _ = run(capsys, 'gallery', 'shear-2')
    doc = json.loads(out)
    assert doc['norm'] == {'type': 'quadratic', 'G': [[1.0, 0.5], [0.5, 1.25]]}


def test_gallery_names():
    assert is_gallery_name('linf-canonical-3') and is_gallery_name('random-polyhedral-4-11')
    assert not is_gallery_name('shear-3')
    assert gallery_instance('linf-canonical-2')['norm'] == {'type': 'lp', 'p': 'inf'}
    assert gallery_instance('random-quadratic-3-7') == gallery_instance('random-quadratic-3-7')
    assert len(list_families()) == 5
    with pytest.raises(InstanceError, match='summing-'):
        gallery_instance('summing-x')
    with pytest.raises(InstanceError):
        gallery_instance('l0.5-canonical-2')


def test_analyze_l2_canonical(capsys):
    code, out, _ = run(capsys, 'analyze', 'l2-canonical-4', '--budget', '512')
    assert code == EXIT_OK
    report = json.loads(out)
    assert report['kind'] == 'report' and report['schema'] == 'gbl/1'
    assert report['instance']['dim'] == 4 and len(report['instance']['digest']) == 64
    ksu = report['estimates']['ksu']
    assert ksu['value'] == 1.0 and ksu['exactness'] == 'exact' and ksu['method'] == 'lattice'
    assert report['estimates']['cw']['value'] == 1.0
    assert report['verdict']['status'] == 'proved-1-unconditional'
    assert report['certificates'] == []
    assert len(report['subset_norms']) == 2 ** 4 - 2
    assert report['budget'] == 512 and report['seed'] == 0


def test_analyze_shear(capsys):
    code, out, _ = run(capsys, 'analyze', 'shear-2', '--budget', '2048', '--seed', '3')
    assert code == EXIT_OK
    report = json.loads(out)
    assert report['estimates']['ksu']['value'] == pytest.approx(SQRT5_HALF, abs=1e-9)
    assert report['estimates']['ksu']['method'] == 'eigen'
    assert report['estimates']['cw']['value'] >= SQRT5_HALF - 1e-9
    assert report['verdict']['status'] == 'violation-certified'
    kinds = [c['kind'] for c in report['certificates']]
    assert kinds == ['greedy_violation', 'hilbert_orthogonality', 'hilbert_orthogonality']
    assert report['seed'] == 3


def test_analyze_all_ties(capsys):
    _, out, _ = run(capsys, 'analyze', 'summing-2', '--budget', '512', '--all-ties')
    certificate = json.loads(out)['certificates'][0]
    assert certificate['valid_sets'] == [[2]]


def test_analyze_is_byte_identical(capsys):
    _, first, _ = run(capsys, 'analyze', 'shear-2', '--budget', '512')
    _, second, _ = run(capsys, 'analyze', 'shear-2', '--budget', '512')
    assert first == second


def test_analyze_malformed_json(capsys, tmp_path):
    path = tmp_path / 'broken.json'
    path.write_text('{"dim": 2,\n "norm": }\n')
    code, out, err = run(capsys, 'analyze', str(path))
    assert code == EXIT_INPUT_ERROR
    assert out == ''
    assert 'malformed JSON' in err and f"{path}:2:" in err


def test_analyze_invalid_norm(capsys, tmp_path):
    path = tmp_path / 'bad_p.json'
    path.write_text(json.dumps({'schema': 'gbl/1', 'dim': 2, 'norm': {'type': 'lp', 'p': 0.5}}))
    code, _, err = run(capsys, 'analyze', str(path))
    assert code == EXIT_INPUT_ERROR
    assert "field 'norm" in err


def test_oversized_suppression_instance_is_input_error(capsys, tmp_path):
    path = tmp_path / 'big.json'
    identity = [[float(i == j) for j in range(26)] for i in range(26)]
    path.write_text(json.dumps({'schema': 'gbl/1', 'dim': 26,
                                'norm': {'type': 'suppression', 'base': {'type': 'lp', 'p': 2},
                                         'vectors': identity}}))
    for command in ('renorm', 'analyze'):
        code, out, err = run(capsys, command, str(path))
        assert code == EXIT_INPUT_ERROR and out == ''
        assert err.startswith('gbl: error:') and 'n <= 20' in err


def test_analyze_unknown_instance(capsys):
    code, _, err = run(capsys, 'analyze', 'no-such-instance')
    assert code == EXIT_INPUT_ERROR
    assert err.startswith('gbl: error:') and 'gallery' in err


def test_usage_error_is_input_error(capsys):
    code, _, _ = run(capsys, 'analyze')
    assert code == EXIT_INPUT_ERROR


def test_witness_summing(capsys):
    code, out, _ = run(capsys, 'witness', 'summing-2', '--budget', '1024')
    assert code == EXIT_OK
    record = json.loads(out)
    assert record['kind'] == 'greedy_violation'
    assert record['z'] == pytest.approx([1.0, -2.0], abs=1e-9)
    assert record['N'] == 1 and record['lambda'] == [2]
    assert record['ratio'] == pytest.approx(2.0, abs=1e-9)


def test_witness_none_record(capsys):
    code, out, _ = run(capsys, 'witness', 'l1-canonical-3', '--budget', '512')
    assert code == EXIT_OK
    assert json.loads(out) == {'schema': 'gbl/1', 'kind': 'none', 'status': 'proved-1-unconditional'}


def test_witness_hilbert_shear(capsys):
    code, out, _ = run(capsys, 'witness', '--hilbert', 'shear-2')
    assert code == EXIT_OK
    record = json.loads(out)
    assert record['kind'] == 'hilbert_orthogonality'
    assert record['pair'] == [1, 2] and record['epsilon'] == -1
    assert record['t'] == pytest.approx(0.4)
    assert record['certificate']['ratio'] == pytest.approx(SQRT5_HALF, abs=1e-9)


def test_witness_hilbert_orthogonal(capsys):
    _, out, _ = run(capsys, 'witness', '--hilbert', 'l2-canonical-3')
    assert json.loads(out)['status'] == 'proved-1-unconditional'


def test_witness_hilbert_needs_quadratic(capsys):
    code, _, err = run(capsys, 'witness', '--hilbert', 'l1-canonical-2')
    assert code == EXIT_INPUT_ERROR and 'gbl: error:' in err


def test_renorm_then_analyze(capsys, tmp_path):
    path = tmp_path / 'shear-renorm.json'
    code, out, _ = run(capsys, 'renorm', 'shear-2', '--out', str(path))
    assert code == EXIT_OK and out == ''
    doc = json.loads(path.read_text())
    assert doc['name'] == 'shear-2-renorm' and doc['norm']['type'] == 'suppression'
    code, out, _ = run(capsys, 'analyze', str(path), '--budget', '512')
    assert code == EXIT_OK
    report = json.loads(out)
    assert report['estimates']['ksu']['value'] == 1.0
    assert report['estimates']['ksu']['method'] == 'renorm'
    assert report['verdict']['status'] == 'proved-1-unconditional'


def test_inconsistent_verdict_exit_code(capsys, monkeypatch):
    real = theorem_pipeline.verify_characterization

    def contradicted(*args, **kwargs):
        return dataclasses.replace(real(*args, **kwargs), consistent=False, status='inconsistent')

    monkeypatch.setattr(theorem_pipeline, 'verify_characterization', contradicted)
    code, out, _ = run(capsys, 'analyze', 'l2-canonical-2', '--budget', '256')
    assert code == EXIT_INCONSISTENT
    assert json.loads(out)['verdict']['consistent'] is False
