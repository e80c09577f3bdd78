import io
import json

import pytest

from app import create_app
from audit_config import AuditSettings


@pytest.fixture
def client(tmp_path):
    app = create_app({'TESTING': True, 'AUDIT_SETTINGS': AuditSettings(report_dir=str(tmp_path / 'reports'))})
    return app.test_client()


def test_health(client):
    response = client.get('/health')
    assert response.status_code == 200
    assert response.get_json()['status'] == 'healthy'


def test_unknown_endpoint_is_json(client):
    response = client.get('/api/nowhere')
    assert response.status_code == 404
    assert response.get_json() == {'error': 'Endpoint not found'}


def test_generate(client, split_doc):
    response = client.post('/api/generate', json=split_doc)
    assert response.status_code == 200
    data = response.get_json()
    assert data['algebra'] == [[], ['a'], ['b', 'c'], ['a', 'b', 'c']]
    assert data['atoms'] == [['a'], ['b', 'c']]
    assert data['functions']['f']['values'] == {'a': '1', 'b': '1/2', 'c': '1/2'}
    assert data['functions']['f']['unit'] is True


def test_generate_needs_json(client):
    response = client.post('/api/generate', data='points', content_type='text/plain')
    assert response.status_code == 400


def test_generate_rejects_bad_document(client):
    response = client.post('/api/generate', json={'points': ['a', 'a']})
    assert response.status_code == 400
    assert response.get_json()['kind'] == 'DocumentError'


def test_nested_generator_label_is_rejected(client):
    response = client.post('/api/generate', json={'points': ['a', 'b'], 'generators': [[['a']]]})
    assert response.status_code == 400
    assert response.get_json()['kind'] == 'DocumentError'


def test_non_measurable_function_is_rejected(client, split_doc):
    split_doc['functions'] = ['g = {a:1, b:0, c:2}']
    response = client.post('/api/generate', json=split_doc)
    assert response.status_code == 400
    assert '{b,c}' in response.get_json()['error']


def test_audit(client, split_doc):
    response = client.post('/api/audit', json={'space': split_doc, 'props': ['M15', 'M215'], 'seed': 3})
    assert response.status_code == 200
    data = response.get_json()
    assert data['status'] == 'pass'
    assert data['seed'] == 3
    assert [e['status'] for e in data['entries']] == ['pass', 'skipped']


@pytest.mark.parametrize('body', [
    {'props': ['M15']},
    {'space': {'points': ['a']}, 'seed': -1},
    {'space': {'points': ['a']}, 'seed': 'x'},
    {'space': {'points': ['a']}, 'props': 'M15'},
])
def test_audit_rejects_bad_requests(client, body):
    assert client.post('/api/audit', json=body).status_code == 400


def test_audit_unknown_proposition(client, pair_doc):
    response = client.post('/api/audit', json={'space': pair_doc, 'props': ['M999']})
    assert response.status_code == 400
    assert response.get_json()['kind'] == 'UnknownPropositionError'


def test_quotient_resource_cap(split_doc):
    app = create_app({'TESTING': True, 'AUDIT_SETTINGS': AuditSettings(cover_cap=2)})
    response = app.test_client().post('/api/quotient', json=split_doc)
    assert response.status_code == 413
    assert response.get_json()['kind'] == 'ResourceCapError'


def test_sweep(client):
    response = client.get('/api/sweep?max_points=2')
    assert response.status_code == 200
    data = response.get_json()
    assert data['status'] == 'pass'
    assert {e['space'] for e in data['entries']} == {'a', 'ab', 'a|b', 'pairwise'}


def test_sweep_range(client):
    response = client.get('/api/sweep?max_points=9')
    assert response.status_code == 400


def test_quotient(client, split_doc):
    response = client.post('/api/quotient', json=split_doc)
    assert response.status_code == 200
    data = response.get_json()
    assert data['quotient']['points'] == ['[a]', '[b,c]']
    assert data['status'] == 'pass'


def test_spectrum(client, split_doc, pair_doc):
    separated = client.post('/api/spectrum', json=pair_doc).get_json()
    assert separated['phi']['homeomorphism'] is True
    unseparated = client.post('/api/spectrum', json=split_doc).get_json()
    assert 'phi' not in unseparated
    assert 'T-measurable' in unseparated['phi_skipped']


def test_iso(client, split_doc, pair_doc):
    response = client.post('/api/iso', json={'first': split_doc, 'second': pair_doc})
    assert response.status_code == 200
    data = response.get_json()
    assert data['rings'] == 'YES'
    assert data['spaces'] == 'NO'
    assert data['note'] == 'first space not T-measurable'
    assert client.post('/api/iso', json={'first': split_doc}).status_code == 400


def test_upload_saves_report(client, split_doc, tmp_path):
    body = json.dumps(split_doc).encode('utf-8')
    response = client.post('/api/upload', data={'file': (io.BytesIO(body), 'split.json'), 'seed': '5'},
                           content_type='multipart/form-data')
    assert response.status_code == 200
    data = response.get_json()
    assert data['seed'] == 5
    assert data['saved_as'].startswith('split-')
    saved = json.loads((tmp_path / 'reports' / data['saved_as']).read_text(encoding='utf-8'))
    assert saved['counts'] == data['counts']


def test_upload_rejects_other_extensions(client):
    response = client.post('/api/upload', data={'file': (io.BytesIO(b'{}'), 'space.txt')},
                           content_type='multipart/form-data')
    assert response.status_code == 400


def test_upload_needs_a_file(client):
    response = client.post('/api/upload', data={}, content_type='multipart/form-data')
    assert response.status_code == 400


def test_upload_reports_document_errors(client):
    response = client.post('/api/upload', data={'file': (io.BytesIO(b'{"points": ['), 'broken.json')},
                           content_type='multipart/form-data')
    assert response.status_code == 400
    assert response.get_json()['kind'] == 'DocumentError'
