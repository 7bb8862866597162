import json

import pytest

from xmodcat import corpus
from xmodcat.document import dump_document
from xmodcat.modularization import verify_modularization
from xmodcat.report import data_report, invariant_suite, to_json

from tests.test_corpus import BUILTIN


@pytest.mark.parametrize("name", BUILTIN)
def test_invariant_suite_passes_on_corpus(name):
    x = corpus.lookup(name)
    results = invariant_suite(x)
    failed = [(result.name, result.detail) for result in results if not result.passed]
    assert not failed

    report = verify_modularization(x)
    assert report.passed
    assert report.match.matched
    assert all(report.covered)


def test_data_report_is_reproducible(d_s3):
    text = dump_document(d_s3, name="d_s3")
    first = to_json(data_report(d_s3, text, seed=0))
    assert to_json(data_report(d_s3, text, seed=0)) == first

    payload = json.loads(first)
    assert payload["seed"] == 0
    assert payload["tolerance"] == 1e-8
    assert [simple["dim"] for simple in payload["simples"]] == [1, 1, 2, 3, 3, 2, 2, 2]
    assert payload["gx"]["order"] == 1
    assert all(check["passed"] for check in payload["verification"])
