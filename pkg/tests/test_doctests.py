"""Run every docstring example; `python -m doctest` cannot resolve the
package-relative imports, so the modules are imported and handed to doctest
directly."""

import doctest

import pytest

import permact
from permact import (
    action,
    cli,
    harness,
    limits,
    mahonian,
    patterns,
    polynomials,
    posets,
    stacksort,
    trees,
    words,
)

MODULES = [
    permact,
    words,
    polynomials,
    action,
    stacksort,
    patterns,
    trees,
    mahonian,
    posets,
    harness,
    limits,
    cli,
]


@pytest.mark.parametrize("module", MODULES, ids=lambda m: m.__name__)
def test_docstring_examples(module):
    failed, attempted = doctest.testmod(module)
    assert failed == 0
    del attempted
