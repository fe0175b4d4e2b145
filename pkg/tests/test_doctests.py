"""The usage examples embedded in docstrings stay correct."""

import doctest

from cpsums import extensions, fgab


def test_fgab_doctests():
    results = doctest.testmod(fgab, verbose=False)
    assert results.attempted > 0
    assert results.failed == 0


def test_extensions_doctests():
    results = doctest.testmod(extensions, verbose=False)
    assert results.attempted > 0
    assert results.failed == 0
