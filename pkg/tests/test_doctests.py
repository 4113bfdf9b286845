"""Keep the docstring examples honest."""

import doctest

import weylkit.expressions
import weylkit.pbw
import weylkit.shriek


def test_module_doctests():
    for mod in (weylkit.expressions, weylkit.pbw, weylkit.shriek):
        result = doctest.testmod(mod)
        assert result.failed == 0, mod.__name__
