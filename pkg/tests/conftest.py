"""Shared fixtures."""

import pytest
from click.testing import CliRunner

from koszul import create_context
from koszul.models.complex import Window
from koszul.services.cohomology_service import CohomologyService
from koszul.services.operator_service import OperatorService
from koszul.services.presentation_service import PresentationService


@pytest.fixture(scope='session')
def context():
    return create_context('testing')


@pytest.fixture(scope='session')
def bp():
    """BP presentation on y1..y6."""
    return PresentationService.bp_preset(6)


@pytest.fixture(scope='session')
def element(bp):
    """Parse monomial text like 'v0 R7 y1 + R9 y2' over the BP generators."""
    def parse(text):
        return OperatorService.parse_element(text, bp.generator_map)
    return parse


@pytest.fixture(scope='session')
def monomial(bp):
    def parse(text):
        return OperatorService.parse_monomial(text, bp.generator_map)
    return parse


@pytest.fixture(scope='session')
def report_minus_one():
    return CohomologyService.compute(Window(-40, -2, 5, -1))


@pytest.fixture(scope='session')
def report_zero():
    return CohomologyService.compute(Window(-24, -2, 4, 0))


@pytest.fixture(scope='session')
def report_one():
    return CohomologyService.compute(Window(-17, -7, 5, 1))


@pytest.fixture(scope='session')
def report_two():
    return CohomologyService.compute(Window(-30, -22, 3, 2))


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)
