"""Tests for the context factory, configuration, helpers and validators."""

import json
import logging

import pytest

from koszul import create_context
from koszul.models.complex import Window
from koszul.services import operator_service
from koszul.services.operator_service import Convention, OperatorService
from koszul.utils.helpers import cell_key, create_result, error_result, log_timing, parse_int_list, success_result
from koszul.utils.validators import validate_window_bounds


class TestContext:
    def test_testing_config(self, context):
        assert context.name == 'testing'
        assert context.get('TESTING') is True
        assert context.convention is Convention.DEGREE
        assert context.window() == Window(-16, -2, 3, 1)

    def test_window_overrides(self, context):
        w = context.window(n=0, x_min=-9, weight_max=2)
        assert (w.x_min, w.x_max, w.s_max, w.n, w.weight_max) == (-9, -2, 3, 0, 2)
        assert json.loads(w.to_json())['weight_max'] == 2

    def test_module_preset(self, context):
        assert [g.id for g in context.module('bp', -14).generators] == ['y1', 'y2', 'y3']

    def test_environment_selects_config(self, monkeypatch):
        monkeypatch.setenv('KOSZUL_CONFIG_NAME', 'development')
        assert create_context().name == 'development'

    def test_cache_bound(self, monkeypatch):
        from config import Config

        monkeypatch.setattr(Config, 'ADEM_CACHE_SIZE', 128)
        create_context('testing')
        assert OperatorService.adem_reduce_R.cache_info().maxsize == 128
        assert OperatorService.adem_reduce_R(8, 5) == frozenset([(9, 4)])
        assert operator_service.adem_reduce_R is OperatorService.adem_reduce_R
        assert operator_service.adem_reduce_R.cache_info().maxsize == 128
        monkeypatch.setattr(Config, 'ADEM_CACHE_SIZE', None)
        OperatorService.resize_caches(None)


class TestHelpers:
    def test_result_envelopes(self):
        assert create_result(True, 'done')['engine_version']
        assert success_result('ok', {'a': 1})['data'] == {'a': 1}
        failed = error_result('bad', ['x'])
        assert failed['success'] is False
        assert failed['errors'] == ['x']
        assert 'data' not in failed

    def test_parse_int_list(self):
        assert parse_int_list('8,5') == [8, 5]
        assert parse_int_list(' 16 8, 4 ') == [16, 8, 4]
        with pytest.raises(ValueError):
            parse_int_list('8,a')

    def test_cell_key(self):
        assert cell_key((-9, 2)) == '-9,2'

    def test_log_timing(self, caplog):
        @log_timing
        def work():
            return 7

        with caplog.at_level(logging.INFO):
            assert work() == 7
        assert 'finished in' in caplog.text


class TestValidators:
    def test_window_bounds(self):
        assert validate_window_bounds(-10, -2, 3, 0) == (True, [])
        valid, errors = validate_window_bounds(-2, -10, -1, -2, weight_max=-1)
        assert not valid
        assert len(errors) == 4
