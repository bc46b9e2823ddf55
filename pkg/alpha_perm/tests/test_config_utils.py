import json
import logging

import pytest

from alpha_perm.config import settings
from alpha_perm.schemas import AlphaPermanentResult, Method, RunResult, SuiteReport, parse_complex
from alpha_perm.utils import get_logger, setup_logging
from alpha_perm.utils.error_handling import (
    AlphaPermError,
    ConfigurationError,
    SizeLimitError,
    ValidationError,
    check_size,
    handle_exceptions
)
from alpha_perm.utils.numerics import as_negative_integer, is_close, relative_error


def test_yaml_config_flattening(tmp_path):
    """Test that YAML sections are flattened into upper-case keys"""
    path = tmp_path / 'settings.yaml'
    path.write_text('guards:\n  max_permutation_n: 9\nrel_tol: 1.0e-6\n')
    config = settings._load_yaml_config(str(path))
    assert config == {'MAX_PERMUTATION_N': 9, 'REL_TOL': 1.0e-6}
    assert settings._load_yaml_config('') == {}


def test_yaml_config_errors(tmp_path):
    """Test missing and malformed configuration files"""
    with pytest.raises(ConfigurationError):
        settings._load_yaml_config(str(tmp_path / 'missing.yaml'))

    not_a_dict = tmp_path / 'list.yaml'
    not_a_dict.write_text('- 1\n- 2\n')
    with pytest.raises(ConfigurationError):
        settings._load_yaml_config(str(not_a_dict))


def test_environment_overrides(monkeypatch):
    """Test typed reads of ALPHA_PERM_ environment variables"""
    monkeypatch.setenv('ALPHA_PERM_MAX_MOBIUS_N', '4')
    assert settings._get_int('MAX_MOBIUS_N', 6) == 4
    monkeypatch.setenv('ALPHA_PERM_REL_TOL', 'mucho')
    with pytest.raises(ConfigurationError):
        settings._get_float('REL_TOL', 1e-8)


def test_validate_config(monkeypatch):
    """Test that non-positive guards are rejected"""
    settings.validate_config()
    monkeypatch.setattr(settings, 'MAX_PARTITION_N', 0)
    with pytest.raises(ConfigurationError):
        settings.validate_config()


def test_setup_logging(tmp_path):
    """Test console and file handlers"""
    log_file = tmp_path / 'logs' / 'alpha_perm.log'
    root = setup_logging(log_level='DEBUG', log_file=str(log_file))
    assert root.level == logging.DEBUG
    assert len(root.handlers) == 2
    assert log_file.parent.exists()

    root = setup_logging(log_level='WARNING', log_file='')
    assert len(root.handlers) == 1

    with pytest.raises(ValueError):
        setup_logging(log_level='RUIDOSO')


def test_get_logger_binds_context():
    """Test that bound loggers carry their context"""
    logger = get_logger(__name__, suite='thm1')
    assert logger.bind(n=3) is not None


def test_check_size():
    """Test the enumeration guard"""
    check_size(5, 5, 'op')
    with pytest.raises(SizeLimitError) as exc_info:
        check_size(6, 5, 'op')
    assert exc_info.value.exit_code == 3


def test_handle_exceptions_exit_codes():
    """Test that handled errors exit with their family code"""
    @handle_exceptions()
    def invalid():
        raise ValidationError("entrada inválida")

    @handle_exceptions()
    def unexpected():
        raise KeyError('x')

    @handle_exceptions(exit_on_error=False)
    def reraised():
        raise AlphaPermError("fallo")

    with pytest.raises(SystemExit) as exc_info:
        invalid()
    assert exc_info.value.code == 2
    with pytest.raises(KeyError):
        unexpected()
    with pytest.raises(AlphaPermError):
        reraised()


def test_numerics():
    """Test relative error, closeness and negative integer detection"""
    assert relative_error(1.0 + 1e-9, 1.0) == pytest.approx(1e-9)
    assert relative_error(1e-12, 0.0) == pytest.approx(1e-2)
    assert is_close(1.0, 1.0 + 1e-10)
    assert not is_close(1.0, 1.001)
    assert is_close(0.0, 1e-11)

    assert as_negative_integer(-3) == 3
    assert as_negative_integer(complex(-2, 1e-14)) == 2
    assert as_negative_integer(-2.5) is None
    assert as_negative_integer(0) is None
    assert as_negative_integer(complex(-2, 1e-6)) is None


def test_parse_complex():
    """Test parsing of scalar arguments"""
    assert parse_complex('2') == 2
    assert parse_complex('-1.5, 2') == complex(-1.5, 2)
    assert parse_complex(3j) == 3j
    for bad in ('a', '1,2,3', 'inf', float('nan'), None):
        with pytest.raises(ValidationError):
            parse_complex(bad)


def test_run_result_json_is_deterministic():
    """Test sorted, digest-stamped JSON serialization"""
    result = AlphaPermanentResult(value='1,2', method=Method.COFACTOR, terms_evaluated=6)
    report = SuiteReport(suite='thm1', n=3, trials=1, seed=0, tolerance=1e-8)
    run = RunResult(
        command='exact',
        inputs={'b': 1, 'a': 2},
        outputs={'value': result.value, 'method': result.method, 'report': report},
    )
    text = run.to_json()
    assert text == RunResult(command='exact', inputs={'a': 2, 'b': 1}, outputs=run.outputs).to_json()

    data = json.loads(text)
    assert data['outputs']['value'] == [1.0, 2.0]
    assert data['outputs']['method'] == 'cofactor'
    assert data['outputs']['report']['checks'] == 0
    assert data['errors'] == []
    assert report.passed
