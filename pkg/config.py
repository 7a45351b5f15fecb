"""Engine configuration."""

import os
from dotenv import load_dotenv

load_dotenv()


def _optional_int(name):
    value = os.environ.get(name)
    return int(value) if value not in (None, '') else None


class Config:
    """Base configuration class."""

    # Logging
    LOG_LEVEL = os.environ.get('LOG_LEVEL') or 'INFO'
    LOG_FORMAT = os.environ.get('LOG_FORMAT') or '%(asctime)s %(levelname)s %(name)s: %(message)s'

    # Default window and level
    KOSZUL_N = int(os.environ.get('KOSZUL_N') or 1)
    KOSZUL_X_MIN = int(os.environ.get('KOSZUL_X_MIN') or -40)
    KOSZUL_X_MAX = int(os.environ.get('KOSZUL_X_MAX') or -2)
    KOSZUL_S_MAX = int(os.environ.get('KOSZUL_S_MAX') or 5)
    KOSZUL_WEIGHT_MAX = _optional_int('KOSZUL_WEIGHT_MAX')

    # Presentation and exponent convention
    KOSZUL_MODULE = os.environ.get('KOSZUL_MODULE') or 'bp'
    KOSZUL_CONVENTION = os.environ.get('KOSZUL_CONVENTION') or 'degree'

    # Charts
    CHART_CELL_SIZE = int(os.environ.get('CHART_CELL_SIZE') or 40)

    # Rewriting caches, unbounded when unset
    ADEM_CACHE_SIZE = _optional_int('ADEM_CACHE_SIZE')

    @staticmethod
    def init_context(context):
        """Initialize context with this config."""
        pass


class DevelopmentConfig(Config):
    """Development configuration."""

    LOG_LEVEL = os.environ.get('LOG_LEVEL') or 'DEBUG'


class TestingConfig(Config):
    """Testing configuration: small windows, quiet logs."""

    TESTING = True
    LOG_LEVEL = 'WARNING'
    KOSZUL_X_MIN = -16
    KOSZUL_X_MAX = -2
    KOSZUL_S_MAX = 3
    KOSZUL_WEIGHT_MAX = None


config = {
    'default': Config,
    'development': DevelopmentConfig,
    'testing': TestingConfig,
}
