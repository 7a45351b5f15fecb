"""Koszul complexes for obstruction groups of BP<n> at p = 2: context factory and logging setup."""

import logging
import os
from dataclasses import dataclass, field

from config import config

logger = logging.getLogger(__name__)


@dataclass
class EngineContext:
    """Resolved settings for one run of the engine."""

    name: str
    settings: dict = field(default_factory=dict)

    def get(self, key, default=None):
        return self.settings.get(key, default)

    @property
    def convention(self):
        from koszul.services.operator_service import Convention

        return Convention(self.settings['KOSZUL_CONVENTION'])

    def window(self, n=None, x_min=None, x_max=None, s_max=None, weight_max=None):
        """Window from explicit values, falling back to the configured defaults."""
        from koszul.models.complex import Window

        return Window(
            self.settings['KOSZUL_X_MIN'] if x_min is None else x_min,
            self.settings['KOSZUL_X_MAX'] if x_max is None else x_max,
            self.settings['KOSZUL_S_MAX'] if s_max is None else s_max,
            self.settings['KOSZUL_N'] if n is None else n,
            self.settings['KOSZUL_WEIGHT_MAX'] if weight_max is None else weight_max,
        )

    def module(self, source=None, min_degree=None):
        from koszul.services.presentation_service import PresentationService

        return PresentationService.load(source or self.settings['KOSZUL_MODULE'], min_degree)


def configure_logging(level='INFO', fmt=None):
    """Configure root logging once per process."""
    logging.basicConfig(level=getattr(logging, level.upper(), logging.INFO), format=fmt, force=True)


def create_context(config_name=None):
    """Context factory."""

    if config_name is None:
        config_name = os.environ.get('KOSZUL_CONFIG_NAME', 'default')

    config_class = config[config_name]
    settings = {key: getattr(config_class, key) for key in dir(config_class) if key.isupper()}
    context = EngineContext(config_name, settings)
    config_class.init_context(context)

    configure_logging(settings['LOG_LEVEL'], settings['LOG_FORMAT'])

    if settings.get('ADEM_CACHE_SIZE') is not None:
        from koszul.services.operator_service import OperatorService

        OperatorService.resize_caches(settings['ADEM_CACHE_SIZE'])

    logger.debug(f"Created context '{config_name}'")
    return context
