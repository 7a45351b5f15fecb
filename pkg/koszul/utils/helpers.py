"""Helper functions for common operations."""

import logging
import time
from functools import wraps

from koszul.utils.constants import ENGINE_VERSION


def create_result(success=True, message="", data=None, errors=None):
    """Create a standardized result envelope."""
    result = {
        'success': success,
        'message': message,
        'engine_version': ENGINE_VERSION,
    }

    if data is not None:
        result['data'] = data

    if errors is not None:
        result['errors'] = errors

    return result


def success_result(message="Success", data=None):
    """Create success result."""
    return create_result(True, message, data, None)


def error_result(message="Error", errors=None):
    """Create error result."""
    return create_result(False, message, None, errors)


def log_timing(func):
    """Decorator logging the wall-clock time of a service call."""
    logger = logging.getLogger(func.__module__)

    @wraps(func)
    def wrapper(*args, **kwargs):
        started = time.perf_counter()
        result = func(*args, **kwargs)
        logger.info(f"{func.__qualname__} finished in {time.perf_counter() - started:.2f}s")
        return result
    return wrapper


def cell_key(cell):
    """Render an (x, s) cell as a stable string key."""
    return f'{cell[0]},{cell[1]}'


def parse_int_list(text):
    """Parse '8,5' or '8 5' into a list of ints."""
    parts = [p for p in text.replace(',', ' ').split() if p]
    return [int(p) for p in parts]
