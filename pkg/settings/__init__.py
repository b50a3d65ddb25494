"""
Toolkit settings.

Basic usage:
    ```python
    from settings import get_toolkit_config

    config = get_toolkit_config()
    print(config.max_dim, config.violation_prefix)
    ```
"""

from .config import ToolkitConfig, get_toolkit_config, reset_toolkit_config, LOG_LEVELS, REPORT_FORMATS

__all__ = [
    'ToolkitConfig',
    'get_toolkit_config',
    'reset_toolkit_config',
    'LOG_LEVELS',
    'REPORT_FORMATS',
]

__version__ = "1.0.0"
__author__ = "Matthew Sheldon"
__description__ = "Environment-backed configuration for the algebra toolkit"
