"""
..  hidden-code-block:: text
    :label: View Licence Agreement <br>

    khrot - Khovanov homology with rotation numbers

    The MIT License (MIT)
    Copyright (C) 2026  khrot contributors

    Permission is hereby granted, free of charge, to any person obtaining a copy
    of this software and associated documentation files (the "Software"), to deal
    in the Software without restriction, including without limitation the rights
    to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
    copies of the Software, and to permit persons to whom the Software is
    furnished to do so, subject to the following conditions:

    The above copyright notice and this permission notice shall be included in all
    copies or substantial portions of the Software.

    THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
    IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
    FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
    AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
    LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
    OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
    SOFTWARE.

Config manager for processors. Configs are named JSON documents; a processor asks for `<name>_config`.

There are two sources:

- `File` reads a JSON file whose path is in the `KHROT_CONFIG` environment variable.
  Every top level key of that file is one named config.
- `Env` reads a JSON document from the environment variable `KHROT_CONFIG_<NAME>` (upper-cased name).

Use `ConfigSource` to get a strategy over one or several sources; the first one is the default.
Missing configs are empty dictionaries, broken JSON is an error.
"""

__all__ = ['ConfigSource', 'FileConfig', 'EnvConfig', 'get_config']
__author__ = "khrot contributors"
__version__ = "1.0"

import json
import logging
import os

from khrot.components.exceptions import ConfigException


logger = logging.getLogger()

CONFIG_PATH_VARIABLE = 'KHROT_CONFIG'
CONFIG_ENV_PREFIX = 'KHROT_CONFIG_'


class FileConfig:
    """
    Named configs from a single JSON file. The file is read on every call, it is small and rarely used.
    """

    def __init__(self, path: str = None, **kwargs):
        self.path = path


    def _load(self) -> dict:
        path = self.path or os.environ.get(CONFIG_PATH_VARIABLE)
        if not path:
            return {}

        try:
            with open(path) as f:
                data = json.load(f)
        except FileNotFoundError:
            logger.warning(f"Config file {path} does not exist, using defaults")
            return {}
        except json.JSONDecodeError as e:
            raise ConfigException(f"Config file {path} is not valid JSON: {e}")

        if not isinstance(data, dict):
            raise ConfigException(f"Config file {path} must contain a JSON object, got {type(data).__name__}")
        return data


    def get_config(self, name: str) -> dict:
        """
        Retrieve the config `name` from the file.

        :param str name:    Name of config to extract
        :rtype:             dict
        :return:            Config of some processor or an empty dict.
        """

        config = self._load().get(name) or {}
        if not isinstance(config, dict):
            raise ConfigException(f"Config {name} must be a JSON object")
        return config


class EnvConfig:
    """
    Named configs from environment variables, one JSON document per variable.
    """

    def __init__(self, prefix: str = CONFIG_ENV_PREFIX, **kwargs):
        self.prefix = prefix


    def get_config(self, name: str) -> dict:
        raw = os.environ.get(f"{self.prefix}{name.upper()}")
        if not raw:
            return {}

        try:
            config = json.loads(raw)
        except json.JSONDecodeError as e:
            raise ConfigException(f"Environment config {name} is not valid JSON: {e}")

        if not isinstance(config, dict):
            raise ConfigException(f"Environment config {name} must be a JSON object")
        return config


class ConfigSource:
    """
    A strategy adapter for config. Returns config from the selected config source.

    :param str sources:     Config sources to initialize. Supported: `File` (default) and `Env`.
                            Could be both, comma-separated. The first one then becomes default.

    :param dict config:     Custom configurations for sources, as `file_config`, `env_config`.
    """

    SUPPORTED_SOURCES = ('File', 'Env')


    def __init__(self, sources=None, config=None):

        if not sources:
            sources = ['File']

        elif isinstance(sources, str):
            sources = [x.strip() for x in sources.split(',')]

        else:
            raise ConfigException(f"Unsupported sources: {sources}. Must be a csv string of {self.SUPPORTED_SOURCES}")

        if not all(x in self.SUPPORTED_SOURCES for x in sources):
            raise ConfigException(f"Unsupported sources: {sources}. Must be a csv string of {self.SUPPORTED_SOURCES}")

        self.config = {}
        self.config.update(config or {})

        self.sources = []
        for source in sources:
            cfg = self.config.get(f"{source.lower()}_config", {})
            instance = globals()[f"{source}Config"](**cfg)
            setattr(self, f"{source.lower()}_config", instance)
            self.sources.append(instance)

        self.default_source = self.sources[0]
        logger.debug(f"Initialized default_source = {sources[0].lower()}_config")


    def get_config(self, name: str) -> dict:
        return self.default_source.get_config(name)


__config_source = ConfigSource(sources=os.environ.get('KHROT_CONFIG_SOURCES') or None)

get_config = __config_source.get_config
