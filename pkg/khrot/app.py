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
"""

__all__ = ['Processor']
__author__ = "khrot contributors"

import logging

from collections import defaultdict
from typing import Dict

from khrot.components.benchmark import benchmark
from khrot.components.config import get_config
from khrot.components.helpers import recursive_update


logger = logging.getLogger()


class Processor:
    """
    Core Processor class template. The `Calculator` that drives the homology pipeline inherits from it,
    and so can any other long running job that wants configuration and statistics handled the same way.

    The config is assembled from `DEFAULT_CONFIG`, then the named config `<config_name>_config`
    from the config source, then the `custom_config` passed at construction.
    """

    DEFAULT_CONFIG = {}
    config_name = None


    def __init__(self, custom_config: Dict = None, **kwargs):
        self.init_config(custom_config=custom_config)
        logger.info(f"Final {self.__class__.__name__} processor config: {self.config}")

        self.stats = defaultdict(int)


    def init_config(self, custom_config: Dict = None):
        """
        By default tries to initialize config from DEFAULT_CONFIG or as an empty dictionary.
        After that, the named config of this processor recursively updates the existing one.
        The last step is to update config recursively with the passed custom_config.

        Overwrite this method if custom logic of recursive updates in configs is required

        :param Dict custom_config: dict with custom configurations
        """

        self.config = self.DEFAULT_CONFIG or {}
        name = self.config_name or self.__class__.__name__.lower()
        self.config = recursive_update(self.config, self.get_config(f"{name}_config") or {})
        self.config = recursive_update(self.config, custom_config or {})


    def __call__(self, event):
        """
        Call the Processor.
        You can either call super() at the beginning of your child function or completely overwrite this function.
        """

        self.stats['processor_calls'] += 1


    @staticmethod
    def get_config(name):
        """
        Returns config by name from the configured source. Override this to provide your config handling method.

        :param name: Name of the config
        :rtype: dict
        """

        return get_config(name)


    def get_stats(self) -> Dict:
        """
        Return statistics of operations performed by current instance of the Class.

        :rtype:     dict
        :return:    Statistics counter of current Processor instance.
        """

        return dict(self.stats)


    def reset_stats(self):
        """
        Cleans statistics.
        """

        self.stats = defaultdict(int)


    @benchmark
    def die(self, message="Unknown Failure"):
        """
        Logs the failure with the active exception (if any) and stops the process with exit code 1.
        Raises SystemExit, so a generic `except Exception` in the caller does not swallow it.
        """

        logger.exception(f"{self.__class__.__name__} died: {message}")
        raise SystemExit(1)
