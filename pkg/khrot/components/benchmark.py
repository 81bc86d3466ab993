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

__all__ = ['benchmark']
__author__ = "khrot contributors"
__version__ = "1.0"

import time

from functools import wraps


def benchmark(fn):
    """
    Decorator for methods of classes that keep a `self.stats` counter (every `Processor` does).
    Accumulates the wall time of the decorated method in `time_<name>` and the number of calls in `calls_<name>`.

    | `fn` - the method being decorated. The class is not yet initialized.
    | `self` - the instance, passed at call time.
    """


    @wraps(fn)
    def _timing_and_call_counter(self, *a, **kw):
        started = time.perf_counter()
        try:
            return fn(self, *a, **kw)
        finally:
            self.stats[f"time_{fn.__name__}"] += time.perf_counter() - started
            self.stats[f"calls_{fn.__name__}"] += 1


    return _timing_and_call_counter
